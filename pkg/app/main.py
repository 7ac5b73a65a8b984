import json
import logging
import sys
from typing import Optional, Sequence

import click

from commands import COMMANDS
from core.config import settings
from core.exceptions import EXIT_OK, EXIT_USAGE, BrandtZetaError

logger = logging.getLogger(__name__)


def configure_logging(verbose: int = 0) -> None:
    """
    Logs a stderr; stdout queda solo para los payloads.

    --verbose baja a INFO, -vv a DEBUG; sin flag se usa settings.LOG_LEVEL.
    """
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


# ==================== CLI ====================

@click.group(help=settings.APP_DESCRIPTION)
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_TITLE)
@click.option("-v", "--verbose", count=True, help="Más detalle en stderr (-vv para debug)")
def cli(verbose):
    configure_logging(verbose)


for command in COMMANDS:
    cli.add_command(command)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ejecuta la CLI y devuelve el código de salida.

    Los BrandtZetaError se imprimen en stderr con el cuerpo uniforme de
    ``to_detail()``; los errores de uso de click salen con 1.
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
        return result if isinstance(result, int) else EXIT_OK
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.exceptions.Abort:
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except BrandtZetaError as e:
        logger.debug(f"{e.error}: {e.message}")
        click.echo(json.dumps(e.to_detail(), sort_keys=True, ensure_ascii=False), err=True)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(run())
