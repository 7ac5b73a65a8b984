"""
Script para sembrar el directorio de datos con Φ_p mod N.

Escribe un archivo phi_<p>_mod<N>.txt por cada par (N, p) pedido, de modo que
table y verify no tengan que generar en cada corrida.

Uso:
    python scripts/generate_modular_polynomials.py --N 37 --N 61 --N 73 --p-max 29
"""

import logging
import sys
from pathlib import Path

import click

# Agregar el directorio app al path para importar correctamente
app_dir = Path(__file__).parent.parent / "app"
sys.path.insert(0, str(app_dir))

from core.config import settings  # noqa: E402
from core.exceptions import BrandtZetaError  # noqa: E402
from core.modular_polynomials import generate_modular_polynomial_mod, write_modular_polynomial  # noqa: E402
from sympy import primerange  # noqa: E402

logger = logging.getLogger("generate_modular_polynomials")


@click.command()
@click.option("--N", "levels", type=int, multiple=True, required=True, help="Nivel primo (repetible)")
@click.option("--p-max", "p_max", type=int, default=29, show_default=True)
@click.option("--p-min", "p_min", type=int, default=5, show_default=True, help="Φ_2 y Φ_3 vienen sobre Z")
@click.option("--data-dir", type=click.Path(file_okay=False), default=None)
@click.option("--force", is_flag=True, help="Reescribir archivos existentes")
def main(levels, p_max, p_min, data_dir, force):
    """Genera y escribe Φ_p mod N para p en [p-min, p-max]."""
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(levelname)s %(message)s")
    directory = settings.data_dir(data_dir)
    written, failed = 0, 0

    for N in levels:
        for p in primerange(p_min, p_max + 1):
            p = int(p)
            if p == N:
                continue
            target = directory / f"phi_{p}_mod{N}.txt"
            if target.exists() and not force:
                logger.info(f"{target.name} ya existe, se omite")
                continue
            try:
                phi = generate_modular_polynomial_mod(p, N)
            except BrandtZetaError as e:
                logger.error(f"❌ Φ_{p} mod {N}: {e.message}")
                failed += 1
                continue
            path = write_modular_polynomial(phi, directory)
            logger.info(f"✅ {path}")
            written += 1

    click.echo(f"{written} archivo(s) escrito(s), {failed} error(es)")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
