"""
brandt-validate: simetría, paridad de la diagonal y sumas de fila de B(p).

Las violaciones son hallazgos del reporte; el código de salida es 0 mientras
la matriz se pueda construir.
"""
import click

from commands.options import data_dir_option, format_option, level_option, method_option, out_option, prime_option
from commands.output import build_config, require_format, resolve_format, to_json, to_text_table, write_output
from core.brandt_service import brandt_matrix, validate_brandt
from schemas.commands import OutputFormat


@click.command("brandt-validate")
@level_option
@prime_option
@method_option
@data_dir_option
@format_option
@out_option
def brandt_validate(N, p, method, data_dir, fmt, out):
    """Reporte estructurado de las propiedades de B(p)."""
    config = build_config(
        command="brandt-validate", N=N, p=p, method=method, data_dir=data_dir, format=resolve_format(fmt), out=out
    )
    require_format(config, (OutputFormat.JSON, OutputFormat.TEXT))
    B = brandt_matrix(config.N, config.p, config.method.value, config.data_dir)
    report = validate_brandt(B)

    if config.format == OutputFormat.JSON:
        text = to_json(report)
    else:
        rows = [(c.id, c.status.value, c.note, c.computed) for c in report.claims]
        text = (
            f"B({B.p}) para N = {B.N} ({B.method})\n"
            + to_text_table([f"j{i}" for i in range(B.size)], B.matrix)
            + "\n"
            + to_text_table(("claim", "status", "nota", "testigo"), rows)
        )
    write_output(text, config.out)
