"""
table: una fila por primo p con Σ a_p, μ_N(p), divisibilidad y datos tabulados.
"""
import click

from commands.options import (
    data_dir_option,
    format_option,
    level_option,
    method_option,
    out_option,
    workers_option,
)
from commands.output import (
    build_config,
    require_format,
    resolve_format,
    to_csv,
    to_json,
    to_text_table,
    write_output,
)
from core.correspondence_service import primes_up_to, table_report
from core.exceptions import EXIT_CLAIM_FAILURE
from schemas.commands import OutputFormat
from schemas.reports import ClaimStatus

HEADERS = ("p", "status", "sum_a_p", "mu", "n_divides_mu", "table_sum", "table_mu", "table_match", "note")


@click.command("table")
@level_option
@click.option("--p-max", "p_max", type=int, required=True, help="Último primo de la tabla")
@method_option
@data_dir_option
@format_option
@out_option
@workers_option
@click.pass_context
def table(ctx, N, p_max, method, data_dir, fmt, out, workers):
    """Reproduce la tabla de coeficientes para los primos p <= p-max."""
    config = build_config(
        command="table", N=N, p_max=p_max, method=method, data_dir=data_dir, format=resolve_format(fmt), out=out
    )
    require_format(config, (OutputFormat.JSON, OutputFormat.CSV, OutputFormat.TEXT))
    report = table_report(
        config.N, primes_up_to(config.p_max, exclude=(config.N,)), config.method.value, config.data_dir, workers
    )
    rows = [
        (r.p, r.status.value, r.trace_sum, r.mu, r.divisible, r.fixture_sum, r.fixture_mu, r.fixture_match, r.note)
        for r in report.rows
    ]
    if config.format == OutputFormat.JSON:
        text = to_json(report)
    elif config.format == OutputFormat.CSV:
        text = to_csv(HEADERS, rows)
    else:
        text = f"N = {report.N}, n = {report.n}\n" + to_text_table(HEADERS, rows)
    write_output(text, config.out)
    if any(r.status == ClaimStatus.FAIL for r in report.rows):
        ctx.exit(EXIT_CLAIM_FAILURE)
