"""
verify: reporte de verificación para (N, p).
"""
import click

from commands.options import data_dir_option, format_option, level_option, method_option, out_option, prime_option
from commands.output import build_config, require_format, resolve_format, to_json, to_text_table, write_output
from core.correspondence_service import verify_theorems
from core.exceptions import EXIT_CLAIM_FAILURE
from schemas.commands import OutputFormat
from schemas.reports import VerificationReport


def report_text(report: VerificationReport) -> str:
    rows = [(c.id, c.status.value, c.computed, c.note) for c in report.claims]
    text = f"N = {report.N}, p = {report.p}\n" + to_text_table(("claim", "status", "testigo", "nota"), rows)
    if report.discrepancies:
        text += "\nDiscrepancias con los datos tabulados:\n"
        text += to_text_table(
            ("claim", "calculado", "tabulado", "nota"),
            [(d.claim, d.computed, d.expected, d.note) for d in report.discrepancies],
        )
    return text


@click.command("verify")
@level_option
@prime_option
@method_option
@data_dir_option
@format_option
@out_option
@click.pass_context
def verify(ctx, N, p, method, data_dir, fmt, out):
    """Verifica las identidades para (N, p); sale con 2 si algún enunciado falla."""
    config = build_config(
        command="verify", N=N, p=p, method=method, data_dir=data_dir, format=resolve_format(fmt), out=out
    )
    require_format(config, (OutputFormat.JSON, OutputFormat.TEXT))
    report = verify_theorems(config.N, config.p, config.method.value, config.data_dir)
    write_output(to_json(report) if config.format == OutputFormat.JSON else report_text(report), config.out)
    if not report.passed:
        ctx.exit(EXIT_CLAIM_FAILURE)
