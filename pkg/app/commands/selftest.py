"""
selftest: corpus de propiedades y matriz de aceptación en una sola llamada.
"""
import click

from commands.options import data_dir_option, format_option, out_option, workers_option
from commands.output import build_config, require_format, resolve_format, to_json, to_text_table, write_output
from core.exceptions import EXIT_CLAIM_FAILURE
from core.selftest import run_selftest
from schemas.commands import OutputFormat


@click.command("selftest")
@click.option("--seed", type=int, default=None, help="Semilla del corpus (SELFTEST_SEED)")
@click.option("--corpus-size", type=int, default=None, help="Grafos y matrices aleatorios (SELFTEST_CORPUS_SIZE)")
@click.option("--p-max", "p_max", type=int, default=29, show_default=True, help="Cota del barrido de sumas de fila")
@data_dir_option
@workers_option
@format_option
@out_option
@click.pass_context
def selftest(ctx, seed, corpus_size, p_max, data_dir, workers, fmt, out):
    """Corre el selftest completo; sale con 2 si algo falla."""
    config = build_config(command="selftest", p_max=p_max, data_dir=data_dir, format=resolve_format(fmt), out=out)
    require_format(config, (OutputFormat.JSON, OutputFormat.TEXT))
    report = run_selftest(seed, corpus_size, config.p_max, config.data_dir, workers)

    if config.format == OutputFormat.JSON:
        text = to_json(report)
    else:
        rows = [(c.id, c.status.value, c.note) for c in report.checks]
        rows += [(f"verify {r.N} {r.p}", "pass" if r.passed else "fail", "") for r in report.acceptance]
        text = f"semilla {report.seed}, corpus {report.corpus_size}\n" + to_text_table(("check", "status", "nota"), rows)
    write_output(text, config.out)
    if not report.passed:
        ctx.exit(EXIT_CLAIM_FAILURE)
