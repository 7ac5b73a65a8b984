"""
zeta: zeta de Ihara de un grafo leído de un archivo JSON.
"""
from pathlib import Path

import click
from pydantic import ValidationError

from commands.options import format_option, out_option
from commands.output import build_config, require_format, resolve_format, to_json, validation_details, write_output
from core.correspondence_service import ratfun_payload
from core.exceptions import UsageError
from core.graph_service import graph_from_adjacency
from core.zeta_service import ihara_zeta, ramanujan_certificate, zeta_via_hashimoto
from schemas.commands import OutputFormat
from schemas.graphs import GraphPayload
from schemas.zeta import IharaZetaPayload, RamanujanPayload, RationalFunctionPayload


def read_graph(path: str) -> GraphPayload:
    try:
        return GraphPayload.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except ValidationError as e:
        raise UsageError(f"{path} no es un grafo válido", details=validation_details(e))


@click.command("zeta")
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--oracle", type=click.Choice(["none", "hashimoto"]), default="none", help="Comparar con det(I - tT)")
@click.option("--ramanujan", is_flag=True, help="Incluir el certificado de Ramanujan")
@format_option
@out_option
def zeta(graph_file, oracle, ramanujan, fmt, out):
    """Z(G;t) por el determinante de tres términos."""
    config = build_config(command="zeta", format=resolve_format(fmt), out=out)
    require_format(config, (OutputFormat.JSON, OutputFormat.TEXT))
    payload = read_graph(graph_file)
    G = graph_from_adjacency(payload.adjacency)
    Z = ihara_zeta(G)

    agrees = (zeta_via_hashimoto(G) == Z.function) if oracle == "hashimoto" else None
    verdict = ramanujan_certificate(G) if ramanujan else None
    result = IharaZetaPayload(
        zeta=RationalFunctionPayload(**ratfun_payload(Z.function)),
        euler_characteristic=Z.euler_characteristic,
        geometric=True,
        hashimoto_agrees=agrees,
        ramanujan=RamanujanPayload(**verdict.__dict__) if verdict else None,
    )

    if config.format == OutputFormat.JSON:
        text = to_json(result)
    else:
        lines = [f"Z(G;t) = {Z.function}", f"χ(G) = {Z.euler_characteristic}"]
        if agrees is not None:
            lines.append(f"Hashimoto: {'coincide' if agrees else 'NO coincide'}")
        if verdict is not None:
            lines.append(f"Ramanujan: {verdict.is_ramanujan} (fuera de la ventana: {verdict.outside_count})")
        text = "\n".join(lines) + "\n"
    write_output(text, config.out)
