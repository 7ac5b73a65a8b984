"""
emit: escribe B(p), G_N(p), su zeta de Ihara o la zeta de Hasse-Weil.
"""
import click

from commands.options import data_dir_option, format_option, level_option, method_option, out_option, prime_option
from commands.output import (
    build_config,
    require_format,
    resolve_format,
    to_dot,
    to_json,
    to_text_table,
    write_output,
)
from core.brandt_service import brandt_graph, brandt_matrix, to_payload_rows, validate_brandt
from core.correspondence_service import hasse_weil_zeta, point_count, ratfun_payload
from core.graph_service import adjacency_of
from core.zeta_service import formal_zeta, ihara_zeta
from schemas.brandt import BrandtPayload
from schemas.commands import OutputFormat
from schemas.graphs import GraphPayload
from schemas.reports import ClaimStatus
from schemas.zeta import HasseWeilPayload, IharaZetaPayload, RationalFunctionPayload

KINDS = ("brandt", "graph", "zeta", "hasse-weil")
POINT_COUNT_DEGREES = 3


def _brandt(B, config) -> str:
    payload = BrandtPayload(
        N=B.N,
        p=B.p,
        j_invariants=[list(j.coordinates) for j in B.j_invariants],
        matrix=to_payload_rows(B),
    )
    if config.format == OutputFormat.JSON:
        return to_json(payload)
    return to_text_table([f"j{i}" for i in range(B.size)], B.matrix)


def _graph(B, config) -> str:
    G = brandt_graph(B)
    if config.format == OutputFormat.DOT:
        return to_dot(G, name=f"G_{B.N}_{B.p}")
    A = adjacency_of(G).matrix
    return to_json(GraphPayload(vertices=G.vertex_count, adjacency=[list(r) for r in A]))


def _zeta(B, config) -> str:
    parity = validate_brandt(B).claim("brandt.even_diagonal")
    if parity.status == ClaimStatus.PASS:
        Z = ihara_zeta(brandt_graph(B))
    else:
        Z = formal_zeta(B.matrix, B.p + 1)
    if config.format == OutputFormat.TEXT:
        return f"Z(G_{B.N}({B.p}); t) = {Z.function}\n"
    return to_json(IharaZetaPayload(
        zeta=RationalFunctionPayload(**ratfun_payload(Z.function)),
        euler_characteristic=Z.euler_characteristic,
        geometric=Z.geometric,
    ))


def _hasse_weil(B, config) -> str:
    W = hasse_weil_zeta(B)
    if config.format == OutputFormat.TEXT:
        return f"W(X_0({B.N})/F_{B.p}; t) = {W.function}\n"
    return to_json(HasseWeilPayload(
        N=B.N,
        p=B.p,
        zeta=RationalFunctionPayload(**ratfun_payload(W.function)),
        numerator_degree=W.numerator.degree,
        point_counts=[point_count(W, r) for r in range(1, POINT_COUNT_DEGREES + 1)],
    ))


EMITTERS = {
    "brandt": (_brandt, (OutputFormat.JSON, OutputFormat.TEXT)),
    "graph": (_graph, (OutputFormat.JSON, OutputFormat.DOT)),
    "zeta": (_zeta, (OutputFormat.JSON, OutputFormat.TEXT)),
    "hasse-weil": (_hasse_weil, (OutputFormat.JSON, OutputFormat.TEXT)),
}


@click.command("emit")
@click.argument("kind", type=click.Choice(KINDS))
@level_option
@prime_option
@method_option
@data_dir_option
@format_option
@out_option
def emit(kind, N, p, method, data_dir, fmt, out):
    """Escribe KIND (brandt | graph | zeta | hasse-weil) para (N, p)."""
    config = build_config(
        command=f"emit {kind}", N=N, p=p, method=method, data_dir=data_dir, format=resolve_format(fmt), out=out
    )
    render, formats = EMITTERS[kind]
    if fmt is None and config.format not in formats:
        config.format = formats[0]
    require_format(config, formats)
    B = brandt_matrix(config.N, config.p, config.method.value, config.data_dir)
    write_output(render(B, config), config.out)
