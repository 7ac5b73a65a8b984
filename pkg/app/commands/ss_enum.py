"""
ss-enum: j-invariantes supersingulares en característica N.
"""
import click

from commands.options import format_option, level_option, out_option
from commands.output import (
    build_config,
    require_format,
    resolve_format,
    to_csv,
    to_json,
    to_text_table,
    write_output,
)
from core.correspondence_service import eichler_mass_check
from core.supersingular_service import supersingular_locus
from schemas.brandt import LocusListing
from schemas.commands import OutputFormat


def locus_listing(N: int) -> LocusListing:
    locus = supersingular_locus(N)
    mass = eichler_mass_check(N)
    return LocusListing(
        N=N,
        count=locus.size,
        j_invariants=[list(j.coordinates) for j in locus.j_invariants],
        nonresidue=locus.field.nonresidue,
        mass_check=mass.status.value,
        expected=(N - 1) // 12 if (N - 1) % 12 == 0 else None,
    )


@click.command("ss-enum")
@level_option
@format_option
@out_option
def ss_enum(N, fmt, out):
    """Lista el lugar supersingular con el conteo y la fórmula de masa."""
    config = build_config(command="ss-enum", N=N, format=resolve_format(fmt), out=out)
    require_format(config, (OutputFormat.JSON, OutputFormat.TEXT, OutputFormat.CSV))
    listing = locus_listing(config.N)

    rows = [(i, a, b) for i, (a, b) in enumerate(listing.j_invariants)]
    if config.format == OutputFormat.JSON:
        text = to_json(listing)
    elif config.format == OutputFormat.CSV:
        text = to_csv(("index", "a", "b"), rows)
    else:
        text = (
            f"N = {listing.N}, g^2 = {listing.nonresidue}\n"
            f"j-invariantes: {listing.count} (masa: {listing.mass_check})\n"
            + to_text_table(("i", "a", "b"), rows)
        )
    write_output(text, config.out)
