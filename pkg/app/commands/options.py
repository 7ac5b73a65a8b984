"""
Opciones compartidas por los comandos.
"""
import click

from commands.output import FORMAT_CHOICE
from schemas.commands import BrandtMethod

level_option = click.option("--N", "N", type=int, required=True, help="Nivel primo N")
prime_option = click.option("--p", "p", type=int, required=True, help="Primo de Hecke p != N")
method_option = click.option(
    "--method",
    type=click.Choice([m.value for m in BrandtMethod]),
    default=BrandtMethod.MODPOLY.value,
    show_default=True,
    help="Ruta de construcción de B(p)",
)
data_dir_option = click.option(
    "--data-dir",
    type=click.Path(file_okay=False),
    default=None,
    help="Directorio de polinomios modulares (por encima de BRANDT_ZETA_DATA)",
)
format_option = click.option(
    "--format",
    "fmt",
    type=FORMAT_CHOICE,
    default=None,
    help="Por defecto: text en terminal, json si se redirige",
)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Archivo de salida")
workers_option = click.option("--workers", type=int, default=None, help="Hilos para el trabajo por primo")
