"""
Salida de los comandos: formato por defecto, JSON determinista, DOT y tablas.
"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import click
from pydantic import BaseModel, ValidationError

from core.exceptions import UsageError
from models.graph import MultiGraph
from schemas.commands import CommandConfig, OutputFormat

FORMAT_CHOICE = click.Choice([f.value for f in OutputFormat])


def resolve_format(fmt: Optional[str]) -> OutputFormat:
    """text si stdout es una terminal, json si está redirigida."""
    if fmt:
        return OutputFormat(fmt)
    return OutputFormat.TEXT if click.get_text_stream("stdout").isatty() else OutputFormat.JSON


def validation_details(e: ValidationError) -> dict:
    return {"errors": [{"field": ".".join(str(x) for x in err["loc"]), "message": err["msg"]} for err in e.errors()]}


def build_config(**kwargs) -> CommandConfig:
    try:
        return CommandConfig(**kwargs)
    except ValidationError as e:
        raise UsageError("Argumentos inválidos", details=validation_details(e))


def require_format(config: CommandConfig, allowed: Iterable[OutputFormat]) -> None:
    allowed = list(allowed)
    if config.format not in allowed:
        raise UsageError(
            f"{config.command} no admite --format {config.format.value}",
            details={"allowed": [f.value for f in allowed]},
        )


def to_json(payload: Any) -> str:
    """Claves ordenadas, sin marcas de tiempo; idéntico byte a byte entre corridas."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_dot(G: MultiGraph, name: str = "G") -> str:
    """Una línea por arista geométrica; los lazos como x -- x."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {x};" for x in G.vertices)
    for e in G.edges:
        if e.index < e.partner:
            lines.append(f"  {e.tail} -- {e.head};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buffer.getvalue()


def to_text_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [["-" if v is None else str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    out = []
    for k, row in enumerate(cells):
        out.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"


def write_output(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)
