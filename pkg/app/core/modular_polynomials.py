"""
Polinomios modulares clásicos Φ_p(X, Y).

Formato de archivo (texto):

    # comentario opcional
    p 3
    modulus 37          (opcional: coeficientes ya reducidos)
    4 0 1
    3 3 -1
    ...

Cada línea del cuerpo es ``a b c`` con a >= b; la simetría c_{b,a} = c_{a,b}
queda implícita y los pares ausentes valen 0.

Búsqueda para (p, N): ``phi_<p>.txt`` en el directorio de datos, luego
``phi_<p>_mod<N>.txt`` (directorio de datos y de caché), luego generación
mod N a partir de la q-expansión de j si está habilitada.
"""
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy.ntheory import isprime

from core.config import settings
from core.exceptions import (
    CompositeModulus,
    InternalInconsistency,
    LevelMismatch,
    MissingModularPolynomial,
    ParseError,
    SymmetryViolation,
)
from core.finite_fields import FieldPolynomial, field_poly
from models.arithmetic import ModularPolynomial
from models.fields import FieldElement

logger = logging.getLogger(__name__)


# ==================== LECTURA / ESCRITURA ====================

def parse_modular_polynomial(text: str, p: int, source: str = "<text>") -> ModularPolynomial:
    """
    Interpreta el contenido de un archivo de Φ_p.

    Raises:
        ParseError: línea mal formada, falta la cabecera o Φ_p no es mónico
        LevelMismatch: la cabecera declara otro primo
        SymmetryViolation: c_{a,b} != c_{b,a}
    """
    level: Optional[int] = None
    modulus: Optional[int] = None
    entries: Dict[Tuple[int, int], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if len(parts) != 2:
                    raise ValueError("cabecera p")
                level = int(parts[1])
                continue
            if parts[0] == "modulus":
                if len(parts) != 2:
                    raise ValueError("cabecera modulus")
                modulus = int(parts[1])
                continue
            if len(parts) != 3:
                raise ValueError("se esperaban tres campos")
            a, b, c = (int(x) for x in parts)
        except ValueError as e:
            raise ParseError(
                f"{source}:{lineno}: línea inválida ({e})",
                details={"source": source, "line": lineno, "content": raw},
            )
        if level is None:
            raise ParseError(f"{source}:{lineno}: falta la cabecera 'p <primo>'", details={"source": source})
        if a < 0 or b < 0 or a > level + 1 or b > level + 1:
            raise ParseError(
                f"{source}:{lineno}: exponente fuera de rango para Φ_{level}",
                details={"source": source, "line": lineno, "a": a, "b": b},
            )
        if modulus is not None:
            c %= modulus
        if (a, b) in entries and entries[(a, b)] != c:
            raise ParseError(
                f"{source}:{lineno}: coeficiente ({a},{b}) repetido con otro valor",
                details={"source": source, "line": lineno},
            )
        entries[(a, b)] = c

    if level is None:
        raise ParseError(f"{source}: falta la cabecera 'p <primo>'", details={"source": source})
    if level != p:
        raise LevelMismatch(
            f"{source} declara p = {level}, se pidió p = {p}",
            details={"source": source, "declared": level, "requested": p},
        )

    terms: Dict[Tuple[int, int], int] = {}
    for (a, b), c in entries.items():
        key = (max(a, b), min(a, b))
        mirror = entries.get((b, a))
        if mirror is not None and mirror != c:
            raise SymmetryViolation(
                f"{source}: c_({a},{b}) = {c} pero c_({b},{a}) = {mirror}",
                details={"source": source, "a": a, "b": b},
            )
        if c:
            terms[key] = c

    if terms.get((p + 1, 0)) != 1:
        raise ParseError(
            f"{source}: Φ_{p} debe tener c_({p + 1},0) = 1",
            details={"source": source, "leading": terms.get((p + 1, 0), 0)},
        )
    ordered = tuple((a, b, terms[(a, b)]) for a, b in sorted(terms, reverse=True))
    return ModularPolynomial(p, ordered, modulus)


def load_modular_polynomial(p: int, source: Path) -> ModularPolynomial:
    """Lee y valida un archivo de Φ_p."""
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise MissingModularPolynomial(
            f"No se pudo leer {source}: {e}",
            details={"p": p, "path": str(source)},
        )
    phi = parse_modular_polynomial(text, p, str(source))
    logger.debug(f"Φ_{p} cargado desde {source} ({len(phi.terms)} términos)")
    return phi


def format_modular_polynomial(phi: ModularPolynomial) -> str:
    lines = [f"p {phi.p}"]
    if phi.modulus is not None:
        lines.append(f"modulus {phi.modulus}")
    lines.extend(f"{a} {b} {c}" for a, b, c in phi.terms)
    return "\n".join(lines) + "\n"


def write_modular_polynomial(phi: ModularPolynomial, directory: Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    suffix = f"_mod{phi.modulus}" if phi.modulus is not None else ""
    path = directory / f"phi_{phi.p}{suffix}.txt"
    path.write_text(format_modular_polynomial(phi), encoding="utf-8")
    return path


# ==================== GENERACIÓN MOD N ====================

def _partitions_mod(length: int, N: int) -> np.ndarray:
    """Σ p(n) q^n mod N (recurrencia pentagonal de Euler)."""
    part = [0] * length
    part[0] = 1
    for n in range(1, length):
        acc = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            acc += sign * part[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                acc += sign * part[n - g2]
            k += 1
        part[n] = acc % N
    return np.array(part, dtype=np.int64)


def _sigma3_mod(length: int, N: int) -> np.ndarray:
    """σ_3(n) mod N para n < length, por criba sobre los divisores."""
    sigma = np.zeros(length, dtype=np.int64)
    for d in range(1, length):
        sigma[d::d] = (sigma[d::d] + pow(d, 3, N)) % N
    return sigma


def _mul_mod(f: np.ndarray, g: np.ndarray, N: int, length: int) -> np.ndarray:
    return np.convolve(f, g)[:length] % N


def j_series_mod(N: int, length: int) -> np.ndarray:
    """
    Coeficientes de q * j(q) mod N hasta q^(length-1).

    q j(q) = E4(q)^3 / Π(1 - q^n)^24 = E4^3 (Σ p(n) q^n)^24.
    """
    e4 = 240 * _sigma3_mod(length, N) % N
    e4[0] = 1
    part = _partitions_mod(length, N)
    p2 = _mul_mod(part, part, N, length)
    p4 = _mul_mod(p2, p2, N, length)
    p8 = _mul_mod(p4, p4, N, length)
    p16 = _mul_mod(p8, p8, N, length)
    p24 = _mul_mod(p16, p8, N, length)
    e4_cubed = _mul_mod(_mul_mod(e4, e4, N, length), e4, N, length)
    return _mul_mod(e4_cubed, p24, N, length)


def _nullspace_mod(matrix: np.ndarray, N: int) -> List[np.ndarray]:
    """Base del núcleo de matrix sobre F_N por eliminación de Gauss-Jordan."""
    M = matrix % N
    rows, cols = M.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(M[r:, c])[0]
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, N) % N
        column = M[:, c].copy()
        column[r] = 0
        touched = np.nonzero(column)[0]
        if touched.size:
            M[touched] = (M[touched] - np.outer(column[touched], M[r])) % N
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -M[i, f] % N
        basis.append(v)
    return basis


@lru_cache(maxsize=None)
def generate_modular_polynomial_mod(p: int, N: int) -> ModularPolynomial:
    """
    Φ_p mod N como núcleo de c -> Σ c_{a,b} (j(q^p)^a j(q)^b + j(q^p)^b j(q)^a).

    El resultado depende solo de (p, N) y se guarda en memoria durante el proceso.

    Una función no nula de bigrado <= (p+1, p+1) en X_0(p) tiene a lo sumo
    (p+1)^2 polos fuera de ∞, así que basta anular los coeficientes con
    exponente <= (p+1)^2.

    Raises:
        InternalInconsistency: si el núcleo no tiene dimensión 1
    """
    if not isprime(p) or not isprime(N):
        raise CompositeModulus("p y N deben ser primos", details={"p": p, "N": N})
    top = p + 1
    e_min = -top * top
    e_max = top * top + 1
    rows = e_max - e_min + 1
    length = e_max + top * top + 1

    s = j_series_mod(N, length)
    powers = [np.zeros(length, dtype=np.int64)]
    powers[0][0] = 1
    for _ in range(top):
        powers.append(_mul_mod(powers[-1], s, N, length))

    def block(a: int, b: int) -> np.ndarray:
        # j(q^p)^a j(q)^b = q^-(pa+b) * S(q^p)^a * S(q)^b
        prod = np.zeros(length, dtype=np.int64)
        for i, coeff in enumerate(powers[a]):
            shift = p * i
            if shift >= length:
                break
            if coeff:
                prod[shift:] = (prod[shift:] + coeff * powers[b][: length - shift]) % N
        column = np.zeros(rows, dtype=np.int64)
        idx = e_min + p * a + b + np.arange(rows)
        valid = (idx >= 0) & (idx < length)
        column[valid] = prod[idx[valid]]
        return column

    pairs = [(a, b) for a in range(top + 1) for b in range(a + 1)]
    columns = []
    for a, b in pairs:
        col = block(a, b)
        if a != b:
            col = (col + block(b, a)) % N
        columns.append(col)
    system = np.stack(columns, axis=1)

    kernel = _nullspace_mod(system, N)
    if len(kernel) != 1:
        raise InternalInconsistency(
            f"El núcleo para Φ_{p} mod {N} tiene dimensión {len(kernel)}",
            details={"p": p, "N": N, "nullity": len(kernel)},
        )
    v = kernel[0]
    lead = int(v[pairs.index((top, 0))])
    if lead == 0:
        raise InternalInconsistency(f"c_({top},0) se anula en Φ_{p} mod {N}", details={"p": p, "N": N})
    scale = pow(lead, -1, N)
    terms = tuple(
        (a, b, int(v[k]) * scale % N)
        for k, (a, b) in sorted(enumerate(pairs), key=lambda item: item[1], reverse=True)
        if int(v[k]) * scale % N
    )
    logger.info(f"Φ_{p} mod {N} generado ({len(terms)} términos)")
    return ModularPolynomial(p, terms, N)


# ==================== BÚSQUEDA ====================

def find_modular_polynomial(p: int, N: int, data_dir: Optional[str] = None) -> ModularPolynomial:
    """
    Φ_p reducido mod N según el orden de búsqueda del módulo.

    Raises:
        MissingModularPolynomial: no hay archivo y la generación no aplica
    """
    directory = settings.data_dir(data_dir)
    exact = directory / f"phi_{p}.txt"
    if exact.is_file():
        return load_modular_polynomial(p, exact).reduce(N)

    candidates = [directory / f"phi_{p}_mod{N}.txt"]
    if settings.MODPOLY_CACHE_DIR:
        candidates.append(Path(settings.MODPOLY_CACHE_DIR) / f"phi_{p}_mod{N}.txt")
    for path in candidates:
        if path.is_file():
            phi = load_modular_polynomial(p, path)
            if phi.modulus != N:
                raise ParseError(
                    f"{path} declara modulus {phi.modulus}, se esperaba {N}",
                    details={"path": str(path), "modulus": phi.modulus, "N": N},
                )
            return phi

    if settings.MODPOLY_GENERATE and p <= settings.MODPOLY_GENERATE_MAX_LEVEL:
        phi = generate_modular_polynomial_mod(p, N)
        if settings.MODPOLY_CACHE_DIR:
            write_modular_polynomial(phi, Path(settings.MODPOLY_CACHE_DIR))
        return phi

    raise MissingModularPolynomial(
        f"No hay datos de Φ_{p} para N = {N} en {directory}",
        details={"p": p, "N": N, "data_dir": str(directory)},
    )


def specialize(phi: ModularPolynomial, j: FieldElement) -> FieldPolynomial:
    """Φ_p(j, Y) como polinomio en Y sobre el cuerpo de j."""
    F = j.field
    powers = [F.one]
    for _ in range(phi.degree):
        powers.append(powers[-1] * j)
    coeffs = [F.zero] * (phi.degree + 1)
    for (a, b), c in phi.coefficient_map().items():
        coeffs[b] = coeffs[b] + powers[a] * c
    return field_poly(F, coeffs)
