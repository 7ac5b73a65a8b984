"""
B(2) por isogenias de grado 2 con las fórmulas de Vélu.

Para cada j_i se toma E: y^2 = x^3 + 3k x + 2k con k = j/(1728 - j), cuyos
tres puntos de 2-torsión (x0, 0) dan los tres núcleos de orden 2.
"""
import logging

from core.brandt_service import BrandtProvider
from core.exceptions import ModelConstructionFailure, UsageError
from core.finite_fields import poly_roots
from models.arithmetic import IntMatrix, SupersingularLocus
from models.fields import FieldElement

logger = logging.getLogger(__name__)


def weierstrass_model(j: FieldElement):
    """(a, b) con j(y^2 = x^3 + a x + b) = j; requiere j ∉ {0, 1728}."""
    F = j.field
    if j.is_zero() or j == F.element(1728):
        raise ModelConstructionFailure(
            f"j = {j} necesita otro modelo",
            details={"j": list(j.coordinates)},
        )
    k = j / (F.element(1728) - j)
    return k * 3, k * 2


def j_invariant(a: FieldElement, b: FieldElement) -> FieldElement:
    four_a3 = a * a * a * 4
    disc = four_a3 + b * b * 27
    if disc.is_zero():
        raise ModelConstructionFailure("Modelo singular", details={"a": list(a.coordinates), "b": list(b.coordinates)})
    return four_a3 * 1728 / disc


def two_isogenous_j(j: FieldElement):
    """j-invariantes de los tres cocientes E/<(x0, 0)>."""
    F = j.field
    a, b = weierstrass_model(j)
    roots = poly_roots([b, a, F.zero, F.one], F)
    if sum(m for _, m in roots) != 3 or any(m != 1 for _, m in roots):
        raise ModelConstructionFailure(
            f"La 2-torsión de j = {j} no es racional sobre {F}",
            details={"j": list(j.coordinates), "roots": len(roots)},
        )
    targets = []
    for x0, _ in roots:
        t = x0 * x0 * 3 + a
        w = x0 * t
        targets.append(j_invariant(a - t * 5, b - w * 7))
    return targets


class Velu2Provider(BrandtProvider):
    """Oráculo independiente para p = 2."""

    name = "velu2"

    def matrix(self, locus: SupersingularLocus, p: int) -> IntMatrix:
        if p != 2:
            raise UsageError("velu2 solo está disponible para p = 2", details={"p": p})
        n = locus.size
        rows = []
        for j_i in locus.j_invariants:
            row = [0] * n
            for target in two_isogenous_j(j_i):
                k = locus.index_of(target)
                if k is None:
                    raise ModelConstructionFailure(
                        f"El cociente de j = {j_i} cae fuera del lugar supersingular",
                        details={"j": list(j_i.coordinates), "target": list(target.coordinates)},
                    )
                row[k] += 1
            rows.append(tuple(row))
        return tuple(rows)
