"""
Fixtures compartidas. Agrega app/ al path como en el resto de los tests.
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'app'))

from core.selftest import EXAMPLE_ADJACENCY, EXAMPLE_LAPLACIAN  # noqa: E402


@pytest.fixture
def example_adjacency():
    """Grafo 4-regular de 4 vértices con lazos en 1 y 4."""
    return EXAMPLE_ADJACENCY


@pytest.fixture
def example_laplacian():
    return EXAMPLE_LAPLACIAN


@pytest.fixture
def triangle():
    return ((0, 1, 1), (1, 0, 1), (1, 1, 0))


@pytest.fixture
def single_loop():
    return ((2,),)


@pytest.fixture
def k4():
    """Grafo completo K4: 3-regular, Ramanujan."""
    return tuple(tuple(0 if i == j else 1 for j in range(4)) for i in range(4))


@pytest.fixture
def isolated_settings(monkeypatch, tmp_path):
    """Settings sin variables de entorno ni caché del usuario."""
    from core.config import settings
    monkeypatch.setattr(settings, "BRANDT_ZETA_DATA", None)
    monkeypatch.setattr(settings, "MODPOLY_CACHE_DIR", None)
    monkeypatch.setattr(settings, "MODPOLY_GENERATE", True)
    return settings
