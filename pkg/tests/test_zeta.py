"""
Tests de la zeta de Ihara, el oráculo de Hashimoto y el certificado de Ramanujan.
Ejecutar con: pytest tests/test_zeta.py -v
"""
import time

import numpy as np
import pytest

from core.exceptions import BudgetExceeded, DisconnectedGraph, NotRealizable, NotRegular, UsageError
from core.graph_service import graph_from_adjacency
from core.polynomials import one_minus, ratfun_normalize
from core.zeta_service import (
    ONE_MINUS_T2,
    closed_path_counts,
    count_closed_paths,
    formal_zeta,
    hashimoto_matrix,
    ihara_zeta,
    ramanujan_certificate,
    zeta_via_hashimoto,
)
from models.polynomials import IntPolynomial

ONE = IntPolynomial.constant(1)


def inverse(den: IntPolynomial):
    return ratfun_normalize(ONE, den)


class TestIharaZeta:
    """Fórmula del determinante de tres términos"""

    def test_triangle(self, triangle):
        """Z(C3) = 1/(1 - t^3)^2"""
        Z = ihara_zeta(graph_from_adjacency(triangle))
        assert Z.function == inverse(one_minus(1, 3) ** 2)
        assert Z.euler_characteristic == 0

    def test_complete_graph(self, k4):
        """Z(K4)^-1 = (1-t^2)^2 (1-t)(1-2t)(1+t+2t^2)^3"""
        Z = ihara_zeta(graph_from_adjacency(k4))
        expected = ONE_MINUS_T2 ** 2 * one_minus(1) * one_minus(2) * IntPolynomial((1, 1, 2)) ** 3
        assert Z.function == inverse(expected)
        assert Z.geometric is True

    def test_single_loop(self, single_loop):
        Z = ihara_zeta(graph_from_adjacency(single_loop))
        assert Z.function == inverse(one_minus(1) ** 2)

    def test_tree_is_one(self):
        Z = ihara_zeta(graph_from_adjacency([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
        assert Z.function == inverse(ONE)

    def test_value_at_zero(self, example_adjacency):
        assert ihara_zeta(graph_from_adjacency(example_adjacency)).value_at_zero() == 1

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            ihara_zeta(graph_from_adjacency([[2, 0], [0, 2]]))


class TestHashimotoOracle:
    """1/det(I - tT) debe coincidir con la fórmula de tres términos"""

    @pytest.mark.parametrize("A", [
        ((0, 1, 1), (1, 0, 1), (1, 1, 0)),
        ((2,),),
        ((0, 1), (1, 0)),
        ((0, 3), (3, 0)),
        ((2, 1, 0, 1), (1, 0, 3, 0), (0, 3, 0, 1), (1, 0, 1, 2)),
        ((0, 2, 1), (2, 2, 0), (1, 0, 4)),
    ])
    def test_oracles_agree(self, A):
        G = graph_from_adjacency(A)
        assert ihara_zeta(G).function == zeta_via_hashimoto(G)

    @pytest.mark.parametrize("A", [
        [[2]],
        [[24]],
        [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
        [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]],
        [[2, 1, 0, 1], [1, 0, 3, 0], [0, 3, 0, 1], [1, 0, 1, 2]],
        [[0, 2, 1], [2, 0, 1], [1, 1, 2]],
    ])
    def test_reciprocal_degree(self, A):
        """Grado mínimo >= 2: 1/Z es un polinomio de grado 2|GE|"""
        G = graph_from_adjacency(A)
        Z = ihara_zeta(G).function
        assert Z.numerator.degree == 0
        assert Z.denominator.degree == len(G.edges)
        assert zeta_via_hashimoto(G).denominator.degree == len(G.edges)

    def test_reciprocal_degree_drops_with_leaves(self):
        G = graph_from_adjacency([[0, 1, 0], [1, 0, 1], [0, 1, 2]])
        assert zeta_via_hashimoto(G).denominator.degree < len(G.edges)

    def test_hashimoto_excludes_backtracking(self, triangle):
        G = graph_from_adjacency(triangle)
        T = hashimoto_matrix(G)
        for e in G.edges:
            assert T[e.index][e.partner] == 0
        assert all(sum(row) == 1 for row in T)


class TestClosedPaths:
    """Coeficientes de t Z'/Z frente a enumeración directa"""

    def test_triangle_counts(self, triangle):
        G = graph_from_adjacency(triangle)
        Z = ihara_zeta(G).function
        assert closed_path_counts(Z, 6) == [0, 0, 6, 0, 0, 6]
        assert count_closed_paths(G, 3) == 6

    @pytest.mark.parametrize("fixture", ["k4", "example_adjacency"])
    def test_counts_match_enumeration(self, fixture, request):
        G = graph_from_adjacency(request.getfixturevalue(fixture))
        predicted = closed_path_counts(ihara_zeta(G).function, 6)
        assert predicted == [count_closed_paths(G, m) for m in range(1, 7)]

    def test_bouquet_of_loops(self):
        """Un vértice con 12 lazos: N_m = 23^m + 11(-1)^m + 12"""
        G = graph_from_adjacency([[24]])
        assert count_closed_paths(G, 3) == 12168
        assert count_closed_paths(G, 4) == 279864

    def test_long_paths_stay_fast(self):
        G = graph_from_adjacency([[24]])
        start = time.perf_counter()
        counted = [count_closed_paths(G, m) for m in range(1, 9)]
        assert time.perf_counter() - start < 10
        assert counted[-1] == 23 ** 8 + 11 + 12
        assert counted == closed_path_counts(ihara_zeta(G).function, 8)

    def test_budget(self, k4):
        with pytest.raises(BudgetExceeded):
            count_closed_paths(graph_from_adjacency(k4), 13)

    def test_length_must_be_positive(self, k4):
        with pytest.raises(UsageError):
            count_closed_paths(graph_from_adjacency(k4), 0)


class TestFormalZeta:
    """Zeta formal de matrices simétricas con filas de suma constante"""

    def test_matches_ihara_for_adjacency(self, k4):
        assert formal_zeta(k4, 3).function == ihara_zeta(graph_from_adjacency(k4)).function

    def test_odd_diagonal_allowed(self):
        Z = formal_zeta([[1, 2], [2, 1]], 3)
        assert Z.geometric is False
        assert Z.euler_characteristic == -1

    def test_single_vertex(self):
        """B = [4]: 1/((1-t)(1-3t)(1-t^2))"""
        Z = formal_zeta([[4]], 4)
        assert Z.function == inverse(one_minus(1) * one_minus(3) * ONE_MINUS_T2)

    def test_half_integer_exponent(self):
        with pytest.raises(NotRealizable):
            formal_zeta([[3]], 3)

    def test_row_sum_mismatch(self):
        with pytest.raises(NotRegular):
            formal_zeta([[1, 2], [2, 0]], 3)


class TestRamanujanCertificate:

    def test_complete_graph(self, k4):
        verdict = ramanujan_certificate(graph_from_adjacency(k4))
        assert verdict.is_ramanujan
        assert verdict.degree == 3
        assert verdict.outside_count == 0

    def test_example_graph(self, example_adjacency):
        """-1 - sqrt(5) ≈ -3.24 cabe en [-2 sqrt(3), 2 sqrt(3)]"""
        verdict = ramanujan_certificate(graph_from_adjacency(example_adjacency))
        assert verdict.is_ramanujan
        assert not verdict.is_bipartite

    def test_bipartite_drops_minus_k(self):
        C4 = [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
        verdict = ramanujan_certificate(graph_from_adjacency(C4))
        assert verdict.is_bipartite
        assert verdict.is_ramanujan

    def test_not_ramanujan(self):
        """Prisma C20 x K2: 2cos(pi/10) + 1 ≈ 2.90 > 2 sqrt(2)"""
        n = 20
        A = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for x, y in ((i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)):
                A[x][y] = A[y][x] = 1
        verdict = ramanujan_certificate(graph_from_adjacency(A))
        assert verdict.degree == 3
        assert verdict.outside_count >= 1
        assert not verdict.is_ramanujan

    @pytest.mark.parametrize("fixture", ["k4", "example_adjacency", "triangle"])
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_invariant_under_relabeling(self, fixture, seed, request):
        A = request.getfixturevalue(fixture)
        perm = [int(i) for i in np.random.default_rng(seed).permutation(len(A))]
        relabeled = [[A[perm[i]][perm[j]] for j in range(len(A))] for i in range(len(A))]
        assert ramanujan_certificate(graph_from_adjacency(relabeled)) == ramanujan_certificate(graph_from_adjacency(A))

    def test_irregular(self):
        with pytest.raises(NotRegular):
            ramanujan_certificate(graph_from_adjacency([[0, 1, 1], [1, 0, 0], [1, 0, 0]]))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            ramanujan_certificate(graph_from_adjacency([[2, 0], [0, 2]]))
