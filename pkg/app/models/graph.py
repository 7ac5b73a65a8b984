"""
Multigrafos con aristas orientadas e involución de inversión J.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class OrientedEdge:
    """Arista orientada e con cola ∂0(e), cabeza ∂1(e) y su inversa J(e)."""
    index: int
    tail: int
    head: int
    partner: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class MultiGraph:
    """
    Grafo con vértices 0..m-1.

    Cada arista geométrica aparece como un par (e, J(e)); un lazo en x es un
    par de aristas x -> x que son inversas entre sí, así que cuenta dos veces
    en el grado.
    """
    vertex_count: int
    edges: Tuple[OrientedEdge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for e in self.edges:
            j = self.edges[e.partner]
            if j.partner != e.index or j.index == e.index:
                raise ValueError(f"J no es una involución sin puntos fijos en la arista {e.index}")
            if j.tail != e.head or j.head != e.tail:
                raise ValueError(f"J no invierte la orientación de la arista {e.index}")

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def geometric_edge_count(self) -> int:
        """|GE(G)| = |E(G)| / 2"""
        return len(self.edges) // 2

    def out_edges(self, x: int) -> List[OrientedEdge]:
        return [e for e in self.edges if e.tail == x]

    def degree(self, x: int) -> int:
        return sum(1 for e in self.edges if e.tail == x)

    def loops(self, x: int) -> int:
        """l(x): lazos geométricos en x."""
        return sum(1 for e in self.edges if e.tail == x and e.is_loop) // 2

    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.degree(x) for x in self.vertices)

    def out_edge_map(self) -> Dict[int, List[OrientedEdge]]:
        table: Dict[int, List[OrientedEdge]] = {x: [] for x in self.vertices}
        for e in self.edges:
            table[e.tail].append(e)
        return table


@dataclass(frozen=True)
class AdjacencyMatrix:
    """A simétrica no negativa con diagonal par, y Q con Q_xx = d(x) - 1."""
    matrix: IntMatrix

    @property
    def size(self) -> int:
        return len(self.matrix)

    def degree(self, x: int) -> int:
        return sum(self.matrix[x])

    @property
    def q_matrix(self) -> IntMatrix:
        n = self.size
        return tuple(
            tuple(self.degree(i) - 1 if i == j else 0 for j in range(n))
            for i in range(n)
        )


@dataclass(frozen=True)
class StructureFlags:
    connected: bool
    bipartite: bool
    regular: Optional[int]
