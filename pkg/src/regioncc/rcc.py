"""Region crossing changes and the questions they answer.

Switching a region switches each crossing once per corner the region
has there, so over GF(2) only corner parities matter.  The incidence
matrix has one row per region and one column per crossing; every
question below is linear algebra on it: which crossing sets are
reachable (admissibility), which region sets do nothing (ineffective
sets), how many genuinely different effects exist (class counting),
and whether its rank matches the value predicted from the region
count, component count, and the homology rank of the components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .gf2 import BitMatrix, BitVector, in_rowspace, nullspace_basis, rank
from .homology import homology_matrix
from .scheme import Edge, EmbeddingScheme, components, faces

__all__ = [
    "incidence_matrix",
    "RankReport",
    "verify_rank_formula",
    "count_classes",
    "admissible",
    "ineffective_basis",
    "apply_rcc",
    "rcc_equivalent",
    "checkerboard",
]


@lru_cache(maxsize=2048)
def _incidence_for_edges(edges: tuple[Edge, ...]) -> BitMatrix:
    from .scheme import _faces_for_edges
    structure = _faces_for_edges(edges)
    rows = []
    for region in structure.regions:
        bits = 0
        for v, count in enumerate(region.corner_counts):
            bits |= (count & 1) << v
        rows.append(bits)
    return BitMatrix.from_bitrows(rows, structure.crossing_count)


def incidence_matrix(d: EmbeddingScheme) -> BitMatrix:
    """Region-by-crossing matrix of corner parities over GF(2)."""
    return _incidence_for_edges(d.edges)


@dataclass(frozen=True)
class RankReport:
    """Measured incidence rank against its predicted value.

    The prediction is regions - components - 1 + homology rank.
    """

    incidence_rank: int
    region_count: int
    component_count: int
    homology_rank: int

    @property
    def predicted_rank(self) -> int:
        return (self.region_count - self.component_count - 1
                + self.homology_rank)

    @property
    def holds(self) -> bool:
        return self.incidence_rank == self.predicted_rank


def verify_rank_formula(d: EmbeddingScheme) -> RankReport:
    return RankReport(
        incidence_rank=rank(incidence_matrix(d)),
        region_count=faces(d).region_count,
        component_count=len(components(d)),
        homology_rank=homology_matrix(d).rank,
    )


def count_classes(d: EmbeddingScheme) -> int:
    """Exponent k such that the shadow has 2**k equivalence classes.

    Over-assignments of one shadow fall into classes reachable from one
    another by region switches; there are 2**(crossings - rank) of them.
    The count is reported as an exponent so it never overflows a reader
    or a log line for large diagrams.
    """
    return d.crossing_count - rank(incidence_matrix(d))


def _crossing_set(d: EmbeddingScheme, crossings: Iterable[int]) -> set[int]:
    chosen = set(crossings)
    for i in chosen:
        if not 0 <= i < d.crossing_count:
            raise IndexError(f"crossing index {i} out of range")
    return chosen


def admissible(d: EmbeddingScheme, crossings: Iterable[int]) -> tuple[int, ...] | None:
    """Region set switching exactly the given crossings, or None.

    The returned tuple is a sorted certificate: switching those regions
    flips precisely the requested crossings.
    """
    chosen = _crossing_set(d, crossings)
    target = BitVector.from_support(sorted(chosen), d.crossing_count)
    coeffs = in_rowspace(incidence_matrix(d), target)
    if coeffs is None:
        return None
    return coeffs.support()


def ineffective_basis(d: EmbeddingScheme) -> tuple[BitVector, ...]:
    """Basis of the region sets whose combined switching does nothing."""
    return nullspace_basis(incidence_matrix(d).transpose())


def apply_rcc(d: EmbeddingScheme, regions: Iterable[int]) -> EmbeddingScheme:
    """Switch every crossing an odd number of the given regions touches."""
    m = incidence_matrix(d)
    effect = 0
    for rid in set(regions):
        if not 0 <= rid < m.rows:
            raise IndexError(f"region index {rid} out of range")
        effect ^= m.row_bits[rid]
    overs = tuple(o ^ ((effect >> i) & 1) for i, o in enumerate(d.overs))
    return d.with_overs(overs)


def rcc_equivalent(d1: EmbeddingScheme, d2: EmbeddingScheme) -> tuple[int, ...] | None:
    """Region certificate transforming d1 into d2, or None.

    Both diagrams must share the same shadow (identical edge lists);
    otherwise the question is not well posed and ValueError is raised.
    """
    if d1.edges != d2.edges:
        raise ValueError("diagrams have different shadows")
    diff = [i for i, (a, b) in enumerate(zip(d1.overs, d2.overs)) if a != b]
    return admissible(d1, diff)


def checkerboard(d: EmbeddingScheme) -> tuple[int, ...] | None:
    """Two-coloring of the regions with opposite colors across every edge.

    Returns one color per region (region 0 gets color 0), or None when
    the regions cannot be two-colored.  When a coloring exists, both
    color classes are ineffective region sets; that is rechecked here
    before returning.
    """
    structure = faces(d)
    r = structure.region_count
    adjacency: list[list[int]] = [[] for _ in range(r)]
    for e in range(d.edge_count):
        u, v = structure.sides_of_edge(d, e)
        if u == v:
            return None
        adjacency[u].append(v)
        adjacency[v].append(u)
    colors = [-1] * r
    for start in range(r):
        if colors[start] >= 0:
            continue
        colors[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in adjacency[u]:
                if colors[v] < 0:
                    colors[v] = colors[u] ^ 1
                    queue.append(v)
                elif colors[v] == colors[u]:
                    return None
    m = incidence_matrix(d)
    for color in (0, 1):
        effect = 0
        for rid, c in enumerate(colors):
            if c == color:
                effect ^= m.row_bits[rid]
        if effect:
            raise RuntimeError("checkerboard color class is not ineffective")
    return tuple(colors)
