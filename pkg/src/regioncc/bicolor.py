"""Edge bi-colorings and the admissibility test they provide.

A bi-coloring for a crossing set P colors every edge 0 or 1 so that at
each crossing the two edges of either through strand agree in color
exactly when the crossing is outside P.  The 1-colored edges always
form a cycle of the graph, so they carry a homology class.  A crossing
set is switchable by regions precisely when some bi-coloring for it
has class zero; since the homogeneous solutions are spanned by the
component indicator vectors, that holds exactly when one particular
solution's class lies in the row space of the component-class matrix.
This route never looks at the incidence matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .gf2 import BitMatrix, BitVector, in_rowspace, solve
from .homology import class_of, homology_matrix
from .scheme import Edge, EmbeddingScheme, components

__all__ = [
    "Bicoloring",
    "bicoloring",
    "phi_class",
    "admissible_by_bicoloring",
]


@dataclass(frozen=True)
class Bicoloring:
    """One color (0 or 1) per edge of the diagram."""

    colors: tuple[int, ...]

    def ones_mask(self) -> int:
        bits = 0
        for e, color in enumerate(self.colors):
            bits |= (color & 1) << e
        return bits

    def switched(self, d: EmbeddingScheme) -> tuple[int, ...]:
        """Crossings whose through strands change color, sorted.

        For a valid bi-coloring both strands of a crossing agree on
        whether they change; RuntimeError flags a mismatch.
        """
        out = []
        for i in range(d.crossing_count):
            verdicts = set()
            for p in (0, 1):
                e1 = d.edge_of(4 * i + p)
                e2 = d.edge_of(4 * i + p + 2)
                verdicts.add(self.colors[e1] ^ self.colors[e2])
            if len(verdicts) != 1:
                raise RuntimeError(f"strands disagree at crossing {i}")
            out.extend([i] if verdicts.pop() else [])
        return tuple(out)


@lru_cache(maxsize=2048)
def _system_for_edges(edges: tuple[Edge, ...]) -> BitMatrix:
    c = len(edges) // 2
    lookup = [0] * (4 * c)
    for j, e in enumerate(edges):
        lookup[e.darts[0]] = j
        lookup[e.darts[1]] = j
    rows = []
    for i in range(c):
        for p in (0, 1):
            rows.append((1 << lookup[4 * i + p]) ^ (1 << lookup[4 * i + p + 2]))
    return BitMatrix.from_bitrows(rows, 2 * c)


def bicoloring(d: EmbeddingScheme, crossings: Iterable[int]) -> Bicoloring | None:
    """A bi-coloring for the given crossing set, or None if none exists.

    A crossing whose strand enters and leaves along the same edge can
    never change color, so requesting it makes the system unsolvable.
    """
    chosen = set(crossings)
    for i in chosen:
        if not 0 <= i < d.crossing_count:
            raise IndexError(f"crossing index {i} out of range")
    system = _system_for_edges(d.edges)
    rhs_bits = 0
    for i in chosen:
        rhs_bits |= 0b11 << (2 * i)
    x = solve(system, BitVector(system.rows, rhs_bits))
    if x is None:
        return None
    return Bicoloring(tuple((x.bits >> e) & 1 for e in range(d.edge_count)))


def phi_class(d: EmbeddingScheme, coloring: Bicoloring) -> BitVector:
    """Homology class of the 1-colored edge set."""
    if len(coloring.colors) != d.edge_count:
        raise ValueError("coloring length does not match the edge count")
    return class_of(d, coloring.ones_mask())


def admissible_by_bicoloring(
    d: EmbeddingScheme, crossings: Iterable[int]
) -> tuple[bool, Bicoloring | None]:
    """Admissibility via bi-colorings, with a class-zero witness.

    Returns (True, witness) where the witness is a bi-coloring for the
    crossing set whose 1-colored edges bound, or (False, None).
    """
    base = bicoloring(d, crossings)
    if base is None:
        return False, None
    hm = homology_matrix(d)
    coeffs = in_rowspace(hm.matrix, phi_class(d, base))
    if coeffs is None:
        return False, None
    mask = base.ones_mask()
    comps = components(d)
    for k in coeffs.support():
        for e in comps[k].edges:
            mask ^= 1 << e
    witness = Bicoloring(tuple((mask >> e) & 1 for e in range(d.edge_count)))
    if phi_class(d, witness).bits:
        raise RuntimeError("component flips did not cancel the class")
    return True, witness
