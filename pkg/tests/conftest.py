"""Shared fixtures, frozen expectations, and independent oracles.

The oracles recompute answers by brute force or by a structurally
different route, so the tests never check the package against itself.
Frozen values were derived by hand before the implementation existed.
"""

from __future__ import annotations

import random

import pytest

from regioncc import (Edge, EmbeddingScheme, components, faces,
                      incidence_matrix, import_pd, random_diagram,
                      surface_info, verify_rank_formula)
from regioncc.gf2 import BitMatrix
from regioncc.gf2 import rank as gf2_rank


# ---------------------------------------------------------------------------
# Hand-built one-crossing diagrams and a classic knot.

def make_curl() -> EmbeddingScheme:
    """Kink on the sphere: both edges are untwisted loops."""
    return EmbeddingScheme((0,), (Edge((0, 1), 1), Edge((2, 3), 1)))


def make_torus11() -> EmbeddingScheme:
    """Two curves crossing once on the torus."""
    return EmbeddingScheme((0,), (Edge((0, 2), 1), Edge((1, 3), 1)))


def make_rp2curl() -> EmbeddingScheme:
    """Kink on the projective plane: one loop runs through the cross-cap."""
    return EmbeddingScheme((0,), (Edge((0, 1), -1), Edge((2, 3), 1)))


TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]

# Two circles clasped twice, read off counterclockwise circles side by
# side; crossings 0 and 1 are the two inter-component points.
HOPF_PD = [(2, 4, 1, 3), (1, 4, 2, 3)]

# Three circles in a row, each clasping the next: crossings 0,1 join
# the left pair, 2,3 the right pair, and the end circles never meet.
CHAIN3_PD = [(2, 3, 1, 4), (1, 5, 2, 4), (6, 8, 3, 7), (5, 8, 6, 7)]


def make_trefoil() -> EmbeddingScheme:
    return import_pd(TREFOIL_PD)


@pytest.fixture
def curl() -> EmbeddingScheme:
    return make_curl()


@pytest.fixture
def torus11() -> EmbeddingScheme:
    return make_torus11()


@pytest.fixture
def rp2curl() -> EmbeddingScheme:
    return make_rp2curl()


@pytest.fixture
def trefoil() -> EmbeddingScheme:
    return make_trefoil()


# Hand-derived profiles: (regions, euler char, orientable, components,
# incidence rank, homology rank, class exponent).
FIXTURE_PROFILES = {
    "curl": (3, 2, True, 1, 1, 0, 0),
    "torus11": (1, 0, True, 2, 0, 2, 1),
    "rp2curl": (2, 1, False, 1, 1, 1, 0),
    "trefoil": (5, 2, True, 1, 3, 0, 0),
}

FIXTURE_MAKERS = {
    "curl": make_curl,
    "torus11": make_torus11,
    "rp2curl": make_rp2curl,
    "trefoil": make_trefoil,
}


# ---------------------------------------------------------------------------
# Worked 6-crossing examples: a 3-component diagram on the torus and a
# 2-component diagram on the Klein bottle.  Ranks were checked by hand
# with row reduction before being frozen here.

TORUS_3COMP_INCIDENCE = [
    (1, 1, 0, 1, 1, 0),
    (1, 1, 0, 0, 0, 1),
    (1, 1, 0, 1, 1, 0),
    (1, 1, 1, 0, 0, 0),
    (0, 0, 1, 1, 1, 0),
    (0, 0, 0, 1, 1, 1),
]
TORUS_3COMP_CLASSES = [(1, 0), (1, 0), (1, 0)]
TORUS_3COMP_RANKS = (3, 1)
TORUS_3COMP_SHAPE = (6, 3)  # regions, components

KLEIN_2COMP_INCIDENCE = [
    (1, 1, 0, 1, 1, 0),
    (1, 1, 0, 0, 0, 1),
    (1, 0, 1, 1, 1, 0),
    (1, 1, 1, 0, 0, 0),
    (0, 0, 1, 1, 1, 0),
    (0, 1, 1, 1, 1, 1),
]
KLEIN_2COMP_CLASSES = [(1, 0), (0, 0)]
KLEIN_2COMP_RANKS = (4, 1)
KLEIN_2COMP_SHAPE = (6, 2)


def as_matrix(rows) -> BitMatrix:
    return BitMatrix.from_rows(rows)


# ---------------------------------------------------------------------------
# Planar knot codes: the twisted two-strand family plus a handful of
# small knots from standard tables.

def twisted_pair_pd(n: int) -> list[tuple[int, int, int, int]]:
    """Alternating two-strand braid closure with n crossings (n odd)."""
    wrap = lambda x: ((x - 1) % (2 * n)) + 1
    return [(wrap(2 * j), wrap(2 * j + n + 1), wrap(2 * j + 1), wrap(2 * j + n))
            for j in range(1, n + 1)]


def mirror_pd(code):
    return [(a, d, c, b) for a, b, c, d in code]


SMALL_KNOT_PDS = {
    "3_1": [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)],
    "4_1": [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)],
    "5_1": [(1, 6, 2, 7), (3, 8, 4, 9), (5, 10, 6, 1), (7, 2, 8, 3),
            (9, 4, 10, 5)],
    "5_2": [(1, 4, 2, 5), (3, 8, 4, 9), (5, 10, 6, 1), (9, 6, 10, 7),
            (7, 2, 8, 3)],
    "6_1": [(1, 4, 2, 5), (7, 10, 8, 11), (3, 9, 4, 8), (9, 3, 10, 2),
            (5, 12, 6, 1), (11, 6, 12, 7)],
    "6_2": [(1, 4, 2, 5), (5, 10, 6, 11), (3, 9, 4, 8), (9, 3, 10, 2),
            (7, 12, 8, 1), (11, 6, 12, 7)],
    "6_3": [(4, 2, 5, 1), (8, 4, 9, 3), (12, 9, 1, 10), (10, 5, 11, 6),
            (6, 11, 7, 12), (2, 8, 3, 7)],
}


def planar_knot_pds() -> list[list[tuple[int, int, int, int]]]:
    codes = []
    for n in range(3, 23, 2):
        codes.append(twisted_pair_pd(n))
        codes.append(mirror_pd(twisted_pair_pd(n)))
    codes.extend(SMALL_KNOT_PDS.values())
    return codes


# ---------------------------------------------------------------------------
# Independent oracles.

def row_span(masks) -> set[int]:
    """Every XOR combination of the given bit rows."""
    sums = {0}
    for bits in masks:
        sums |= {s ^ bits for s in sums}
    return sums


def brute_admissible(m: BitMatrix, target_bits: int) -> bool:
    return target_bits in row_span(m.row_bits)


def brute_rank(m: BitMatrix) -> int:
    return len(row_span(m.row_bits)).bit_length() - 1


def monodromy_orientable(d: EmbeddingScheme) -> bool:
    """Orientability by propagating local orientations over a spanning tree.

    The rotation at every crossing is the canonical one, so a cycle
    reverses orientation exactly when its sign product is negative.
    """
    c = d.crossing_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(c)]
    for e in d.edges:
        u, v = e.darts[0] // 4, e.darts[1] // 4
        adj[u].append((v, e.sign))
        adj[v].append((u, e.sign))
    eps = [0] * c
    eps[0] = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v, s in adj[u]:
            if eps[v] == 0:
                eps[v] = eps[u] * s
                stack.append(v)
    return all(e.sign * eps[e.darts[0] // 4] * eps[e.darts[1] // 4] == 1
               for e in d.edges)


def base_region_count(d: EmbeddingScheme) -> int:
    """Face count traced directly in the base surface.

    Only meaningful when every sign is positive, where faces are plain
    rotation-system orbits.
    """
    assert all(e.sign > 0 for e in d.edges)
    theta = {}
    for e in d.edges:
        a, b = e.darts
        theta[a] = b
        theta[b] = a
    nxt = lambda x: (theta[x] & ~3) | ((theta[x] + 1) & 3)
    seen: set[int] = set()
    count = 0
    for start in range(d.dart_count):
        if start in seen:
            continue
        count += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = nxt(x)
    return count


def invariant_profile(d: EmbeddingScheme):
    """Index-free summary used to test relabeling invariance."""
    s = surface_info(d)
    rep = verify_rank_formula(d)
    return (rep.region_count, s.euler_characteristic, s.orientable,
            rep.component_count, rep.incidence_rank, rep.homology_rank,
            d.crossing_count - rep.incidence_rank)


def relabeled(d: EmbeddingScheme, rng: random.Random) -> EmbeddingScheme:
    """Same diagram with crossings renumbered and edges reshuffled."""
    perm = list(range(d.crossing_count))
    rng.shuffle(perm)
    move = lambda dart: 4 * perm[dart >> 2] | (dart & 3)
    edges = []
    for e in d.edges:
        a, b = (move(x) for x in e.darts)
        edges.append(Edge((min(a, b), max(a, b)), e.sign))
    rng.shuffle(edges)
    overs = [0] * d.crossing_count
    for i, o in enumerate(d.overs):
        overs[perm[i]] = o
    return EmbeddingScheme(tuple(overs), tuple(edges))


def random_suite(count: int, cmin: int, cmax: int, probs, seed: int):
    """Deterministic list of random diagrams spanning the given sizes."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        c = rng.randrange(cmin, cmax + 1)
        p = rng.choice(list(probs))
        out.append(random_diagram(c, p, seed=rng.randrange(1 << 30)))
    return out
