"""Link diagrams on closed surfaces as signed rotation systems.

Conventions used throughout the package:

- Crossing i carries the four darts 4i, 4i+1, 4i+2, 4i+3, and that is
  their cyclic order around the crossing.  Dart names are canonical, so
  a diagram is fully described by its edge pairing, edge signs, and one
  over flag per crossing.
- The two strands passing through a crossing occupy dart positions
  {0, 2} and {1, 3}.  Over flag 0 means the {0, 2} strand is on top.
- An edge sign of -1 means the local orientations at its two endpoints
  disagree when transported along the edge.
- Regions of the complement are read off the orientation double cover.
  Cover darts are encoded as 2 * d + sheet with sheet 0 the untwisted
  lift, so the deck involution is x ^ 1.  Faces of the cover are orbits
  of next(x) = sigma(theta(x)); a region of the base surface is a pair
  of cover faces exchanged by x -> theta(deck(x)).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

__all__ = [
    "DiagramFormatError",
    "InvalidDiagramError",
    "Edge",
    "EmbeddingScheme",
    "CoverScheme",
    "Region",
    "FaceStructure",
    "SurfaceInfo",
    "Component",
    "validate",
    "orientation_double_cover",
    "faces",
    "surface_info",
    "components",
    "import_pd",
    "parse_diagram",
    "serialize_diagram",
]


class DiagramFormatError(ValueError):
    """A diagram document does not match the expected shape."""


class InvalidDiagramError(ValueError):
    """Diagram data violates a structural invariant."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Edge:
    """An edge of the diagram: a pair of distinct darts and a sign."""

    darts: tuple[int, int]
    sign: int


def _structural_violations(overs: Sequence[int], edges: Sequence[Edge]) -> list[str]:
    problems = []
    c = len(overs)
    if c == 0:
        return ["diagram must have at least one crossing"]
    for i, o in enumerate(overs):
        if o not in (0, 1):
            problems.append(f"crossing {i}: over flag must be 0 or 1")
    n_darts = 4 * c
    seen: dict[int, int] = {}
    for j, e in enumerate(edges):
        a, b = e.darts
        if e.sign not in (1, -1):
            problems.append(f"edge {j}: sign must be +1 or -1")
        if a == b:
            problems.append(f"edge {j}: self-paired dart {a}")
        for d in dict.fromkeys((a, b)):
            if not 0 <= d < n_darts:
                problems.append(f"edge {j}: dart {d} out of range")
            elif d in seen:
                problems.append(f"dart {d} appears in edges {seen[d]} and {j}")
            else:
                seen[d] = j
    if len(edges) != 2 * c:
        problems.append(f"expected {2 * c} edges for {c} crossings, got {len(edges)}")
    if problems:
        return problems
    # Connectivity of the underlying 4-valent graph.
    adj: list[list[int]] = [[] for _ in range(c)]
    for e in edges:
        u, v = e.darts[0] // 4, e.darts[1] // 4
        adj[u].append(v)
        adj[v].append(u)
    reached = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != c:
        problems.append("diagram is disconnected")
    return problems


@dataclass(frozen=True)
class EmbeddingScheme:
    """A connected link diagram on a closed surface.

    ``overs[i]`` is the over flag of crossing i; ``edges`` pair up all
    4 * len(overs) darts.  Construction validates the structure and
    raises InvalidDiagramError on any violation.
    """

    overs: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        problems = _structural_violations(self.overs, self.edges)
        if problems:
            raise InvalidDiagramError(problems)

    @property
    def crossing_count(self) -> int:
        return len(self.overs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return 4 * len(self.overs)

    @cached_property
    def _dart_tables(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        theta = [0] * self.dart_count
        edge_of = [0] * self.dart_count
        for j, e in enumerate(self.edges):
            a, b = e.darts
            theta[a] = b
            theta[b] = a
            edge_of[a] = j
            edge_of[b] = j
        return tuple(theta), tuple(edge_of)

    def theta(self, d: int) -> int:
        """The other dart of d's edge."""
        return self._dart_tables[0][d]

    def edge_of(self, d: int) -> int:
        """Index of the edge containing dart d."""
        return self._dart_tables[1][d]

    def sigma(self, d: int) -> int:
        """Next dart counterclockwise around d's crossing."""
        return (d & ~3) | ((d + 1) & 3)

    def through(self, d: int) -> int:
        """The opposite dart of the strand passing through d's crossing."""
        return (d & ~3) | ((d + 2) & 3)

    def crossing_of(self, d: int) -> int:
        return d >> 2

    def pair_of(self, d: int) -> int:
        """Through-pair index of dart d at its crossing: 0 for {0,2}, 1 for {1,3}."""
        return d & 1

    def with_overs(self, overs: Iterable[int]) -> "EmbeddingScheme":
        return replace(self, overs=tuple(overs))


def validate(crossings: Sequence, edges: Sequence) -> EmbeddingScheme:
    """Check raw diagram data and build a scheme.

    ``crossings`` holds (rotation, over) pairs and ``edges`` holds
    ((dart, dart), sign) pairs.  Rotations must list the canonical dart
    names 4i..4i+3 in order; everything else is a violation.  Raises
    InvalidDiagramError carrying the full list of problems.
    """
    problems = []
    overs = []
    for i, (rotation, over) in enumerate(crossings):
        expected = [4 * i + k for k in range(4)]
        if list(rotation) != expected:
            problems.append(f"crossing {i}: rotation must be {expected}")
        overs.append(over)
    edge_objs = tuple(Edge((int(a), int(b)), int(s)) for (a, b), s in edges)
    problems.extend(_structural_violations(tuple(overs), edge_objs))
    if problems:
        raise InvalidDiagramError(problems)
    return EmbeddingScheme(tuple(int(o) for o in overs), edge_objs)


@dataclass(frozen=True)
class CoverScheme:
    """Orientation double cover of a diagram's embedded graph.

    Cover darts are 2 * d + sheet.  ``sigma`` rotates around cover
    vertices (the rotation on sheet 1 runs backwards), ``theta`` is the
    lifted edge involution, and the deck involution is x ^ 1.  The cover
    is connected exactly when the base surface is nonorientable.
    """

    base_crossings: int
    sigma: tuple[int, ...]
    theta: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    connected: bool

    @property
    def vertex_count(self) -> int:
        return 2 * self.base_crossings

    @property
    def dart_count(self) -> int:
        return 8 * self.base_crossings

    def deck(self, x: int) -> int:
        return x ^ 1

    def vertex_of(self, x: int) -> int:
        """Cover vertex of cover dart x, encoded as 2 * crossing + sheet."""
        return ((x >> 3) << 1) | (x & 1)


@lru_cache(maxsize=2048)
def _cover_for_edges(edges: tuple[Edge, ...]) -> CoverScheme:
    c = len(edges) // 2
    n = 8 * c
    sigma = [0] * n
    for d in range(4 * c):
        base = d & ~3
        sigma[2 * d] = 2 * (base | ((d + 1) & 3))
        sigma[2 * d + 1] = 2 * (base | ((d - 1) & 3)) + 1
    theta = [0] * n
    cover_edges = []
    for e in edges:
        a, b = e.darts
        if e.sign > 0:
            lifts = ((2 * a, 2 * b), (2 * a + 1, 2 * b + 1))
        else:
            lifts = ((2 * a, 2 * b + 1), (2 * a + 1, 2 * b))
        for x, y in lifts:
            theta[x] = y
            theta[y] = x
            cover_edges.append((x, y))
    # Connectivity over cover vertices.
    adj: list[list[int]] = [[] for _ in range(2 * c)]
    for x, y in cover_edges:
        u = ((x >> 3) << 1) | (x & 1)
        v = ((y >> 3) << 1) | (y & 1)
        adj[u].append(v)
        adj[v].append(u)
    reached = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    return CoverScheme(c, tuple(sigma), tuple(theta), tuple(cover_edges),
                       len(reached) == 2 * c)


def orientation_double_cover(d: EmbeddingScheme) -> CoverScheme:
    """Orientation double cover of the diagram's surface."""
    return _cover_for_edges(d.edges)


@dataclass(frozen=True)
class Region:
    """One region of the surface complement.

    ``corner_counts[v]`` is how many corners of the region sit at
    crossing v (the counts at a crossing sum to 4 over all regions), and
    bit e of ``parity_bits`` is the mod-2 number of times the region's
    boundary runs along edge e.
    """

    corner_counts: tuple[int, ...]
    parity_bits: int


@dataclass(frozen=True)
class FaceStructure:
    """Cover faces, their pairing, and the resulting base regions.

    Regions are ordered by the least cover dart they touch, which sorts
    by base dart first and untwisted sheet first.
    """

    crossing_count: int
    edge_count: int
    regions: tuple[Region, ...]
    face_darts: tuple[tuple[int, ...], ...]
    face_region: tuple[int, ...]
    face_partner: tuple[int, ...]
    plus_face: tuple[int, ...]

    @property
    def region_count(self) -> int:
        return len(self.regions)

    def region_of_side(self, dart: int) -> int:
        """Region bordering the side of dart's edge named by the dart."""
        return self.face_region[self.plus_face[dart]]

    def sides_of_edge(self, scheme: EmbeddingScheme, e: int) -> tuple[int, int]:
        """The two regions flanking edge e (equal when self-adjacent)."""
        a, b = scheme.edges[e].darts
        hits = sorted(self.face_region[self.plus_face[d]] for d in (a, b))
        twins = sorted(self.face_region[self.face_partner[self.plus_face[d]]]
                       for d in (a, b))
        joint = sorted(hits + twins)
        if joint[0] == joint[1] and joint[2] == joint[3]:
            return joint[0], joint[2]
        raise RuntimeError(f"edge {e}: sides do not pair up ({joint})")


@lru_cache(maxsize=2048)
def _faces_for_edges(edges: tuple[Edge, ...]) -> FaceStructure:
    cover = _cover_for_edges(edges)
    c = cover.base_crossings
    n = cover.dart_count
    nxt = [cover.sigma[cover.theta[x]] for x in range(n)]
    face_of = [-1] * n
    face_darts: list[tuple[int, ...]] = []
    for start in range(n):
        if face_of[start] >= 0:
            continue
        fid = len(face_darts)
        orbit = []
        x = start
        while face_of[x] < 0:
            face_of[x] = fid
            orbit.append(x)
            x = nxt[x]
        if x != start:
            raise RuntimeError("face walk did not close at its starting dart")
        face_darts.append(tuple(orbit))
    # Pair each cover face with its mirror; the answer must not depend on
    # the representative dart.
    partner = []
    for fid, orbit in enumerate(face_darts):
        images = {face_of[cover.theta[cover.deck(x)]] for x in orbit}
        if len(images) != 1:
            raise RuntimeError(f"face pairing is not well defined for face {fid}")
        mate = images.pop()
        if mate == fid:
            raise RuntimeError(f"face {fid} is paired with itself")
        partner.append(mate)
    for fid, mate in enumerate(partner):
        if partner[mate] != fid:
            raise RuntimeError("face pairing is not an involution")

    edge_total = len(edges)
    regions = []
    face_region = [-1] * len(face_darts)
    for fid in range(len(face_darts)):
        if face_region[fid] >= 0:
            continue
        rid = len(regions)
        face_region[fid] = rid
        face_region[partner[fid]] = rid
        corners = [0] * c
        parity = 0
        for x in face_darts[fid]:
            base = x >> 1
            corners[base >> 2] += 1
            parity ^= 1 << _edge_index(edges, base)
        regions.append(Region(tuple(corners), parity))
    plus_face = tuple(face_of[2 * d] for d in range(4 * c))
    return FaceStructure(c, edge_total, tuple(regions), tuple(face_darts),
                         tuple(face_region), tuple(partner), plus_face)


@lru_cache(maxsize=2048)
def _edge_lookup(edges: tuple[Edge, ...]) -> tuple[int, ...]:
    table = [0] * (2 * len(edges))
    for j, e in enumerate(edges):
        table[e.darts[0]] = j
        table[e.darts[1]] = j
    return tuple(table)


def _edge_index(edges: tuple[Edge, ...], dart: int) -> int:
    return _edge_lookup(edges)[dart]


def faces(d: EmbeddingScheme) -> FaceStructure:
    """Regions of the diagram's complement, with corners and edge parities."""
    return _faces_for_edges(d.edges)


@dataclass(frozen=True)
class SurfaceInfo:
    euler_characteristic: int
    orientable: bool
    genus: int
    h1_dim: int


def surface_info(d: EmbeddingScheme) -> SurfaceInfo:
    """Euler characteristic, orientability, genus and dim H_1 over GF(2)."""
    r = faces(d).region_count
    chi = r - d.crossing_count
    orientable = not orientation_double_cover(d).connected
    if orientable:
        if chi % 2:
            raise RuntimeError("orientable surface with odd Euler characteristic")
        genus = (2 - chi) // 2
    else:
        genus = 2 - chi
    return SurfaceInfo(chi, orientable, genus, 2 - chi)


@dataclass(frozen=True)
class Component:
    """A link component: the edges it traverses and its crossing passages.

    ``passages`` lists (crossing, through_pair) in traversal order; each
    through-pair of the diagram is consumed by exactly one passage.
    """

    edges: tuple[int, ...]
    passages: tuple[tuple[int, int], ...]


@lru_cache(maxsize=2048)
def _components_for_edges(edges: tuple[Edge, ...]) -> tuple[Component, ...]:
    c = len(edges) // 2
    lookup = _edge_lookup(edges)
    theta = [0] * (4 * c)
    for e in edges:
        a, b = e.darts
        theta[a] = b
        theta[b] = a
    through = lambda d: (d & ~3) | ((d + 2) & 3)
    visited = [False] * (4 * c)
    out = []
    for start in range(4 * c):
        if visited[start]:
            continue
        walk = []
        passages = []
        d = start
        while not visited[d]:
            visited[d] = True
            visited[through(d)] = True
            passages.append((d >> 2, d & 1))
            walk.append(lookup[through(d)])
            d = theta[through(d)]
        if d != start:
            raise RuntimeError("component walk did not close at its starting dart")
        out.append(Component(tuple(walk), tuple(passages)))
    out.sort(key=lambda comp: min(comp.edges))
    return tuple(out)


def components(d: EmbeddingScheme) -> tuple[Component, ...]:
    """Link components, ordered by their least edge index."""
    return _components_for_edges(d.edges)


def import_pd(code: Sequence[Sequence]) -> EmbeddingScheme:
    """Build a scheme from a planar-diagram code.

    Crossing i binds darts 4i..4i+3 to the four labels in listed order;
    equal labels are joined into sign +1 edges.  The first listed strand
    goes under, so every over flag is 1.  Each label must occur exactly
    twice.
    """
    if len(code) == 0:
        raise DiagramFormatError("pd code must list at least one crossing")
    first_seen: dict[object, int] = {}
    pairs: dict[object, tuple[int, int]] = {}
    order: list[object] = []
    for i, tup in enumerate(code):
        labels = list(tup)
        if len(labels) != 4:
            raise DiagramFormatError(f"pd crossing {i} must list exactly 4 labels")
        for k, label in enumerate(labels):
            dart = 4 * i + k
            if label in pairs:
                raise DiagramFormatError(f"pd label {label!r} occurs more than twice")
            if label in first_seen:
                pairs[label] = (first_seen.pop(label), dart)
            else:
                first_seen[label] = dart
                order.append(label)
    if first_seen:
        missing = ", ".join(repr(l) for l in sorted(first_seen, key=repr))
        raise DiagramFormatError(f"pd labels occurring once: {missing}")
    edges = tuple(Edge(pairs[label], 1) for label in order)
    return EmbeddingScheme((1,) * len(code), edges)


def _require_keys(obj: dict, keys: set[str], what: str) -> None:
    if set(obj) != keys:
        raise DiagramFormatError(
            f"{what} must have exactly the keys {sorted(keys)}, got {sorted(obj)}")


def parse_diagram(text: str) -> EmbeddingScheme:
    """Parse a diagram document (strict; unknown keys are rejected).

    Two top-level shapes are accepted:
      {"crossings": [{"rotation": [...], "over": 0|1}, ...],
       "edges": [{"darts": [a, b], "sign": 1|-1}, ...]}
    or {"pd": [[a, b, c, d], ...]}.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DiagramFormatError(f"invalid JSON: {err}") from None
    if not isinstance(doc, dict):
        raise DiagramFormatError("top-level document must be an object")
    if set(doc) == {"pd"}:
        if not isinstance(doc["pd"], list):
            raise DiagramFormatError("pd must be a list of 4-label crossings")
        return import_pd(doc["pd"])
    _require_keys(doc, {"crossings", "edges"}, "diagram document")
    if not isinstance(doc["crossings"], list) or not isinstance(doc["edges"], list):
        raise DiagramFormatError("crossings and edges must be lists")
    raw_crossings = []
    for i, entry in enumerate(doc["crossings"]):
        if not isinstance(entry, dict):
            raise DiagramFormatError(f"crossing {i} must be an object")
        _require_keys(entry, {"rotation", "over"}, f"crossing {i}")
        rot = entry["rotation"]
        if not isinstance(rot, list) or len(rot) != 4 or not all(isinstance(v, int) for v in rot):
            raise DiagramFormatError(f"crossing {i}: rotation must be a list of 4 dart ids")
        if not isinstance(entry["over"], int) or isinstance(entry["over"], bool):
            raise DiagramFormatError(f"crossing {i}: over must be an integer")
        raw_crossings.append((rot, entry["over"]))
    raw_edges = []
    for j, entry in enumerate(doc["edges"]):
        if not isinstance(entry, dict):
            raise DiagramFormatError(f"edge {j} must be an object")
        _require_keys(entry, {"darts", "sign"}, f"edge {j}")
        darts = entry["darts"]
        if (not isinstance(darts, list) or len(darts) != 2
                or not all(isinstance(v, int) for v in darts)):
            raise DiagramFormatError(f"edge {j}: darts must be a list of 2 dart ids")
        if not isinstance(entry["sign"], int) or isinstance(entry["sign"], bool):
            raise DiagramFormatError(f"edge {j}: sign must be an integer")
        raw_edges.append(((darts[0], darts[1]), entry["sign"]))
    return validate(raw_crossings, raw_edges)


def serialize_diagram(d: EmbeddingScheme) -> str:
    """Serialize a scheme; the output parses back to an equal scheme."""
    doc = {
        "crossings": [
            {"rotation": [4 * i + k for k in range(4)], "over": d.overs[i]}
            for i in range(d.crossing_count)
        ],
        "edges": [
            {"darts": [e.darts[0], e.darts[1]], "sign": e.sign}
            for e in d.edges
        ],
    }
    return json.dumps(doc, indent=2)
