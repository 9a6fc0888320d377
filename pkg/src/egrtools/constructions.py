"""Edge-girth-regular graph families built from finite geometries, plus
the named reference graphs used throughout the test suite.

Every builder is a pure function of its parameters: deleted flags and
base points are always the lexicographically smallest valid choice, so
two runs produce identical adjacency lists.
"""

from __future__ import annotations

import re

from .galois import Field
from .geometry import (
    IncidenceGeometry,
    ovoid_search,
    pg2_geometry,
    pg_points,
    singer_pencil,
    spread_search,
    symplectic_gq,
    tangent_plane,
)
from .graph_core import Graph

FAMILIES = ("biaffine1", "biaffine2", "gq_truncation", "ovoid_spread", "pencil", "named")


def levi_graph(geom: IncidenceGeometry, keep_points=None, keep_blocks=None,
               point_label="point", block_label="line") -> Graph:
    """Bipartite incidence graph of a geometry, optionally restricted to a
    subset of points/blocks.  Point vertices come first and carry their
    coordinates as labels; block vertices carry their point-coordinate
    tuples."""
    pts = sorted(keep_points) if keep_points is not None else list(range(geom.n_points))
    blks = sorted(keep_blocks) if keep_blocks is not None else list(range(geom.n_blocks))
    pt_pos = {p: i for i, p in enumerate(pts)}
    labels = [(point_label, geom.points[p]) for p in pts]
    labels += [(block_label, tuple(geom.points[p] for p in geom.blocks[b])) for b in blks]
    edges = []
    for j, b in enumerate(blks):
        for p in geom.blocks[b]:
            if p in pt_pos:
                edges.append((pt_pos[p], len(pts) + j))
    return Graph.from_edges(len(pts) + len(blks), edges, labels)


def build_biaffine(F: Field, kind: int) -> Graph:
    """Incidence graph of a biaffine plane of order q.

    Starting from PG(2,q), delete a point P, a line l, all lines through
    P and all points on l; the flag (P,l) is incident for kind 1,
    non-incident for kind 2.  Gives a q-regular bipartite graph of girth 6
    on 2q^2 (kind 1) or 2q^2-2 (kind 2) vertices.
    """
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    if F.q < 3:
        raise ValueError("biaffine construction needs q >= 3 (q = 2 degenerates to degree 2)")
    geom = pg2_geometry(F)
    P = 0
    want = kind == 1
    ell = next(b for b, blk in enumerate(geom.blocks) if (P in blk) == want)
    dead_points = {P} | set(geom.blocks[ell])
    dead_blocks = {ell} | {b for b, blk in enumerate(geom.blocks) if P in blk}
    return levi_graph(
        geom,
        keep_points=[p for p in range(geom.n_points) if p not in dead_points],
        keep_blocks=[b for b in range(geom.n_blocks) if b not in dead_blocks],
    )


def build_gq_truncation(F: Field) -> Graph:
    """Truncated incidence graph of the symplectic quadrangle W(q).

    Pick the lexicographically smallest point P and the smallest line e0
    through it, then delete P, every point on a line through P, and every
    line meeting e0.  The survivor is a q-regular bipartite graph of
    order 2q^3 and girth 8.
    """
    if F.q < 3:
        raise ValueError("GQ truncation needs q >= 3 (q = 2 degenerates to degree 2)")
    geom = symplectic_gq(F)
    through = geom.blocks_through()
    P = 0
    lines_at_P = through[P]
    e0 = min(lines_at_P)
    dead_points = {pt for b in lines_at_P for pt in geom.blocks[b]}
    dead_blocks = {b for pt in geom.blocks[e0] for b in through[pt]}
    return levi_graph(
        geom,
        keep_points=[p for p in range(geom.n_points) if p not in dead_points],
        keep_blocks=[b for b in range(geom.n_blocks) if b not in dead_blocks],
    )


def build_ovoid_spread(F: Field) -> Graph:
    """Levi graph of W(q) minus an ovoid and a spread (q even, q >= 4):
    q-regular, bipartite, girth 8, order 2q(q^2+1)."""
    if F.q == 2:
        raise ValueError("q = 2 degenerates to degree 2")
    if F.q % 2 != 0:
        raise ValueError(f"W({F.q}) has no ovoid for odd q; construction unavailable")
    geom = symplectic_gq(F)
    ovoid = ovoid_search(geom)
    if ovoid is None:
        raise ValueError(f"no ovoid found in W({F.q})")
    spread = spread_search(geom)
    if spread is None:
        raise ValueError(f"no spread found in W({F.q})")
    return levi_graph(
        geom,
        keep_points=[p for p in range(geom.n_points) if p not in set(ovoid)],
        keep_blocks=[b for b in range(geom.n_blocks) if b not in set(spread)],
    )


def build_pencil_graph(F: Field) -> Graph:
    """Bipartite graph on two copies of the PG(3,q) point set, joining p
    on the left to r' on the right exactly when r lies on the tangent
    plane, at p, of the pencil ovoid through p.

    (q^2+q+1)-regular of girth 4; contains every diagonal edge (p, p')
    since each point lies on its own tangent plane.
    """
    points = pg_points(3, F)
    n = len(points)
    members = singer_pencil(F)
    member_of = {}
    for mem in members:
        for p in mem:
            member_of[p] = mem
    labels = [("left", pt) for pt in points] + [("right", pt) for pt in points]
    edges = []
    from .geometry import dot

    for p in range(n):
        plane = tangent_plane(F, member_of[p], p)
        for r in range(n):
            if dot(F, plane, points[r]) == 0:
                edges.append((p, n + r))
    return Graph.from_edges(2 * n, edges, labels)


# ----------------------------------------------------------------------
# named reference graphs
# ----------------------------------------------------------------------


def petersen() -> Graph:
    """Petersen graph: outer pentagon, inner pentagram, spokes."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + i))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def hoffman_singleton() -> Graph:
    """Hoffman-Singleton graph via the pentagon/pentagram construction:
    five pentagons P_h, five pentagrams Q_i, and vertex j of P_h joined
    to vertex h*i + j (mod 5) of Q_i."""
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, {(min(e), max(e)) for e in edges})


def heawood() -> Graph:
    """Heawood graph, as the incidence graph of the Fano plane."""
    from .galois import GF

    return levi_graph(pg2_geometry(GF(2)))


def tutte_coxeter() -> Graph:
    """Tutte-Coxeter graph (the 8-cage), as the incidence graph of W(2)."""
    from .galois import GF

    return levi_graph(symplectic_gq(GF(2)))


def complete_bipartite(k: int) -> Graph:
    if k < 1:
        raise ValueError("k must be positive")
    labels = [("left", i) for i in range(k)] + [("right", i) for i in range(k)]
    return Graph.from_edges(2 * k, [(i, k + j) for i in range(k) for j in range(k)], labels)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


_NAMED = {
    "petersen": petersen,
    "hoffman_singleton": hoffman_singleton,
    "heawood": heawood,
    "tutte_coxeter": tutte_coxeter,
}


def named_graph(name: str) -> Graph:
    """Reference graph by name: petersen, hoffman_singleton, heawood,
    tutte_coxeter, complete_bipartite(k), cycle(n)."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    m = re.fullmatch(r"(complete_bipartite|cycle)\((\d+)\)", key)
    if m:
        fn = complete_bipartite if m.group(1) == "complete_bipartite" else cycle_graph
        return fn(int(m.group(2)))
    raise ValueError(
        f"unknown graph name {name!r}; expected one of {sorted(_NAMED)}, "
        "complete_bipartite(k), or cycle(n)"
    )
