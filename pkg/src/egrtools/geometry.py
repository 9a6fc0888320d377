"""Projective geometries over GF(q): PG(2,q), PG(3,q), the symplectic
generalized quadrangle W(q), pencils of ovoids from a Singer cycle,
tangent planes, and deterministic ovoid/spread search.

Points and hyperplanes are coordinate tuples of field-element indices,
normalized so the first nonzero coordinate is 1; all enumerations are
lexicographically sorted, so point/block indices are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .galois import Field


def normalize_point(F: Field, coords) -> tuple[int, ...]:
    """Canonical projective representative: scale so the first nonzero
    coordinate equals 1."""
    coords = tuple(coords)
    for c in coords:
        if c != 0:
            if c == 1:
                return coords
            s = F.inv(c)
            return tuple(F.mul(s, x) for x in coords)
    raise ValueError("the all-zero vector is not a projective point")


@lru_cache(maxsize=None)
def pg_points(dim: int, F: Field) -> tuple[tuple[int, ...], ...]:
    """All points of PG(dim, q) as canonical coordinate tuples, sorted
    lexicographically.  There are (q**(dim+1) - 1) // (q - 1) of them."""
    if dim not in (2, 3):
        raise ValueError("only PG(2,q) and PG(3,q) are supported")
    pts = []
    for lead in range(dim + 1):
        for tail in product(range(F.q), repeat=dim - lead):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return tuple(pts)


def dot(F: Field, a, x) -> int:
    """Bilinear form sum(a_i * x_i) in F."""
    s = 0
    for ai, xi in zip(a, x):
        s = F.add(s, F.mul(ai, xi))
    return s


def line_through(F: Field, x, y) -> tuple[tuple[int, ...], ...]:
    """The q+1 canonical points of the projective line spanned by x, y."""
    pts = {normalize_point(F, y)}
    for t in range(F.q):
        pts.add(normalize_point(F, tuple(F.add(xi, F.mul(t, yi)) for xi, yi in zip(x, y))))
    return tuple(sorted(pts))


@dataclass(frozen=True)
class IncidenceGeometry:
    """Point-block incidence structure with indexed points and blocks.

    points: canonical coordinate tuples, lexicographically sorted.
    blocks: sorted tuples of point indices, lexicographically sorted.
    block_coords: for PG(2,q), the dual coordinates of each line (None
        for geometries whose blocks are not hyperplanes).
    """

    points: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...]
    block_coords: tuple[tuple[int, ...], ...] | None = None

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def blocks_through(self) -> list[list[int]]:
        """For each point index, the indices of blocks containing it."""
        through = [[] for _ in self.points]
        for b, blk in enumerate(self.blocks):
            for p in blk:
                through[p].append(b)
        return through


@lru_cache(maxsize=None)
def pg2_geometry(F: Field) -> IncidenceGeometry:
    """The projective plane PG(2,q): q^2+q+1 points and lines, incidence
    sum(a_i x_i) = 0."""
    points = pg_points(2, F)
    index = {pt: i for i, pt in enumerate(points)}
    duals = pg_points(2, F)
    blocks = []
    for a in duals:
        blocks.append(tuple(sorted(index[x] for x in points if dot(F, a, x) == 0)))
    order = sorted(range(len(blocks)), key=lambda i: blocks[i])
    return IncidenceGeometry(
        points=points,
        blocks=tuple(blocks[i] for i in order),
        block_coords=tuple(duals[i] for i in order),
    )


@lru_cache(maxsize=None)
def symplectic_gq(F: Field) -> IncidenceGeometry:
    """The generalized quadrangle W(q): all points of PG(3,q) together with
    the lines that are totally isotropic for the alternating form
    <x,y> = x0*y1 - x1*y0 + x2*y3 - x3*y2."""
    points = pg_points(3, F)
    index = {pt: i for i, pt in enumerate(points)}

    def form(x, y):
        t1 = F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]))
        t2 = F.sub(F.mul(x[2], y[3]), F.mul(x[3], y[2]))
        return F.add(t1, t2)

    blocks = set()
    npts = len(points)
    for i in range(npts):
        x = points[i]
        for j in range(i + 1, npts):
            y = points[j]
            if form(x, y) == 0:
                blocks.add(tuple(sorted(index[z] for z in line_through(F, x, y))))
    q = F.q
    blocks = tuple(sorted(blocks))
    if len(blocks) != (q + 1) * (q * q + 1):
        raise ArithmeticError("W(q) line count mismatch; symplectic form implementation is broken")
    return IncidenceGeometry(points=points, blocks=blocks)


@lru_cache(maxsize=None)
def singer_pencil(F: Field) -> tuple[tuple[int, ...], ...]:
    """Partition of the points of PG(3,q) into q+1 disjoint ovoids.

    PG(3,q) points are identified with GF(q^4)* / GF(q)*.  Multiplication
    by a generator w of GF(q^4)* induces a cyclic (Singer) permutation of
    the q^3+q^2+q+1 points; the orbits of its subgroup of order q^2+1
    (generated by the (q+1)-st power) are the pencil members.  Returned as
    q+1 sorted tuples of point indices into pg_points(3, F).

    The construction is verified before returning: the members partition
    the point set, each has q^2+1 points, and none contains three
    collinear points.  A failure raises ArithmeticError -- it would mean
    an arithmetic bug, not a mathematical possibility.
    """
    q = F.q
    E = F.extension(4)
    points = pg_points(3, F)
    index = {pt: i for i, pt in enumerate(points)}
    n = len(points)  # q^3 + q^2 + q + 1

    def point_of_exponent(t: int) -> int:
        return index[normalize_point(F, E.coords(E.pow(E.generator, t)))]

    members = []
    for r in range(q + 1):
        orbit = {point_of_exponent(r + m * (q + 1)) for m in range(q * q + 1)}
        if len(orbit) != q * q + 1:
            raise ArithmeticError("pencil member has wrong cardinality")
        members.append(tuple(sorted(orbit)))

    covered = set().union(*members)
    if len(covered) != n or sum(len(m) for m in members) != n:
        raise ArithmeticError("pencil members do not partition PG(3,q)")
    for member in members:
        _check_cap(F, points, member)
    return tuple(members)


def _check_cap(F: Field, points, member) -> None:
    """Raise unless no three points of the member are collinear."""
    coords_in_member = {points[i] for i in member}
    for a, b in combinations(member, 2):
        hits = sum(1 for z in line_through(F, points[a], points[b]) if z in coords_in_member)
        if hits > 2:
            raise ArithmeticError("pencil member contains three collinear points")


def tangent_plane(F: Field, ovoid, p: int) -> tuple[int, ...]:
    """The unique plane through point ``p`` meeting the ovoid only in ``p``.

    ``ovoid`` is an iterable of point indices into pg_points(3, F) forming
    a cap of size q^2+1; the plane is returned as canonical dual
    coordinates.  All q^2+q+1 planes through p are scanned and exactly one
    tangent plane is required, otherwise ValueError is raised (the input
    was not an ovoid).
    """
    points = pg_points(3, F)
    members = set(ovoid)
    if p not in members:
        raise ValueError("p must belong to the ovoid")
    x = points[p]
    found = None
    count = 0
    for a in pg_points(3, F):  # dual coordinates of all planes
        if dot(F, a, x) != 0:
            continue
        meets = sum(1 for i in members if dot(F, a, points[i]) == 0)
        if meets == 1:
            count += 1
            found = a
    if count != 1:
        raise ValueError(f"expected exactly one tangent plane through p, found {count}; the point set is not an ovoid")
    return found


def plane_points(F: Field, dual) -> tuple[int, ...]:
    """Indices of the PG(3,q) points on the plane with the given dual
    coordinates."""
    points = pg_points(3, F)
    return tuple(i for i, x in enumerate(points) if dot(F, dual, x) == 0)


def _gq_order(G: IncidenceGeometry) -> int:
    return len(G.blocks[0]) - 1


def _first_cover_solution(n_items: int, compat: list[int], target: int, cover_masks: list[int]):
    """Lexicographically first size-``target`` subset of 0..n_items-1 that is
    pairwise compatible and hits every cover mask, or None.

    ``compat[i]`` is a bitmask of items compatible with item i.
    ``cover_masks`` are bitmasks over items; every mask must intersect the
    chosen set (ovoids must meet every line, spreads must cover every
    point).  Depth-first in increasing index order, so the first solution
    found is the lexicographically smallest.
    """
    full = (1 << n_items) - 1
    chosen: list[int] = []
    result: list[int] | None = None

    def feasible(chosen_mask: int, cand: int) -> bool:
        if (len(chosen) + (cand.bit_count())) < target:
            return False
        reach = chosen_mask | cand
        return all(mask & reach for mask in cover_masks)

    def dfs(cand: int, chosen_mask: int) -> bool:
        nonlocal result
        if len(chosen) == target:
            result = list(chosen)
            return True
        if not feasible(chosen_mask, cand):
            return False
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            chosen.append(v)
            if dfs(cand & compat[v] & ~((1 << (v + 1)) - 1), chosen_mask | (1 << v)):
                return True
            chosen.pop()
        return False

    dfs(full, 0)
    return tuple(result) if result is not None else None


def ovoid_search(G: IncidenceGeometry):
    """Lexicographically smallest ovoid of a GQ of order (q,q): q^2+1
    pairwise non-collinear points.  Returns None when the exhaustive
    search finds none (e.g. W(q) for odd q)."""
    q = _gq_order(G)
    n = G.n_points
    collinear = [0] * n
    for blk in G.blocks:
        for a, b in combinations(blk, 2):
            collinear[a] |= 1 << b
            collinear[b] |= 1 << a
    full = (1 << n) - 1
    compat = [full & ~(collinear[v] | (1 << v)) for v in range(n)]
    line_masks = [sum(1 << p for p in blk) for blk in G.blocks]
    return _first_cover_solution(n, compat, q * q + 1, line_masks)


def spread_search(G: IncidenceGeometry):
    """Lexicographically smallest spread of a GQ of order (q,q): q^2+1
    pairwise disjoint lines.  Returns None when none exists."""
    q = _gq_order(G)
    m = G.n_blocks
    meets = [0] * m
    through = [[] for _ in range(G.n_points)]
    for b, blk in enumerate(G.blocks):
        for p in blk:
            through[p].append(b)
    for lines in through:
        for a, b in combinations(lines, 2):
            meets[a] |= 1 << b
            meets[b] |= 1 << a
    full = (1 << m) - 1
    compat = [full & ~(meets[b] | (1 << b)) for b in range(m)]
    point_masks = [sum(1 << b for b in lines) for lines in through]
    return _first_cover_solution(m, compat, q * q + 1, point_masks)
