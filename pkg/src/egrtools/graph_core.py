"""Simple-graph data model, exact girth/cycle-count verifiers, and
graph6 I/O.

Cycle counts are computed by distance-pruned depth-first path
enumeration, never by matrix heuristics: edge-girth-regularity demands
exact per-edge counts.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass


class Graph:
    """Undirected simple graph on vertices 0..n-1 with sorted adjacency
    lists and optional per-vertex labels (geometric provenance tags).

    Equality and hashing consider adjacency only; labels are metadata.
    """

    __slots__ = ("adj", "labels")

    def __init__(self, adj, labels=None):
        adj = [sorted(neigh) for neigh in adj]
        n = len(adj)
        seen = []
        for u, neigh in enumerate(adj):
            prev = -1
            for v in neigh:
                if v == u:
                    raise ValueError(f"loop at vertex {u}")
                if v == prev:
                    raise ValueError(f"parallel edge {u}-{v}")
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                prev = v
            seen.append(set(neigh))
        for u in range(n):
            for v in seen[u]:
                if u not in seen[v]:
                    raise ValueError(f"asymmetric adjacency {u}-{v}")
        if labels is not None and len(labels) != n:
            raise ValueError("labels length must equal vertex count")
        self.adj = adj
        self.labels = list(labels) if labels is not None else None

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj, labels)

    @property
    def n(self) -> int:
        return len(self.adj)

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self):
        for u, neigh in enumerate(self.adj):
            for v in neigh:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(tuple(tuple(a) for a in self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


@dataclass(frozen=True)
class EgrSignature:
    """Verified egr(n, k, g, lambda) record."""

    n: int
    k: int
    g: int
    lam: int
    bipartite: bool

    def __post_init__(self):
        if not (self.n >= self.g >= 3):
            raise ValueError("need n >= g >= 3")
        if self.k < 3:
            raise ValueError("need degree k >= 3")
        if self.lam < 1:
            raise ValueError("need lambda >= 1")
        if self.bipartite and self.g % 2 != 0:
            raise ValueError("bipartite graphs have even girth")

    def __str__(self):
        tag = "bipartite " if self.bipartite else ""
        return f"{tag}egr({self.n}, {self.k}, {self.g}, {self.lam})"


class NotEdgeGirthRegular(Exception):
    """Verification failure report: which condition broke, with a witness.

    kind is one of "disconnected", "not_regular", "degree_too_small",
    "acyclic", "nonuniform_cycle_counts".  For nonuniform counts,
    ``details`` carries the min/max per-edge counts seen.
    """

    def __init__(self, kind: str, witness, message: str, details: dict | None = None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness
        self.details = details or {}


def bfs_distances(G: Graph, root: int, skip_edge=None) -> list:
    """BFS distances from root (math.inf when unreachable).  skip_edge,
    if given, is an edge (u, v) the search may not traverse."""
    dist = [math.inf] * G.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in G.adj[u]:
            if skip_edge and (u, v) in (skip_edge, skip_edge[::-1]):
                continue
            if dist[v] == math.inf:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance_layers(G: Graph, root: int) -> list[list[int]]:
    """Vertices of root's component grouped by BFS distance D_0, D_1, ..."""
    dist = bfs_distances(G, root)
    reach = [d for d in dist if d != math.inf]
    layers = [[] for _ in range(int(max(reach)) + 1)]
    for v, d in enumerate(dist):
        if d != math.inf:
            layers[int(d)].append(v)
    return layers


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return all(d != math.inf for d in bfs_distances(G, 0))


def bipartition(G: Graph):
    """A 2-coloring as a list of 0/1, or None if an odd cycle exists."""
    color = [None] * G.n
    for start in range(G.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in G.adj[u]:
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def girth(G: Graph):
    """Length of a shortest cycle, or math.inf for a forest.

    BFS from every vertex; a non-tree edge (u,w) seen from root r closes
    a walk of length dist[u]+dist[w]+1 through r, and the minimum over
    all roots and edges is exact.
    """
    best = math.inf
    for root in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in G.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def _count_paths(G: Graph, u: int, v: int, length: int, banned_edge) -> int:
    """Simple u->v paths of exactly ``length`` edges avoiding banned_edge,
    counted by DFS pruned with BFS distances to the target."""
    dist_v = bfs_distances(G, v, skip_edge=banned_edge)
    visited = [False] * G.n
    visited[u] = True
    bu, bv = banned_edge

    def dfs(c: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if c == v else 0
        total = 0
        for w in G.adj[c]:
            if visited[w] or (w == v and remaining > 1):
                continue
            if (c, w) in ((bu, bv), (bv, bu)):
                continue
            if dist_v[w] > remaining - 1:
                continue
            visited[w] = True
            total += dfs(w, remaining - 1)
            visited[w] = False
        return total

    return dfs(u, length)


def count_girth_cycles_through_edge(G: Graph, edge, g: int) -> int:
    """Number of distinct g-cycles containing the edge, where g must be
    the girth of G.  Each cycle corresponds to exactly one simple path of
    length g-1 between the endpoints that avoids the edge itself; paths
    are enumerated from the smaller endpoint."""
    if g != girth(G):
        raise ValueError(f"g={g} is not the girth of the graph")
    return _edge_cycle_count(G, edge, g)


def _edge_cycle_count(G: Graph, edge, g: int) -> int:
    u, v = min(edge), max(edge)
    if not G.has_edge(u, v):
        raise ValueError(f"{edge} is not an edge")
    return _count_paths(G, u, v, g - 1, (u, v))


def count_cycles_through_vertex(G: Graph, v: int, length: int) -> int:
    """Number of distinct cycles of the given length through vertex v.

    Cycles are vertex sets with cyclic adjacency; each is counted once by
    rooting at v and keeping only the orientation whose second vertex is
    smaller than its last.
    """
    if length < 3:
        raise ValueError("cycles have length >= 3")
    dist_v = bfs_distances(G, v)
    visited = [False] * G.n
    visited[v] = True

    def dfs(c: int, first: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if c in G.adj[v] and c > first else 0
        total = 0
        for w in G.adj[c]:
            if visited[w] or dist_v[w] > remaining:
                continue
            visited[w] = True
            total += dfs(w, first, remaining - 1)
            visited[w] = False
        return total

    total = 0
    for first in G.adj[v]:
        visited[first] = True
        total += dfs(first, first, length - 2)
        visited[first] = False
    return total


def verify_egr(G: Graph) -> EgrSignature:
    """Check Definition: connected, k-regular, and every edge on exactly
    lambda girth cycles.  Returns the verified signature, or raises
    NotEdgeGirthRegular with the first violated condition and a witness.
    """
    if G.n == 0:
        raise NotEdgeGirthRegular("disconnected", None, "empty graph")
    dist = bfs_distances(G, 0)
    for v, d in enumerate(dist):
        if d == math.inf:
            raise NotEdgeGirthRegular("disconnected", v, f"vertex {v} unreachable from 0")
    degrees = [G.degree(v) for v in range(G.n)]
    k = max(set(degrees), key=degrees.count)
    for v, d in enumerate(degrees):
        if d != k:
            raise NotEdgeGirthRegular(
                "not_regular", v, f"vertex {v} has degree {d}, expected {k}"
            )
    if k < 3:
        raise NotEdgeGirthRegular("degree_too_small", k, f"degree {k} < 3")
    g = girth(G)
    if g is math.inf:
        raise NotEdgeGirthRegular("acyclic", None, "graph has no cycle")
    lam = None
    low = high = None
    deviant = None
    for e in G.edges():
        c = _edge_cycle_count(G, e, g)
        if lam is None:
            lam = c
        low = c if low is None else min(low, c)
        high = c if high is None else max(high, c)
        if c != lam and deviant is None:
            deviant = (e, c)
    if deviant is not None:
        e, c = deviant
        raise NotEdgeGirthRegular(
            "nonuniform_cycle_counts",
            e,
            f"edge {e} lies on {c} girth cycles, expected {lam}",
            details={"min_count": low, "max_count": high},
        )
    return EgrSignature(n=G.n, k=k, g=g, lam=lam, bipartite=bipartition(G) is not None)


# ----------------------------------------------------------------------
# graph6 format (printable bytes 63..126, column-major upper triangle)
# ----------------------------------------------------------------------

GRAPH6_MAX_N = 10**6  # practical cap; the format itself allows 2^36 - 1
_G6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte {offset})")
        self.offset = offset


def graph6_encode(G: Graph) -> str:
    """Encode as a graph6 string (labels are not representable and are
    dropped)."""
    n = G.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoding capped at n <= {GRAPH6_MAX_N}")
    if n <= 62:
        head = [63 + n]
    elif n <= 258047:
        head = [126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)]
    else:
        head = [126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    for j in range(1, n):
        row = set(G.adj[j])
        for i in range(j):
            bits.append(1 if i in row else 0)
    body = []
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        body.append(63 + val)
    return bytes(head + body).decode("ascii")


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string (optional '>>graph6<<' header allowed).
    Raises Graph6Error with a byte offset on malformed input."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII byte in graph6 input", exc.start) from None
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside graph6 range 63..126", off)
    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated long-form vertex count", len(data))
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated very-long-form vertex count", len(data))
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        pos = 8
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - pos}", pos
        )
    bits = []
    for byte in data[pos:]:
        val = byte - 63
        bits.extend((val >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    for extra in range(nbits, len(bits)):
        if bits[extra]:
            raise Graph6Error("nonzero padding bits", pos + extra // 6)
    adj = [[] for _ in range(n)]
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i].append(j)
                adj[j].append(i)
            idx += 1
    return Graph(adj)
