import pytest

from egrtools.bounds import certify_extremal
from egrtools.constructions import (
    build_biaffine,
    build_gq_truncation,
    build_ovoid_spread,
    build_pencil_graph,
    complete_bipartite,
    cycle_graph,
    named_graph,
)
from egrtools.galois import GF
from egrtools.geometry import symplectic_gq
from egrtools.graph_core import bipartition, verify_egr

F = {2: GF(2), 3: GF(3), 4: GF(2, 2), 5: GF(5)}


@pytest.mark.parametrize("q", [3, 4, 5])
def test_biaffine_type1_signature(q):
    sig = verify_egr(build_biaffine(F[q], 1))
    assert (sig.n, sig.k, sig.g, sig.lam) == (2 * q * q, q, 6, (q - 1) ** 2 * (q - 2))
    assert sig.bipartite


@pytest.mark.parametrize("q", [3, 4, 5])
def test_biaffine_type2_signature(q):
    sig = verify_egr(build_biaffine(F[q], 2))
    assert (sig.n, sig.k, sig.g, sig.lam) == (2 * q * q - 2, q, 6, (q - 1) * (q * q - 3 * q + 3))
    assert sig.bipartite


@pytest.mark.parametrize("q", [3, 4])
def test_gq_truncation_signature(q):
    sig = verify_egr(build_gq_truncation(F[q]))
    assert (sig.n, sig.k, sig.g, sig.lam) == (2 * q**3, q, 8, (q - 1) ** 2 * ((q - 2) ** 2 + 1))
    assert sig.bipartite


def test_gq_truncation_deletion_counts():
    q = 3
    geom = symplectic_gq(F[q])
    G = build_gq_truncation(F[q])
    points_kept = sum(1 for lbl in G.labels if lbl[0] == "point")
    lines_kept = G.n - points_kept
    assert geom.n_points - points_kept == 1 + (q + 1) * q
    assert geom.n_blocks - lines_kept == q + 1 + q * q


def test_ovoid_spread_signature():
    sig = verify_egr(build_ovoid_spread(F[4]))
    assert (sig.n, sig.k, sig.g, sig.lam) == (136, 4, 8, 36)
    assert sig.bipartite


@pytest.mark.parametrize("q", [2, 3])
def test_pencil_signature(q):
    sig = verify_egr(build_pencil_graph(F[q]))
    n = q**3 + q**2 + q + 1
    assert (sig.n, sig.k, sig.g, sig.lam) == (2 * n, q * q + q + 1, 4, q**3 + q**2)
    assert sig.bipartite


def test_pencil_contains_diagonal_edges():
    G = build_pencil_graph(F[2])
    half = G.n // 2
    for p in range(half):
        assert G.has_edge(p, half + p)


def test_builders_reject_degenerate_q():
    with pytest.raises(ValueError):
        build_biaffine(F[2], 1)
    with pytest.raises(ValueError):
        build_gq_truncation(F[2])
    with pytest.raises(ValueError, match="no ovoid"):
        build_ovoid_spread(F[3])
    with pytest.raises(ValueError, match="degree 2"):
        build_ovoid_spread(F[2])
    with pytest.raises(ValueError):
        build_biaffine(F[3], 3)


def test_bipartition_respects_labels():
    for G in (
        build_biaffine(F[3], 1),
        build_biaffine(F[3], 2),
        build_gq_truncation(F[3]),
        build_ovoid_spread(F[4]),
        build_pencil_graph(F[2]),
    ):
        colors = bipartition(G)
        assert colors is not None
        sides = {lbl[0]: set() for lbl in G.labels}
        for v, lbl in enumerate(G.labels):
            sides[lbl[0]].add(colors[v])
        left, right = sorted(sides)
        assert sides[left] != sides[right]
        assert all(len(s) == 1 for s in sides.values())


def test_builders_are_deterministic():
    a = build_biaffine(F[3], 1)
    b = build_biaffine(F[3], 1)
    assert a.adj == b.adj and a.labels == b.labels
    assert build_pencil_graph(F[2]).adj == build_pencil_graph(F[2]).adj


def test_named_graphs():
    assert verify_egr(named_graph("petersen")).n == 10
    assert named_graph("heawood").n == 14
    assert named_graph("tutte_coxeter").n == 30
    assert named_graph("complete_bipartite(4)").n == 8
    assert named_graph("cycle(6)").n == 6
    with pytest.raises(ValueError, match="unknown graph name"):
        named_graph("kneser")


def test_named_graph_values():
    sig = verify_egr(named_graph("hoffman_singleton"))
    assert (sig.n, sig.k, sig.g, sig.lam) == (50, 7, 5, 36)
    k33 = verify_egr(complete_bipartite(3))
    assert (k33.n, k33.k, k33.g, k33.lam) == (6, 3, 4, 4)


def test_heawood_is_extremal_reference():
    sig = verify_egr(named_graph("heawood"))
    assert certify_extremal(sig).certified


def test_cycle_graph_bounds_args():
    with pytest.raises(ValueError):
        cycle_graph(2)
