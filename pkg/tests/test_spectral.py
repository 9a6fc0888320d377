import random
from fractions import Fraction

import numpy as np
import pytest

from egrtools.constructions import (
    build_biaffine,
    build_gq_truncation,
    build_pencil_graph,
    complete_bipartite,
    heawood,
    petersen,
    tutte_coxeter,
)
from egrtools.galois import GF
from egrtools.graph_core import Graph, verify_egr
from egrtools.spectral import (
    catalan,
    certify_tight_spectrum,
    eigenvalues,
    tree_walk_count,
    tree_walk_polynomial,
    walk_moments,
)
from oracles import closed_walks_at_root, truncated_tree

# closed-walk polynomials in the degree k, as printed lists of coefficients
PRINTED_POLYS = {
    2: lambda k: k,
    4: lambda k: 2 * k**2 - k,
    6: lambda k: 5 * k**3 - 6 * k**2 + 2 * k,
    8: lambda k: 14 * k**4 - 28 * k**3 + 20 * k**2 - 5 * k,
}


def test_moments_basics_petersen():
    m = walk_moments(petersen(), 6)
    assert m[0] == 10
    assert m[1] == 0
    assert m[2] == 30  # 2|E|
    assert m[4] == 150  # n * c(4,3); girth 5 so all closed 4-walks are tree-like
    assert m[5] == 120  # n * k * lambda
    assert m[6] == 990


def test_moments_match_eigenvalue_powers():
    for G in (petersen(), complete_bipartite(4), heawood(), build_pencil_graph(GF(2))):
        m = walk_moments(G, 8)
        vals = eigenvalues(G).values
        k = G.degree(0)
        for length in range(9):
            approx = sum(v**length for v in vals)
            assert abs(approx - m[length]) <= 1e-6 * G.n * k**length + 1e-9


def test_trivial_lengths():
    assert walk_moments(petersen(), 0) == [10]
    assert tree_walk_count(0, 5) == 1


def test_moments_caps():
    with pytest.raises(ValueError):
        walk_moments(petersen(), 17)


@pytest.mark.parametrize("length", [2, 4, 6, 8])
def test_tree_walks_match_printed_polynomials(length):
    for k in range(3, 11):
        assert tree_walk_count(length, k) == PRINTED_POLYS[length](k)


def test_tree_walks_odd_lengths_vanish():
    assert all(tree_walk_count(length, 5) == 0 for length in (1, 3, 5, 7, 9))


def test_tree_walks_against_explicit_tree():
    for k in (3, 4, 6):
        for length in (2, 4, 6, 8):
            T = truncated_tree(k, depth=length // 2)
            assert tree_walk_count(length, k) == closed_walks_at_root(T, 0, length)


def test_tree_walk_polynomial_coefficients():
    assert tree_walk_polynomial(2) == [0, 1]
    assert tree_walk_polynomial(4) == [0, -1, 2]
    assert tree_walk_polynomial(6) == [0, 2, -6, 5]
    assert tree_walk_polynomial(8) == [0, -5, 20, -28, 14]


def test_tree_walk_polynomial_leading_coefficient_is_catalan():
    for length in (2, 4, 6, 8, 10, 12):
        assert tree_walk_polynomial(length)[-1] == catalan(length // 2)


def test_catalan_values():
    assert [catalan(s) for s in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_catalan_sandwich():
    for s in range(1, 7):
        for k in range(3, 11):
            c = tree_walk_count(2 * s, k)
            assert catalan(s) * k * (k - 1) ** (s - 1) <= c <= catalan(s) * k**s


def test_moments_below_girth_are_tree_walks():
    for G in (petersen(), heawood(), tutte_coxeter()):
        sig = verify_egr(G)
        m = walk_moments(G, sig.g - 1)
        for length in range(sig.g):
            assert m[length] == G.n * tree_walk_count(length, sig.k)


def test_girth_moment_identity():
    for G in (petersen(), heawood(), tutte_coxeter(), build_pencil_graph(GF(2))):
        sig = verify_egr(G)
        m = walk_moments(G, sig.g)
        expected = sig.n * sig.k * sig.lam
        if sig.g % 2 == 0:
            expected += sig.n * tree_walk_count(sig.g, sig.k)
        assert m[sig.g] == expected


def test_eigenvalues_petersen():
    spec = eigenvalues(petersen())
    assert [(round(v, 6), m) for v, m in spec.groups] == [(3.0, 1), (1.0, 5), (-2.0, 4)]


def test_eigenvalues_k33():
    spec = eigenvalues(complete_bipartite(3))
    assert [(round(v, 6), m) for v, m in spec.groups] == [(3.0, 1), (0.0, 4), (-3.0, 1)]


def test_eigenvalues_regular_top_and_symmetry():
    for G in (heawood(), build_biaffine(GF(3), 2)):
        spec = eigenvalues(G)
        k = G.degree(0)
        assert abs(spec.largest - k) < 1e-8
        assert abs(spec.smallest + k) < 1e-8  # bipartite: symmetric spectrum
        vals = np.array(spec.values)
        assert np.allclose(vals, -vals[::-1], atol=1e-8)


def test_eigenvalues_match_numpy():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(2, 24)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        G = Graph.from_edges(n, edges)
        A = np.zeros((n, n))
        for u, v in edges:
            A[u, v] = A[v, u] = 1.0
        ours = np.array(eigenvalues(G).values)
        ref = np.sort(np.linalg.eigvalsh(A))[::-1]
        assert np.allclose(ours, ref, atol=1e-8)


def test_pencil_spectrum_q2():
    spec = eigenvalues(build_pencil_graph(GF(2)))
    assert [(round(v, 6), m) for v, m in spec.groups] == [(7.0, 1), (2.0, 14), (-2.0, 14), (-7.0, 1)]


def test_tight_spectrum_certificates():
    pen = build_pencil_graph(GF(2))
    res = certify_tight_spectrum(pen, verify_egr(pen))
    assert res.certified
    assert res.lambda2_squared == Fraction(30 * 7 - 2 * 49, 28) == 4

    k33 = complete_bipartite(3)
    res = certify_tight_spectrum(k33, verify_egr(k33))
    assert res.certified
    assert res.lambda2_squared == 0


def test_tight_spectrum_refusals():
    pet = petersen()
    res = certify_tight_spectrum(pet, verify_egr(pet))
    assert not res.certified
    assert "precondition" in res.reason

    hw = heawood()  # bipartite but girth 6
    res = certify_tight_spectrum(hw, verify_egr(hw))
    assert not res.certified


def test_tight_spectrum_accepts_the_3_cube():
    # Q3 = egr(8,3,4,2) meets the girth-4 bound with equality and its
    # spectrum {+-3, +-1^3} has the tight four-value shape
    cube = Graph.from_edges(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    sig = verify_egr(cube)
    assert (sig.n, sig.k, sig.g, sig.lam) == (8, 3, 4, 2)
    assert certify_tight_spectrum(cube, sig).certified


def test_tight_spectrum_rejects_loose_graph():
    # Q4 = egr(16,4,4,3) has spectrum {4, 2^4, 0^6, -2^4, -4}: five distinct
    # eigenvalues, so it cannot match the tight four-value pattern
    q4 = Graph.from_edges(16, [(i, i ^ (1 << b)) for i in range(16) for b in range(4) if i < i ^ (1 << b)])
    sig = verify_egr(q4)
    assert (sig.n, sig.k, sig.g, sig.lam) == (16, 4, 4, 3)
    res = certify_tight_spectrum(q4, sig)
    assert not res.certified
    assert "deviates" in res.reason


def test_moment_identity_on_gq_truncation():
    G = build_gq_truncation(GF(3))
    sig = verify_egr(G)
    m = walk_moments(G, 8)
    assert m[8] == sig.n * tree_walk_count(8, 3) + sig.n * 3 * sig.lam
    assert m[2] == sig.n * sig.k
    assert all(m[length] == 0 for length in (1, 3, 5, 7))


def test_jacobi_convergence_reports_residual():
    # the solver must converge on everything we build; force the cap to
    # exercise the failure path
    from egrtools.spectral import _jacobi_eigenvalues

    A = np.zeros((6, 6))
    for u, v in complete_bipartite(3).edges():
        A[u, v] = A[v, u] = 1.0
    with pytest.raises(ArithmeticError, match="residual"):
        _jacobi_eigenvalues(A, tol=1e-10, max_sweeps=0)
