from collections import defaultdict
from itertools import product

import pytest

from edgezeta.oracle import (
    build_x2,
    closed_walk_counts,
    enumerate_isotropic,
    enumerate_subspaces,
    expected_vertex_count,
    gaussian_binomial,
    geodesic_adjacent,
    isotropic_count,
    subspace_from_rows,
)
from edgezeta.typeorbits import next_type
from edgezeta.weyl import build_root_system


def brute_subspace_count(n, q, k):
    """Count k-dim subspaces as row spaces of all k x n matrices of rank k."""
    seen = set()
    for entries in product(range(q), repeat=n * k):
        rows = [entries[r * n : (r + 1) * n] for r in range(k)]
        V = subspace_from_rows(rows, q, n)
        if V.dim == k:
            seen.add(V.basis)
    return len(seen)


def e(i, n):
    return [1 if j == i else 0 for j in range(n)]


def test_enumeration_examples():
    assert len(enumerate_subspaces(3, 2, 1)) == 7
    assert len(enumerate_isotropic(4, 2, 1)) == 15
    assert len(enumerate_isotropic(4, 2, 2)) == 15


@pytest.mark.parametrize("n,q,k", [(3, 2, 1), (3, 2, 2), (4, 2, 2), (3, 3, 1), (3, 3, 2)])
def test_subspace_counts(n, q, k):
    subs = enumerate_subspaces(n, q, k)
    assert len(subs) == len({V.basis for V in subs}) == gaussian_binomial(n, k, q)
    assert len(subs) == brute_subspace_count(n, q, k)


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2)])
def test_isotropic_counts(n, q):
    for k in range(1, n + 1):
        assert len(enumerate_isotropic(2 * n, q, k)) == isotropic_count(n, k, q)


def test_non_prime_rejected():
    with pytest.raises(ValueError, match="prime fields only"):
        enumerate_subspaces(3, 4, 1)
    with pytest.raises(ValueError, match="prime fields only"):
        build_x2("A", 3, 4)
    with pytest.raises(ValueError, match="supported range"):
        build_x2("A", 5, 2)


def test_geodesic_examples_type_a():
    n, p = 3, 2
    V = subspace_from_rows([e(0, n), e(1, n)], p, n)
    A = subspace_from_rows([e(0, n)], p, n)
    C = subspace_from_rows([e(1, n)], p, n)
    assert geodesic_adjacent("A", A, V, C)
    assert not geodesic_adjacent("A", A, V, A)
    W = subspace_from_rows([e(0, n), e(2, n)], p, n)
    # both above A: two planes through a point of P^2 meeting only there
    assert geodesic_adjacent("A", W, A, V)
    with pytest.raises(ValueError):
        geodesic_adjacent("A", C, W, A)
    # one neighbour below, one above (needs GL_4)
    m = 4
    P = subspace_from_rows([e(0, m)], p, m)
    L = subspace_from_rows([e(0, m), e(1, m)], p, m)
    H = subspace_from_rows([e(0, m), e(1, m), e(2, m)], p, m)
    assert not geodesic_adjacent("A", P, L, H)


def test_geodesic_example_type_c():
    # basis order e1, e2, f2, f1
    N, p = 4, 2
    e1, e2, f2 = e(0, N), e(1, N), e(2, N)
    V = subspace_from_rows([e1], p, N)
    A = subspace_from_rows([e1, e2], p, N)
    C = subspace_from_rows([e1, f2], p, N)
    assert geodesic_adjacent("C", A, V, C)
    assert not geodesic_adjacent("C", A, V, A)


@pytest.mark.parametrize(
    "fam,n,q,counts",
    [("A", 3, 2, (14, 21, 42)), ("C", 2, 2, (30, 45, 90)), ("A", 4, 2, (65, 315, 630))],
)
def test_skeleton_sizes(fam, n, q, counts):
    sk = build_x2(fam, n, q)
    assert (len(sk.vertices), len(sk.edges), len(sk.x2_vertices)) == counts
    assert len(sk.vertices) == expected_vertex_count(fam, n, q)


@pytest.mark.parametrize("fam,n,q", [("A", 3, 2), ("A", 3, 3), ("A", 4, 2), ("C", 2, 2), ("C", 2, 3)])
def test_x2_structure(fam, n, q):
    sk = build_x2(fam, n, q)
    rs = build_root_system(fam, n - 1 if fam == "A" else n)
    outdeg = defaultdict(set)
    for e_ in range(len(sk.x2_vertices)):
        t = sk.x2_type(e_)
        outdeg[t].add(len(sk.x2_successors(e_)))
        for f in sk.x2_successors(e_):
            # X2 edges follow the next-type map
            assert sk.x2_type(f) == next_type(rs, t)
            assert sk.x2_vertices[e_][1] == sk.x2_vertices[f][0]
    # the group acts transitively on each type class
    assert all(len(v) == 1 for v in outdeg.values())


def naive_traces(sk, lmax):
    n = len(sk.x2_vertices)
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in sk.x2_successors(i):
            A[i][j] = 1
    P = [row[:] for row in A]
    out = []
    for _ in range(lmax):
        out.append(sum(P[i][i] for i in range(n)))
        P = [[sum(P[i][k] * A[k][j] for k in range(n) if P[i][k]) for j in range(n)] for i in range(n)]
    return out


def test_walk_counts_against_matrix_powers():
    sk = build_x2("A", 3, 2)
    assert closed_walk_counts(sk, 12) == naive_traces(sk, 12)


def test_walk_counts_by_orbit_add_up():
    sk = build_x2("C", 2, 3)
    full = closed_walk_counts(sk, 10)
    part = closed_walk_counts(sk, 10, types={(1, 2), (2, 1)})
    assert full == part
    assert closed_walk_counts(sk, 10, types=set()) == [0] * 10


def test_odd_lengths_vanish():
    # only 2-partite and 6-partite orbits exist for GL_3 and Sp_4
    for fam, n in [("A", 3), ("C", 2)]:
        counts = closed_walk_counts(build_x2(fam, n, 2), 12)
        assert all(counts[L - 1] == 0 for L in range(1, 13) if L % 2)


def test_dump_format():
    sk = build_x2("A", 3, 2)
    text = sk.dump()
    lines = text.splitlines()
    assert lines[0].startswith("# X2 of A3 over F_2")
    edges = [ln for ln in lines if not ln.startswith("#")]
    assert len(edges) == sk.x2_edge_count
    src, dst = map(int, edges[0].split())
    assert dst in sk.x2_successors(src)


def test_lmax_limit():
    with pytest.raises(ValueError):
        closed_walk_counts(build_x2("A", 3, 2), 21)


@pytest.mark.parametrize("fam,n,q", [("C", 3, 2), ("A", 4, 3)])
def test_larger_buildings_match_closed_form(fam, n, q):
    # beyond the acceptance set: Sp_6(F_2) exercises the c = 2 orbit with k = 1
    from edgezeta.zeta import full_edge_zeta, predicted_closed_walks

    counts = closed_walk_counts(build_x2(fam, n, q), 12)
    factors = full_edge_zeta(fam, n - 1 if fam == "A" else n)
    assert counts == [predicted_closed_walks(factors, L, q) for L in range(1, 13)]
