import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from edgezeta import _kernels_py, kernels

BACKENDS = kernels.available_backends()


def fraction_rank(rows, p):
    """Rank over F_p by fraction-free elimination (independent of the kernels)."""
    M = [[x % p for x in r] for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                # cross-multiply; the pivot is a unit mod p
                M[r] = [(a * M[rank][c] - M[r][c] * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


matrices = st.tuples(st.sampled_from([2, 3, 5, 7]), st.integers(1, 5), st.integers(1, 6)).flatmap(
    lambda t: st.tuples(
        st.just(t[0]),
        st.lists(st.lists(st.integers(-10, 10), min_size=t[2], max_size=t[2]), min_size=t[1], max_size=t[1]),
    )
)


@pytest.mark.parametrize("name", sorted(BACKENDS))
@given(data=matrices)
def test_rank_matches_reference(name, data):
    p, rows = data
    impl = BACKENDS[name]
    flat = [x for r in rows for x in r]
    assert kernels.rank_mod_p(flat, len(rows), len(rows[0]), p, impl=impl) == fraction_rank(rows, p)


@given(data=matrices)
def test_backends_agree_on_rref(data):
    p, rows = data
    flat = [x for r in rows for x in r]
    results = {
        name: kernels.rref_mod_p(flat, len(rows), len(rows[0]), p, impl=impl) for name, impl in BACKENDS.items()
    }
    assert len({repr(v) for v in results.values()}) == 1
    red, rank = results["python"]
    for row in red:
        lead = next(x for x in row if x)
        assert lead == 1


def ring_csr(n):
    indptr = list(range(n + 1))
    indices = [(u + 1) % n for u in range(n)]
    return indptr, indices


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_walk_traces_on_cycle(name):
    indptr, indices = ring_csr(5)
    out = kernels.closed_walk_traces(indptr, indices, 5, 12, impl=BACKENDS[name])
    assert out == [5 if L % 5 == 0 else 0 for L in range(1, 13)]


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_walk_traces_complete_digraph(name):
    # K_4 with loops: trace(J^L) = 4^L
    n = 4
    indptr = [0, 4, 8, 12, 16]
    indices = [v for _ in range(n) for v in range(n)]
    assert kernels.closed_walk_traces(indptr, indices, n, 10, impl=BACKENDS[name]) == [4**L for L in range(1, 11)]


def test_overflow_guard_falls_back_to_big_ints():
    n = 8
    indptr = [8 * u for u in range(n + 1)]
    indices = [v for _ in range(n) for v in range(n)]
    out = kernels.closed_walk_traces(indptr, indices, n, 20)
    assert out[-1] == 8**20
    assert out == _kernels_py.closed_walk_traces(indptr, indices, n, 20)


def test_pure_mode_env_var():
    code = "from edgezeta import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, EDGEZETA_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_compiled_backend_built():
    assert "compiled" in BACKENDS, "compiled extension missing; run pip install -e ."
