import pytest

from edgezeta.luo import half_period, rde_word, segment, verify_u_sequence
from edgezeta.typeorbits import TypeOrbit, enumerate_orbits, next_type, orbit_of, prev_type
from edgezeta.weyl import build_root_system

SMALL = [("A", 2), ("A", 4), ("B", 3), ("C", 4), ("D", 4), ("D", 6), ("G", 2), ("F", 4), ("E", 6)]


def read_table(text):
    rows = []
    for line in text.splitlines():
        cyc, m = line.rsplit("  ", 1)
        rows.append((tuple(int(x) for x in cyc.split(" → ")), int(m)))
    return rows


@pytest.mark.parametrize("fam,rank", SMALL)
def test_next_and_prev_are_inverse(fam, rank):
    rs = build_root_system(fam, rank)
    for r in rs.labels:
        for s in rs.labels:
            if r != s:
                assert prev_type(rs, next_type(rs, (r, s))) == (r, s)
                assert next_type(rs, prev_type(rs, (r, s))) == (r, s)


@pytest.mark.parametrize("fam,rank", SMALL)
def test_orbits_partition_offdiagonal_pairs(fam, rank):
    rs = build_root_system(fam, rank)
    pairs = [p for o in enumerate_orbits(rs) for p in o.pairs]
    assert len(pairs) == len(set(pairs)) == rank * (rank - 1)


def test_next_type_rejects_diagonal():
    rs = build_root_system("A", 3)
    with pytest.raises(ValueError):
        next_type(rs, (2, 2))


def test_orbit_helpers():
    o = TypeOrbit((1, 3, 2, 3, 1))
    assert o.c == 4 and o.start == (1, 3) and o.label(5) == 3
    assert o.same_cycle((3, 2, 3, 1, 3))
    assert not o.same_cycle((1, 2, 3, 3, 1))
    assert o.text() == "1 → 3 → 2 → 3 → 1"


@pytest.mark.parametrize("name", ["A5", "C5", "D5", "G2", "F4", "E6", "E7", "E8"])
def test_tables(name, golden):
    rs = build_root_system(name[0], int(name[1]))
    table = read_table(golden(f"luo_{name}.txt"))
    orbits = enumerate_orbits(rs)
    assert [o.cycle for o in orbits] == [c for c, _ in table]
    assert [half_period(rs, o).m for o in orbits] == [m for _, m in table]


def test_type_c_pattern():
    # (r, s) with r < s runs through (s, s - r), (s - r, s), (s, r)
    rs = build_root_system("C", 6)
    assert orbit_of(rs, (2, 5)).cycle == (2, 5, 3, 5, 2)
    assert orbit_of(rs, (2, 4)).c == 2


@pytest.mark.parametrize("fam,rank", SMALL + [("E", 7), ("B", 5)])
def test_luo_invariants(fam, rank):
    rs = build_root_system(fam, rank)
    for o in enumerate_orbits(rs):
        res = half_period(rs, o)
        assert (2 * res.m) % o.c == 0
        assert res.c * res.d == 2 * res.m
        assert verify_u_sequence(rs, o) == res.m
        # lengths over a full revolution of 2m segments add to twice l(w'_0 w_S)
        assert sum(segment(rs, o, k).length() for k in range(1, 2 * res.m + 1)) == 2 * sum(res.segment_lengths)
        # the one-revolution word has order dividing d
        assert rde_word(rs, o) ** res.d == rs.identity
