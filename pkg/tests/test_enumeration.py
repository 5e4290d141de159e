import pytest

from nsgs import (
    BoundExceeded,
    BoundMode,
    EnumBound,
    MalformedInput,
    enumerate_numerical_sets,
    enumerate_pseudo_symmetric,
    enumerate_semigroups,
    enumerate_symmetric,
    is_semigroup,
    parse_set,
)
from nsgs.enumeration import canonical_key


def _naive_semigroups(max_frobenius):
    # independent of the enumerators: subsets of 1..F-1 plus F, closure by brute force
    out = []
    for F in range(1, max_frobenius + 1):
        for bits in range(1 << (F - 1)):
            gaps = {a for a in range(1, F) if bits >> (a - 1) & 1} | {F}
            members = [x for x in range(2 * F + 2) if x not in gaps]
            if all(x + y not in gaps for x in members for y in members):
                out.append(gaps)
    return out


def test_numerical_set_counts():
    assert list(enumerate_numerical_sets(1)) == [parse_set("0 2 ->")]
    assert len(list(enumerate_numerical_sets(2))) == 3
    assert len(list(enumerate_numerical_sets(4))) == 15
    by_f = {}
    for S in enumerate_numerical_sets(12):
        by_f[S.frobenius] = by_f.get(S.frobenius, 0) + 1
    assert by_f == {f: 2 ** (f - 1) for f in range(1, 13)}


def test_numerical_sets_unique_and_canonical():
    sets = list(enumerate_numerical_sets(10))
    assert len(set(sets)) == len(sets)
    keys = [canonical_key(S) for S in sets]
    assert keys == sorted(keys)


def test_semigroup_examples():
    assert list(enumerate_semigroups(EnumBound.genus(1))) == [parse_set("0 2 ->")]
    exactly_3 = [S for S in enumerate_semigroups(EnumBound.genus(3)) if S.genus == 3]
    assert len(exactly_3) == 4
    sym = list(enumerate_symmetric(EnumBound.frobenius(7)))
    assert parse_set("0 3 5 6 8 ->") in sym


@pytest.mark.parametrize("g", range(1, 9))
def test_strategies_agree(g):
    bound = EnumBound.genus(g)
    tree = list(enumerate_semigroups(bound, "tree"))
    assert tree == list(enumerate_semigroups(bound, "filter"))
    keys = [canonical_key(S) for S in tree]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_frobenius_bound_matches_naive():
    for f in (1, 5, 10):
        want = sorted(_naive_semigroups(f), key=lambda G: (max(G), sum(1 << a for a in G)))
        for strategy in ("tree", "filter"):
            got = [set(S.gaps) for S in enumerate_semigroups(EnumBound.frobenius(f), strategy)]
            assert got == want


def test_known_genus_counts():
    # semigroups of genus exactly g: 1, 2, 4, 7, 12, 23, 39, 67
    counts = [0] * 9
    for S in enumerate_semigroups(EnumBound.genus(8)):
        counts[S.genus] += 1
    assert counts[1:] == [1, 2, 4, 7, 12, 23, 39, 67]


def test_symmetric_and_pseudo_filters():
    pool = list(enumerate_semigroups(EnumBound.genus(9)))
    sym = [S for S in pool if 2 * S.genus == S.frobenius + 1]
    psym = [S for S in pool if 2 * S.genus == S.frobenius + 2]
    assert list(enumerate_symmetric(EnumBound.genus(9))) == sym
    assert list(enumerate_pseudo_symmetric(EnumBound.genus(9))) == psym
    pool = list(enumerate_semigroups(EnumBound.frobenius(16)))
    assert list(enumerate_symmetric(EnumBound.frobenius(16))) == [
        S for S in pool if 2 * S.genus == S.frobenius + 1
    ]
    assert list(enumerate_pseudo_symmetric(EnumBound.frobenius(16))) == [
        S for S in pool if 2 * S.genus == S.frobenius + 2
    ]


def test_bounds_validated():
    with pytest.raises(BoundExceeded):
        EnumBound.genus(21)
    with pytest.raises(BoundExceeded):
        EnumBound.frobenius(41)
    with pytest.raises(BoundExceeded):
        EnumBound.genus(0)
    with pytest.raises(BoundExceeded):
        list(enumerate_numerical_sets(25))
    with pytest.raises(BoundExceeded):
        list(enumerate_numerical_sets(0))
    assert EnumBound("genus", 3).mode is BoundMode.GENUS
    with pytest.raises(MalformedInput):
        list(enumerate_semigroups(EnumBound.genus(3), "bogus"))


def test_env_var_lowers_cap(monkeypatch):
    monkeypatch.setenv("NSGS_MAX_BOUND", "5")
    with pytest.raises(BoundExceeded):
        EnumBound.genus(6)
    assert EnumBound.genus(5).limit == 5
    monkeypatch.setenv("NSGS_MAX_BOUND", "100")
    with pytest.raises(BoundExceeded):
        EnumBound.genus(21)
    monkeypatch.setenv("NSGS_MAX_BOUND", "lots")
    with pytest.raises(MalformedInput):
        EnumBound.genus(2)


def test_semigroups_are_semigroups():
    for S in enumerate_semigroups(EnumBound.frobenius(14)):
        assert is_semigroup(S)
