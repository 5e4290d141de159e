import pytest
from hypothesis import given

from conftest import numerical_sets
from nsgs import (
    ExcludedCase,
    NotASemigroup,
    NotPseudoSymmetric,
    NotSymmetric,
    RingLabel,
    classify_ring,
    decompose,
    decompose_pseudo_symmetric,
    decompose_symmetric,
    dual,
    dual_sum_is_semigroup,
    enumerate_numerical_sets,
    enumerate_semigroups,
    is_pseudo_symmetric,
    is_semigroup,
    is_symmetric,
    parse_set,
    set_sum,
)
from nsgs.enumeration import EnumBound
from nsgs.sums import C, D, E, O

P = parse_set
NOT_SEMIGROUP = P("0 2 3 6 8 9 11 ->")


def test_symmetric_examples():
    assert is_symmetric(P("0 2 ->"))
    assert is_symmetric(P("0 3 5 6 8 ->"))
    assert not is_symmetric(P("0 4 8 9 11 12 13 15 ->"))
    with pytest.raises(NotASemigroup):
        is_symmetric(NOT_SEMIGROUP)


def test_pseudo_symmetric_examples():
    assert is_pseudo_symmetric(P("0 3 ->"))
    assert is_pseudo_symmetric(P("0 6 7 11 12 13 14 15 17 ->"))
    assert not is_pseudo_symmetric(P("0 2 ->"))
    with pytest.raises(NotASemigroup):
        is_pseudo_symmetric(NOT_SEMIGROUP)


def test_predicates_match_genus_criteria():
    for S in enumerate_semigroups(EnumBound.genus(10)):
        assert is_symmetric(S) == (2 * S.genus == S.frobenius + 1)
        assert is_pseudo_symmetric(S) == (2 * S.genus == S.frobenius + 2)


def test_dual_examples():
    assert dual(P("0 4 7 ->")) == P("0 1 3 4 5 7 ->")
    S = P("0 3 5 6 8 ->")
    assert dual(S) == S
    assert dual(P("0 6 7 9 ->")) == P("0 3 4 5 6 7 9 ->")


@given(numerical_sets())
def test_dual_involution_and_frobenius(S):
    assert dual(dual(S)) == S
    assert dual(S).frobenius == S.frobenius
    assert dual(S).genus == len(S.small_elements)


@pytest.mark.parametrize(
    "S, T, kind",
    [
        ("0 4 7 8 10 11 12 14 ->", "0 4 7 ->", E),
        ("0 5 8 10 13 15 16 18 20 21 23 24 25 26 28 ->", "0 5 8 10 13 15 ->", O),
    ],
)
def test_decompose_symmetric_examples(S, T, kind):
    dec = decompose_symmetric(P(S))
    assert (dec.summand, dec.kind, dec.dual_summand) == (P(T), kind, dual(P(T)))
    assert dec.recompose() == P(S)


def test_smallest_symmetric_splits_as_overlap_identity():
    # C/2 = 1 is a gap, so the overlap branch applies and T is the set itself
    dec = decompose_symmetric(P("0 2 ->"))
    assert (dec.summand, dec.kind) == (P("0 2 ->"), O)
    assert dec.recompose() == P("0 2 ->")


def test_example_with_stated_frobenius_14_is_symmetric():
    # The text gives F = 14, but 14 is a member; the largest gap is 13.
    S = P("0 4 7 8 10 11 12 14 ->")
    assert S.frobenius == 13 and S.genus == 7
    assert is_symmetric(S) and not is_pseudo_symmetric(S)


@pytest.mark.parametrize(
    "S, T, kind",
    [
        ("0 6 7 11 12 13 14 15 17 ->", "0 6 7 9 ->", C),
        ("0 4 8 9 11 12 13 15 ->", "0 4 7 ->", D),
    ],
)
def test_decompose_pseudo_symmetric_examples(S, T, kind):
    dec = decompose_pseudo_symmetric(P(S))
    assert (dec.summand, dec.kind) == (P(T), kind)
    assert dec.recompose() == P(S)
    assert not is_symmetric(dec.summand)


def test_excluded_and_wrong_class():
    with pytest.raises(ExcludedCase):
        decompose_pseudo_symmetric(P("0 3 ->"))
    with pytest.raises(NotSymmetric):
        decompose_symmetric(P("0 3 ->"))
    with pytest.raises(NotPseudoSymmetric):
        decompose_pseudo_symmetric(P("0 2 ->"))
    with pytest.raises(NotSymmetric):
        decompose(P("0 3 6 ->"))  # F = 5, g = 4: neither class
    with pytest.raises(NotASemigroup):
        decompose(NOT_SEMIGROUP)


def test_small_pseudo_symmetric_avoids_symmetric_summand():
    # the discrete split of {0,3,5,->} would use the symmetric {0,2,->}
    dec = decompose_pseudo_symmetric(P("0 3 5 ->"))
    assert (dec.summand, dec.kind) == (P("0 3 ->"), C)
    assert set_sum(P("0 2 ->"), P("0 2 ->"), D) == P("0 3 5 ->")


def test_second_decompositions_exist():
    """The split is not literally unique once other semigroups T are allowed."""
    T = P("0 4 8 ->")
    assert is_semigroup(T) and not is_symmetric(T)
    # end-to-end split with {0,4,7,->} and an overlap split with {0,4,8,->}
    assert set_sum(T, dual(T), O) == P("0 4 7 8 10 11 12 14 ->")
    # discrete split with {0,4,7,->} and a conjoint split with {0,4,8,->}
    assert set_sum(T, dual(T), C) == P("0 4 8 9 11 12 13 15 ->")
    assert set_sum(P("0 2 ->"), P("0 2 ->"), E) == P("0 2 4 ->") == set_sum(P("0 3 ->"), dual(P("0 3 ->")), O)


def test_closure_criterion_examples():
    S = P("0 3 5 6 8 ->")
    for kind in (D, E, C, O):
        assert not dual_sum_is_semigroup(S, kind)
        assert not is_semigroup(set_sum(S, dual(S), kind))
    assert dual_sum_is_semigroup(P("0 4 7 ->"), E)
    assert dual_sum_is_semigroup(P("0 2 ->"), O)
    with pytest.raises(NotASemigroup):
        dual_sum_is_semigroup(NOT_SEMIGROUP, E)


def test_example_sums_are_not_semigroups():
    S = P("0 3 5 6 8 ->")
    want = {
        D: "0 3 5 6 9 12 14 15 17 ->",
        E: "0 3 5 6 8 11 13 14 16 ->",
        C: "0 3 5 6 10 12 13 15 ->",
        O: "0 3 5 6 9 11 12 14 ->",
    }
    for kind, text in want.items():
        assert set_sum(S, dual(S), kind) == P(text)


def test_conjoint_generator_clause_is_too_strict():
    S = P("0 3 6 ->")
    assert is_semigroup(set_sum(S, dual(S), C))
    assert not dual_sum_is_semigroup(S, C)
    assert dual_sum_is_semigroup(S, C, conjoint_generator_clause=False)


def test_conjoint_criterion_without_clause_is_exact():
    for S in enumerate_semigroups(EnumBound.genus(11)):
        brute = is_semigroup(set_sum(S, dual(S), C))
        assert dual_sum_is_semigroup(S, C, conjoint_generator_clause=False) == brute, S


def test_classify_ring():
    assert classify_ring(P("0 2 ->")) is RingLabel.GORENSTEIN
    assert classify_ring(P("0 4 8 9 11 12 13 15 ->")) is RingLabel.KUNZ
    S = P("0 4 6 8 9 10 12 ->")
    assert S.gaps == (1, 2, 3, 5, 7, 11)
    assert classify_ring(S) is RingLabel.GORENSTEIN
    assert classify_ring(P("0 3 6 ->")) is RingLabel.NEITHER
    assert str(RingLabel.KUNZ) == "Kunz"


def test_self_dual_iff_symmetric_small():
    for S in enumerate_numerical_sets(10):
        if is_semigroup(S):
            assert (dual(S) == S) == is_symmetric(S)
