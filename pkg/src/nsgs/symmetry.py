"""Symmetric and pseudo-symmetric semigroups, duals and decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from nsgs.errors import ExcludedCase, NotASemigroup, NotPseudoSymmetric, NotSymmetric
from nsgs.numset import NumericalSet, _unchecked, is_semigroup, minimal_generators
from nsgs.sums import C, D, E, O, SumKind, set_sum


class RingLabel(Enum):
    GORENSTEIN = "Gorenstein"
    KUNZ = "Kunz"
    NEITHER = "Neither"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Decomposition:
    summand: NumericalSet
    kind: SumKind
    dual_summand: NumericalSet

    def recompose(self) -> NumericalSet:
        return set_sum(self.summand, self.dual_summand, self.kind)


def _require_semigroup(S: NumericalSet) -> None:
    if not is_semigroup(S):
        raise NotASemigroup(f"{S} is not a numerical semigroup")


def _symmetric_by_definition(S: NumericalSet) -> bool:
    F = S.frobenius
    return F % 2 == 1 and all(F - x in S for x in S.gaps)


def _pseudo_symmetric_by_definition(S: NumericalSet) -> bool:
    F = S.frobenius
    return F % 2 == 0 and all(2 * x == F or F - x in S for x in S.gaps)


def is_symmetric(S: NumericalSet) -> bool:
    _require_semigroup(S)
    verdict = _symmetric_by_definition(S)
    assert verdict == (2 * S.genus == S.frobenius + 1), f"genus criterion disagrees on {S}"
    return verdict


def is_pseudo_symmetric(S: NumericalSet) -> bool:
    _require_semigroup(S)
    verdict = _pseudo_symmetric_by_definition(S)
    assert verdict == (2 * S.genus == S.frobenius + 2), f"genus criterion disagrees on {S}"
    return verdict


def dual(S: NumericalSet) -> NumericalSet:
    """``{0} + {F - a : a a non-maximal gap} + [C, oo)``.

    Defined for every proper numerical set; its diagram is the transpose of
    the diagram of ``S``.
    """
    F = S.frobenius
    return _unchecked((0,) + tuple(F - a for a in reversed(S.gaps[:-1])), S.conductor)


def decompose_symmetric(S: NumericalSet) -> Decomposition:
    """Split a symmetric semigroup as ``T (+E) T*`` or ``T (+O) T*``.

    ``T`` keeps the elements of ``S`` below ``C/2``.  Its conductor is ``C/2``
    when ``C/2`` lies in ``S`` (end-to-end) and ``C/2 + 1`` otherwise (overlap).
    """
    if not is_symmetric(S):
        raise NotSymmetric(f"{S} is not symmetric")
    half = S.conductor // 2
    low = tuple(x for x in S.small_elements if x < half)
    if half in S:
        T, kind = NumericalSet(low, half), E
    else:
        T, kind = NumericalSet(low, half + 1), O
    return Decomposition(T, kind, dual(T))


_ZERO_THREE = NumericalSet((0,), 3)
_ZERO_TWO = NumericalSet((0,), 2)


def decompose_pseudo_symmetric(S: NumericalSet) -> Decomposition:
    """Split a pseudo-symmetric semigroup as ``T (+C) T*`` or ``T (+D) T*``.

    ``T`` keeps the elements of ``S`` below ``F/2``.  Its conductor is
    ``F/2 + 1`` (conjoint) when ``F/2 + 1`` is a gap of ``S`` and ``F/2``
    (discrete) otherwise.  ``{0, 3, ->}`` only splits with the symmetric
    ``{0, 2, ->}`` and raises :class:`ExcludedCase`.  For ``{0, 3, 5, ->}`` the
    discrete split would again use ``{0, 2, ->}``, so the conjoint split with
    ``{0, 3, ->}`` is returned instead.
    """
    if not is_pseudo_symmetric(S):
        raise NotPseudoSymmetric(f"{S} is not pseudo-symmetric")
    if S == _ZERO_THREE:
        raise ExcludedCase(
            "{0, 3, ->} is only {0, 2, ->} conjoint its dual, and {0, 2, ->} is symmetric"
        )
    half = S.frobenius // 2
    low = tuple(x for x in S.small_elements if x < half)
    if half + 1 in S and half > 2:
        T, kind = NumericalSet(low, half), D
    else:
        T, kind = NumericalSet(low, half + 1), C
    return Decomposition(T, kind, dual(T))


def decompose(S: NumericalSet) -> Decomposition:
    """Dispatch on symmetric / pseudo-symmetric."""
    _require_semigroup(S)
    if _symmetric_by_definition(S):
        return decompose_symmetric(S)
    if _pseudo_symmetric_by_definition(S):
        return decompose_pseudo_symmetric(S)
    raise NotSymmetric(f"{S} is neither symmetric nor pseudo-symmetric")


def dual_sum_is_semigroup(
    S: NumericalSet, kind: SumKind, *, conjoint_generator_clause: bool = True
) -> bool:
    """Closed-form test for whether ``S (+kind) S*`` is a semigroup.

    With ``n`` small elements ``s_0 .. s_{n-1}``, ``s_n = C(S)`` and ``F = F(S)``
    the forbidden values are ``2 s_n - s_i - s_j`` (discrete),
    ``2 s_n - s_i - s_j - 1`` (end-to-end), ``2 F - s_i - s_j`` (conjoint) and
    ``2 F - s_i - s_j - 1`` (overlap); discrete and conjoint additionally need
    ``s_n`` to be a minimal generator.

    The generator clause is not actually necessary for the conjoint sum
    (``{0, 3, 6, ->}`` is a counterexample); pass
    ``conjoint_generator_clause=False`` for the exact test.
    """
    _require_semigroup(S)
    small = S.small_elements
    members = set(small)
    sn = S.conductor
    F = S.frobenius
    top = {D: 2 * sn, E: 2 * sn - 1, C: 2 * F, O: 2 * F - 1}[kind]
    pair_sums = {x + y for i, x in enumerate(small) for y in small[i:]}
    if any(top - p in members for p in pair_sums):
        return False
    if kind is D or (kind is C and conjoint_generator_clause):
        return sn in minimal_generators(S)
    return True


def classify_ring(S: NumericalSet) -> RingLabel:
    if is_symmetric(S):
        return RingLabel.GORENSTEIN
    if is_pseudo_symmetric(S):
        return RingLabel.KUNZ
    return RingLabel.NEITHER
