"""The discrete, end-to-end, conjoint and overlap sums.

Each sum glues the diagram of the second argument above the diagram of the
first.  ``diagram_sum`` works on partitions, ``set_sum`` on numerical sets, and
``predicted_gaps`` gives the closed-form gap set of the result; the three are
kept independent so each can check the others.
"""

from __future__ import annotations

from enum import Enum

from nsgs.errors import MalformedInput, NotASemigroup
from nsgs.numset import GapSet, NumericalSet, is_semigroup, minimal_generators
from nsgs.young import YoungDiagram


class SumKind(Enum):
    DISCRETE = "D"
    END_TO_END = "E"
    CONJOINT = "C"
    OVERLAP = "O"

    @classmethod
    def parse(cls, text: str) -> "SumKind":
        key = text.strip().upper().replace("-", "_")
        for kind in cls:
            if key in (kind.value, kind.name, kind.name.replace("_", "")):
                return kind
        raise MalformedInput(f"unknown sum kind {text!r}; expected one of D, E, C, O")

    def __str__(self) -> str:
        return self.name.lower().replace("_", "-")


D, E, C, O = SumKind.DISCRETE, SumKind.END_TO_END, SumKind.CONJOINT, SumKind.OVERLAP


def diagram_sum(Y: YoungDiagram, Z: YoungDiagram, kind: SumKind) -> YoungDiagram:
    """Glue ``Z`` above ``Y``.

    ``Z`` is shifted right by ``n`` columns (``n - 1`` for conjoint and overlap),
    where ``n`` is the width of ``Y``.  Discrete inserts a row of length ``n``
    between the two; overlap merges the bottom row of ``Z`` with the top row
    of ``Y``.
    """
    n = Y.num_columns
    if kind is D:
        rows = [z + n for z in Z.rows] + [n] + list(Y.rows)
    elif kind is E:
        rows = [z + n for z in Z.rows] + list(Y.rows)
    elif kind is C:
        rows = [z + n - 1 for z in Z.rows] + list(Y.rows)
    elif kind is O:
        rows = [z + n - 1 for z in Z.rows] + list(Y.rows[1:])
    else:
        raise MalformedInput(f"unknown sum kind {kind!r}")
    return YoungDiagram(tuple(rows))


def set_sum(S: NumericalSet, T: NumericalSet, kind: SumKind) -> NumericalSet:
    """Sum of numerical sets, written with ``s_n = C(S)`` and ``t_j`` the
    nonzero small elements of ``T`` followed by ``C(T)``."""
    s_low = S.small_elements  # 0, s_1, ..., s_{n-1}
    sn = S.conductor
    t_high = _tail(T)
    if kind is D:
        elems = s_low + (sn + 1,) + tuple(t + sn + 1 for t in t_high)
    elif kind is E:
        elems = s_low + (sn,) + tuple(t + sn for t in t_high)
    elif kind is C:
        elems = s_low + tuple(t + sn - 1 for t in t_high)
    elif kind is O:
        elems = s_low + tuple(t + sn - 2 for t in t_high)
    else:
        raise MalformedInput(f"unknown sum kind {kind!r}")
    # the final entry is the conductor of the result
    return NumericalSet(elems[:-1], elems[-1])


def _tail(T: NumericalSet) -> tuple[int, ...]:
    """``(t_1, ..., t_m)``: nonzero small elements of ``T`` and then ``C(T)``."""
    return T.small_elements[1:] + (T.conductor,)


def predicted_gaps(S: NumericalSet, T: NumericalSet, kind: SumKind) -> GapSet:
    a = S.gaps
    b = T.gaps
    ak = a[-1]
    if kind is D:
        return a + (ak + 1,) + tuple(ak + bj + 2 for bj in b)
    if kind is E:
        return a + tuple(ak + bj + 1 for bj in b)
    if kind is C:
        return a + tuple(ak + bj for bj in b)
    if kind is O:
        return a[:-1] + tuple(ak + bj - 1 for bj in b)
    raise MalformedInput(f"unknown sum kind {kind!r}")


def predicted_frobenius(S: NumericalSet, T: NumericalSet, kind: SumKind) -> int:
    shift = {D: 2, E: 1, C: 0, O: -1}[kind]
    return S.frobenius + T.frobenius + shift


def predicted_genus(S: NumericalSet, T: NumericalSet, kind: SumKind) -> int:
    shift = {D: 1, E: 0, C: 0, O: -1}[kind]
    return S.genus + T.genus + shift


def self_sum_closure_counterexample(S: NumericalSet) -> bool:
    """True iff the conductor of ``S`` is not a minimal generator.

    In that case neither ``S`` conjoint ``S`` nor ``S`` discrete ``S`` is a
    semigroup.
    """
    if not is_semigroup(S):
        raise NotASemigroup(f"{S} is not a numerical semigroup")
    return S.conductor not in minimal_generators(S)
