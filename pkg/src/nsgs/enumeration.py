"""Exhaustive enumeration of numerical sets and numerical semigroups.

Everything is streamed in canonical order: by Frobenius number, then by the
integer value of the gap bitmask (bit ``a`` set for every gap ``a``).
Semigroups are produced two independent ways, by filtering all numerical sets
and by walking the semigroup tree (children drop one minimal generator above
the Frobenius number).  The test suite checks that both agree.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator

from nsgs.errors import BoundExceeded, MalformedInput
from nsgs.numset import NumericalSet, _unchecked, is_closed_mask

GENUS_CAP = 20
FROBENIUS_CAP = 40
SET_FROBENIUS_CAP = 24
ENV_CAP = "NSGS_MAX_BOUND"


class BoundMode(Enum):
    GENUS = "genus"
    FROBENIUS = "frobenius"


def _env_cap(cap: int) -> int:
    raw = os.environ.get(ENV_CAP)
    if not raw:
        return cap
    try:
        value = int(raw)
    except ValueError:
        raise MalformedInput(f"{ENV_CAP} must be an integer, got {raw!r}") from None
    return min(cap, value)  # may lower, never raise


@dataclass(frozen=True)
class EnumBound:
    mode: BoundMode
    limit: int

    def __post_init__(self) -> None:
        if not isinstance(self.mode, BoundMode):
            object.__setattr__(self, "mode", BoundMode(self.mode))
        if self.limit < 1:
            raise BoundExceeded(f"limit must be >= 1, got {self.limit}")
        cap = _env_cap(GENUS_CAP if self.mode is BoundMode.GENUS else FROBENIUS_CAP)
        if self.limit > cap:
            raise BoundExceeded(f"{self.mode.value} limit {self.limit} exceeds the cap {cap}")

    @classmethod
    def genus(cls, limit: int) -> "EnumBound":
        return cls(BoundMode.GENUS, limit)

    @classmethod
    def frobenius(cls, limit: int) -> "EnumBound":
        return cls(BoundMode.FROBENIUS, limit)

    def __str__(self) -> str:
        return f"{self.mode.value} <= {self.limit}"


def gap_mask(S: NumericalSet) -> int:
    m = 0
    for a in S.gaps:
        m |= 1 << a
    return m


def canonical_key(S: NumericalSet) -> tuple[int, int]:
    return (S.frobenius, gap_mask(S))


def _set_from_gap_mask(F: int, gmask: int) -> NumericalSet:
    # gmask holds the gaps below F; F itself is implied
    return _unchecked(tuple(x for x in range(F) if not gmask >> x & 1), F + 1)


def _check_set_bound(max_frobenius: int) -> None:
    cap = _env_cap(SET_FROBENIUS_CAP)
    if not 1 <= max_frobenius <= cap:
        raise BoundExceeded(f"max_frobenius must lie in [1, {cap}], got {max_frobenius}")


def enumerate_numerical_sets(max_frobenius: int) -> Iterator[NumericalSet]:
    """Every proper numerical set with ``F(S) <= max_frobenius``, once each.

    There are ``2**(F-1)`` sets with Frobenius number ``F``: any subset of
    ``1 .. F-1`` can join ``F`` as the gaps.
    """
    _check_set_bound(max_frobenius)
    for F in range(1, max_frobenius + 1):
        for bits in range(1 << (F - 1)):
            yield _set_from_gap_mask(F, bits << 1)


def _gap_masks(F: int, min_gaps: int, max_gaps: int) -> Iterator[int]:
    """Bitmasks of gap sets below ``F`` with a size in ``[min_gaps, max_gaps]``."""
    positions = range(1, F)
    for j in range(max(min_gaps, 0), min(max_gaps, F - 1) + 1):
        for combo in combinations(positions, j):
            m = 0
            for a in combo:
                m |= 1 << a
            yield m


def _filter_semigroups(bound: EnumBound) -> list[NumericalSet]:
    # A semigroup with Frobenius number F has at least (F+1)/2 gaps, since x and
    # F - x cannot both be members; so genus <= G forces F <= 2G - 1.
    if bound.mode is BoundMode.GENUS:
        max_f, max_genus = 2 * bound.limit - 1, bound.limit
    else:
        max_f, max_genus = bound.limit, bound.limit
    _check_set_bound(max_f)
    found = []
    for F in range(1, max_f + 1):
        full = (1 << (F + 1)) - 1
        min_below = (F + 2) // 2 - 1  # gaps other than F
        for gm in _gap_masks(F, min_below, max_genus - 1):
            mask = full & ~gm & ~(1 << F)
            if is_closed_mask(mask, F + 1):
                found.append((F, gm | 1 << F))
    found.sort()
    return [_set_from_gap_mask(F, gm & ~(1 << F)) for F, gm in found]


def _tree_nodes(
    max_genus: int | None, max_frobenius: int | None, max_small: int | None = None
) -> Iterator[tuple[int, int]]:
    """Depth-first walk of the semigroup tree, yielding ``(mask, conductor)``.

    Genus grows by one per level and the Frobenius number strictly increases,
    so both bounds prune whole subtrees.  The number of small elements never
    decreases along a branch, so ``max_small`` prunes too.
    """
    stack = [(1, 2, 1)]  # {0, 2, ->}: mask, conductor, genus
    while stack:
        mask, c, g = stack.pop()
        if max_genus is not None and g > max_genus:
            continue
        if max_frobenius is not None and c - 1 > max_frobenius:
            continue
        if max_small is not None and mask.bit_count() > max_small:
            continue
        yield mask, c
        if max_genus is not None and g == max_genus:
            continue
        smalls = [y for y in range(1, c) if mask >> y & 1]
        m = smalls[0] if smalls else c
        # minimal generators above F lie in [c, c + m - 1]
        for x in range(c, c + m):
            if max_frobenius is not None and x > max_frobenius:
                break
            # x - y < m for y >= c, so only small y can be a summand
            if any(x - y >= c or mask >> (x - y) & 1 for y in smalls if y < x):
                continue
            child = mask | (((1 << x) - 1) ^ ((1 << c) - 1))
            stack.append((child, x + 1, g + 1))


def _tree_semigroups(
    max_genus: int | None, max_frobenius: int | None, max_small: int | None = None
) -> list[NumericalSet]:
    nodes = _tree_nodes(max_genus, max_frobenius, max_small)
    found = sorted((c - 1, (((1 << c) - 1) & ~mask)) for mask, c in nodes)
    return [_set_from_gap_mask(F, gm & ~(1 << F)) for F, gm in found]


def enumerate_semigroups(bound: EnumBound, strategy: str = "tree") -> Iterator[NumericalSet]:
    """Every numerical semigroup within ``bound``, in canonical order.

    ``strategy`` is ``"tree"`` or ``"filter"``.
    """
    if strategy == "tree":
        if bound.mode is BoundMode.GENUS:
            yield from _tree_semigroups(bound.limit, None)
        else:
            yield from _tree_semigroups(None, bound.limit)
    elif strategy == "filter":
        yield from _filter_semigroups(bound)
    else:
        raise MalformedInput(f"unknown strategy {strategy!r}")


def enumerate_symmetric(bound: EnumBound) -> Iterator[NumericalSet]:
    """Symmetric semigroups within ``bound``.

    A symmetric semigroup has ``g = (F+1)/2`` gaps and ``(F+1)/2`` small
    elements, which bounds the tree walk far below the full semigroup count.
    """
    from nsgs.symmetry import _symmetric_by_definition

    if bound.mode is BoundMode.GENUS:
        g_max, f_max, n_max = bound.limit, 2 * bound.limit - 1, bound.limit
    else:
        f_max = bound.limit
        g_max = n_max = (f_max + 1) // 2
    for S in _tree_semigroups(g_max, f_max, n_max):
        if _symmetric_by_definition(S):
            yield S


def enumerate_pseudo_symmetric(bound: EnumBound) -> Iterator[NumericalSet]:
    """Pseudo-symmetric semigroups (``g = (F+2)/2``, ``F/2`` small elements)."""
    from nsgs.symmetry import _pseudo_symmetric_by_definition

    if bound.mode is BoundMode.GENUS:
        g_max, f_max, n_max = bound.limit, 2 * bound.limit - 2, bound.limit - 1
    else:
        f_max = bound.limit
        g_max, n_max = f_max // 2 + 1, f_max // 2
    if f_max < 2:
        return
    for S in _tree_semigroups(g_max, f_max, n_max):
        if _pseudo_symmetric_by_definition(S):
            yield S
