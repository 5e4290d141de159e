"""Proper numerical sets in canonical form and the semigroup predicate.

A proper numerical set ``S`` is stored as its small elements (members below
the conductor) plus the conductor itself, so ``{0, 2, 3, 6, 8, 9, 11, ->}``
becomes ``NumericalSet((0, 2, 3, 6, 8, 9), 11)``.  Gaps, genus and the
Frobenius number are derived.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from nsgs.errors import MalformedInput, NotASemigroup

GapSet = tuple[int, ...]

ARROW = "->"


@dataclass(frozen=True, order=False)
class NumericalSet:
    small_elements: tuple[int, ...]
    conductor: int

    def __post_init__(self) -> None:
        elems = self.small_elements
        if not isinstance(elems, tuple):
            object.__setattr__(self, "small_elements", elems := tuple(elems))
        c = self.conductor
        if not isinstance(c, int) or isinstance(c, bool):
            raise MalformedInput(f"conductor must be an integer, got {c!r}")
        if c < 2:
            raise MalformedInput(f"conductor must be >= 2 for a proper set, got {c}")
        if not elems or elems[0] != 0:
            raise MalformedInput("small elements must start with 0")
        prev = -1
        for x in elems:
            if not isinstance(x, int) or isinstance(x, bool):
                raise MalformedInput(f"small elements must be integers, got {x!r}")
            if x <= prev:
                raise MalformedInput(f"small elements must be strictly increasing: {elems}")
            prev = x
        if prev >= c:
            raise MalformedInput(f"small element {prev} is not below the conductor {c}")
        if prev == c - 1:
            raise MalformedInput(
                f"{c - 1} is listed as a small element, so {c} is not the conductor"
            )

    # bit i set <=> i is a small element
    @cached_property
    def mask(self) -> int:
        m = 0
        for x in self.small_elements:
            m |= 1 << x
        return m

    @cached_property
    def gaps(self) -> GapSet:
        members = set(self.small_elements)
        return tuple(x for x in range(1, self.conductor) if x not in members)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def genus(self) -> int:
        return self.conductor - len(self.small_elements)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.conductor or bool(self.mask >> x & 1)

    def __str__(self) -> str:
        return format_set(self)

    def __repr__(self) -> str:
        return f"NumericalSet({format_set(self)!r})"


def _unchecked(small_elements: tuple[int, ...], conductor: int) -> NumericalSet:
    # Hot-path constructor for enumeration code that already guarantees the invariants.
    s = object.__new__(NumericalSet)
    object.__setattr__(s, "small_elements", small_elements)
    object.__setattr__(s, "conductor", conductor)
    return s


def from_mask(mask: int, conductor: int) -> NumericalSet:
    """Build a set from a bitmask of its small elements (bit ``i`` <=> ``i`` in S)."""
    elems = tuple(i for i in range(conductor) if mask >> i & 1)
    return NumericalSet(elems, conductor)


def from_small_elements(elems: Iterable[int], conductor: int) -> NumericalSet:
    return NumericalSet(tuple(elems), conductor)


def from_gaps(gap_list: Iterable[int]) -> NumericalSet:
    """Inverse of :func:`gaps`: the proper numerical set with exactly these gaps."""
    g = tuple(gap_list)
    if not g:
        raise MalformedInput("a proper numerical set has at least one gap")
    prev = 0
    for a in g:
        if not isinstance(a, int) or isinstance(a, bool) or a <= prev:
            raise MalformedInput(f"gaps must be strictly increasing positive integers: {g}")
        prev = a
    members = set(g)
    conductor = g[-1] + 1
    return _unchecked(tuple(x for x in range(conductor) if x not in members), conductor)


def gaps(S: NumericalSet) -> GapSet:
    return S.gaps


def frobenius(S: NumericalSet) -> int:
    return S.frobenius


def conductor(S: NumericalSet) -> int:
    return S.conductor


def genus(S: NumericalSet) -> int:
    return S.genus


def contains(S: NumericalSet, x: int) -> bool:
    return x in S


def is_closed_mask(mask: int, conductor: int) -> bool:
    """True iff the set with small-element bitmask ``mask`` is additively closed.

    Only sums of two small elements can fall below the conductor, and every
    sum at or above it is a member, so checking those pairs suffices.
    """
    gap_mask = ((1 << conductor) - 1) & ~mask
    rest = mask >> 1
    s = 1
    while rest:
        if rest & 1 and (mask << s) & gap_mask:
            return False
        rest >>= 1
        s += 1
    return True


def is_semigroup(S: NumericalSet) -> bool:
    return is_closed_mask(S.mask, S.conductor)


def multiplicity(S: NumericalSet) -> int:
    """Smallest nonzero element."""
    return S.small_elements[1] if len(S.small_elements) > 1 else S.conductor


def minimal_generators(S: NumericalSet) -> frozenset[int]:
    """Elements of ``S`` that are not a sum of two nonzero elements.

    Every element ``x >= C(S) + m`` (``m`` the multiplicity) equals ``m + (x - m)``
    with ``x - m`` in S, so the search stops below that bound.
    """
    if not is_semigroup(S):
        raise NotASemigroup(f"{S} is not a numerical semigroup")
    m = multiplicity(S)
    limit = S.conductor + m
    members = [x for x in range(1, limit) if x in S]
    member_set = set(members)
    gens = []
    for x in members:
        if not any(x - y in member_set for y in members if 2 * y <= x):
            gens.append(x)
    return frozenset(gens)


def is_minimal_generator(S: NumericalSet, x: int) -> bool:
    return x in minimal_generators(S)


def format_set(S: NumericalSet) -> str:
    """Text notation: small elements, the conductor, then ``->``."""
    return " ".join(map(str, (*S.small_elements, S.conductor))) + " " + ARROW


def parse_set(text: str) -> NumericalSet:
    """Parse ``"0 2 3 6 8 9 11 ->"`` or ``"gaps: 1 4 5 7 10"``."""
    body = text.strip()
    if body.lower().startswith("gaps:"):
        return from_gaps(_ints(body[5:].split(), text))
    tokens = body.split()
    if len(tokens) < 2 or tokens[-1] != ARROW:
        raise MalformedInput(
            f"expected small elements, the conductor and a trailing '{ARROW}': {text!r}"
        )
    values = _ints(tokens[:-1], text)
    return NumericalSet(tuple(values[:-1]), values[-1])


def _ints(tokens: list[str], text: str) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise MalformedInput(f"non-integer token in {text!r}") from None
    if any(v < 0 for v in values):
        raise MalformedInput(f"negative value in {text!r}")
    return values
