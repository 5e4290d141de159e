"""Young diagrams of proper numerical sets.

Walking ``s = 0 .. F(S)`` and stepping right for members, up for gaps traces
the lower-right boundary of a partition.  Rows are indexed from the top, so
row 0 belongs to the Frobenius number and the last row to the smallest gap.
Column ``j`` belongs to the small element ``s_j``.  The hook length of box
``(i, j)`` is ``gap(i) - s_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from nsgs.errors import IndexOutOfRange, MalformedInput
from nsgs.numset import GapSet, NumericalSet, _unchecked

HookGrid = dict[tuple[int, int], int]


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = self.rows
        if not isinstance(rows, tuple):
            object.__setattr__(self, "rows", rows := tuple(rows))
        if not rows:
            raise MalformedInput("a Young diagram needs at least one row")
        if any(not isinstance(r, int) or r < 1 for r in rows):
            raise MalformedInput(f"row lengths must be positive integers: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise MalformedInput(f"row lengths must be weakly decreasing: {rows}")

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_columns(self) -> int:
        return self.rows[0]

    @property
    def size(self) -> int:
        return sum(self.rows)

    def column_lengths(self) -> tuple[int, ...]:
        return transpose_rows(self.rows)

    def boxes(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in range(r)]

    def __contains__(self, box: tuple[int, int]) -> bool:
        i, j = box
        return 0 <= i < len(self.rows) and 0 <= j < self.rows[i]


def transpose_rows(rows: Iterable[int]) -> tuple[int, ...]:
    rows = tuple(rows)
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r > j) for j in range(rows[0]))


def transpose(Y: YoungDiagram) -> YoungDiagram:
    return YoungDiagram(transpose_rows(Y.rows))


def row_gap(rows: tuple[int, ...], i: int) -> int:
    """The gap represented by row ``i`` (counted from the top).

    A gap equals the number of members below it plus the number of gaps below
    it; the latter are exactly the rows under row ``i``.
    """
    return rows[i] + len(rows) - 1 - i


def diagram_of(S: NumericalSet) -> YoungDiagram:
    members = S.small_elements
    rows = []
    k = 0
    for a in reversed(S.gaps):
        # members below a: members is sorted, scan from the top
        while k < len(members) and members[len(members) - 1 - k] > a:
            k += 1
        rows.append(len(members) - k)
    return YoungDiagram(tuple(rows))


def numerical_set_of(Y: YoungDiagram) -> NumericalSet:
    rows = Y.rows
    gap_list = sorted(row_gap(rows, i) for i in range(len(rows)))
    members = set(gap_list)
    c = gap_list[-1] + 1
    return _unchecked(tuple(x for x in range(c) if x not in members), c)


def hook_length(Y: YoungDiagram, i: int, j: int) -> int:
    if (i, j) not in Y:
        raise IndexOutOfRange(f"box {(i, j)} is outside the diagram {Y.rows}")
    cols = Y.column_lengths()
    return (Y.rows[i] - j) + (cols[j] - i) - 1


def hook_grid(Y: YoungDiagram) -> HookGrid:
    cols = Y.column_lengths()
    return {
        (i, j): (r - j) + (cols[j] - i) - 1
        for i, r in enumerate(Y.rows)
        for j in range(r)
    }


def hook_boxes(Y: YoungDiagram, i: int, j: int) -> list[tuple[int, int]]:
    """The box ``(i, j)``, the boxes to its right and the boxes below it."""
    if (i, j) not in Y:
        raise IndexOutOfRange(f"box {(i, j)} is outside the diagram {Y.rows}")
    cols = Y.column_lengths()
    right = [(i, jj) for jj in range(j, Y.rows[i])]
    below = [(ii, j) for ii in range(i + 1, cols[j])]
    return right + below


def column_hook_set(S: NumericalSet, i: int) -> frozenset[int]:
    n = len(S.small_elements)
    if not 0 <= i < n:
        raise IndexOutOfRange(f"column {i} out of range for {n} small elements")
    Y = diagram_of(S)
    grid = hook_grid(Y)
    height = Y.column_lengths()[i]
    return frozenset(grid[r, i] for r in range(height))


def column_hook_sets(S: NumericalSet) -> list[frozenset[int]]:
    Y = diagram_of(S)
    grid = hook_grid(Y)
    return [
        frozenset(grid[r, j] for r in range(h))
        for j, h in enumerate(Y.column_lengths())
    ]


def is_semigroup_via_hooks(S: NumericalSet) -> bool:
    """Semigroup test by hooks: every column's hook set lies inside the gap set."""
    g0: GapSet = S.gaps
    gap_set = set(g0)
    return all(col <= gap_set for col in column_hook_sets(S))
