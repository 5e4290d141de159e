"""ASCII and SVG drawings of Young diagrams, optionally labelled with hooks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from nsgs.errors import InvalidHighlight, MalformedInput
from nsgs.young import YoungDiagram, hook_grid


class RenderFormat(Enum):
    ASCII = "ascii"
    SVG = "svg"


@dataclass(frozen=True)
class RenderOptions:
    format: RenderFormat = RenderFormat.ASCII
    show_hooks: bool = False
    highlight: tuple[tuple[int, int], ...] = ()
    cell_size: int = 32

    def __post_init__(self) -> None:
        if not 8 <= self.cell_size <= 128:
            raise MalformedInput(f"cell_size must lie in [8, 128], got {self.cell_size}")
        object.__setattr__(self, "highlight", tuple(tuple(b) for b in self.highlight))


def render(Y: YoungDiagram, opts: RenderOptions = RenderOptions()) -> str:
    for box in opts.highlight:
        if box not in Y:
            raise InvalidHighlight(f"highlighted box {box} is outside the diagram {Y.rows}")
    if opts.format is RenderFormat.ASCII:
        return _ascii(Y, opts)
    return _svg(Y, opts)


def _ascii(Y: YoungDiagram, opts: RenderOptions) -> str:
    """One line per row; ``[  ]`` per box, or ``[%3d]`` carrying the hook length.

    Highlighted boxes use braces instead of brackets.
    """
    hooks = hook_grid(Y) if opts.show_hooks else {}
    marked = set(opts.highlight)
    lines = []
    for i, r in enumerate(Y.rows):
        cells = []
        for j in range(r):
            inner = f"{hooks[i, j]:3d}" if opts.show_hooks else "  "
            left, right = ("{", "}") if (i, j) in marked else ("[", "]")
            cells.append(f"{left}{inner}{right}")
        lines.append("".join(cells))
    return "\n".join(lines) + "\n"


_FILL = "#ffffff"
_FILL_HIGHLIGHT = "#f2c14e"
_STROKE = "#000000"


def _svg(Y: YoungDiagram, opts: RenderOptions) -> str:
    cell = opts.cell_size
    pad = 1
    width = Y.num_columns * cell + 2 * pad
    height = Y.num_rows * cell + 2 * pad
    hooks = hook_grid(Y) if opts.show_hooks else {}
    marked = set(opts.highlight)
    font = max(6, cell // 2)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
    ]
    for i, j in Y.boxes():
        x, y = pad + j * cell, pad + i * cell
        fill = _FILL_HIGHLIGHT if (i, j) in marked else _FILL
        out.append(
            f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
            f'fill="{fill}" stroke="{_STROKE}" stroke-width="1"/>'
        )
    for i, j in Y.boxes() if opts.show_hooks else ():
        cx, cy = pad + j * cell + cell // 2, pad + i * cell + cell // 2
        out.append(
            f'<text x="{cx}" y="{cy}" font-family="monospace" font-size="{font}" '
            f'text-anchor="middle" dominant-baseline="central">{hooks[i, j]}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def parse_box(text: str) -> tuple[int, int]:
    """``"1,1"`` -> ``(1, 1)``."""
    parts: Sequence[str] = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise MalformedInput(f"expected a box as ROW,COL: {text!r}")
    try:
        i, j = int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedInput(f"expected a box as ROW,COL: {text!r}") from None
    return i, j
