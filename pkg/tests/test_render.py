import re
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from conftest import partitions
from nsgs import InvalidHighlight, MalformedInput, RenderFormat, RenderOptions, YoungDiagram, hook_grid, render
from nsgs.render import parse_box
from nsgs.young import hook_boxes

Y = YoungDiagram((6, 4, 3, 3, 1))
SVG_NS = "{http://www.w3.org/2000/svg}"


def test_ascii_with_hooks_golden():
    text = render(Y, RenderOptions(show_hooks=True))
    assert text == (
        "[ 10][  8][  7][  4][  2][  1]\n"
        "[  7][  5][  4][  1]\n"
        "[  5][  3][  2]\n"
        "[  4][  2][  1]\n"
        "[  1]\n"
    )
    first_col_bottom_up = [int(line[1:4]) for line in reversed(text.splitlines())]
    assert first_col_bottom_up == [1, 4, 5, 7, 10]


def test_single_box():
    assert render(YoungDiagram((1,))) == "[  ]\n"


def test_highlight_hook():
    boxes = hook_boxes(Y, 1, 1)
    text = render(Y, RenderOptions(highlight=boxes))
    assert text.count("{") == 5
    assert text.splitlines()[1] == "[  ]{  }{  }{  }"


def test_highlight_outside():
    with pytest.raises(InvalidHighlight):
        render(Y, RenderOptions(highlight=[(4, 1)]))


@pytest.mark.parametrize("size", [7, 129])
def test_cell_size_range(size):
    with pytest.raises(MalformedInput):
        RenderOptions(cell_size=size)


@given(partitions())
def test_ascii_shape(rows):
    D = YoungDiagram(rows)
    lines = render(D, RenderOptions(show_hooks=True)).splitlines()
    assert len(lines) == len(rows)
    grid = hook_grid(D)
    for i, line in enumerate(lines):
        assert [int(x) for x in re.findall(r"\[\s*(\d+)\]", line)] == [grid[i, j] for j in range(rows[i])]


@given(partitions())
def test_svg_well_formed(rows):
    D = YoungDiagram(rows)
    doc = render(D, RenderOptions(format=RenderFormat.SVG, show_hooks=True, highlight=[(0, 0)]))
    root = ET.fromstring(doc.encode())
    assert root.tag == f"{SVG_NS}svg" and root.get("version") == "1.1"
    rects = root.findall(f"{SVG_NS}rect")
    texts = root.findall(f"{SVG_NS}text")
    assert len(rects) == len(texts) == D.size
    assert {el.tag for el in root} <= {f"{SVG_NS}rect", f"{SVG_NS}text"}
    fills = [r.get("fill") for r in rects]
    assert fills.count("#f2c14e") == 1
    assert sorted(int(t.text) for t in texts) == sorted(hook_grid(D).values())


def test_svg_deterministic_and_plain():
    opts = RenderOptions(format=RenderFormat.SVG, cell_size=16)
    a, b = render(Y, opts), render(Y, opts)
    assert a == b
    root = ET.fromstring(a.encode())
    assert root.get("width") == str(6 * 16 + 2)
    assert not root.findall(f"{SVG_NS}text")


def test_parse_box():
    assert parse_box("1,1") == (1, 1)
    assert parse_box(" 2, 0 ") == (2, 0)
    for bad in ("1", "a,b", "1,2,3"):
        with pytest.raises(MalformedInput):
            parse_box(bad)
