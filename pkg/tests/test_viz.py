"""Grid layout and renderers."""

import xml.etree.ElementTree as ET

import pytest

from sidonlab import GridLayout, PointSet, exclude_distribution, layout_index
from sidonlab.errors import CapabilityError, DomainError
from sidonlab.viz import layout_by_stacking, render_svg, render_text, write_svg


def test_grid_shape():
    g = GridLayout(5)
    assert (g.rows, g.cols) == (4, 8)
    assert (GridLayout(1).rows, GridLayout(1).cols) == (1, 2)
    with pytest.raises(DomainError):
        GridLayout(0)


def test_layout_n1_golden():
    assert layout_index(1, 0) == (0, 0)
    assert layout_index(1, 1) == (0, 1)


def test_layout_n2_golden():
    # rows of the 2x2 grid: [00, 01], [10, 11]
    expected = {0b00: (0, 0), 0b01: (0, 1), 0b10: (1, 0), 0b11: (1, 1)}
    for v, rc in expected.items():
        assert layout_index(2, v) == rc


def test_layout_n3_golden():
    # rows of the 2x4 grid: [000, 001, 100, 101], [010, 011, 110, 111]
    expected = {
        0b000: (0, 0), 0b001: (0, 1), 0b100: (0, 2), 0b101: (0, 3),
        0b010: (1, 0), 0b011: (1, 1), 0b110: (1, 2), 0b111: (1, 3),
    }
    for v, rc in expected.items():
        assert layout_index(3, v) == rc


@pytest.mark.parametrize("n", range(1, 11))
def test_layout_matches_stacking_recursion(n):
    oracle = layout_by_stacking(n)
    for v in range(1 << n):
        assert layout_index(n, v) == oracle[v]


@pytest.mark.parametrize("n", range(1, 15))
def test_layout_bijective(n):
    g = GridLayout(n)
    cells = {layout_index(n, v) for v in range(1 << n)}
    assert len(cells) == 1 << n
    assert all(0 <= r < g.rows and 0 <= c < g.cols for r, c in cells)


def test_layout_range_check():
    with pytest.raises(DomainError):
        layout_index(3, 8)


def test_render_text_golden():
    s = PointSet.of(3, [0, 1, 2, 4])
    dist = exclude_distribution(s)
    assert render_text(s, dist) == "# # # 1\n# 1 1 1\n"
    assert render_text(s) == "# # # .\n# . . .\n"


def test_render_text_mismatched_dist():
    s = PointSet.of(3, [0, 1, 2, 4])
    other = exclude_distribution(PointSet.of(3, [0, 1, 2, 5]))
    with pytest.raises(DomainError):
        render_text(s, other)


def test_render_svg_stable_and_wellformed(tmp_path):
    s = PointSet.of(4, [0, 1, 2, 4, 8, 15])
    dist = exclude_distribution(s)
    svg1 = render_svg(s, dist)
    svg2 = render_svg(s, dist)
    assert svg1 == svg2
    root = ET.fromstring(svg1)
    assert root.tag.endswith("svg")
    tags = [child.tag.split("}")[-1] for child in root.iter()]
    assert tags.count("polygon") == 6  # one diamond per set point
    out = tmp_path / "pic.svg"
    write_svg(out, s, dist)
    assert out.read_text() == svg1
    # options change the output deterministically
    assert render_svg(s, dist, cell_size=40) != svg1
    assert "text" not in render_svg(s, dist, labels=False)


def test_render_capability_limit():
    with pytest.raises(CapabilityError):
        render_text(PointSet.of(15, [0, 1, 2]))
