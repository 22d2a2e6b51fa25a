"""Planar grid layout of F_2^n and renderers for Sidon sets.

The layout follows the recursive stacking construction: grids double
alternately downward (even target dimension) and rightward (odd), the new
bit being prepended as the most significant. The closed form below assigns
bit i (1-based from the MSB) to the columns iff i == n (mod 2).
"""

from dataclasses import dataclass

from .errors import CapabilityError, DomainError
from .sidon import IN_SET, ExcludeDistribution, PointSet

MAX_RENDER_M = 14


@dataclass(frozen=True)
class GridLayout:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be positive")

    @property
    def rows(self):
        return 1 << (self.n // 2)

    @property
    def cols(self):
        return 1 << ((self.n + 1) // 2)


def layout_index(n: int, v: int) -> tuple:
    """(row, col) of mask v in the 2^(n//2) x 2^((n+1)//2) grid."""
    if not 0 <= v < (1 << n):
        raise DomainError(f"mask {v:#x} out of range for n={n}")
    row = col = 0
    for i in range(1, n + 1):
        bit = (v >> (n - i)) & 1
        if i % 2 == n % 2:
            col = (col << 1) | bit
        else:
            row = (row << 1) | bit
    return row, col


def layout_by_stacking(n: int) -> list:
    """Build the layout by the recursive construction (test oracle).

    Returns a list mapping mask -> (row, col).
    """
    grid = [(0, 0), (0, 1)]  # dimension 1
    for dim in range(2, n + 1):
        if dim % 2 == 0:
            rows = 1 << ((dim - 1) // 2)
            grid = grid + [(r + rows, c) for r, c in grid]
        else:
            cols = 1 << (dim // 2)
            grid = grid + [(r, c + cols) for r, c in grid]
    return grid[: 1 << n] if n >= 1 else [(0, 0)]


def _cells(s: PointSet, dist):
    if s.m > MAX_RENDER_M:
        raise CapabilityError(f"rendering limited to m <= {MAX_RENDER_M}")
    if dist is not None and dist.m != s.m:
        raise DomainError("distribution dimension mismatch")
    layout = GridLayout(s.m)
    cells = {}
    members = set(int(p) for p in s.points)
    for v in range(1 << s.m):
        r, c = layout_index(s.m, v)
        if v in members:
            cells[(r, c)] = "#"
        elif dist is None:
            cells[(r, c)] = "."
        else:
            k = int(dist.mult[v])
            if k == IN_SET:
                raise DomainError("distribution does not match the set")
            cells[(r, c)] = str(k) if k > 0 else "."
    return layout, cells


def render_text(s: PointSet, dist: ExcludeDistribution = None) -> str:
    """Fixed-width grid: '#' for set points, multiplicities for excludes,
    '.' for zero-multiplicity cells."""
    layout, cells = _cells(s, dist)
    width = max(len(t) for t in cells.values())
    lines = []
    for r in range(layout.rows):
        lines.append(" ".join(cells[(r, c)].rjust(width) for c in range(layout.cols)))
    return "\n".join(lines) + "\n"


_STYLE = {
    "grid_stroke": "#999999",
    "diamond_fill": "#2e8b57",
    "label_fill": "#222222",
    "background": "#ffffff",
}


def render_svg(s: PointSet, dist: ExcludeDistribution = None, *,
               cell_size: int = 24, labels: bool = True) -> str:
    """Deterministic SVG: grid lines, diamonds for set points, centered
    multiplicity labels. No timestamps, stable across runs."""
    layout, cells = _cells(s, dist)
    w, h = layout.cols * cell_size, layout.rows * cell_size
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="{_STYLE["background"]}"/>',
    ]
    for r in range(layout.rows + 1):
        y = r * cell_size
        parts.append(f'<line x1="0" y1="{y}" x2="{w}" y2="{y}" '
                     f'stroke="{_STYLE["grid_stroke"]}" stroke-width="1"/>')
    for c in range(layout.cols + 1):
        x = c * cell_size
        parts.append(f'<line x1="{x}" y1="0" x2="{x}" y2="{h}" '
                     f'stroke="{_STYLE["grid_stroke"]}" stroke-width="1"/>')
    half = cell_size // 2
    quarter = cell_size // 4
    font = max(cell_size // 2 - 2, 6)
    for r in range(layout.rows):
        for c in range(layout.cols):
            token = cells[(r, c)]
            cx = c * cell_size + half
            cy = r * cell_size + half
            if token == "#":
                pts = (f"{cx},{cy - quarter} {cx + quarter},{cy} "
                       f"{cx},{cy + quarter} {cx - quarter},{cy}")
                parts.append(f'<polygon points="{pts}" fill="{_STYLE["diamond_fill"]}"/>')
            elif token != "." and labels:
                parts.append(
                    f'<text x="{cx}" y="{cy}" font-size="{font}" '
                    f'font-family="monospace" fill="{_STYLE["label_fill"]}" '
                    f'text-anchor="middle" dominant-baseline="central">{token}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path, s: PointSet, dist=None, *, cell_size=24, labels=True):
    svg = render_svg(s, dist, cell_size=cell_size, labels=labels)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg)
