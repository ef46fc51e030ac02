"""Shadow-line geometry for words with distinct letters.

Plot the word as white points (i, w_i) on the integer grid.  Sweeping left
to right, each point either starts a new jump line or attaches to the
leftmost existing line whose current endpoint is higher; attaching to a
line at height y' creates a northeast corner at (i, y').  The corners form
the skeleton: their heights, read in x order, are exactly the letters
bumped from row one during row insertion, and the number of lines is the
length of the first row.  Iterating the construction on the skeleton
recovers the whole shape one row at a time.

Only integer points and corner lists are materialized; the smooth curves
and the enclosing rectangle of the usual pictures are presentation devices
and are deliberately not modelled.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass

Point = tuple[int, int]


@dataclass(frozen=True)
class JumpLine:
    """One jump line: its points in sweep order."""

    points: tuple[Point, ...]

    @property
    def corners(self) -> tuple[Point, ...]:
        """Northeast corners between consecutive points."""
        pts = self.points
        return tuple((pts[i + 1][0], pts[i][1]) for i in range(len(pts) - 1))


@dataclass(frozen=True)
class JumpLineDiagram:
    """White points, their jump lines, and the skeleton of corners."""

    white_points: tuple[Point, ...]
    lines: tuple[JumpLine, ...]

    @property
    def skeleton(self) -> tuple[Point, ...]:
        """All corners, sorted by x (bump order)."""
        return tuple(sorted(c for line in self.lines for c in line.corners))


def _check_points(points: Sequence[Point]) -> list[Point]:
    pts = sorted((int(x), int(y)) for x, y in points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise ValueError("points need pairwise distinct x and distinct y coordinates")
    return pts


def diagram_of_points(points: Sequence[Point]) -> JumpLineDiagram:
    """Build the jump-line diagram of any point set with distinct coordinates."""
    pts = _check_points(points)
    lines: list[list[Point]] = []
    tops: list[int] = []  # current endpoint heights, ascending
    for p in pts:
        i = bisect_right(tops, p[1])
        if i == len(tops):
            lines.append([p])
            tops.append(p[1])
        else:
            lines[i].append(p)
            tops[i] = p[1]
    return JumpLineDiagram(tuple(pts), tuple(JumpLine(tuple(l)) for l in lines))


def build_diagram(w: Sequence[int]) -> JumpLineDiagram:
    """Diagram of the word's graph {(i, w_i)}; the letters must be distinct."""
    if len(set(w)) != len(w):
        raise ValueError("shadow-line construction needs distinct letters")
    return diagram_of_points([(i, x) for i, x in enumerate(w, start=1)])


def skeleton_word(diagram: JumpLineDiagram) -> tuple[int, ...]:
    """Corner heights in x order; equals bump_stream(w, 1) for the word's diagram."""
    return tuple(y for _, y in diagram.skeleton)


def iterated_shape(w: Sequence[int]) -> tuple[int, ...]:
    """Row lengths obtained by iterating the construction on successive skeletons.

    Row one is the line count of the word's diagram, row two the line count
    of its skeleton's diagram, and so on; agrees with the shape computed by
    row insertion.
    """
    if len(set(w)) != len(w):
        raise ValueError("shadow-line construction needs distinct letters")
    pts: list[Point] = [(i, x) for i, x in enumerate(w, start=1)]
    shape = []
    while pts:
        diagram = diagram_of_points(pts)
        shape.append(len(diagram.lines))
        pts = list(diagram.skeleton)
    return tuple(shape)


def _segments(line: JumpLine, x_max: int, y_max: int) -> set[tuple[int, int]]:
    """Integer points covered by the line's axis-parallel path, rays clipped."""
    covered: set[tuple[int, int]] = set()
    pts = line.points
    x0, y0 = pts[0]
    for y in range(y0, y_max + 2):  # initial vertical ray, upward
        covered.add((x0, y))
    for (xa, ya), (xb, yb) in zip(pts, pts[1:]):
        for x in range(xa, xb + 1):  # east at height ya to the corner
            covered.add((x, ya))
        for y in range(yb, ya + 1):  # down the corner to the next point
            covered.add((xb, y))
    xe, ye = pts[-1]
    for x in range(xe, x_max + 2):  # final horizontal ray, eastward
        covered.add((x, ye))
    return covered


def lines_are_disjoint(diagram: JumpLineDiagram) -> bool:
    """No two jump lines share an integer point (they neither touch nor cross)."""
    if not diagram.white_points:
        return True
    x_max = max(x for x, _ in diagram.white_points)
    y_max = max(y for _, y in diagram.white_points)
    seen: set[tuple[int, int]] = set()
    for line in diagram.lines:
        pts = _segments(line, x_max, y_max)
        if pts & seen:
            return False
        seen |= pts
    return True


def to_records(diagram: JumpLineDiagram) -> dict:
    """JSON-compatible dump: points, per-line points and corners, skeleton."""
    return {
        "white_points": [list(p) for p in diagram.white_points],
        "lines": [
            {"points": [list(p) for p in line.points],
             "corners": [list(c) for c in line.corners]}
            for line in diagram.lines
        ],
        "skeleton": [list(p) for p in diagram.skeleton],
    }


def render_text(diagram: JumpLineDiagram) -> str:
    """Plain-text grid: 'o' white points, 'x' skeleton corners, '.' empty."""
    if not diagram.white_points:
        return "(empty)"
    x_max = max(x for x, _ in diagram.white_points)
    y_max = max(y for _, y in diagram.white_points)
    grid = [["." for _ in range(x_max)] for _ in range(y_max)]
    for x, y in diagram.white_points:
        grid[y - 1][x - 1] = "o"
    for x, y in diagram.skeleton:
        grid[y - 1][x - 1] = "x"
    # highest y on top
    return "\n".join(" ".join(row) for row in reversed(grid))
