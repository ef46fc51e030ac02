import itertools

import pytest

from schurweyl.rsk import bump_stream, sh_rsk
from schurweyl.sampling import make_rng
from schurweyl.viennot import (
    JumpLine,
    build_diagram,
    diagram_of_points,
    iterated_shape,
    lines_are_disjoint,
    render_text,
    skeleton_word,
    to_records,
)


def test_jump_line_corners():
    line = JumpLine(((1, 3), (2, 5), (4, 6)))
    # corner between consecutive points: next x over previous y
    assert line.corners == ((2, 3), (4, 5))
    assert JumpLine(((1, 2),)).corners == ()


def test_worked_permutation():
    w = (3, 1, 2, 5, 4)
    diagram = build_diagram(w)
    sh = sh_rsk(w)
    assert len(diagram.lines) == sh[0]
    assert skeleton_word(diagram) == bump_stream(w, 1)
    assert iterated_shape(w) == sh


def test_line_membership_partition():
    w = (3, 1, 2, 5, 4)
    diagram = build_diagram(w)
    covered = [p for line in diagram.lines for p in line.points]
    assert sorted(covered) == sorted(diagram.white_points)


def test_rejects_repeated_letters():
    with pytest.raises(ValueError):
        build_diagram((1, 2, 1))
    with pytest.raises(ValueError):
        diagram_of_points(((1, 1), (2, 1)))


def test_empty_word():
    diagram = build_diagram(())
    assert diagram.lines == ()
    assert skeleton_word(diagram) == ()
    assert iterated_shape(()) == ()


def test_exhaustive_small_permutations():
    for n in range(1, 8):
        for p in itertools.permutations(range(1, n + 1)):
            diagram = build_diagram(p)
            assert skeleton_word(diagram) == bump_stream(p, 1)
            assert iterated_shape(p) == sh_rsk(p)
            assert lines_are_disjoint(diagram)


def test_random_large_permutations():
    rng = make_rng(800)
    for _ in range(200):
        n = int(rng.integers(1, 61))
        p = tuple(int(x) for x in rng.permutation(n) + 1)
        diagram = build_diagram(p)
        assert skeleton_word(diagram) == bump_stream(p, 1)
        assert iterated_shape(p) == sh_rsk(p)
    # disjointness is slower, spot-check a few
    for _ in range(30):
        n = int(rng.integers(1, 41))
        p = tuple(int(x) for x in rng.permutation(n) + 1)
        assert lines_are_disjoint(build_diagram(p))


def test_to_records_round_trip_fields():
    w = (2, 1, 3)
    rec = to_records(build_diagram(w))
    assert rec["white_points"] == [[1, 2], [2, 1], [3, 3]]
    assert len(rec["lines"]) == 2
    # the lone corner carries the bumped letter 2 as its height
    assert rec["skeleton"] == [[2, 2]]
    assert rec["lines"][0]["corners"] == [[2, 2]]


def test_render_text_marks_points_and_corners():
    art = render_text(build_diagram((2, 1, 3)))
    assert art.count("o") == 3
    assert art.count("x") == 1
    # highest letter appears on the top line
    lines = art.splitlines()
    assert "o" in lines[0]
