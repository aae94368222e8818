from itertools import combinations

import pytest

from smallwitt.plane import build_plane, canonical_triple


def incident_lines(plane, i, j):
    """Oracle: scan the incidence table for lines through both points."""
    return [l for l in range(plane.size) if plane.incidence[i][l] and plane.incidence[j][l]]


def common_points(plane, l, m):
    return [p for p in range(plane.size) if plane.incidence[p][l] and plane.incidence[p][m]]


@pytest.mark.parametrize("q, n, k", [(2, 7, 3), (3, 13, 4), (5, 31, 6), (7, 57, 8)])
def test_plane_parameters(q, n, k):
    plane = build_plane(q)
    assert len(plane.points) == len(plane.lines) == n
    assert all(len(pts) == k for pts in plane.points_on)
    assert all(len(ls) == k for ls in plane.lines_through)


@pytest.mark.parametrize("q", [4, 6, 11, 1, 0])
def test_bad_order(q):
    with pytest.raises(ValueError):
        build_plane(q)


def test_canonical_indexing(plane):
    assert plane.points[0].triple == (0, 0, 1)
    triples = [p.triple for p in plane.points]
    assert triples == sorted(triples)
    assert all(t[next(i for i, c in enumerate(t) if c)] == 1 for t in triples)
    assert [l.triple for l in plane.lines] == triples


def test_canonical_triple_scaling():
    assert canonical_triple((0, 2, 1), 3) == (0, 1, 2)
    assert canonical_triple((2, 2, 2), 3) == (1, 1, 1)
    with pytest.raises(ValueError):
        canonical_triple((0, 0, 0), 3)


def test_line_x0_contains_points_with_zero_first_coordinate(plane):
    line = plane.line((1, 0, 0))
    on = {plane.points[i].triple for i in plane.points_on[line.index]}
    assert on == {p.triple for p in plane.points if p.triple[0] == 0}
    assert len(on) == 4


def test_line_through_examples(plane):
    assert plane.line_through(plane.point((0, 0, 1)), plane.point((0, 1, 0))).triple == (1, 0, 0)
    assert plane.line_through(plane.point((1, 0, 0)), plane.point((0, 1, 0))).triple == (0, 0, 1)


def test_meet_examples(plane):
    assert plane.meet(plane.line((1, 0, 0)), plane.line((0, 1, 0))).triple == (0, 0, 1)
    A, B, C = plane.point((1, 0, 0)), plane.point((0, 1, 0)), plane.point((0, 0, 1))
    assert plane.meet(plane.line_through(A, B), plane.line_through(A, C)) == A


@pytest.mark.parametrize("q", [2, 3, 5])
def test_line_through_matches_incidence_oracle(q):
    plane = build_plane(q)
    for a, b in combinations(plane.points, 2):
        expected = incident_lines(plane, a.index, b.index)
        assert len(expected) == 1
        line = plane.line_through(a, b)
        assert line.index == expected[0]
        assert {a.index, b.index} <= set(plane.points_on[line.index])


@pytest.mark.parametrize("q", [2, 3, 5])
def test_meet_matches_incidence_oracle(q):
    plane = build_plane(q)
    for l, m in combinations(plane.lines, 2):
        expected = common_points(plane, l.index, m.index)
        assert len(expected) == 1
        assert plane.meet(l, m).index == expected[0]


def test_equal_arguments_rejected(plane):
    with pytest.raises(ValueError, match="line undefined for equal points"):
        plane.line_through(plane.points[3], plane.points[3])
    with pytest.raises(ValueError):
        plane.meet(plane.lines[2], plane.lines[2])


def test_duality(plane):
    # points and lines share the same triples, so swapping roles transposes the table
    n = plane.size
    assert all(plane.incidence[i][j] == plane.incidence[j][i] for i in range(n) for j in range(n))


def test_deterministic(plane):
    again = build_plane(3)
    assert again.points == plane.points
    assert again.lines == plane.lines
    assert again.incidence == plane.incidence


def test_collinear(plane):
    line = plane.points_on[5]
    assert plane.collinear(*line[:3])
    assert not plane.collinear(0, 1, 4)  # (0,0,1), (0,1,0), (1,0,0)
