"""Exit criteria for the build, one test per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import time
from collections import Counter
from itertools import combinations
from math import comb

import pytest

from smallwitt.automorphisms import verify_batch
from smallwitt.census import census, classify_by_trisecants, classify_structurally, iter_sixsets, trisecants
from smallwitt.designs import Design, read_design, verify_steiner, write_design
from smallwitt.plane import build_plane
from smallwitt.witt import (
    COMPLEMENT_TYPE,
    SIXSET_TYPE,
    BlockType,
    ProofCase,
    block_containing,
    build_witt,
    complement_block,
    sixset_of_block,
)

criterion = pytest.mark.criterion


def _best_of(fn, repeat=5):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


@criterion(1, "plane axioms of PG(2,3), 78 point pairs and 78 line pairs, < 10 ms")
def test_ac01_plane_axioms():
    def build_and_resolve():
        plane = build_plane(3)
        joins = [plane.line_through(a, b) for a, b in combinations(plane.points, 2)]
        meets = [plane.meet(l, m) for l, m in combinations(plane.lines, 2)]
        return plane, joins, meets

    elapsed, (plane, joins, meets) = _best_of(build_and_resolve)
    assert elapsed < 0.010
    assert len(plane.points) == len(plane.lines) == 13
    assert all(len(p) == 4 for p in plane.points_on)
    assert all(len(l) == 4 for l in plane.lines_through)
    assert len(joins) == len(meets) == 78
    inc = plane.incidence
    for (a, b), line in zip(combinations(plane.points, 2), joins):
        assert [l for l in range(13) if inc[a.index][l] and inc[b.index][l]] == [line.index]
    for (l, m), point in zip(combinations(plane.lines, 2), meets):
        assert [p for p in range(13) if inc[p][l.index] and inc[p][m.index]] == [point.index]


@criterion(2, "6-set census (468, 78, 936, 234), total 1716, < 1 s")
def test_ac02_census():
    elapsed, report = _best_of(lambda: census(build_plane(3)), repeat=3)
    assert elapsed < 1.0
    assert report.counts == (468, 78, 936, 234)
    assert report.total == 1716 == comb(13, 6)


@criterion(3, "structural and trisecant classifiers agree on all 1716 six-sets")
def test_ac03_classifier_equivalence(plane):
    n = 0
    for S in iter_sixsets(plane):
        assert 1 <= len(trisecants(plane, S)) <= 4
        assert classify_structurally(plane, S) == classify_by_trisecants(plane, S)
        n += 1
    assert n == 1716


@criterion(4, "block counts (36, 42, 54), 132 distinct, for every U")
def test_ac04_block_counts(plane):
    for u in range(13):
        w = build_witt(plane, u)
        assert [w.type_counts()[t] for t in BlockType] == [36, 42, 54]
        assert len({b.members for b in w.blocks}) == 132


@criterion(5, "all 792 five-sets have r(M) = 1, sum r = 132*6 = 792")
def test_ac05_steiner(w12):
    report = verify_steiner(w12, 5)
    assert report.all_tsets == comb(12, 5) == 792
    assert report.r_histogram == {1: 792}
    assert report.sum_r == 132 * 6 == 792
    assert report.is_steiner


@criterion(6, "constructive covering agrees with brute force on 792 five-sets, all cases hit")
def test_ac06_constructive_covering(witt):
    hits = Counter()
    for M in combinations(witt.witt_points, 5):
        brute = [b for b in witt.blocks if set(M) <= set(b.members)]
        assert len(brute) == 1
        assert block_containing(witt, M, hits) == brute[0]
    for case in ProofCase:
        assert hits[case] >= 1, case
    assert sum(hits.values()) == 792


@criterion(7, "complement in W swaps types A<->B, C<->C for all 132 blocks; involution")
def test_ac07_complement_duality(witt):
    wrong = []
    for b in witt.blocks:
        c = complement_block(witt, b)
        assert set(c.members) == set(witt.witt_points) - set(b.members)
        assert complement_block(witt, c) == b
        if c.block_type is not COMPLEMENT_TYPE[b.block_type]:
            wrong.append((b.members, b.block_type.value, c.block_type.value))
    assert wrong == [], f"{len(wrong)} blocks violate the type swap: {wrong}"


@criterion(8, "P minus (B + U) has census type 1/2/4 for blocks A/B/C")
def test_ac08_block_sixset_correspondence(witt):
    for b in witt.blocks:
        _, kind = sixset_of_block(witt, b)
        assert kind is SIXSET_TYPE[b.block_type]


@criterion(9, "95040 automorphisms, re-verified, regular on ordered 5-tuples")
def test_ac09_automorphisms(w12, summary):
    assert summary.tuples_tried == 12 * 11 * 10 * 9 * 8
    assert summary.failed_extensions == 0 and summary.ambiguous_extensions == 0
    assert summary.order == len(set(summary.elements)) == 95040
    assert verify_batch(w12, summary.elements).all()
    assert len({tuple(p[b] for b in summary.base) for p in summary.elements}) == 95040
    assert summary.sharply_5_transitive


@criterion(10, "checker regression: S(2,3,7), S(2,4,13), W12 minus a block has 6 uncovered")
def test_ac10_checker_regression(fano, plane, w12):
    assert verify_steiner(Design.canonical(7, 3, fano.blocks()), 2).is_steiner
    assert verify_steiner(Design.canonical(13, 4, plane.blocks()), 2).is_steiner
    report = verify_steiner(Design(12, 6, w12.blocks[:-1]), 5)
    assert not report.is_steiner
    assert len(report.failures) == 6 and report.r_histogram[0] == 6


@criterion(11, "write_design . read_design is byte-identical on W12")
def test_ac11_round_trip(w12):
    text = write_design(w12)
    assert write_design(read_design(text)) == text
    assert read_design(text) == w12
