"""Classification of the 6-point subsets of PG(2, 3).

Two independent classifiers are provided.  ``classify_by_trisecants`` only
counts lines meeting the set in exactly three points.  ``classify_structurally``
never counts trisecants: it matches the set against explicitly generated
configurations (line plus two points, symmetric difference of two lines,
triangle with an inscribed triangle, vertex set of a quadrilateral).  Their
agreement over all 1716 six-sets is checked by the test suite.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import combinations
from math import comb

from smallwitt.errors import InvariantError
from smallwitt.plane import Plane, ProjLine


class SixSetType(IntEnum):
    TYPE1 = 1  # a line and two further points
    TYPE2 = 2  # symmetric difference of two lines
    TYPE3 = 3  # triangle plus inscribed triangle
    TYPE4 = 4  # vertices of a quadrilateral


@dataclass(frozen=True)
class PointSet:
    members: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.members)
        if any(a >= b for a, b in zip(m, m[1:])):
            raise ValueError(f"members must be strictly increasing: {m}")
        if m and m[0] < 0:
            raise ValueError(f"negative point index in {m}")
        object.__setattr__(self, "members", m)

    @classmethod
    def of(cls, points: Iterable[int]) -> PointSet:
        return cls(tuple(sorted(set(points))))

    @classmethod
    def from_mask(cls, mask: int) -> PointSet:
        return cls(tuple(i for i in range(mask.bit_length()) if mask >> i & 1))

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, i):
        return i in self.members


@dataclass(frozen=True)
class CensusReport:
    type1: int
    type2: int
    type3: int
    type4: int

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.type1, self.type2, self.type3, self.type4)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[str, int]:
        return {"type1": self.type1, "type2": self.type2, "type3": self.type3,
                "type4": self.type4, "total": self.total}


def to_mask(points: Iterable[int] | int) -> int:
    """Bit mask of a point collection; an int is taken to be a mask already."""
    if isinstance(points, int):
        return points
    if isinstance(points, PointSet):
        return points.mask
    mask = 0
    for i in points:
        mask |= 1 << i
    return mask


def _six_mask(plane: Plane, S) -> int:
    mask = to_mask(S)
    if mask.bit_count() != 6:
        raise ValueError(f"expected a 6-set, got {mask.bit_count()} points")
    if mask >> plane.size:
        raise ValueError("point index out of range")
    return mask


def trisecant_indices(plane: Plane, mask: int) -> list[int]:
    return [l for l, lm in enumerate(plane.line_masks) if (lm & mask).bit_count() == 3]


def trisecants(plane: Plane, S) -> list[ProjLine]:
    """Lines meeting the 6-set S in exactly three points, by line index."""
    mask = _six_mask(plane, S)
    return [plane.lines[l] for l in trisecant_indices(plane, mask)]


def classify_by_trisecants(plane: Plane, S) -> SixSetType:
    n = len(trisecant_indices(plane, _six_mask(plane, S)))
    if not 1 <= n <= 4:
        raise InvariantError(f"6-set {PointSet.from_mask(to_mask(S)).members} has {n} trisecants")
    return SixSetType(n)


@dataclass(frozen=True)
class _Configurations:
    symmetric_differences: dict[int, tuple[int, int]]
    inscribed_triangles: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]
    quadrilaterals: dict[int, tuple[int, ...]]
    duplicates: int


@lru_cache(maxsize=16)
def configurations(plane: Plane) -> _Configurations:
    """Every type-2, type-3 and type-4 configuration of the plane, keyed by point mask."""
    lm = plane.line_masks
    dup = 0

    symdiff: dict[int, tuple[int, int]] = {}
    for a, b in combinations(range(plane.size), 2):
        key = lm[a] ^ lm[b]
        dup += key in symdiff
        symdiff[key] = (a, b)

    inscribed: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for A, B, C in combinations(range(plane.size), 3):
        if plane.collinear(A, B, C):
            continue
        sides = (plane.join(B, C), plane.join(C, A), plane.join(A, B))
        interiors = [[x for x in plane.points_on[s] if x not in (A, B, C)] for s in sides]
        for P in interiors[0]:
            for Q in interiors[1]:
                for R in interiors[2]:
                    if plane.collinear(P, Q, R):
                        continue
                    key = to_mask((A, B, C, P, Q, R))
                    dup += key in inscribed
                    inscribed[key] = ((A, B, C), (P, Q, R))

    quads: dict[int, tuple[int, ...]] = {}
    for four in combinations(range(plane.size), 4):
        if any(lm[a] & lm[b] & lm[c] for a, b, c in combinations(four, 3)):
            continue  # three concurrent lines
        key = 0
        for a, b in combinations(four, 2):
            key |= lm[a] & lm[b]
        dup += key in quads
        quads[key] = four

    return _Configurations(symdiff, inscribed, quads, dup)


def structural_predicates(plane: Plane, S) -> dict[SixSetType, bool]:
    mask = _six_mask(plane, S)
    cfg = configurations(plane)
    return {
        SixSetType.TYPE1: any(lm & mask == lm for lm in plane.line_masks),
        SixSetType.TYPE2: mask in cfg.symmetric_differences,
        SixSetType.TYPE3: mask in cfg.inscribed_triangles,
        SixSetType.TYPE4: mask in cfg.quadrilaterals,
    }


def classify_structurally(plane: Plane, S) -> SixSetType:
    """Type of S from its geometric shape; all four predicates are evaluated."""
    hits = [t for t, ok in structural_predicates(plane, S).items() if ok]
    if len(hits) != 1:
        raise InvariantError(
            f"6-set {PointSet.from_mask(to_mask(S)).members} matches types {[int(t) for t in hits]}"
        )
    return hits[0]


def triangle_roles(plane: Plane, S) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Split a type-3 set into its basic triangle (A, B, C) and inscribed triangle (P, Q, R).

    Basic vertices lie on two trisecants each, inscribed ones on one.  The
    inscribed triple is aligned so that P is on BC, Q on CA and R on AB.
    """
    mask = _six_mask(plane, S)
    tris = trisecant_indices(plane, mask)
    if len(tris) != 3:
        raise ValueError(f"not a type-3 set ({len(tris)} trisecants)")
    members = PointSet.from_mask(mask).members
    degree = {x: sum(plane.line_masks[l] >> x & 1 for l in tris) for x in members}
    basic = tuple(x for x in members if degree[x] == 2)
    inscribed = [x for x in members if degree[x] == 1]
    if len(basic) != 3 or len(inscribed) != 3:
        raise InvariantError(f"type-3 set {members} has degree profile {sorted(degree.values())}")

    A, B, C = basic
    aligned = []
    for u, v in ((B, C), (C, A), (A, B)):
        side = plane.line_masks[plane.join(u, v)]
        on_side = [x for x in inscribed if side >> x & 1]
        if len(on_side) != 1:
            raise InvariantError(f"side through {u},{v} of {members} holds {on_side}")
        aligned.append(on_side[0])
    for x in inscribed:
        sides_hit = sum(plane.line_masks[plane.join(u, v)] >> x & 1 for u, v in ((B, C), (C, A), (A, B)))
        if sides_hit != 1:
            raise InvariantError(f"inscribed point {x} lies on {sides_hit} sides")
    return basic, tuple(aligned)


def iter_sixsets(plane: Plane):
    """All 6-subsets as sorted index tuples, in lexicographic order."""
    return combinations(range(plane.size), 6)


def census(plane: Plane) -> CensusReport:
    if plane.q != 3:
        raise ValueError(f"the 6-set census is specific to order 3, got q={plane.q}")
    counts = [0, 0, 0, 0]
    for S in iter_sixsets(plane):
        counts[classify_by_trisecants(plane, S) - 1] += 1
    report = CensusReport(*counts)
    if report.total != comb(plane.size, 6):
        raise InvariantError(f"census total {report.total} != C(13,6)")
    return report
