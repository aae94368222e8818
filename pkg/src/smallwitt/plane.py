"""The projective plane PG(2, q) over a prime field, as an explicit incidence structure.

Points and lines are both canonical homogeneous triples (first nonzero
coordinate equal to 1).  Indices follow the lexicographic order of those
triples, so ``(0, 0, 1)`` is always index 0.  A point lies on a line iff the
dot product of their triples vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from smallwitt.gf import SUPPORTED_PRIMES, FieldElement, ff_inv

Triple = tuple[int, int, int]


def canonical_triple(coords, q: int) -> Triple:
    """Scale a nonzero triple so that its first nonzero coordinate is 1."""
    elems = [FieldElement(int(c), q) for c in coords]
    if len(elems) != 3:
        raise ValueError(f"expected 3 coordinates, got {len(elems)}")
    lead = next((e for e in elems if e), None)
    if lead is None:
        raise ValueError("the zero triple is not a projective point")
    scale = ff_inv(lead)
    return tuple(int(e * scale) for e in elems)


def cross(u, v, q: int) -> Triple:
    return (
        (u[1] * v[2] - u[2] * v[1]) % q,
        (u[2] * v[0] - u[0] * v[2]) % q,
        (u[0] * v[1] - u[1] * v[0]) % q,
    )


@dataclass(frozen=True, order=True)
class ProjPoint:
    index: int
    triple: Triple


@dataclass(frozen=True, order=True)
class ProjLine:
    index: int
    triple: Triple


@dataclass(frozen=True, eq=False)
class Plane:
    q: int
    points: tuple[ProjPoint, ...]
    lines: tuple[ProjLine, ...]
    incidence: tuple[tuple[bool, ...], ...]  # [point][line]
    lines_through: tuple[tuple[int, ...], ...]
    points_on: tuple[tuple[int, ...], ...]
    line_masks: tuple[int, ...] = field(repr=False)
    _index_of: dict = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def point(self, coords) -> ProjPoint:
        return self.points[self._index_of[canonical_triple(coords, self.q)]]

    def line(self, coords) -> ProjLine:
        return self.lines[self._index_of[canonical_triple(coords, self.q)]]

    def line_through(self, a: ProjPoint, b: ProjPoint) -> ProjLine:
        """The line AB joining two distinct points."""
        if a.triple == b.triple:
            raise ValueError("line undefined for equal points")
        return self.line(cross(a.triple, b.triple, self.q))

    def meet(self, a: ProjLine, b: ProjLine) -> ProjPoint:
        """The common point of two distinct lines."""
        if a.triple == b.triple:
            raise ValueError("meet undefined for equal lines")
        return self.point(cross(a.triple, b.triple, self.q))

    # Index-level shortcuts used by the combinatorial modules.

    def join(self, i: int, j: int) -> int:
        return self.line_through(self.points[i], self.points[j]).index

    def meet_index(self, l: int, m: int) -> int:
        return self.meet(self.lines[l], self.lines[m]).index

    def collinear(self, *idx: int) -> bool:
        mask = 0
        for i in idx:
            mask |= 1 << i
        return any(mask & lm == mask for lm in self.line_masks)

    def blocks(self) -> list[tuple[int, ...]]:
        """Lines as point-index tuples, i.e. the plane viewed as an S(2, q+1, q²+q+1)."""
        return [tuple(pts) for pts in self.points_on]


def build_plane(q: int = 3) -> Plane:
    if q not in SUPPORTED_PRIMES:
        raise ValueError(f"q must be a prime <= 7, got {q!r}")

    triples = [t for t in product(range(q), repeat=3) if any(t) and t[next(i for i, c in enumerate(t) if c)] == 1]
    index_of = {t: i for i, t in enumerate(triples)}
    points = tuple(ProjPoint(i, t) for i, t in enumerate(triples))
    lines = tuple(ProjLine(i, t) for i, t in enumerate(triples))

    incidence = tuple(
        tuple(sum(a * b for a, b in zip(p.triple, l.triple)) % q == 0 for l in lines)
        for p in points
    )
    lines_through = tuple(
        tuple(l.index for l in lines if incidence[p.index][l.index]) for p in points
    )
    points_on = tuple(
        tuple(p.index for p in points if incidence[p.index][l.index]) for l in lines
    )
    line_masks = tuple(sum(1 << i for i in pts) for pts in points_on)
    return Plane(q, points, lines, incidence, lines_through, points_on, line_masks, index_of)
