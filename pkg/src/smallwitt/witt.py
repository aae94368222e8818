"""The small Witt design on the twelve points of PG(2, 3) minus one point U.

Blocks are 6-subsets of W = P minus U of three kinds:

A  symmetric difference of two lines, neither through U;
B  (a ∪ b) minus U for two lines a, b with U on at least one of them;
C  a quadrangle plus two of its diagonal points, U being the third.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from smallwitt.census import (
    PointSet,
    SixSetType,
    classify_by_trisecants,
    to_mask,
    triangle_roles,
    trisecant_indices,
)
from smallwitt.designs import Design
from smallwitt.errors import InvariantError
from smallwitt.plane import Plane, ProjPoint


class BlockType(Enum):
    A = "A"
    B = "B"
    C = "C"


COMPLEMENT_TYPE = {BlockType.A: BlockType.B, BlockType.B: BlockType.A, BlockType.C: BlockType.C}
SIXSET_TYPE = {BlockType.A: SixSetType.TYPE1, BlockType.B: SixSetType.TYPE2, BlockType.C: SixSetType.TYPE4}


class ProofCase(Enum):
    """Which branch of the covering argument produced a block for a 5-set M."""

    LINE_AND_TWO_POINTS = "type1"
    SYMMETRIC_DIFFERENCE = "type2"
    U_INSCRIBED = "type3-inscribed"
    U_BASIC = "type3-basic"
    QUADRILATERAL = "type4"


@dataclass(frozen=True)
class Quadrangle:
    vertices: tuple[int, int, int, int]
    diagonal_points: tuple[int, int, int]

    @classmethod
    def of(cls, plane: Plane, vertices) -> Quadrangle:
        v = tuple(sorted(vertices))
        return cls(v, diagonal_points(plane, v))


def diagonal_points(plane: Plane, vertices) -> tuple[int, int, int]:
    """AB∩CD, AC∩BD, AD∩BC for a quadrangle ABCD, sorted by point index."""
    v = tuple(vertices)
    if len(set(v)) != 4:
        raise ValueError(f"a quadrangle needs 4 distinct points, got {v}")
    if any(plane.collinear(*three) for three in combinations(v, 3)):
        raise ValueError(f"degenerate quadrangle {v}: three vertices are collinear")
    A, B, C, D = v
    diag = [
        plane.meet_index(plane.join(x, y), plane.join(z, w))
        for (x, y), (z, w) in (((A, B), (C, D)), ((A, C), (B, D)), ((A, D), (B, C)))
    ]
    if len(set(diag)) != 3 or set(diag) & set(v):
        # would mean a Fano configuration, impossible in odd characteristic
        raise InvariantError(f"diagonal points {diag} of {v} degenerate")
    return tuple(sorted(diag))


@dataclass(frozen=True)
class Block:
    members: tuple[int, ...]
    block_type: BlockType
    lines: tuple[int, int] | None = None
    quadrangle: tuple[int, int, int, int] | None = None
    diagonals: tuple[int, int] | None = None

    @property
    def mask(self) -> int:
        return to_mask(self.members)

    def witness(self) -> str:
        if self.block_type is BlockType.C:
            return f"quadrangle={','.join(map(str, self.quadrangle))} diagonals={','.join(map(str, self.diagonals))}"
        return f"lines={self.lines[0]},{self.lines[1]}"


@dataclass(frozen=True, eq=False)
class WittDesign:
    plane: Plane
    u: int
    witt_points: tuple[int, ...]
    blocks: tuple[Block, ...]
    _by_mask: dict[int, Block] = field(repr=False)

    @property
    def U(self) -> ProjPoint:
        return self.plane.points[self.u]

    @property
    def point_mask(self) -> int:
        return to_mask(self.witt_points)

    def type_counts(self) -> dict[BlockType, int]:
        c = Counter(b.block_type for b in self.blocks)
        return {t: c[t] for t in BlockType}

    def find(self, members) -> Block | None:
        return self._by_mask.get(to_mask(members))

    def dense(self, plane_index: int) -> int:
        return self.witt_points.index(plane_index)

    def to_design(self) -> Design:
        """The design on [0, 12) obtained by renumbering W in increasing order."""
        dense = {p: i for i, p in enumerate(self.witt_points)}
        return Design.canonical(12, 6, [tuple(dense[x] for x in b.members) for b in self.blocks], t=5)


def block_from_witness(plane: Plane, u: int, block: Block) -> int:
    """Regenerate a block's point mask from its stored witness."""
    lm = plane.line_masks
    if block.block_type is BlockType.A:
        a, b = block.lines
        return lm[a] ^ lm[b]
    if block.block_type is BlockType.B:
        a, b = block.lines
        return (lm[a] | lm[b]) & ~(1 << u)
    quad = Quadrangle.of(plane, block.quadrangle)
    if u not in quad.diagonal_points or set(block.diagonals) != set(quad.diagonal_points) - {u}:
        raise InvariantError(f"type-C witness of {block.members} does not have U as a diagonal point")
    return to_mask(quad.vertices + block.diagonals)


def _type_a(plane: Plane, u: int) -> list[Block]:
    off_u = [l for l in range(plane.size) if not plane.incidence[u][l]]
    lm = plane.line_masks
    return [Block(PointSet.from_mask(lm[a] ^ lm[b]).members, BlockType.A, lines=(a, b))
            for a, b in combinations(off_u, 2)]


def _type_b(plane: Plane, u: int) -> list[Block]:
    lm = plane.line_masks
    return [Block(PointSet.from_mask((lm[a] | lm[b]) & ~(1 << u)).members, BlockType.B, lines=(a, b))
            for a, b in combinations(range(plane.size), 2)
            if plane.incidence[u][a] or plane.incidence[u][b]]


def _type_c(plane: Plane, u: int) -> list[Block]:
    out = []
    for a, b in combinations(plane.lines_through[u], 2):
        on_a = [x for x in plane.points_on[a] if x != u]
        on_b = [x for x in plane.points_on[b] if x != u]
        for pa in combinations(on_a, 2):
            for pb in combinations(on_b, 2):
                quad = Quadrangle.of(plane, pa + pb)
                if u not in quad.diagonal_points:
                    raise InvariantError(f"U is not a diagonal point of {quad.vertices}")
                kept = tuple(d for d in quad.diagonal_points if d != u)
                members = tuple(sorted(quad.vertices + kept))
                out.append(Block(members, BlockType.C, quadrangle=quad.vertices, diagonals=kept))
    return out


def build_witt(plane: Plane, u: int | ProjPoint = 0) -> WittDesign:
    if plane.q != 3:
        raise ValueError(f"the Witt construction needs the plane of order 3, got q={plane.q}")
    if isinstance(u, ProjPoint):
        u = u.index
    if not 0 <= u < plane.size:
        raise ValueError(f"U must be a point index in [0, {plane.size}), got {u}")

    by_mask: dict[int, Block] = {}
    for block in _type_a(plane, u) + _type_b(plane, u) + _type_c(plane, u):
        if block.mask in by_mask:
            raise InvariantError(
                f"block {block.members} generated as both {by_mask[block.mask].block_type.value} "
                f"and {block.block_type.value}"
            )
        by_mask[block.mask] = block
    blocks = tuple(sorted(by_mask.values(), key=lambda b: b.members))
    witt_points = tuple(i for i in range(plane.size) if i != u)
    return WittDesign(plane, u, witt_points, blocks, by_mask)


def _require_block(design: WittDesign, block: Block) -> Block:
    found = design.find(block.members)
    if found is None:
        raise LookupError(f"{block.members} is not a block of this design")
    return found


def complement_block(design: WittDesign, block: Block) -> Block:
    block = _require_block(design, block)
    comp = design.point_mask & ~block.mask
    result = design._by_mask.get(comp)
    if result is None:
        raise InvariantError(f"complement of block {block.members} is not a block")
    return result


def sixset_of_block(design: WittDesign, block: Block) -> tuple[PointSet, SixSetType]:
    """P minus (B ∪ {U}) and its census type."""
    block = _require_block(design, block)
    full = (1 << design.plane.size) - 1
    rest = full & ~block.mask & ~(1 << design.u)
    return PointSet.from_mask(rest), classify_by_trisecants(design.plane, rest)


def block_containing(design: WittDesign, M, hits: Counter | None = None) -> Block:
    """Build the block through the 5-set M by case analysis on the type of M ∪ {U}.

    If ``hits`` is given, the :class:`ProofCase` used is counted in it.
    """
    plane, u = design.plane, design.u
    m_mask = to_mask(M)
    if m_mask.bit_count() != 5:
        raise ValueError(f"expected a 5-set, got {m_mask.bit_count()} points")
    if m_mask & ~design.point_mask:
        raise ValueError("M must be a subset of W (U and out-of-range indices excluded)")

    case, members = _construct(plane, u, m_mask | 1 << u)
    if m_mask & ~members or members.bit_count() != 6:
        raise InvariantError(f"case {case.value} built {PointSet.from_mask(members).members}, not a superset of M")
    block = design._by_mask.get(members)
    if block is None:
        raise InvariantError(f"case {case.value} built a non-block {PointSet.from_mask(members).members}")
    if hits is not None:
        hits[case] += 1
    return block


def _construct(plane: Plane, u: int, s_mask: int) -> tuple[ProofCase, int]:
    lm = plane.line_masks
    bit_u = 1 << u
    kind = classify_by_trisecants(plane, s_mask)

    if kind is SixSetType.TYPE1:
        (a,) = [l for l in range(plane.size) if lm[l] & s_mask == lm[l]]
        e1, e2 = PointSet.from_mask(s_mask & ~lm[a]).members
        b = plane.join(e1, e2)
        if not (lm[a] | lm[b]) & bit_u:
            raise InvariantError("U is on neither line of a type-1 decomposition")
        return ProofCase.LINE_AND_TWO_POINTS, (lm[a] | lm[b]) & ~bit_u

    if kind is SixSetType.TYPE2:
        a, b = trisecant_indices(plane, s_mask)
        return ProofCase.SYMMETRIC_DIFFERENCE, (lm[a] | lm[b]) & ~bit_u

    if kind is SixSetType.TYPE3:
        basic, inscribed = triangle_roles(plane, s_mask)
        if u in inscribed:
            # rotate labels so that R = U; P on BC, Q on CA stay aligned
            k = (inscribed.index(u) + 1) % 3
            A, B, C = basic[k:] + basic[:k]
            P, Q, R = inscribed[k:] + inscribed[:k]
            X = plane.meet_index(plane.join(A, P), plane.join(B, Q))
            if not plane.incidence[X][plane.join(C, R)]:
                raise InvariantError(f"X={X} is not on CR")
            return ProofCase.U_INSCRIBED, to_mask((A, B, C, X, P, Q))
        # rotate labels so that C = U
        k = (basic.index(u) + 1) % 3
        A, B, C = basic[k:] + basic[:k]
        P, Q, R = inscribed[k:] + inscribed[:k]
        ab, pq = lm[plane.join(A, B)], lm[plane.join(P, Q)]
        if (ab | pq) & bit_u:
            raise InvariantError("U lies on AB or PQ")
        return ProofCase.U_BASIC, ab ^ pq

    sides = trisecant_indices(plane, s_mask)
    a, b = [l for l in sides if lm[l] & bit_u]
    A, B = PointSet.from_mask(lm[a] & s_mask & ~bit_u).members
    C, D = PointSet.from_mask(lm[b] & s_mask & ~bit_u).members
    (E,) = PointSet.from_mask(s_mask & ~(lm[a] | lm[b])).members
    diag = diagonal_points(plane, (A, B, C, D))
    if u not in diag or E not in diag:
        raise InvariantError(f"U={u} and E={E} are not both diagonal points of {(A, B, C, D)}")
    (X,) = [d for d in diag if d not in (u, E)]
    return ProofCase.QUADRILATERAL, to_mask((A, B, C, D, E, X))
