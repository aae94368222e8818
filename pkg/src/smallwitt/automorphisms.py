"""Automorphisms of the 12-point Witt design by base-image extension.

Fix an ordered base of five points.  For every ordered 5-tuple of images we
try to extend base -> image to a permutation preserving the block set.  The
unique block through the base fixes the image of its sixth point; one more
point outside that block is tried against its six possible images, and every
remaining point is then forced: for a 4-subset T of the base block, the block
through T and x has exactly one further point y, whose image must be the
further point of the block through the images of T and x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import perm

import numpy as np

from smallwitt.designs import Design, verify_steiner
from smallwitt.errors import InvariantError

Permutation = tuple[int, ...]

DEFAULT_BASE = (0, 1, 2, 3, 4)


def _mask(points) -> int:
    m = 0
    for x in points:
        m |= 1 << x
    return m


def _low(mask: int) -> int:
    return mask.bit_length() - 1


class _BlockIndex:
    def __init__(self, design: Design):
        self.v = design.v
        self.blocks = design.blocks
        self.block_masks = frozenset(_mask(b) for b in design.blocks)
        self.through5: dict[int, int] = {}
        for bm, b in zip(map(_mask, design.blocks), design.blocks):
            for five in combinations(b, 5):
                self.through5[_mask(five)] = bm
        self.plans: dict[tuple[int, ...], tuple] = {}

    def preserves(self, p: Permutation) -> bool:
        bits = [1 << x for x in p]
        masks = self.block_masks
        for a, b, c, d, e, f in self.blocks:
            if bits[a] | bits[b] | bits[c] | bits[d] | bits[e] | bits[f] not in masks:
                return False
        return True


def _check_w12(design: Design):
    if design.v != 12 or design.k != 6:
        raise ValueError(f"expected a design on 12 points with blocks of size 6, got v={design.v} k={design.k}")


def _check_tuple(points, name: str, v: int = 12) -> tuple[int, ...]:
    pts = tuple(points)
    if len(pts) != 5 or len(set(pts)) != 5 or any(not 0 <= x < v for x in pts):
        raise ValueError(f"{name} must be 5 distinct points of [0, {v}), got {pts}")
    return pts


def _check_permutation(p, v: int = 12) -> Permutation:
    p = tuple(p)
    if sorted(p) != list(range(v)):
        raise ValueError(f"not a permutation of [0, {v}): {p}")
    return p


def is_automorphism(design: Design, p) -> bool:
    """True iff p maps every block onto a block."""
    _check_w12(design)
    p = _check_permutation(p, design.v)
    blocks = {frozenset(b) for b in design.blocks}
    return all(frozenset(p[x] for x in b) in blocks for b in design.blocks)


def _base_plan(idx: _BlockIndex, base) -> tuple:
    """Everything in the extension that depends on the base alone."""
    key = tuple(base)
    plan = idx.plans.get(key)
    if plan is None:
        base_mask = _mask(base)
        base_block = idx.through5.get(base_mask)
        if base_block is None:
            raise ValueError("the design does not have a block through every 5-set")
        sixth = _low(base_block ^ base_mask)
        block_pts = [x for x in range(idx.v) if base_block >> x & 1]
        x = next(p for p in range(idx.v) if not base_block >> p & 1)
        bit_x = 1 << x
        # (4-subset T of the base block, partner of x in the block through T and x)
        links = []
        for four in combinations(block_pts, 4):
            T = _mask(four)
            links.append((four, _low(idx.through5[T | bit_x] ^ T ^ bit_x)))
        plan = idx.plans[key] = (sixth, x, links)
    return plan


def _extensions(idx: _BlockIndex, base, image) -> list[Permutation]:
    sixth, x, links = _base_plan(idx, base)
    image_mask = _mask(image)
    image_block = idx.through5.get(image_mask)
    if image_block is None:
        raise ValueError("the design does not have a block through every 5-set")

    phi = [-1] * idx.v
    for b, i in zip(base, image):
        phi[b] = i
    phi[sixth] = (image_block ^ image_mask).bit_length() - 1
    through5 = idx.through5
    phi_links = [((1 << phi[a]) | (1 << phi[b]) | (1 << phi[c]) | (1 << phi[d]), y)
                 for (a, b, c, d), y in links]

    found = []
    for c in range(idx.v):
        if image_block >> c & 1:
            continue
        bit_c = 1 << c
        trial = phi[:]
        trial[x] = c
        used = image_block | bit_c
        for phi_T, y in phi_links:
            y_img = (through5[phi_T | bit_c] ^ phi_T ^ bit_c).bit_length() - 1
            if trial[y] == -1:
                if used >> y_img & 1:
                    break
                trial[y] = y_img
                used |= 1 << y_img
            elif trial[y] != y_img:
                break
        else:
            if -1 not in trial and idx.preserves(trial):
                found.append(tuple(trial))
    return found


def extend_base_image(design: Design, base, image) -> Permutation | None:
    """The automorphism taking base[i] to image[i] for all i, or None if there is none."""
    _check_w12(design)
    base, image = _check_tuple(base, "base"), _check_tuple(image, "image")
    found = _extensions(_BlockIndex(design), base, image)
    if len(found) > 1:
        raise InvariantError(f"{len(found)} automorphisms extend {base} -> {image}")
    return found[0] if found else None


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q."""
    return tuple(p[x] for x in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def verify_batch(design: Design, perms, chunk: int = 8192) -> np.ndarray:
    """Boolean mask: which of the given permutations preserve the block set."""
    blocks = np.asarray(design.blocks, dtype=np.int64)
    weights = np.int64(1) << np.arange(design.v, dtype=np.int64)
    target = np.sort(weights[blocks].sum(axis=1))
    perms = np.asarray(perms, dtype=np.int64).reshape(-1, design.v)
    ok = np.empty(len(perms), dtype=bool)
    for start in range(0, len(perms), chunk):
        part = perms[start:start + chunk]
        images = np.sort(weights[part[:, blocks]].sum(axis=2), axis=1)
        ok[start:start + chunk] = (images == target).all(axis=1)
    return ok


@dataclass
class AutGroupSummary:
    order: int
    sharply_5_transitive: bool
    base: tuple[int, ...]
    generators_found: list[Permutation]
    tuples_tried: int
    failed_extensions: int
    ambiguous_extensions: int
    elements: list[Permutation] = field(repr=False, default_factory=list)

    def as_dict(self) -> dict[str, object]:
        return {
            "order": self.order,
            "sharply_5_transitive": self.sharply_5_transitive,
            "base": ",".join(map(str, self.base)),
            "tuples_tried": self.tuples_tried,
            "failed_extensions": self.failed_extensions,
            "ambiguous_extensions": self.ambiguous_extensions,
        }


def aut_group_summary(design: Design, base=DEFAULT_BASE) -> AutGroupSummary:
    """Extend the base to every ordered 5-tuple and collect the automorphisms found."""
    _check_w12(design)
    base = _check_tuple(base, "base")
    if not verify_steiner(design, 5).is_steiner:
        raise ValueError("design is not an S(5,6,12); refusing to count automorphisms")

    idx = _BlockIndex(design)
    elements: list[Permutation] = []
    failed = ambiguous = tried = 0
    for image in permutations(range(design.v), 5):
        tried += 1
        found = _extensions(idx, base, image)
        if not found:
            failed += 1
        elif len(found) > 1:
            ambiguous += 1
        elements.extend(found)

    distinct = set(elements)
    verified = bool(verify_batch(design, elements).all()) if elements else False
    sharp = (
        failed == 0
        and ambiguous == 0
        and len(distinct) == len(elements) == tried == perm(design.v, 5)
        and verified
    )
    identity = tuple(range(design.v))
    witnesses = [p for p in elements if p != identity][:3]
    return AutGroupSummary(
        order=len(distinct),
        sharply_5_transitive=sharp,
        base=base,
        generators_found=witnesses,
        tuples_tried=tried,
        failed_extensions=failed,
        ambiguous_extensions=ambiguous,
        elements=elements,
    )
