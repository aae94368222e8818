"""Generic block designs: exhaustive Steiner-system checks and a plain-text file format.

File format::

    design v=<int> k=<int> b=<int>
    <k space-separated 0-based point indices, increasing>   # b such lines

Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from smallwitt.errors import DesignFormatError, InvariantError

SCAN_LIMIT = 10**7

_HEADER = re.compile(r"^design\s+v=(\d+)\s+k=(\d+)\s+b=(\d+)\s*$")


@dataclass(frozen=True)
class Design:
    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]
    t: int | None = field(default=None, compare=False)  # claimed strength, not part of the file format

    def __post_init__(self):
        if self.v < 1 or self.k < 1:
            raise ValueError(f"need v, k >= 1, got v={self.v} k={self.k}")
        if self.t is not None and not 2 <= self.t < self.k < self.v:
            raise ValueError(f"claimed strength needs 2 <= t < k < v, got t={self.t} k={self.k} v={self.v}")
        blocks = tuple(tuple(b) for b in self.blocks)
        for b in blocks:
            if len(b) != self.k or len(set(b)) != self.k:
                raise ValueError(f"block {b} does not have {self.k} distinct points")
            if any(not 0 <= x < self.v for x in b):
                raise ValueError(f"block {b} has a point outside [0, {self.v})")
            if list(b) != sorted(b):
                raise ValueError(f"block {b} is not sorted")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def canonical(cls, v: int, k: int, blocks, t: int | None = None) -> Design:
        return cls(v, k, tuple(sorted(tuple(sorted(b)) for b in blocks)), t)

    @property
    def b(self) -> int:
        return len(self.blocks)


@dataclass
class VerificationReport:
    v: int
    k: int
    b: int
    t_checked: int
    is_steiner: bool
    r_min: int
    r_max: int
    r_histogram: dict[int, int]
    sum_r: int
    block_tsets: int  # b * C(k, t)
    all_tsets: int  # C(v, t)
    lambdas: list[int] | None = None
    failures: list[tuple[int, ...]] = field(default_factory=list)

    def as_dict(self) -> dict[str, object]:
        d = {
            "is_steiner": self.is_steiner,
            "t": self.t_checked,
            "v": self.v,
            "k": self.k,
            "b": self.b,
            "r_min": self.r_min,
            "r_max": self.r_max,
            "r_histogram": ",".join(f"{r}:{n}" for r, n in sorted(self.r_histogram.items())),
            "sum_r": self.sum_r,
            "b_times_C(k,t)": self.block_tsets,
            "C(v,t)": self.all_tsets,
            "failures": len(self.failures),
        }
        if self.lambdas is not None:
            d["lambdas"] = ",".join(map(str, self.lambdas))
        return d


def replication_counts(design: Design, t: int) -> Counter:
    """r(M) for every t-set M contained in at least one block."""
    counts: Counter = Counter()
    for block in design.blocks:
        counts.update(combinations(block, t))
    return counts


def verify_steiner(design: Design, t: int) -> VerificationReport:
    """Count the blocks through every t-subset of the points, exhaustively."""
    if not 1 <= t <= design.k:
        raise ValueError(f"t must lie in [1, k={design.k}], got {t}")
    total = comb(design.v, t)
    if total > SCAN_LIMIT:
        raise ValueError(f"C({design.v},{t}) = {total} t-sets exceeds the scan limit {SCAN_LIMIT}")

    counts = replication_counts(design, t)
    hist: Counter = Counter()
    failures = []
    sum_r = 0
    for M in combinations(range(design.v), t):
        r = counts.get(M, 0)
        hist[r] += 1
        sum_r += r
        if r != 1:
            failures.append(M)

    block_tsets = design.b * comb(design.k, t)
    if sum_r != block_tsets:
        raise InvariantError(f"double count mismatch: sum r = {sum_r}, b*C(k,t) = {block_tsets}")
    report = VerificationReport(
        v=design.v,
        k=design.k,
        b=design.b,
        t_checked=t,
        is_steiner=not failures,
        r_min=min(hist),
        r_max=max(hist),
        r_histogram=dict(sorted(hist.items())),
        sum_r=sum_r,
        block_tsets=block_tsets,
        all_tsets=total,
        failures=failures,
    )
    if report.is_steiner:
        report.lambdas = derived_lambdas(design, t)
    return report


def derived_lambdas(design: Design, t: int) -> list[int]:
    """Number of blocks through any s points, s = 0..t, for a Steiner system of strength t.

    Each value is cross-checked by a direct count through the s-set {0, ..., s-1}.
    """
    lambdas = []
    for s in range(t + 1):
        num, den = comb(design.v - s, t - s), comb(design.k - s, t - s)
        lam, rem = divmod(num, den)
        if rem:
            raise InvariantError(f"lambda_{s} = {num}/{den} is not an integer")
        direct = sum(1 for b in design.blocks if set(range(s)) <= set(b))
        if direct != lam:
            raise InvariantError(f"lambda_{s}: formula gives {lam}, direct count gives {direct}")
        lambdas.append(lam)
    return lambdas


def write_design(design: Design) -> str:
    lines = [f"design v={design.v} k={design.k} b={design.b}"]
    lines += [" ".join(map(str, b)) for b in sorted(design.blocks)]
    return "\n".join(lines) + "\n"


def read_design(text: str) -> Design:
    header = None
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise DesignFormatError(lineno, f"expected 'design v=<int> k=<int> b=<int>', got {raw!r}")
            header = tuple(int(g) for g in m.groups())
            continue
        v, k, _ = header
        try:
            block = [int(tok) for tok in line.split()]
        except ValueError:
            raise DesignFormatError(lineno, f"non-integer token in {raw!r}") from None
        if len(block) != k:
            raise DesignFormatError(lineno, f"expected {k} indices, got {len(block)}")
        if any(not 0 <= x < v for x in block):
            raise DesignFormatError(lineno, f"index out of range [0, {v}) in {raw!r}")
        if any(a >= b for a, b in zip(block, block[1:])):
            raise DesignFormatError(lineno, f"indices must be strictly increasing in {raw!r}")
        blocks.append(tuple(block))
    if header is None:
        raise DesignFormatError(0, "missing design header")
    v, k, b = header
    if len(blocks) != b:
        raise DesignFormatError(lineno, f"header declares b={b} blocks, found {len(blocks)}")
    return Design.canonical(v, k, blocks)
