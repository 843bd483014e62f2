"""Chains in partition lattices: checking, saturation, and constructions.

A chain is a strictly increasing sequence of partitions of one ground set.
A chain is saturated when every consecutive pair is a covering pair, and
maximal when in addition it runs from bottom to top; in a finite lattice
those two conditions together are equivalent to "no partition can be
inserted anywhere".  Every maximal chain of Pi_n has exactly n elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, bottom, covers, diag, effective_cap, ground_cap, top

MAXCHAIN_CAP = 6
KEYFRAME_CAP = 7


@dataclass(frozen=True)
class ChainReport:
    is_chain: bool
    is_saturated: bool
    is_maximal: bool
    witness: object = None
    """Failure evidence: an index pair for a non-chain, an insertable
    partition for a non-saturated gap, or the missing endpoint."""


def _eligible_merge(lo: Partition, hi: Partition) -> tuple[int, int]:
    """Indices of the two blocks of lo to merge one step toward hi.

    Among block pairs of lo lying inside one block of hi, picks the pair
    with the smallest block minima (ties cannot occur).  Requires lo < hi.
    """
    hi_labels = hi.labels
    first: dict[int, int] = {}
    second: dict[int, int] = {}
    for idx, mask in enumerate(lo.masks):
        group = hi_labels[(mask & -mask).bit_length() - 1]
        if group not in first:
            first[group] = idx
        elif group not in second:
            second[group] = idx
    assert second, "no mergeable pair: lo is not strictly below hi"
    # blocks are in least-element order, so index order is minima order
    return min((first[g], second[g]) for g in second)


def _step_between(lo: Partition, hi: Partition) -> Partition:
    i, j = _eligible_merge(lo, hi)
    return lo.merge_blocks(i, j)


def verify_chain(chain: Sequence[Partition]) -> ChainReport:
    """Classify a sequence as chain / saturated / maximal, with a witness."""
    if not chain:
        raise ValueError("empty sequence")
    n = chain[0].n
    for p in chain:
        if p.n != n:
            raise ValueError(f"ground-set mismatch: {p.n} vs {n}")
    for i in range(len(chain) - 1):
        if not chain[i] < chain[i + 1]:
            return ChainReport(False, False, False, witness=(i, i + 1))
    for i in range(len(chain) - 1):
        if not covers(chain[i], chain[i + 1]):
            return ChainReport(True, False, False,
                               witness=_step_between(chain[i], chain[i + 1]))
    if chain[0] != bottom(n):
        return ChainReport(True, True, False, witness=bottom(n))
    if chain[-1] != top(n):
        return ChainReport(True, True, False, witness=top(n))
    return ChainReport(True, True, True)


def extend_to_maximal(chain: Sequence[Partition]) -> list[Partition]:
    """Deterministically complete a chain to a maximal one.

    Endpoints are extended to bottom/top, then every gap is saturated by
    repeatedly merging the two blocks with the smallest minima that lie in
    one block of the gap's upper end.  The result has exactly n elements.
    """
    if not chain:
        raise ValueError("empty sequence")
    report = verify_chain(chain)
    if not report.is_chain:
        raise ValueError(f"input is not a chain (witness {report.witness})")
    n = chain[0].n
    anchors = list(chain)
    if anchors[0] != bottom(n):
        anchors.insert(0, bottom(n))
    if anchors[-1] != top(n):
        anchors.append(top(n))
    out = [anchors[0]]
    for hi in anchors[1:]:
        cur = out[-1]
        while not covers(cur, hi):
            cur = _step_between(cur, hi)
            out.append(cur)
        out.append(hi)
    return out


def enumerate_maximal_chains(n: int, cap: int | None = None) -> Iterator[tuple[Partition, ...]]:
    """Stream every maximal chain of Pi_n exactly once (small n only)."""
    limit = effective_cap(MAXCHAIN_CAP) if cap is None else cap
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise ValueError(f"n={n} exceeds maximal-chain cap {limit}")
    path = [bottom(n)]

    def rec() -> Iterator[tuple[Partition, ...]]:
        cur = path[-1]
        b = cur.block_count
        if b == 1 or cur.n == 0:
            yield tuple(path)
            return
        for i in range(b):
            for j in range(i + 1, b):
                path.append(cur.merge_blocks(i, j))
                yield from rec()
                path.pop()

    return rec()


def lift_subset_chain(sets: Sequence[Iterable[int]], n: int) -> list[Partition]:
    """Lift a strictly increasing chain of subsets (each of size >= 2)
    into the partition lattice via diag."""
    masks = []
    for s in sets:
        mask = 0
        for e in s:
            if not 0 <= e < n:
                raise ValueError(f"element {e} outside ground set 0..{n - 1}")
            mask |= 1 << e
        if mask.bit_count() < 2:
            raise ValueError("subsets must have at least two elements")
        masks.append(mask)
    for a, b in zip(masks, masks[1:]):
        if a == b or a & ~b:
            raise ValueError("subsets must be strictly increasing")
    return [diag(_bits(m), n) for m in masks]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class KeyframePlan:
    """Dyadic splitting plan on n = 2^k elements.

    Element e corresponds to the big-endian k-bit string of e.  The level-d
    keyframe groups elements by their first d bits, giving 2^d blocks of
    size 2^(k-d); blocks are ordered by ascending numeric prefix.  The
    in-between step (d, a) additionally splits the first a of those blocks
    into their two level-(d+1) halves.
    """

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if (1 << self.k) > ground_cap():
            raise ValueError(f"2^{self.k} elements exceed the ground cap {ground_cap()}")

    @property
    def n(self) -> int:
        return 1 << self.k

    def _range_block(self, level: int, prefix: int) -> int:
        size = 1 << (self.k - level)
        return ((1 << size) - 1) << (prefix * size)

    def keyframe(self, level: int) -> Partition:
        """2^level blocks of consecutive elements; level k is bottom."""
        if not 0 <= level <= self.k:
            raise ValueError(f"level {level} outside 0..{self.k}")
        return Partition(self.n, (self._range_block(level, p) for p in range(1 << level)))

    def inbetween(self, level: int, split_count: int) -> Partition:
        """Keyframe at ``level`` with its first ``split_count`` blocks split."""
        if not 0 <= level < self.k:
            raise ValueError(f"level {level} outside 0..{self.k - 1}")
        if not 0 <= split_count < (1 << level):
            raise ValueError(f"split count {split_count} outside 0..{(1 << level) - 1}")
        masks = []
        for p in range(1 << level):
            if p < split_count:
                masks.append(self._range_block(level + 1, 2 * p))
                masks.append(self._range_block(level + 1, 2 * p + 1))
            else:
                masks.append(self._range_block(level, p))
        return Partition(self.n, masks)

    def keyframes(self) -> list[Partition]:
        """All k+1 keyframes, bottom (level k) to top (level 0)."""
        return [self.keyframe(level) for level in range(self.k, -1, -1)]


def keyframe_chain(k: int, cap: int | None = None) -> list[Partition]:
    """The maximal chain of Pi_{2^k} walking the dyadic keyframes.

    Starts at bottom and, level by level from the finest keyframe up,
    un-splits blocks left to right.  The chain has exactly 2^k elements and
    passes through every keyframe.
    """
    limit = effective_cap(KEYFRAME_CAP) if cap is None else cap
    if k > limit:
        raise ValueError(f"k={k} exceeds keyframe cap {limit}")
    plan = KeyframePlan(k)
    out = [bottom(plan.n)]
    for level in range(k - 1, -1, -1):
        for split_count in range((1 << level) - 1, -1, -1):
            out.append(plan.inbetween(level, split_count))
    return out
