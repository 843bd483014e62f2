"""Exhaustive enumeration of partition lattices and the classic counts.

Partitions are enumerated through restricted growth strings (RGS): the
label vector l with l[0] = 0 and l[i] <= 1 + max(l[:i]).  RGS vectors in
lexicographic order start at 00...0 (the one-block partition, top) and end
at 012...(n-1) (all singletons, bottom).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .partitions import Partition, effective_cap

ENUM_CAP = 12
COUNT_CAP = 26  # bell(26) still fits in 64 bits


def iter_partitions(n: int, cap: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of {0..n-1} in lexicographic RGS order."""
    limit = effective_cap(ENUM_CAP) if cap is None else cap
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise ValueError(f"n={n} exceeds enumeration cap {limit}")
    if n == 0:
        yield Partition(0, ())
        return
    labels = [0] * n

    def rec(i: int, mx: int) -> Iterator[Partition]:
        if i == n:
            masks = [0] * (mx + 1)
            for e, lab in enumerate(labels):
                masks[lab] |= 1 << e
            yield Partition(n, masks)
            return
        for v in range(mx + 2):
            labels[i] = v
            yield from rec(i + 1, mx if v <= mx else v)

    yield from rec(1, 0)


class LatticeUniverse:
    """All of Pi_n materialized, with O(1) membership and index lookup."""

    def __init__(self, n: int, partitions: tuple[Partition, ...]):
        self.n = n
        self.partitions = partitions
        self._index = {p: i for i, p in enumerate(partitions)}

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.partitions)

    def __getitem__(self, i: int) -> Partition:
        return self.partitions[i]

    def __contains__(self, p: object) -> bool:
        return p in self._index

    def index_of(self, p: Partition) -> int:
        return self._index[p]


def enumerate_partitions(n: int, cap: int | None = None) -> LatticeUniverse:
    return LatticeUniverse(n, tuple(iter_partitions(n, cap)))


@lru_cache(maxsize=None)
def _s2(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    return k * _s2(n - 1, k) + _s2(n - 1, k - 1)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k blocks."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if n > COUNT_CAP:
        raise ValueError(f"n={n} exceeds counting cap {COUNT_CAP}")
    return _s2(n, k)


def bell(n: int) -> int:
    """Number of partitions of an n-set."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > COUNT_CAP:
        raise ValueError(f"n={n} exceeds counting cap {COUNT_CAP}")
    return sum(stirling2(n, k) for k in range(n + 1))


def atoms(n: int) -> list[Partition]:
    """Upper covers of bottom: one doubleton block, singletons elsewhere.

    There are C(n, 2) of them; empty for n < 2.
    """
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            pair = (1 << i) | (1 << j)
            masks = [pair]
            rest = ((1 << n) - 1) & ~pair
            while rest:
                low = rest & -rest
                masks.append(low)
                rest ^= low
            out.append(Partition(n, masks))
    return out


def coatoms(n: int) -> list[Partition]:
    """Lower covers of top: the two-block partitions, 2^(n-1) - 1 of them."""
    if n < 2:
        return []
    full = (1 << n) - 1
    out = []
    for s in range((1 << (n - 1)) - 1):
        a = 1 | (s << 1)
        out.append(Partition(n, (a, full & ~a)))
    return out
