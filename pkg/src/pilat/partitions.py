"""Set partitions of {0..n-1} ordered by refinement.

Conventions used throughout the package:

* the ground set of size n is always {0, 1, ..., n-1};
* a partition is stored as a tuple of integer bitmasks, one per block,
  sorted by least element; elements inside a block are implicitly sorted;
* ``P <= Q`` means P refines Q (every block of P sits inside a block of Q),
  so the all-singletons partition is bottom and the one-block partition is
  top;
* n = 0 is allowed: its lattice has the single empty partition, which is
  both bottom and top.

The text form of a partition lists blocks separated by ``|`` with the ids
inside a block separated by single spaces, e.g. ``"0 2|1 3"``.
"""
from __future__ import annotations

import os
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_GROUND_CAP = 128
_CAP_ENV = "PILAT_MAX_N"


def ground_cap() -> int:
    """Largest allowed ground-set size (PILAT_MAX_N overrides the default)."""
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_GROUND_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 0:
        raise ValueError(f"{_CAP_ENV} must be non-negative, got {cap}")
    return cap


def effective_cap(default: int) -> int:
    """Cap for a size-limited operation; PILAT_MAX_N replaces the default."""
    raw = os.environ.get(_CAP_ENV)
    return default if raw is None else ground_cap()


def _mask_elements(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Partition:
    """An immutable set partition of {0..n-1} in canonical block order."""

    def __init__(self, n: int, masks: Iterable[int]):
        cap = ground_cap()
        if not 0 <= n <= cap:
            raise ValueError(f"ground-set size {n} outside 0..{cap}")
        blocks = tuple(sorted(masks, key=lambda m: m & -m))
        union = 0
        count = 0
        for m in blocks:
            if m <= 0:
                raise ValueError("empty block")
            union |= m
            count += m.bit_count()
        if union != (1 << n) - 1 or count != n:
            raise ValueError("blocks must be disjoint and cover 0..n-1")
        self.n = n
        self.masks = blocks

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        masks = []
        seen = 0
        for block in blocks:
            mask = 0
            for e in block:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise ValueError(f"element {e!r} is not an integer")
                if not 0 <= e < n:
                    raise ValueError(f"element {e} outside ground set 0..{n - 1}")
                bit = 1 << e
                if seen & bit:
                    raise ValueError(f"duplicate element {e}")
                seen |= bit
                mask |= bit
            if mask == 0:
                raise ValueError("empty block")
            masks.append(mask)
        if seen != (1 << n) - 1:
            missing = _mask_elements(((1 << n) - 1) & ~seen)
            raise ValueError(f"missing elements {list(missing)}")
        return cls(n, masks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """Partition grouping equal labels; labels need not be in RGS form."""
        n = len(labels)
        order: dict[int, int] = {}
        masks: list[int] = []
        for e, lab in enumerate(labels):
            j = order.get(lab)
            if j is None:
                j = len(masks)
                order[lab] = j
                masks.append(0)
            masks[j] |= 1 << e
        return cls(n, masks)

    @classmethod
    def parse(cls, text: str, n: int) -> "Partition":
        """Parse the ``block|block|...`` literal form over {0..n-1}."""
        stripped = text.strip()
        if stripped == "":
            if n == 0:
                return cls(0, ())
            raise ValueError("empty literal for non-empty ground set")
        blocks = []
        for part in stripped.split("|"):
            ids = part.split()
            if not ids:
                raise ValueError("empty block")
            try:
                blocks.append([int(tok) for tok in ids])
            except ValueError as exc:
                raise ValueError(f"bad element token in {part!r}") from exc
        return cls.from_blocks(n, blocks)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_mask_elements(m) for m in self.masks)

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Restricted growth string: labels[e] = index of the block holding e."""
        out = [0] * self.n
        for j, m in enumerate(self.masks):
            for e in _mask_elements(m):
                out[e] = j
        return tuple(out)

    @property
    def block_count(self) -> int:
        return len(self.masks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        """Block sizes in descending order."""
        return tuple(sorted((m.bit_count() for m in self.masks), reverse=True))

    def format(self) -> str:
        return "|".join(" ".join(str(e) for e in b) for b in self.blocks)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Partition({self.n}, {self.format()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def _check_ground(self, other: "Partition") -> None:
        if not isinstance(other, Partition):
            raise TypeError(f"expected a Partition, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"ground-set mismatch: {self.n} vs {other.n}")

    def __le__(self, other: "Partition") -> bool:
        """True iff self refines other."""
        self._check_ground(other)
        olabels = other.labels
        omasks = other.masks
        for m in self.masks:
            low = (m & -m).bit_length() - 1
            if m & ~omasks[olabels[low]]:
                return False
        return True

    def __lt__(self, other: "Partition") -> bool:
        return self != other and self <= other

    def __ge__(self, other: "Partition") -> bool:
        self._check_ground(other)
        return other <= self

    def __gt__(self, other: "Partition") -> bool:
        return self != other and other <= self

    def __and__(self, other: "Partition") -> "Partition":
        """Meet: blocks are the pairwise block intersections."""
        self._check_ground(other)
        la, lb = self.labels, other.labels
        seen: dict[tuple[int, int], int] = {}
        masks: list[int] = []
        for e in range(self.n):
            key = (la[e], lb[e])
            j = seen.get(key)
            if j is None:
                j = len(masks)
                seen[key] = j
                masks.append(0)
            masks[j] |= 1 << e
        return Partition(self.n, masks)

    def __or__(self, other: "Partition") -> "Partition":
        """Join: finest common coarsening, via union-find over elements."""
        self._check_ground(other)
        n = self.n
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in self.masks + other.masks:
            first = (m & -m).bit_length() - 1
            root = find(first)
            rest = m & (m - 1)
            while rest:
                low = rest & -rest
                other_root = find(low.bit_length() - 1)
                if other_root != root:
                    parent[other_root] = root
                rest ^= low
        groups: dict[int, int] = {}
        masks: list[int] = []
        for e in range(n):
            r = find(e)
            j = groups.get(r)
            if j is None:
                j = len(masks)
                groups[r] = j
                masks.append(0)
            masks[j] |= 1 << e
        return Partition(n, masks)

    def merge_blocks(self, i: int, j: int) -> "Partition":
        """Replace blocks i and j with their union (an upper cover)."""
        if i == j:
            raise ValueError("need two distinct blocks")
        masks = list(self.masks)
        if not (0 <= i < len(masks) and 0 <= j < len(masks)):
            raise ValueError("block index out of range")
        merged = masks[i] | masks[j]
        masks = [m for k, m in enumerate(masks) if k not in (i, j)]
        masks.append(merged)
        return Partition(self.n, masks)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "Partition":
        if not isinstance(data, dict) or "n" not in data or "blocks" not in data:
            raise ValueError("expected an object with 'n' and 'blocks'")
        return cls.from_blocks(data["n"], data["blocks"])


def bottom(n: int) -> Partition:
    """The all-singletons partition (the empty partition when n = 0)."""
    return Partition(n, (1 << e for e in range(n)))


def top(n: int) -> Partition:
    """The one-block partition (the empty partition when n = 0)."""
    return Partition(n, ((1 << n) - 1,)) if n else Partition(0, ())


def diag(members: Iterable[int], n: int) -> Partition:
    """Singular partition: one block for ``members``, singletons elsewhere.

    The map S -> diag(S) embeds the subsets of the ground set (of size >= 2)
    into the partition lattice and preserves order, so subset chains lift to
    partition chains.
    """
    mask = 0
    for e in members:
        if not 0 <= e < n:
            raise ValueError(f"element {e} outside ground set 0..{n - 1}")
        mask |= 1 << e
    if mask == 0:
        raise ValueError("diag needs a non-empty member set")
    masks = [mask]
    rest = ((1 << n) - 1) & ~mask
    while rest:
        low = rest & -rest
        masks.append(low)
        rest ^= low
    return Partition(n, masks)


def leq(p: Partition, q: Partition) -> bool:
    return p <= q


def meet(p: Partition, q: Partition) -> Partition:
    return p & q


def join(p: Partition, q: Partition) -> Partition:
    return p | q


def comparable(p: Partition, q: Partition) -> bool:
    return p <= q or q <= p


def covers(p: Partition, q: Partition) -> bool:
    """True iff q is obtained from p by merging exactly two of p's blocks.

    Equivalent to "p < q with nothing strictly between": merging two blocks
    raises the rank (n - block count) by exactly one.
    """
    return p.block_count == q.block_count + 1 and p <= q
