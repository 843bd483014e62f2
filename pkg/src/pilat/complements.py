"""Complements in partition lattices.

Q is a complement of P when P meet Q is bottom and P join Q is top.
Equivalently: every block of Q shares at most one element with every block
of P (meet condition), and the union of both block structures connects the
whole ground set (join condition).

The module provides a naive filtering oracle, a pruned backtracking
enumerator that must agree with it, the classic product formula for the
number of complements with exactly n - m + 1 blocks, and two explicit
constructions that each produce families of pairwise distinct complements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator, Mapping

from .enumeration import LatticeUniverse, enumerate_partitions, iter_partitions
from .partitions import Partition, bottom, effective_cap, top

COMPLEMENT_CAP = 11
CENSUS_CAP = 9
ORACLE_CAP = 7


def is_complement(p: Partition, q: Partition) -> bool:
    """True iff p & q is bottom and p | q is top."""
    p._check_ground(q)
    n = p.n
    for b in p.masks:
        for c in q.masks:
            x = b & c
            if x & (x - 1):  # two or more shared elements
                return False
    # meet is bottom; join is top iff the two block structures connect
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pieces = n
    for m in p.masks + q.masks:
        first = (m & -m).bit_length() - 1
        root = find(first)
        rest = m & (m - 1)
        while rest:
            low = rest & -rest
            r = find(low.bit_length() - 1)
            if r != root:
                parent[r] = root
                pieces -= 1
            rest ^= low
    return pieces <= 1


def naive_complements(p: Partition, universe: LatticeUniverse | None = None) -> list[Partition]:
    """Oracle: filter the whole lattice.  Only sensible for small n."""
    if universe is None:
        universe = enumerate_partitions(p.n, cap=effective_cap(ORACLE_CAP))
    elif universe.n != p.n:
        raise ValueError(f"ground-set mismatch: {universe.n} vs {p.n}")
    return [q for q in universe if is_complement(p, q)]


def enumerate_complements(p: Partition, cap: int | None = None) -> list[Partition]:
    """All complements of p, by pruned backtracking, in RGS order.

    Elements are assigned to blocks of the candidate Q one at a time.  A
    block may take at most one element per block of p (else the meet is not
    bottom).  Connectivity is tracked over p's blocks: each assignment to
    an existing block can fuse at most two connected pieces, so a branch
    dies as soon as the remaining assignments cannot reach one piece.
    """
    limit = effective_cap(COMPLEMENT_CAP) if cap is None else cap
    n = p.n
    if n > limit:
        raise ValueError(f"n={n} exceeds complement enumeration cap {limit}")
    if n == 0:
        return [Partition(0, ())]
    pblock = p.labels
    m = p.block_count

    parent = list(range(m))
    size = [1] * m
    trail: list[int] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a: int, b: int) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        trail.append(rb)
        return True

    def undo() -> None:
        rb = trail.pop()
        ra = parent[rb]
        parent[rb] = rb
        size[ra] -= size[rb]

    qmask: list[int] = []     # elements of each open block of Q
    qused: list[int] = []     # bitmask of p-block indices present in it
    qanchor: list[int] = []   # p-block of the block's first element
    out: list[Partition] = []

    def rec(e: int, pieces: int) -> None:
        if pieces - 1 > n - e:
            return  # cannot connect any more
        if e == n:
            if pieces == 1:
                out.append(Partition(n, qmask))
            return
        pb = pblock[e]
        bit = 1 << pb
        here = 1 << e
        for j in range(len(qmask)):
            if qused[j] & bit:
                continue
            qmask[j] |= here
            qused[j] |= bit
            merged = union(qanchor[j], pb)
            rec(e + 1, pieces - merged)
            if merged:
                undo()
            qused[j] &= ~bit
            qmask[j] &= ~here
        qmask.append(here)
        qused.append(bit)
        qanchor.append(pb)
        rec(e + 1, pieces)
        qanchor.pop()
        qused.pop()
        qmask.pop()

    rec(0, m)
    return out


def grieser_count(p: Partition) -> int:
    """Predicted number of complements of p with exactly n - m + 1 blocks,
    where m is p's block count: the product of the block sizes times
    (n - m + 1)^(m - 2).  The one-block partition counts 1 (its only
    complement is bottom), as does the n = 0 empty partition.
    """
    m = p.block_count
    if m <= 1:
        return 1
    n = p.n
    return prod(p.block_sizes) * (n - m + 1) ** (m - 2)


def _pick_pivot(p: Partition) -> int:
    for idx, mask in enumerate(p.masks):
        if mask.bit_count() >= 2:
            return idx
    raise ValueError("no block with two or more elements")


def split_transversal_complement(p: Partition, *,
                                 pivot: int | None = None,
                                 iota: int | None = None,
                                 upsilon: int | None = None,
                                 gamma: Mapping[int, int] | None = None,
                                 part_one: tuple[int, ...] = ()) -> Partition:
    """Complement built from two marked transversal blocks.

    One block of Q holds ``iota`` (a pivot-block element) plus one chosen
    element per block in ``part_one``; a second holds ``upsilon`` (another
    pivot-block element) plus one chosen element per remaining block; all
    other elements become singletons.  ``gamma`` picks the representative
    of each non-pivot block (default: its least element).  Distinct
    ``part_one`` subsets give distinct complements, so a partition with m
    blocks yields 2^(m-1) complements this way.
    """
    if pivot is None:
        pivot = _pick_pivot(p)
    if not 0 <= pivot < p.block_count:
        raise ValueError("pivot block index out of range")
    pivot_mask = p.masks[pivot]
    if pivot_mask.bit_count() < 2:
        raise ValueError("pivot block needs at least two elements")
    pivot_elems = p.blocks[pivot]
    if iota is None:
        iota = pivot_elems[0]
    if upsilon is None:
        upsilon = pivot_elems[1] if iota == pivot_elems[0] else pivot_elems[0]
    if iota == upsilon:
        raise ValueError("the two marked elements must differ")
    if not (pivot_mask >> iota) & 1 or not (pivot_mask >> upsilon) & 1:
        raise ValueError("marked elements must lie in the pivot block")
    others = [b for b in range(p.block_count) if b != pivot]
    reps: dict[int, int] = {}
    for b in others:
        reps[b] = p.blocks[b][0]
    if gamma:
        for b, e in gamma.items():
            if b == pivot or not 0 <= b < p.block_count:
                raise ValueError(f"bad block index {b} in gamma")
            if not (p.masks[b] >> e) & 1:
                raise ValueError(f"element {e} not in block {b}")
            reps[b] = e
    ones = list(dict.fromkeys(part_one))
    if len(ones) != len(part_one):
        raise ValueError("duplicate block index in part_one")
    for b in ones:
        if b == pivot or not 0 <= b < p.block_count:
            raise ValueError(f"bad block index {b} in part_one")
    twos = [b for b in others if b not in set(ones)]
    q_one = (1 << iota) | sum(1 << reps[b] for b in ones)
    q_two = (1 << upsilon) | sum(1 << reps[b] for b in twos)
    masks = [q_one, q_two]
    rest = ((1 << p.n) - 1) & ~(q_one | q_two)
    while rest:
        low = rest & -rest
        masks.append(low)
        rest ^= low
    return Partition(p.n, masks)


def split_transversal_family(p: Partition) -> Iterator[Partition]:
    """The 2^(m-1) complements from all part_one subsets, default choices."""
    pivot = _pick_pivot(p)
    others = tuple(b for b in range(p.block_count) if b != pivot)
    for r in range(len(others) + 1):
        for subset in itertools.combinations(others, r):
            yield split_transversal_complement(p, pivot=pivot, part_one=subset)


def injection_complement(p: Partition, big_block: int,
                         sigma: Mapping[int, int]) -> Partition:
    """Complement pairing every element outside one block into that block.

    ``sigma`` must injectively map each element outside block ``big_block``
    to an element of it; blocks of Q are the pairs {a, sigma(a)} plus
    singletons for the unused elements of the big block.  Needs the block
    to hold at least half the ground set.  Distinct injections give
    distinct complements.
    """
    if not 0 <= big_block < p.block_count:
        raise ValueError("block index out of range")
    block_mask = p.masks[big_block]
    outside = [e for e in range(p.n) if not (block_mask >> e) & 1]
    if set(sigma.keys()) != set(outside):
        raise ValueError("injection must be defined exactly on the elements outside the block")
    used = 0
    masks = []
    for a in outside:
        b = sigma[a]
        if not (block_mask >> b) & 1:
            raise ValueError(f"image {b} is outside the block")
        bit = 1 << b
        if used & bit:
            raise ValueError("map is not injective")
        used |= bit
        masks.append((1 << a) | bit)
    rest = block_mask & ~used
    while rest:
        low = rest & -rest
        masks.append(low)
        rest ^= low
    return Partition(p.n, masks)


def injection_complement_family(p: Partition, big_block: int) -> Iterator[Partition]:
    """All injection complements for one block, in lexicographic map order.

    Empty when the block holds fewer than half the elements (no injection
    exists).
    """
    if not 0 <= big_block < p.block_count:
        raise ValueError("block index out of range")
    inside = p.blocks[big_block]
    inside_set = set(inside)
    outside = [e for e in range(p.n) if e not in inside_set]
    if len(outside) > len(inside):
        return
    for perm in itertools.permutations(inside, len(outside)):
        yield injection_complement(p, big_block, dict(zip(outside, perm)))


@dataclass(frozen=True)
class CensusRow:
    partition: str
    m: int
    block_sizes: tuple[int, ...]
    total: int
    count_nm1: int
    grieser: int


def _census_row(p: Partition) -> CensusRow:
    comps = enumerate_complements(p)
    target = p.n - p.block_count + 1
    return CensusRow(
        partition=p.format(),
        m=p.block_count,
        block_sizes=p.block_sizes,
        total=len(comps),
        count_nm1=sum(1 for q in comps if q.block_count == target),
        grieser=grieser_count(p),
    )


def complement_census(n: int, cap: int | None = None, jobs: int = 1) -> list[CensusRow]:
    """One row per partition of Pi_n, in RGS order.

    Bottom and top rows are kept (each has the single complement top resp.
    bottom).  n = 0 is rejected: the empty partition is its own complement
    but has no block to count, so the n - m + 1 column is meaningless.
    """
    limit = effective_cap(CENSUS_CAP) if cap is None else cap
    if n < 1:
        raise ValueError("census needs n >= 1")
    if n > limit:
        raise ValueError(f"n={n} exceeds census cap {limit}")
    parts = iter_partitions(n, cap=n)
    if jobs <= 1:
        return [_census_row(p) for p in parts]
    import multiprocessing

    with multiprocessing.Pool(jobs) as pool:
        return list(pool.imap(_census_row, parts, chunksize=16))


def relative_complement_in(b: Partition, a: Partition, c: Partition,
                           universe: LatticeUniverse | None = None) -> Partition | None:
    """Some z with a <= z <= c, b & z == a and b | z == c, if one exists.

    Brute force over the interval [a, c]; partition lattices are
    relatively complemented, so for a <= b <= c this always finds one.
    """
    if not (a <= b and b <= c):
        raise ValueError("need a <= b <= c")
    if universe is None:
        universe = enumerate_partitions(b.n, cap=effective_cap(ORACLE_CAP))
    for z in universe:
        if a <= z and z <= c and (b & z) == a and (b | z) == c:
            return z
    return None
