"""Orthocomplementations on partition lattices.

An orthocomplementation is a map a -> a' with
  (i)   a & a' = bottom
  (ii)  a | a' = top
  (iii) (a & b)' = a' | b'
  (iv)  a'' = a.
Such a map is an order-reversing involution pairing each element with a
complement, and it turns covering pairs around: b covered by a iff a'
covered by b'.

Pi_1 and Pi_2 carry one (swap bottom and top); no Pi_n with n >= 3 does.
For n = 3, 4 an exhaustive search settles it; from n = 5 on a counting
witness suffices: bottom has C(n, 2) covers while top has 2^(n-1) - 1
cocovers, and the map would have to exchange those two sets bijectively.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .complements import is_complement
from .enumeration import enumerate_partitions
from .partitions import Partition, covers, effective_cap

CHECK_CAP = 6
SEARCH_CAP = 4
SEARCH_CAP_EXHAUSTIVE = 5


@dataclass(frozen=True)
class OrthoReport:
    ok: bool
    violated_axiom: str | None = None  # "i", "ii", "iii" or "iv"
    witness: object = None


def check_ortho_map(mapping: Mapping[Partition, Partition], n: int,
                    cap: int | None = None) -> OrthoReport:
    """Check the four axioms over all of Pi_n, in axiom order.

    The witness is the first offending element (axioms i, ii, iv) or pair
    (axiom iii) in enumeration order.
    """
    limit = effective_cap(CHECK_CAP) if cap is None else cap
    if n > limit:
        raise ValueError(f"n={n} exceeds orthocomplement check cap {limit}")
    universe = enumerate_partitions(n, cap=limit)
    for a in universe:
        if a not in mapping:
            raise ValueError(f"map is not total: no image for {a}")
    bot = universe[len(universe) - 1] if n else universe[0]
    top_ = universe[0]
    for a in universe:
        if (a & mapping[a]) != bot:
            return OrthoReport(False, "i", a)
    for a in universe:
        if (a | mapping[a]) != top_:
            return OrthoReport(False, "ii", a)
    for a in universe:
        fa = mapping[a]
        for b in universe:
            if mapping[a & b] != (fa | mapping[b]):
                return OrthoReport(False, "iii", (a, b))
    for a in universe:
        if mapping[mapping[a]] != a:
            return OrthoReport(False, "iv", a)
    return OrthoReport(True)


def _cover_counts(universe) -> tuple[list[int], list[int]]:
    """For each index: how many elements it covers / is covered by."""
    size = len(universe)
    below = [0] * size  # below[i] = #{j : j covered by i}... see below
    above = [0] * size
    parts = universe.partitions
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            if covers(a, b):  # b is an upper cover of a
                above[i] += 1
                below[j] += 1
    return below, above


def _search(n: int, pruned: bool) -> dict[Partition, Partition] | None:
    universe = enumerate_partitions(n, cap=n)
    parts = universe.partitions
    size = len(parts)
    compl = [[j for j, q in enumerate(parts) if is_complement(p, q)]
             for p in parts]
    below, above = _cover_counts(universe)
    le = [[parts[i] <= parts[j] for j in range(size)] for i in range(size)]
    # assign high-rank elements first: their candidate lists are shortest
    order = sorted(range(size), key=lambda i: (parts[i].block_count, i))
    image = [-1] * size

    def fits(i: int, j: int) -> bool:
        if pruned and (below[i] != above[j] or above[i] != below[j]):
            return False
        for x in range(size):
            fx = image[x]
            if fx < 0:
                continue
            if le[x][i] != le[j][fx] or le[i][x] != le[fx][j]:
                return False
        return True

    def assign(pos: int) -> dict[Partition, Partition] | None:
        while pos < size and image[order[pos]] >= 0:
            pos += 1
        if pos == size:
            mapping = {parts[i]: parts[image[i]] for i in range(size)}
            report = check_ortho_map(mapping, n, cap=n)
            return mapping if report.ok else None
        i = order[pos]
        for j in compl[i]:
            if image[j] >= 0 and j != i:
                continue
            if j == i and size > 1:
                continue  # a = a' forces a = bottom = top
            if not fits(i, j):
                continue
            image[i] = j
            image[j] = i
            found = assign(pos + 1)
            if found is not None:
                return found
            image[i] = -1
            image[j] = -1
        return None

    return assign(0)


def search_orthocomplementation(n: int, exhaustive: bool = False) -> dict[Partition, Partition] | None:
    """Backtracking search for an orthocomplementation on Pi_n.

    Candidates are restricted to complement pairs and pruned by cover-count
    symmetry and order reversal, all of which any valid map must satisfy;
    completed assignments are verified against the axioms, so a None result
    means no map exists.  n <= 4 runs as is; n = 5 only with
    ``exhaustive=True`` (it is settled faster by the counting witness).
    """
    limit = SEARCH_CAP_EXHAUSTIVE if exhaustive else effective_cap(SEARCH_CAP)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise ValueError(f"n={n} exceeds orthocomplement search cap {limit}")
    return _search(n, pruned=True)


def brute_search_orthocomplementation(n: int) -> dict[Partition, Partition] | None:
    """Unpruned variant (complement pairing only): cross-check oracle."""
    if n > 4:
        raise ValueError("unpruned search is limited to n <= 4")
    return _search(n, pruned=False)


@dataclass(frozen=True)
class NonOrthoWitness:
    n: int
    atom_count: int
    coatom_count: int
    reason: str


def non_ortho_witness(n: int) -> NonOrthoWitness:
    """Counting certificate that Pi_n has no orthocomplementation (n >= 5).

    An order-reversing involution matches the covers of bottom with the
    cocovers of top, but C(n, 2) < 2^(n-1) - 1 from n = 5 on.
    """
    if n < 5:
        raise ValueError("the counting witness needs n >= 5")
    atom_count = comb(n, 2)
    coatom_count = (1 << (n - 1)) - 1
    assert atom_count < coatom_count
    return NonOrthoWitness(
        n=n,
        atom_count=atom_count,
        coatom_count=coatom_count,
        reason=(f"an orthocomplementation would pair the {atom_count} covers of "
                f"bottom bijectively with the {coatom_count} cocovers of top"),
    )
