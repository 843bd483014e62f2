"""Antichain verification and the two canonical constructions."""
import math

import pytest

from pilat import (
    Partition,
    bipartition_antichain,
    bottom,
    coatoms,
    comparable,
    doubleton_antichain,
    extend_to_maximal_antichain,
    iter_partitions,
    top,
    verify_antichain,
)


def P(text, n):
    return Partition.parse(text, n)


# ------------------------------------------------------------------ verifier

def test_verify_antichain_of_atoms():
    report = verify_antichain(doubleton_antichain(3), 3)
    assert report.is_antichain and report.is_maximal
    assert report.witness is None


def test_verify_comparable_pair():
    report = verify_antichain([bottom(3), top(3)], 3)
    assert not report.is_antichain
    assert report.witness == (bottom(3), top(3))
    assert report.is_maximal is None


def test_verify_non_maximal():
    members = [P("0 1|2|3", 4)]
    report = verify_antichain(members, 4)
    assert report.is_antichain and not report.is_maximal
    extra = report.witness
    assert not comparable(extra, members[0])


def test_verify_empty_antichain():
    report = verify_antichain([], 3)
    assert report.is_antichain and not report.is_maximal
    assert report.witness is not None


def test_verify_can_skip_maximality():
    report = verify_antichain([P("0 1|2|3", 4)], 4, check_maximal=False)
    assert report.is_antichain
    assert report.is_maximal is None


def test_verify_maximality_cap():
    with pytest.raises(ValueError, match="cap"):
        verify_antichain([bottom(11)], 11)
    report = verify_antichain([bottom(11)], 11, check_maximal=False)
    assert report.is_antichain


def test_verify_rejects_bad_input():
    with pytest.raises(ValueError, match="duplicate"):
        verify_antichain([top(3), top(3)], 3)
    with pytest.raises(ValueError, match="ground"):
        verify_antichain([top(3), top(4)], 3)


def test_singleton_extremes_are_maximal():
    assert verify_antichain([top(3)], 3).is_maximal
    assert verify_antichain([bottom(3)], 3).is_maximal


# -------------------------------------------------------------- constructions

def test_doubleton_antichain_sizes():
    for n in range(2, 8):
        got = doubleton_antichain(n)
        assert len(got) == math.comb(n, 2)
        assert len(set(got)) == len(got)
        for p in got:
            assert p.block_count == n - 1


def test_doubleton_antichain_small_n():
    assert doubleton_antichain(2) == [top(2)]
    with pytest.raises(ValueError):
        doubleton_antichain(1)


def test_bipartition_antichain_sizes():
    for n in range(2, 8):
        got = bipartition_antichain(n)
        assert len(got) == 2 ** (n - 1) - 1
        assert got == coatoms(n)


def test_bipartition_antichain_small_n():
    assert bipartition_antichain(2) == [bottom(2)]
    with pytest.raises(ValueError):
        bipartition_antichain(1)


def test_constructions_are_maximal_antichains():
    for n in range(2, 8):
        for members in (doubleton_antichain(n), bipartition_antichain(n)):
            report = verify_antichain(members, n)
            assert report.is_antichain and report.is_maximal


# ----------------------------------------------------------------- extension

def test_extend_empty_collects_top():
    got = extend_to_maximal_antichain([], 3)
    assert got == [top(3)]


def test_extend_is_deterministic_and_idempotent():
    seed = [P("0 1|2|3", 4)]
    once = extend_to_maximal_antichain(seed, 4)
    assert once == extend_to_maximal_antichain(seed, 4)
    assert extend_to_maximal_antichain(once, 4) == once
    assert verify_antichain(once, 4).is_maximal
    assert seed[0] in once


def test_extend_scans_in_enumeration_order():
    # From one atom of Pi_3 the scan adds the first incomparable partitions.
    got = extend_to_maximal_antichain([P("0 1|2", 3)], 3)
    assert [p.format() for p in got] == ["0 1|2", "0 2|1", "0|1 2"]


def test_extend_results_are_maximal():
    for n in range(1, 6):
        for p in iter_partitions(n):
            out = extend_to_maximal_antichain([p], n)
            assert p in out
            report = verify_antichain(out, n)
            assert report.is_antichain and report.is_maximal


def test_extend_rejects_non_antichain():
    with pytest.raises(ValueError, match="antichain"):
        extend_to_maximal_antichain([bottom(3), top(3)], 3)
