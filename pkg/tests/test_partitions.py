"""Core partition type: construction, canonical form, and lattice operations."""
import json

import pytest
from hypothesis import given, settings

from pilat import (
    Partition,
    bottom,
    comparable,
    covers,
    diag,
    enumerate_partitions,
    join,
    leq,
    meet,
    top,
)
from strats import partition_pairs, partition_triples, partitions


# ---------------------------------------------------------------- construction

def test_parse_format_round_trip():
    for text, n in [("0 1|2 3", 4), ("0|1|2", 3), ("0 1 2", 3), ("0 2|1 3", 4)]:
        assert Partition.parse(text, n).format() == text


def test_parse_canonicalizes_block_and_element_order():
    assert Partition.parse("3 2|1 0", 4).format() == "0 1|2 3"
    assert Partition.parse("2|0 1", 3).format() == "0 1|2"


def test_parse_empty_ground_set():
    p = Partition.parse("", 0)
    assert p.n == 0 and p.blocks == () and p.format() == ""


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError, match="duplicate element"):
        Partition.parse("0 0|1", 2)
    with pytest.raises(ValueError, match="outside ground set"):
        Partition.parse("0 3", 2)
    with pytest.raises(ValueError, match="missing elements"):
        Partition.parse("0|1", 3)
    with pytest.raises(ValueError, match="empty block"):
        Partition.parse("0||1", 2)
    with pytest.raises(ValueError):
        Partition.parse("0 x", 2)
    with pytest.raises(ValueError):
        Partition.parse("", 1)


def test_from_labels_canonicalizes():
    assert Partition.from_labels([5, 5, 2]).format() == "0 1|2"
    assert Partition.from_labels([]).n == 0


def test_labels_are_restricted_growth():
    assert Partition.parse("0 2|1 3", 4).labels == (0, 1, 0, 1)
    assert Partition.parse("0|1|2", 3).labels == (0, 1, 2)
    assert Partition.parse("0 1 2", 3).labels == (0, 0, 0)


def test_blocks_and_sizes():
    p = Partition.parse("0 3|1|2 4 5", 6)
    assert p.blocks == ((0, 3), (1,), (2, 4, 5))
    assert p.block_count == 3
    assert p.block_sizes == (3, 2, 1)


def test_json_round_trip():
    p = Partition.parse("0 2|1 3", 4)
    q = Partition.from_json(json.loads(json.dumps(p.to_json())))
    assert q == p


# ------------------------------------------------------------------ extremes

def test_bottom_and_top():
    assert bottom(3).format() == "0|1|2"
    assert top(3).format() == "0 1 2"
    assert bottom(1) == top(1)
    assert bottom(0) == top(0)
    assert bottom(4).block_count == 4
    assert top(4).block_count == 1


def test_diag_singular_partitions():
    assert diag({1, 3}, 5).format() == "0|1 3|2|4"
    assert diag({0, 1, 2}, 3) == top(3)
    with pytest.raises(ValueError):
        diag(set(), 3)
    with pytest.raises(ValueError):
        diag({0, 5}, 3)


def test_diag_preserves_subset_order():
    assert diag({1, 2}, 5) < diag({1, 2, 4}, 5)
    assert not diag({1, 2}, 5) <= diag({2, 3}, 5)


# ------------------------------------------------------------------- ordering

def test_leq_examples():
    fine = Partition.parse("0 1|2", 3)
    assert bottom(3) <= fine <= top(3)
    assert not top(3) <= fine
    assert fine <= fine
    assert leq(fine, top(3))
    assert not leq(fine, Partition.parse("0 2|1", 3))


def test_incomparable_pair():
    p = Partition.parse("0 1|2 3", 4)
    q = Partition.parse("0 2|1 3", 4)
    assert not p <= q and not q <= p
    assert not comparable(p, q)
    assert comparable(p, top(4))


def test_strict_order():
    fine = Partition.parse("0 1|2", 3)
    assert fine < top(3)
    assert not fine < fine
    assert top(3) > fine


def test_mixed_ground_sets_rejected():
    with pytest.raises(ValueError, match="ground"):
        leq(bottom(3), bottom(4))
    with pytest.raises(ValueError, match="ground"):
        meet(bottom(3), bottom(4))


# ------------------------------------------------------------------ meet/join

def test_meet_example():
    p = Partition.parse("0 1|2 3", 4)
    q = Partition.parse("0 2|1 3", 4)
    assert meet(p, q) == bottom(4)
    assert (p & q) == bottom(4)


def test_meet_refines_common_blocks():
    p = Partition.parse("0 1 2|3 4", 5)
    q = Partition.parse("0 1|2 3 4", 5)
    assert meet(p, q).format() == "0 1|2|3 4"


def test_join_example():
    p = Partition.parse("0 1|2 3", 4)
    q = Partition.parse("0 2|1 3", 4)
    assert join(p, q) == top(4)
    assert (p | q) == top(4)


def test_join_chains_overlapping_blocks():
    p = Partition.parse("0 1|2|3", 4)
    q = Partition.parse("0|1 2|3", 4)
    assert join(p, q).format() == "0 1 2|3"


def test_merge_blocks():
    p = Partition.parse("0 1|2|3", 4)
    assert p.merge_blocks(0, 2).format() == "0 1 3|2"
    with pytest.raises(ValueError):
        p.merge_blocks(0, 0)
    with pytest.raises(ValueError):
        p.merge_blocks(0, 3)


# -------------------------------------------------------------------- covers

def test_covers_examples():
    assert covers(bottom(4), Partition.parse("0 1|2|3", 4))
    assert not covers(bottom(4), Partition.parse("0 1|2 3", 4))
    assert not covers(bottom(4), bottom(4))
    assert covers(Partition.parse("0 1|2 3", 4), top(4))
    assert not covers(top(4), bottom(4))


def test_covers_matches_no_strictly_between():
    for n in range(5):
        universe = enumerate_partitions(n).partitions
        for p in universe:
            for q in universe:
                brute = (p < q and not any(p < z < q for z in universe))
                assert covers(p, q) == brute


# ----------------------------------------------------------------- properties

@settings(max_examples=200)
@given(partition_pairs())
def test_meet_join_commute(pq):
    p, q = pq
    assert meet(p, q) == meet(q, p)
    assert join(p, q) == join(q, p)


@settings(max_examples=200)
@given(partition_pairs())
def test_meet_join_bound(pq):
    p, q = pq
    assert meet(p, q) <= p <= join(p, q)
    assert meet(p, q) <= q <= join(p, q)


@settings(max_examples=200)
@given(partition_pairs())
def test_order_agrees_with_operations(pq):
    p, q = pq
    assert (p <= q) == (meet(p, q) == p)
    assert (p <= q) == (join(p, q) == q)


@settings(max_examples=200)
@given(partition_triples())
def test_lattice_laws(pqr):
    p, q, r = pqr
    assert meet(p, join(p, q)) == p
    assert join(p, meet(p, q)) == p
    assert meet(meet(p, q), r) == meet(p, meet(q, r))
    assert join(join(p, q), r) == join(p, join(q, r))


@settings(max_examples=200)
@given(partitions(6))
def test_extremes_bound_everything(p):
    assert bottom(p.n) <= p <= top(p.n)
    assert meet(p, p) == p == join(p, p)


# ---------------------------------------------------------------------- caps

def test_ground_cap_env_override(monkeypatch):
    monkeypatch.setenv("PILAT_MAX_N", "3")
    with pytest.raises(ValueError, match="outside 0..3"):
        bottom(4)
    assert bottom(3).n == 3
