"""Corpus partition, subtree poset, and the most-common-structure query."""

import itertools
import random

import pytest

from colored_prufer import (
    brute_canonical,
    build_tree,
    decode,
    encode_canonical,
    has_embedding,
    is_subarborescence,
    most_representative,
    partition_by_isomorphism,
    random_trees,
    subtree_poset,
)
from colored_prufer.errors import NoEligibleClass

from golden import automorphic_tree, subtree_host_1, vcpc_build_tree


def test_partition_groups_relabelings():
    corpus = [automorphic_tree(), automorphic_tree(mirrored=True)]
    classes = partition_by_isomorphism(corpus)
    assert len(classes) == 1
    assert classes[0].size == 2
    assert classes[0].member_ids == ("0", "1")


def test_partition_single_tree():
    classes = partition_by_isomorphism([vcpc_build_tree()])
    assert len(classes) == 1 and classes[0].size == 1


def test_partition_matches_brute_grouping():
    trees = random_trees(8, 400, 3, seed=51)
    classes = partition_by_isomorphism(trees)
    by_key: dict = {}
    for position, t in enumerate(trees):
        by_key.setdefault(brute_canonical(t), []).append(t.tree_id or str(position))
    assert len(classes) == len(by_key)
    assert sorted(sorted(c.member_ids) for c in classes) == sorted(
        sorted(v) for v in by_key.values()
    )
    # members of one class share the exact code; distinct classes differ
    for cls in classes:
        ids = set(cls.member_ids)
        members = [t for t in trees if t.tree_id in ids]
        for t in members:
            assert encode_canonical(t)[0] == cls.representative


def test_poset_golden_edge_and_reflexivity():
    classes = partition_by_isomorphism([vcpc_build_tree(), subtree_host_1()])
    poset = subtree_poset(classes)
    assert (0, 1) in poset.below
    assert (0, 0) in poset.below and (1, 1) in poset.below
    assert (1, 0) not in poset.below
    assert poset.below[(0, 1)] == (2, 5, 6, 8, 9)
    assert poset.unknown == []


def test_poset_matches_pairwise_checks_and_order_invariance():
    trees = random_trees(7, 150, 3, seed=52)
    classes = partition_by_isomorphism(trees)
    poset = subtree_poset(classes)

    reps = {c.class_id: c.representative for c in classes}
    expected = set()
    for a, b in itertools.product(reps, repeat=2):
        if a == b:
            expected.add((a, a))
        elif reps[a].n <= reps[b].n:
            if is_subarborescence(reps[a], reps[b]) is not None:
                expected.add((a, b))
    assert poset.relation() == expected

    shuffled = classes[:]
    random.Random(0).shuffle(shuffled)
    assert subtree_poset(shuffled).relation() == expected


def test_poset_matches_ordered_oracle():
    trees = random_trees(7, 120, 3, seed=53)
    classes = partition_by_isomorphism(trees)
    poset = subtree_poset(classes)
    rep_tree = {c.class_id: decode(c.representative) for c in classes}
    size = {c.class_id: c.representative.n for c in classes}
    for a, b in itertools.product(rep_tree, repeat=2):
        if a == b or size[a] > size[b]:
            continue
        assert ((a, b) in poset.below) == has_embedding(
            rep_tree[a], rep_tree[b], ordered=True
        )


def test_poset_witnesses_for_skipped_pairs_compose():
    # chain of nested stars forces transitive skips with composed witnesses
    def star(k):
        return build_tree([(0, i) for i in range(1, k + 1)], {v: 0 for v in range(k + 1)})

    trees = [star(k) for k in range(1, 6)]
    classes = partition_by_isomorphism(trees)
    poset = subtree_poset(classes)
    reps = {c.class_id: c.representative for c in classes}
    for (a, b), witness in poset.below.items():
        assert len(witness) == reps[a].n
        assert list(witness) == sorted(witness)
        assert [reps[b].colors[i] for i in witness] == list(reps[a].colors)


def test_poset_closure_is_transitive():
    trees = random_trees(6, 120, 2, seed=54)
    classes = partition_by_isomorphism(trees)
    relation = subtree_poset(classes).relation()
    for a, b in relation:
        for c, d in relation:
            if b == c:
                assert (a, d) in relation


def test_poset_workers_match_sequential():
    trees = random_trees(6, 80, 2, seed=55)
    classes = partition_by_isomorphism(trees)
    sequential = subtree_poset(classes, workers=1)
    parallel = subtree_poset(classes, workers=2)
    assert sequential.relation() == parallel.relation()
    assert sequential.unknown == parallel.unknown


def test_poset_candidate_cap_marks_unknown():
    wide = build_tree([(0, i) for i in range(1, 10)], {v: 0 for v in range(11 - 1)})
    small = build_tree([(0, 1), (0, 2)], {0: 0, 1: 0, 2: 0})
    classes = partition_by_isomorphism([small, wide])
    poset = subtree_poset(classes, candidate_cap=2)
    assert (0, 1) in poset.unknown
    assert (0, 1) not in poset.below


def test_most_representative_two_paths():
    # path of three same-colored vertices and its two-vertex sub-path
    p3 = build_tree([(0, 1), (1, 2)], {0: 7, 1: 7, 2: 7})
    p2 = build_tree([(0, 1)], {0: 7, 1: 7})
    classes = partition_by_isomorphism([p3, p2])
    poset = subtree_poset(classes)
    best, count = most_representative(classes, poset, max_order=5)
    assert best.representative.n == 2
    assert count == 2
    # order bound 2 leaves the short path as the only eligible class
    best2, count2 = most_representative(classes, poset, max_order=2)
    assert (best2.representative.n, count2) == (2, 2)


def test_most_representative_single_class():
    classes = partition_by_isomorphism([vcpc_build_tree(), vcpc_build_tree()])
    poset = subtree_poset(classes)
    best, count = most_representative(classes, poset, max_order=20)
    assert best.class_id == 0
    assert count == 2


def test_most_representative_counts_match_exhaustive():
    trees = random_trees(6, 60, 2, seed=56)
    classes = partition_by_isomorphism(trees)
    poset = subtree_poset(classes)
    best, count = most_representative(classes, poset, max_order=6)
    reps = {c.class_id: c.representative for c in classes}
    sizes = {c.class_id: c.size for c in classes}

    def exhaustive(a):
        total = 0
        for b in reps:
            if a == b:
                total += sizes[a]
            elif reps[a].n <= reps[b].n and is_subarborescence(reps[a], reps[b]):
                total += sizes[b]
        return total

    assert count == exhaustive(best.class_id)
    assert count == max(exhaustive(c.class_id) for c in classes)
    # monotone: anything below another class is at least as common
    for a, b in poset.below:
        if a != b:
            assert exhaustive(a) >= exhaustive(b)


def test_most_representative_no_eligible_class():
    classes = partition_by_isomorphism([vcpc_build_tree()])
    poset = subtree_poset(classes)
    with pytest.raises(NoEligibleClass):
        most_representative(classes, poset, max_order=4)
