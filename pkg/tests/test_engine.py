import random
from itertools import permutations

import numpy as np
import pytest

from permq import (
    InvalidInputError,
    PatternSet,
    Permutation,
    ResourceError,
    census,
    class_of,
    enumerate_partition,
    lift_back,
    lift_front,
    neighbors,
    parse_permutation,
)
from permq.engine import max_workers
from permq.permcore import inversion_parity, unrank

from oracles import naive_partition, one_step

P = Permutation


def all_perms(n):
    return [P(q) for q in permutations(range(1, n + 1))]


class TestNeighbors:
    def test_examples(self, standard):
        assert neighbors(P((1, 2, 3, 4)), standard) == {(3, 4, 1, 2)}
        assert neighbors(P((2, 1, 4, 3)), standard) == set()

    @pytest.mark.parametrize("n", [5, 6])
    def test_matches_oracle_and_symmetric(self, standard, n):
        nb = {p: neighbors(p, standard) for p in all_perms(n)}
        for p, qs in nb.items():
            assert qs == one_step(p, [tuple(x) for x in standard])
            for q in qs:
                assert p in nb[q]

    def test_three_patterns(self):
        pats = PatternSet.of("123", "132", "213")
        for p in all_perms(5):
            assert neighbors(p, pats) == one_step(p, [tuple(x) for x in pats])


class TestPartition:
    def test_n4(self, partitions):
        part = partitions(4)
        blocks = part.blocks()
        assert len(blocks) == 23
        assert {frozenset(b) for b in blocks if len(b) > 1} == {frozenset({(1, 2, 3, 4), (3, 4, 1, 2)})}

    def test_sizes_sum(self, partitions):
        assert sum(partitions(5).class_sizes.values()) == 120
        assert int(partitions(8).stats.size.sum()) == 40320

    def test_n7_against_naive(self, partitions):
        naive = naive_partition(7, [(1, 2, 3, 4), (3, 4, 1, 2)])
        assert sum(len(c) > 1 for c in naive) == 51
        assert census(partitions(7)).nontrivial_classes == 51
        assert {frozenset(b) for b in partitions(7).blocks()} == naive

    def test_labels_are_canonical(self, partitions):
        labels = partitions(6).labels
        assert np.all(labels <= np.arange(labels.shape[0]))
        assert np.all(labels[labels] == labels)

    def test_trivial_sizes(self, standard):
        for n in (1, 2, 3):
            part = enumerate_partition(n, standard)
            assert part.num_classes == len(all_perms(n))

    def test_range_guards(self, standard):
        with pytest.raises(InvalidInputError):
            enumerate_partition(13, standard)
        with pytest.raises(ResourceError, match="n = 12"):
            enumerate_partition(12, standard)

    def test_workers_do_not_matter(self, standard):
        ref = enumerate_partition(9, standard, workers=1)
        for w in (2, 3, max_workers()):
            other = enumerate_partition(9, standard, workers=w)
            assert np.array_equal(ref.labels, other.labels)
            assert census(other) == census(ref)

    def test_refinement_sampled(self, partitions, standard):
        part = partitions(9)
        rng = random.Random(9)
        for _ in range(100_000):
            p = unrank(9, rng.randrange(362880))
            root = part.root(p)
            for q in neighbors(p, standard):
                assert part.root(q) == root

    @pytest.mark.parametrize("n", range(2, 10))
    def test_parity_homogeneous(self, partitions, n):
        st = partitions(n).stats
        assert np.all((st.even == 0) | (st.even == st.size))


class TestCensus:
    def test_n4(self, censuses):
        c = censuses(4)
        assert c.nontrivial_classes == 1
        assert c.size_histogram == {1: 22, 2: 1}

    def test_b7(self, censuses):
        assert censuses(7).b_count == 8

    def test_counting_identity(self, censuses):
        c = censuses(5)
        assert c.total_classes == 120 - sum((s - 1) * k for s, k in c.size_histogram.items() if s >= 2)

    @pytest.mark.parametrize("n", range(2, 10))
    def test_invariants(self, censuses, n):
        c = censuses(n)
        assert c.nontrivial_classes == sum(k for s, k in c.size_histogram.items() if s >= 2)
        assert c.total_classes == sum(c.size_histogram.values())
        assert c.b_count <= c.nontrivial_classes

    def test_b_count_scans_members(self, standard):
        # naive B_n from explicit classes
        for n in (5, 6, 7):
            naive = naive_partition(n, [(1, 2, 3, 4), (3, 4, 1, 2)])
            b = sum(1 for c in naive if len(c) > 1 and not any(p[0] == n or p[-1] == 1 for p in c))
            assert census(enumerate_partition(n, standard)).b_count == b

    def test_record_round_trip(self, censuses):
        from permq import Census

        c = censuses(6)
        assert Census.from_record(c.to_record()) == c


class TestClassOf:
    def test_small(self, standard):
        assert class_of(P((1, 2, 3, 4)), standard) == {(1, 2, 3, 4), (3, 4, 1, 2)}
        p = parse_permutation("2143")
        assert class_of(p, standard) == {p}

    def test_paper_example(self, standard):
        assert parse_permutation("7365412") in class_of(parse_permutation("7162435"), standard)

    def test_matches_partition(self, partitions, standard):
        part = partitions(6)
        for p in all_perms(6):
            assert class_of(p, standard) == part.block(p)

    def test_cap(self, standard):
        with pytest.raises(ResourceError):
            class_of(P(range(1, 8)), standard, cap=100)


class TestLifting:
    def test_examples(self, standard):
        assert lift_front({(1, 2, 3)}) == {(4, 1, 2, 3)}
        assert lift_front(class_of(P((1, 2, 3, 4)), standard)) == class_of(P((5, 1, 2, 3, 4)), standard)
        c = class_of(P((2, 1, 3, 4, 5)), standard)
        assert lift_back(lift_front(c)) == lift_front(lift_back(c))

    @pytest.mark.parametrize("n", range(5, 9))
    def test_lifting_observation(self, partitions, n):
        small, big = partitions(n - 1), partitions(n)
        st_small, st_big = small.stats, big.stats
        lifted_front, lifted_back = set(), set()
        for root, size in zip(st_small.roots.tolist(), st_small.size.tolist()):
            if size < 2:
                continue
            cls = small.members_of_root(root)
            for lift, bucket in ((lift_front, lifted_front), (lift_back, lifted_back)):
                image = lift(cls)
                roots = {big.root(q) for q in image}
                assert len(roots) == 1
                (r,) = roots
                assert big.size_of(next(iter(image))) == len(image)
                bucket.add(r)
        nontrivial = st_big.size >= 2
        all_front = set(st_big.roots[nontrivial & (st_big.front == st_big.size)].tolist())
        all_back = set(st_big.roots[nontrivial & (st_big.back == st_big.size)].tolist())
        assert all_front == lifted_front
        assert all_back == lifted_back
        # no class mixes members with and without a leading n / trailing 1
        assert np.all((st_big.front == 0) | (st_big.front == st_big.size))
        assert np.all((st_big.back == 0) | (st_big.back == st_big.size))
