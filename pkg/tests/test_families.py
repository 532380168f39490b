import pytest

from seqcong import (
    EMPTY,
    ExtentExceeded,
    InvalidDeletion,
    InvalidPart,
    Partition,
    ResourceBound,
    SequenceSpec,
    all_of_size,
    check_ideal_closure,
    check_quasi_ideal,
    count,
    count_invariance_suite,
    counts_by_size,
    distinct_of_size,
    enumerate_family,
    has_distinct_parts,
    ideal_equivalent_upto,
    is_frequency_congruent,
    is_member_pba,
    is_member_sna,
    is_sequentially_congruent,
    is_step_bounded_seqcong,
    iter_pba_by_size,
    partition_count,
    partitions_of,
    parts_in,
    pba_length,
    restricted_count,
    scaled_deletion,
    seqcong_largest,
    sna_largest,
    step_bounded_largest,
)

NAT = SequenceSpec.naturals()
ODD = SequenceSpec.odds()


def pentagonal_counts(bound):
    """Independent oracle for the number of partitions, via the classical
    pentagonal-number recurrence (no enumeration involved)."""
    p = [1] + [0] * bound
    for n in range(1, bound + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = 1 if k % 2 else -1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def test_plain_enumerator_against_recurrence():
    expected = pentagonal_counts(30)
    for n in range(31):
        members = list(partitions_of(n))
        assert len(members) == expected[n]
        assert len(set(members)) == len(members)
        assert all(m.size == n for m in members)


def test_partitions_of_four_in_order():
    assert [p.parts for p in partitions_of(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
    ]


def test_empty_size_families():
    assert [p for p in partitions_of(0)] == [EMPTY]
    assert list(enumerate_family(seqcong_largest(0))) == [EMPTY]
    assert list(enumerate_family(distinct_of_size(0))) == [EMPTY]


@pytest.mark.parametrize(
    "desc",
    [
        all_of_size(9),
        distinct_of_size(12),
        parts_in([2, 3, 5], 17),
        seqcong_largest(9),
        step_bounded_largest(11),
        pba_length(SequenceSpec.table([2, 3]), SequenceSpec.table([5, 7]), 9),
        sna_largest(ODD, 9),
    ],
)
def test_enumeration_is_sorted_and_deterministic(desc):
    first = [p.parts for p in enumerate_family(desc)]
    second = [p.parts for p in enumerate_family(desc)]
    assert first == second
    assert first == sorted(first, reverse=True)
    assert len(set(first)) == len(first)


class TestSeqcongLargest:
    def test_members_at_four(self):
        members = [p.parts for p in enumerate_family(seqcong_largest(4))]
        assert set(members) == {(4,), (4, 2), (4, 4), (4, 3, 3), (4, 4, 4, 4)}

    def test_count_equals_partition_count(self):
        for n in range(16):
            assert count(seqcong_largest(n)) == partition_count(n)

    def test_agrees_with_predicate_filter(self):
        # every member of size <= 14 shows up when filtering the plain
        # enumeration, and vice versa
        direct = {
            p
            for n in range(15)
            for p in enumerate_family(seqcong_largest(n))
            if p.size <= 14
        }
        filtered = {
            p
            for n in range(15)
            for p in partitions_of(n)
            if is_sequentially_congruent(p).ok
        }
        assert direct == filtered


class TestOtherGenerators:
    def test_distinct_counts(self):
        assert count(distinct_of_size(10)) == 10
        filtered = [
            sum(1 for p in partitions_of(n) if has_distinct_parts(p))
            for n in range(15)
        ]
        assert [count(distinct_of_size(n)) for n in range(15)] == filtered

    def test_parts_in_filter_agreement(self):
        allowed = (2, 3)
        for n in range(15):
            direct = set(enumerate_family(parts_in(allowed, n)))
            filtered = {
                p for p in partitions_of(n) if all(v in allowed for v in p.parts)
            }
            assert direct == filtered

    def test_step_bounded_filter_agreement(self):
        direct = {
            p
            for n in range(15)
            for p in enumerate_family(step_bounded_largest(n))
            if p.size <= 14
        }
        filtered = {
            p
            for n in range(15)
            for p in partitions_of(n)
            if is_step_bounded_seqcong(p).ok
        }
        assert direct == filtered

    def test_sna_naturals_equals_seqcong(self):
        for n in range(11):
            assert list(enumerate_family(sna_largest(NAT, n))) == list(
                enumerate_family(seqcong_largest(n))
            )

    def test_sna_odds_filter_agreement(self):
        direct = {
            p
            for n in range(13)
            for p in enumerate_family(sna_largest(ODD, n))
            if p.size <= 12
        }
        filtered = {
            p
            for n in range(13)
            for p in partitions_of(n)
            if is_member_sna(p, ODD).ok
        }
        assert direct == filtered

    def test_sna_table_needs_enough_terms(self):
        with pytest.raises(ExtentExceeded):
            list(enumerate_family(sna_largest(SequenceSpec.table([2, 3]), 6)))

    def test_sna_constant_rule_is_infinite(self):
        with pytest.raises(ResourceBound):
            list(enumerate_family(sna_largest(SequenceSpec.constant(2), 4)))


class TestPbaLength:
    A = SequenceSpec.table([2, 3])
    B = SequenceSpec.table([5, 7])

    def test_hand_example(self):
        members = [p.parts for p in enumerate_family(pba_length(self.A, self.B, 6))]
        assert members == [(7, 7, 7, 7, 7, 7), (5, 5, 5, 5, 5, 5)]

    def test_naturals_length_counts(self):
        assert count(pba_length(NAT, NAT, 6)) == partition_count(6) == 11

    def test_members_satisfy_predicate(self):
        for n in range(10):
            for p in enumerate_family(pba_length(self.A, self.B, n)):
                assert p.length == n
                assert is_member_pba(p, self.A, self.B).ok

    def test_filter_agreement_via_size(self):
        direct = {
            p
            for n in range(15)
            for p in enumerate_family(pba_length(NAT, NAT, n))
            if p.size <= 14
        }
        filtered = {
            p
            for n in range(15)
            for p in partitions_of(n)
            if is_frequency_congruent(p).ok
        }
        assert direct == filtered

    def test_infinite_family_rejected(self):
        with pytest.raises(ResourceBound):
            list(enumerate_family(pba_length(SequenceSpec.ones(), NAT, 2)))

    def test_empty_tables_give_empty_family(self):
        empty = SequenceSpec.table([])
        assert list(enumerate_family(pba_length(empty, empty, 0))) == [EMPTY]
        assert list(enumerate_family(pba_length(empty, empty, 3))) == []


def test_iter_pba_by_size_bounds():
    members = list(iter_pba_by_size(NAT, NAT, 10, max_length=4))
    assert EMPTY in members
    assert len(set(members)) == len(members)
    for p in members:
        assert p.size <= 10 and p.length <= 4
        assert is_frequency_congruent(p).ok
    # every frequency congruent partition in range appears
    expected = {
        p
        for n in range(11)
        for p in partitions_of(n)
        if p.length <= 4 and is_frequency_congruent(p).ok
    }
    assert set(members) == expected


def test_resource_cap_trips():
    with pytest.raises(ResourceBound):
        list(enumerate_family(all_of_size(8), max_items=5))


def test_rejects_negative_family_parameter():
    with pytest.raises(InvalidPart):
        all_of_size(-1)


class TestCountsBySize:
    def test_distinct(self):
        assert counts_by_size(has_distinct_parts, 6) == [1, 1, 1, 2, 2, 3, 4]

    def test_everything(self):
        assert counts_by_size(lambda p: True, 5) == [1, 1, 2, 3, 5, 7]

    def test_empty_only(self):
        assert counts_by_size(lambda p: p.length == 0, 3) == [1, 0, 0, 0]


class TestIdealEquivalence:
    def test_distinct_matches_odd_parts(self):
        result = ideal_equivalent_upto(
            has_distinct_parts,
            lambda p: all(v % 2 == 1 for v in p.parts),
            12,
        )
        assert result.equivalent and result.first_difference is None

    def test_distinct_differs_from_all(self):
        # (1,1) is the first non-distinct partition, so counts split at n = 2
        result = ideal_equivalent_upto(has_distinct_parts, lambda p: True, 3)
        assert not result.equivalent
        assert result.first_difference == 2
        assert result.counts_first[2] == 1 and result.counts_second[2] == 2

    def test_self_equivalence(self):
        result = ideal_equivalent_upto(
            has_distinct_parts, has_distinct_parts, 8
        )
        assert result.equivalent


class TestIdealClosure:
    def test_distinct_parts_closed(self):
        assert check_ideal_closure(has_distinct_parts, 10).ok

    def test_parts_in_closed(self):
        allowed = {2, 3}
        report = check_ideal_closure(
            lambda p: all(v in allowed for v in p.parts), 12
        )
        assert report.ok

    def test_frequency_congruent_not_closed(self):
        report = check_ideal_closure(lambda p: is_frequency_congruent(p).ok, 6)
        assert not report.ok
        assert report.index == 2
        assert "[2, 2]" in report.detail

    def test_empty_membership_vacuous(self):
        assert check_ideal_closure(lambda p: p.length == 0, 8).ok


class TestQuasiIdeal:
    A = SequenceSpec.table([2, 3])
    B = SequenceSpec.table([5, 7])

    @pytest.mark.parametrize(
        "a_seq,b_seq,bound",
        [
            (NAT, NAT, 12),
            (SequenceSpec.table([2, 3]), SequenceSpec.table([5, 7]), 40),
            (ODD, NAT, 12),
        ],
    )
    def test_scaled_deletions_stay_inside(self, a_seq, b_seq, bound):
        assert check_quasi_ideal(a_seq, b_seq, bound).ok

    def test_scaled_deletion_helper(self):
        lam = Partition((5, 5, 5, 5))
        assert scaled_deletion(lam, self.A, self.B, 5, 2).parts == (5, 5)

    def test_non_multiple_deletion_is_out_of_contract(self):
        lam = Partition((5, 5, 5, 5))
        with pytest.raises(InvalidDeletion):
            scaled_deletion(lam, self.A, self.B, 5, 3)
        with pytest.raises(InvalidDeletion):
            scaled_deletion(lam, self.A, self.B, 9, 2)


class TestCountInvariance:
    A = SequenceSpec.table([2, 3])
    B = SequenceSpec.table([5, 7])

    def test_default_permutation_and_replacement(self):
        report = count_invariance_suite(self.A, self.B, 8)
        assert report.ok
        assert report.sets_differ_at == 2
        assert list(report.counts) == [
            restricted_count(self.A, n) for n in range(9)
        ]

    def test_explicit_b_replacement(self):
        report = count_invariance_suite(
            self.A, self.B, 8, b_prime=SequenceSpec.table([1, 2])
        )
        assert report.ok

    def test_identity_permutation_never_differs(self):
        report = count_invariance_suite(self.A, self.B, 8, a_prime=self.A)
        assert report.ok and report.sets_differ_at is None

    def test_non_permutation_rejected(self):
        with pytest.raises(InvalidPart):
            count_invariance_suite(
                self.A, self.B, 6, a_prime=SequenceSpec.table([2, 4])
            )


def test_restricted_count_examples():
    assert [restricted_count(SequenceSpec.table([2, 3]), n) for n in range(7)] == [
        1, 0, 1, 1, 1, 1, 2,
    ]
    assert restricted_count(NAT, 6) == partition_count(6)
    assert [restricted_count(ODD, n) for n in range(9)] == [
        count(distinct_of_size(n)) for n in range(9)
    ]
