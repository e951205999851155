import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from avoidance_lab import (
    SetPartition,
    bell,
    contains_partition,
    enumerate_partitions,
    is_layered,
    parse_partition,
    parse_permutation,
    render,
    restrict,
    standardize,
)
from avoidance_lab.errors import MalformedText, NotAPartition, OutOfRange, ResourceLimit

from oracles import brute_contains, partitions_of, stirling2

P = parse_partition


def all_partitions(max_n):
    return [pi for n in range(max_n + 1) for pi in enumerate_partitions(n)]


class TestParse:
    def test_nonstandard_input(self):
        pi = P("1635/24")
        assert pi.blocks == ((1, 3, 5, 6), (2, 4))
        assert render(pi) == "1356/24"

    def test_singleton(self):
        assert P("1").blocks == ((1,),)

    def test_comma_form_for_ten(self):
        pi = P("1,10/2,3,4,5,6,7,8,9")
        assert pi.blocks == ((1, 10), (2, 3, 4, 5, 6, 7, 8, 9))
        assert render(pi) == "1,10/2,3,4,5,6,7,8,9"

    def test_all_singletons_above_nine(self):
        pi = P("/".join(str(i) for i in range(1, 12)))
        assert pi.num_blocks == 11
        assert P(render(pi)) == pi

    def test_empty_partition(self):
        assert P("") == SetPartition(0, ())
        assert bell(0) == 1

    @pytest.mark.parametrize("text", ["1//2", "1a/2", "12/", "1,/2", "1-2"])
    def test_malformed(self, text):
        with pytest.raises(MalformedText):
            P(text)

    @pytest.mark.parametrize("text", ["12/2", "13", "1,3/2,2", "136/5/27"])
    def test_not_a_partition(self, text):
        with pytest.raises(NotAPartition):
            P(text)

    def test_digit_run_needs_small_n(self):
        with pytest.raises(NotAPartition):
            P("12345678910")

    def test_permutation_forms(self):
        assert parse_permutation("312").images == (3, 1, 2)
        assert parse_permutation("10,1,2,3,4,5,6,7,8,9").n == 10
        with pytest.raises(MalformedText):
            parse_permutation("12345678910")


def test_round_trip_exhaustive_small():
    for pi in all_partitions(7):
        assert P(render(pi)) == pi


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=16))
def test_round_trip_comma_form(raw):
    rgf, top = [], -1
    for b in raw:
        b = min(b, top + 1)
        rgf.append(b)
        top = max(top, b)
    pi = SetPartition.from_rgf(rgf)
    comma = "/".join(",".join(str(x) for x in b) for b in pi.blocks)
    assert P(comma) == pi
    assert P(render(pi)) == pi


class TestStandardize:
    def test_worked_example(self):
        assert render(standardize([{2, 4}, {1, 6, 3, 5}])) == "1356/24"

    def test_already_standard(self):
        assert render(standardize([{1}, {2}, {3}])) == "1/2/3"

    def test_reorder(self):
        assert render(standardize([{3}, {1, 2}])) == "12/3"

    def test_overlap_rejected(self):
        with pytest.raises(NotAPartition):
            standardize([{1, 2}, {2, 3}])


class TestRestrict:
    @pytest.mark.parametrize("host", ["136/4/5/27", "136/45/27"])
    def test_worked_example(self, host):
        # the source example 136/5/27 omits the element 4; either placement of 4 works
        assert render(restrict(P(host), [2, 3, 6, 7])) == "14/23"

    def test_identity(self):
        for pi in all_partitions(5):
            assert restrict(pi, range(1, pi.n + 1)) == pi

    def test_singletons_stay_split(self):
        assert render(restrict(P("1/2/3"), [1, 3])) == "1/2"

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            restrict(P("12"), [1, 3])

    def test_transitivity(self):
        rng = random.Random(11)
        for pi in all_partitions(6):
            if pi.n == 0:
                continue
            for _ in range(3):
                s = sorted(rng.sample(range(1, pi.n + 1), rng.randint(1, pi.n)))
                s2 = sorted(rng.sample(range(1, len(s) + 1), rng.randint(1, len(s))))
                image = [s[i - 1] for i in s2]
                assert restrict(restrict(pi, s), s2) == restrict(pi, image)


class TestContains:
    @pytest.mark.parametrize("host", ["136/4/5/27", "136/45/27"])
    def test_worked_examples(self, host):
        assert contains_partition(P(host), P("14/23"))
        assert not contains_partition(P(host), P("1/234"))

    def test_reflexive(self):
        for pi in all_partitions(6):
            assert contains_partition(pi, pi)

    def test_pattern_larger_than_host(self):
        assert not contains_partition(P("12"), P("123"))

    def test_matches_brute_force(self):
        hosts = all_partitions(6)
        patterns = [p for p in all_partitions(4) if p.n >= 1]
        for host in hosts:
            for pat in patterns:
                expected = pat.n <= host.n and brute_contains(host.blocks, pat.blocks)
                assert contains_partition(host, pat) == expected, (render(host), render(pat))

    def test_transitive_exhaustive(self):
        parts = all_partitions(5)
        rel = {(a, b): contains_partition(a, b) for a in parts for b in parts if b.n <= a.n}
        for (a, b), ab in rel.items():
            if not ab:
                continue
            for c in parts:
                if c.n <= b.n and rel[(b, c)]:
                    assert rel[(a, c)]

    @pytest.mark.slow
    def test_prefix_monotonicity(self):
        patterns = [p for p in all_partitions(4) if p.n >= 1]
        for pi in enumerate_partitions(7):
            for m in range(1, pi.n + 1):
                prefix = restrict(pi, range(1, m + 1))
                for pat in patterns:
                    if contains_partition(prefix, pat):
                        assert contains_partition(pi, pat)


class TestLayered:
    def test_worked_examples(self):
        assert is_layered(P("12/3456/789"))
        assert not is_layered(P("13/2456/789"))

    def test_single(self):
        assert is_layered(P("1"))

    def test_count_is_compositions(self):
        for n in range(1, 8):
            assert sum(is_layered(p) for p in enumerate_partitions(n)) == 2 ** (n - 1)


class TestEnumerate:
    def test_n3_order(self):
        assert [render(p) for p in enumerate_partitions(3)] == ["123", "12/3", "13/2", "1/23", "1/2/3"]

    def test_small(self):
        assert [render(p) for p in enumerate_partitions(1)] == ["1"]
        assert list(enumerate_partitions(0)) == [SetPartition(0, ())]

    def test_matches_recursive_oracle(self):
        for n in range(0, 8):
            got = sorted(p.blocks for p in enumerate_partitions(n))
            want = sorted(tuple(sorted(tuple(sorted(b)) for b in part))
                          for part in partitions_of(list(range(1, n + 1))))
            assert got == want

    def test_rgf_lex_order(self):
        rgfs = [p.rgf for p in enumerate_partitions(6)]
        assert rgfs == sorted(rgfs)
        assert len(set(rgfs)) == len(rgfs)

    def test_guard(self):
        with pytest.raises(ResourceLimit):
            next(enumerate_partitions(15))


class TestBell:
    def test_small(self):
        assert bell(3) == 5
        assert bell(0) == 1

    def test_twelve(self):
        assert bell(12) == 4213597
        assert sum(stirling2(12, k) for k in range(13)) == 4213597

    def test_matches_enumeration(self):
        for n in range(0, 11):
            assert bell(n) == sum(1 for _ in enumerate_partitions(n))


def test_contains_subsets_sanity():
    # every k-subset restriction of a host is contained in it
    pi = P("136/4/5/27")
    for k in range(1, 8):
        for s in combinations(range(1, 8), k):
            assert contains_partition(pi, restrict(pi, s))
