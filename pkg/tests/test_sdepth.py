"""Characteristic poset, interval partitions, and Stanley depth."""

from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathdepth.depth import depth_quotient
from pathdepth.families import cycle_ideal, path_ideal
from pathdepth.monomials import Monomial, MonomialIdeal, parse_ideal
from pathdepth.sdepth import (
    PosetCapError,
    PosetInterval,
    SearchBudgetError,
    StanleyPartition,
    build_poset,
    has_partition_min_label,
    partition_to_decomposition,
    sdepth_quotient,
    verify_partition,
)

# poset construction --------------------------------------------------


def test_poset_of_single_edge():
    I = parse_ideal("x1*x2", 2)
    p = build_poset(I)
    assert p.g == (1, 1)
    assert set(p.points) == {(0, 0), (1, 0), (0, 1)}
    assert p.label((1, 0)) == 1
    assert p.label((0, 0)) == 0


def test_poset_respects_explicit_cap_vector():
    I = parse_ideal("x1*x2", 2)
    p = build_poset(I, g=Monomial((2, 2)))
    assert (2, 0) in p.points and (1, 1) not in p.points


def test_poset_cap_error():
    I = parse_ideal("x1^9*x2^9*x3^9", 3)
    with pytest.raises(PosetCapError):
        build_poset(I, cap=100)


def test_poset_rejects_trivial_ideals():
    with pytest.raises(ValueError):
        build_poset(MonomialIdeal.zero(2))
    with pytest.raises(ValueError):
        build_poset(MonomialIdeal.whole_ring(2))


# partition search ----------------------------------------------------


def exhaustive_has_partition(poset, k):
    """Reference exact-cover decision by brute force over all intervals."""
    points = list(poset.points)
    intervals = []
    for a in points:
        for b in points:
            if all(x <= y for x, y in zip(a, b)) and poset.label(b) >= k:
                cells = frozenset(
                    c
                    for c in cartesian(*(range(lo, hi + 1) for lo, hi in zip(a, b)))
                )
                intervals.append(cells)
    target = frozenset(points)

    def cover(remaining):
        if not remaining:
            return True
        cell = min(remaining)
        for iv in intervals:
            if cell in iv and iv <= remaining:
                if cover(remaining - iv):
                    return True
        return False

    return cover(target)


def test_partition_search_matches_exhaustive_oracle():
    instances = [
        parse_ideal("x1*x2", 2),
        parse_ideal("x1*x2, x2*x3", 3),
        parse_ideal("x1^2, x1*x2", 2),
        cycle_ideal(4, 2),
        MonomialIdeal.maximal(3),
    ]
    for I in instances:
        poset = build_poset(I)
        for k in range(0, I.n_vars + 1):
            got = has_partition_min_label(poset, k) is not None
            assert got == exhaustive_has_partition(poset, k), (str(I), k)


def test_sdepth_reference_values():
    assert sdepth_quotient(parse_ideal("x1*x2", 2)).sdepth == 1
    assert sdepth_quotient(MonomialIdeal.maximal(3)).sdepth == 0
    assert sdepth_quotient(parse_ideal("x1*x2, x2*x3", 3)).sdepth == 1
    # disjoint complete intersection: sdepth = depth = 2
    assert sdepth_quotient(parse_ideal("x1*x2, x3*x4", 4)).sdepth == 2


def test_sdepth_k_zero_always_succeeds():
    poset = build_poset(parse_ideal("x1*x2", 2))
    part = has_partition_min_label(poset, 0)
    assert part is not None
    assert verify_partition(poset, part)[0]


def test_budget_error_is_raised_not_answered():
    I = path_ideal(5, 2)
    with pytest.raises(SearchBudgetError):
        sdepth_quotient(I, node_budget=2)


def test_cap_vector_does_not_change_sdepth():
    # robustness of the decision under enlarging the box from g to g + 1
    for I in (
        parse_ideal("x1*x2", 2),
        parse_ideal("x1^2, x1*x2", 2),
        parse_ideal("x1*x2, x2*x3", 3),
    ):
        base = sdepth_quotient(I).sdepth
        g = I.lcm_of_gens()
        bumped = Monomial(tuple(e + 1 for e in g.exponents))
        poset = build_poset(I, g=bumped)
        ks = [
            k
            for k in range(I.n_vars, -1, -1)
            if has_partition_min_label(poset, k) is not None
        ]
        assert max(ks) == base


# certificates --------------------------------------------------------


def test_every_sdepth_result_carries_a_valid_certificate():
    for I in (
        parse_ideal("x1*x2", 2),
        cycle_ideal(4, 2),
        cycle_ideal(5, 3),
        path_ideal(4, 2).power(2),
        MonomialIdeal.maximal(2).power(2),
    ):
        result = sdepth_quotient(I)
        poset = build_poset(I)
        ok, why = verify_partition(poset, result.partition)
        assert ok, why
        assert result.partition.min_label(poset) >= result.sdepth


def test_verify_partition_rejects_bad_certificates():
    poset = build_poset(parse_ideal("x1*x2", 2))
    gap = StanleyPartition((PosetInterval((0, 0), (1, 0)),))
    ok, why = verify_partition(poset, gap)
    assert not ok and "gap" in why
    overlap = StanleyPartition(
        (
            PosetInterval((0, 0), (1, 0)),
            PosetInterval((0, 0), (0, 1)),
        )
    )
    ok, why = verify_partition(poset, overlap)
    assert not ok and "overlap" in why
    outside = StanleyPartition((PosetInterval((0, 0), (1, 1)),))
    ok, why = verify_partition(poset, outside)
    assert not ok


def test_partition_to_decomposition_summands():
    I = parse_ideal("x1*x2", 2)
    result = sdepth_quotient(I)
    summands = partition_to_decomposition(result.partition, I.lcm_of_gens())
    covered = set()
    for mono, zs in summands:
        assert all(1 <= z <= 2 for z in zs)
        covered.add(mono.exponents)
    assert covered <= set(build_poset(I).points)


# agreement with depth on known families ------------------------------


def test_stanley_inequality_on_small_instances():
    for I in (
        parse_ideal("x1*x2", 2),
        parse_ideal("x1*x2, x2*x3", 3),
        cycle_ideal(4, 2),
        cycle_ideal(5, 2),
        path_ideal(4, 2).power(2),
    ):
        assert sdepth_quotient(I).sdepth >= depth_quotient(I).depth


@given(st.data())
@settings(max_examples=25, deadline=None)
def test_stanley_inequality_random(data):
    n = data.draw(st.integers(1, 3))
    gens = []
    for _ in range(data.draw(st.integers(1, 3))):
        exps = tuple(data.draw(st.integers(0, 2)) for _ in range(n))
        if any(exps):
            gens.append(Monomial(exps))
    if not gens:
        gens = [Monomial(tuple([1] + [0] * (n - 1)))]
    I = MonomialIdeal(n, gens)
    if I.is_whole_ring():
        return
    assert sdepth_quotient(I).sdepth >= depth_quotient(I).depth
