import pytest

from sexpansion import (
    ISO,
    ISO_ANTI,
    are_isomorphic,
    canonical_form,
    is_associative,
    is_commutative,
)
from sexpansion.census import (
    CensusCapError,
    CensusRequest,
    _run_census,
    count_semigroups,
    enumerate_semigroups,
)
from sexpansion.fixtures import ORDER3_ABELIAN_NAMES, load_table

from helpers import naive_census, symmetric_order4_semigroup_classes


@pytest.mark.parametrize(
    "order, expected",
    [(1, 1), (2, 4), (3, 18)],
)
def test_counts_iso_anti_small(order, expected):
    assert count_semigroups(CensusRequest(order, convention=ISO_ANTI)) == expected


def test_counts_iso_small():
    # plain-isomorphism counts; the coarser convention merges anti-isomorphic pairs
    assert count_semigroups(CensusRequest(1)) == 1
    assert count_semigroups(CensusRequest(2)) == 5
    assert count_semigroups(CensusRequest(3)) == 24


def test_count_abelian_order2_matches_brute_force():
    # 16 binary tables, filter associative + commutative, dedupe: 3 classes
    assert len(naive_census(2, True, ISO)) == 3
    assert count_semigroups(CensusRequest(2, abelian_only=True)) == 3


def test_abelian_order3_is_the_listed_dozen(census):
    tables = census(3, True, ISO)
    assert len(tables) == 12
    for name in ORDER3_ABELIAN_NAMES:
        fixture = load_table(name)
        matches = [u for u in tables if are_isomorphic(fixture, u) is not None]
        assert len(matches) == 1, name


def test_abelian_order4_count_matches_independent_oracle():
    # all 4^10 symmetric tables, filtered and deduped from scratch
    assert symmetric_order4_semigroup_classes() == 58
    assert count_semigroups(CensusRequest(4, abelian_only=True)) == 58


def test_emitted_tables_are_canonical_sorted_and_valid(census):
    for abelian in (False, True):
        tables = census(3, abelian, ISO)
        flats = [t.flat() for t in tables]
        assert flats == sorted(flats)
        for t in tables:
            assert is_associative(t)
            assert t == canonical_form(t, ISO)
            if abelian:
                assert is_commutative(t)


def test_no_two_emitted_tables_isomorphic(census):
    tables = census(3, False, ISO)
    for i, a in enumerate(tables):
        for b in tables[i + 1 :]:
            assert are_isomorphic(a, b) is None


def test_count_matches_enumeration_length(census):
    for order, abelian, conv in [(3, False, ISO_ANTI), (3, True, ISO), (2, False, ISO)]:
        req = CensusRequest(order, abelian, conv)
        assert count_semigroups(req) == len(census(order, abelian, conv))


def test_branch_order_does_not_change_output(census):
    req = CensusRequest(3, abelian_only=False, convention=ISO)
    got = []
    _run_census(req, got.append, value_order=[3, 1, 2])
    assert sorted(got) == [t.flat() for t in census(3, False, ISO)]


@pytest.mark.parametrize("abelian", [False, True])
@pytest.mark.parametrize("convention", [ISO, ISO_ANTI])
@pytest.mark.parametrize("order", [1, 2, 3])
def test_orderly_generator_equals_naive_oracle(census, order, abelian, convention):
    oracle = naive_census(order, abelian, convention)
    got = {t.flat() for t in census(order, abelian, convention)}
    # the canonical representative is the lex-min member of its class, the
    # same normal form the oracle computes
    assert got == oracle


def test_order_above_cap_is_refused():
    with pytest.raises(CensusCapError, match="super-exponentially"):
        count_semigroups(CensusRequest(6))
    # the cap itself is adjustable without touching the search
    req = CensusRequest(6, hard_cap=6)
    assert req.hard_cap == 6


def test_bad_requests():
    with pytest.raises(ValueError):
        CensusRequest(0)
    with pytest.raises(ValueError):
        CensusRequest(3, convention="nope")
