import random
from itertools import product

import pytest

from sexpansion import (
    CayleyTable,
    ISO,
    ISO_ANTI,
    Perm,
    apply_perm,
    are_isomorphic,
    canonical_form,
    canonical_key,
    find_zero,
    format_table,
    is_associative,
    is_commutative,
    parse_partial_table,
    parse_table,
)
from sexpansion.fixtures import ORDER3_ABELIAN_NAMES, load_table

from helpers import random_perm_images, random_table

S_II_1 = CayleyTable.from_rows([[4, 3, 4, 4], [3, 4, 4, 4], [4, 4, 4, 4], [4, 4, 4, 4]])
LEFT_ZERO_3 = CayleyTable.from_rows([[1, 1, 1], [2, 2, 2], [3, 3, 3]])
ORDER_1 = CayleyTable.from_rows([[1]])


def test_table_validation():
    with pytest.raises(ValueError):
        CayleyTable.from_rows([[1, 2], [1]])
    with pytest.raises(ValueError):
        CayleyTable.from_rows([[1, 3], [1, 2]])
    with pytest.raises(ValueError):
        CayleyTable(())


def test_perm_basics():
    p = Perm((4, 1, 2, 3))
    assert p(1) == 4 and p(4) == 3
    assert p.inverse().after(p) == Perm.identity(4)
    assert p.notation() == "(λ4 λ1 λ2 λ3)"
    with pytest.raises(ValueError):
        Perm((1, 1, 2))


def test_is_associative_examples():
    assert is_associative(load_table("SN2"))
    assert is_associative(ORDER_1)
    # the completion of the λ1λ2 = λ1λ3 = λ1 template with every free
    # product set to the zero is not associative: (λ1λ2)λ3 = λ1 but
    # λ1(λ2λ3) = λ1λ4 = λ4
    bad = CayleyTable.from_rows([[4, 1, 1, 4], [1, 4, 4, 4], [1, 4, 4, 4], [4, 4, 4, 4]])
    assert not is_associative(bad)


def test_collapse_template_completions_exhausted():
    # zero λ4 and λ1λ2 = λ1λ3 = λ1: of the 256 symmetric completions
    # exactly 24 are associative (frozen by this exhaustive scan)
    count = 0
    for v11, v22, v23, v33 in product(range(1, 5), repeat=4):
        t = CayleyTable.from_rows(
            [[v11, 1, 1, 4], [1, v22, v23, 4], [1, v23, v33, 4], [4, 4, 4, 4]]
        )
        if is_associative(t):
            count += 1
    assert count == 24


def test_is_commutative_examples():
    assert is_commutative(load_table("S3_18"))
    assert is_associative(LEFT_ZERO_3) and not is_commutative(LEFT_ZERO_3)
    assert is_commutative(ORDER_1)


def test_find_zero_examples():
    assert find_zero(load_table("SK3")) == 4
    assert find_zero(load_table("S4_42")) == 1
    assert find_zero(load_table("S3_18")) is None


def test_apply_perm_examples():
    assert apply_perm(load_table("S4_10"), Perm((4, 3, 1, 2))) == S_II_1
    assert apply_perm(load_table("S4_42"), Perm((4, 1, 3, 2))) == load_table("SN3")
    t = load_table("SN1")
    assert apply_perm(t, Perm.identity(4)) == t
    with pytest.raises(ValueError):
        apply_perm(t, Perm.identity(3))


def test_apply_perm_respects_composition():
    rng = random.Random(7)
    for _ in range(50):
        t = random_table(rng, 4)
        p = Perm(random_perm_images(rng, 4))
        q = Perm(random_perm_images(rng, 4))
        assert apply_perm(apply_perm(t, q), p) == apply_perm(t, p.after(q))


def test_are_isomorphic_examples():
    witness = are_isomorphic(load_table("SN1"), load_table("S4_44"))
    assert witness == Perm((4, 1, 2, 3))
    assert are_isomorphic(load_table("S4_10"), load_table("S4_12")) is None
    for name in ("SN2", "S3_18"):
        t = load_table(name)
        assert are_isomorphic(t, t) == Perm.identity(t.order)


def test_witness_soundness_random():
    rng = random.Random(21)
    for _ in range(60):
        t = random_table(rng, 4)
        shuffled = apply_perm(t, Perm(random_perm_images(rng, 4)))
        w = are_isomorphic(t, shuffled)
        assert w is not None
        assert apply_perm(shuffled, w) == t


def test_isomorphism_matches_canonical_form():
    rng = random.Random(3)
    for _ in range(80):
        a = random_table(rng, 3)
        if rng.random() < 0.5:
            b = apply_perm(a, Perm(random_perm_images(rng, 3)))
        else:
            b = random_table(rng, 3)
        related = are_isomorphic(a, b) is not None
        assert related == (canonical_form(a, ISO) == canonical_form(b, ISO))


def test_predicates_invariant_under_relabelling():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.choice([2, 3, 4])
        t = random_table(rng, n)
        p = Perm(random_perm_images(rng, n))
        u = apply_perm(t, p)
        assert is_associative(t) == is_associative(u)
        assert is_commutative(t) == is_commutative(u)
        z, zu = find_zero(t), find_zero(u)
        assert (z is None) == (zu is None)
        if z is not None:
            assert zu == p(z)


def test_canonical_form_orbit_invariance():
    rng = random.Random(5)
    for _ in range(100):
        t = random_table(rng, 4)
        p = Perm(random_perm_images(rng, 4))
        for conv in (ISO, ISO_ANTI):
            assert canonical_form(apply_perm(t, p), conv) == canonical_form(t, conv)


def test_canonical_form_distinguishes_order3_list():
    keys = {canonical_key(load_table(name), ISO) for name in ORDER3_ABELIAN_NAMES}
    assert len(keys) == len(ORDER3_ABELIAN_NAMES) == 12


def test_conventions_agree_on_commutative_tables():
    for name in ("SN2", "SK3", "S3_12", "S3_15"):
        t = load_table(name)
        assert canonical_form(t, ISO) == canonical_form(t, ISO_ANTI)


def test_conventions_differ_on_left_zero():
    # left-zero and right-zero tables are anti-isomorphic but not isomorphic
    right_zero = LEFT_ZERO_3.transpose()
    assert are_isomorphic(LEFT_ZERO_3, right_zero) is None
    assert canonical_form(LEFT_ZERO_3, ISO) != canonical_form(right_zero, ISO)
    assert canonical_form(LEFT_ZERO_3, ISO_ANTI) == canonical_form(right_zero, ISO_ANTI)


def test_table_text_format_round_trip():
    t = load_table("SK3")
    assert parse_table(format_table(t, comment="with a comment")) == t
    partial = parse_partial_table("3\n? 1 2\n1 ? 3\n2 3 ?\n")
    assert partial.flat() == (0, 1, 2, 1, 0, 3, 2, 3, 0)
    assert not partial.is_complete()


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("x\n", "expected the table order"),
        ("2\n1 2\n1\n", "expected 2 entries"),
        ("2\n1 2\n1 9\n", "line 3, col 2"),
        ("2\n1 2\n1 x\n", "line 3, col 2"),
        ("2\n1 2\n", "expected 2 rows"),
        ("2\n1 ?\n2 1\n", "unfilled"),
    ],
)
def test_parse_table_errors(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        parse_table(text)
