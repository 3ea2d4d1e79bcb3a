import random

import pytest

from sparsinv import (
    additive_span,
    is_subfield_set,
    make_field,
    multiplicative_closure,
    parse_field_spec,
    subfield_closure,
    subfield_degree,
    subfield_elements,
)
from sparsinv.errors import (
    DegreeMismatch,
    DivisionByZero,
    ElementNotInField,
    NotADivisor,
    NotIrreducible,
    NotPrime,
)


# -- construction -------------------------------------------------------

def test_prime_field_construction():
    f2 = make_field(2, 1, [1])
    assert f2.q == 2
    assert sorted(f2.elements()) == [0, 1]


def test_gf4_construction(gf4):
    assert gf4.q == 4
    assert gf4.modulus == (1, 1, 1)


def test_reducible_modulus_rejected():
    # z^2 + 1 = (z + 1)^2 over F_2
    with pytest.raises(NotIrreducible):
        make_field(2, 2, [1, 0, 1])


def test_modulus_with_degree_two_factor_rejected():
    # (z^2 + z + 1)^2 = z^4 + z^2 + 1 has no roots but factors
    with pytest.raises(NotIrreducible):
        make_field(2, 4, [1, 0, 1, 0, 1])


def test_not_prime_rejected():
    with pytest.raises(NotPrime):
        make_field(4, 1, [1])


def test_degree_mismatch_rejected():
    with pytest.raises(DegreeMismatch):
        make_field(2, 2, [1, 1, 1, 1])
    with pytest.raises(DegreeMismatch):
        make_field(2, 3, None)


# -- arithmetic ---------------------------------------------------------

def test_gf4_multiplication_table(gf4):
    z = gf4.parse_element("z")
    z1 = gf4.parse_element("z+1")
    assert gf4.mul(z, z) == z1
    assert gf4.inv(z) == z1
    assert gf4.pow(z, 3) == 1


def test_inverse_of_zero_raises(gf4):
    with pytest.raises(DivisionByZero):
        gf4.inv(0)


def test_field_axioms_random(gf8, gf9):
    rng = random.Random(7)
    for ctx in (gf8, gf9):
        for _ in range(200):
            a, b, c = (rng.randrange(ctx.q) for _ in range(3))
            assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
            assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
            if a != 0:
                assert ctx.mul(a, ctx.inv(a)) == 1
            assert ctx.add(a, ctx.neg(a)) == 0


def test_multiplicative_group_order(gf4, gf8, gf9, gf16):
    rng = random.Random(11)
    for ctx in (gf4, gf8, gf9, gf16):
        e = rng.randrange(1, ctx.q)
        assert ctx.pow(e, ctx.q - 1) == 1


def test_schoolbook_path_matches_tables(gf9):
    # the slow path must agree with the table path everywhere
    for a in gf9.elements():
        for b in gf9.elements():
            assert gf9._mul_slow(a, b) == gf9.mul(a, b)
            assert gf9._add_slow(a, b) == gf9.add(a, b)


# -- frobenius ----------------------------------------------------------

def test_frobenius_examples(gf4):
    z = gf4.parse_element("z")
    assert gf4.frobenius(z, 1) == gf4.parse_element("z+1")
    assert gf4.frobenius(1, 1) == 1
    assert gf4.frobenius(z, 2) == z


def test_frobenius_is_field_automorphism(gf4, gf8, gf9, gf16):
    for ctx in (gf4, gf8, gf9, gf16):
        for a in ctx.elements():
            for b in ctx.elements():
                assert ctx.frobenius(ctx.add(a, b), 1) == ctx.add(
                    ctx.frobenius(a, 1), ctx.frobenius(b, 1))
                assert ctx.frobenius(ctx.mul(a, b), 1) == ctx.mul(
                    ctx.frobenius(a, 1), ctx.frobenius(b, 1))


# -- subfields ----------------------------------------------------------

def test_subfield_examples(gf4, gf8):
    assert subfield_elements(gf4, 1) == (0, 1)
    assert len(subfield_elements(gf4, 2)) == 4
    with pytest.raises(NotADivisor):
        subfield_elements(gf8, 2)


def test_subfield_closed_and_sized(gf4, gf8, gf9, gf16):
    for ctx in (gf4, gf8, gf9, gf16):
        for d in range(1, ctx.k + 1):
            if ctx.k % d != 0:
                continue
            sub = subfield_elements(ctx, d)
            assert len(sub) == ctx.p ** d
            s = set(sub)
            for a in sub:
                for b in sub:
                    assert ctx.add(a, b) in s
                    assert ctx.mul(a, b) in s
            assert is_subfield_set(ctx, sub)
            assert subfield_degree(ctx, sub) == d


def test_subfield_closure(gf4, gf16):
    z = gf4.parse_element("z")
    assert subfield_closure(gf4, [z]) == tuple(sorted(gf4.elements()))
    assert subfield_closure(gf4, [1]) == (0, 1)
    # in GF(16), z^5 generates the norm-stable GF(4) subfield
    g = gf16.primitive_element()
    a = gf16.pow(g, 5)
    assert subfield_closure(gf16, [a]) == subfield_elements(gf16, 2)


def test_multiplicative_closure(gf4, gf9):
    z = gf4.parse_element("z")
    assert multiplicative_closure(gf4, [z]) == (1, 2, 3)
    assert multiplicative_closure(gf4, []) == (1,)
    g = gf9.primitive_element()
    sq = gf9.mul(g, g)
    assert len(multiplicative_closure(gf9, [sq])) == 4


# -- additive spans -----------------------------------------------------

def test_additive_span_examples(gf4):
    f2 = subfield_elements(gf4, 1)
    z = gf4.parse_element("z")
    assert additive_span(gf4, [1], f2) == ((0, 1), (1,))
    assert additive_span(gf4, [z], f2) == ((0, z), (z,))
    span, basis = additive_span(gf4, [1, z], f2)
    assert span == (0, 1, 2, 3)
    assert basis == (1, z)


def test_additive_span_idempotent(gf8, gf9):
    rng = random.Random(3)
    for ctx in (gf8, gf9):
        scalars = subfield_elements(ctx, 1)
        for _ in range(20):
            gens = [rng.randrange(ctx.q) for _ in range(rng.randrange(1, 4))]
            span, basis = additive_span(ctx, gens, scalars)
            span2, _ = additive_span(ctx, span, scalars)
            assert span2 == span
            assert len(span) == len(scalars) ** len(basis)


# -- text forms ---------------------------------------------------------

def test_element_text_round_trip(gf2, gf4, gf8, gf9):
    for ctx in (gf2, gf4, gf8, gf9):
        for a in ctx.elements():
            assert ctx.parse_element(ctx.element_to_text(a)) == a


def test_parse_element_rejects_out_of_field(gf2, gf4):
    with pytest.raises(ElementNotInField):
        gf2.parse_element("z")
    with pytest.raises(ElementNotInField):
        gf4.parse_element("z^2")
    with pytest.raises(ElementNotInField):
        gf4.parse_element("2")


def test_field_spec_round_trip(gf2, gf4, gf8, gf9):
    for ctx in (gf2, gf4, gf8, gf9):
        assert parse_field_spec(ctx.spec_text()) == ctx


def test_field_spec_requires_modulus_for_extensions():
    with pytest.raises(DegreeMismatch):
        parse_field_spec("GF(2^2)")
