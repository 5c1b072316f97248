from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clifftwist.algebra import (
    Multivector,
    Signature,
    SignatureMismatch,
    cocycle,
    commutes,
    format_multivector,
    gray_inverse,
    mask_of,
    monomial_key,
    monomial_product,
    monomial_product_reference,
    monomial_str,
    parse_monomial,
    parse_multivector,
    star,
    transposition,
)
from conftest import multivectors, signatures_upto6


def naive_mul(u, v):
    out = Multivector.zero(u.sig)
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            s, m = monomial_product_reference(a, b, u.sig)
            out = out + Multivector.monomial(u.sig, m, s * ca * cb)
    return out


@pytest.mark.parametrize("p,q", [(p, n - p) for n in range(7) for p in range(n + 1)])
def test_product_sign_matches_swap_sort(p, q):
    sig = Signature(p, q)
    for a in range(sig.dim):
        for b in range(sig.dim):
            assert monomial_product(a, b, sig) == monomial_product_reference(a, b, sig)


def test_gray_inverse_is_prefix_parity():
    for n in range(1, 10):
        for b in range(1 << n):
            h = 0
            acc = 0
            for i in range(n):
                acc ^= (b >> i) & 1
                h |= acc << i
            assert gray_inverse(b, n) == h


def test_generator_squares_and_anticommutation():
    sig = Signature(3, 4)
    one = Multivector.scalar(sig, 1)
    for i in range(1, sig.n + 1):
        ei = sig.generator(i)
        assert ei * ei == one * sig.eps[i - 1]
        for j in range(i + 1, sig.n + 1):
            ej = sig.generator(j)
            assert ei * ej == -(ej * ei)


def test_words_build_monomials():
    sig = Signature(2, 3)
    e = sig.generator
    assert e(1) * e(3) * e(4) == Multivector.monomial(sig, mask_of([1, 3, 4]))
    assert e(3) * e(1) == Multivector.monomial(sig, mask_of([1, 3]), -1)
    # e5 e5 = -1, e2 e2 = +1
    assert (e(2) * e(5)) * (e(2) * e(5)) == Multivector.scalar(sig, 1)


@pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (0, 3), (2, 2), (3, 1), (1, 4)])
def test_cocycle_identity(p, q):
    sig = Signature(p, q)
    for a in range(sig.dim):
        for b in range(sig.dim):
            for c in range(sig.dim):
                lhs = cocycle(a, b, sig) * cocycle(a ^ b, c, sig)
                rhs = cocycle(b, c, sig) * cocycle(a, b ^ c, sig)
                assert lhs == rhs


def test_commutation_rule_all_signatures():
    for sig in (Signature(4, 0), Signature(0, 4), Signature(2, 3)):
        for a in range(sig.dim):
            for b in range(sig.dim):
                sab = monomial_product(a, b, sig)[0]
                sba = monomial_product(b, a, sig)[0]
                assert commutes(a, b) == (sab == sba)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associativity(data):
    sig = data.draw(signatures_upto6)
    u, v, w = (data.draw(multivectors(sig)) for _ in range(3))
    assert (u * v) * w == u * (v * w)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_fast_product_matches_naive(data):
    sig = data.draw(signatures_upto6)
    u, v = data.draw(multivectors(sig)), data.draw(multivectors(sig))
    assert u * v == naive_mul(u, v)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_distributivity(data):
    sig = data.draw(signatures_upto6)
    u, v, w = (data.draw(multivectors(sig)) for _ in range(3))
    assert u * (v + w) == u * v + u * w
    assert (v + w) * u == v * u + w * u


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_anti_involution_laws(data):
    sig = data.draw(signatures_upto6)
    u, v = data.draw(multivectors(sig)), data.draw(multivectors(sig))
    for inv in (Multivector.transposition, star, Multivector.reversion, Multivector.conjugation):
        assert inv(u * v) == inv(v) * inv(u)
        assert inv(inv(u)) == u
        assert inv(u + v) == inv(u) + inv(v)
    assert (u * v).grade_involution() == u.grade_involution() * v.grade_involution()


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_star_equals_transposition(data):
    sig = data.draw(signatures_upto6)
    u = data.draw(multivectors(sig, max_terms=10))
    assert star(u) == transposition(u)


def test_transposition_inverts_monomials():
    sig = Signature(3, 3)
    one = Multivector.scalar(sig, 1)
    for m in range(sig.dim):
        mv = Multivector.monomial(sig, m)
        assert mv.transposition() * mv == one


def test_canonical_order_and_strings():
    sig = Signature(2, 1)
    assert [monomial_str(m) for m in sig.monomials()] == ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"]
    assert monomial_str(mask_of([2, 10])) == "e{2,10}"
    assert parse_monomial("e{2,10}") == mask_of([2, 10])
    assert parse_monomial("e123") == 0b111
    with pytest.raises(ValueError):
        parse_monomial("e21")
    assert monomial_key(0b100) < monomial_key(0b011)


def test_format_round_trip():
    sig = Signature(2, 2)
    u = Multivector(sig, {0: Fraction(1, 4), 0b101: Fraction(1, 4), 0b1010: Fraction(1, 4), 0b1111: Fraction(-1, 4)})
    text = format_multivector(u)
    assert text == "1/4 + 1/4*e13 + 1/4*e24 - 1/4*e1234"
    assert parse_multivector(sig, text) == u
    assert format_multivector(Multivector.zero(sig)) == "0"
    assert str(Multivector(sig, {1: -1, 2: 3})) == "-e1 + 3*e2"


def test_rejects_floats_and_mixed_signatures():
    sig = Signature(1, 1)
    with pytest.raises(TypeError):
        Multivector(sig, {0: 0.5})
    with pytest.raises(SignatureMismatch):
        Multivector.scalar(sig) * Multivector.scalar(Signature(2, 0))
    with pytest.raises(ValueError):
        Multivector(sig, {0b100: 1})


def test_signature_limits():
    Signature(32, 0)
    with pytest.raises(ValueError):
        Signature(20, 13)
    with pytest.raises(ValueError):
        Signature(-1, 2)


def test_large_signature_sparse_product():
    # beyond the precomputed twist table
    sig = Signature(10, 10)
    a = Multivector.monomial(sig, mask_of([1, 15, 20]))
    b = Multivector.monomial(sig, mask_of([15, 20]))
    s, m = monomial_product_reference(mask_of([1, 15, 20]), mask_of([15, 20]), sig)
    assert a * b == Multivector.monomial(sig, m, s)
