import random
from fractions import Fraction

import pytest

from clifftwist.algebra import Multivector, Signature, commutes, monomial_str, random_multivector
from clifftwist.cli import clidata_dict
from clifftwist.idempotents import k_dimension, primitive_idempotent
from clifftwist.spinors import (
    NotInIdeal,
    clidata,
    dagger_check,
    dagger_kind,
    k_basis,
    k_basis_bruteforce,
    k_class,
    rep_matrix,
    spinor_coords,
    spinor_from_coords,
    spinor_k_coords,
    spinor_space_dimension,
    span_rank,
)
from conftest import all_signatures, random_spinor, sig_id
from golden import CLIDATA


@pytest.mark.parametrize("pq", sorted(CLIDATA), ids=lambda pq: f"{pq[0]}-{pq[1]}")
def test_clidata_golden(pq):
    d = clidata_dict(Signature(*pq))
    assert list(d.values()) == CLIDATA[pq]


def test_clidata_cl13_and_cl22():
    d = clidata_dict(Signature(1, 3))
    assert d["k_basis"] == ["1", "e2", "e3", "e23"]
    assert d["spinor_basis_K"] == ["1", "e1"]
    d = clidata_dict(Signature(2, 2))
    assert d["spinor_basis_R"] == ["1", "e1", "e2", "e12"]
    assert d["k_basis"] == ["1"]


@pytest.mark.parametrize("sig", all_signatures(7), ids=sig_id)
def test_k_basis_against_bruteforce(sig):
    f = primitive_idempotent(sig)
    fast = k_basis(f)
    slow = k_basis_bruteforce(f)
    assert len(fast) == k_dimension(sig)
    assert set(fast) <= set(slow)
    # same real span inside f Cl f
    assert span_rank(fast, f.value) == span_rank(slow, f.value) == len(fast)
    gens = f.gens
    assert all(commutes(m, g) for m in fast for g in gens)


@pytest.mark.parametrize("sig", all_signatures(6), ids=sig_id)
def test_k_basis_closed_up_to_sign(sig):
    # the monomials of K(f) / T(f) representatives form an XOR subspace
    b = set(k_basis(primitive_idempotent(sig)))
    assert all((x ^ y) in b for x in b for y in b)


def test_k_class_by_residue():
    expect = {0: "R", 1: "2R", 2: "R", 3: "C", 4: "H", 5: "2H", 6: "H", 7: "C"}
    for n in range(10):
        for p in range(n + 1):
            assert k_class(Signature(p, n - p)) == expect[(2 * p - n) % 8]


@pytest.mark.parametrize("sig", all_signatures(7), ids=sig_id)
def test_spinor_space_dimension(sig):
    cd = clidata(sig)
    dimK = k_dimension(sig)
    assert spinor_space_dimension(cd.f) == len(cd.data5) == len(cd.data7) * dimK
    assert span_rank(cd.data5, cd.f.value) == len(cd.data5)
    assert span_rank(cd.data7, cd.f.value, cd.data6) == len(cd.data5)


@pytest.mark.parametrize("pq", [(1, 2), (1, 3), (2, 1), (1, 4), (3, 2), (0, 5)])
def test_coordinates_round_trip(pq, rng):
    cd = clidata(Signature(*pq))
    for _ in range(10):
        psi = random_spinor(cd, rng)
        coords = spinor_k_coords(psi, cd)
        assert spinor_from_coords(coords, cd) == psi


def test_not_in_ideal():
    cd = clidata(Signature(1, 2))
    with pytest.raises(NotInIdeal):
        spinor_coords(Multivector.scalar(cd.sig, 1), cd)


@pytest.mark.parametrize("pq", [(1, 1), (1, 2), (0, 2), (2, 1), (1, 4), (3, 1)])
def test_rep_matrix_is_homomorphism(pq, rng):
    sig = Signature(*pq)
    cd = clidata(sig)
    for _ in range(5):
        u, v = random_multivector(sig, rng), random_multivector(sig, rng)
        assert rep_matrix(u * v, cd) == rep_matrix(u, cd) @ rep_matrix(v, cd)
    n = len(cd.data7)
    one = rep_matrix(Multivector.scalar(sig, 1), cd)
    assert one == type(one).identity(n, cd.ring)


def test_rep_matrix_acts_on_coordinates(rng):
    cd = clidata(Signature(1, 3))
    sig = cd.sig
    u = random_multivector(sig, rng)
    psi = random_spinor(cd, rng)
    m = rep_matrix(u, cd)
    x = spinor_k_coords(psi, cd)
    y = spinor_k_coords(u * psi, cd)
    n = len(x)
    for i in range(n):
        acc = cd.ring.zero()
        for j in range(n):
            acc = acc + m[i, j] * x[j]
        assert acc == y[i]


def test_dagger_kind():
    assert dagger_kind(Signature(2, 2)) == "T"
    assert dagger_kind(Signature(1, 2)) == "dagger"
    assert dagger_kind(Signature(1, 3)) == "ddagger"
    assert dagger_kind(Signature(2, 1)) == "T"


@pytest.mark.parametrize("sig", all_signatures(5), ids=sig_id)
def test_dagger_law_small(sig):
    cd = clidata(sig)
    r = random.Random(sig.p * 31 + sig.q)
    for u in [sig.generator(i) for i in range(1, sig.n + 1)] + [random_multivector(sig, r) for _ in range(5)]:
        assert dagger_check(u, cd)


def test_field_names():
    names = {clidata(s).field for s in all_signatures(5)}
    assert names == {"real", "complex", "quaternionic"}
    assert clidata(Signature(2, 1)).type == "semisimple"
    assert [monomial_str(m) for m in clidata(Signature(0, 0)).data7] == ["1"]


def test_k_multiplication_matches_clifford_product(rng):
    cd = clidata(Signature(1, 3))
    comp = cd.ring.components[0]
    for _ in range(10):
        x = tuple(Fraction(rng.randint(-3, 3)) for _ in range(4))
        y = tuple(Fraction(rng.randint(-3, 3)) for _ in range(4))
        assert comp.to_multivector(comp.mul(x, y)) == comp.to_multivector(x) * comp.to_multivector(y)
