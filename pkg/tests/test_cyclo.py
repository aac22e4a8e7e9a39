import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadamard6.cyclo import CycInt, OrderMismatchError, cyclotomic_coeffs, euler_phi, zeta_pow

W = CycInt.zeta(3)
I4 = CycInt.zeta(4)


def test_cyclotomic_polynomials():
    assert cyclotomic_coeffs(1) == (-1, 1)
    assert cyclotomic_coeffs(2) == (1, 1)
    assert cyclotomic_coeffs(3) == (1, 1, 1)
    assert cyclotomic_coeffs(4) == (1, 0, 1)
    assert cyclotomic_coeffs(6) == (1, -1, 1)
    assert cyclotomic_coeffs(12) == (1, 0, -1, 0, 1)


def test_euler_phi():
    assert [euler_phi(q) for q in (1, 2, 3, 4, 6, 12)] == [1, 1, 2, 2, 2, 4]


def test_coeff_length_matches_phi():
    for q in (1, 2, 3, 4, 6, 12):
        assert len(CycInt.zeta(q).coeffs) == euler_phi(q)


def test_ring_op_examples():
    assert W * (W * W) == 1
    assert CycInt.from_int(3, 1) + W + W * W == 0
    assert (1 + W) * (1 + W) == W


def test_conjugate_examples():
    assert W.conjugate() == W * W
    assert I4.conjugate() == -I4
    assert (2 + W).conjugate() == 1 - W


def test_conjugate_cube_root_relation():
    # zeta_3^2 is stored through the relation 1 + zeta + zeta^2 = 0
    assert (W * W).coeffs == (-1, -1)
    assert (I4 * I4).coeffs == (-1, 0)


def test_embed_examples():
    w = W.embed()
    assert abs(w - complex(-0.5, math.sqrt(3) / 2)) < 1e-15
    assert CycInt.from_int(3, 1).embed() == 1
    v = (2 * (W - 1)).embed()
    assert abs(v - complex(-3.0, math.sqrt(3))) < 1e-14
    assert abs(abs(CycInt.zeta(12, 5).embed()) - 1.0) < 1e-15


def test_zeta_pow_wraps():
    assert zeta_pow(3, 5) == zeta_pow(3, 2)
    assert zeta_pow(4, 2) == -1


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        W + I4
    with pytest.raises(OrderMismatchError):
        W * I4


def test_to_order():
    w6 = W.to_order(6)
    assert w6.q == 6
    assert abs(w6.embed() - W.embed()) < 1e-15
    assert (W + 2).to_order(12).conjugate() == (W.conjugate() + 2).to_order(12)
    with pytest.raises(OrderMismatchError):
        W.to_order(4)


def test_str_and_repr():
    assert str(CycInt(3, [0, 0])) == "0"
    assert str(CycInt(3, [1, -1])) == "1-z"
    assert "CycInt(3" in repr(W)


def _cyc(q, coeffs):
    return CycInt(q, coeffs)


cyc_triples = st.sampled_from([1, 2, 3, 4, 6, 12]).flatmap(
    lambda q: st.tuples(
        *[st.lists(st.integers(-9, 9), min_size=1, max_size=q).map(
            lambda cs, q=q: _cyc(q, cs)) for _ in range(3)]
    )
)


@settings(max_examples=1000, deadline=None)
@given(cyc_triples)
def test_ring_axioms(triple):
    a, b, c = triple
    zero = CycInt.from_int(a.q, 0)
    one = CycInt.from_int(a.q, 1)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a + (-a) == zero
    assert a - b == a + (-b)


@settings(max_examples=300, deadline=None)
@given(cyc_triples)
def test_canonical_reduction_idempotent(triple):
    a, b, _ = triple
    for r in (a + b, a * b, -a):
        assert CycInt(r.q, r.coeffs) == r


@settings(max_examples=300, deadline=None)
@given(cyc_triples)
def test_conjugation_is_a_ring_involution(triple):
    a, b, _ = triple
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@settings(max_examples=300, deadline=None)
@given(cyc_triples)
def test_embed_is_a_homomorphism(triple):
    a, b, _ = triple
    assert abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12
    assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-9


@settings(max_examples=300, deadline=None)
@given(cyc_triples)
def test_norm_is_nonnegative_real(triple):
    a, _, _ = triple
    v = (a * a.conjugate()).embed()
    assert abs(v.imag) < 1e-9
    assert v.real > -1e-9


def test_conjugate_matches_complex_conjugate():
    for q in (3, 4, 6):
        a = CycInt(q, [2, -3])
        assert abs(a.conjugate().embed() - a.embed().conjugate()) < 1e-14
