from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffqt import (
    COMPLEX,
    EXACT,
    FLOAT,
    REAL,
    AlgebraError,
    Multivector,
    Signature,
    anticommutator,
    blade_indices,
    blade_mul,
    blade_rank,
    commutator,
    mask_from_indices,
    parse_mv,
)

from conftest import random_mv


def mv(text, p, q, field=REAL, backend=EXACT):
    return parse_mv(text, Signature(p, q), field, backend)


# ---------------------------------------------------------------- signatures

def test_signature_validation():
    Signature(0, 1)
    Signature(3, 2)
    with pytest.raises(AlgebraError):
        Signature(0, 0)
    with pytest.raises(AlgebraError):
        Signature(-1, 2)


def test_eta_diagonal():
    sig = Signature(2, 3)
    assert [sig.eta(a) for a in range(1, 6)] == [1, 1, -1, -1, -1]
    with pytest.raises(AlgebraError):
        sig.eta(6)


# ---------------------------------------------------------------- blade product

def test_blade_mul_generator_squares():
    sig = Signature(1, 1)
    assert blade_mul(0b01, 0b01, sig) == (1, 0)   # e1*e1 = +e
    assert blade_mul(0b10, 0b10, sig) == (-1, 0)  # e2*e2 = -e


def test_blade_mul_identity():
    sig = Signature(2, 1)
    for b in range(8):
        assert blade_mul(0, b, sig) == (1, b)
        assert blade_mul(b, 0, sig) == (1, b)


def test_blade_mul_symmetric_difference():
    # e12 * e13 = -e23 in Cl(3,0)
    sig = Signature(3, 0)
    assert blade_mul(0b011, 0b101, sig) == (-1, 0b110)


def test_blade_helpers():
    assert blade_rank(0b1011) == 3
    assert blade_indices(0b1011) == (1, 2, 4)
    assert mask_from_indices((1, 2, 4), 4) == 0b1011
    with pytest.raises(AlgebraError):
        mask_from_indices((1, 1), 4)
    with pytest.raises(AlgebraError):
        mask_from_indices((5,), 4)


def test_generator_relations_exhaustive():
    # e^a e^b + e^b e^a = 2 eta^{ab} e, all signatures n <= 8
    for n in range(1, 9):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    ea = Multivector.basis_blade(sig, (a,))
                    eb = Multivector.basis_blade(sig, (b,))
                    lhs = anticommutator(ea, eb)
                    want = 2 * (sig.eta(a) if a == b else 0)
                    assert lhs == Multivector.scalar(sig, want)


# ---------------------------------------------------------------- products

def test_product_examples():
    assert mv("e1", 2, 0) * mv("e2", 2, 0) == mv("e12", 2, 0)
    assert mv("2", 2, 0) * mv("3", 2, 0) == mv("6", 2, 0)
    assert mv("e12", 2, 0) * mv("e12", 2, 0) == mv("-1", 2, 0)


def test_product_mismatch_errors():
    with pytest.raises(AlgebraError):
        mv("e1", 2, 0) * mv("e1", 1, 1)
    with pytest.raises(AlgebraError):
        mv("e1", 2, 0) * mv("e1", 2, 0, field=COMPLEX)
    with pytest.raises(AlgebraError):
        mv("e1", 2, 0) * mv("e1", 2, 0, backend=FLOAT)


def test_additive_examples():
    sig = Signature(2, 0)
    e1 = mv("e1", 2, 0)
    assert (e1 + e1.scale(-1)).is_zero()
    assert mv("e1 + e12", 2, 0).scale(0).is_zero()
    assert mv("1 + e1", 2, 0) + mv("e1 + e12", 2, 0) == mv("1 + 2*e1 + e12", 2, 0)
    assert 2 * e1 == mv("2*e1", 2, 0)
    assert e1 * Fraction(1, 2) == mv("1/2*e1", 2, 0)


def test_scalar_i_multiplication():
    u = mv("e1", 3, 0, field=COMPLEX)
    assert u.scale((0, 1)) == mv("i*e1", 3, 0, field=COMPLEX)
    assert u.scale((0, 1)).scale((0, 1)) == mv("-e1", 3, 0, field=COMPLEX)
    with pytest.raises(AlgebraError):
        mv("e1", 3, 0).scale((0, 1))  # real field


# ---------------------------------------------------------------- grades

def test_grade_projection_examples():
    u = mv("1 + e1 + e12", 2, 0)
    assert u.grade(1) == mv("e1", 2, 0)
    assert u.grade(2) == mv("e12", 2, 0)
    assert mv("e1", 2, 0).grade(0).is_zero()
    with pytest.raises(AlgebraError):
        u.grade(3)
    with pytest.raises(AlgebraError):
        u.grade(-1)


def test_grade_projections_sum_to_identity(rng):
    for _ in range(50):
        sig = Signature(rng.randint(1, 4), rng.randint(0, 2))
        u = random_mv(sig, rng)
        total = Multivector.zero(sig)
        for k in range(sig.n + 1):
            total = total + u.grade(k)
        assert total == u


def test_even_odd_parts(rng):
    assert mv("1 + e1", 2, 0).even_part() == mv("1", 2, 0)
    assert mv("e123", 3, 0).odd_part() == mv("e123", 3, 0)
    for _ in range(30):
        sig = Signature(3, 1)
        u = random_mv(sig, rng)
        assert u.even_part() + u.odd_part() == u
        # fixed-point projector of the grade involution
        half = Fraction(1, 2)
        assert u.even_part() == (u + u.grade_involution()).scale(half)
        assert u.odd_part() == (u - u.grade_involution()).scale(half)


# ---------------------------------------------------------------- conjugations

def test_reversion_examples():
    assert mv("5", 2, 0).reversion() == mv("5", 2, 0)
    assert mv("e12", 2, 0).reversion() == mv("-e12", 2, 0)
    assert mv("e1 + e123", 3, 0).reversion() == mv("e1 - e123", 3, 0)


def test_reversion_sign_by_rank():
    sig = Signature(4, 2)
    for mask in range(1 << 6):
        k = blade_rank(mask)
        u = Multivector.basis_blade(sig, mask)
        want = u if (k * (k - 1) // 2) % 2 == 0 else -u
        assert u.reversion() == want


def test_grade_involution_examples():
    assert mv("e1", 2, 0).grade_involution() == mv("-e1", 2, 0)
    assert mv("7", 2, 0).grade_involution() == mv("7", 2, 0)
    assert mv("1 + e1 + e12", 2, 0).grade_involution() == mv("1 - e1 + e12", 2, 0)


def test_complex_conjugate_examples():
    assert mv("i*e1", 3, 0, COMPLEX).complex_conjugate() == mv("-i*e1", 3, 0, COMPLEX)
    assert mv("e12", 3, 0, COMPLEX).complex_conjugate() == mv("e12", 3, 0, COMPLEX)
    u = mv("2 + 3i + i*e12", 3, 0, COMPLEX)
    assert u.complex_conjugate() == mv("2 - 3i - i*e12", 3, 0, COMPLEX)
    with pytest.raises(AlgebraError):
        mv("e1", 3, 0).complex_conjugate()


def test_pseudo_hermitian_examples():
    assert mv("i", 2, 2, COMPLEX).pseudo_hermitian() == mv("-i", 2, 2, COMPLEX)
    assert mv("e12", 2, 2, COMPLEX).pseudo_hermitian() == mv("-e12", 2, 2, COMPLEX)
    assert mv("i*e12", 2, 2, COMPLEX).pseudo_hermitian() == mv("i*e12", 2, 2, COMPLEX)
    with pytest.raises(AlgebraError):
        mv("e1", 2, 2).pseudo_hermitian()


@st.composite
def sig_and_terms(draw, field=REAL):
    n = draw(st.integers(1, 4))
    p = draw(st.integers(0, n))
    sig = Signature(p, n - p)
    size = 1 << n
    coeff = st.integers(-5, 5)
    terms = draw(
        st.dictionaries(
            st.integers(0, size - 1),
            st.tuples(coeff, coeff if field == COMPLEX else st.just(0)),
            max_size=size,
        )
    )
    return Multivector(sig, terms, field, EXACT)


@given(sig_and_terms(), sig_and_terms())
def test_antiautomorphism_laws(u, v):
    if u.sig != v.sig:
        return
    uv = u * v
    assert uv.reversion() == v.reversion() * u.reversion()
    assert uv.grade_involution() == u.grade_involution() * v.grade_involution()


@given(sig_and_terms(field=COMPLEX))
def test_involutions(u):
    assert u.reversion().reversion() == u
    assert u.grade_involution().grade_involution() == u
    assert u.complex_conjugate().complex_conjugate() == u
    # pseudo-Hermitian conjugation factors both ways
    assert u.pseudo_hermitian() == u.complex_conjugate().reversion()
    assert u.pseudo_hermitian().pseudo_hermitian() == u


@given(sig_and_terms(), sig_and_terms(), sig_and_terms())
def test_associativity_and_distributivity(u, v, w):
    if not (u.sig == v.sig == w.sig):
        return
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


@given(sig_and_terms(field=COMPLEX), sig_and_terms(field=COMPLEX))
def test_complex_conjugation_is_automorphism(u, v):
    if u.sig != v.sig:
        return
    assert (u * v).complex_conjugate() == u.complex_conjugate() * v.complex_conjugate()


# ---------------------------------------------------------------- brackets

def test_bracket_examples():
    u = mv("1 + 2*e1 + e12", 2, 1)
    assert commutator(u, u).is_zero()
    for p, q in ((2, 0), (1, 1), (0, 2), (3, 2)):
        assert anticommutator(mv("e1", p, q), mv("e2", p, q)).is_zero()
    assert commutator(mv("e12", 3, 0), mv("e13", 3, 0)) == mv("-2*e23", 3, 0)


def test_bracket_reconstructs_product(rng):
    half = Fraction(1, 2)
    for _ in range(30):
        sig = Signature(2, 2)
        u, v = random_mv(sig, rng), random_mv(sig, rng)
        assert (commutator(u, v) + anticommutator(u, v)).scale(half) == u * v


def test_exact_backend_stays_rational(rng):
    sig = Signature(2, 1)
    u = Multivector(sig, {0b001: Fraction(1, 3), 0b011: Fraction(-2, 7)})
    v = Multivector(sig, {0b101: Fraction(5, 2), 0b010: 4})
    w = u * v + u
    for _, (re, im) in w.terms():
        assert isinstance(re, (int, Fraction))
        assert im == 0


# ---------------------------------------------------------------- dimensions

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_dimension_counts(n):
    masks = list(range(1 << n))
    assert len(masks) == 2 ** n
    for k in range(n + 1):
        assert sum(1 for m in masks if blade_rank(m) == k) == comb(n, k)
    assert sum(1 for m in masks if blade_rank(m) % 2 == 0) == 2 ** (n - 1)


def test_equality_contract():
    a = mv("e1", 2, 0)
    with pytest.raises(AlgebraError):
        a == mv("e1", 1, 1)
    with pytest.raises(AlgebraError):
        a == mv("e1", 2, 0, field=COMPLEX)
    assert (a == "e1") is False or True  # non-multivector comparison does not raise


def test_float_backend_basics():
    u = mv("0.5*e1 + e2", 2, 0, backend=FLOAT)
    v = u * u
    assert v.grades() == (0,)
    assert abs(v.coeff(0)[0] - 1.25) < 1e-12
