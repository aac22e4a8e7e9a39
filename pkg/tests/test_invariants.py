import math
import random
from collections import Counter

import numpy as np
import pytest

from hadamard6 import catalog
from hadamard6.cyclo import CycInt
from hadamard6.invariants import (
    REFERENCE_SPECTRA,
    REFERENCE_SPECTRAL_FUNCTIONS,
    ConvergenceError,
    ExactPoly,
    IndeterminateRankError,
    ScaledPoly,
    charpoly_exact,
    closed_form_A2a,
    defect,
    deformation_system,
    eig_real_symmetric,
    haagerup_set,
    poly_eq,
    rank_from_singular_values,
    scale,
    spectrum_distance,
    spectrum_numeric,
)
from hadamard6.matrices import ButsonMatrix, dephase, rephase, PhaseVector

rng = random.Random(4242)


def scaled(name):
    b = catalog.get(name)
    return scale(charpoly_exact(b), b.n)


def random_standard_transform(b):
    rp, cp = list(range(b.n)), list(range(b.n))
    rng.shuffle(rp)
    rng.shuffle(cp)
    left = PhaseVector(b.q, tuple(rng.randrange(b.q) for _ in range(b.n)))
    right = PhaseVector(b.q, tuple(rng.randrange(b.q) for _ in range(b.n)))
    return rephase(b.permuted(rp, cp), left, right)


# --- exact characteristic polynomials --------------------------------------

def test_charpoly_one_by_one():
    p = charpoly_exact(ButsonMatrix(3, [[0]]))
    assert [tuple(c.coeffs) for c in p.coeffs] == [(-1, 0), (1, 0)]  # x - 1


def test_charpoly_two_by_two_hand_value():
    # [[1, 1], [1, -1]] has det = -2 and trace 0, so det(xI - M) = x^2 - 2.
    p = charpoly_exact(ButsonMatrix(2, [[0, 0], [0, 1]]))
    assert [tuple(c.coeffs) for c in p.coeffs] == [(-2,), (0,), (1,)]


def test_charpoly_rejects_large_dimension():
    with pytest.raises(ValueError):
        charpoly_exact(ButsonMatrix(2, [[0] * 9 for _ in range(9)]))


def test_charpoly_is_monic():
    for name in ("A1", "M6", "F6"):
        assert charpoly_exact(catalog.get(name)).coeffs[-1] == 1


def test_top_coefficient_is_minus_trace():
    # Independent hand oracle: e5 must equal the negated diagonal sum.
    for name in catalog.names():
        b = catalog.get(name)
        tr = CycInt.from_int(b.q, 0)
        for i in range(6):
            tr = tr + b.value(i, i)
        assert scale(charpoly_exact(b), 6).e[5] == -tr, name


def test_charpolys_match_reference_displays():
    for name, ref in REFERENCE_SPECTRAL_FUNCTIONS.items():
        assert poly_eq(scaled(name), ref), name


def test_variant_spectral_functions_pairwise_distinct():
    names = ["A10", "A20", "A30", "A40", "A50", "A60"]
    polys = [scaled(n) for n in names]
    for i in range(6):
        for j in range(i + 1, 6):
            assert not poly_eq(polys[i], polys[j]), (names[i], names[j])


def test_unit_diagonal_forms_share_integer_charpoly():
    expected = [(-216, 0), (216, 0), (-90, 0), (0, 0), (15, 0), (-6, 0), (1, 0)]
    for name in ("A1", "A2", "A3"):
        assert [tuple(c.coeffs) for c in scaled(name).e] == expected, name


def test_a1_charpoly_invariant_under_root_conjugation():
    assert poly_eq(scaled("A1"), scale(charpoly_exact(catalog.get("A1").conjugated()), 6))


def test_charpoly_permutation_conjugation_invariance():
    for base, count in (("A10", 50), ("M6", 50)):
        b = catalog.get(base)
        p = charpoly_exact(b)
        for _ in range(count):
            perm = list(range(6))
            rng.shuffle(perm)
            assert charpoly_exact(b.permuted(perm, perm)) == p


# --- scaling and comparison -------------------------------------------------

def test_scale_binomial_example():
    # (x - 1)^6: the x^5 coefficient of the scaled view is -6/sqrt(6).
    coeffs = [1, -6, 15, -20, 15, -6, 1]
    p = ExactPoly(3, tuple(CycInt.from_int(3, c) for c in coeffs))
    s = scale(p, 6)
    assert s.e[5] == -6
    assert abs(s.complex_coeffs()[5] - (-6 / math.sqrt(6))) < 1e-15


def test_scale_m6_coefficient():
    s = scaled("M6")
    assert s.e[4] == -18
    assert abs(s.complex_coeffs()[4] - (-3.0)) < 1e-15


def test_scale_degree_mismatch():
    p = charpoly_exact(ButsonMatrix(3, [[0]]))
    with pytest.raises(ValueError):
        scale(p, 6)


def test_poly_eq_examples():
    assert poly_eq(scaled("A01"), scaled("A03"))
    assert not poly_eq(scaled("A01"), scaled("A02"))
    p = scaled("A10")
    assert poly_eq(p, p)


def test_poly_eq_across_root_orders():
    # (x^2 - 1)^3 written over the order-3 ring equals M6's order-4 polynomial.
    ints = [-216, 0, 108, 0, -18, 0, 1]
    other = ScaledPoly(6, 3, tuple(CycInt.from_int(3, c) for c in ints))
    assert poly_eq(other, scaled("M6"))
    assert not poly_eq(other, scaled("A10"))


def test_poly_eq_dimension_mismatch():
    p1 = scale(charpoly_exact(ButsonMatrix(3, [[0]])), 1)
    with pytest.raises(ValueError):
        poly_eq(p1, scaled("A10"))


def test_scaled_poly_requires_monic():
    with pytest.raises(ValueError):
        ScaledPoly(1, 3, (CycInt.from_int(3, 1), CycInt.from_int(3, 2)))


# --- numeric spectra ---------------------------------------------------------

def test_spectrum_of_triple_roots():
    spec = spectrum_numeric(scaled("M6"))
    assert sorted(m for _, m in spec.pairs) == [3, 3]
    assert spectrum_distance(spec, REFERENCE_SPECTRA["M6"]) < 1e-12


def test_spectrum_m61_reference_values():
    spec = spectrum_numeric(scaled("M61"))
    assert spectrum_distance(spec, REFERENCE_SPECTRA["M61"]) < 1e-10
    assert sorted(m for _, m in spec.pairs) == [1, 1, 2, 2]


def test_spectrum_a1_reference_values():
    spec = spectrum_numeric(scaled("A1"))
    assert spectrum_distance(spec, REFERENCE_SPECTRA["A1"]) < 1e-10
    assert sorted(m for _, m in spec.pairs) == [1, 1, 2, 2]
    total = sum(v * m for v, m in spec.pairs)
    assert abs(total - math.sqrt(6)) < 1e-10  # trace/sqrt(6) of a unit diagonal


def test_spectrum_roots_satisfy_polynomial_and_are_unimodular():
    for name in catalog.names():
        p = scaled(name)
        spec = spectrum_numeric(p)
        assert spec.n == 6
        product = 1 + 0j
        for v in spec.values():
            assert abs(p.evaluate(v)) <= 1e-8
            assert abs(abs(v) - 1.0) <= 1e-8
            product *= v
        assert abs(abs(product) - 1.0) <= 1e-8


def test_spectrum_matches_lapack_eigenvalues():
    # Cross-check the polynomial-root path against an independent eigensolver.
    for name in ("A10", "A02", "M61"):
        b = catalog.get(name)
        spec = spectrum_numeric(scale(charpoly_exact(b), 6))
        ev = np.linalg.eigvals(b.to_complex() / math.sqrt(6))
        ref = [(complex(v), 1) for v in ev]
        assert spectrum_distance(spec, ref) < 1e-8


def test_spectrum_convergence_error_on_absurd_tolerance():
    with pytest.raises(ConvergenceError):
        spectrum_numeric(scaled("A10"), tol=1e-30)


def test_spectrum_rejects_nonpositive_tol():
    with pytest.raises(ValueError):
        spectrum_numeric(scaled("A10"), tol=0.0)


def test_spectrum_distance_requires_equal_size():
    spec = spectrum_numeric(scaled("M6"))
    with pytest.raises(ValueError):
        spectrum_distance(spec, [(1 + 0j, 1)])


# --- Haagerup fingerprint ----------------------------------------------------

def test_haagerup_rank_one_pattern_is_trivial():
    r = [rng.randrange(3) for _ in range(6)]
    c = [rng.randrange(3) for _ in range(6)]
    b = ButsonMatrix(3, [[r[i] + c[j] for j in range(6)] for i in range(6)])
    assert haagerup_set(b) == Counter({0: 6 ** 4})


def test_haagerup_m6_equals_m61():
    assert haagerup_set(catalog.get("M6")) == haagerup_set(catalog.get("M61"))


def test_haagerup_separates_a1_from_f6():
    a1 = haagerup_set(catalog.get("A1").to_order(6))
    f6 = haagerup_set(catalog.get("F6"))
    assert a1 != f6
    assert sum(a1.values()) == sum(f6.values()) == 6 ** 4


def test_haagerup_invariant_under_standard_transforms():
    for base in ("A1", "M6"):
        b = catalog.get(base)
        h = haagerup_set(b)
        for _ in range(50):
            assert haagerup_set(random_standard_transform(b)) == h


# --- defect -------------------------------------------------------------------

def test_defect_values():
    assert defect(catalog.get("A1")) == 0
    assert defect(catalog.get("F6")) == 4


def test_defect_agrees_on_dephased_equivalent_pair():
    d6 = defect(dephase(catalog.get("M6"))[0])
    d61 = defect(dephase(catalog.get("M61"))[0])
    assert d6 == d61


def test_defect_invariant_under_standard_transforms():
    for _ in range(10):
        assert defect(random_standard_transform(catalog.get("A1"))) == 0


def test_defect_rejects_non_hadamard():
    with pytest.raises(ValueError):
        defect(ButsonMatrix(3, [[0] * 6 for _ in range(6)]))


def test_deformation_system_shape():
    m = deformation_system(catalog.get("A1"))
    assert m.shape == (30, 36)


def test_defect_rank_gap_is_clean():
    for name in ("A1", "F6"):
        s = np.linalg.svd(deformation_system(catalog.get(name)), compute_uv=False)
        ratios = s / s[0]
        assert all(r < 1e-8 or r > 1e-4 for r in ratios), name


def test_rank_from_singular_values():
    assert rank_from_singular_values([1.0, 0.5, 1e-12], 1e-8) == 2
    assert rank_from_singular_values([1.0, 1e-9], 1e-8) == 1
    assert rank_from_singular_values([0.0, 0.0], 1e-8) == 0
    with pytest.raises(IndeterminateRankError):
        rank_from_singular_values([1.0, 5e-8], 1e-8)
    with pytest.raises(ValueError):
        rank_from_singular_values([1.0], 0.0)


# --- real symmetric family -----------------------------------------------------

def test_jacobi_on_all_ones():
    eig = eig_real_symmetric(catalog.agaian_symmetric(1.0))
    assert max(abs(x) for x in eig[:-1]) < 1e-12
    assert abs(eig[-1] - 6.0) < 1e-12


def test_jacobi_a2_zero_hand_oracle():
    # A2(0) = I plus a ones border: eigenvalues 1 +- sqrt(5) and 1 (x4).
    eig = eig_real_symmetric(catalog.agaian_symmetric(0.0))
    expected = sorted([1 - math.sqrt(5), 1.0, 1.0, 1.0, 1.0, 1 + math.sqrt(5)])
    assert max(abs(a - b) for a, b in zip(eig, expected)) < 1e-12


def test_jacobi_identities_across_parameters():
    for a in (0.0, 0.5, 1.0, 2.0, 3.0, -1.7):
        m = catalog.agaian_symmetric(a)
        eig = eig_real_symmetric(m)
        assert abs(sum(eig) - np.trace(m)) < 1e-10
        assert abs(sum(x * x for x in eig) - np.sum(m * m)) < 1e-10


def test_jacobi_matches_lapack_on_random_symmetric():
    for _ in range(20):
        raw = np.array([[rng.uniform(-3, 3) for _ in range(6)] for _ in range(6)])
        m = raw + raw.T
        got = eig_real_symmetric(m)
        want = np.sort(np.linalg.eigvalsh(m))
        assert max(abs(g - w) for g, w in zip(got, want)) < 1e-9


def test_jacobi_rejects_asymmetric():
    m = np.eye(6)
    m[0, 1] = 1.0
    with pytest.raises(ValueError):
        eig_real_symmetric(m)


def test_closed_form_special_values():
    rt6 = math.sqrt(6)
    at1 = sorted(closed_form_A2a(1.0))
    expected1 = sorted([(3 + math.sqrt(7)) / rt6, (3 - math.sqrt(7)) / rt6, 0, 0, 0, 0])
    assert max(abs(a - b) for a, b in zip(at1, expected1)) < 1e-14
    at0 = sorted(closed_form_A2a(0.0))
    expected0 = sorted([(1 + math.sqrt(5)) / rt6, (1 - math.sqrt(5)) / rt6]
                       + [1 / rt6] * 4)
    assert max(abs(a - b) for a, b in zip(at0, expected0)) < 1e-14


def test_closed_form_sum_matches_trace_for_random_parameters():
    # The formula's eigenvalue sum equals trace/sqrt(6) = sqrt(6) for every a,
    # even where individual values disagree with the eigensolver.
    for _ in range(50):
        a = rng.uniform(-5, 5)
        assert abs(sum(closed_form_A2a(a)) - math.sqrt(6)) < 1e-9


def test_closed_form_agrees_with_eigensolver_at_zero():
    eig = sorted(x / math.sqrt(6) for x in eig_real_symmetric(catalog.agaian_symmetric(0.0)))
    formula = sorted(closed_form_A2a(0.0))
    assert max(abs(a - b) for a, b in zip(eig, formula)) < 1e-12


def test_closed_form_disagrees_with_eigensolver_at_one():
    # Documented discrepancy: at a = 1 the matrix is the all-ones grid with
    # spectrum {6, 0^5}, while the formula's first pair is (3 +- sqrt(7))/sqrt(6).
    eig = sorted(x / math.sqrt(6) for x in eig_real_symmetric(catalog.agaian_symmetric(1.0)))
    formula = sorted(closed_form_A2a(1.0))
    assert max(abs(a - b) for a, b in zip(eig, formula)) > 1e-2


def test_closed_form_rejects_non_finite():
    with pytest.raises(ValueError):
        closed_form_A2a(float("inf"))
