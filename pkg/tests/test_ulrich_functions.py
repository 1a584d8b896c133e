"""Tests for the Euler-polynomial builders and the identity verifiers.

The builders use a compressed orbit-sum construction; the reference
implementations here compose the defining binomial sums directly through
binom_poly, term by term, so the two paths are fully independent.
"""

from fractions import Fraction
from itertools import combinations

import pytest

from ulrichci.exact_arith import binom_int, binom_poly
from ulrichci.polyring import MultiPoly, NotDivisible
from ulrichci.symfunc import expand_direct, monomial_sym
from ulrichci.ulrich_functions import (
    SUPPORTED_PAIRS,
    build_a,
    build_c,
    build_chi_prime,
    build_delta,
    build_f,
    build_g4,
    build_h,
    build_k,
    build_q,
    closed_form_derived_coefficients,
    closed_form_f_coefficients,
    q_value,
    verify_cg_induction,
    verify_cg_scan,
    verify_gl1,
    verify_gl2,
    verify_gl4,
    verify_tf0,
    verify_tf1,
)


# -- reference constructions (independent oracle path) -------------------------


def reference_a(s, m_arg):
    """Inclusion-exclusion Euler sum built directly from binom_poly.

    m_arg may be an integer twist or a polynomial twist in s variables.
    """
    m_poly = MultiPoly.const(s, m_arg) if isinstance(m_arg, int) else m_arg
    total = binom_poly(m_poly + (s + 4), s + 4)
    for k in range(1, s + 1):
        sign = (-1) ** (k + s)
        for J in combinations(range(s), k):
            lin = MultiPoly.zero(s)
            for i in J:
                lin = lin + MultiPoly.variable(s, i)
            total = total + binom_poly(lin - m_poly - 1, s + 4).scale(sign)
    return total


def reference_f(s, r, m):
    xs = MultiPoly.gens(s)
    sigma = sum(xs, MultiPoly.zero(s))
    prod = MultiPoly.const(s, 1)
    for xi in xs:
        prod = prod * xi
    shift = (sigma - s).scale(Fraction(r, 2))
    b_part = prod * binom_poly(shift - m - 1, 4) * (-r)
    return reference_a(s, m) + reference_a(s, MultiPoly.const(s, m) - shift).scale(
        r - 1
    ) + b_part


@pytest.mark.parametrize("s", [1, 2, 3, 4])
@pytest.mark.parametrize("r,m", SUPPORTED_PAIRS)
def test_builder_matches_reference(s, r, m):
    assert build_f(s, r, m) == reference_f(s, r, m)


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("m", [0, 1, 4])
def test_a_builder_matches_reference(s, m):
    assert build_a(s, m) == reference_a(s, m)


# -- the chi(O_X) polynomial ------------------------------------------------------


def test_cubic_fourfold_structure_sheaf():
    assert build_a(1, 0).eval((3,)) == 1


def test_hypersurface_euler_characteristic_two_routes():
    # chi(O_X(m)) of a degree-d hypersurface equals binom(m+5,5) - binom(m-d+5,5).
    m, d = 7, 4
    direct = binom_int(m + 5, 5) - binom_int(m - d + 5, 5)
    assert build_a(1, m).eval((d,)) == direct


def test_a_is_symmetric():
    assert build_a(3, 1).is_symmetric()


# -- the f family --------------------------------------------------------------------


def test_f_divisible_by_all_variables():
    build_f(5, 2, 0).divide_all_vars()  # must not raise


def test_f_restriction_to_fewer_degrees():
    assert build_f(6, 3, 1).substitute_ones(4) == build_f(4, 3, 1)


def test_f_quadric_euler_characteristic():
    from ulrichci.ci_invariants import CIConfig, chi_OZ

    value = build_f(4, 2, 0).eval((2, 1, 1, 1))
    assert value == chi_OZ(CIConfig(4, (2,), 2), 0) == 1


@pytest.mark.parametrize("s", range(1, 8))
@pytest.mark.parametrize("r,m", SUPPORTED_PAIRS)
def test_f_symmetry_divisibility_restriction(s, r, m):
    assert all(res.ok for res in verify_tf0(s, r, m))
    assert all(res.ok for res in verify_tf1(s, r, m))


# -- derived builders -------------------------------------------------------------------


def test_delta_expansion_coefficients():
    s = 5
    quotient = build_delta(s).divide_all_vars() * 8
    expansion = expand_direct(quotient)
    expected = [Fraction(0)] * 12
    expected[8] = Fraction(7)
    expected[9] = Fraction(12)
    expected[10] = Fraction(-12 * s)
    expected[11] = Fraction(6 * s * s - s)
    assert list(expansion.coeffs) == expected


def test_delta_matches_degree_formula():
    from ulrichci.ci_invariants import CIConfig, deg_Z

    cfg = CIConfig(4, (2, 2, 3), 3)
    assert build_delta(3).eval((2, 2, 3)) == deg_Z(cfg)
    assert build_delta(4).eval((2, 2, 3, 1)) == deg_Z(cfg)


def test_g4_equals_f_at_all_ones():
    # q_{s,8} vanishes at the all-ones tuple, so the divisibility identity
    # forces equality there.
    ones = (1, 1, 1, 1)
    assert build_g4(4).eval(ones) == build_f(4, 2, 0).eval(ones)


def test_h_is_difference_of_twists_plus_degree():
    s = 4
    assert build_h(s) == -2 * build_f(s, 3, 1) + 2 * build_f(s, 3, 0) + build_delta(s)


# -- obstruction polynomial -----------------------------------------------------------------


def test_q_vanishes_at_all_ones():
    for s in range(3, 9):
        for b in (8, 9):
            assert build_q(s, b).eval((1,) * s) == 0


def test_q_hand_values():
    assert build_q(4, 8).eval((2, 1, 1, 1)) == 90
    assert build_q(2, 9).eval((2, 2)) == 300


def test_q_value_matches_polynomial():
    for s in (2, 3, 4, 5):
        for b in (8, 9):
            poly = build_q(s, b)
            for tup in [(2,) * s, (3, 1) + (1,) * (s - 2), (4, 3) + (2,) * (s - 2)]:
                assert q_value(tup, b) == poly.eval(tup)


# -- closed-form verification ------------------------------------------------------------------


@pytest.mark.parametrize("s", [4, 5, 6, 7, 8])
def test_gl1_closed_forms(s):
    results = verify_gl1(s)
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]


def test_gl1_published_constants():
    # The s = 4 specializations of the coefficient tables.
    _, c20 = closed_form_f_coefficients(2, 0, 4)
    _, c30 = closed_form_f_coefficients(3, 0, 4)
    _, c31 = closed_form_f_coefficients(3, 1, 4)
    assert c20[11] == 27861
    assert c30[11] == 681768
    assert c31[11] == 865128
    # Spot values at other s.
    assert closed_form_f_coefficients(3, 0, 5)[1][5] == -36000
    assert closed_form_f_coefficients(3, 1, 6)[1][8] == 10 * (
        843 * 36 + 2108 * 6 + 994
    )


@pytest.mark.parametrize("s", list(range(1, 9)))
def test_gl2_expansions(s):
    results = verify_gl2(s)
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]


def test_gl2_h_cubic_coefficient_is_constant():
    for s in (4, 6, 8):
        _, coeffs = closed_form_derived_coefficients("h", s)
        assert coeffs[5] == 19


@pytest.mark.parametrize("s", [4, 5, 6, 7, 8])
def test_gl4_identities(s):
    results = verify_gl4(s)
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]


def test_gl4_evaluated_at_padded_quadric():
    diff = build_g4(4) - build_f(4, 2, 0)
    assert diff.eval((2, 1, 1, 1)) == Fraction(2 * 90, 4320) == Fraction(1, 24)


# -- positivity scan and induction ----------------------------------------------------------------


def test_scan_small_grid():
    report = verify_cg_scan(4, 4, workers=1)
    assert report.ok
    for cell in report.cells:
        assert cell.min_q is not None and cell.min_q > 0
    # all-ones excluded from every cell
    sizes = {(cell.b, cell.s): cell.tuples_checked for cell in report.cells}
    from math import comb

    for (b, s), count in sizes.items():
        assert count == comb(4 + s - 1, s) - 1


def test_scan_workers_do_not_change_report():
    seq = verify_cg_scan(5, 5, workers=1)
    par = verify_cg_scan(5, 5, workers=2)
    assert seq.to_dict() == par.to_dict()


def test_scan_per_tuple_listing():
    report = verify_cg_scan(2, 3, b_values=(8,), per_tuple=True)
    cell = report.cells[0]
    assert cell.per_tuple is not None
    assert len(cell.per_tuple) == cell.tuples_checked
    assert all(q > 0 for _, q in cell.per_tuple)


def test_scan_s2_positive_up_to_six():
    report = verify_cg_scan(2, 6)
    assert report.ok


def test_scan_rejects_bad_ranges():
    with pytest.raises(ValueError):
        verify_cg_scan(1, 6)


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("b", [8, 9])
def test_cg_induction(s, b):
    results = verify_cg_induction(s, b)
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]


def test_all_ones_step_value():
    # r_b(2) with all-ones data: b*16 - 40 - b + 10 = 90 at b = 8.
    assert 8 * 2**4 - 10 * 2**2 - 8 + 10 == 90


def test_rank3_positive_witness():
    assert q_value((2, 1, 1, 1, 1), 9) > 0
