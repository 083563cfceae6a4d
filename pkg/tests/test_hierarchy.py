import itertools

import pytest

from curveh.algebra import parse_poly
from curveh.arrangements import build_double_pencil, catalog
from curveh.hierarchy import (
    CurveClass,
    analyze,
    class_bound_checks,
    classify,
    curve_type,
    nu_formula_type2,
    tau_formula_type2,
)
from curveh.jacobian import InvariantViolation, JacobianEngine, UncertifiedError


def test_bolza_report():
    r = analyze(parse_poly("x^5 - y^2*z^3 - x*z^4"))
    assert (r.exponents, r.type_t, r.curve_class) == ((2, 4, 4), 2, CurveClass.TYPE_2A)
    assert (r.tau, r.nu, r.sigma) == (8, 4, 2)
    assert all(r.checks.values())


@pytest.mark.parametrize(
    "name, t",
    [("ziegler", 3), ("yuzvinsky", 4)],
)
def test_types_of_the_nine_line_pair(name, t):
    r = analyze(catalog(name).curve, prime_fast=True, saturation=False)
    assert r.type_t == t
    assert r.curve_class is CurveClass.HIGHER
    assert r.class_label == f"Higher({t})"


@pytest.mark.parametrize("d", [3, 4, 5])
def test_smooth_fermat_type(d):
    r = analyze(parse_poly(f"x^{d}+y^{d}+z^{d}"))
    assert r.exponents == (d - 1,) * 3
    assert r.type_t == d - 1


def test_classify_examples():
    assert analyze(build_double_pencil(3, 3).defining_poly).curve_class is CurveClass.PLUS_ONE_GENERATED
    assert analyze(catalog("cl").curve).curve_class is CurveClass.TYPE_2B
    assert analyze(catalog("fermat-union").curve).curve_class is CurveClass.FREE


def test_curve_type_requires_certificate():
    res = JacobianEngine(parse_poly("x^5 - y^2*z^3 - x*z^4"), k_max=3).resolution_summary(allow_uncertified=True)
    with pytest.raises(UncertifiedError):
        curve_type(res)
    with pytest.raises(UncertifiedError):
        classify(res)


def test_tau_formula_examples():
    assert tau_formula_type2(CurveClass.TYPE_2A, (4, 4, 4)) == 24
    assert tau_formula_type2(CurveClass.TYPE_2A, (2, 4, 4)) == 8
    assert tau_formula_type2(CurveClass.TYPE_2B, (3, 3, 3, 3)) == 10
    assert tau_formula_type2(CurveClass.TYPE_2B, (4, 4, 5, 5), d=7) == 23


def test_nu_formula_examples():
    assert nu_formula_type2(CurveClass.TYPE_2A, (4, 4, 4)) == 3
    assert nu_formula_type2(CurveClass.TYPE_2B, (3, 3, 3, 3)) == 2
    assert nu_formula_type2(CurveClass.TYPE_2A, (2, 4, 4)) == 4


def test_formulas_reject_wrong_class():
    with pytest.raises(ValueError):
        tau_formula_type2(CurveClass.FREE, (1, 2))
    with pytest.raises(ValueError):
        nu_formula_type2(CurveClass.TYPE_2A, (3, 3, 3, 3))
    with pytest.raises(ValueError):
        tau_formula_type2(CurveClass.TYPE_2B, (4, 4, 5))


def test_nu_lower_bound_enforced():
    with pytest.raises(InvariantViolation):
        nu_formula_type2(CurveClass.TYPE_2A, (3, 3, 1))


def _type2a_grid():
    for d1 in range(1, 9):
        for gap in range(0, 5):
            d2 = d1 + gap
            for d3 in range(d2 + 1, d2 + 5):
                yield d1, d2, d3


@pytest.mark.parametrize("d1, d2, d3", list(_type2a_grid()))
def test_2b_formulas_specialize_to_2a(d1, d2, d3):
    # substituting d4 = d3 + 1 in the four-generator formulas gives the three-generator ones
    assert tau_formula_type2(CurveClass.TYPE_2B, (d1, d2, d3, d3 + 1)) == tau_formula_type2(
        CurveClass.TYPE_2A, (d1, d2, d3)
    )
    try:
        a = nu_formula_type2(CurveClass.TYPE_2A, (d1, d2, d3))
    except InvariantViolation:
        return
    assert nu_formula_type2(CurveClass.TYPE_2B, (d1, d2, d3, d3 + 1)) == a


def test_line_arrangement_type_bounds():
    for n1, n2 in itertools.product(range(1, 4), range(1, 5)):
        if n1 > n2 or n1 + n2 <= 2:
            continue
        r = analyze(build_double_pencil(n1, n2).defining_poly)
        assert all(class_bound_checks(r, "line").values())


def test_pencil_only_gets_general_bounds():
    r = analyze(parse_poly("x^4 - y^4"))
    assert r.exponents == (0, 3)
    assert set(class_bound_checks(r, "line")) == {"mdr_at_most_d_minus_1"}


def test_conic_line_bounds():
    r = analyze(catalog("cl").curve)
    assert all(class_bound_checks(r, "conic-line").values())
    with pytest.raises(ValueError):
        class_bound_checks(r, "surface")
