from math import comb

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from curveh.algebra import GF, HomogeneousPolynomial, parse_poly, product
from curveh.jacobian import (
    JacobianEngine,
    ModularDisagreement,
    NonReducedError,
    UncertifiedError,
    euler_characteristic_tau,
    hilbert_certificate,
    modular_engines,
    nu_from_tjurina,
)

BOLZA = "x^5 - y^2*z^3 - x*z^4"

small = st.integers(-3, 3)


@st.composite
def reduced_curves(draw):
    """Products of random lines and at most one conic; non-reduced draws are discarded later."""
    n_lines = draw(st.integers(1, 5))
    factors = []
    for _ in range(n_lines):
        v = [draw(small) for _ in range(3)]
        assume(any(v))
        factors.append(HomogeneousPolynomial.linear(v))
    if draw(st.booleans()):
        sym = [[draw(small) for _ in range(3)] for _ in range(3)]
        sym = [[sym[min(i, j)][max(i, j)] for j in range(3)] for i in range(3)]
        q = HomogeneousPolynomial.quadratic_form(sym)
        assume(not q.is_zero())
        factors.append(q)
    return product(factors)


def _engine_or_skip(f):
    e = JacobianEngine(f)
    try:
        e.milnor_profile()
    except NonReducedError:
        assume(False)
    return e


def test_bolza_profile():
    e = JacobianEngine(parse_poly(BOLZA))
    mp = e.milnor_profile()
    assert mp.tau == 8
    assert mp.hf[:4] == (1, 3, 6, 10)
    res = e.resolution_summary()
    assert res.exponents == (2, 4, 4)
    assert res.relation_degrees == (10,)
    assert res.shifts == (2,)
    assert res.certified
    jm = e.jacobian_module_profile()
    assert jm.n == (0, 0, 1, 3, 4, 4, 3, 1, 0, 0)
    assert (jm.nu, jm.sigma, jm.T) == (4, 2, 9)


def test_smooth_conic():
    e = JacobianEngine(parse_poly("x^2+y^2+z^2"))
    assert e.milnor_profile().hf[:3] == (1, 0, 0)
    assert e.tau == 0
    assert e.resolution_summary().exponents == (1, 1, 1)


def test_hf_starts_with_full_dimensions():
    f = parse_poly("x*y*(x-y)*(x-2*y)*z")
    hf = JacobianEngine(f).milnor_profile().hf
    assert all(hf[k] == comb(k + 2, 2) for k in range(f.degree - 1))


def test_syzygy_spaces():
    quartic = JacobianEngine(parse_poly("x^4+y^4+z^4"))
    assert quartic.syzygy_space(2).dim == 0
    cor11 = JacobianEngine(parse_poly("x*(x*z+y^2)*(x^2+y^2)"))
    r1 = [parse_poly("x^2"), parse_poly("x*y"), parse_poly("-5*y^2-4*x*z")]
    vec = sum((g.coefficient_vector() for g in r1), [])
    assert cor11.syzygy_space(2).contains(vec)
    near_pencil = JacobianEngine(parse_poly("z*x*y*(x-y)"))
    assert near_pencil.syzygy_space(1).dim > 0


def test_generators_satisfy_syzygy_equation():
    f = parse_poly(BOLZA)
    res = JacobianEngine(f).resolution_summary()
    assert all(g.satisfies(f) for g in res.generators)
    assert [g.degree for g in res.generators] == list(res.exponents)


def test_free_curve_has_no_relations():
    res = JacobianEngine(parse_poly("x*y*z*(x+y)")).resolution_summary()
    assert res.m == 2 and res.relation_degrees == ()
    assert sum(res.exponents) == 3


def test_non_reduced_detected():
    with pytest.raises(NonReducedError):
        JacobianEngine(parse_poly("x^2*y")).milnor_profile()


def test_uncertified_scan(monkeypatch):
    monkeypatch.setenv("CURVEH_KMAX", "3")
    e = JacobianEngine(parse_poly(BOLZA))
    assert e.k_max == 3
    with pytest.raises(UncertifiedError):
        e.resolution_summary()
    assert not e.resolution_summary(allow_uncertified=True).certified


def test_modular_path_agrees_with_rationals():
    f = parse_poly("x*y*z*(x+y-2*z)*(x-3*y+z)*(-5*x+y+z)*(x+y+z)")
    fast = modular_engines(f)
    exact = JacobianEngine(f)
    assert fast.resolution_summary().exponents == exact.resolution_summary().exponents == (4, 4, 4)
    assert fast.jacobian_module_profile().n == exact.jacobian_module_profile().n


def test_modular_disagreement_detected():
    # 3 divides the discriminant-like data: x^3+y^3+z^3 is singular in characteristic 3
    with pytest.raises((ModularDisagreement, NonReducedError)):
        modular_engines(parse_poly("x^3+y^3+z^3"), primes=(3, 2**31 - 1))


def test_tjurina_formula_examples():
    assert nu_from_tjurina(7, 4, 24) == 3
    assert nu_from_tjurina(5, 2, 8) == 4
    with pytest.raises(ValueError):
        nu_from_tjurina(2, 1, 0)


def test_certificate_detects_missing_generator():
    e = JacobianEngine(parse_poly(BOLZA))
    hf = e.milnor_profile().hf
    assert hilbert_certificate(hf, 5, (2, 4, 4), (10,)) == []
    assert hilbert_certificate(hf, 5, (2, 4), ()) != []


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(reduced_curves())
def test_resolution_invariants_on_random_arrangements(f):
    e = _engine_or_skip(f)
    res = e.resolution_summary()
    d = f.degree
    assert res.certified
    assert all(eps >= 1 for eps in res.shifts)
    for c, dj, eps in zip(res.relation_degrees, res.exponents[2:], res.shifts):
        assert c == d + dj - 1 + eps
    assert res.exponents[0] + res.exponents[1] == d - 1 + sum(res.shifts)
    assert euler_characteristic_tau(d, res.exponents, res.relation_degrees) == e.tau
    jm = e.jacobian_module_profile()
    T = len(jm.n) - 1
    assert all(jm.n[k] == jm.n[T - k] for k in range(T + 1))
    half = T // 2
    assert all(jm.n[k] <= jm.n[k + 1] for k in range(half))
    assert not any(jm.above_window)
    if d >= 3:
        assert nu_from_tjurina(d, res.exponents[0], e.tau) == jm.nu
    assert (jm.nu == 0) == (res.m == 2)
