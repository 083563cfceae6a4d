import json

import pytest

from curveh.algebra import parse_poly
from curveh.arrangements import CommonComponentError, build_double_pencil, build_near_pencil, catalog
from curveh.verify import (
    FAIL,
    PASS,
    SKIP,
    TheoremCheck,
    campaign,
    check_construction,
    check_generic_union,
    check_ll,
    check_rk11,
    check_smooth,
    check_union_bounds,
    default_suite,
    summarize,
    theorem_ids,
)


def test_verdict_logic():
    c = TheoremCheck("demo", {})
    c.predicted, c.computed = {"a": 1}, {"a": 1, "b": 2}
    assert c.decide().verdict == PASS
    c.computed["a"] = 3
    assert c.decide().verdict == FAIL
    c.hypothesis("h", False, "not checked")
    assert c.decide(True).verdict == SKIP


def test_check_json_is_sorted_and_stable():
    c = check_rk11(5)
    text = c.to_json()
    assert text == check_rk11(5).to_json()
    assert list(json.loads(text)) == sorted(json.loads(text))


@pytest.mark.parametrize("e1", [4, 5, 6, 7])
def test_rk11_arithmetic(e1):
    c = check_rk11(e1)
    assert c.verdict == PASS
    assert c.computed["tau"] == e1 * e1 - 4 * e1 + 7
    assert c.computed["epsilon"] == e1 - 4


def test_rk11_out_of_range():
    assert check_rk11(3).verdict == SKIP


@pytest.mark.parametrize("name,params", [
    ("prop2", {"n1": 1, "n2": 3}),
    ("prop2", {"n1": 3, "n2": 4}),
    ("thm0", {"n1": 3, "n2": 3}),
    ("cor2", {"n1": 3, "n2": 4}),
    ("thm2", {"n1": 3, "n2": 3}),
    ("thm4", {}),
    ("cor10", {"d": 6, "t": 2}),
    ("cor11", {"e1": 5, "t": 0}),
])
def test_constructions_pass(name, params):
    c = check_construction(name, params, seed=1)
    assert c.verdict == PASS, c.to_json()


def test_construction_ranges_skip():
    assert check_construction("prop2", {"n1": 3, "n2": 2}).verdict == SKIP
    assert check_construction("cor10", {"d": 5, "t": 3}).verdict == SKIP


def test_pencil_start_fails_hypothesis():
    # x^e + y^e is free but its second exponent is too large to start the ladder
    c = check_construction("cor10", {"d": 6, "t": 1, "start": "pencil"})
    assert c.verdict == SKIP
    assert not c.hypotheses["d2_at_most_deg_minus_2"]["verified"]


def test_unknown_construction():
    with pytest.raises(KeyError):
        check_construction("nope", {})


def test_campaign_order_and_determinism():
    jobs = [("prop2", {"n1": 2, "n2": 3})]
    a = campaign(jobs, trials=3, seed=5)
    b = campaign(jobs, trials=3, seed=5)
    assert [c.seed for c in a] == [5, 6, 7]
    assert [c.to_json() for c in a] == [c.to_json() for c in b]
    assert summarize(a) == {PASS: 3, FAIL: 0, SKIP: 0}


def test_generic_union():
    good = check_generic_union(build_near_pencil(5).defining_poly, parse_poly("x+2*y+3*z"))
    assert good.verdict == PASS and good.computed["exponents"] == [2, 4, 4]
    # conic plus a secant line: d2 is too large, the shift by deg f2 does not happen
    ex = check_generic_union(parse_poly("x^2+y^2+z^2"), parse_poly("x"))
    assert ex.verdict == SKIP and ex.computed["exponents"] == [1, 2, 2] and ex.computed["type"] == 1
    tangent = check_generic_union(parse_poly("x^2+y^2-z^2"), parse_poly("y-z"))
    assert tangent.verdict == SKIP and not tangent.hypotheses["transversal"]["verified"]


def test_union_bounds():
    c = check_union_bounds(parse_poly("x^3+y^3+z^3"), parse_poly("x^3+y^3"))
    assert c.verdict == PASS
    with pytest.raises(CommonComponentError):
        check_union_bounds(parse_poly("x*y"), parse_poly("x*z"))


def test_ll_checks():
    for name in ("eb7", "generic5"):
        c = check_ll(catalog(name).arrangement, name)
        assert c.verdict == PASS and c.computed["sharp"]
    free = check_ll(build_double_pencil(1, 4), "near-pencil")
    assert free.verdict == SKIP


def test_smooth_type():
    c = check_smooth(4, seed=2)
    assert c.verdict == PASS and c.computed["type"] == 3


def test_suite_ids():
    ids = theorem_ids()
    assert ids[-1] == "all" and "thm0" in ids
    with pytest.raises(KeyError):
        default_suite("bogus")
    assert all(c.verdict == PASS for c in default_suite("union-bounds"))
