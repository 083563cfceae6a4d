import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curveh.algebra import parse_poly
from curveh.arrangements import (
    Arrangement,
    CommonComponentError,
    GenericityError,
    add_generic_conic,
    add_generic_line,
    add_line_through_one_double_point,
    build_double_pencil,
    catalog,
    catalog_names,
    count_component_intersections,
    intersection_profile,
    read_arrangement,
    theorem_ll_check,
    write_arrangement,
)
from curveh.hierarchy import analyze

nonzero_lines = st.tuples(*[st.integers(-4, 4)] * 3).filter(any)


@settings(max_examples=60, deadline=None)
@given(st.lists(nonzero_lines, min_size=2, max_size=8))
def test_profile_pair_identity(raw):
    try:
        arr = Arrangement(tuple(raw))
    except ValueError:
        return
    prof = intersection_profile(arr)
    assert sum(comb(r, 2) * c for r, c in prof.t.items()) == comb(len(arr.lines), 2)
    assert all(r <= len(arr.lines) for r in prof.t)


def test_profile_examples():
    assert intersection_profile(catalog("eb7").arrangement).t == {2: 12, 3: 3}
    assert intersection_profile(catalog("generic5").arrangement).t == {2: 10}
    pencil = [(1, s, 0) for s in range(5)]
    assert intersection_profile(pencil).t == {5: 1}
    assert intersection_profile(build_double_pencil(3, 4)).t == {2: 12, 3: 1, 4: 1}


def test_duplicate_lines_rejected():
    with pytest.raises(ValueError):
        intersection_profile([(1, 0, 0), (2, 0, 0)])
    with pytest.raises(ValueError):
        Arrangement(((1, 2, 3), (-1, -2, -3)))


def test_singular_conic_rejected():
    with pytest.raises(ValueError):
        Arrangement((), (((1, 0, 0), (0, 1, 0), (0, 0, 0)),))


def test_line_counts():
    pencil = Arrangement(tuple((1, s, 0) for s in range(4)))
    assert count_component_intersections((1, 1, 1), pencil) == 4
    assert count_component_intersections((0, 0, 1), pencil) == 4
    assert count_component_intersections((1, 7, 0), pencil) == 1


def test_conic_count_on_three_conics():
    three = catalog("three-conics").arrangement
    assert count_component_intersections(((1, 0, 0), (0, 1, 0), (0, 0, 1)), three) == 12


def test_tangent_line_counts_once():
    conic = parse_poly("x^2 + y^2 - z^2")
    assert count_component_intersections((0, 1, -1), conic) == 1
    assert count_component_intersections(parse_poly("y - z"), conic) == 1


def test_common_component_detected():
    arr = catalog("cl1").arrangement
    with pytest.raises(CommonComponentError):
        count_component_intersections((0, 1, -1), arr)
    with pytest.raises(CommonComponentError):
        count_component_intersections(((1, 0, 0), (0, 1, 0), (0, 0, -1)), arr)


def test_node_line_count():
    arr = build_double_pencil(3, 4)
    node = intersection_profile(arr).nodes()[0]
    out = add_line_through_one_double_point(arr, node, random.Random(0))
    cert = out.certificates[-1]
    assert cert.count == cert.expected == 6
    assert count_component_intersections(out.lines[-1], arr) == cert.count


def test_node_line_rejects_pencil_center():
    arr = build_double_pencil(3, 4)
    with pytest.raises(ValueError):
        add_line_through_one_double_point(arr, (0, 0, 1), random.Random(0))


def test_double_pencil_validation():
    with pytest.raises(ValueError):
        build_double_pencil(1, 1)
    with pytest.raises(ValueError):
        build_double_pencil(3, 2)
    with pytest.raises(ValueError):
        build_double_pencil(2, 2, slopes=((1, 1), (0, 1)))


def test_double_pencil_exponents():
    assert analyze(build_double_pencil(1, 3).defining_poly).exponents == (1, 2)
    assert analyze(build_double_pencil(3, 3).defining_poly).exponents == (3, 3, 4)


def test_generic_certificates_reproducible():
    rng = random.Random(11)
    base = catalog("three-conics").arrangement
    out = add_generic_conic(base, rng)
    cert = out.certificates[-1]
    assert cert.count == cert.expected == 2 * base.degree
    assert count_component_intersections(out.conics[-1], base) == cert.count
    line_out = add_generic_line(base, rng)
    assert line_out.certificates[-1].count == base.degree


def test_genericity_limits():
    arr = Arrangement(tuple((1, s, 0) for s in range(3)))
    with pytest.raises(GenericityError):
        add_generic_line(arr, random.Random(0), max_tries=0)
    with pytest.raises(ValueError):
        add_generic_line(arr, random.Random(0), box=0)
    with pytest.raises(ValueError):
        add_generic_conic(arr, random.Random(0), box=0)


def test_file_round_trip_and_errors():
    arr = catalog("cl").arrangement
    assert read_arrangement(write_arrangement(arr)) == arr
    text = "# comment\nline: 1 -1/2 0\n\nconic: 1 0 0 1 0 -1\ncurve: x^3+y^3\n"
    parsed = read_arrangement(text)
    assert parsed.lines == ((1, Fraction(-1, 2), 0),)
    assert parsed.degree == 6
    for bad in ("line: 1 2", "conic: 1 0 0 1 0", "plane: 1 2 3", "line 1 2 3", "line: 0 0 0"):
        with pytest.raises(ValueError):
            read_arrangement(bad)


@settings(max_examples=40, deadline=None)
@given(st.lists(nonzero_lines, min_size=1, max_size=6, unique_by=lambda v: v))
def test_file_round_trip_property(raw):
    try:
        arr = Arrangement(tuple(raw))
    except ValueError:
        return
    assert read_arrangement(write_arrangement(arr)) == arr


def test_catalog_names_and_errors():
    assert {"bolza", "eb7", "ziegler", "yuzvinsky", "cor11-family"} <= set(catalog_names())
    with pytest.raises(KeyError):
        catalog("nonsense")
    assert catalog("cor11-family(6)").arrangement.degree == 6
    assert catalog("cor11-family", 7).arrangement.degree == 7


@pytest.mark.parametrize("name", ["cor11-family(4)", "cor11-family(5)", "conic-plus-tangent", "three-conics", "cl1"])
def test_catalog_free_entries(name):
    entry = catalog(name)
    r = analyze(entry.curve)
    assert r.type_t == 0
    if "exponents" in entry.expected:
        assert r.exponents == entry.expected["exponents"]


def test_tau_of_line_arrangement_from_profile():
    for name in ("eb7", "generic5"):
        arr = catalog(name).arrangement
        assert analyze(arr.defining_poly).tau == intersection_profile(arr).weighted_sum(2)


def test_ziegler_yuzvinsky_same_combinatorics():
    z, y = catalog("ziegler").arrangement, catalog("yuzvinsky").arrangement
    assert intersection_profile(z).t == intersection_profile(y).t


def test_ll_check():
    for name, slack in (("eb7", 0), ("generic5", 0)):
        arr = catalog(name).arrangement
        ll = theorem_ll_check(intersection_profile(arr), analyze(arr.defining_poly))
        assert ll.sum_slack == slack and ll.multiplicity_slack >= 0
    arr = build_double_pencil(3, 3)
    ll = theorem_ll_check(intersection_profile(arr), analyze(arr.defining_poly))
    assert ll.sum_bound is None and ll.multiplicity_bound == 3
