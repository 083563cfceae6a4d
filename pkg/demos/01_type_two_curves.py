"""Walk through the three type 2 examples.

A curve of degree d has type t = d1 + d2 + 1 - d, where d1 <= d2 are the two
smallest degrees of Jacobian syzygies.  Type 0 is free, type 1 is plus-one
generated, and type 2 splits into 2A (three generators) and 2B (four).
"""

from curveh import analyze, catalog, parse_poly
from curveh.hierarchy import nu_formula_type2, tau_formula_type2


def show(label, report):
    print(f"{label}")
    print(f"  degree {report.d}, exponents {report.exponents}, class {report.class_label}")
    print(f"  tau = {report.tau} (from the resolution: {report.tau_euler}), nu = {report.nu}")
    if report.type_t == 2:
        print(f"  closed forms: tau {tau_formula_type2(report.curve_class, report.exponents)}, "
              f"nu {nu_formula_type2(report.curve_class, report.exponents)}")
    print()


show("Bolza quintic x^5 - y^2 z^3 - x z^4", analyze(parse_poly("x^5-y^2*z^3-x*z^4")))

cl = catalog("cl")
show("conic-line arrangement of degree 7", analyze(cl.curve))
print(f"  the literature quotes tau = {cl.expected['tau_stated']}; every route here gives the value above\n")

base = analyze(catalog("three-conics").curve)
show("three conics (free)", base)
