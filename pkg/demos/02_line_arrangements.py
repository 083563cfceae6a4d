"""Intersection lattices do not determine the type.

The Ziegler and Yuzvinsky arrangements of 9 lines have the same numbers of
double and triple points, yet different syzygy degrees.
"""

from curveh import analyze, catalog, intersection_profile
from curveh.arrangements import theorem_ll_check

for name in ("ziegler", "yuzvinsky"):
    arr = catalog(name).arrangement
    prof = intersection_profile(arr)
    r = analyze(arr.defining_poly)
    print(f"{name:10s} profile {prof.as_dict()}  exponents {r.exponents}  type {r.type_t}")

print()
arr = catalog("eb7").arrangement
prof = intersection_profile(arr)
r = analyze(arr.defining_poly)
ll = theorem_ll_check(prof, r)
print("seven lines with three triple points")
print(f"  exponents {r.exponents}, class {r.class_label}, tau {r.tau}, nu {r.nu}")
print(f"  weighted count {ll.weighted_sum} >= {ll.sum_bound} (slack {ll.sum_slack})")
print(f"  max multiplicity {ll.max_multiplicity} >= {ll.multiplicity_bound}")
