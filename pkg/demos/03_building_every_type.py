"""Climb the type ladder by adding generic lines to a free arrangement.

Starting from a near-pencil (free, d2 small enough), each certified generic
line raises the type by one.  The seed makes every step reproducible.
"""

import random

from curveh import analyze
from curveh.arrangements import add_generic_line, build_double_pencil, build_near_pencil

rng = random.Random(2024)
arr = build_near_pencil(6)
print(f"start: {len(arr.lines)} lines, exponents {analyze(arr.defining_poly).exponents}")
for _ in range(3):
    arr = add_generic_line(arr, rng)
    cert = arr.certificates[-1]
    r = analyze(arr.defining_poly)
    line = " ".join(str(c) for c in cert.component)
    print(f"+ line ({line}): meets the rest in {cert.count}/{cert.expected} points, "
          f"exponents {r.exponents}, type {r.type_t}")

print()
print("double pencils: one pencil of n1 lines and one of n2 lines")
for n1, n2 in ((1, 4), (2, 3), (3, 3), (3, 4)):
    r = analyze(build_double_pencil(n1, n2).defining_poly)
    print(f"  ({n1}, {n2}) -> exponents {r.exponents}, {r.class_label}")
