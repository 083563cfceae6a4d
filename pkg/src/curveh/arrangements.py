"""Line and conic-line arrangements.

Exact intersection combinatorics for lines, distinct-point counts between a
component and a curve (used as genericity certificates), the standard
constructions (double pencils, generic lines and conics, lines through one
double point) and a catalog of named curves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, comb
from typing import Iterable, Mapping, Sequence

import flint

from .algebra import QQ, HomogeneousPolynomial, parse_poly, product, render
from .jacobian import InvariantViolation

__all__ = [
    "Arrangement",
    "CatalogEntry",
    "CommonComponentError",
    "GenericityCertificate",
    "GenericityError",
    "IntersectionProfile",
    "LLCheck",
    "add_generic_conic",
    "add_generic_line",
    "add_line_through_one_double_point",
    "build_double_pencil",
    "build_near_pencil",
    "catalog",
    "catalog_names",
    "count_component_intersections",
    "intersection_profile",
    "read_arrangement",
    "theorem_ll_check",
    "write_arrangement",
]

Point = tuple[Fraction, Fraction, Fraction]
Line = tuple[Fraction, Fraction, Fraction]
Conic = tuple[tuple[Fraction, Fraction, Fraction], ...]


class CommonComponentError(ValueError):
    """The two curves share a component, so the intersection is not finite."""


class GenericityError(RuntimeError):
    """No sample in the box met the required intersection count."""


# ---------------------------------------------------------------------------
# projective helpers
# ---------------------------------------------------------------------------

def normalize(v: Iterable) -> tuple[Fraction, ...]:
    """Scale so that the first nonzero coordinate is 1."""
    v = tuple(Fraction(e) for e in v)
    lead = next((e for e in v if e), None)
    if lead is None:
        raise ValueError("zero vector is not a projective point")
    return tuple(e / lead for e in v)


def cross(u: Sequence, v: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    return (
        Fraction(u[1] * v[2] - u[2] * v[1]),
        Fraction(u[2] * v[0] - u[0] * v[2]),
        Fraction(u[0] * v[1] - u[1] * v[0]),
    )


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def _det3(m: Sequence[Sequence]) -> Fraction:
    return dot(m[0], cross(m[1], m[2]))


def _conic(sym: Sequence[Sequence]) -> Conic:
    rows = tuple(tuple(Fraction(e) for e in row) for row in sym)
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("a conic is a 3x3 symmetric matrix")
    if any(rows[i][j] != rows[j][i] for i in range(3) for j in range(3)):
        raise ValueError("conic matrix is not symmetric")
    if _det3(rows) == 0:
        raise ValueError("conic matrix is singular, the conic is not smooth")
    flat = normalize(rows[i][j] for i in range(3) for j in range(i, 3))
    a11, a12, a13, a22, a23, a33 = flat
    return ((a11, a12, a13), (a12, a22, a23), (a13, a23, a33))


def conic_from_upper(values: Sequence) -> Conic:
    a11, a12, a13, a22, a23, a33 = values
    return _conic(((a11, a12, a13), (a12, a22, a23), (a13, a23, a33)))


def conic_from_form(q: HomogeneousPolynomial) -> Conic:
    if q.degree != 2:
        raise ValueError("not a quadratic form")
    t = q.terms
    half = Fraction(1, 2)
    return conic_from_upper((
        t.get((2, 0, 0), 0), half * t.get((1, 1, 0), 0), half * t.get((1, 0, 1), 0),
        t.get((0, 2, 0), 0), half * t.get((0, 1, 1), 0), t.get((0, 0, 2), 0),
    ))


# ---------------------------------------------------------------------------
# arrangements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenericityCertificate:
    """Exact witness that an added component meets the rest in ``count`` points."""

    kind: str
    component: tuple
    count: int
    expected: int
    attempts: int

    @property
    def ok(self) -> bool:
        return self.count == self.expected

    def as_dict(self) -> dict:
        comp = [str(c) for c in self.component] if self.kind == "line" else [
            str(self.component[i][j]) for i in range(3) for j in range(i, 3)
        ]
        return {"kind": self.kind, "component": comp, "count": self.count,
                "expected": self.expected, "attempts": self.attempts}


@dataclass(frozen=True)
class Arrangement:
    """A reduced curve given as lines, smooth conics and optional other factors.

    ``others`` holds extra reduced factors that are neither lines nor conics
    over the rationals, e.g. ``x^k + y^k``.
    """

    lines: tuple[Line, ...] = ()
    conics: tuple[Conic, ...] = ()
    others: tuple[HomogeneousPolynomial, ...] = ()
    certificates: tuple[GenericityCertificate, ...] = field(default=(), compare=False)

    def __post_init__(self):
        lines = tuple(normalize(l) for l in self.lines)
        if len(set(lines)) != len(lines):
            raise ValueError("duplicate line in arrangement")
        conics = tuple(_conic(c) for c in self.conics)
        if len(set(conics)) != len(conics):
            raise ValueError("duplicate conic in arrangement")
        if any(o.degree < 1 for o in self.others):
            raise ValueError("constant factor in arrangement")
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "conics", conics)
        object.__setattr__(self, "others", tuple(self.others))

    @property
    def degree(self) -> int:
        return len(self.lines) + 2 * len(self.conics) + sum(o.degree for o in self.others)

    @property
    def is_line_arrangement(self) -> bool:
        return not self.conics and not self.others

    def components(self) -> list[HomogeneousPolynomial]:
        return (
            [HomogeneousPolynomial.linear(l) for l in self.lines]
            + [HomogeneousPolynomial.quadratic_form(c) for c in self.conics]
            + list(self.others)
        )

    @cached_property
    def defining_poly(self) -> HomogeneousPolynomial:
        if not self.degree:
            raise ValueError("empty arrangement")
        return product(self.components(), QQ)

    def with_line(self, line: Sequence, cert: GenericityCertificate | None = None) -> "Arrangement":
        certs = self.certificates + ((cert,) if cert else ())
        return Arrangement(self.lines + (normalize(line),), self.conics, self.others, certs)

    def with_conic(self, conic: Sequence[Sequence], cert: GenericityCertificate | None = None) -> "Arrangement":
        certs = self.certificates + ((cert,) if cert else ())
        return Arrangement(self.lines, self.conics + (_conic(conic),), self.others, certs)


# ---------------------------------------------------------------------------
# line combinatorics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntersectionProfile:
    t: dict[int, int]
    points: dict[Point, frozenset[int]]
    n_lines: int

    @property
    def max_multiplicity(self) -> int:
        return max(self.t, default=1)

    def nodes(self) -> list[Point]:
        return sorted(p for p, ls in self.points.items() if len(ls) == 2)

    def weighted_sum(self, power: int = 1) -> int:
        """sum over r of (r-1)^power * t_r."""
        return sum((r - 1) ** power * c for r, c in self.t.items())

    def as_dict(self) -> dict[str, int]:
        return {f"t{r}": self.t[r] for r in sorted(self.t)}


def intersection_profile(lines: Sequence[Sequence] | Arrangement) -> IntersectionProfile:
    """Exact multiple points of a line arrangement with their multiplicities."""
    if isinstance(lines, Arrangement):
        if not lines.is_line_arrangement:
            raise ValueError("profiles are defined for line arrangements only")
        lines = lines.lines
    lines = [normalize(l) for l in lines]
    n = len(lines)
    if n < 2:
        raise ValueError("need at least two lines")
    if len(set(lines)) != n:
        raise ValueError("duplicate lines")
    points: dict[Point, set[int]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            p = normalize(cross(lines[i], lines[j]))
            points.setdefault(p, set()).update((i, j))
    t: dict[int, int] = {}
    for ls in points.values():
        t[len(ls)] = t.get(len(ls), 0) + 1
    if sum(comb(r, 2) * c for r, c in t.items()) != comb(n, 2):
        raise InvariantViolation("pair count of the profile differs from C(n,2)")
    return IntersectionProfile(dict(sorted(t.items())), {p: frozenset(s) for p, s in points.items()}, n)


# ---------------------------------------------------------------------------
# distinct intersection counts
# ---------------------------------------------------------------------------

_CTX = flint.fmpq_mpoly_ctx.get(("x", "y", "z"), "lex")


def _q(v) -> flint.fmpq:
    v = Fraction(v)
    return flint.fmpq(v.numerator, v.denominator)


def to_flint(f: HomogeneousPolynomial):
    return _CTX.from_dict({m: _q(c) for m, c in f.terms.items()})


def _distinct_roots_binary(coeffs: Mapping[int, flint.fmpq], degree: int) -> int:
    """Distinct projective roots of a binary form sum c_i s^i t^(degree-i)."""
    p = flint.fmpq_poly([coeffs.get(i, 0) for i in range(degree + 1)])
    if p == 0:
        raise CommonComponentError("eliminant vanishes identically")
    squarefree = p.degree() - p.gcd(p.derivative()).degree() if p.degree() > 0 else 0
    return squarefree + (1 if p.degree() < degree else 0)


def _line_points(line: Line) -> tuple[Point, Point]:
    """Two points spanning the line."""
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    pts = [cross(line, e) for e in basis]
    pts = [p for p in pts if any(p)]
    first = pts[0]
    second = next(p for p in pts[1:] if any(cross(first, p)))
    return first, second


def _count_on_line(line: Line, g: HomogeneousPolynomial) -> int:
    P, Q = _line_points(line)
    s = _CTX.gens()[0]
    t = _CTX.gens()[1]
    restricted = to_flint(g).compose(
        *(_q(P[i]) * s + _q(Q[i]) * t for i in range(3))
    )
    coeffs: dict[int, flint.fmpq] = {}
    for (a, b, _), c in restricted.to_dict().items():
        coeffs[a] = c
    return _distinct_roots_binary(coeffs, g.degree)


def _random_change(rng: random.Random, box: int = 7) -> list[list[int]]:
    while True:
        M = [[rng.randint(-box, box) for _ in range(3)] for _ in range(3)]
        if _det3(M) != 0:
            return M


def _count_by_resultant(c: HomogeneousPolynomial, g: HomogeneousPolynomial, tries: int) -> int:
    """Distinct points of V(c) ∩ V(g) via Res_z after random coordinate changes.

    Each try projects the intersection from a random center; the number of
    distinct roots of the eliminant is a lower bound that is exact once the
    projection separates the points.  The Bezout bound stops the search.
    """
    rng = random.Random(0x5EED)
    bound = c.degree * g.degree
    best = 0
    fc, fg = to_flint(c), to_flint(g)
    x, y, z = _CTX.gens()
    done = 0
    while done < tries:
        M = _random_change(rng)
        center = [M[0][2], M[1][2], M[2][2]]
        if c.evaluate(center) == 0 or g.evaluate(center) == 0:
            continue
        done += 1
        forms = [M[i][0] * x + M[i][1] * y + M[i][2] * z for i in range(3)]
        res = fc.compose(*forms).resultant(fg.compose(*forms), "z")
        coeffs = {a: coef for (a, b, _), coef in res.to_dict().items()}
        best = max(best, _distinct_roots_binary(coeffs, bound))
        if best == bound:
            break
    return best


def _as_poly(component) -> HomogeneousPolynomial:
    if isinstance(component, HomogeneousPolynomial):
        return component
    comp = tuple(component)
    if len(comp) == 3 and not isinstance(comp[0], (tuple, list)):
        return HomogeneousPolynomial.linear(comp)
    return HomogeneousPolynomial.quadratic_form(comp)


def count_component_intersections(component, target, tries: int = 4) -> int:
    """Number of distinct points where ``component`` meets ``target``.

    ``component`` is a line triple, a symmetric conic matrix or a form;
    ``target`` an :class:`Arrangement` or a form.  Raises
    :class:`CommonComponentError` when the two share a component.
    """
    g = target.defining_poly if isinstance(target, Arrangement) else target
    c = _as_poly(component)
    if c.degree == 1:
        line = tuple(c.terms.get(m, Fraction(0)) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        return _count_on_line(line, g)
    if g.degree == 1:
        line = tuple(g.terms.get(m, Fraction(0)) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        return _count_on_line(line, c)
    return _count_by_resultant(c, g, tries)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def _pencil_basis(center: Sequence, other: Sequence) -> tuple[Line, Line]:
    """(u, v): u the line joining the centers, v another line through ``center``."""
    u = cross(center, other)
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = cross(center, e)
        if any(v) and any(cross(u, v)):
            return u, v
    raise ValueError("degenerate center")


def build_double_pencil(
    n1: int,
    n2: int,
    centers: tuple[Sequence, Sequence] = ((0, 0, 1), (0, 1, 0)),
    slopes: tuple[Sequence, Sequence] | None = None,
) -> Arrangement:
    """n1 lines through a1 and n2 lines through a2, none of them the line a1a2.

    The line with slope s through a_i is v_i + s u where u joins the centers.
    """
    if not (1 <= n1 <= n2 and n1 + n2 > 2):
        raise ValueError("need 1 <= n1 <= n2 and n1 + n2 > 2")
    a1, a2 = (normalize(c) for c in centers)
    if a1 == a2:
        raise ValueError("pencil centers coincide")
    if slopes is None:
        slopes = (range(n1), range(n2))
    s1, s2 = (tuple(Fraction(s) for s in group) for group in slopes)
    if len(s1) != n1 or len(s2) != n2 or len(set(s1)) != n1 or len(set(s2)) != n2:
        raise ValueError("slopes must be pairwise distinct and match n1, n2")
    u1, v1 = _pencil_basis(a1, a2)
    u2, v2 = _pencil_basis(a2, a1)
    lines = [tuple(v + s * u for u, v in zip(u1, v1)) for s in s1]
    lines += [tuple(v + s * u for u, v in zip(u2, v2)) for s in s2]
    arr = Arrangement(tuple(lines))
    prof = intersection_profile(arr)
    expected_nodes = n1 * n2 + (comb(n1, 2) if n1 == 2 else 0) + (comb(n2, 2) if n2 == 2 else 0)
    if prof.t.get(2, 0) != expected_nodes:
        raise InvariantViolation(f"double pencil profile {prof.t} is not the expected one")
    return arr


def build_near_pencil(n: int) -> Arrangement:
    """n - 1 concurrent lines plus one line off the center (free, exponents (1, n-2))."""
    if n < 3:
        raise ValueError("near pencil needs at least 3 lines")
    return build_double_pencil(1, n - 1)


def _sample_line(rng: random.Random, box: int) -> Line:
    if box < 1:
        raise ValueError("sampling box must be at least 1")
    while True:
        v = [rng.randint(-box, box) for _ in range(3)]
        if any(v):
            return normalize(v)


def add_generic_line(
    arr: Arrangement, rng: random.Random, box: int = 20, max_tries: int = 100
) -> Arrangement:
    """Add a line meeting ``arr`` in deg(arr) distinct points."""
    if not arr.degree:
        raise ValueError("empty arrangement")
    g = arr.defining_poly
    for attempt in range(1, max_tries + 1):
        line = _sample_line(rng, box)
        if line in arr.lines:
            continue
        try:
            count = count_component_intersections(line, g)
        except CommonComponentError:
            continue
        if count == arr.degree:
            return arr.with_line(line, GenericityCertificate("line", line, count, arr.degree, attempt))
    raise GenericityError(f"no generic line found in {max_tries} samples")


def add_generic_conic(
    arr: Arrangement, rng: random.Random, box: int = 10, max_tries: int = 100
) -> Arrangement:
    """Add a smooth conic meeting ``arr`` in 2 deg(arr) distinct points."""
    if not arr.degree:
        raise ValueError("empty arrangement")
    if box < 1:
        raise ValueError("sampling box must be at least 1")
    g = arr.defining_poly
    expected = 2 * arr.degree
    for attempt in range(1, max_tries + 1):
        a = [rng.randint(-box, box) for _ in range(6)]
        try:
            conic = conic_from_upper(a)
        except ValueError:
            continue
        if conic in arr.conics:
            continue
        try:
            count = count_component_intersections(conic, g)
        except CommonComponentError:
            continue
        if count == expected:
            return arr.with_conic(conic, GenericityCertificate("conic", conic, count, expected, attempt))
    raise GenericityError(f"no generic conic found in {max_tries} samples")


def add_line_through_one_double_point(
    arr: Arrangement, node: Sequence, rng: random.Random, box: int = 20, max_tries: int = 100
) -> Arrangement:
    """Add a line through the double point ``node`` meeting ``arr`` in deg - 1 points."""
    prof = intersection_profile(arr)
    node = normalize(node)
    through = prof.points.get(node)
    if through is None:
        raise ValueError("node is not an intersection point of the arrangement")
    if len(through) != 2:
        raise ValueError(f"point is a {len(through)}-fold point, not a double point")
    expected = arr.degree - 1
    g = arr.defining_poly
    for attempt in range(1, max_tries + 1):
        q = [rng.randint(-box, box) for _ in range(3)]
        line = cross(node, q)
        if not any(line):
            continue
        line = normalize(line)
        if line in arr.lines:
            continue
        count = count_component_intersections(line, g)
        if count == expected:
            return arr.with_line(line, GenericityCertificate("line", line, count, expected, attempt))
    raise GenericityError(f"no line through {node} found in {max_tries} samples")


# ---------------------------------------------------------------------------
# enumerative bounds for type 2 line arrangements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LLCheck:
    d: int
    max_multiplicity: int
    multiplicity_bound: int
    multiplicity_slack: int
    weighted_sum: int | None
    sum_bound: int | None
    sum_slack: int | None

    @property
    def sharp(self) -> bool:
        return self.sum_slack == 0

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "max_multiplicity": self.max_multiplicity,
            "multiplicity_bound": self.multiplicity_bound,
            "multiplicity_slack": self.multiplicity_slack,
            "weighted_sum": self.weighted_sum,
            "sum_bound": self.sum_bound,
            "sum_slack": self.sum_slack,
        }


def theorem_ll_check(profile: IntersectionProfile, report) -> LLCheck:
    """Multiplicity and weighted-count lower bounds for type 2 line arrangements.

    The weighted bounds apply only to type 2; for other reports they are
    skipped and only the multiplicity bound is evaluated.
    """
    from .hierarchy import CurveClass

    d = profile.n_lines
    mbound = ceil(4 * d / (d + 5))
    mslack = profile.max_multiplicity - mbound
    wsum = bound = slack = None
    cls = report.curve_class
    if cls in (CurveClass.TYPE_2A, CurveClass.TYPE_2B):
        d1, d2 = report.exponents[:2]
        wsum = profile.weighted_sum(1)
        bound = d1 * d2 + (2 if cls is CurveClass.TYPE_2A else 1)
        slack = wsum - bound
        if slack < 0 or mslack < 0:
            raise InvariantViolation(f"type 2 enumerative bound violated: slacks {mslack}, {slack}")
    return LLCheck(d, profile.max_multiplicity, mbound, mslack, wsum, bound, slack)


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def write_arrangement(arr: Arrangement) -> str:
    out = [f"line: {' '.join(_fmt(c) for c in l)}" for l in arr.lines]
    out += [
        f"conic: {' '.join(_fmt(c[i][j]) for i in range(3) for j in range(i, 3))}"
        for c in arr.conics
    ]
    out += [f"curve: {render(o)}" for o in arr.others]
    return "\n".join(out) + "\n"


def read_arrangement(text: str) -> Arrangement:
    """Parse ``line: a b c`` / ``conic: a11 a12 a13 a22 a23 a33`` / ``curve: <poly>``.

    Blank lines and ``#`` comments are ignored.
    """
    lines, conics, others = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        row = raw.split("#", 1)[0].strip()
        if not row:
            continue
        kind, sep, rest = row.partition(":")
        kind = kind.strip().lower()
        if not sep:
            raise ValueError(f"line {lineno}: expected '<kind>: ...'")
        try:
            if kind == "line":
                vals = [Fraction(v) for v in rest.split()]
                if len(vals) != 3:
                    raise ValueError("a line needs 3 coefficients")
                lines.append(normalize(vals))
            elif kind == "conic":
                vals = [Fraction(v) for v in rest.split()]
                if len(vals) != 6:
                    raise ValueError("a conic needs 6 coefficients")
                conics.append(conic_from_upper(vals))
            elif kind == "curve":
                others.append(parse_poly(rest))
            else:
                raise ValueError(f"unknown component kind {kind!r}")
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return Arrangement(tuple(lines), tuple(conics), tuple(others))


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    curve: HomogeneousPolynomial
    arrangement: Arrangement | None
    expected: dict = field(default_factory=dict)


def _lines(*triples) -> Arrangement:
    return Arrangement(tuple(triples))


_ZIEGLER = ((1, 0, 0), (0, 1, 0), (1, -1, -1), (1, -1, 1), (2, 1, -2), (1, 3, -3), (3, 2, 3), (1, 5, 5), (7, -4, -1))
_YUZVINSKY = ((1, 0, 0), (0, 1, 0), (4, -5, -5), (1, -1, 1), (16, 13, -20), (1, 3, -3), (3, 2, 3), (1, 5, 5), (7, -4, -1))
_EB7 = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -2), (1, -3, 1), (-5, 1, 1), (1, 1, 1))
_GENERIC5 = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3))
_CL1_CONIC = ((1, 0, 0), (0, 1, 0), (0, 0, -1))
_THREE_CONICS = (
    ((-3, Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), 0, Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2), 0)),
    ((0, Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), -3, Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2), 0)),
    ((0, Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), 0, Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2), -3)),
)
_UNIT_CONIC = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _entry(name: str, arr: Arrangement, **expected) -> CatalogEntry:
    return CatalogEntry(name, arr.defining_poly, arr, expected)


def _bolza() -> CatalogEntry:
    return CatalogEntry("bolza", parse_poly("x^5 - y^2*z^3 - x*z^4"), None,
                        {"exponents": (2, 4, 4), "class": "Type2A", "type": 2})


def _cl1() -> CatalogEntry:
    arr = Arrangement(((0, 1, -1), (1, 0, -1), (1, 0, 1)), (_CL1_CONIC,))
    return _entry("cl1", arr, free=True, tau=12)


def _cl() -> CatalogEntry:
    arr = _cl1().arrangement.with_conic(((0, 0, Fraction(-1, 2)), (0, 1, 0), (Fraction(-1, 2), 0, 0)))
    return _entry("cl", arr, exponents=(4, 4, 5, 5), **{"class": "Type2B"}, tau_stated=24, tau_formula=23)


def _three_conics() -> CatalogEntry:
    return _entry("three-conics", Arrangement((), _THREE_CONICS), exponents=(2, 3), free=True)


def _three_conics_plus() -> CatalogEntry:
    arr = Arrangement((), _THREE_CONICS + (_UNIT_CONIC,))
    return _entry("three-conics-plus", arr, exponents=(4, 5, 6), **{"class": "Type2A"}, added_conic_points=12)


def _fermat_union(d: int = 3) -> CatalogEntry:
    c1 = parse_poly(f"x^{d} + y^{d} + z^{d}")
    c2 = parse_poly(f"x^{d} + y^{d}")
    return CatalogEntry(f"fermat-union({d})", c1 * c2, Arrangement((), (), (c1, c2)), {"free": True, "type": 0})


def cor11_arrangement(e1: int) -> Arrangement:
    if e1 < 4:
        raise ValueError("the family starts at e1 = 4")
    conic = ((0, 0, Fraction(1, 2)), (0, 1, 0), (Fraction(1, 2), 0, 0))
    if e1 == 4:
        return Arrangement(((1, 0, 0), (1, 1, 0)), (conic,))
    return Arrangement(((1, 0, 0),), (conic,), (parse_poly(f"x^{e1 - 3} + y^{e1 - 3}"),))


def _cor11_family(e1: int = 5) -> CatalogEntry:
    arr = cor11_arrangement(e1)
    exps = tuple(sorted((2, e1 - 3)))
    return _entry(f"cor11-family({e1})", arr, exponents=exps, free=True)


def _conic_plus_tangent() -> CatalogEntry:
    return _entry("conic-plus-tangent", Arrangement(((0, 1, -1),), (_CL1_CONIC,)), exponents=(1, 1), free=True)


def _ex10() -> CatalogEntry:
    return _entry("ex10", Arrangement(((1, 0, 0),), (_UNIT_CONIC,)), exponents=(1, 2, 2), type=1)


def _smooth(d: int = 3) -> CatalogEntry:
    f = parse_poly(f"x^{d} + y^{d} + z^{d}")
    return CatalogEntry(f"smooth({d})", f, None, {"exponents": (d - 1,) * 3, "type": d - 1})


_CATALOG = {
    "bolza": _bolza,
    "cl1": _cl1,
    "cl": _cl,
    "three-conics": _three_conics,
    "three-conics-plus": _three_conics_plus,
    "eb7": lambda: _entry("eb7", _lines(*_EB7), exponents=(4, 4, 4), nu=3, tau=24,
                          profile={2: 12, 3: 3}, **{"class": "Type2A"}),
    "generic5": lambda: _entry("generic5", _lines(*_GENERIC5), exponents=(3, 3, 3, 3),
                               profile={2: 10}, **{"class": "Type2B"}),
    "ziegler": lambda: _entry("ziegler", _lines(*_ZIEGLER), exponents=(5, 6, 6, 6), type=3),
    "yuzvinsky": lambda: _entry("yuzvinsky", _lines(*_YUZVINSKY), exponents=(6, 6, 6, 6, 6, 6), type=4),
    "fermat-union": _fermat_union,
    "cor11-family": _cor11_family,
    "conic-plus-tangent": _conic_plus_tangent,
    "ex10": _ex10,
    "smooth": _smooth,
}


def catalog_names() -> list[str]:
    return list(_CATALOG)


def catalog(name: str, *params: int) -> CatalogEntry:
    """Named curve; parametrized families accept ``name(k)`` or extra ints."""
    base, _, arg = name.partition("(")
    if arg:
        params = (int(arg.rstrip(")")),) + params
    try:
        factory = _CATALOG[base.strip()]
    except KeyError:
        raise KeyError(f"unknown catalog name {name!r}; known: {', '.join(_CATALOG)}") from None
    return factory(*params)
