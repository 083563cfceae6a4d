"""Executable theorem checks and seeded verification campaigns.

Every check records which hypotheses were verified and how, the predicted
and computed values, and a verdict.  A verdict is ``fail`` only when all
hypotheses were verified and the prediction disagrees with the computation.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .algebra import HomogeneousPolynomial, parse_poly, render
from .arrangements import (
    Arrangement,
    CommonComponentError,
    GenericityError,
    add_generic_conic,
    add_generic_line,
    add_line_through_one_double_point,
    build_double_pencil,
    build_near_pencil,
    catalog,
    cor11_arrangement,
    count_component_intersections,
    intersection_profile,
    theorem_ll_check,
)
from .hierarchy import CurveReport, analyze

PASS, FAIL, SKIP = "pass", "fail", "hypothesis-not-met"

__all__ = [
    "TheoremCheck",
    "campaign",
    "check_construction",
    "check_generic_union",
    "check_ll",
    "check_rk11",
    "check_smooth",
    "check_union_bounds",
    "default_suite",
    "summarize",
]


@dataclass
class TheoremCheck:
    theorem: str
    params: dict
    hypotheses: dict[str, dict] = field(default_factory=dict)
    predicted: dict = field(default_factory=dict)
    computed: dict = field(default_factory=dict)
    verdict: str = PASS
    seed: int | None = None
    notes: list[str] = field(default_factory=list)

    def hypothesis(self, name: str, ok: bool, how: str) -> bool:
        self.hypotheses[name] = {"verified": bool(ok), "how": how}
        return ok

    @property
    def hypotheses_met(self) -> bool:
        return all(h["verified"] for h in self.hypotheses.values())

    def decide(self, holds: bool | None = None) -> "TheoremCheck":
        """Set the verdict; ``holds`` defaults to predicted == computed on shared keys."""
        if not self.hypotheses_met:
            self.verdict = SKIP
            return self
        if holds is None:
            holds = all(self.computed.get(k) == v for k, v in self.predicted.items())
        self.verdict = PASS if holds else FAIL
        return self

    def as_dict(self) -> dict:
        return _jsonable({
            "theorem": self.theorem,
            "params": self.params,
            "seed": self.seed,
            "hypotheses": self.hypotheses,
            "predicted": self.predicted,
            "computed": self.computed,
            "verdict": self.verdict,
            "notes": self.notes,
        })

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def _invariants(report: CurveReport) -> dict:
    return {
        "degree": report.d,
        "exponents": list(report.exponents),
        "type": report.type_t,
        "class": report.class_label,
        "tau": report.tau,
        "nu": report.nu,
        "certified": report.resolution.certified,
    }


@lru_cache(maxsize=64)
def _analyze_cached(f: HomogeneousPolynomial) -> CurveReport:
    return analyze(f)


def _analyze(f: HomogeneousPolynomial, check: TheoremCheck) -> CurveReport:
    report = _analyze_cached(f)
    bad = sorted(k for k, ok in report.checks.items() if not ok)
    if bad:
        check.notes.append("consistency checks failed: " + ", ".join(bad))
    return report


# ---------------------------------------------------------------------------
# union bounds
# ---------------------------------------------------------------------------

def _no_common_component(f1: HomogeneousPolynomial, f2: HomogeneousPolynomial) -> tuple[bool, int | None]:
    try:
        return True, count_component_intersections(f1, f2)
    except CommonComponentError:
        return False, None


def check_union_bounds(f1: HomogeneousPolynomial, f2: HomogeneousPolynomial) -> TheoremCheck:
    """max(mdr f1, mdr f2) <= mdr(f1 f2) and t(C) <= min(t1 + deg f2, t2 + deg f1)."""
    check = TheoremCheck("union-bounds", {"f1": render(f1), "f2": render(f2)})
    ok, count = _no_common_component(f1, f2)
    check.hypothesis("no_common_component", ok, f"eliminant nonzero, {count} distinct intersection points"
                     if ok else "eliminant vanishes identically")
    if not ok:
        raise CommonComponentError("the two curves share a component")
    r1, r2, r = (_analyze(g, check) for g in (f1, f2, f1 * f2))
    mdr_bound = max(r1.exponents[0], r2.exponents[0])
    type_bound = min(r1.type_t + f2.degree, r2.type_t + f1.degree)
    check.predicted = {"mdr_at_least": mdr_bound, "type_at_most": type_bound}
    check.computed = {"mdr": r.exponents[0], "type": r.type_t, "exponents": list(r.exponents),
                      "type_f1": r1.type_t, "type_f2": r2.type_t}
    return check.decide(r.exponents[0] >= mdr_bound and r.type_t <= type_bound)


def check_generic_union(f1: HomogeneousPolynomial, f2: HomogeneousPolynomial) -> TheoremCheck:
    """Adding a smooth transversal curve shifts d1, d2 and the type by deg f2."""
    check = TheoremCheck("thm10", {"f1": render(f1), "f2": render(f2)})
    r1, r2 = _analyze(f1, check), _analyze(f2, check)
    e1, e2 = f1.degree, f2.degree
    check.hypothesis("smooth_f2", r2.tau == 0, f"total Tjurina number of f2 is {r2.tau}")
    try:
        count = count_component_intersections(f2, f1)
    except CommonComponentError:
        count = None
    check.hypothesis("transversal", count == e1 * e2, f"{count} distinct intersection points, need {e1 * e2}")
    d1, d2 = r1.exponents[:2]
    check.hypothesis("d2_at_most_deg_minus_2", d2 <= e1 - 2, f"d2 = {d2}, deg f1 - 2 = {e1 - 2}")
    r = _analyze(f1 * f2, check)
    check.predicted = {"d1": d1 + e2, "d2": d2 + e2, "type": r1.type_t + e2}
    check.computed = {"d1": r.exponents[0], "d2": r.exponents[1], "type": r.type_t,
                      "exponents": list(r.exponents)}
    return check.decide()


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=32)
def _double_pencil(n1: int, n2: int) -> Arrangement:
    return build_double_pencil(n1, n2)


def _random_double_pencil(n1: int, n2: int, rng: random.Random) -> Arrangement:
    s1 = rng.sample(range(-9, 10), n1)
    s2 = rng.sample(range(-9, 10), n2)
    return build_double_pencil(n1, n2, slopes=(s1, s2))


def _prop2(check: TheoremCheck, rng: random.Random, n1: int, n2: int) -> None:
    check.hypothesis("ranges", 1 <= n1 <= n2 and n1 + n2 > 2, "1 <= n1 <= n2 and n1 + n2 > 2")
    if not check.hypotheses_met:
        return
    arr = _random_double_pencil(n1, n2, rng)
    prof = intersection_profile(arr)
    check.hypothesis("two_pencils", prof.t.get(2, 0) >= n1 * n2, f"profile {prof.as_dict()}")
    r = _analyze(arr.defining_poly, check)
    if n1 == 1:
        check.predicted = {"exponents": [1, n1 + n2 - 2], "type": 0}
    else:
        check.predicted = {"exponents": sorted([n1, n2, n1 + n2 - 2]), "type": 1}
    check.computed = _invariants(r) | {"profile": prof.as_dict()}


def _thm0(check: TheoremCheck, rng: random.Random, n1: int, n2: int) -> None:
    check.hypothesis("ranges", 3 <= n1 <= n2, "3 <= n1 <= n2")
    if not check.hypotheses_met:
        return
    base = _double_pencil(n1, n2)
    rb = _analyze(base.defining_poly, check)
    m = rb.exponents
    check.hypothesis("base_type_1", rb.type_t == 1 and len(m) == 3 and m[0] >= 3,
                     f"base exponents {list(m)}, type {rb.type_t}")
    if not check.hypotheses_met:
        return
    arr = add_generic_line(base, rng)
    cert = arr.certificates[-1]
    check.hypothesis("generic_line", cert.ok, f"line meets base in {cert.count} points, need {cert.expected}")
    r = _analyze(arr.defining_poly, check)
    check.predicted = {"exponents": sorted([m[0] + 1, m[1] + 1, m[2] + 1, m[0] + m[1] - 1]), "class": "Type2B"}
    check.computed = _invariants(r) | {"added_line": [str(c) for c in arr.lines[-1]]}


def _cor2(check: TheoremCheck, rng: random.Random, n1: int, n2: int) -> None:
    check.hypothesis("ranges", 3 <= n1 <= n2, "3 <= n1 <= n2")
    if not check.hypotheses_met:
        return
    arr = add_generic_line(_random_double_pencil(n1, n2, rng), rng)
    cert = arr.certificates[-1]
    check.hypothesis("generic_line", cert.ok, f"line meets base in {cert.count} points, need {cert.expected}")
    r = _analyze(arr.defining_poly, check)
    check.predicted = {"exponents": [n1 + 1, n2 + 1, n1 + n2 - 1, n1 + n2 - 1], "class": "Type2B"}
    check.computed = _invariants(r) | {"added_line": [str(c) for c in arr.lines[-1]]}


def _thm2(check: TheoremCheck, rng: random.Random, n1: int, n2: int) -> None:
    check.hypothesis("ranges", 3 <= n1 <= n2, "3 <= n1 <= n2")
    if not check.hypotheses_met:
        return
    base = _double_pencil(n1, n2)
    node = rng.choice(intersection_profile(base).nodes())
    arr = add_line_through_one_double_point(base, node, rng)
    cert = arr.certificates[-1]
    check.hypothesis("one_double_point", cert.ok, f"line meets base in {cert.count} points, need {cert.expected}")
    r = _analyze(arr.defining_poly, check)
    check.predicted = {"exponents": sorted([n1 + 1, n2 + 1, n1 + n2 - 2]), "class": "Type2A"}
    check.computed = _invariants(r) | {"node": [str(c) for c in node]}


def _thm4(check: TheoremCheck, rng: random.Random, base: str = "three-conics") -> None:
    start = catalog(base).arrangement
    rb = _analyze(start.defining_poly, check)
    m = rb.exponents
    check.hypothesis("base_free", len(m) == 2 and rb.type_t == 0 and m[0] >= 2,
                     f"base exponents {list(m)}, type {rb.type_t}")
    if not check.hypotheses_met:
        return
    arr = add_generic_conic(start, rng)
    cert = arr.certificates[-1]
    check.hypothesis("generic_conic", cert.ok, f"conic meets base in {cert.count} points, need {cert.expected}")
    r = _analyze(arr.defining_poly, check)
    check.predicted = {"exponents": [m[0] + 2, m[1] + 2, m[0] + m[1] + 1], "class": "Type2A"}
    check.computed = _invariants(r)


def _add_lines(check: TheoremCheck, start: Arrangement, t: int, rng: random.Random) -> Arrangement:
    arr = start
    for _ in range(t):
        arr = add_generic_line(arr, rng)
        cert = arr.certificates[-1]
        check.hypothesis(f"generic_line_{len(arr.certificates)}", cert.ok,
                         f"line meets arrangement in {cert.count} points, need {cert.expected}")
    return arr


def _cor10(check: TheoremCheck, rng: random.Random, d: int, t: int, start: str = "near-pencil") -> None:
    check.hypothesis("ranges", 0 <= t <= d - 3, "0 <= t <= d - 3")
    if not check.hypotheses_met:
        return
    e1 = d - t
    base = build_near_pencil(e1) if start == "near-pencil" else Arrangement(
        (), (), (parse_poly(f"x^{e1} + y^{e1}"),))
    rb = _analyze(base.defining_poly, check)
    check.hypothesis("base_free", rb.type_t == 0, f"base exponents {list(rb.exponents)}")
    if t:
        check.hypothesis("d2_at_most_deg_minus_2", rb.exponents[1] <= e1 - 2,
                         f"base d2 = {rb.exponents[1]}, deg - 2 = {e1 - 2}")
    if not check.hypotheses_met:
        return
    arr = _add_lines(check, base, t, rng)
    r = _analyze(arr.defining_poly, check)
    check.predicted = {"degree": d, "type": t}
    check.computed = _invariants(r)


def _cor11(check: TheoremCheck, rng: random.Random, e1: int, t: int = 0) -> None:
    check.hypothesis("ranges", e1 >= 4 and t >= 0, "e1 >= 4, t >= 0")
    if not check.hypotheses_met:
        return
    base = cor11_arrangement(e1)
    rb = _analyze(base.defining_poly, check)
    if t:
        check.hypothesis("d2_at_most_deg_minus_2", rb.exponents[1] <= e1 - 2,
                         f"base d2 = {rb.exponents[1]}, deg - 2 = {e1 - 2}")
    arr = _add_lines(check, base, t, rng)
    r = _analyze(arr.defining_poly, check) if t else rb
    d2 = max(2, e1 - 3)
    check.predicted = {"degree": e1 + t, "type": t}
    if t == 0:
        check.predicted |= {"exponents": [min(2, e1 - 3), d2]}
    check.computed = _invariants(r) | {"base_d2": rb.exponents[1]}


_CONSTRUCTIONS: dict[str, Callable] = {
    "prop2": _prop2,
    "thm0": _thm0,
    "cor2": _cor2,
    "thm2": _thm2,
    "thm4": _thm4,
    "cor10": _cor10,
    "cor11": _cor11,
}


def check_construction(name: str, params: dict, seed: int = 0, retries: int = 3) -> TheoremCheck:
    """Build a construction, analyze it and compare with its predicted resolution.

    Genericity failures are retried with a fresh seed and never reported as
    a theorem failure.
    """
    try:
        build = _CONSTRUCTIONS[name]
    except KeyError:
        raise KeyError(f"unknown construction {name!r}; known: {', '.join(_CONSTRUCTIONS)}") from None
    last: Exception | None = None
    for attempt in range(retries):
        rng = random.Random(f"{name}|{sorted(params.items())}|{seed}|{attempt}")
        check = TheoremCheck(name, dict(params), seed=seed)
        try:
            build(check, rng, **params)
        except GenericityError as exc:
            last = exc
            continue
        if attempt:
            check.notes.append(f"genericity resampled {attempt} time(s)")
        return check.decide()
    raise GenericityError(f"{name} {params}: genericity not certified after {retries} seeds") from last


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def check_rk11(e1: int) -> TheoremCheck:
    """Global and local Tjurina arithmetic of the free family x(xz+y^2)(x^(e1-3)+y^(e1-3))."""
    check = TheoremCheck("rk11", {"e1": e1})
    check.hypothesis("e1_at_least_4", e1 >= 4, "e1 >= 4")
    if not check.hypotheses_met:
        return check.decide()
    r = _analyze(cor11_arrangement(e1).defining_poly, check)
    d1 = r.exponents[0]
    tau = r.tau
    tau_free = (e1 - 1) ** 2 - d1 * (e1 - 1 - d1)
    mu_p = e1 * e1 - 4 * e1 + 6
    tau_p = tau - (e1 - 3)
    check.predicted = {
        "tau": e1 * e1 - 4 * e1 + 7,
        "tau_p": e1 * e1 - 5 * e1 + 10,
        "epsilon": e1 - 4,
        "free": True,
    }
    check.computed = {
        "tau": tau,
        "tau_free_formula": tau_free,
        "tau_p": tau_p,
        "mu_p": mu_p,
        "epsilon": mu_p - tau_p,
        "free": r.type_t == 0,
        "exponents": list(r.exponents),
    }
    return check.decide(
        all(check.computed[k] == v for k, v in check.predicted.items()) and tau_free == tau
    )


def check_ll(arr: Arrangement, label: str = "") -> TheoremCheck:
    """Enumerative lower bounds for type 2 line arrangements."""
    check = TheoremCheck("ll", {"arrangement": label or f"{len(arr.lines)} lines"})
    prof = intersection_profile(arr)
    r = _analyze(arr.defining_poly, check)
    ll = theorem_ll_check(prof, r)
    check.hypothesis("type_2", r.type_t == 2, f"type {r.type_t}, class {r.class_label}")
    check.predicted = {"multiplicity_at_least": ll.multiplicity_bound, "weighted_sum_at_least": ll.sum_bound}
    check.computed = ll.as_dict() | {"profile": prof.as_dict(), "class": r.class_label, "sharp": ll.sharp}
    if not check.hypotheses_met:
        check.notes.append("weighted-sum bounds skipped; multiplicity slack "
                           f"{ll.multiplicity_slack}")
        return check.decide()
    return check.decide(ll.multiplicity_slack >= 0 and ll.sum_slack >= 0)


def random_smooth_curve(d: int, rng: random.Random, box: int = 3, max_tries: int = 50) -> HomogeneousPolynomial:
    """A random form with small integer coefficients that is smooth (tau = 0)."""
    from .algebra import monomials
    from .jacobian import JacobianEngine, NonReducedError

    for _ in range(max_tries):
        f = HomogeneousPolynomial(d, {m: rng.randint(-box, box) for m in monomials(d)})
        if f.is_zero():
            continue
        try:
            if JacobianEngine(f).tau == 0:
                return f
        except NonReducedError:
            continue
    raise GenericityError(f"no smooth curve of degree {d} found")


def check_smooth(d: int, seed: int = 0) -> TheoremCheck:
    """Smooth curves have exponents (d-1, d-1, d-1) and type d - 1."""
    check = TheoremCheck("smooth", {"d": d}, seed=seed)
    f = random_smooth_curve(d, random.Random(f"smooth|{d}|{seed}"))
    r = _analyze(f, check)
    check.hypothesis("smooth", r.tau == 0, f"total Tjurina number {r.tau}")
    check.predicted = {"exponents": [d - 1] * 3, "type": d - 1}
    check.computed = _invariants(r) | {"curve": render(f)}
    return check.decide()


# ---------------------------------------------------------------------------
# campaigns
# ---------------------------------------------------------------------------

def _run_job(job: tuple[str, dict, int]) -> TheoremCheck:
    name, params, seed = job
    return check_construction(name, params, seed)


def campaign(
    jobs: Iterable[tuple[str, dict]],
    trials: int = 20,
    seed: int = 0,
    workers: int = 1,
) -> list[TheoremCheck]:
    """Run ``trials`` seeded instances of each (construction, params) job.

    Trial ``i`` uses seed ``seed + i``; results come back in job order then
    seed order regardless of the worker count.
    """
    queue = [(name, dict(params), seed + i) for name, params in jobs for i in range(trials)]
    if workers <= 1:
        return [_run_job(j) for j in queue]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_job, queue))


CAMPAIGNS: dict[str, list[tuple[str, dict]]] = {
    "prop2": [("prop2", {"n1": a, "n2": b}) for a, b in ((1, 3), (2, 3), (3, 3), (3, 5), (4, 4))],
    "thm0": [("thm0", {"n1": a, "n2": b}) for a in range(3, 6) for b in range(a, 6)],
    "thm2": [("thm2", {"n1": a, "n2": b}) for a, b in ((3, 3), (3, 4), (4, 5))],
    "thm4": [("thm4", {"base": "three-conics"})],
    "cor10": [("cor10", {"d": 6, "t": t}) for t in range(4)],
    "cor11": [("cor11", {"e1": e, "t": 0}) for e in range(4, 8)],
}
CAMPAIGNS["cor2"] = [("cor2", p) for _, p in CAMPAIGNS["thm0"]]  # same grid, random pencils


def default_suite(theorem: str, trials: int = 20, seed: int = 0, workers: int = 1) -> list[TheoremCheck]:
    """The standard checks for ``theorem`` (or ``all``)."""
    fixed: dict[str, Callable[[], list[TheoremCheck]]] = {
        "rk11": lambda: [check_rk11(e) for e in range(4, 8)],
        "ll": lambda: [check_ll(catalog(n).arrangement, n) for n in ("eb7", "generic5")],
        "thm10": lambda: [
            check_generic_union(build_near_pencil(5).defining_poly, parse_poly("x+2*y+3*z")),
            check_generic_union(parse_poly("x^2+y^2+z^2"), parse_poly("x")),
        ],
        "union-bounds": lambda: [
            check_union_bounds(parse_poly("x^3+y^3+z^3"), parse_poly("x^3+y^3")),
            check_union_bounds(parse_poly("x^2+y^2-z^2"), parse_poly("y-z")),
        ],
        "smooth": lambda: [check_smooth(d, seed) for d in (3, 4, 5)],
    }
    if theorem == "all":
        out: list[TheoremCheck] = []
        for name in CAMPAIGNS:
            out += campaign(CAMPAIGNS[name], trials, seed, workers)
        for fn in fixed.values():
            out += fn()
        return out
    if theorem in CAMPAIGNS:
        return campaign(CAMPAIGNS[theorem], trials, seed, workers)
    if theorem in fixed:
        return fixed[theorem]()
    raise KeyError(f"unknown theorem id {theorem!r}; known: {', '.join(sorted(set(CAMPAIGNS) | set(fixed)) + ['all'])}")


def theorem_ids() -> list[str]:
    return sorted(set(CAMPAIGNS) | {"rk11", "ll", "thm10", "union-bounds", "smooth"}) + ["all"]


def summarize(checks: Sequence[TheoremCheck]) -> dict[str, int]:
    out = {PASS: 0, FAIL: 0, SKIP: 0}
    for c in checks:
        out[c.verdict] += 1
    return out
