"""Type of a curve, the free / plus-one generated / 2A / 2B classification,
and the closed-form Tjurina and freeness-defect formulas for type 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import HomogeneousPolynomial
from .jacobian import (
    InvariantViolation,
    JacobianEngine,
    JacobianModuleProfile,
    MilnorProfile,
    ResolutionSummary,
    UncertifiedError,
    euler_characteristic_tau,
    modular_engines,
    nu_from_tjurina,
)


class CurveClass(str, enum.Enum):
    FREE = "Free"
    PLUS_ONE_GENERATED = "PlusOneGenerated"
    TYPE_2A = "Type2A"
    TYPE_2B = "Type2B"
    HIGHER = "Higher"


@dataclass(frozen=True)
class CurveReport:
    d: int
    resolution: ResolutionSummary
    milnor: MilnorProfile
    jacobian_module: JacobianModuleProfile | None
    tau: int
    nu: int | None
    sigma: int | None
    type_t: int
    curve_class: CurveClass
    tau_euler: int
    checks: dict[str, bool] = field(default_factory=dict)
    field_name: str = "QQ"

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.resolution.exponents

    @property
    def m(self) -> int:
        return self.resolution.m

    @property
    def class_label(self) -> str:
        if self.curve_class is CurveClass.HIGHER:
            return f"Higher({self.type_t})"
        return self.curve_class.value


def curve_type(resolution: ResolutionSummary, d: int | None = None) -> int:
    """t = d1 + d2 + 1 - d for a certified resolution."""
    if not resolution.certified:
        raise UncertifiedError("type requires a certified resolution")
    d = resolution.d if d is None else d
    d1, d2 = resolution.exponents[:2]
    t = d1 + d2 + 1 - d
    if t < 0:
        raise InvariantViolation(f"negative type {t}")
    return t


def classify(resolution: ResolutionSummary, d: int | None = None) -> CurveClass:
    t = curve_type(resolution, d)
    m = resolution.m
    if (t == 0) != (m == 2):
        raise InvariantViolation(f"type {t} with {m} generators")
    if sum(resolution.shifts) != t:
        raise InvariantViolation("sum of shifts differs from the type")
    if t == 0:
        return CurveClass.FREE
    if t == 1:
        return CurveClass.PLUS_ONE_GENERATED
    if t == 2:
        if m == 3 and resolution.shifts == (2,):
            return CurveClass.TYPE_2A
        if m == 4 and resolution.shifts == (1, 1):
            return CurveClass.TYPE_2B
        raise InvariantViolation(f"type 2 curve with m={m}, shifts={resolution.shifts}")
    return CurveClass.HIGHER


def _type2(cls: CurveClass, exponents: Sequence[int]) -> tuple[int, ...]:
    if cls is CurveClass.TYPE_2A and len(exponents) == 3:
        return tuple(exponents)
    if cls is CurveClass.TYPE_2B and len(exponents) == 4:
        return tuple(exponents)
    raise ValueError(f"closed forms need a type 2A (3 exponents) or 2B (4 exponents) curve, got {cls} {exponents}")


def tau_formula_type2(cls: CurveClass, exponents: Sequence[int], d: int | None = None) -> int:
    """Total Tjurina number of a type 2 curve from its exponents."""
    e = _type2(cls, exponents)
    d1, d2 = e[0], e[1]
    if d is not None and d1 + d2 != d + 1:
        raise ValueError("exponents do not describe a type 2 curve of this degree")
    base = d1 * d1 + d1 * d2 + d2 * d2 - 2 * d1 - 2 * d2
    if cls is CurveClass.TYPE_2A:
        return base - 2 * e[2]
    return base - e[2] - e[3] + 1


def nu_formula_type2(cls: CurveClass, exponents: Sequence[int]) -> int:
    """Freeness defect of a type 2 curve; the case depends on d2 - d1."""
    e = _type2(cls, exponents)
    d1, d2, d3 = e[0], e[1], e[2]
    gap = d2 - d1
    if cls is CurveClass.TYPE_2A:
        if gap > 2:
            nu = 2 * (d3 - d2) + 4
        elif gap == 2:
            nu = 2 * (d3 - d1)
        elif gap == 1:
            nu = 2 * (d3 - d1) + 2
        else:
            nu = 2 * (d3 - d2) + 3
        floor = 3 if gap == 0 else 4
    else:
        d4 = e[3]
        if gap > 2:
            nu = d3 + d4 - 2 * d2 + 3
        elif gap == 2:
            nu = d3 + d4 - 2 * d1 - 1
        elif gap == 1:
            nu = d3 + d4 - 2 * d1 + 1
        else:
            nu = d3 + d4 - 2 * d2 + 2
        floor = 2 if gap == 0 else 3
    if nu < floor:
        raise InvariantViolation(f"freeness defect {nu} below its lower bound {floor}")
    return nu


def _unimodal(seq: Sequence[int]) -> bool:
    half = (len(seq) - 1) // 2
    up = all(seq[i] <= seq[i + 1] for i in range(half))
    down = all(seq[i] >= seq[i + 1] for i in range(half, len(seq) - 1))
    return up and down


def consistency_checks(report: CurveReport) -> dict[str, bool]:
    """Executable identities that every certified report must satisfy."""
    res = report.resolution
    d = report.d
    checks: dict[str, bool] = {
        "hilbert_series_certificate": res.certified,
        "relation_shifts_positive": all(e >= 1 for e in res.shifts),
        "exponent_sum_identity": res.exponents[0] + res.exponents[1] == d - 1 + sum(res.shifts),
        "euler_characteristic_tau": report.tau_euler == report.tau,
        "mdr_at_most_d_minus_1": res.exponents[0] <= d - 1,
    }
    if res.m == 3:
        checks["three_syzygy_bound"] = res.exponents[2] <= d - 1
    jm = report.jacobian_module
    if jm is not None:
        n = jm.n
        T = len(n) - 1
        checks["jacobian_module_symmetry"] = all(n[k] == n[T - k] for k in range(T + 1))
        checks["jacobian_module_unimodal"] = _unimodal(n)
        checks["jacobian_module_vanishes_above_T"] = not any(jm.above_window)
        checks["free_iff_no_jacobian_module"] = (report.curve_class is CurveClass.FREE) == (jm.nu == 0)
        if d >= 3 and res.exponents[0] >= 1:
            checks["nu_matches_tjurina_formula"] = nu_from_tjurina(d, res.exponents[0], report.tau) == jm.nu
        if res.m == 3 and jm.sigma is not None:
            checks["initial_degree_formula"] = jm.sigma == 3 * (d - 1) - sum(res.exponents)
    if report.curve_class in (CurveClass.TYPE_2A, CurveClass.TYPE_2B):
        checks["type2_tau_formula"] = tau_formula_type2(report.curve_class, res.exponents, d) == report.tau
        if jm is not None:
            checks["type2_nu_formula"] = nu_formula_type2(report.curve_class, res.exponents) == jm.nu
    return checks


def class_bound_checks(report: CurveReport, kind: str = "curve") -> dict[str, bool]:
    """Upper bounds on the exponents by curve kind: 'curve', 'line' or 'conic-line'.

    The d_m bounds assume d1 >= 1; pencils of lines (d1 = 0) have d_m = d - 1
    and are only checked against the general bounds.
    """
    if kind not in ("curve", "line", "conic-line"):
        raise ValueError(f"unknown curve kind {kind!r}")
    e, d = report.exponents, report.d
    out = {"mdr_at_most_d_minus_1": e[0] <= d - 1}
    if report.m == 3:
        out["three_syzygy_d3_at_most_d_minus_1"] = e[2] <= d - 1
    if e[0] == 0:
        return out
    if kind == "line" and d >= 2:
        out["line_arrangement_dm_at_most_d_minus_2"] = e[-1] <= d - 2
        if d >= 3:
            out["line_arrangement_type_at_most_d_minus_3"] = 0 <= report.type_t <= d - 3
    elif kind == "conic-line":
        out["conic_line_dm_at_most_d_minus_1"] = e[-1] <= d - 1
    return out


def analyze(
    f: HomogeneousPolynomial,
    k_max: int | None = None,
    prime_fast: bool = False,
    saturation: bool = True,
    allow_uncertified: bool = False,
) -> CurveReport:
    """Full pipeline: Milnor algebra, syzygies, resolution, Jacobian module, class.

    With ``prime_fast`` every rank is computed modulo two primes and the
    run aborts if they disagree on any reported invariant.
    """
    if prime_fast:
        engine = modular_engines(f, k_max, saturation=saturation)
    else:
        engine = JacobianEngine(f, k_max=k_max)
    milnor = engine.milnor_profile()
    res = engine.resolution_summary(allow_uncertified=allow_uncertified)
    jm = engine.jacobian_module_profile() if saturation else None
    if res.certified:
        t = curve_type(res)
        cls = classify(res)
    else:
        t = res.exponents[0] + res.exponents[1] + 1 - engine.d if len(res.exponents) >= 2 else -1
        cls = CurveClass.HIGHER
    report = CurveReport(
        d=engine.d,
        resolution=res,
        milnor=milnor,
        jacobian_module=jm,
        tau=milnor.tau,
        nu=jm.nu if jm else None,
        sigma=jm.sigma if jm else None,
        type_t=t,
        curve_class=cls,
        tau_euler=euler_characteristic_tau(engine.d, res.exponents, res.relation_degrees),
        field_name=repr(engine.field),
    )
    report.checks.update(consistency_checks(report))
    return report
