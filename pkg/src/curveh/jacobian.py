"""Jacobian syzygies, Milnor algebra and Jacobian module of a plane curve.

Everything is computed degree by degree with exact linear algebra.  For a
curve ``f`` of degree ``d`` the basic object is the map

    S_k^3 -> S_{k+d-1},   (a, b, c) -> a f_x + b f_y + c f_z,

whose kernel is ``D0(f)_k`` and whose image is ``(J_f)_{k+d-1}``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Sequence

from .algebra import (
    DEFAULT_PRIME,
    QQ,
    Field,
    HomogeneousPolynomial,
    dim_s,
    monomial_index,
    monomials,
    partial_derivatives,
)
from .linalg import SubspaceBasis, _rref, _to_python, build, kernel_free_basis, scalar, zero

SECOND_PRIME = 2**31 - 19

__all__ = [
    "InvariantViolation",
    "JacobianEngine",
    "JacobianModuleProfile",
    "MilnorProfile",
    "ModularDisagreement",
    "NonReducedError",
    "ResolutionSummary",
    "SyzygyTriple",
    "UncertifiedError",
    "binom2",
    "euler_characteristic_tau",
    "hilbert_certificate",
    "nu_from_tjurina",
]


class NonReducedError(ValueError):
    """The Milnor algebra does not stabilize: f has a repeated factor."""


class UncertifiedError(RuntimeError):
    """Generator scan reached its bound without a Hilbert-series certificate."""


class InvariantViolation(AssertionError):
    pass


class ModularDisagreement(RuntimeError):
    pass


def binom2(n: int) -> int:
    """C(n, 2), vanishing for n < 2."""
    return n * (n - 1) // 2 if n >= 2 else 0


def default_kmax(d: int) -> int:
    env = os.environ.get("CURVEH_KMAX")
    if env:
        return int(env)
    return max(2 * d - 2, 2)


def hf_window_top(d: int) -> int:
    return max(3 * (d - 2) + 3, 3)


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SyzygyTriple:
    degree: int
    components: tuple[HomogeneousPolynomial, HomogeneousPolynomial, HomogeneousPolynomial]

    @classmethod
    def for_curve(cls, f: HomogeneousPolynomial, a, b, c) -> "SyzygyTriple":
        fx, fy, fz = partial_derivatives(f)
        total = a * fx + b * fy + c * fz
        if not total.is_zero():
            raise InvariantViolation("triple is not a Jacobian syzygy")
        degree = next((g.degree for g in (a, b, c) if not g.is_zero()), a.degree)
        return cls(degree, (a, b, c))

    def satisfies(self, f: HomogeneousPolynomial) -> bool:
        fx, fy, fz = partial_derivatives(f.with_field(self.components[0].field))
        a, b, c = self.components
        return (a * fx + b * fy + c * fz).is_zero()

    def as_strings(self) -> list[str]:
        return [str(g) for g in self.components]


@dataclass(frozen=True)
class MilnorProfile:
    d: int
    hf: tuple[int, ...]
    tau: int
    stabilization_degree: int


@dataclass(frozen=True)
class ResolutionSummary:
    d: int
    exponents: tuple[int, ...]
    generators: tuple[SyzygyTriple, ...]
    relation_degrees: tuple[int, ...]
    shifts: tuple[int, ...]
    certified: bool
    certificate_failures: tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return len(self.exponents)

    @property
    def mdr(self) -> int:
        return self.exponents[0]


@dataclass(frozen=True)
class JacobianModuleProfile:
    d: int
    n: tuple[int, ...]
    nu: int
    sigma: int | None  # None when N(f) = 0
    above_window: tuple[int, ...] = ()

    @property
    def T(self) -> int:
        return 3 * (self.d - 2)


# ---------------------------------------------------------------------------
# index helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _shift(deg: int, mon: tuple[int, int, int]) -> tuple[int, ...]:
    """Index map S_deg -> S_{deg+|mon|} for multiplication by ``mon``."""
    target = monomial_index(deg + sum(mon))
    return tuple(target[(a + mon[0], b + mon[1], c + mon[2])] for a, b, c in monomials(deg))


VARS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _sparse(row: Sequence) -> list[tuple[int, object]]:
    return [(i, e) for i, e in enumerate(row) if e != 0]


def _mul_blocks(sparse_vec, block_degs: Sequence[int], mon, out_degs: Sequence[int], field: Field):
    """Multiply a block vector (one block per component) by a monomial."""
    in_off = _offsets(block_degs)
    out_off = _offsets(out_degs)
    total = out_off[-1]
    vec = [zero(field)] * total
    for i, e in sparse_vec:
        blk = _block_of(in_off, i)
        local = i - in_off[blk]
        vec[out_off[blk] + _shift(block_degs[blk], mon)[local]] = e
    return vec


def _offsets(block_degs: Sequence[int]) -> list[int]:
    off = [0]
    for g in block_degs:
        off.append(off[-1] + dim_s(g))
    return off


def _identity(n: int, field: Field) -> list[list]:
    z = zero(field)
    return [[z + 1 if i == j else z for i in range(n)] for j in range(n)]


def _block_of(offsets: list[int], i: int) -> int:
    lo = 0
    while offsets[lo + 1] <= i:
        lo += 1
    return lo


# ---------------------------------------------------------------------------
# formulas
# ---------------------------------------------------------------------------

def hilbert_certificate(
    hf: Sequence[int], d: int, exponents: Sequence[int], relation_degrees: Sequence[int]
) -> list[int]:
    """Degrees k where hf(k) disagrees with the Betti-number alternating sum."""
    bad = []
    for k, value in enumerate(hf):
        predicted = (
            binom2(k + 2)
            - 3 * binom2(k - d + 3)
            + sum(binom2(k - d - dj + 3) for dj in exponents)
            - sum(binom2(k - c + 2) for c in relation_degrees)
        )
        if predicted != value:
            bad.append(k)
    return bad


def euler_characteristic_tau(d: int, exponents: Sequence[int], relation_degrees: Sequence[int]) -> int:
    """Stable value of the alternating binomial sum of a resolution of M(f)."""
    k = 4 * d + 2 * max(list(exponents) + list(relation_degrees) + [0]) + 10
    return (
        binom2(k + 2)
        - 3 * binom2(k - d + 3)
        + sum(binom2(k - d - dj + 3) for dj in exponents)
        - sum(binom2(k - c + 2) for c in relation_degrees)
    )


def nu_from_tjurina(d: int, d1: int, tau: int) -> int:
    """Freeness defect from degree, minimal degree of a syzygy and Tjurina number."""
    if d < 3 or d1 < 1:
        raise ValueError("need d >= 3 and d1 >= 1")
    if 2 * d1 < d - 1:
        nu = (d - 1) ** 2 - d1 * (d - 1 - d1) - tau
    else:
        nu = ceil(Fraction(3 * (d - 1) ** 2, 4)) - tau
    if nu < 0:
        raise ValueError(f"inconsistent inputs d={d}, d1={d1}, tau={tau} give nu={nu}")
    return nu


# ---------------------------------------------------------------------------
# the engine
# ---------------------------------------------------------------------------

class JacobianEngine:
    """Degree-wise homological data of a reduced curve ``f = 0``.

    Results are cached per degree; the engine is not mutated after the
    cached tables are filled.
    """

    def __init__(self, f: HomogeneousPolynomial, field: Field = QQ, k_max: int | None = None):
        if f.is_zero() or f.degree < 1:
            raise ValueError("curve equation must be a nonzero form of degree >= 1")
        self.field = field
        self.f = f.with_field(field)
        self.d = f.degree
        self.k_max = default_kmax(self.d) if k_max is None else k_max
        derivs = partial_derivatives(self.f)
        self._derivs = [
            [(monomial_index(self.d - 1)[m], scalar(c, field)) for m, c in g.terms.items()]
            for g in derivs
        ]
        self._dmons = [[(m, scalar(c, field)) for m, c in g.terms.items()] for g in derivs]
        self._jac_cache: dict[int, tuple[int, list, tuple]] = {}
        self._milnor: MilnorProfile | None = None
        self._gens: tuple[tuple[int, ...], list] | None = None
        self._resolution: ResolutionSummary | None = None
        self._jmodule: JacobianModuleProfile | None = None
        self._sat: dict[int, int] = {}

    # -- the Jacobian map ---------------------------------------------------
    def _jac_transpose_rows(self, k: int) -> list[list]:
        """Rows = images of the basis (e_i * mu) of S_k^3 in S_{k+d-1}."""
        tgt = monomial_index(k + self.d - 1)
        n = dim_s(k + self.d - 1)
        z = zero(self.field)
        rows = []
        for comp in self._dmons:
            for mu in monomials(k):
                row = [z] * n
                for (a, b, c), coeff in comp:
                    row[tgt[(a + mu[0], b + mu[1], c + mu[2])]] = coeff
                rows.append(row)
        return rows

    def _jac(self, k: int) -> tuple[int, list, list]:
        """(rank, kernel rows, free columns) of S_k^3 -> S_{k+d-1}.

        Kernel rows are in free-variable form: row i has a 1 at ``free[i]``
        and zeros at the other free columns.
        """
        if k not in self._jac_cache:
            if k < 0:
                self._jac_cache[k] = (0, [], [])
            else:
                rows = self._jac_transpose_rows(k)
                mat = build(rows, dim_s(k + self.d - 1), self.field).transpose()
                ker, free = kernel_free_basis(mat, 3 * dim_s(k), self.field)
                self._jac_cache[k] = (3 * dim_s(k) - len(ker), ker, free)
        return self._jac_cache[k]

    def jacobian_dim(self, k: int) -> int:
        """dim (J_f)_k."""
        return self._jac(k - self.d + 1)[0]

    def syzygy_space(self, k: int) -> SubspaceBasis:
        """Canonical echelon basis of D0(f)_k inside S_k^3 (component-major coordinates)."""
        _, ker, _ = self._jac(k)
        return SubspaceBasis.from_rows(ker, 3 * dim_s(k), self.field)

    # -- Milnor algebra -----------------------------------------------------
    def milnor_profile(self) -> MilnorProfile:
        if self._milnor is None:
            top = hf_window_top(self.d)
            hf = tuple(dim_s(k) - self.jacobian_dim(k) for k in range(top + 1))
            tail = hf[-3:]
            if len(set(tail)) != 1:
                raise NonReducedError(
                    "non-reduced or singular-locus not finite: Hilbert function "
                    f"{list(tail)} does not stabilize by degree {top}"
                )
            stab = top
            while stab > 0 and hf[stab - 1] == hf[top]:
                stab -= 1
            self._milnor = MilnorProfile(self.d, hf, hf[top], stab)
        return self._milnor

    @property
    def tau(self) -> int:
        return self.milnor_profile().tau

    # -- generators of D0(f) ------------------------------------------------
    def _products_in(self, rows, block_degs, free: Sequence[int]) -> list[list]:
        """x*v, y*v, z*v for each row v, in the coordinates ``free`` of the target.

        Valid when the products lie in a subspace given in free-variable
        form, where restriction to the free columns is injective.
        """
        out_degs = [g + 1 for g in block_degs]
        in_off = _offsets(block_degs)
        out_off = _offsets(out_degs)
        pos = {c: i for i, c in enumerate(free)}
        z = zero(self.field)
        out = []
        for row in rows:
            sp = [(i, e) for i, e in enumerate(row) if e != 0]
            located = []
            for i, e in sp:
                blk = _block_of(in_off, i)
                located.append((blk, i - in_off[blk], e))
            for v in VARS:
                vec = [z] * len(free)
                for blk, local, e in located:
                    t = out_off[blk] + _shift(block_degs[blk], v)[local]
                    j = pos.get(t)
                    if j is not None:
                        vec[j] = e
                out.append(vec)
        return out

    def minimal_generators(self) -> tuple[tuple[int, ...], list[tuple[int, tuple]]]:
        """Degrees of a minimal generating set of D0(f) up to ``k_max``.

        In each degree k the new generators complement the span of
        ``x*D0_{k-1} + y*D0_{k-1} + z*D0_{k-1}`` inside ``D0_k``.  Returns
        ``(degrees, generators)``, each generator a pair
        ``(degree, coordinate vector in S_degree^3)``.
        """
        if self._gens is None:
            degrees: list[int] = []
            gens: list[tuple[int, tuple]] = []
            prev_rows: list = []
            for k in range(0, self.k_max + 1):
                _, ker, free = self._jac(k)
                if not ker:
                    prev_rows = []
                    continue
                if prev_rows:
                    prods = self._products_in(prev_rows, [k - 1] * 3, free)
                    _, wpiv = _rref(build(prods, len(free), self.field), self.field)
                else:
                    wpiv = ()
                wset = set(wpiv)
                for i, row in enumerate(ker):
                    if i not in wset:
                        degrees.append(k)
                        gens.append((k, tuple(row)))
                prev_rows = ker
            self._gens = (tuple(degrees), gens)
        return self._gens

    def _to_triple(self, k: int, row: Sequence) -> SyzygyTriple:
        n = dim_s(k)
        comps = tuple(
            HomogeneousPolynomial.from_vector(k, [_to_python(e, self.field) for e in row[i * n:(i + 1) * n]], self.field)
            for i in range(3)
        )
        return SyzygyTriple(k, comps)

    # -- relations among the generators ------------------------------------
    def relation_degrees(self) -> tuple[int, ...]:
        """Degrees c_j (Milnor-algebra grading) of minimal relations among the generators.

        The relation module is free of rank m - 2, so the scan stops once
        m - 2 minimal relations have been found.
        """
        degrees, gens = self.minimal_generators()
        m = len(gens)
        if m <= 2:
            return ()
        sparse_gens = [(g, _sparse(row)) for g, row in gens]
        found: list[int] = []
        prev_rows: list = []
        prev_blocks: list[int] = []
        for k in range(0, self.k_max + 1):
            if len(found) >= m - 2:
                break
            blocks = [k - g for g in degrees]
            if all(b < 0 for b in blocks):
                continue
            _, _, dfree = self._jac(k)
            pos = {c: i for i, c in enumerate(dfree)}
            ncols_all = sum(dim_s(b) for b in blocks)
            z = zero(self.field)
            # row c = coordinates of mu * r_j in the free-variable basis of D0_k
            trows = []
            for j, b in enumerate(blocks):
                if b < 0:
                    continue
                g, sp = sparse_gens[j]
                n_g, n_k = dim_s(g), dim_s(k)
                for mu in monomials(b):
                    sh = _shift(g, mu)
                    vec = [z] * len(dfree)
                    for i, e in sp:
                        blk, local = divmod(i, n_g)
                        t = pos.get(blk * n_k + sh[local])
                        if t is not None:
                            vec[t] = e
                    trows.append(vec)
            mat = build(trows, len(dfree), self.field).transpose()
            ker, kfree = kernel_free_basis(mat, ncols_all, self.field)
            if ker:
                if prev_rows:
                    prods = self._products_in(prev_rows, prev_blocks, kfree)
                    r = build(prods, len(kfree), self.field).rank()
                else:
                    r = 0
                found.extend([k + self.d - 1] * (len(ker) - r))
            prev_rows, prev_blocks = ker, blocks
        return tuple(found)

    def resolution_summary(self, allow_uncertified: bool = False) -> ResolutionSummary:
        if self._resolution is None:
            degrees, gens = self.minimal_generators()
            hf = self.milnor_profile().hf
            rel = self.relation_degrees()
            m = len(degrees)
            shifts = tuple(c - self.d - degrees[j + 2] + 1 for j, c in enumerate(rel))
            bad = hilbert_certificate(hf, self.d, degrees, rel)
            certified = not bad and m >= 2 and len(rel) == m - 2
            if certified:
                if any(e < 1 for e in shifts):
                    raise InvariantViolation(f"relation shifts {shifts} violate c_j = d + d_(j+2) - 1 + eps_j, eps_j >= 1")
                if degrees[0] + degrees[1] != self.d - 1 + sum(shifts):
                    raise InvariantViolation("d1 + d2 != d - 1 + sum(eps)")
            triples = tuple(self._to_triple(g, row) for g, row in gens)
            self._resolution = ResolutionSummary(
                self.d, degrees, triples, rel, shifts, certified, tuple(bad)
            )
        if not self._resolution.certified and not allow_uncertified:
            raise UncertifiedError(
                f"scan bound reached with uncertified presentation (k_max={self.k_max}, "
                f"exponents={self._resolution.exponents}, relations={self._resolution.relation_degrees})"
            )
        return self._resolution

    # -- saturation and the Jacobian module --------------------------------
    def _saturation_dims(self) -> dict[int, int]:
        """dim (I_f)_k for 0 <= k <= top, descending from I_top = J_top.

        ``I_k = {g in S_k : x g, y g, z g in I_{k+1}}``; each ``I_k`` is held
        as the rows of a matrix whose kernel it is.
        """
        if not self._sat:
            K = hf_window_top(self.d)
            src = K - self.d + 1
            if src >= 0:
                images = self._jac_transpose_rows(src)
                q, _ = kernel_free_basis(build(images, dim_s(K), self.field), dim_s(K), self.field)
            else:
                q = [row for row in _identity(dim_s(K), self.field)]
            dims = {K: dim_s(K) - len(q)}
            for k in range(K - 1, -1, -1):
                n = dim_s(k)
                if not q:
                    dims[k] = n
                    continue
                stacked = []
                for v in VARS:
                    idx = _shift(k, v)
                    for row in q:
                        stacked.append([row[i] for i in idx])
                q, _ = _rref(build(stacked, n, self.field), self.field)
                dims[k] = n - len(q)
            self._sat = dims
        return self._sat

    def saturate_jacobian(self, k: int) -> int:
        """dim (I_f)_k where I_f is the saturation of the Jacobian ideal."""
        dims = self._saturation_dims()
        if k in dims:
            return dims[k]
        if k > max(dims):
            return self.jacobian_dim(k)
        return 0

    def jacobian_module_profile(self) -> JacobianModuleProfile:
        if self._jmodule is None:
            T = 3 * (self.d - 2)
            top = hf_window_top(self.d)
            dims = self._saturation_dims()
            n_all = [dims[k] - self.jacobian_dim(k) for k in range(top + 1)]
            if any(v < 0 for v in n_all):
                raise InvariantViolation("saturation smaller than the Jacobian ideal")
            n = tuple(n_all[: max(T, -1) + 1])
            nu = max(n) if n else 0
            sigma = next((k for k, v in enumerate(n) if v), None)
            self._jmodule = JacobianModuleProfile(self.d, n, nu, sigma, tuple(n_all[max(T, -1) + 1:]))
        return self._jmodule


# ---------------------------------------------------------------------------
# modular fast path
# ---------------------------------------------------------------------------

def invariants_of(engine: JacobianEngine, saturation: bool = True) -> dict:
    res = engine.resolution_summary(allow_uncertified=True)
    out = {
        "hf": engine.milnor_profile().hf,
        "exponents": res.exponents,
        "relation_degrees": res.relation_degrees,
    }
    if saturation:
        out["n"] = engine.jacobian_module_profile().n
    return out


def modular_engines(
    f: HomogeneousPolynomial,
    k_max: int | None = None,
    primes: tuple[int, int] = (DEFAULT_PRIME, SECOND_PRIME),
    saturation: bool = True,
) -> JacobianEngine:
    """Run the engine over two primes; return the first if every invariant agrees."""
    engines = [JacobianEngine(f, Field(p), k_max) for p in primes]
    results = [invariants_of(e, saturation) for e in engines]
    if results[0] != results[1]:
        diff = sorted(k for k in results[0] if results[0][k] != results[1][k])
        raise ModularDisagreement(f"primes {primes} disagree on {diff}")
    return engines[0]
