"""Exact scalars and sparse homogeneous polynomials in x, y, z.

Coefficients live either in the rationals (``QQ``) or in a prime field
``GF(p)``.  Monomials are exponent triples ``(a, b, c)`` for
``x^a y^b z^c``; every basis of a graded piece ``S_k`` is listed in graded
lex order with ``x > y > z``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Monomial = tuple[int, int, int]
Number = Union[int, Fraction]

VARIABLES = ("x", "y", "z")
DEFAULT_PRIME = 2**31 - 1


class FieldMismatchError(ValueError):
    pass


class ParseError(ValueError):
    """Raised for malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NonHomogeneousError(ValueError):
    pass


class Field:
    """Coefficient field: the rationals when ``modulus`` is None, else GF(p)."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int | None = None):
        if modulus is not None and modulus < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.modulus = modulus

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("Field", self.modulus))

    def __repr__(self) -> str:
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    def convert(self, value: Number) -> Number:
        if self.modulus is None:
            return Fraction(value)
        p = self.modulus
        if isinstance(value, Fraction):
            num, den = value.numerator % p, value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        return int(value) % p

    def add(self, a: Number, b: Number) -> Number:
        return a + b if self.modulus is None else (a + b) % self.modulus

    def mul(self, a: Number, b: Number) -> Number:
        return a * b if self.modulus is None else (a * b) % self.modulus

    def neg(self, a: Number) -> Number:
        return -a if self.modulus is None else (-a) % self.modulus

    def inv(self, a: Number) -> Number:
        if self.modulus is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.modulus)


QQ = Field()


def GF(p: int = DEFAULT_PRIME) -> Field:
    return Field(p)


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[Monomial, ...]:
    """Basis of S_k, descending in graded lex order with x > y > z."""
    if k < 0:
        return ()
    return tuple((a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(k: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials(k))}


def dim_s(k: int) -> int:
    return (k + 2) * (k + 1) // 2 if k >= 0 else 0


class HomogeneousPolynomial:
    """Immutable homogeneous form of fixed degree with sparse exact coefficients."""

    __slots__ = ("degree", "terms", "field", "_hash")

    def __init__(
        self,
        degree: int,
        terms: Mapping[Monomial, Number] | None = None,
        field: Field = QQ,
    ):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Monomial, Number] = {}
        for mon, coeff in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != 3 or min(mon) < 0 or sum(mon) != degree:
                raise NonHomogeneousError(f"monomial {mon} does not have degree {degree}")
            c = field.convert(coeff)
            if c:
                clean[mon] = field.add(clean.get(mon, 0), c) if mon in clean else c
                if not clean[mon]:
                    del clean[mon]
        self.degree = degree
        self.terms = clean
        self.field = field
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, degree: int, terms: dict[Monomial, Number], field: Field) -> "HomogeneousPolynomial":
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.terms = terms
        obj.field = field
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: Number, field: Field = QQ) -> "HomogeneousPolynomial":
        return cls(0, {(0, 0, 0): value}, field)

    @classmethod
    def variable(cls, name: str, field: Field = QQ) -> "HomogeneousPolynomial":
        exps = [0, 0, 0]
        exps[VARIABLES.index(name)] = 1
        return cls(1, {tuple(exps): 1}, field)

    @classmethod
    def linear(cls, coeffs: Iterable[Number], field: Field = QQ) -> "HomogeneousPolynomial":
        a, b, c = coeffs
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}, field)

    @classmethod
    def quadratic_form(cls, sym: Iterable[Iterable[Number]], field: Field = QQ) -> "HomogeneousPolynomial":
        """The form v^T A v for a symmetric 3x3 matrix A."""
        A = [list(row) for row in sym]
        terms: dict[Monomial, Number] = {}
        for i in range(3):
            for j in range(3):
                exps = [0, 0, 0]
                exps[i] += 1
                exps[j] += 1
                terms[tuple(exps)] = terms.get(tuple(exps), 0) + Fraction(A[i][j])
        return cls(2, terms, field)

    # -- basic protocol -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        if self.field != other.field:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, self.field, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"HomogeneousPolynomial({render(self)!r}, degree={self.degree}, field={self.field!r})"

    def __str__(self) -> str:
        return render(self)

    def _check(self, other: "HomogeneousPolynomial") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"cannot combine {self.field!r} with {other.field!r}")

    def with_field(self, field: Field) -> "HomogeneousPolynomial":
        """Reduce (or lift integer-valued) coefficients into ``field``."""
        if field == self.field:
            return self
        return HomogeneousPolynomial(self.degree, self.terms, field)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.degree != other.degree:
            raise NonHomogeneousError(f"sum of degrees {self.degree} and {other.degree}")
        F = self.field
        out = dict(self.terms)
        for mon, c in other.terms.items():
            s = F.add(out.get(mon, 0), c)
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        return HomogeneousPolynomial._raw(self.degree, out, F)

    def __neg__(self) -> "HomogeneousPolynomial":
        F = self.field
        return HomogeneousPolynomial._raw(self.degree, {m: F.neg(c) for m, c in self.terms.items()}, F)

    def __sub__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        return self + (-other)

    def scale(self, c: Number) -> "HomogeneousPolynomial":
        F = self.field
        c = F.convert(c)
        if not c:
            return HomogeneousPolynomial._raw(self.degree, {}, F)
        return HomogeneousPolynomial._raw(self.degree, {m: F.mul(v, c) for m, v in self.terms.items()}, F)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomogeneousPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = HomogeneousPolynomial.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = multiply(result, base)
            n >>= 1
            if n:
                base = multiply(base, base)
        return result

    def derivative(self, var: int | str) -> "HomogeneousPolynomial":
        i = VARIABLES.index(var) if isinstance(var, str) else var
        F = self.field
        if self.degree == 0:
            return HomogeneousPolynomial._raw(0, {}, F)
        out: dict[Monomial, Number] = {}
        for mon, c in self.terms.items():
            e = mon[i]
            if e:
                new = list(mon)
                new[i] -= 1
                v = F.mul(c, F.convert(e))
                if v:
                    out[tuple(new)] = v
        return HomogeneousPolynomial._raw(self.degree - 1, out, F)

    def evaluate(self, point: Iterable[Number]) -> Number:
        px, py, pz = (self.field.convert(v) for v in point)
        F = self.field
        total: Number = 0
        for (a, b, c), coeff in self.terms.items():
            total = F.add(total, F.mul(coeff, F.mul(F.mul(_pw(px, a, F), _pw(py, b, F)), _pw(pz, c, F))))
        return total

    def substitute(self, forms: Iterable["HomogeneousPolynomial"]) -> "HomogeneousPolynomial":
        """Compose with (x, y, z) -> forms; the forms must share one degree."""
        fx, fy, fz = forms
        e = fx.degree
        cache: dict[tuple[int, int], HomogeneousPolynomial] = {}

        def power(idx: int, n: int) -> HomogeneousPolynomial:
            if (idx, n) not in cache:
                cache[(idx, n)] = (fx, fy, fz)[idx] ** n
            return cache[(idx, n)]

        total = HomogeneousPolynomial._raw(self.degree * e, {}, self.field)
        for (a, b, c), coeff in self.terms.items():
            term = multiply(multiply(power(0, a), power(1, b)), power(2, c)).scale(coeff)
            total = total + term
        return HomogeneousPolynomial._raw(self.degree * e, total.terms, self.field)

    def coefficient_vector(self) -> list[Number]:
        return [self.terms.get(m, 0) for m in monomials(self.degree)]

    @classmethod
    def from_vector(cls, degree: int, vec: Iterable[Number], field: Field = QQ) -> "HomogeneousPolynomial":
        return cls(degree, {m: c for m, c in zip(monomials(degree), vec) if c}, field)


def _pw(v: Number, e: int, F: Field) -> Number:
    return v**e if F.modulus is None else pow(v, e, F.modulus)


def multiply(f: HomogeneousPolynomial, g: HomogeneousPolynomial) -> HomogeneousPolynomial:
    """Product of two forms; degrees add."""
    f._check(g)
    F = f.field
    out: dict[Monomial, Number] = {}
    p = F.modulus
    for (a1, b1, c1), u in f.terms.items():
        for (a2, b2, c2), v in g.terms.items():
            mon = (a1 + a2, b1 + b2, c1 + c2)
            out[mon] = out.get(mon, 0) + u * v
    if p is None:
        out = {m: c for m, c in out.items() if c}
    else:
        out = {m: c % p for m, c in out.items() if c % p}
    return HomogeneousPolynomial._raw(f.degree + g.degree, out, F)


def product(factors: Iterable[HomogeneousPolynomial], field: Field = QQ) -> HomogeneousPolynomial:
    result = HomogeneousPolynomial.constant(1, field)
    for g in factors:
        result = multiply(result, g)
    return result


def partial_derivatives(f: HomogeneousPolynomial) -> tuple[HomogeneousPolynomial, ...]:
    if f.is_zero() or f.degree < 1:
        raise ValueError("partial derivatives need a nonzero form of degree >= 1")
    return (f.derivative(0), f.derivative(1), f.derivative(2))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _format_coeff(c: Number) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def render(f: HomogeneousPolynomial) -> str:
    """Render in the parser's grammar, terms in descending graded lex order."""
    if not f.terms:
        return "0"
    parts: list[str] = []
    p = f.field.modulus
    for mon in monomials(f.degree):
        if mon not in f.terms:
            continue
        c = f.terms[mon]
        if p is not None and c > p // 2:
            c = c - p
        negative = c < 0
        c = -c if negative else c
        factors = []
        for name, e in zip(VARIABLES, mon):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if c != 1 or not factors:
            factors.insert(0, _format_coeff(c))
        body = "*".join(factors)
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    # general (possibly inhomogeneous) polynomials as {monomial: Fraction}

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> dict[Monomial, Fraction]:
        kind, _, pos = self.peek()
        if kind == "end":
            raise ParseError("empty expression", pos)
        value = self.expr()
        kind, tok, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {tok!r}", pos)
        return value

    def expr(self) -> dict:
        value = self.term()
        while True:
            kind, tok, _ = self.peek()
            if kind == "op" and tok in "+-":
                self.take()
                rhs = self.term()
                value = _gadd(value, rhs if tok == "+" else _gneg(rhs))
            else:
                return value

    def term(self) -> dict:
        value = self.unary()
        while True:
            kind, tok, pos = self.peek()
            if kind == "op" and tok == "*":
                self.take()
                value = _gmul(value, self.unary())
            elif kind == "op" and tok == "/":
                self.take()
                divisor = self.unary()
                if set(divisor) != {(0, 0, 0)}:
                    raise ParseError("division by a non-constant", pos)
                value = {m: c / divisor[(0, 0, 0)] for m, c in value.items()}
            elif kind in ("var", "num") or (kind == "op" and tok == "("):
                if kind == "num":
                    raise ParseError("number follows a factor without an operator", pos)
                value = _gmul(value, self.power())
            else:
                return value

    def unary(self) -> dict:
        kind, tok, _ = self.peek()
        if kind == "op" and tok in "+-":
            self.take()
            inner = self.unary()
            return inner if tok == "+" else _gneg(inner)
        return self.power()

    def power(self) -> dict:
        base = self.atom()
        kind, tok, _ = self.peek()
        if kind == "op" and tok == "^":
            self.take()
            kind, num, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            result: dict = {(0, 0, 0): Fraction(1)}
            for _ in range(int(num)):
                result = _gmul(result, base)
            return result
        return base

    def atom(self) -> dict:
        kind, tok, pos = self.take()
        if kind == "num":
            return {(0, 0, 0): Fraction(int(tok))} if int(tok) else {}
        if kind == "var":
            exps = [0, 0, 0]
            exps[VARIABLES.index(tok)] = 1
            return {tuple(exps): Fraction(1)}
        if kind == "op" and tok == "(":
            value = self.expr()
            kind, tok, pos2 = self.take()
            if not (kind == "op" and tok == ")"):
                raise ParseError("expected ')'", pos2)
            return value
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {tok!r}", pos)


def _gadd(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _gneg(a: dict) -> dict:
    return {m: -c for m, c in a.items()}


def _gmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def parse_poly(text: str, field: Field = QQ) -> HomogeneousPolynomial:
    """Parse and expand a homogeneous polynomial in x, y, z.

    Accepts integer literals, ``+ - * / ^`` (``**`` as a synonym for ``^``),
    parentheses and implicit multiplication such as ``2xy^2z``.
    """
    terms = _Parser(text).parse()
    if not terms:
        raise ParseError("zero polynomial does not define a curve")
    degrees = sorted({sum(m) for m in terms})
    if len(degrees) > 1:
        raise NonHomogeneousError(f"expression mixes degrees {degrees}")
    return HomogeneousPolynomial(degrees[0], terms, field)
