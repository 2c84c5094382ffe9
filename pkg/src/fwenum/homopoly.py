"""Homogeneous bivariate polynomial algebra over exact scalars.

A ``HomPoly`` of degree n stores n+1 coefficients indexed by the exponent of
y, so ``coeffs[i]`` multiplies x^(n-i) y^i.  The zero polynomial keeps its
degree so that degree contracts of the differential operators stay total.
Scalars are Fractions, or QuadElem when a square root of q enters (odd-degree
MacWilliams transforms, matrix actions over a quadratic extension).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from . import unipoly
from .scalar import (
    Fraction as Rational,
    MixedExtensionError,
    NotRationalError,
    QuadElem,
    simplify,
    sqrt_rational,
)

__all__ = [
    "HomPoly",
    "Mat2",
    "WeightProfile",
    "act_matrix",
    "macwilliams",
    "transform_sign",
    "diff_op",
    "divide_exact",
    "weight_profile",
    "pochhammer",
    "parse_poly",
    "MixedExtensionError",
    "NotRationalError",
]


def _norm_scalar(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, QuadElem):
        return simplify(c)
    if isinstance(c, Fraction):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class HomPoly:
    """Homogeneous polynomial sum(coeffs[i] * x^(n-i) y^i, i = 0..n)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(_norm_scalar(c) for c in coeffs)
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(coeffs) != degree + 1:
            raise ValueError(
                f"degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("HomPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree, [Fraction(0)] * (degree + 1))

    @classmethod
    def from_terms(cls, degree: int, terms: dict) -> "HomPoly":
        """Build from a map {y_exponent: coefficient}."""
        coeffs = [Fraction(0)] * (degree + 1)
        for i, c in terms.items():
            coeffs[i] = c
        return cls(degree, coeffs)

    @classmethod
    def monomial(cls, x_exp: int, y_exp: int, coeff=1) -> "HomPoly":
        return cls.from_terms(x_exp + y_exp, {y_exp: coeff})

    @classmethod
    def one(cls) -> "HomPoly":
        return cls(0, [Fraction(1)])

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(not isinstance(c, QuadElem) for c in self.coeffs)

    def support(self) -> list[int]:
        """y-exponents with a nonzero coefficient."""
        return [i for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degree")
        return HomPoly(
            self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return HomPoly(self.degree, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadElem)):
            return HomPoly(self.degree, [c * other for c in self.coeffs])
        if not isinstance(other, HomPoly):
            return NotImplemented
        n = self.degree + other.degree
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return HomPoly(n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadElem)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = HomPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- text / JSON ---------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"HomPoly({format_poly(self)!r})"

    def to_json(self) -> str:
        if not self.is_rational():
            raise NotRationalError("JSON form supports rational coefficients only")
        return json.dumps(
            {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}
        )

    @classmethod
    def from_json(cls, text: str) -> "HomPoly":
        obj = json.loads(text)
        return cls(obj["degree"], [Fraction(c) for c in obj["coeffs"]])


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix acting on (x, y); entries are exact scalars."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _norm_scalar(getattr(self, name)))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def inverse(self) -> "Mat2":
        dt = self.det()
        if not dt:
            raise ZeroDivisionError("matrix is singular")
        return Mat2(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    def scaled(self, s) -> "Mat2":
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)


def sigma_q(q: Rational) -> Mat2:
    """MacWilliams matrix (1/sqrt(q)) [[1, q-1], [1, -1]]."""
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("q must be positive and != 1")
    root, _ = sqrt_rational(q)
    inv = root.inverse()
    return Mat2(inv, (q - 1) * inv, inv, -inv)


TAU = Mat2(1, 0, 0, -1)


# -- matrix action ------------------------------------------------------------


def _linear_form_power(a, b, k: int) -> list:
    """Coefficient list of (a*x + b*y)^k, indexed by the y-exponent."""
    apow = [_norm_scalar(1)]
    bpow = [_norm_scalar(1)]
    for _ in range(k):
        apow.append(apow[-1] * a)
        bpow.append(bpow[-1] * b)
    return [comb(k, j) * apow[k - j] * bpow[j] for j in range(k + 1)]


@lru_cache(maxsize=64)
def _monomial_images(sigma: Mat2, n: int) -> tuple:
    """Images of the degree-n monomials x^(n-i) y^i under sigma, as coeff tuples."""
    pow1 = [_linear_form_power(sigma.a, sigma.b, k) for k in range(n + 1)]
    pow2 = [_linear_form_power(sigma.c, sigma.d, k) for k in range(n + 1)]
    images = []
    for i in range(n + 1):
        u, v = pow1[n - i], pow2[i]
        out = [Fraction(0)] * (n + 1)
        for s, cu in enumerate(u):
            if not cu:
                continue
            for t, cv in enumerate(v):
                if cv:
                    out[s + t] = out[s + t] + cu * cv
        images.append(tuple(out))
    return tuple(images)


def act_matrix(f: HomPoly, sigma: Mat2) -> HomPoly:
    """f^sigma(x, y) = f(a x + b y, c x + d y), expanded and collected."""
    n = f.degree
    images = _monomial_images(sigma, n)
    out = [Fraction(0)] * (n + 1)
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        img = images[i]
        for k in range(n + 1):
            if img[k]:
                out[k] = out[k] + c * img[k]
    return HomPoly(n, out)


def macwilliams(f: HomPoly, q: Rational) -> HomPoly:
    """MacWilliams transform f^{sigma_q} = q^(-n/2) f(x + (q-1)y, x - y).

    Coefficients stay rational whenever q^(n/2) is rational; otherwise they
    live in the quadratic extension containing sqrt(q).
    """
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("q must be positive and != 1")
    raw = act_matrix(f, Mat2(1, q - 1, 1, -1))
    root, _ = sqrt_rational(q)
    scale = simplify(root ** (-f.degree))
    return raw * scale


def transform_sign(f: HomPoly, q: Rational) -> int | None:
    """+1 / -1 when f^{sigma_q} equals +f / -f exactly, else None."""
    g = macwilliams(f, q)
    if g == f:
        return 1
    if g == -f:
        return -1
    return None


# -- differential operators ----------------------------------------------------


def _falling(a: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= a - j
    return out


def diff_op(p: HomPoly, f: HomPoly) -> HomPoly:
    """Apply p(D), the operator with x -> d/dx and y -> d/dy, to f."""
    m, n = p.degree, f.degree
    if m > n:
        raise ValueError(f"operator degree {m} exceeds polynomial degree {n}")
    out = [Fraction(0)] * (n - m + 1)
    for j, pj in enumerate(p.coeffs):
        if not pj:
            continue
        # d^(m-j)/dx^(m-j) d^j/dy^j acting on x^(n-i) y^i
        for i, ci in enumerate(f.coeffs):
            if not ci or i < j or n - i < m - j:
                continue
            k = _falling(n - i, m - j) * _falling(i, j)
            out[i - j] = out[i - j] + pj * ci * k
    return HomPoly(n - m, out)


def pochhammer(a: Rational, n: int) -> Rational:
    """Rising factorial a (a+1) ... (a+n-1); 1 when n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Fraction(1)
    a = Fraction(a)
    for j in range(n):
        out *= a + j
    return out


# -- exact division --------------------------------------------------------------


def _dehomogenize(f: HomPoly) -> tuple[int, int, list]:
    """Split f = x^xpow y^ypow * core; returns (xpow, ypow, core coeff list).

    The core list is indexed by the y-exponent and has nonzero first and last
    entries; f must be nonzero.
    """
    idx = f.support()
    lo, hi = idx[0], idx[-1]
    return f.degree - hi, lo, list(f.coeffs[lo : hi + 1])


def divide_exact(a: HomPoly, f: HomPoly) -> HomPoly | None:
    """Exact cofactor g with a*g == f, or None when a does not divide f."""
    if a.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.degree > f.degree:
        raise ValueError("divisor degree exceeds dividend degree")
    if f.is_zero():
        return HomPoly.zero(f.degree - a.degree)
    ax, ay, acore = _dehomogenize(a)
    fx, fy, fcore = _dehomogenize(f)
    if fx < ax or fy < ay:
        return None
    quot = unipoly.div_exact(fcore, acore)
    if quot is None:
        return None
    n = f.degree - a.degree
    coeffs = [Fraction(0)] * (n + 1)
    dy = fy - ay
    for k, c in enumerate(quot):
        coeffs[dy + k] = c
    return HomPoly(n, coeffs)


# -- weight profile ---------------------------------------------------------------


@dataclass(frozen=True)
class WeightProfile:
    """Minimum weight, dual minimum weight and divisibility of an enumerator."""

    d: int
    d_perp: int
    divisibility: int


def _min_positive_support(f: HomPoly) -> int:
    for i in range(1, f.degree + 1):
        if f.coeffs[i]:
            return i
    raise ValueError("polynomial has no positive-weight term")


def weight_profile(f: HomPoly, q: Rational) -> WeightProfile:
    """d, d_perp and the largest c dividing every nonzero weight of f."""
    if f.is_zero():
        raise ValueError("zero polynomial has no weight profile")
    if f.coeffs[0] != 1:
        raise ValueError("enumerator must be monic in x^n")
    positive = [i for i in f.support() if i >= 1]
    if not positive:
        raise ValueError("x^n alone is not a weight enumerator")
    d = positive[0]
    divisibility = 0
    for i in positive:
        divisibility = gcd(divisibility, i)
    d_perp = _min_positive_support(macwilliams(f, q))
    return WeightProfile(d=d, d_perp=d_perp, divisibility=divisibility)


# -- parsing / printing -----------------------------------------------------------


_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?"
    r"(?:\*?x(?:\^(?P<xp>\d+))?)?"
    r"(?:\*?y(?:\^(?P<yp>\d+))?)?$"
)


def parse_poly(text: str) -> HomPoly:
    """Parse a signed sum of terms ``c*x^a*y^b`` into a HomPoly.

    The grammar matches the printer: rational coefficients as ``num/den``,
    ``*`` and exponents of 1/0 elidable, e.g. ``x^12 - 33*x^8*y^4 + y^12``.
    """
    compact = text.replace(" ", "").replace("−", "-")
    if not compact:
        raise ValueError("empty polynomial text")
    terms = []
    for piece in re.finditer(r"[+-]?[^+-]+", compact):
        chunk = piece.group(0)
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or not chunk:
            raise ValueError(f"cannot parse term {chunk!r}")
        coef_s, xp_s, yp_s = m.group("coef"), m.group("xp"), m.group("yp")
        has_x = "x" in chunk
        has_y = "y" in chunk
        if coef_s is None and not has_x and not has_y:
            raise ValueError(f"cannot parse term {chunk!r}")
        coef = Fraction(coef_s) if coef_s else Fraction(1)
        xp = int(xp_s) if xp_s else (1 if has_x else 0)
        yp = int(yp_s) if yp_s else (1 if has_y else 0)
        terms.append((sign * coef, xp, yp))
    degrees = {xp + yp for _, xp, yp in terms}
    if len(degrees) != 1:
        raise ValueError(f"terms of mixed total degree {sorted(degrees)}")
    n = degrees.pop()
    coeffs = [Fraction(0)] * (n + 1)
    for coef, _, yp in terms:
        coeffs[yp] += coef
    return HomPoly(n, coeffs)


def _format_term(c: Fraction, xp: int, yp: int) -> str:
    mono = []
    if xp:
        mono.append("x" if xp == 1 else f"x^{xp}")
    if yp:
        mono.append("y" if yp == 1 else f"y^{yp}")
    mono_s = "*".join(mono)
    cs = str(abs(c))
    if mono_s and cs == "1":
        return mono_s
    if mono_s:
        return f"{cs}*{mono_s}"
    return cs


def format_poly(f: HomPoly) -> str:
    """Inverse of parse_poly; round-trips exactly for rational coefficients."""
    if not f.is_rational():
        raise NotRationalError("text form supports rational coefficients only")
    n = f.degree
    parts = []
    for i in range(n + 1):
        c = f.coeffs[i]
        if not c:
            continue
        term = _format_term(c, n - i, i)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    if not parts:
        return "0"
    return " ".join(parts)


def format_poly_latex(f: HomPoly) -> str:
    """LaTeX rendering with \\frac for non-integer coefficients."""
    if not f.is_rational():
        raise NotRationalError("LaTeX form supports rational coefficients only")
    n = f.degree
    parts = []
    for i in range(n + 1):
        c = f.coeffs[i]
        if not c:
            continue
        mono = ""
        if n - i:
            mono += "x" if n - i == 1 else f"x^{{{n - i}}}"
        if i:
            mono += "y" if i == 1 else f"y^{{{i}}}"
        mag = abs(c)
        if mag.denominator == 1:
            cs = "" if (mag == 1 and mono) else str(mag)
        else:
            cs = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        term = cs + mono if mono else (cs or "1")
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    if not parts:
        return "0"
    return " ".join(parts)
