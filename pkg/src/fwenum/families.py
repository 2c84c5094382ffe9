"""Concrete enumerator families: generators, graded bases, extremal members.

Each family is generated by an invariant polynomial of degree two (or eight
for the c = 4 family) together with an anti-invariant generator; products
with an odd number of anti-invariant factors transform with sign -1 under the
MacWilliams matrix, products with an even number with sign +1.  The extremal
member of a degree is the unique monic combination whose low-order weights
vanish strictly below the family bound; the solver asserts the uniqueness and
the nonvanishing at the bound instead of trusting them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import linalg
from .homopoly import HomPoly, parse_poly, transform_sign, weight_profile, WeightProfile

__all__ = [
    "FamilySpec",
    "FAMILIES",
    "Bound",
    "FweResult",
    "NotInRingError",
    "ExtremalConstructionError",
    "family",
    "generator",
    "basis",
    "basis_exponents",
    "expand_in_generators",
    "bound",
    "classical_bound",
    "extremal",
    "member_with_min_weight",
    "is_fwe",
    "burmann_coefficient",
    "ring_dimension",
]


class NotInRingError(ValueError):
    """The polynomial is outside the span of the family's graded basis."""


class ExtremalConstructionError(RuntimeError):
    """The cancellation system violated the bound/uniqueness contract."""


@dataclass(frozen=True)
class FamilySpec:
    """A formal-weight-enumerator family and its invariant-ring data."""

    name: str
    q: Fraction
    c: int  # every nonzero weight of a member is a multiple of c
    even_gen: HomPoly  # invariant generator
    odd_gen: HomPoly  # anti-invariant generator
    parity: int  # required parity (mod 2) of the odd_gen exponent
    sign: int  # MacWilliams sign of the family members
    ring_degrees: tuple[int, int]  # generator degrees of the full invariant ring

    def bound(self, n: int) -> "Bound":
        return bound(self, n)


def _w2(q) -> HomPoly:
    q = Fraction(q)
    return HomPoly(2, [1, 0, q - 1])


_PHI4 = parse_poly("x^4 - 6*x^2*y^2 + y^4")
_PHI3 = parse_poly("x^3 - 9*x*y^2")
_PHI6 = parse_poly("x^6 - 5*x^4*y^2 + 5/3*x^2*y^4 - 1/27*y^6")
_WH8 = parse_poly("x^8 + 14*x^4*y^4 + y^8")
_W12 = parse_poly("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12")
# (1/81) x^2 y^2 (x^2-y^2)^2 (9x^2-y^2)^2; equals (W_2^6 - phi6^2)/12
_W12PRIME = (
    parse_poly("x^2*y^2")
    * parse_poly("x^2 - y^2") ** 2
    * parse_poly("9*x^2 - y^2") ** 2
    * Fraction(1, 81)
)

_GENERATORS = {
    "phi4": _PHI4,
    "phi3": _PHI3,
    "phi6": _PHI6,
    "wh8": _WH8,
    "w12": _W12,
    "w12prime": _W12PRIME,
}


def generator(name: str, q=None) -> HomPoly:
    """Named generator polynomial; `w2` takes the field size q as a parameter."""
    if name == "w2":
        if q is None:
            raise ValueError("generator 'w2' needs the parameter q")
        return _w2(q)
    try:
        return _GENERATORS[name]
    except KeyError:
        raise ValueError(
            f"unknown generator {name!r}; expected w2, {', '.join(_GENERATORS)}"
        ) from None


def _make_family(name, q, c, even_gen, odd_gen, parity, sign, ring_degrees):
    q = Fraction(q)
    if transform_sign(even_gen, q) != 1:
        raise AssertionError(f"{name}: even generator is not invariant")
    if transform_sign(odd_gen, q) != -1:
        raise AssertionError(f"{name}: odd generator is not anti-invariant")
    return FamilySpec(name, q, c, even_gen, odd_gen, parity, sign, ring_degrees)


FAMILIES: dict[str, FamilySpec] = {
    "type1": _make_family("type1", 2, 2, _w2(2), _PHI4, 1, -1, (2, 4)),
    "type4": _make_family("type4", 4, 2, _w2(4), _PHI3, 1, -1, (2, 3)),
    "q43": _make_family("q43", Fraction(4, 3), 2, _w2(Fraction(4, 3)), _PHI6, 0, 1, (2, 12)),
    "q43-odd": _make_family(
        "q43-odd", Fraction(4, 3), 2, _w2(Fraction(4, 3)), _PHI6, 1, -1, (2, 6)
    ),
    "ozeki": _make_family("ozeki", 2, 4, _WH8, _W12, 1, -1, (8, 12)),
}


def family(name: str) -> FamilySpec:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}"
        ) from None


# -- graded bases -----------------------------------------------------------------

_POWER_CACHE: dict[tuple[str, str, int], HomPoly] = {}


def _gen_power(fam: FamilySpec, which: str, k: int) -> HomPoly:
    key = (fam.name, which, k)
    cached = _POWER_CACHE.get(key)
    if cached is not None:
        return cached
    gen = fam.even_gen if which == "even" else fam.odd_gen
    if k == 0:
        p = HomPoly.one()
    else:
        p = _gen_power(fam, which, k - 1) * gen
    _POWER_CACHE[key] = p
    return p


def basis_exponents(fam: FamilySpec, n: int) -> list[tuple[int, int]]:
    """All (l, m) with l*deg(even) + m*deg(odd) = n and m of the family parity."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    de, do = fam.even_gen.degree, fam.odd_gen.degree
    out = []
    for m in range(n // do + 1):
        if m % 2 != fam.parity:
            continue
        rest = n - m * do
        if rest % de == 0:
            out.append((rest // de, m))
    return out


def basis(fam: FamilySpec, n: int) -> list[HomPoly]:
    """Monomial products even_gen^l odd_gen^m of degree n, m of the family parity."""
    return [
        _gen_power(fam, "even", l) * _gen_power(fam, "odd", m)
        for l, m in basis_exponents(fam, n)
    ]


def ring_dimension(fam: FamilySpec, n: int) -> int:
    """Dimension of the degree-n graded piece of the full invariant ring.

    Counts products of the two algebraically independent ring generators
    (both parities), which is what the Molien series of the matching group
    enumerates.
    """
    e, o = fam.ring_degrees
    if n == 0:
        return 1
    return sum(1 for m in range(n // o + 1) if (n - m * o) % e == 0)


# -- expansion and extremal construction -------------------------------------------


def expand_in_generators(f: HomPoly, fam: FamilySpec) -> list[Fraction]:
    """Exact coordinates of f over basis(fam, deg f); raises NotInRingError."""
    if not f.is_rational():
        raise NotInRingError("family members have rational coefficients")
    elems = basis(fam, f.degree)
    if not elems:
        raise NotInRingError(f"no degree-{f.degree} basis in family {fam.name}")
    rows = [[b.coeffs[i] for b in elems] for i in range(f.degree + 1)]
    rhs = list(f.coeffs)
    x, unique = linalg.solve(rows, rhs)
    if x is None:
        raise NotInRingError(f"polynomial is not in the {fam.name} ring")
    if not unique:
        raise AssertionError("graded basis is linearly dependent")
    return x


@dataclass(frozen=True)
class Bound:
    """Upper bound for the minimum weight at a given degree."""

    d_max: int
    proven: bool


def bound(fam: FamilySpec, n: int) -> Bound:
    """Family bound on d; for q43-odd only n = 6 (mod 12) is proven."""
    if not basis_exponents(fam, n):
        raise ValueError(f"family {fam.name} has no members of degree {n}")
    if fam.name == "type1":
        return Bound(2 * ((n - 4) // 8) + 2, True)
    if fam.name == "type4":
        return Bound(2 * ((n - 3) // 6) + 2, True)
    if fam.name == "q43":
        return Bound(2 * (n // 12) + 2, True)
    if fam.name == "q43-odd":
        return Bound(2 * ((n - 6) // 12) + 2, n % 12 == 6)
    if fam.name == "ozeki":
        return Bound(4 * ((n - 12) // 24) + 4, True)
    raise ValueError(f"no bound for family {fam.name}")


def classical_bound(name: str, n: int) -> int:
    """Reference bounds for the self-dual (not formal) enumerator rings."""
    if name == "type1":
        return 2 * (n // 8) + 2
    if name == "type4":
        return 2 * (n // 6) + 2
    raise ValueError(f"no classical bound for {name!r}")


_EXTREMAL_CACHE: dict[tuple[str, int], HomPoly] = {}


def extremal(fam: FamilySpec, n: int) -> HomPoly:
    """The unique monic member with all weights below the family bound cancelled.

    Solves the exact cancellation system A_i = 0 for 1 <= i < d_max and
    asserts that the solution space is one-dimensional, that it can be made
    monic, and that the coefficient at the bound itself is nonzero.
    """
    key = (fam.name, n)
    cached = _EXTREMAL_CACHE.get(key)
    if cached is not None:
        return cached
    elems = basis(fam, n)
    if not elems:
        raise ValueError(f"family {fam.name} has no members of degree {n}")
    d_max = bound(fam, n).d_max
    rows = [[b.coeffs[i] for b in elems] for i in range(1, d_max)]
    kernel = linalg.nullspace(rows, len(elems))
    if len(kernel) != 1:
        raise ExtremalConstructionError(
            f"{fam.name} degree {n}: cancellation space has dimension "
            f"{len(kernel)}, expected 1"
        )
    coeffs = kernel[0]
    lead = sum(coeffs)  # every basis product is monic in x^n
    if lead == 0:
        raise ExtremalConstructionError(
            f"{fam.name} degree {n}: cancellation space is not monic-normalisable"
        )
    w = HomPoly.zero(n)
    for cj, b in zip(coeffs, elems):
        if cj:
            w = w + b * (cj / lead)
    if not w.coeffs[d_max]:
        raise ExtremalConstructionError(
            f"{fam.name} degree {n}: coefficient vanishes at the bound d = {d_max}"
        )
    _EXTREMAL_CACHE[key] = w
    return w


def member_with_min_weight(fam: FamilySpec, n: int, d_target: int, rng) -> HomPoly | None:
    """A random monic member with A_i = 0 below d_target and A_(d_target) != 0.

    Used by the randomized theorem suites; returns None when the degree
    cannot host such a member.  Deterministic for a seeded rng.
    """
    elems = basis(fam, n)
    if not elems:
        return None
    rows = [[b.coeffs[i] for b in elems] for i in range(1, d_target)]
    kernel = linalg.nullspace(rows, len(elems))
    if not kernel:
        return None
    for _ in range(32):
        coeffs = [Fraction(0)] * len(elems)
        for vec in kernel:
            c = Fraction(rng.randint(-9, 9))
            coeffs = [a + c * v for a, v in zip(coeffs, vec)]
        lead = sum(coeffs)
        if lead == 0:
            continue
        w = HomPoly.zero(n)
        for cj, b in zip(coeffs, elems):
            if cj:
                w = w + b * (cj / lead)
        if w.coeffs[d_target]:
            return w
    return None


# -- membership predicate -----------------------------------------------------------


@dataclass(frozen=True)
class FweResult:
    ok: bool
    sign: int | None
    profile: WeightProfile | None
    reason: str


def is_fwe(f: HomPoly, q, c: int) -> FweResult:
    """Check the formal-weight-enumerator property with divisibility by c.

    True when f is monic of the standard form, transforms with sign -1, every
    nonzero weight is a multiple of c, and d <= n/2 + 1.
    """
    q = Fraction(q)
    try:
        profile = weight_profile(f, q)
    except ValueError as exc:
        return FweResult(False, None, None, str(exc))
    sign = transform_sign(f, q)
    if sign != -1:
        return FweResult(False, sign, profile, f"transform sign is {sign}, not -1")
    if profile.divisibility % c:
        return FweResult(
            False, sign, profile, f"weights are not divisible by {c}"
        )
    if 2 * profile.d > f.degree + 2:
        return FweResult(False, sign, profile, "d exceeds n/2 + 1")
    return FweResult(True, sign, profile, "")


# -- Buermann-Lagrange coefficient oracle ----------------------------------------------


def _inverse_power_series(alpha: int, k: int, terms: int) -> list[Fraction]:
    """Series prefix of (x - alpha)^(-k) at x = 0 (k >= 1, alpha != 0)."""
    sign = 1 if k % 2 == 0 else -1
    a = Fraction(alpha)
    out = []
    for j in range(terms):
        out.append(sign * comb(k - 1 + j, j) * a ** (-k - j))
    return out


def _poly_series(coeffs: list[Fraction], terms: int) -> list[Fraction]:
    out = list(coeffs[:terms])
    out += [Fraction(0)] * (terms - len(out))
    return out


def _series_mul(p, q, terms):
    out = [Fraction(0)] * terms
    for i, a in enumerate(p[:terms]):
        if a:
            for j, b in enumerate(q[: terms - i]):
                if b:
                    out[i + j] += a * b
    return out


def burmann_coefficient(fam: FamilySpec, mu: int, nu: int | None = None) -> Fraction:
    """First uncancelled weight coefficient A_(2*mu+2) from the series formula.

    For the invariant q = 4/3 family the degree is n = 2(6*mu + nu) and the
    value is always positive; for the q = 4/3 formal-weight-enumerator family
    the degree is n = 12*mu + 6 and the value is always negative.
    """
    terms = mu + 1
    if fam.name == "q43":
        if nu is None or not (0 <= nu <= 5) or mu < 0 or (mu, nu) == (0, 0):
            raise ValueError("q43 oracle needs mu >= 0, 0 <= nu <= 5, (mu, nu) != (0, 0)")
        k = 2 * mu + 2
        # (1 + x/3)^(5 - nu) is a polynomial
        top = [comb(5 - nu, j) * Fraction(1, 3**j) for j in range(5 - nu + 1)]
        series = _poly_series(top, terms)
        series = _series_mul(series, _inverse_power_series(1, k, terms), terms)
        series = _series_mul(series, _inverse_power_series(9, k, terms), terms)
        deriv = series[mu] * factorial(mu)
        value = Fraction(9 ** k * (6 * mu + nu), 3 * factorial(mu + 1)) * deriv
        if value <= 0:
            raise AssertionError("q43 coefficient lost its positive sign contract")
        return value
    if fam.name == "q43-odd":
        if mu < 2:
            raise ValueError("q43-odd oracle needs mu >= 2")
        k = 2 * mu + 2
        top = [Fraction(5), Fraction(-10, 3), Fraction(1, 9)]
        series = _poly_series(top, terms)
        series = _series_mul(series, _inverse_power_series(1, k, terms), terms)
        series = _series_mul(series, _inverse_power_series(9, k, terms), terms)
        deriv = series[mu] * factorial(mu)
        value = -Fraction(9 ** k * (2 * mu + 1), factorial(mu + 1)) * deriv
        if value >= 0:
            raise AssertionError("q43-odd coefficient lost its negative sign contract")
        return value
    raise ValueError("the coefficient oracle exists for the q = 4/3 families only")
