import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fwenum.homopoly import (
    HomPoly,
    Mat2,
    MixedExtensionError,
    act_matrix,
    diff_op,
    divide_exact,
    format_poly,
    format_poly_latex,
    macwilliams,
    parse_poly,
    pochhammer,
    sigma_q,
    transform_sign,
    weight_profile,
)
from fwenum.scalar import QuadElem
from fwenum.zeta import verify_duursma_lemma

fractions = st.fractions(min_value=-9, max_value=9, max_denominator=8)


@st.composite
def hom_polys(draw, max_degree=6, min_degree=0):
    n = draw(st.integers(min_degree, max_degree))
    return HomPoly(n, [draw(fractions) for _ in range(n + 1)])


@st.composite
def invertible_mats(draw):
    m = Mat2(*[draw(fractions) for _ in range(4)])
    if not m.det():
        # force det = 1 while keeping the off-diagonal entries
        m = Mat2(1, m.b, m.c, 1 + m.b * m.c)
    return m


class TestParsePrint:
    @pytest.mark.parametrize("text", [
        "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12",
        "x^2 + 1/3*y^2",
        "x^6 - 5*x^4*y^2 + 5/3*x^2*y^4 - 1/27*y^6",
        "x^3 - 9*x*y^2",
        "7",
        "x*y",
        "-x + y",
    ])
    def test_roundtrip(self, text):
        poly = parse_poly(text)
        assert parse_poly(format_poly(poly)) == poly

    @given(hom_polys().filter(lambda f: not f.is_zero()))
    def test_roundtrip_random(self, f):
        # the zero polynomial prints as "0" and loses its degree by design
        assert parse_poly(format_poly(f)) == f

    def test_mixed_degree_rejected(self):
        with pytest.raises(ValueError):
            parse_poly("x^2 + y")

    def test_json_roundtrip(self):
        f = parse_poly("x^2 + 1/3*y^2")
        obj = json.loads(f.to_json())
        assert obj == {"degree": 2, "coeffs": ["1", "0", "1/3"]}
        assert HomPoly.from_json(f.to_json()) == f

    def test_latex(self):
        f = parse_poly("x^12 + 55/9*x^8*y^4")
        assert format_poly_latex(f) == "x^{12} + \\frac{55}{9}x^{8}y^{4}"

    def test_zero_and_degree_mismatch(self):
        assert format_poly(HomPoly.zero(4)) == "0"
        with pytest.raises(ValueError):
            HomPoly(2, [1, 2])


class TestActMatrix:
    def test_phi4_antiinvariant_under_sigma2(self, printed):
        assert act_matrix(printed["phi4"], sigma_q(2)) == -printed["phi4"]

    def test_identity(self, printed):
        assert act_matrix(printed["w11"], Mat2.identity()) == printed["w11"]

    def test_hamming_invariant(self, printed):
        assert act_matrix(printed["wh8"], sigma_q(2)) == printed["wh8"]

    @given(hom_polys(max_degree=5), invertible_mats(), invertible_mats())
    def test_composition(self, f, s, r):
        assert act_matrix(act_matrix(f, s), r) == act_matrix(f, s @ r)

    @given(hom_polys(max_degree=5), hom_polys(max_degree=5), invertible_mats())
    def test_linearity(self, f, g, s):
        g = HomPoly(f.degree, (list(g.coeffs) + [Fraction(0)] * 9)[: f.degree + 1])
        assert act_matrix(f + g, s) == act_matrix(f, s) + act_matrix(g, s)

    def test_mixed_extension_rejected(self):
        f = HomPoly(1, [QuadElem(0, 1, 3), Fraction(1)])
        with pytest.raises(MixedExtensionError):
            act_matrix(f, sigma_q(2))  # sqrt(2) entries against sqrt(3) coeffs


class TestMacwilliams:
    def test_phi3(self, printed):
        assert macwilliams(printed["phi3"], 4) == -printed["phi3"]

    @pytest.mark.parametrize("q", [2, 4, Fraction(4, 3), Fraction(9, 5)])
    def test_w2q_invariant(self, q):
        w2q = HomPoly(2, [1, 0, Fraction(q) - 1])
        assert macwilliams(w2q, q) == w2q

    def test_phi6(self, printed):
        assert macwilliams(printed["phi6"], Fraction(4, 3)) == -printed["phi6"]

    @given(hom_polys(max_degree=7), st.sampled_from([2, 4, Fraction(4, 3)]))
    def test_involution(self, f, q):
        assert macwilliams(macwilliams(f, q), q) == f

    def test_odd_degree_irrational_then_sign_flag(self, printed):
        g = macwilliams(parse_poly("x^5 + y^5"), 2)
        assert not g.is_rational()
        assert transform_sign(printed["w12"], 2) == -1
        assert transform_sign(printed["wh8"], 2) == 1
        assert transform_sign(parse_poly("x^4 + y^4"), 2) is None

    def test_invalid_q(self):
        with pytest.raises(ValueError):
            macwilliams(parse_poly("x^2 + y^2"), 1)


class TestDiffOp:
    def test_printed_w12_identity(self, printed):
        p = parse_poly("x*y^3 - x^3*y")
        a = parse_poly("x^3*y - x*y^3")
        assert diff_op(p, printed["w12"]) == a * printed["phi4"] * (-6336)

    def test_single_partial(self):
        n = 7
        assert diff_op(parse_poly("x"), HomPoly.monomial(n, 0)) == \
            HomPoly.monomial(n - 1, 0) * n

    def test_printed_w11_identity(self, printed):
        p = parse_poly("y^3 - 9*x^2*y")
        a = parse_poly("x^2*y - y^3")
        w24 = HomPoly(2, [1, 0, 3])
        assert diff_op(p, printed["w11"]) == a * printed["phi3"] * w24 * (-720)

    @given(hom_polys(max_degree=2), hom_polys(max_degree=2),
           hom_polys(min_degree=4, max_degree=7))
    def test_operator_factorisation(self, p, r, f):
        if p.degree + r.degree > f.degree:
            return
        assert diff_op(p * r, f) == diff_op(p, diff_op(r, f))

    @given(hom_polys(max_degree=2), hom_polys(min_degree=2, max_degree=6),
           hom_polys(min_degree=2, max_degree=6))
    def test_linearity(self, p, f, g):
        g = HomPoly(f.degree, (list(g.coeffs) + [Fraction(0)] * 9)[: f.degree + 1])
        assert diff_op(p, f + g) == diff_op(p, f) + diff_op(p, g)

    def test_degree_contract(self):
        with pytest.raises(ValueError):
            diff_op(parse_poly("x^3"), parse_poly("x^2"))
        out = diff_op(parse_poly("y^2"), parse_poly("x^2"))
        assert out.is_zero() and out.degree == 0

    @given(hom_polys(max_degree=3).filter(lambda p: not p.is_zero()),
           hom_polys(min_degree=3, max_degree=7), invertible_mats())
    def test_duursma_lemma_random(self, p, big_a, sigma):
        if p.degree > big_a.degree:
            return
        assert verify_duursma_lemma(p, big_a, sigma)


class TestDivideExact:
    def test_constructed_product(self):
        assert divide_exact(parse_poly("x*y"), parse_poly("x^3*y + x*y^3")) == \
            parse_poly("x^2 + y^2")

    def test_not_divisible(self):
        assert divide_exact(parse_poly("x^2"), parse_poly("x^2 + y^2")) is None

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divide_exact(HomPoly.zero(1), parse_poly("x^2 + y^2"))

    @given(hom_polys(max_degree=4).filter(lambda p: not p.is_zero()),
           hom_polys(max_degree=4))
    def test_roundtrip(self, a, g):
        f = a * g
        got = divide_exact(a, f)
        assert got is not None and a * got == f

    @given(hom_polys(max_degree=3).filter(lambda p: not p.is_zero()),
           hom_polys(min_degree=4, max_degree=7))
    def test_verdict_matches_remainder(self, a, f):
        if a.degree > f.degree:
            return
        got = divide_exact(a, f)
        if got is not None:
            assert a * got == f


class TestWeightProfile:
    def test_w12(self, printed):
        p = weight_profile(printed["w12"], 2)
        assert (p.d, p.d_perp, p.divisibility) == (4, 4, 4)

    def test_w11(self, printed):
        p = weight_profile(printed["w11"], 4)
        assert p.d == 4 and p.divisibility == 2

    def test_two_term(self):
        n = 9
        p = weight_profile(parse_poly("x^9 + y^9"), 2)
        assert p.d == n and p.divisibility == n

    def test_errors(self):
        with pytest.raises(ValueError):
            weight_profile(HomPoly.zero(3), 2)
        with pytest.raises(ValueError):
            weight_profile(HomPoly.monomial(5, 0), 2)  # bare x^n
        with pytest.raises(ValueError):
            weight_profile(parse_poly("2*x^2 + y^2"), 2)  # not monic


class TestPochhammer:
    @pytest.mark.parametrize("a,n,expected", [
        (2, 0, 1),
        (2, 3, 24),
        (2, 4, 120),  # (d-2)_3 factor at d = 4 times the next step
        (Fraction(1, 2), 2, Fraction(3, 4)),
    ])
    def test_values(self, a, n, expected):
        assert pochhammer(a, n) == expected

    def test_extremal_factor(self):
        d = 4
        assert pochhammer(d - 2, 3) == 24

    def test_negative_length(self):
        with pytest.raises(ValueError):
            pochhammer(2, -1)
