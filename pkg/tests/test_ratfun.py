"""Exact polynomial and rational-function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxgrowth.ratfun import (IntPoly, RatFun, expand, monomial_shift,
                              poly_gcd, poly_exact_div, poly_divmod,
                              factored_den, poly_str)


coeffs = st.lists(st.integers(-9, 9), max_size=8)
polys = coeffs.map(lambda c: IntPoly(tuple(c)))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestIntPoly:
    def test_basics(self):
        p = IntPoly((1, 2, 0, 3))
        assert p.degree == 3
        assert p[0] == 1 and p[1] == 2 and p[5] == 0
        assert p(2) == 1 + 4 + 24
        assert IntPoly((0, 0)).is_zero()
        assert IntPoly.t_power(3) == IntPoly((0, 0, 0, 1))
        assert IntPoly.one_minus_t(2) == IntPoly((1, 0, -1))

    def test_trailing_zeros_trimmed(self):
        assert IntPoly((1, 0, 0)) == IntPoly((1,))
        assert hash(IntPoly((1, 0))) == hash(IntPoly((1,)))

    @given(polys, polys, polys)
    @settings(max_examples=150, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + IntPoly.zero() == a
        assert a * IntPoly.one() == a
        assert a - a == IntPoly.zero()

    @given(polys, st.integers(0, 5))
    @settings(max_examples=60, deadline=None)
    def test_shift_is_monomial_mult(self, a, k):
        assert a.shift(k) == a * IntPoly.t_power(k)

    @given(polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_divmod(self, a, b):
        q, r = poly_divmod(a, b)
        n = max(a.degree, b.degree + len(q)) + 1
        for x in [Fraction(1, 3), Fraction(-2), Fraction(5, 7)]:
            qa = sum(c * x ** i for i, c in enumerate(q))
            ra = sum(c * x ** i for i, c in enumerate(r))
            assert a(x) == qa * b(x) + ra

    @given(polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_gcd_divides(self, a, b):
        g = poly_gcd(a, b)
        if a.is_zero() and b.is_zero():
            return
        poly_exact_div(a * b, g)          # raises on failure
        if not a.is_zero():
            poly_exact_div(a, g)
        if not b.is_zero():
            poly_exact_div(b, g)

    def test_exact_div_raises(self):
        with pytest.raises(ValueError):
            poly_exact_div(IntPoly((1, 1)), IntPoly((0, 1)))


class TestRatFun:
    def test_canonical_form(self):
        # (t^2 - 1)/(t - 1) reduces to t + 1
        r = RatFun(IntPoly((-1, 0, 1)), IntPoly((-1, 1)))
        assert r.is_polynomial()
        assert r.as_poly() == IntPoly((1, 1))
        # denominator kept with positive lowest coefficient
        r = RatFun(IntPoly((1,)), IntPoly((-1, -1)))
        assert r.den.constant_term() > 0

    def test_content_reduced(self):
        r = RatFun(IntPoly((2, 4)), IntPoly((6,)))
        assert r == RatFun(IntPoly((1, 2)), IntPoly((3,)))

    @given(polys, nonzero_polys, polys, nonzero_polys)
    @settings(max_examples=80, deadline=None)
    def test_field_ops(self, an, ad, bn, bd):
        a = RatFun(an, ad)
        b = RatFun(bn, bd)
        x = Fraction(3, 7)
        def val(r):
            num = sum(c * x ** i for i, c in enumerate(r.num.coeffs))
            den = sum(c * x ** i for i, c in enumerate(r.den.coeffs))
            return Fraction(num, den)
        assert val(a + b) == val(a) + val(b)
        assert val(a * b) == val(a) * val(b)
        assert val(a - b) == val(a) - val(b)
        if not b.is_zero():
            assert val(a / b) == val(a) / val(b)

    @given(polys, nonzero_polys, nonzero_polys)
    @settings(max_examples=60, deadline=None)
    def test_equality_invariant_under_common_factor(self, n, d, c):
        assert RatFun(n, d) == RatFun(n * c, d * c)

    def test_expand_geometric(self):
        r = RatFun(IntPoly.one(), IntPoly.one_minus_t(1))
        assert expand(r, 5) == [1] * 6
        r = RatFun(IntPoly.one(), IntPoly.one_minus_t(3))
        assert expand(r, 7) == [1, 0, 0, 1, 0, 0, 1, 0]

    @given(polys, nonzero_polys.filter(lambda p: p.constant_term() != 0))
    @settings(max_examples=80, deadline=None)
    def test_expand_matches_product(self, n, d):
        r = RatFun(n, d)
        cs = expand(r, 8)
        # multiply the truncated series back by the denominator
        for k in range(min(8, 4) + 1):
            acc = sum(Fraction(r.den[i]) * cs[k - i]
                      for i in range(0, k + 1))
            assert acc == r.num[k]

    def test_expand_pole_at_zero(self):
        with pytest.raises(ValueError):
            expand(RatFun(IntPoly.one(), IntPoly((0, 1))), 3)

    def test_monomial_shift(self):
        r = RatFun(IntPoly.one(), IntPoly.one_minus_t(2))
        assert monomial_shift(r, 3) == RatFun(IntPoly.t_power(3),
                                              IntPoly.one_minus_t(2))
        assert monomial_shift(monomial_shift(r, 3), -3) == r

    def test_json_round_trip(self):
        r = RatFun(IntPoly((0, 1, 1)), IntPoly((1, 0, 0, -1)))
        assert RatFun.from_json(r.to_json()) == r
        obj = r.to_json()
        assert all(isinstance(c, str) for c in obj["num"] + obj["den"])

    def test_factored_den_product(self):
        den = (IntPoly.one_minus_t(6) * IntPoly.one_minus_t(10)
               * IntPoly.one_minus_t(2))
        rest, ks = factored_den(den)
        assert rest == IntPoly.one()
        assert sorted(ks) == [2, 6, 10]

    def test_str_and_latex(self):
        r = RatFun(IntPoly.t_power(6), IntPoly.one_minus_t(6))
        assert "t^6" in str(r)
        assert r.to_latex() == r"\frac{t^6}{(1 - t^6)}"
        assert poly_str(IntPoly((1, -2, 1))) == "1 - 2*t + t^2"
