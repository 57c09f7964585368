from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from foresthopf.coeffs import (GaussianRational, GR_ZERO, GR_ONE, GR_I,
                               parse_gaussian, MultiPoly, FreqExp, LinComb)
from foresthopf.errors import ParseError


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=10)
gaussians = st.builds(GaussianRational, rationals, rationals)


class TestGaussianRational:
    def test_field_ops(self):
        a = GaussianRational(Fraction(1, 2), Fraction(-3))
        b = GaussianRational(2, Fraction(1, 3))
        assert a + b == GaussianRational(Fraction(5, 2), Fraction(-8, 3))
        assert a * GR_I == GaussianRational(3, Fraction(1, 2))
        assert (a * b) / b == a
        assert a - a == GR_ZERO
        assert GR_I * GR_I == -GR_ONE
        assert GR_I ** 4 == GR_ONE
        assert GR_I ** -1 == -GR_I
        assert b ** 0 == GR_ONE

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GR_ONE / GR_ZERO

    @given(gaussians, gaussians)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(gaussians)
    def test_inverse(self, a):
        if a:
            assert a / a == GR_ONE

    def test_str(self):
        assert str(GaussianRational(Fraction(1, 2), Fraction(3, 4))) \
            == "1/2+3/4*i"
        assert str(GR_I) == "i"
        assert str(-GR_I) == "-i"
        assert str(GaussianRational(-2, 1)) == "-2+i"
        assert str(GR_ZERO) == "0"
        assert str(GaussianRational(5)) == "5"

    def test_parse_roundtrip(self):
        for text in ["1/2+3/4*i", "i", "-i", "-2+i", "0", "5", "-7/3-2*i"]:
            assert str(parse_gaussian(text)) == text
        with pytest.raises(ParseError):
            parse_gaussian("1+j")

    def test_int_coercion(self):
        assert 2 * GR_I == GaussianRational(0, 2)
        assert GR_ONE + Fraction(1, 2) == GaussianRational(Fraction(3, 2))


class TestMultiPoly:
    def test_ring_ops(self):
        ts = ("t", "s")
        t = MultiPoly.var(ts, "t")
        s = MultiPoly.var(ts, "s")
        p = (t - s) ** 2
        assert p == t * t - 2 * t * s + s * s
        assert str(p) == "t^2-2*t*s+s^2"

    def test_mismatched_vars(self):
        t = MultiPoly.var(("t",), "t")
        s = MultiPoly.var(("s",), "s")
        with pytest.raises(ValueError):
            t + s

    def test_antiderivative_and_subst(self):
        xs = ("x", "s")
        x = MultiPoly.var(xs, "x")
        h = (3 * x ** 2).antiderivative("x")
        assert h == x ** 3
        assert h.subst_var("x", "s") == MultiPoly.var(xs, "s") ** 3

    def test_eval(self):
        ts = ("t", "s")
        p = MultiPoly.var(ts, "t") ** 2 - MultiPoly.var(ts, "s")
        assert p.eval({"t": Fraction(3), "s": Fraction(2)}) == 7

    def test_rename_and_embed(self):
        x = MultiPoly.var(("x",), "x")
        q = (x ** 2).with_vars(("x", "s"))
        assert q.vars == ("x", "s")
        r = q.rename_var("x", "u")
        assert r.vars == ("u", "s")

    def test_str_order(self):
        ts = ("t", "s")
        t, s = MultiPoly.var(ts, "t"), MultiPoly.var(ts, "s")
        p = s * s * MultiPoly.const(ts, Fraction(1, 2)) - t * s \
            + t * t * MultiPoly.const(ts, Fraction(1, 2))
        assert str(p) == "1/2*t^2-t*s+1/2*s^2"


class TestFreqExp:
    def test_algebra(self):
        e1 = FreqExp.exponential("t", 1)
        e2 = FreqExp.exponential("t", 2)
        assert e1 * e2 == FreqExp.exponential("t", 3)
        assert e1 * FreqExp.exponential("s", -1) \
            == FreqExp({(Fraction(1), Fraction(0), Fraction(-1)): GR_ONE})
        assert e1 - e1 == FreqExp.zero()
        assert FreqExp.one() * e1 == e1

    def test_scalar(self):
        e = FreqExp.exponential("u", Fraction(1, 2))
        assert 2 * e == e + e
        assert GR_I * e == FreqExp.exponential("u", Fraction(1, 2), GR_I)

    def test_str(self):
        v = FreqExp.exponential("t", 3, -GR_I)
        assert str(v) == "(-i)·exp(i(3·t))"
        w = FreqExp.exponential("t", 1) - FreqExp.exponential("s", 2)
        assert str(w) == "(-1)·exp(i(2·s))+(1)·exp(i(1·t))"
        assert str(FreqExp.zero()) == "0"
        assert str(FreqExp.one()) == "(1)"


class TestLinComb:
    def test_normalization(self):
        lc = LinComb([("a", 1), ("b", 2), ("a", -1)])
        assert lc.coeff("a") == 0
        assert lc.support() == {"b"}

    def test_ops(self):
        a = LinComb.of("x") + 2 * LinComb.of("y")
        b = a - LinComb.of("y")
        assert b.coeff("y") == 1
        assert (0 * a) == LinComb.zero()

    def test_apply(self):
        a = LinComb.of("x", 2)
        doubled = a.apply(lambda b: LinComb.of(b + b, 1))
        assert doubled == LinComb.of("xx", 2)

    def test_render(self):
        from foresthopf.perms import Perm
        lc = LinComb.of(Perm((2, 1)), 1) + LinComb.of(Perm((1, 2)), 1)
        assert str(lc) == "(12)+(21)"
        lc2 = LinComb.of(Perm((1, 2)), Fraction(1, 2)) - LinComb.of(Perm((2, 1)))
        assert str(lc2) == "1/2*(12)-(21)"
