"""Exact integer polynomial arithmetic."""
import json

import pytest
from hypothesis import given, settings, strategies as st

from subcount.polyring import (
    IntPoly, NonExactDivision, ZeroPolynomial, ZERO, ONE, P, geometric,
)


def poly(*ascending):
    return IntPoly(ascending)


polys = st.builds(IntPoly, st.lists(st.integers(-9, 9), max_size=8))
nonzero_polys = polys.filter(lambda f: not f.is_zero)


class TestConstruction:
    def test_trailing_zeros_dropped(self):
        assert poly(1, 2, 0, 0) == poly(1, 2)

    def test_zero_and_one(self):
        assert IntPoly.zero() == ZERO == poly()
        assert IntPoly.one() == ONE == poly(1)
        assert not ZERO
        assert ONE

    def test_term(self):
        assert IntPoly.term(3, 2) == poly(0, 0, 3)
        assert IntPoly.term(0, 5) == ZERO

    def test_rejects_non_int_coeffs(self):
        with pytest.raises(TypeError):
            IntPoly((1.5,))
        with pytest.raises(TypeError):
            IntPoly((True,))

    def test_p_constant(self):
        assert P == poly(0, 1)
        assert P.eval_at(7) == 7


class TestDegreeAndLeading:
    def test_degree(self):
        assert poly(1, 2, 3).degree() == 2
        assert ONE.degree() == 0

    def test_zero_has_no_degree(self):
        with pytest.raises(ZeroPolynomial):
            ZERO.degree()
        with pytest.raises(ZeroPolynomial):
            ZERO.leading_coeff()

    def test_leading_coeff(self):
        assert poly(4, 0, -7).leading_coeff() == -7


class TestArithmetic:
    def test_mixed_int_operands(self):
        assert poly(1, 1) + 2 == poly(3, 1)
        assert 2 + poly(1, 1) == poly(3, 1)
        assert 3 * poly(0, 1) == poly(0, 3)
        assert 1 - poly(0, 1) == poly(1, -1)

    def test_pow(self):
        assert (P + 1) ** 2 == poly(1, 2, 1)
        assert poly(2) ** 0 == ONE
        with pytest.raises(ValueError):
            P ** -1

    def test_shift(self):
        assert poly(1, 1).shift(2) == poly(0, 0, 1, 1)
        assert ZERO.shift(3) == ZERO
        with pytest.raises(ValueError):
            P.shift(-1)

    @given(polys, polys)
    def test_add_commutes(self, f, g):
        assert f + g == g + f

    @given(polys, polys, polys)
    def test_mul_distributes(self, f, g, h):
        assert f * (g + h) == f * g + f * h

    @given(polys, polys)
    def test_mul_commutes(self, f, g):
        assert f * g == g * f

    @given(polys)
    def test_identities(self, f):
        assert f + ZERO == f
        assert f * ONE == f
        assert f - f == ZERO

    @given(polys, polys, st.integers(-4, 4))
    def test_eval_is_a_homomorphism(self, f, g, x):
        assert (f + g).eval_at(x) == f.eval_at(x) + g.eval_at(x)
        assert (f * g).eval_at(x) == f.eval_at(x) * g.eval_at(x)


class TestDivision:
    def test_exact_div_product(self):
        # (p^5 - p^3 - p^2 + 1) / (p^3 - p^2 - p + 1) = p^2 + p + 1
        num = poly(1, 0, -1, -1, 0, 1)
        den = poly(1, -1, -1, 1)
        assert num.exact_div(den) == poly(1, 1, 1)

    def test_non_exact_division_carries_diagnostics(self):
        with pytest.raises(NonExactDivision) as info:
            poly(1, 1, 1).exact_div(poly(0, 1))
        err = info.value
        assert err.quotient * poly(0, 1) + err.remainder == poly(1, 1, 1)
        assert not err.remainder.is_zero

    def test_divide_by_zero(self):
        with pytest.raises(ZeroPolynomial):
            ONE.divmod(ZERO)

    def test_divmod_short_dividend(self):
        quo, rem = ONE.divmod(poly(1, 1))
        assert quo == ZERO and rem == ONE

    @given(polys, nonzero_polys)
    def test_divmod_reconstructs(self, f, g):
        quo, rem = f.divmod(g)
        assert quo * g + rem == f

    @given(polys, nonzero_polys)
    @settings(max_examples=60)
    def test_exact_div_inverts_mul(self, f, g):
        if f.is_zero:
            assert (f * g).exact_div(g) == ZERO
        else:
            assert (f * g).exact_div(g) == f


class TestEval:
    def test_spot_value(self):
        assert poly(1, 1, 2, 1).eval_at(2) == 19

    def test_geometric(self):
        assert geometric(3) == poly(1, 1, 1)
        assert geometric(0) == ZERO
        assert geometric(-2) == ZERO
        assert geometric(5).eval_at(2) == 31


class TestRendering:
    def test_text(self):
        assert poly(1, 1, 2, 1).text() == "p^3 + 2*p^2 + p + 1"
        assert poly(0, -1, 0, 3).text() == "3*p^3 - p"
        assert poly(-2).text() == "-2"
        assert ZERO.text() == "0"
        assert str(P) == "p"

    def test_json_round_trip(self):
        f = poly(1, 0, -3, 5)
        assert IntPoly.from_json(f.to_json()) == f
        assert ZERO.to_json() == []
        assert json.dumps(f.to_json()) == "[1, 0, -3, 5]"

    @given(polys)
    def test_json_round_trip_any(self, f):
        assert IntPoly.from_json(f.to_json()) == f


class TestHashing:
    def test_usable_as_dict_key(self):
        d = {poly(1, 1): "a"}
        assert d[poly(1, 1)] == "a"

    def test_int_equality(self):
        assert poly(5) == 5
        assert poly(5) != 6
        assert ZERO == 0
