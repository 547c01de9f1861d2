"""Groebner/standard bases and the ideal operations built on them."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equicurve.errors import ComputationError, RingMismatchError
from equicurve.gb import (
    Ideal,
    ecart,
    exact_divide,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_quotient,
    ideal_sum,
    normal_form,
    spoly,
    std_basis,
)
from equicurve.poly import DEGREVLEX, NEGDEGREVLEX, Polynomial, VarSet, parse_poly

XYZ = VarSet(("x", "y", "z"))
UT = VarSet(("u", "t"))


def P(s, ring=XYZ):
    return parse_poly(s, ring)


def I(*gens, ring=XYZ):
    return Ideal([parse_poly(g, ring) for g in gens], ring)


class TestBasics:
    def test_ideal_drops_zero_generators(self):
        assert len(I("x", "0").gens) == 1

    def test_mixed_rings_rejected(self):
        with pytest.raises(RingMismatchError):
            Ideal([P("x"), parse_poly("u", UT)])

    def test_ecart(self):
        f = P("x + y^3")
        assert ecart(f, NEGDEGREVLEX) == 2  # LM is x locally, top degree 3
        assert ecart(f, DEGREVLEX) == 0

    def test_spoly_cancels_leads(self):
        f, g = P("x^2 + y"), P("x*y + z")
        s = spoly(f, g, DEGREVLEX)
        lm = s.leading_monomial(DEGREVLEX)
        assert lm != (2, 1, 0)


class TestGlobalBasis:
    def test_principal(self):
        B = std_basis(I("x"), DEGREVLEX)
        assert [g.render() for g in B.basis] == ["x"]

    def test_membership_classic(self):
        # <x^2 - y, x*y - z> contains x*z - y^2
        J = I("x^2 - y", "x*y - z")
        assert ideal_contains(J, P("x*z - y^2"), DEGREVLEX)
        assert not ideal_contains(J, P("x"), DEGREVLEX)

    def test_nf_idempotent(self):
        B = std_basis(I("x^2 - y", "x*y - z"), DEGREVLEX)
        f = P("x^3 + y^3 + z")
        nf = B.normal_form(f)
        assert B.normal_form(nf) == nf

    def test_basis_deterministic(self):
        a = std_basis(I("y^3 - x^4", "x*z", "y*z"), DEGREVLEX)
        b = std_basis(I("y*z", "x*z", "y^3 - x^4"), DEGREVLEX)
        assert [g.render() for g in a.basis] == [g.render() for g in b.basis]


class TestLocalBasis:
    def test_unit_multiple_collapses(self):
        # locally u^3 + u^4 = u^3(1 + u) generates <u^3>
        B = std_basis(I("u^3 + u^4", ring=UT), NEGDEGREVLEX)
        assert B.contains(parse_poly("u^3", UT))

    def test_pullback_basis(self):
        B = std_basis(I("u^3", "u^4", "t*u", ring=UT), NEGDEGREVLEX)
        assert sorted(g.render() for g in B.basis) == ["u*t", "u^3"]

    def test_local_membership_cusp_relation(self):
        # y^3 reduces to x^4 modulo y^3 - x^4 under the local order
        R = VarSet(("x", "y"))
        B = std_basis(Ideal([parse_poly("y^3 - x^4", R)], R), NEGDEGREVLEX)
        assert B.normal_form(parse_poly("y^3", R)) == parse_poly("x^4", R)

    def test_local_nf_idempotent(self):
        B = std_basis(I("u^3", "t*u", ring=UT), NEGDEGREVLEX)
        f = parse_poly("u^2 + u^5 + t^2*u^3", UT)
        nf = B.normal_form(f)
        assert B.normal_form(nf) == nf


class TestIdealOps:
    def test_sum(self):
        s = ideal_sum(I("x"), I("y"))
        assert ideal_contains(s, P("x + y"), DEGREVLEX)

    def test_intersect_principal(self):
        J = ideal_intersect(I("x"), I("y"))
        assert ideal_equal(J, I("x*y"))

    def test_intersect_vs_sum_containment(self):
        A, B = I("x", "y^2"), I("y", "z")
        inter = ideal_intersect(A, B)
        for g in inter.gens:
            assert ideal_contains(A, g, DEGREVLEX)
            assert ideal_contains(B, g, DEGREVLEX)

    def test_decomposition_identity(self):
        # <z, y^3-x^4> meet <x^4, x*z, y^2, y*z^2, z^3> recovers the curve ideal
        lhs = ideal_intersect(
            I("z", "y^3 - x^4"), I("x^4", "x*z", "y^2", "y*z^2", "z^3")
        )
        rhs = I("x*z", "y^3 - x^4", "y^2*z", "y*z^2", "z^3")
        assert ideal_equal(lhs, rhs)

    def test_exact_divide(self):
        q = exact_divide(P("x^2*y + x*y^2"), P("x*y"))
        assert q == P("x + y")
        with pytest.raises(ComputationError):
            exact_divide(P("x^2 + y"), P("x"))

    def test_quotient_colon(self):
        # (<x*y, x*z> : x) = <y, z>
        q = ideal_quotient(I("x*y", "x*z"), P("x"))
        assert ideal_equal(q, I("y", "z"))

    def test_quotient_detects_zero_divisor(self):
        # t is a zero divisor mod <u^3, t*u>: (J : t) strictly contains J
        J = I("u^3", "t*u", ring=UT)
        q = ideal_quotient(J, parse_poly("t", UT))
        assert ideal_equal(q, I("u", ring=UT), NEGDEGREVLEX)

    def test_quotient_nzd_fixed_point(self):
        J = I("u^3", ring=UT)
        q = ideal_quotient(J, parse_poly("t", UT))
        assert ideal_equal(q, J, NEGDEGREVLEX)

    def test_equal_is_order_insensitive(self):
        A = I("x + y", "y")
        B = I("x", "y")
        assert ideal_equal(A, B)
        assert ideal_equal(A, B, NEGDEGREVLEX)


# -- randomized properties ----------------------------------------------------

small_polys = st.lists(
    st.sampled_from(
        ["x", "y", "z", "x^2", "x*y", "y^2 - x", "z^2 - x*y", "x + y", "y^3 - x^4"]
    ),
    min_size=1,
    max_size=3,
    unique=True,
)


@given(small_polys, small_polys)
@settings(max_examples=25, deadline=None)
def test_intersection_contained_in_both(gs, hs):
    A, B = I(*gs), I(*hs)
    inter = ideal_intersect(A, B)
    BA = std_basis(A, DEGREVLEX)
    BB = std_basis(B, DEGREVLEX)
    for g in inter.gens:
        assert BA.contains(g) and BB.contains(g)


@given(small_polys, st.sampled_from(["x", "y", "x*y", "x + y"]))
@settings(max_examples=25, deadline=None)
def test_quotient_reverses_multiplication(gs, fs):
    A = I(*gs)
    f = P(fs)
    q = ideal_quotient(A, f)
    BA = std_basis(A, DEGREVLEX)
    for g in q.gens:
        assert BA.contains(g * f)
