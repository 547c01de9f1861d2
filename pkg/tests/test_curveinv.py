"""Curve-germ invariants: multiplicity, branch count, delta, Milnor numbers."""

from __future__ import annotations

import math
import random

import pytest

from equicurve.curveinv import (
    BranchParam,
    CurveInvariants,
    CurvePresentation,
    branch_multiplicity,
    curve_multiplicity,
    delta_reduced,
    invariants,
    semigroup_delta_oracle,
)
from equicurve.errors import ComputationError, InternalCheckError
from equicurve.gb import Ideal
from equicurve.localdim import PrimaryDecomposition
from equicurve.poly import VarSet, parse_poly

U = VarSet(("u",))
XYZ = VarSet(("x", "y", "z"))


def branch(*comps):
    return BranchParam([parse_poly(c, U) for c in comps])


def I(*gens, ring=XYZ):
    return Ideal([parse_poly(g, ring) for g in gens], ring)


class TestBranchParam:
    def test_rejects_zero_branch(self):
        with pytest.raises(ComputationError):
            branch("0", "0")

    def test_rejects_off_origin(self):
        with pytest.raises(ComputationError):
            branch("1 + u", "u")

    def test_u_order_and_multiplicity(self):
        b = branch("u^3", "u^4", "0")
        assert b.u_order() == 3
        assert branch_multiplicity(b) == 3

    def test_exponent_gcd(self):
        assert branch("u^2", "u^4").exponent_gcd() == 2
        assert branch("u^2", "u^3").exponent_gcd() == 1

    def test_curve_multiplicity_adds_branches(self):
        C = CurvePresentation([branch("u", "0"), branch("0", "u"), branch("u", "u")])
        assert curve_multiplicity(C) == 3

    def test_mismatched_ambient_dims_rejected(self):
        with pytest.raises(ComputationError):
            CurvePresentation([branch("u"), branch("u", "0")])


class TestSemigroupOracle:
    def test_cusp(self):
        assert semigroup_delta_oracle(branch("u^2", "u^3")) == 1

    def test_3_4(self):
        assert semigroup_delta_oracle(branch("u^3", "u^4")) == 3

    def test_smooth(self):
        assert semigroup_delta_oracle(branch("u", "u^5")) == 0

    def test_two_generator_formula(self):
        # gaps of <p, q> for coprime p, q is (p-1)(q-1)/2
        for p, q in ((2, 5), (3, 5), (3, 7), (4, 9), (5, 6)):
            assert semigroup_delta_oracle(
                branch(f"u^{p}", f"u^{q}")
            ) == (p - 1) * (q - 1) // 2

    def test_rejects_non_normalization(self):
        with pytest.raises(ComputationError):
            semigroup_delta_oracle(branch("u^2", "u^4"))

    def test_rejects_non_monomial(self):
        with pytest.raises(ComputationError):
            semigroup_delta_oracle(branch("u^2 + u^3", "u^5"))


class TestDeltaReduced:
    def test_plane_cusp(self):
        assert delta_reduced([branch("u^2", "u^3")]) == 1

    def test_space_cusp(self):
        assert delta_reduced([branch("u^3", "u^4", "0")]) == 3

    def test_smooth_branch(self):
        assert delta_reduced([branch("u", "0", "0")]) == 0

    def test_unit_tangent_coordinate_smooths(self):
        # a degree-one coordinate makes the branch smooth regardless of the rest
        assert delta_reduced([branch("u^3", "u^4", "2*u")]) == 0

    def test_monomial_curve_3_4_5(self):
        assert delta_reduced([branch("u^3", "u^4", "u^5")]) == 2

    def test_high_conductor(self):
        assert delta_reduced([branch("u^3", "u^11")]) == 10

    def test_coordinate_change_invariance(self):
        assert delta_reduced([branch("u^2 + u^3", "u^3 - u^2")]) == delta_reduced(
            [branch("u^2", "u^3")]
        )

    def test_two_transverse_lines(self):
        assert delta_reduced([branch("u", "0"), branch("0", "u")]) == 1

    def test_five_concurrent_lines(self):
        lines = [
            branch("u", "0", "0", "0", "0"),
            branch("0", "u", "0", "0", "0"),
            branch("u", "-u", "0", "0", "0"),
            branch("0", "0", "u", "0", "0"),
            branch("0", "0", "0", "0", "u"),
        ]
        assert delta_reduced(lines) == 5

    def test_rejects_repeated_branch(self):
        with pytest.raises(ComputationError):
            delta_reduced([branch("u^2", "u^3"), branch("u^2", "u^3")])

    def test_rejects_non_normalization(self):
        with pytest.raises(ComputationError):
            delta_reduced([branch("u^2", "u^4")])

    def test_matches_oracle_on_random_monomial_branches(self):
        rng = random.Random(11)
        done = 0
        while done < 15:
            a = rng.randint(2, 7)
            b = rng.randint(a + 1, 12)
            if math.gcd(a, b) != 1:
                continue
            br = branch(f"u^{a}", f"u^{b}")
            assert delta_reduced([br], jet_order=2 * (a - 1) * (b - 1) + 8) == (
                semigroup_delta_oracle(br)
            )
            done += 1


class TestInvariants:
    def test_identity_enforcement(self):
        with pytest.raises(InternalCheckError):
            CurveInvariants(m=2, r=1, delta_red=1, epsilon=0, delta=1, mu_red=5, mu=5)

    def test_space_cusp_with_embedded_point(self):
        ideal = I("x*z", "y^3 - x^4", "y^2*z", "y*z^2", "z^3")
        D = PrimaryDecomposition.verified(
            ideal,
            [I("z", "y^3 - x^4")],
            embedded=I("x^4", "x*z", "y^2", "y*z^2", "z^3"),
        )
        C = CurvePresentation([branch("u^3", "u^4", "0")], ideal=ideal, decomposition=D)
        inv = invariants(C)
        assert inv == CurveInvariants(
            m=3, r=1, delta_red=3, epsilon=3, delta=0, mu_red=6, mu=0
        )

    def test_reduced_curve_defaults_epsilon_zero(self):
        inv = invariants(CurvePresentation([branch("u^2", "u^3")]))
        assert inv.epsilon == 0 and inv.mu == inv.mu_red == 2

    def test_milnor_formula_multibranch(self):
        # two transverse lines: delta 1, r 2, mu = 2*1 - 2 + 1 = 1
        inv = invariants(CurvePresentation([branch("u", "0"), branch("0", "u")]))
        assert (inv.delta_red, inv.r, inv.mu_red) == (1, 2, 1)

    def test_decomposition_without_ideal_rejected(self):
        ideal = I("z", "y^3 - x^4")
        D = PrimaryDecomposition.verified(ideal, [ideal])
        C = CurvePresentation([branch("u^3", "u^4", "0")], decomposition=D)
        with pytest.raises(ComputationError):
            invariants(C)
