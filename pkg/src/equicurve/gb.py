"""Groebner bases (global orders), standard bases (local orders, Mora normal form),
and the ideal operations the invariant layer needs: sum, quotient, intersection,
equality and membership.

Intersections and quotients are always computed in the polynomial ring with a
global elimination order; local-order computations consume the results, which is
valid here because localization is flat and all inputs are polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ComputationError, InternalCheckError, RingMismatchError
from .poly import (
    DEGREVLEX,
    Elimination,
    MonomialOrder,
    Polynomial,
    VarSet,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
)

_REDUCTION_CAP = 200_000


class Ideal:
    """A generator list over a fixed ring; generators are stored as given."""

    __slots__ = ("gens", "ring")

    def __init__(self, gens, ring: VarSet | None = None):
        gens = [g for g in gens if not g.is_zero()]
        if ring is None:
            if not gens:
                raise ValueError("cannot infer ring of an empty ideal")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("ideal generators over mixed rings")
        self.gens = tuple(gens)
        self.ring = ring

    def __repr__(self):
        return f"Ideal({', '.join(g.render() for g in self.gens)})"


def ecart(f: Polynomial, order: MonomialOrder) -> int:
    """Degree spread between f and its leading monomial; drives Mora's reduction."""
    return f.total_degree() - sum(f.leading_monomial(order))


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = mon_lcm(lf, lg)
    cf, cg = f.terms[lf], g.terms[lg]
    return f.term_mul(mon_div(l, lf), 1 / cf) - g.term_mul(mon_div(l, lg), 1 / cg)


def _reduce_global(f: Polynomial, G, order: MonomialOrder) -> Polynomial:
    """Full multivariate division remainder under a global order."""
    remainder = Polynomial.zero(f.ring)
    h = f
    steps = 0
    while not h.is_zero():
        steps += 1
        if steps > _REDUCTION_CAP:
            raise InternalCheckError("global reduction exceeded iteration cap")
        lm = h.leading_monomial(order)
        for g in G:
            lg = g.leading_monomial(order)
            if mon_divides(lg, lm):
                c = h.terms[lm] / g.terms[lg]
                h = h - g.term_mul(mon_div(lm, lg), c)
                break
        else:
            c = h.terms[lm]
            remainder = remainder + Polynomial.monomial(f.ring, lm, c)
            h = h - Polynomial.monomial(f.ring, lm, c)
    return remainder


def _mora_weak_nf(f: Polynomial, G, order: MonomialOrder) -> Polynomial:
    """Mora's ecart-controlled weak normal form; zero iff f lies in the localized ideal."""
    h = f
    T = list(G)
    steps = 0
    while not h.is_zero():
        steps += 1
        if steps > _REDUCTION_CAP:
            raise InternalCheckError("Mora normal form exceeded iteration cap")
        lm = h.leading_monomial(order)
        candidates = [g for g in T if mon_divides(g.leading_monomial(order), lm)]
        if not candidates:
            return h
        g = min(candidates, key=lambda p: (ecart(p, order), order.key(p.leading_monomial(order))))
        if ecart(g, order) > ecart(h, order):
            T.append(h)
        lg = g.leading_monomial(order)
        c = h.terms[lm] / g.terms[lg]
        h = h - g.term_mul(mon_div(lm, lg), c)
    return h


def _weak_nf(f: Polynomial, G, order: MonomialOrder) -> Polynomial:
    if order.is_global:
        return _reduce_global(f, G, order)
    return _mora_weak_nf(f, G, order)


def _reduced_nf_local(f: Polynomial, G, order: MonomialOrder, cap=2000) -> Polynomial:
    """Tail-reduced normal form under a local order; bounded iteration because tail
    reduction need not terminate over power series."""
    result = Polynomial.zero(f.ring)
    h = f
    for _ in range(cap):
        h = _mora_weak_nf(h, G, order)
        if h.is_zero():
            return result
        lm = h.leading_monomial(order)
        lt = Polynomial.monomial(f.ring, lm, h.terms[lm])
        result = result + lt
        h = h - lt
    return result + h


class StandardBasis:
    """A computed basis (Groebner for global orders, standard for local) of an ideal."""

    __slots__ = ("ideal", "order", "basis", "lead_monomials")

    def __init__(self, ideal, order, basis):
        self.ideal = ideal
        self.order = order
        self.basis = tuple(basis)
        self.lead_monomials = tuple(g.leading_monomial(order) for g in self.basis)

    def normal_form(self, f: Polynomial, reduced: bool = True) -> Polynomial:
        if f.ring != self.ideal.ring:
            raise RingMismatchError("polynomial over a different ring than the basis")
        if f.is_zero():
            return f
        if self.order.is_global:
            return _reduce_global(f, self.basis, self.order)
        if reduced:
            return _reduced_nf_local(f, self.basis, self.order)
        return _mora_weak_nf(f, self.basis, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f, reduced=False).is_zero()


def std_basis(I: Ideal, order: MonomialOrder) -> StandardBasis:
    """Buchberger's algorithm; Mora weak normal form replaces division for local orders.

    Output is minimalized, tail-reduced, monic and deterministically sorted.
    """
    G = []
    for g in I.gens:
        g = g.monic(order)
        if g not in G:
            G.append(g)
    if not G:
        raise ValueError("standard basis of the zero ideal")

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    while pairs:
        def pair_key(p):
            i, j = p
            l = mon_lcm(G[i].leading_monomial(order), G[j].leading_monomial(order))
            return (sum(l), order.key(l), i, j)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        li = G[i].leading_monomial(order)
        lj = G[j].leading_monomial(order)
        if mon_mul(li, lj) == mon_lcm(li, lj):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        h = _weak_nf(spoly(G[i], G[j], order), G, order)
        if not h.is_zero():
            h = h.monic(order)
            G.append(h)
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))

    # Minimalize: drop generators whose lead is divisible by another's.
    leads = [g.leading_monomial(order) for g in G]
    minimal = []
    for i in range(len(G)):
        dominated = any(
            mon_divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
            for j in range(len(G))
            if j != i
        )
        if not dominated:
            minimal.append(G[i])

    # Tail-reduce each element against the others for reproducible output.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        if others:
            lm = g.leading_monomial(order)
            lt = Polynomial.monomial(g.ring, lm, g.terms[lm])
            tail = g - lt
            if not tail.is_zero():
                if order.is_global:
                    tail = _reduce_global(tail, others, order)
                else:
                    tail = _reduced_nf_local(tail, others, order, cap=500)
            g = lt + tail
        reduced.append(g.monic(order))
    reduced.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return StandardBasis(I, order, reduced)


def normal_form(f: Polynomial, B: StandardBasis) -> Polynomial:
    """Remainder of f modulo B; zero iff f lies in the (localized) ideal."""
    return B.normal_form(f)


def ideal_contains(I: Ideal, f: Polynomial, order: MonomialOrder) -> bool:
    """Membership of f in I (in the localization at the origin for local orders)."""
    if f.is_zero():
        return True
    return std_basis(I, order).contains(f)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError("ideal sum over mixed rings")
    return Ideal(list(I.gens) + list(J.gens), I.ring)


def _fresh_var(ring: VarSet) -> str:
    name = "_w"
    while name in ring:
        name += "_"
    return name


def _lift(f: Polynomial, big: VarSet) -> Polynomial:
    out = Polynomial(big)
    shift = len(big) - len(f.ring)
    out.terms = {(0,) * shift + m: c for m, c in f.terms.items()}
    return out


def _project(f: Polynomial, small: VarSet) -> Polynomial:
    shift = len(f.ring) - len(small)
    out = Polynomial(small)
    out.terms = {m[shift:]: c for m, c in f.terms.items()}
    return out


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I and J intersected via one auxiliary elimination variable w on w*I + (1-w)*J."""
    if I.ring != J.ring:
        raise RingMismatchError("ideal intersection over mixed rings")
    ring = I.ring
    w_name = _fresh_var(ring)
    big = VarSet((w_name,) + ring.names)
    w = Polynomial.var(big, w_name)
    one_minus_w = Polynomial.const(big, 1) - w
    gens = [w * _lift(g, big) for g in I.gens]
    gens += [one_minus_w * _lift(g, big) for g in J.gens]
    B = std_basis(Ideal(gens, big), Elimination(1))
    result = [_project(g, ring) for g in B.basis if all(m[0] == 0 for m in g.terms)]
    if not result:
        # The intersection of nonzero ideals over a domain is nonzero; reaching this
        # would mean the elimination lost everything.
        raise InternalCheckError("empty intersection of nonzero ideals")
    return Ideal(result, ring)


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """g / f when f divides g exactly; raises otherwise."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = Polynomial.zero(g.ring)
    h = g
    lf = f.leading_monomial(DEGREVLEX)
    cf = f.terms[lf]
    while not h.is_zero():
        lm = h.leading_monomial(DEGREVLEX)
        if not mon_divides(lf, lm):
            raise ComputationError("polynomial division is not exact")
        c = h.terms[lm] / cf
        m = mon_div(lm, lf)
        q = q + Polynomial.monomial(g.ring, m, c)
        h = h - f.term_mul(m, c)
    return q


def ideal_quotient(I: Ideal, f: Polynomial) -> Ideal:
    """I : f = {g : g*f in I}, computed as (I intersect <f>) / f."""
    if f.is_zero():
        raise ZeroDivisionError("ideal quotient by the zero polynomial")
    inter = ideal_intersect(I, Ideal([f], I.ring))
    return Ideal([exact_divide(g, f) for g in inter.gens], I.ring)


def ideal_equal(I: Ideal, J: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    """Mutual containment under the given order."""
    if I.ring != J.ring:
        raise RingMismatchError("ideal comparison over mixed rings")
    BI = std_basis(I, order)
    BJ = std_basis(J, order)
    return all(BI.contains(g) for g in J.gens) and all(BJ.contains(g) for g in I.gens)
