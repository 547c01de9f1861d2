"""Exact multivariate polynomials over the rationals, monomial orders, and a text parser.

Monomials are exponent tuples aligned with a fixed ``VarSet``; polynomials are
sparse dicts mapping exponent tuples to nonzero ``Fraction`` coefficients.
All arithmetic is exact; there is no floating point anywhere in the package.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, RingMismatchError

Exponents = tuple  # tuple[int, ...], one entry per variable of the ring


class VarSet:
    """An ordered set of distinct variable names; fixes the ambient ring."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        if not names:
            raise ValueError("empty variable set")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.index

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarSet({', '.join(self.names)})"


def mon_degree(m: Exponents) -> int:
    return sum(m)


def mon_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_div(a: Exponents, b: Exponents) -> Exponents:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class MonomialOrder:
    """Total order on monomials given by a sort key (larger key = greater monomial)."""

    kind = "abstract"
    is_global = True

    def key(self, m: Exponents):
        raise NotImplementedError

    def cmp(self, a: Exponents, b: Exponents) -> int:
        """-1, 0 or +1 comparing a against b."""
        if len(a) != len(b):
            raise RingMismatchError("monomials over different variable sets")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return f"<order {self.kind}>"


def _drl_key(m: Exponents):
    # Degree first; revlex tie-break: the last variable with a difference decides,
    # with the smaller exponent winning.
    return (sum(m), tuple(-e for e in reversed(m)))


class Degrevlex(MonomialOrder):
    kind = "global-degrevlex"
    is_global = True

    def key(self, m):
        return _drl_key(m)


class NegDegrevlex(MonomialOrder):
    """Local order: 1 is the largest monomial; realizes the localization at the origin."""

    kind = "local-negdegrevlex"
    is_global = False

    def key(self, m):
        return (-sum(m), tuple(-e for e in reversed(m)))


class Elimination(MonomialOrder):
    """Block order: the first ``block`` variables are eliminated (ranked strictly first)."""

    is_global = True

    def __init__(self, block: int):
        if block < 1:
            raise ValueError("elimination block must contain at least one variable")
        self.block = block
        self.kind = f"elimination({block})"

    def key(self, m):
        return (_drl_key(m[: self.block]), _drl_key(m[self.block :]))


DEGREVLEX = Degrevlex()
NEGDEGREVLEX = NegDegrevlex()


def order_by_name(name: str) -> MonomialOrder:
    if name in ("degrevlex", "dp", "global"):
        return DEGREVLEX
    if name in ("negdegrevlex", "ds", "local"):
        return NEGDEGREVLEX
    raise ParseError(f"unknown monomial order: {name!r}")


class Polynomial:
    """Sparse exact-rational polynomial over a fixed VarSet."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: VarSet, terms=None):
        self.ring = ring
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[m] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def const(cls, ring, c):
        return cls(ring, {(0,) * len(ring): Fraction(c)})

    @classmethod
    def var(cls, ring, name, power=1):
        if name not in ring:
            raise ParseError(f"unknown variable {name!r} in {ring!r}")
        if power < 0:
            raise ParseError("negative exponent")
        e = [0] * len(ring)
        e[ring.index[name]] = power
        return cls(ring, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, ring, exps, coeff=1):
        return cls(ring, {tuple(exps): Fraction(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def total_degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def min_degree(self):
        """Order (lowest total degree of a term); -1 for zero."""
        return min((sum(m) for m in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * len(self.ring), Fraction(0))

    def coeff(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(self.ring, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = Polynomial(self.ring)
        out.terms = terms
        return out

    def __neg__(self):
        out = Polynomial(self.ring)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(self.ring, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            out = Polynomial(self.ring)
            if c:
                out.terms = {m: co * c for m, co in self.terms.items()}
            return out
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mon_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = Polynomial(self.ring)
        out.terms = terms
        return out

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, n: int):
        if n < 0:
            raise ParseError("negative exponent")
        result = Polynomial.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def term_mul(self, exps, coeff):
        """Multiply by a single term coeff * x^exps."""
        out = Polynomial(self.ring)
        coeff = Fraction(coeff)
        if coeff:
            out.terms = {mon_mul(m, exps): c * coeff for m, c in self.terms.items()}
        return out

    def substitute(self, mapping, target: VarSet | None = None):
        """Evaluate with each variable replaced by a polynomial over ``target``.

        Variables absent from ``mapping`` must exist in the target ring and map
        to themselves.
        """
        target = target or self.ring
        images = []
        for name in self.ring.names:
            if name in mapping:
                img = mapping[name]
                if not isinstance(img, Polynomial):
                    img = Polynomial.const(target, img)
                images.append(img)
            else:
                images.append(Polynomial.var(target, name))
        result = Polynomial.zero(target)
        pow_cache = [dict() for _ in images]
        for m, c in self.terms.items():
            part = Polynomial.const(target, c)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                if e not in pow_cache[i]:
                    pow_cache[i][e] = images[i] ** e
                part = part * pow_cache[i][e]
            result = result + part
        return result

    # -- leading data ------------------------------------------------------

    def leading_monomial(self, order: MonomialOrder) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder):
        if not self.terms:
            return self
        return self * (1 / self.leading_coeff(order))

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: _drl_key(kv[0]), reverse=True)
        pieces = []
        for i, (m, c) in enumerate(items):
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n
                for n, e in zip(self.ring.names, m)
                if e
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.render()!r})"


def cmp_monomials(a: Exponents, b: Exponents, order: MonomialOrder) -> int:
    """Compare two exponent tuples under ``order``: -1, 0 or +1."""
    return order.cmp(a, b)


# --- parser ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()/]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r} in {text!r}")
            break
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group("num"))))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group("ident")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    """Recursive descent over: expr := term (+|- term)*; term := unary (* unary)*;
    unary := [+|-] power; power := atom [^ num]; atom := rational | ident | ( expr )."""

    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        p = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.next()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() == ("op", "*"):
            self.next()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek() == ("op", "-"):
            self.next()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.next()
            kind, val = self.peek()
            if kind == "op" and val == "-":
                raise ParseError(f"negative exponent in {self.text!r}")
            kind, val = self.next()
            if kind != "num":
                raise ParseError(f"exponent must be an integer literal in {self.text!r}")
            return base**val
        return base

    def atom(self):
        kind, val = self.next()
        if kind == "num":
            if self.peek() == ("op", "/"):
                self.next()
                kind2, den = self.next()
                if kind2 != "num":
                    raise ParseError(f"malformed rational literal in {self.text!r}")
                if den == 0:
                    raise ParseError("zero denominator")
                return Polynomial.const(self.ring, Fraction(val, den))
            return Polynomial.const(self.ring, val)
        if kind == "ident":
            if val not in self.ring:
                raise ParseError(f"unknown variable {val!r} (ring has {self.ring.names})")
            return Polynomial.var(self.ring, val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"malformed expression {self.text!r}")


def parse_poly(text: str, ring: VarSet) -> Polynomial:
    """Parse an arithmetic expression with +, -, *, ^, parentheses and rational literals."""
    return _Parser(text, ring).parse()
