"""Sparse multivariate polynomials over a finite field.

Monomials are exponent tuples; a polynomial maps exponent tuples to nonzero
field elements. Two term orders are provided (lex and graded reverse lex,
both with x0 > x1 > ...). The text grammar accepts +, -, *, ^ with
parentheses, integer literals, variables x0..x{nvars-1}, and the extension
generator `a`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    NotHomogeneousError,
    ParseError,
    UnknownVariableError,
    WrongFieldError,
)
from .gf import FieldElement, FieldSpec

Exps = tuple


# --- monomial helpers ---

def mono_mul(u: Exps, v: Exps) -> Exps:
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u: Exps, v: Exps) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_div(u: Exps, v: Exps) -> Exps:
    """u / v, assuming v divides u."""
    return tuple(a - b for a, b in zip(u, v))


def mono_lcm(u: Exps, v: Exps) -> Exps:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_degree(u: Exps) -> int:
    return sum(u)


class MonomialOrder:
    """A total order on exponent tuples, exposed through sort keys."""

    def __init__(self, name: str):
        if name not in ("lex", "grevlex"):
            raise ValueError(f"unknown order {name!r}")
        self.name = name

    def key(self, exps: Exps):
        if self.name == "lex":
            return exps
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def greater(self, u: Exps, v: Exps) -> bool:
        return self.key(u) > self.key(v)

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.name == other.name

    def __hash__(self):
        return hash((MonomialOrder, self.name))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


class Polynomial:
    """Immutable-by-convention sparse polynomial tied to a field and nvars."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: dict):
        self.field = field
        self.nvars = nvars
        self.terms = terms  # Exps -> nonzero FieldElement

    @classmethod
    def from_terms(cls, field: FieldSpec, nvars: int,
                   items: Iterable[tuple]) -> "Polynomial":
        acc: dict = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DimensionMismatchError(
                    f"exponent tuple {exps} does not fit {nvars} variables")
            coeff = field.element(coeff)
            cur = acc.get(exps)
            coeff = coeff if cur is None else cur + coeff
            if coeff:
                acc[exps] = coeff
            elif exps in acc:
                del acc[exps]
        return cls(field, nvars, acc)

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, value) -> "Polynomial":
        return cls.from_terms(field, nvars, [((0,) * nvars, value)])

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int) -> "Polynomial":
        exps = tuple(1 if j == index else 0 for j in range(nvars))
        return cls(field, nvars, {exps: field.one()})

    # -- structure --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exps:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder = GREVLEX) -> FieldElement:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        lc = self.leading_coeff(order)
        if lc == self.field.one():
            return self
        inv = lc.inverse()
        return Polynomial(self.field, self.nvars,
                          {e: c * inv for e, c in self.terms.items()})

    # -- arithmetic --

    def _check(self, other: "Polynomial"):
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")
        if self.nvars != other.nvars:
            raise DimensionMismatchError("polynomials in different variable counts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            cur = acc.get(e)
            s = c if cur is None else cur + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return Polynomial(self.field, self.nvars, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, self.nvars,
                          {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (FieldElement, int)):
            c = self.field.element(other)
            if not c:
                return Polynomial.zero(self.field, self.nvars)
            return Polynomial(self.field, self.nvars,
                              {e: v * c for e, v in self.terms.items()})
        self._check(other)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                prod = c1 * c2
                cur = acc.get(e)
                s = prod if cur is None else cur + prod
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return Polynomial(self.field, self.nvars, acc)

    __rmul__ = __mul__

    def times_term(self, coeff: FieldElement, exps: Exps) -> "Polynomial":
        """Multiply by coeff * x^exps in one pass."""
        if not coeff:
            return Polynomial.zero(self.field, self.nvars)
        return Polynomial(self.field, self.nvars,
                          {mono_mul(e, exps): c * coeff
                           for e, c in self.terms.items()})

    def __pow__(self, exp: int) -> "Polynomial":
        if exp < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    # -- evaluation and substitution --

    def evaluate(self, point: Sequence) -> FieldElement:
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"point has {len(point)} coordinates, expected {self.nvars}")
        vals = [self.field.element(c) for c in point]
        total = self.field.zero()
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def compose_linear(self, rows: Sequence[Sequence], new_nvars: int) -> "Polynomial":
        """Substitute x_j <- sum_m rows[j][m] * y_m (a linear change of variables)."""
        if len(rows) != self.nvars:
            raise DimensionMismatchError("need one substitution row per variable")
        linear = [Polynomial.from_terms(
            self.field, new_nvars,
            [(tuple(1 if t == m else 0 for t in range(new_nvars)), c)
             for m, c in enumerate(row)])
            for row in rows]
        powers: dict = {}

        def power(j, e):
            if e == 0:
                return Polynomial.constant(self.field, new_nvars, 1)
            got = powers.get((j, e))
            if got is None:
                got = power(j, e - 1) * linear[j]
                powers[(j, e)] = got
            return got

        total = Polynomial.zero(self.field, new_nvars)
        for exps, coeff in self.terms.items():
            term = Polynomial.constant(self.field, new_nvars, coeff)
            for j, e in enumerate(exps):
                if e:
                    term = term * power(j, e)
            total = total + term
        return total

    # -- comparison, hashing, printing --

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=GREVLEX.key, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for j, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{j}")
                elif e > 1:
                    factors.append(f"x{j}^{e}")
            ctext = str(coeff)
            if "+" in ctext:
                ctext = f"({ctext})"
            if not factors:
                parts.append(ctext)
            elif ctext == "1":
                parts.append("*".join(factors))
            else:
                parts.append(ctext + "*" + "*".join(factors))
        return "+".join(parts)

    def __repr__(self):
        return f"<poly {self} over {self.field}>"


# --- parsing ---

_OPS = set("+-*^()")


def _tokenize(text: str) -> list:
    s = text.replace("**", "^")
    tokens = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch in _OPS:
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            tokens.append(("num", int(s[i:j])))
            i = j
        elif ch == "x":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"variable needs an index at position {i} in {text!r}")
            tokens.append(("var", int(s[i + 1:j])))
            i = j
        elif ch == "a":
            tokens.append(("gen", None))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} in {text!r}")
    return tokens


class _Parser:
    def __init__(self, tokens, field, nvars, source):
        self.tokens = tokens
        self.pos = 0
        self.field = field
        self.nvars = nvars
        self.source = source

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Polynomial:
        node = self.factor()
        while self.peek() == "*":
            self.take()
            node = node * self.factor()
        return node

    def factor(self) -> Polynomial:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        node = self.base()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not (isinstance(tok, tuple) and tok[0] == "num"):
                raise ParseError(f"exponent must be an integer in {self.source!r}")
            node = node ** tok[1]
        return node

    def base(self) -> Polynomial:
        tok = self.take()
        if tok == "(":
            node = self.expr()
            if self.take() != ")":
                raise ParseError(f"unbalanced parentheses in {self.source!r}")
            return node
        if isinstance(tok, tuple):
            kind, val = tok
            if kind == "num":
                return Polynomial.constant(self.field, self.nvars, val)
            if kind == "var":
                if not 0 <= val < self.nvars:
                    raise UnknownVariableError(
                        f"x{val} out of range for {self.nvars} variables")
                return Polynomial.variable(self.field, self.nvars, val)
            if kind == "gen":
                if self.field.k == 1:
                    raise WrongFieldError(
                        "generator symbol `a` used over a prime field")
                return Polynomial.constant(self.field, self.nvars, self.field.gen())
        raise ParseError(f"unexpected token {tok!r} in {self.source!r}")


def parse_poly(text: str, field: FieldSpec, nvars: int) -> Polynomial:
    """Parse polynomial text; coefficients reduce into the field, so the
    result can be canonically zero (e.g. `2*x0` over GF(2))."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    parser = _Parser(tokens, field, nvars, text)
    poly = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input from token {parser.peek()!r} in {text!r}")
    return poly


# --- chart transforms ---

def chart_transform(f: Polynomial, i: int, direction: str) -> Polynomial:
    """Move between projective and affine charts at coordinate i.

    "dehomogenize" sets x_i = 1 and renames the remaining variables to
    x0..x{n-2} by closing the gap. "homogenize" inserts a fresh variable at
    position i (shifting later ones up) with exponents that pad every term to
    the total degree. The pair is mutually inverse whenever x_i does not
    divide the homogeneous input.
    """
    if direction == "dehomogenize":
        if not f.homogeneous:
            raise NotHomogeneousError("dehomogenize needs a homogeneous input")
        if not 0 <= i < f.nvars:
            raise DimensionMismatchError(f"chart index {i} out of range")
        return Polynomial.from_terms(
            f.field, f.nvars - 1,
            ((exps[:i] + exps[i + 1:], c) for exps, c in f.terms.items()))
    if direction == "homogenize":
        if not 0 <= i <= f.nvars:
            raise DimensionMismatchError(f"insert index {i} out of range")
        d = f.degree()
        return Polynomial.from_terms(
            f.field, f.nvars + 1,
            ((exps[:i] + (d - sum(exps),) + exps[i:], c)
             for exps, c in f.terms.items()))
    raise ValueError(f"unknown chart direction {direction!r}")


# --- enumeration of forms ---

def monomials_of_degree(nvars: int, degree: int) -> list:
    """All exponent tuples of the given total degree, deterministic order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if nvars < 1:
        raise DimensionMismatchError("need at least one variable")
    rec((), degree, nvars)
    return out


def enumerate_forms(field: FieldSpec, nvars: int, degree: int,
                    up_to_scalar: bool = True) -> Iterator[Polynomial]:
    """All nonzero degree-d forms; with up_to_scalar the first nonzero
    coefficient (in monomial order) is normalized to 1."""
    import itertools

    monos = monomials_of_degree(nvars, degree)
    els = list(field.elements())
    one = field.one()
    for lead in range(len(monos)):
        leads = [one] if up_to_scalar else [e for e in els if e]
        for lead_c in leads:
            for tail in itertools.product(els, repeat=len(monos) - lead - 1):
                coeffs = (field.zero(),) * lead + (lead_c,) + tail
                yield Polynomial(field, nvars,
                                 {m: c for m, c in zip(monos, coeffs) if c})
