"""Finite-support Puiseux scalars, valued polynomials, and initial forms.

Coefficients live in Q((t^(1/n))) restricted to finite support; the base
field is Q.  Tropical evaluation and initial forms follow the min-plus
convention, with infinity handled explicitly: an infinite weight entry
sends every monomial with a nonzero exponent there to infinity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class _Infinity:
    """The point at infinity in Q-bar, a comparable singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("cannot negate infinity")

    def __repr__(self):
        return "inf"


INF = _Infinity()

ExtendedRational = Fraction | _Infinity
ExtendedWeight = tuple[ExtendedRational, ...]


def is_finite(x) -> bool:
    return x is not INF


def q_min(values: Iterable[ExtendedRational]) -> ExtendedRational:
    best: ExtendedRational = INF
    for v in values:
        if v is INF:
            continue
        if best is INF or v < best:
            best = v
    return best


@dataclass(frozen=True)
class PuiseuxScalar:
    """A finite sum of rational powers of t with rational coefficients.

    Terms are stored sorted by strictly increasing exponent with no zero
    coefficients; the zero scalar is the empty tuple.
    """

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[tuple] ) -> "PuiseuxScalar":
        acc: dict[Fraction, Fraction] = {}
        for e, c in terms:
            e, c = Fraction(e), Fraction(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        return cls(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def zero(cls) -> "PuiseuxScalar":
        return cls()

    @classmethod
    def rational(cls, q) -> "PuiseuxScalar":
        return cls.from_terms([(Fraction(0), Fraction(q))])

    @classmethod
    def t_power(cls, exponent, coeff=1) -> "PuiseuxScalar":
        return cls.from_terms([(Fraction(exponent), Fraction(coeff))])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        return PuiseuxScalar.from_terms(self.terms + other.terms)

    def __neg__(self) -> "PuiseuxScalar":
        return PuiseuxScalar(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        return self + (-other)

    def __mul__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        return PuiseuxScalar.from_terms(
            (e1 + e2, c1 * c2)
            for e1, c1 in self.terms for e2, c2 in other.terms)

    def __pow__(self, n: int) -> "PuiseuxScalar":
        if n < 0:
            raise ValueError("negative powers of Puiseux scalars are not finite-support")
        out = PuiseuxScalar.rational(1)
        for _ in range(n):
            out = out * self
        return out

    def valuation(self) -> ExtendedRational:
        """Least exponent with nonzero coefficient; infinity for zero."""
        return self.terms[0][0] if self.terms else INF

    def leading_coefficient(self) -> Fraction:
        """Residue of t^(-v(s)) * s, i.e. the coefficient at the valuation."""
        return self.terms[0][1] if self.terms else Fraction(0)

    def constant_residue(self) -> Fraction:
        """Image in the residue field of an element of the valuation ring."""
        if self.terms and self.terms[0][0] < 0:
            raise ValueError("scalar has negative valuation, not in the valuation ring")
        for e, c in self.terms:
            if e == 0:
                return c
        return Fraction(0)

    def shift(self, exponent) -> "PuiseuxScalar":
        d = Fraction(exponent)
        return PuiseuxScalar(tuple((e + d, c) for e, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                piece = _frac_str(c)
            else:
                tp = "t" if e == 1 else f"t^{_exp_str(e)}"
                if c == 1:
                    piece = tp
                elif c == -1:
                    piece = f"-{tp}"
                else:
                    piece = f"{_frac_str(c)}*{tp}"
            parts.append(piece)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _frac_str(q: Fraction) -> str:
    return str(q)


def _exp_str(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


@dataclass(frozen=True)
class ResiduePolynomial:
    """A polynomial over the residue field Q (image of an initial form)."""

    nvars: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @classmethod
    def from_dict(cls, nvars: int, coeffs: Mapping[tuple[int, ...], Fraction]
                  ) -> "ResiduePolynomial":
        items = tuple(sorted(
            ((u, Fraction(c)) for u, c in coeffs.items() if c != 0),
            key=lambda t: t[0], reverse=True))
        return cls(nvars, items)

    @classmethod
    def zero(cls, nvars: int) -> "ResiduePolynomial":
        return cls(nvars, ())

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __mul__(self, other: "ResiduePolynomial") -> "ResiduePolynomial":
        acc: dict[tuple[int, ...], Fraction] = {}
        for u, c in self.terms:
            for v, d in other.terms:
                w = tuple(a + b for a, b in zip(u, v))
                acc[w] = acc.get(w, Fraction(0)) + c * d
        return ResiduePolynomial.from_dict(self.nvars, acc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for u, c in self.terms:
            mono = "*".join(
                f"x{i+1}" if p == 1 else f"x{i+1}^{p}"
                for i, p in enumerate(u) if p != 0)
            if not mono:
                piece = _frac_str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{_frac_str(c)}*{mono}"
            parts.append(piece)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


@dataclass(frozen=True)
class ValuedPolynomial:
    """A (Laurent) polynomial in x1..xm with Puiseux-scalar coefficients."""

    nvars: int
    laurent: bool
    terms: tuple[tuple[tuple[int, ...], PuiseuxScalar], ...]

    @classmethod
    def from_dict(cls, nvars: int, coeffs: Mapping[tuple[int, ...], PuiseuxScalar],
                  laurent: bool = True) -> "ValuedPolynomial":
        items = []
        for u, c in coeffs.items():
            u = tuple(int(e) for e in u)
            if len(u) != nvars:
                raise ValueError("exponent vector length mismatch")
            if not laurent and any(e < 0 for e in u):
                raise ValueError("negative exponent in ordinary mode")
            if c:
                items.append((u, c))
        return cls(nvars, laurent, tuple(sorted(items, key=lambda t: t[0], reverse=True)))

    @classmethod
    def zero(cls, nvars: int, laurent: bool = True) -> "ValuedPolynomial":
        return cls(nvars, laurent, ())

    def is_zero(self) -> bool:
        return not self.terms

    def coeff_dict(self) -> dict[tuple[int, ...], PuiseuxScalar]:
        return dict(self.terms)

    def __add__(self, other: "ValuedPolynomial") -> "ValuedPolynomial":
        acc = self.coeff_dict()
        for u, c in other.terms:
            acc[u] = acc.get(u, PuiseuxScalar.zero()) + c
        return ValuedPolynomial.from_dict(
            self.nvars, acc, self.laurent and other.laurent)

    def __neg__(self) -> "ValuedPolynomial":
        return ValuedPolynomial(
            self.nvars, self.laurent, tuple((u, -c) for u, c in self.terms))

    def __sub__(self, other: "ValuedPolynomial") -> "ValuedPolynomial":
        return self + (-other)

    def __mul__(self, other: "ValuedPolynomial") -> "ValuedPolynomial":
        acc: dict[tuple[int, ...], PuiseuxScalar] = {}
        for u, c in self.terms:
            for v, d in other.terms:
                w = tuple(a + b for a, b in zip(u, v))
                acc[w] = acc.get(w, PuiseuxScalar.zero()) + c * d
        return ValuedPolynomial.from_dict(
            self.nvars, acc, self.laurent and other.laurent)

    # -- tropical semantics -------------------------------------------

    def term_weight(self, u: tuple[int, ...], c: PuiseuxScalar,
                    w: Sequence[ExtendedRational]) -> ExtendedRational:
        total = c.valuation()
        for ui, wi in zip(u, w, strict=True):
            if wi is INF:
                if ui != 0:
                    return INF
            else:
                total = total + ui * wi
        return total

    def _check_weight(self, w: Sequence[ExtendedRational]) -> ExtendedWeight:
        w = tuple(w)
        if len(w) != self.nvars:
            raise ValueError("weight length mismatch")
        if self.laurent and any(x is INF for x in w):
            raise ValueError("infinite weight entry on a Laurent polynomial")
        return w

    def trop_eval(self, w: Sequence[ExtendedRational]) -> ExtendedRational:
        """min over terms of v(a_u) + u.w, with the infinity conventions."""
        w = self._check_weight(w)
        return q_min(self.term_weight(u, c, w) for u, c in self.terms)

    def initial_form(self, w: Sequence[ExtendedRational]) -> ResiduePolynomial:
        """Sum of residues of the weight-minimal terms; zero if the min is infinite."""
        w = self._check_weight(w)
        best = self.trop_eval(w)
        if best is INF:
            return ResiduePolynomial.zero(self.nvars)
        coeffs = {
            u: c.leading_coefficient()
            for u, c in self.terms if self.term_weight(u, c, w) == best}
        return ResiduePolynomial.from_dict(self.nvars, coeffs)

    def initial_form_substitution(self, w: Sequence[Fraction]) -> ResiduePolynomial:
        """Residue of t^(-W) f(t^w1 x1, ..., t^wm xm); finite weights only."""
        w = self._check_weight(w)
        if any(x is INF for x in w):
            raise ValueError("substitution form requires a finite weight")
        best = self.trop_eval(w)
        if best is INF:
            return ResiduePolynomial.zero(self.nvars)
        coeffs = {}
        for u, c in self.terms:
            shifted = c.shift(sum(ui * wi for ui, wi in zip(u, w)) - best)
            coeffs[u] = shifted.constant_residue()
        return ResiduePolynomial.from_dict(self.nvars, coeffs)

    def restrict_to_orbit(self, sigma: Iterable[int]) -> "ValuedPolynomial":
        """Drop terms with positive exponent on sigma (0-based) and reindex.

        Models restriction to the torus orbit where the sigma coordinates
        vanish; only defined in ordinary mode.
        """
        if self.laurent:
            raise ValueError("orbit restriction requires ordinary mode")
        sigma = frozenset(sigma)
        if any(i < 0 or i >= self.nvars for i in sigma):
            raise ValueError("orbit index out of range")
        keep = [i for i in range(self.nvars) if i not in sigma]
        coeffs = {}
        for u, c in self.terms:
            if any(u[i] != 0 for i in sigma):
                continue
            v = tuple(u[i] for i in keep)
            coeffs[v] = coeffs.get(v, PuiseuxScalar.zero()) + c
        return ValuedPolynomial.from_dict(len(keep), coeffs, laurent=False)

    def evaluate(self, point: Sequence[PuiseuxScalar]) -> PuiseuxScalar:
        """Exact evaluation at a torus point (all coordinates nonzero).

        For Laurent input the polynomial is first multiplied by a monomial
        clearing negative exponents, which does not change vanishing.
        """
        point = list(point)
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        if any(not p for p in point):
            raise ValueError("torus point must have nonzero coordinates")
        shift = [min(0, min((u[i] for u, _ in self.terms), default=0))
                 for i in range(self.nvars)]
        total = PuiseuxScalar.zero()
        for u, c in self.terms:
            val = c
            for i, p in enumerate(point):
                val = val * p ** (u[i] - shift[i])
            total = total + val
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for u, c in self.terms:
            mono = "*".join(
                f"x{i+1}" if p == 1 else f"x{i+1}^{p}"
                for i, p in enumerate(u) if p != 0)
            cs = str(c)
            needs_parens = ("+" in cs or " - " in cs)
            if not mono:
                parts.append(f"({cs})" if needs_parens else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"({cs})*{mono}" if needs_parens else f"{cs}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") and not p.startswith("-(") else f" + {p}"
        return out

    @classmethod
    def parse(cls, text: str, nvars: int | None = None,
              laurent: bool = True) -> "ValuedPolynomial":
        return _parse_polynomial(text, nvars, laurent)


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z]\w*|\^|\*|\+|-|\(|\))")


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent for sums of products of rationals, t-powers, and vars."""

    def __init__(self, tokens: list[str], nvars: int):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.take()
        if got != tok:
            raise ValueError(f"expected {tok!r}, got {got!r}")

    def parse_expr(self) -> ValuedPolynomial:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        node = self.parse_term()
        if sign < 0:
            node = -node
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term(self) -> ValuedPolynomial:
        node = self.parse_factor()
        while self.peek() == "*":
            self.take()
            node = node * self.parse_factor()
        return node

    def parse_factor(self) -> ValuedPolynomial:
        tok = self.peek()
        if tok == "(":
            self.take()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok == "-":
            self.take()
            return -self.parse_factor()
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of input")
        if re.fullmatch(r"\d+/\d+|\d+", tok):
            return self._const(PuiseuxScalar.rational(Fraction(tok)))
        if tok == "t":
            e = self._maybe_exponent()
            return self._const(PuiseuxScalar.t_power(e))
        m = re.fullmatch(r"x(\d+)", tok)
        if m:
            idx = int(m.group(1)) - 1
            if idx < 0 or idx >= self.nvars:
                raise ValueError(f"variable {tok} out of range")
            e = self._maybe_exponent()
            if e.denominator != 1:
                raise ValueError("variable exponents must be integers")
            u = tuple(int(e) if i == idx else 0 for i in range(self.nvars))
            return ValuedPolynomial.from_dict(
                self.nvars, {u: PuiseuxScalar.rational(1)})
        raise ValueError(f"unexpected token {tok!r}")

    def _maybe_exponent(self) -> Fraction:
        if self.peek() != "^":
            return Fraction(1)
        self.take()
        neg = False
        if self.peek() == "(":
            self.take()
            if self.peek() == "-":
                self.take()
                neg = True
            num = self.take()
            val = Fraction(num)
            if self.peek() == "/":  # pragma: no cover - tokenized as p/q already
                self.take()
                val /= Fraction(self.take())
            self.expect(")")
        else:
            if self.peek() == "-":
                self.take()
                neg = True
            val = Fraction(self.take())
        return -val if neg else val

    def _const(self, s: PuiseuxScalar) -> ValuedPolynomial:
        u = (0,) * self.nvars
        return ValuedPolynomial.from_dict(self.nvars, {u: s})


def _max_var_index(tokens: list[str]) -> int:
    best = 0
    for tok in tokens:
        m = re.fullmatch(r"x(\d+)", tok)
        if m:
            best = max(best, int(m.group(1)))
    return best


def _parse_polynomial(text: str, nvars: int | None, laurent: bool
                      ) -> ValuedPolynomial:
    tokens = _tokenize(text)
    if nvars is None:
        nvars = _max_var_index(tokens)
    parser = _Parser(tokens, nvars)
    poly = parser.parse_expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input at {parser.peek()!r}")
    if not laurent:
        poly = ValuedPolynomial.from_dict(poly.nvars, poly.coeff_dict(), laurent=False)
    return poly


def parse_weight(text: str, nvars: int | None = None) -> ExtendedWeight:
    """Parse a weight like "(-2,0)", "1/2,inf" into Fractions and INF."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    entries = [e.strip() for e in body.split(",")] if body else []
    out = []
    for e in entries:
        if e.lower() in ("inf", "infinity", "oo", "∞"):
            out.append(INF)
        else:
            out.append(Fraction(e))
    if nvars is not None and len(out) != nvars:
        raise ValueError("weight length mismatch")
    return tuple(out)
