"""Sparse polynomials in A = Q[X0, X1, X2, X3, X4] and the G0 x G_m weight grading.

A monomial is a 5-tuple of nonnegative exponents.  The weight of
X0^d0 X1^d1 X2^d2 X3^d3 X4^d4 is

    n = d0 - p*(d1 + d2) + q*(d3 + d4)
    d = (d1 + d2) - (d3 + d4)   (mod m)

so that X1 and X2 carry (-p, 1) and X3 and X4 carry (q, m - 1).  With this
sign of d the bookkeeping R_(n,d) = sum of R^c_n over c = d (mod m), where
c = d1 - dj, holds without a sign flip.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .params import VarietyParams

NVARS = 5
ALL_VARS = (0, 1, 2, 3, 4)

Monomial = tuple  # tuple[int, int, int, int, int]

ONE: Monomial = (0, 0, 0, 0, 0)


class Weight(NamedTuple):
    n: int
    d: int

    def __str__(self) -> str:
        return f"({self.n},{self.d})"


def make_weight(params: VarietyParams, n: int, d: int) -> Weight:
    return Weight(n, d % params.m)


def add_weights(params: VarietyParams, w1: Weight, w2: Weight) -> Weight:
    return Weight(w1.n + w2.n, (w1.d + w2.d) % params.m)


def neg_weight(params: VarietyParams, w: Weight) -> Weight:
    return Weight(-w.n, (-w.d) % params.m)


def sub_weights(params: VarietyParams, w1: Weight, w2: Weight) -> Weight:
    return add_weights(params, w1, neg_weight(params, w2))


def var(i: int, power: int = 1) -> Monomial:
    e = [0] * NVARS
    e[i] = power
    return tuple(e)


def mono(*exps: int) -> Monomial:
    """Build a monomial from up to five leading exponents, padding with zeros."""
    if len(exps) > NVARS:
        raise ValueError("at most five exponents")
    return tuple(exps) + (0,) * (NVARS - len(exps))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    q = tuple(y - x for x, y in zip(a, b))
    if min(q) < 0:
        raise ValueError(f"{render_monomial(a)} does not divide {render_monomial(b)}")
    return q


def degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial):
    """Sort key putting larger monomials first in graded lex with X0 > ... > X4."""
    return (-sum(m), tuple(-e for e in m))


def weight_of(params: VarietyParams, m: Monomial) -> Weight:
    d0, d1, d2, d3, d4 = m
    n = d0 - params.p * (d1 + d2) + params.q * (d3 + d4)
    return Weight(n, ((d1 + d2) - (d3 + d4)) % params.m)


def render_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"X{i}")
        elif e > 1:
            parts.append(f"X{i}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            if len(m) != NVARS:
                raise ValueError(f"monomial {m!r} must have {NVARS} exponents")
            acc[tuple(m)] = acc.get(tuple(m), 0) + Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, m: Monomial, coeff=1) -> "Polynomial":
        return cls({tuple(m): coeff})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def variable(cls, i: int) -> "Polynomial":
        return cls({var(i): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list:
        return sorted(self._terms, key=grlex_key)

    def coeff(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def leading_monomial(self) -> Monomial:
        return min(self._terms, key=grlex_key)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3], m1[4] + m2[4])
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def mul_monomial(self, mon: Monomial, coeff=1) -> "Polynomial":
        coeff = Fraction(coeff)
        return Polynomial._raw({mono_mul(m, mon): c * coeff for m, c in self._terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_to_monic(self) -> "Polynomial":
        """Divide by the coefficient of the grlex-leading monomial."""
        if self.is_zero():
            return self
        return self * (1 / self._terms[self.leading_monomial()])

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending X_i to images[i]."""
        cache: dict = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in cache:
                cache[key] = images[i] ** e
            return cache[key]

        out = Polynomial()
        for m, c in self._terms.items():
            term = Polynomial.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def variables_used(self) -> set:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({render_polynomial(self)!r})"


def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for i, m in enumerate(f.monomials()):
        c = f.coeff(m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = render_monomial(m)
        if m == ONE:
            text = _render_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{_render_coeff(a)}*{body}"
        if i == 0:
            out.append(text if sign == "+" else "-" + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(?:X([0-4])(?:\^(\d+))?|(\d+)(?:/(\d+))?)$")


def parse_polynomial(text: str) -> Polynomial:
    """Parse the rendering syntax, e.g. ``"X0^2*X1^2 - 1"`` or ``"3/7 - X1^3*X3"``."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # pieces: ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise ValueError(f"cannot parse {text!r}")
    terms = []
    for sign, body in zip(pieces[1::2], pieces[2::2]):
        body = body.strip()
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(1 if sign == "+" else -1)
        exps = [0] * NVARS
        for factor in body.split("*"):
            factor = factor.strip()
            hit = _FACTOR.match(factor)
            if not hit:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if hit.group(1) is not None:
                exps[int(hit.group(1))] += int(hit.group(2) or 1)
            else:
                coeff *= Fraction(int(hit.group(3)), int(hit.group(4) or 1))
        terms.append((tuple(exps), coeff))
    return Polynomial(terms)


def homogeneous_components(params: VarietyParams, f: Polynomial) -> dict:
    """Split f by weight; returns {Weight: Polynomial} with deterministic key order."""
    parts: dict = {}
    for m, c in f.items():
        parts.setdefault(weight_of(params, m), {})[m] = c
    return {w: Polynomial._raw(parts[w]) for w in sorted(parts)}


def is_homogeneous(params: VarietyParams, f: Polynomial) -> bool:
    return len(homogeneous_components(params, f)) <= 1


def _bounded_exponents(nvars: int, bound: int) -> Iterator[tuple]:
    if nvars == 0:
        yield ()
        return
    for e in range(bound + 1):
        for rest in _bounded_exponents(nvars - 1, bound - e):
            yield (e,) + rest


def monomials_up_to_degree(bound: int, variables: Iterable[int] = ALL_VARS) -> list:
    variables = sorted(set(variables))
    out = []
    for exps in _bounded_exponents(len(variables), bound):
        e = [0] * NVARS
        for i, x in zip(variables, exps):
            e[i] = x
        out.append(tuple(e))
    return out


def monomials_of_weight(
    params: VarietyParams,
    w: Weight,
    total_degree_bound: int,
    variables: Iterable[int] = ALL_VARS,
) -> list:
    """All monomials in `variables` of total degree <= bound and weight w, grlex order."""
    if total_degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    w = Weight(w[0], w[1] % params.m)
    p, q, m = params.p, params.q, params.m
    variables = sorted(set(variables))
    use = [i in variables for i in range(NVARS)]
    out = []
    D = total_degree_bound
    # X1/X2 and X3/X4 enter the weight only through their sums, so loop over sums
    r1 = range(D + 1)
    for s12, s34 in product(r1, r1):
        if s12 + s34 > D:
            continue
        if (s12 and not (use[1] or use[2])) or (s34 and not (use[3] or use[4])):
            continue
        if (s12 - s34 - w.d) % m:
            continue
        d0 = w.n + p * s12 - q * s34
        if d0 < 0 or d0 + s12 + s34 > D or (d0 and not use[0]):
            continue
        for d1 in _split(s12, use[1], use[2]):
            for d3 in _split(s34, use[3], use[4]):
                out.append((d0, d1, s12 - d1, d3, s34 - d3))
    out.sort(key=grlex_key)
    return out


def _split(total: int, first: bool, second: bool) -> range:
    if first and second:
        return range(total + 1)
    if first:
        return range(total, total + 1)
    if second:
        return range(0, 1)
    return range(0, 1) if total == 0 else range(0)
