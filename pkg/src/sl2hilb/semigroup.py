"""The affine semigroup M+ = {(i, j) >= 0 : j <= (p/q) i, m | (i - j)} and its generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .grading import Polynomial, mono, render_monomial
from .params import VarietyParams


class SemigroupElement(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class GeneratorResult:
    generators: tuple
    i_bound: int
    complete: bool
    warnings: tuple = field(default=())

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def contains(params: VarietyParams, i: int, j: int) -> bool:
    return i >= 0 and j >= 0 and params.q * j <= params.p * i and (i - j) % params.m == 0


def elements(params: VarietyParams, i_bound: int) -> list:
    """Every element with i <= i_bound, sorted by (i, j)."""
    out = []
    for i in range(i_bound + 1):
        for j in range(params.p * i // params.q + 1):
            if (i - j) % params.m == 0:
                out.append(SemigroupElement(i, j))
    return out


def sufficient_bound(params: VarietyParams) -> int | None:
    """a*q in the toric case, where the last generator (aq, ap) lives; None otherwise."""
    if params.smooth or not params.toric:
        return None
    return params.a * params.q


def minimal_generators(params: VarietyParams, i_bound: int) -> GeneratorResult:
    """Irreducible elements with i <= i_bound, found by a decomposition sieve."""
    elems = elements(params, i_bound)
    nonzero = [e for e in elems if e != (0, 0)]
    present = set(nonzero)
    reducible = set()
    # a sum x + y has first coordinate <= i_bound only if both do, so the sieve is exact
    for idx, x in enumerate(nonzero):
        for y in nonzero[idx:]:
            s = (x.i + y.i, x.j + y.j)
            if s[0] > i_bound:
                break
            if s in present:
                reducible.add(s)
    gens = tuple(e for e in nonzero if e not in reducible)

    warnings = []
    need = sufficient_bound(params)
    complete = need is not None and i_bound >= need
    if need is not None and i_bound < need:
        warnings.append(f"i_bound {i_bound} < a*q = {need}; generator list may be incomplete")
    if need is None:
        warnings.append("no known completeness bound for non-toric parameters; list is bound-relative")
    return GeneratorResult(gens, i_bound, complete, tuple(warnings))


def toric_generators(params: VarietyParams) -> list:
    """Closed form (m + u, u), 0 <= u <= a*p, valid when q - p divides m."""
    params.require_toric()
    return [SemigroupElement(params.m + u, u) for u in range(params.a * params.p + 1)]


@dataclass(frozen=True)
class EmbeddingEntry:
    i: int
    j: int
    highest_weight: int

    @property
    def monomial(self) -> str:
        def power(name, e):
            return "" if e == 0 else (name if e == 1 else f"{name}^{e}")

        body = "*".join(s for s in (power("X", self.i), power("Y", self.j)) if s)
        return body or "1"


def embedding_vector(params: VarietyParams, i_bound: int | None = None) -> list:
    """Generators as formal monomials X^i Y^j with the highest weight i + j of V(i + j)."""
    params.require_singular()
    if i_bound is None:
        i_bound = sufficient_bound(params)
        if i_bound is None:
            raise ValueError("non-toric parameters need an explicit i_bound")
    return [EmbeddingEntry(g.i, g.j, g.i + g.j) for g in minimal_generators(params, i_bound)]


def invariant_generators(params: VarietyParams, first_var: int, second_var: int, i_bound: int | None = None) -> list:
    """Monomial generators X0^(p u1 - q u2) Xi^u1 Xj^u2 of Q[X0, Xi, Xj]^(G0 x G_m)."""
    params.require_singular()
    if first_var not in (1, 2) or second_var not in (3, 4):
        raise ValueError("first_var must be 1 or 2 and second_var 3 or 4")
    if i_bound is None:
        i_bound = sufficient_bound(params)
        if i_bound is None:
            raise ValueError("non-toric parameters need an explicit i_bound")
    out = []
    for u1, u2 in minimal_generators(params, i_bound):
        e = [0] * 5
        e[0] = params.p * u1 - params.q * u2
        e[first_var] = u1
        e[second_var] = u2
        out.append(tuple(e))

    if params.toric:
        alt = set()
        d = params.diff
        for u in range(params.a * params.p + 1):
            e = [0] * 5
            e[0] = (params.a * params.p - u) * d
            e[first_var] = params.m + u
            e[second_var] = u
            alt.add(tuple(e))
        if alt != set(out):
            raise AssertionError(
                "toric presentation of the invariant ring disagrees with the semigroup generators: "
                f"{sorted(map(render_monomial, alt))} vs {sorted(map(render_monomial, out))}"
            )
    return out


def invariant_polynomials(params: VarietyParams, first_var: int, second_var: int, i_bound=None) -> list:
    return [Polynomial.monomial(e) for e in invariant_generators(params, first_var, second_var, i_bound)]


__all__ = [
    "SemigroupElement",
    "GeneratorResult",
    "EmbeddingEntry",
    "contains",
    "elements",
    "minimal_generators",
    "toric_generators",
    "embedding_vector",
    "invariant_generators",
    "invariant_polynomials",
    "sufficient_bound",
]
