"""Equivariant homomorphisms J0 -> A/J0 over S = A/(X0^(q-p) - X1 X4 + X2 X3).

A G0 x G_m-equivariant S-linear map sends each generator g_i of J0 to a
multiple alpha_i of the unique basis monomial of (A/J0)_{wt(g_i)}.  Every
relation sum h_i g_i = 0 in S imposes sum alpha_i [h_i * target_i] = 0.
Relations are found as kernels of the multiplication map, weight by weight,
over all multipliers of bounded degree; the hypersurface equation enters as
an extra column so that relations holding only modulo it are caught too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lambda_grading as lg
from .grading import (
    Monomial,
    Polynomial,
    Weight,
    grlex_key,
    monomials_up_to_degree,
    mono_mul,
    render_monomial,
    weight_of,
    add_weights,
)
from .ideals import hypersurface, ideal_generators, normal_form, normal_form_in_A, truncated_quotient_dim
from .linalg import kernel, rref
from .params import VarietyParams


class BoundSensitivityError(RuntimeError):
    """The constraint space changed between D and D + 1."""


def quotient_witness(params: VarietyParams, w: Weight) -> Monomial:
    """Basis monomial of (A/J0)_w: f_{lambda_(n,d)} in Q[X0, X1, X3]."""
    params.require_toric()
    lam = lg.lambda_min(params, w[0], w[1] % params.m, j=3)
    f = lg.f_lambda(params, lam)
    if not normal_form(params, "J~0", f).survives:
        raise AssertionError(f"witness {render_monomial(f)} reduces to zero modulo J~0")
    return f


@dataclass(frozen=True)
class EquivariantHomSystem:
    generators: tuple  # J0 generators as polynomials
    targets: tuple  # basis monomial of A/J0 in each generator's weight
    constraints: tuple  # RREF rows, each a tuple of 4 Fractions
    solution_basis: tuple
    degree_bound: int

    @property
    def dimension(self) -> int:
        return len(self.solution_basis)


@dataclass(frozen=True)
class TangentReport:
    params: tuple
    degree_bound: int
    system: EquivariantHomSystem
    stable: bool
    constraints_next: tuple

    @property
    def dimension(self) -> int:
        return self.system.dimension


def _class_coefficient(params: VarietyParams, mono: Monomial, w: Weight) -> int:
    """Coordinate of a monomial in the one-dimensional (A/J0)_w."""
    nf = normal_form_in_A(params, "J", 0, mono)
    if nf is None:
        return 0
    if nf != quotient_witness(params, w):
        raise AssertionError(f"{render_monomial(mono)} survives as {render_monomial(nf)}, not the weight-{w} witness")
    return 1


def _constraints(params: VarietyParams, D: int) -> list:
    gens = list(ideal_generators(params, "J", 0).generators)
    F = hypersurface(params)
    columns = gens + [F]
    targets = [quotient_witness(params, weight_of(params, g.leading_monomial())) for g in gens]
    buckets: dict = {}
    for i, g in enumerate(columns):
        wg = weight_of(params, g.leading_monomial())
        for u in monomials_up_to_degree(D - g.degree()):
            w = add_weights(params, wg, weight_of(params, u))
            buckets.setdefault(w, []).append((i, u))
    rows = []
    for w in sorted(buckets):
        cols = sorted(buckets[w], key=lambda t: (t[0], grlex_key(t[1])))
        images = [dict(columns[i].mul_monomial(u).items()) for i, u in cols]
        for vec in kernel(images, key=grlex_key):
            row = [Fraction(0)] * len(gens)
            for k, coeff in vec.items():
                i, u = cols[k]
                if i < len(gens):
                    row[i] += coeff * _class_coefficient(params, mono_mul(u, targets[i]), w)
            if any(row):
                rows.append(tuple(row))
    return rows


def _rref_rows(rows: list, n: int) -> tuple:
    reduced = rref([{i: c for i, c in enumerate(r) if c} for r in rows])
    return tuple(tuple(r.get(i, Fraction(0)) for i in range(n)) for r in reduced)


def _solution_basis(constraints: tuple, n: int) -> tuple:
    pivots = {}
    for r in constraints:
        lead = next(i for i, c in enumerate(r) if c)
        pivots[lead] = r
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for lead, r in pivots.items():
            v[lead] = -r[free]
        basis.append(tuple(v))
    return tuple(basis)


def hom_system(params: VarietyParams, D: int) -> EquivariantHomSystem:
    params.require_toric()
    ideal = ideal_generators(params, "J", 0)
    gens = ideal.generators
    targets = []
    for g in gens:
        w = weight_of(params, g.leading_monomial())
        win = truncated_quotient_dim(params, ideal, w, max(D, ideal.max_degree()))
        if win.dim != 1:
            raise AssertionError(f"(A/J0)_{w} has truncated dimension {win.dim}, expected 1")
        targets.append(quotient_witness(params, w))
    cons = _rref_rows(_constraints(params, D), len(gens))
    return EquivariantHomSystem(tuple(gens), tuple(targets), cons, _solution_basis(cons, len(gens)), D)


def tangent_report(params: VarietyParams, D: int = 10) -> TangentReport:
    system = hom_system(params, D)
    nxt = _rref_rows(_constraints(params, D + 1), len(system.generators))
    return TangentReport(params.as_tuple(), D, system, nxt == system.constraints, nxt)


def tangent_dimension_J0(params: VarietyParams, D: int = 10) -> int:
    rep = tangent_report(params, D)
    if not rep.stable:
        raise BoundSensitivityError(
            f"constraints at D={D} {rep.system.constraints} differ from D={D + 1} {rep.constraints_next}"
        )
    return rep.dimension


def render_constraint(row) -> str:
    parts = []
    for i, c in enumerate(row):
        if not c:
            continue
        name = f"alpha{i + 1}"
        coeff = "" if abs(c) == 1 else f"{abs(c)}*"
        sign = "-" if c < 0 else "+"
        parts.append((sign, coeff + name))
    if not parts:
        return "0 = 0"
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text + " = 0"


__all__ = [
    "BoundSensitivityError",
    "quotient_witness",
    "EquivariantHomSystem",
    "TangentReport",
    "hom_system",
    "tangent_report",
    "tangent_dimension_J0",
    "render_constraint",
]
