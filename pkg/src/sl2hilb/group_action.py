"""SL(2) acting on A through the matrix [[X1, X3], [X2, X4]] by left multiplication.

The action on functions is direct substitution of the entries of g * M:

    X1 -> a X1 + b X2,   X2 -> c X1 + d X2,
    X3 -> a X3 + b X4,   X4 -> c X3 + d X4,   X0 fixed.

With this convention act(g, act(h, f)) = act(h * g, f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grading import Polynomial, homogeneous_components
from .ideals import IdealSpec, ideal_generators, in_ideal_truncated
from .params import VarietyParams


@dataclass(frozen=True)
class GroupElement:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.alpha * self.delta - self.beta * self.gamma != 1:
            raise ValueError(f"determinant must be 1, got {self.alpha * self.delta - self.beta * self.gamma}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.delta, -self.beta, -self.gamma, self.alpha)


def identity() -> GroupElement:
    return GroupElement(1, 0, 0, 1)


def torus(t) -> GroupElement:
    t = Fraction(t)
    if t == 0:
        raise ValueError("torus parameter must be nonzero")
    return GroupElement(t, 0, 0, 1 / t)


def upper_unipotent(z) -> GroupElement:
    return GroupElement(1, z, 0, 1)


def lower_unipotent(z) -> GroupElement:
    return GroupElement(1, 0, z, 1)


def _images(g: GroupElement) -> list:
    x = [Polynomial.variable(i) for i in range(5)]
    return [
        x[0],
        x[1] * g.alpha + x[2] * g.beta,
        x[1] * g.gamma + x[2] * g.delta,
        x[3] * g.alpha + x[4] * g.beta,
        x[3] * g.gamma + x[4] * g.delta,
    ]


def act(g: GroupElement, f: Polynomial) -> Polynomial:
    return f.substitute(_images(g))


def torus_weight(mono) -> int:
    """Weight of a monomial under diag(t, 1/t): X1, X3 count +1 and X2, X4 count -1."""
    return mono[1] + mono[3] - mono[2] - mono[4]


def is_torus_homogeneous(f: Polynomial) -> bool:
    return len({torus_weight(m) for m, _ in f.items()}) <= 1


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TranslateResult:
    variant: str
    t: Fraction
    s: Fraction
    predicted_s: Fraction
    passed: bool
    translated: tuple


def predicted_translate_s(params: VarietyParams, variant: str, t) -> Fraction:
    t = Fraction(t)
    if variant == "I":
        return t ** (-params.m)
    return t ** (-(params.a * params.q + params.a * params.p))


def _normalized(gens) -> frozenset:
    return frozenset(g.scale_to_monic() for g in gens)


def translate_check(params: VarietyParams, variant: str, t) -> TranslateResult:
    """Move the s = 1 ideal by diag(t, 1/t) and identify the result as I_s or J_s."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    if variant not in ("I", "J"):
        raise ValueError("variant must be I or J")
    base = ideal_generators(params, variant, 1)
    g = torus(t)
    moved = tuple(act(g, f) for f in base.generators)
    last = moved[-1]
    # last generator is kappa * (s - M) for the invariant monomial M
    const = last.coeff((0, 0, 0, 0, 0))
    (mon,) = [u for u, _ in last.items() if any(u)]
    s = -const / last.coeff(mon)
    target = ideal_generators(params, variant, s)
    passed = _normalized(moved) == _normalized(target.generators) and s == predicted_translate_s(params, variant, t)
    return TranslateResult(variant, t, s, predicted_translate_s(params, variant, t), passed, moved)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilityResult:
    stable: bool
    torus_homogeneous: bool
    failures: tuple

    def __bool__(self) -> bool:
        return self.stable


def b_stability(params: VarietyParams, ideal: IdealSpec, D: int, torus_samples=(2, 3)) -> StabilityResult:
    """Check stability of the ideal under the upper-triangular Borel subgroup.

    Torus part: every generator torus-homogeneous suffices; otherwise the
    translates by diag(t, 1/t) for the sampled t are tested for membership.
    Unipotent part: act(u(z), gen) for z = 1..D+1, membership tested in the
    degree-<=D truncated span.  A translate has degree <= deg(gen) in z, so
    D + 1 sample points cover every coefficient.
    """
    # translates keep the generator's degree; membership needs at least that much room
    D = max(D, ideal.max_degree())
    failures = []
    homog = all(is_torus_homogeneous(g) for g in ideal.generators)
    if not homog:
        for t in torus_samples:
            for k, gen in enumerate(ideal.generators):
                moved = act(torus(t), gen)
                if not in_ideal_truncated(params, ideal, moved, D):
                    failures.append(("torus", Fraction(t), k))
    for k, gen in enumerate(ideal.generators):
        for z in range(1, D + 2):
            moved = act(upper_unipotent(z), gen)
            if moved != gen and not in_ideal_truncated(params, ideal, moved, D):
                failures.append(("unipotent", Fraction(z), k))
                break
    return StabilityResult(not failures, homog, tuple(failures))


def is_b_stable(params: VarietyParams, ideal: IdealSpec, D: int) -> bool:
    return b_stability(params, ideal, D).stable


def commutes_with_grading(params: VarietyParams, g: GroupElement, f: Polynomial) -> bool:
    """Every weight component of f is sent into the same weight."""
    for w, comp in homogeneous_components(params, f).items():
        image = act(g, comp)
        if any(wt != w for wt in homogeneous_components(params, image)):
            return False
    return True
