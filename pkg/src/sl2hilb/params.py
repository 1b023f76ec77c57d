"""Numeric invariants of the SL(2)-variety E_{l,m} with height l = p/q and degree m."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class ParamsError(ValueError):
    """Raised when (p, q, m) does not describe a valid variety."""


@dataclass(frozen=True)
class VarietyParams:
    p: int
    q: int
    m: int
    k: int
    a: int
    b: int
    toric: bool

    @property
    def height(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def smooth(self) -> bool:
        return self.p == self.q

    @property
    def diff(self) -> int:
        """q - p, the degree of the hypersurface X0^(q-p) = X1*X4 - X2*X3."""
        return self.q - self.p

    def require_singular(self) -> None:
        if self.smooth:
            raise ParamsError(
                f"l = 1 (p = q = {self.p}) is the smooth case; this operation needs p < q"
            )

    def require_toric(self) -> None:
        self.require_singular()
        if not self.toric:
            raise ParamsError(
                f"non-toric: q - p = {self.diff} does not divide m = {self.m}"
            )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.m)

    def __str__(self) -> str:
        return f"(p,q,m)=({self.p},{self.q},{self.m})"


def make_params(p: int, q: int, m: int) -> VarietyParams:
    for name, value in (("p", p), ("q", q), ("m", m)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParamsError(f"{name} must be an integer, got {value!r}")
        if value < 1:
            raise ParamsError(f"{name} must be positive, got {value}")
    if gcd(p, q) != 1:
        raise ParamsError(f"p and q must be coprime, gcd({p}, {q}) = {gcd(p, q)}")
    if p > q:
        raise ParamsError(f"height p/q must lie in (0, 1], got p = {p} > q = {q}")

    if p == q:
        # smooth case; b is left at 0 and downstream toric operations refuse it
        return VarietyParams(p=p, q=q, m=m, k=m, a=1, b=0, toric=True)
    k = gcd(m, q - p)
    return VarietyParams(p=p, q=q, m=m, k=k, a=m // k, b=(q - p) // k, toric=m % (q - p) == 0)


def is_toric(params: VarietyParams) -> bool:
    if params.p == params.q:
        return True
    return params.m % (params.q - params.p) == 0
