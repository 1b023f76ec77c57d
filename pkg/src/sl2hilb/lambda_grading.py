"""The Lambda-grading of R = Q[X0, X1, Xj], j in {3, 4}.

An exponent triple (d0, d1, dj) maps injectively to

    mu(d0, d1, dj) = (d0 - p d1 + q dj,  d1 - dj,  p d1 - q dj) = (n, c, omega)

and every Lambda-graded piece is spanned by the single monomial f_lambda.
Here n is the G0-weight and c = d1 - dj refines the G_m-weight d = c mod m.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .grading import Monomial, Weight
from .params import VarietyParams


class EmptyWeightSpace(LookupError):
    pass


class NotInLambdaPrime(LookupError):
    pass


class LambdaIndex(NamedTuple):
    n: int
    c: int
    omega: int
    j: int = 3

    def __add__(self, other):  # componentwise, unlike tuple concatenation
        if self.j != other.j:
            raise ValueError("cannot add indices for different second variables")
        return LambdaIndex(self.n + other.n, self.c + other.c, self.omega + other.omega, self.j)

    def triple(self) -> tuple:
        return (self.n, self.c, self.omega)

    def __str__(self) -> str:
        return f"({self.n},{self.c},{self.omega})"


def _check_j(j: int) -> None:
    if j not in (3, 4):
        raise ValueError(f"second variable must be X3 or X4, got X{j}")


def mu(params: VarietyParams, d0: int, d1: int, dj: int, j: int = 3) -> LambdaIndex:
    params.require_singular()
    _check_j(j)
    p, q = params.p, params.q
    return LambdaIndex(d0 - p * d1 + q * dj, d1 - dj, p * d1 - q * dj, j)


def mu_of_monomial(params: VarietyParams, mono: Monomial, j: int = 3) -> LambdaIndex:
    _check_j(j)
    other = 4 if j == 3 else 3
    if mono[2] or mono[other]:
        raise ValueError(f"monomial {mono} is not in Q[X0, X1, X{j}]")
    return mu(params, mono[0], mono[1], mono[j], j)


def exponents(params: VarietyParams, lam) -> tuple | None:
    """(d0, d1, dj) with mu(d0, d1, dj) = lam, or None if lam is outside Lambda."""
    params.require_singular()
    n, c, omega = lam[0], lam[1], lam[2]
    diff = params.diff
    a, b = params.q * c - omega, params.p * c - omega
    if n + omega < 0 or a % diff or a < 0 or b < 0:
        return None
    return (n + omega, a // diff, b // diff)


def in_lambda(params: VarietyParams, lam) -> bool:
    return exponents(params, lam) is not None


def f_lambda(params: VarietyParams, lam, j: int | None = None) -> Monomial | None:
    """The spanning monomial X0^(n+omega) X1^((qc-omega)/(q-p)) Xj^((pc-omega)/(q-p))."""
    if j is None:
        j = getattr(lam, "j", 3)
    _check_j(j)
    exps = exponents(params, lam)
    if exps is None:
        return None
    e = [0] * 5
    e[0], e[1], e[j] = exps
    return tuple(e)


def _omega_upper(params: VarietyParams, c: int) -> int:
    # X1- and Xj-exponents nonnegative: omega <= q c and omega <= p c
    return min(params.p * c, params.q * c)


def _omega_min_closed(params: VarietyParams, n: int, c: int) -> int | None:
    diff = params.diff
    omega = -n + (params.q * c + n) % diff
    return omega if omega <= _omega_upper(params, c) else None


@lru_cache(maxsize=None)
def _omega_min_enumerated(p: int, q: int, n: int, c: int) -> int | None:
    # omega = p c - (q - p) dj with d1 = c + dj >= 0 and d0 = n + p c - (q - p) dj >= 0
    diff = q - p
    lo = max(0, -c)
    best = None
    dj = lo
    while n + p * c - diff * dj >= 0:
        omega = p * c - diff * dj
        best = omega if best is None else min(best, omega)
        dj += 1
    return best


def omega_min(params: VarietyParams, n: int, c: int) -> int:
    """min omega with (n, c, omega) in Lambda; raises NotInLambdaPrime if there is none."""
    params.require_singular()
    closed = _omega_min_closed(params, n, c)
    brute = _omega_min_enumerated(params.p, params.q, n, c)
    if closed != brute:
        raise AssertionError(
            f"omega_min closed form {closed} disagrees with enumeration {brute} at (n,c)=({n},{c}) for {params}"
        )
    if closed is None:
        raise NotInLambdaPrime(f"(n,c)=({n},{c}) is not in Lambda' for {params}")
    return closed


def in_lambda_prime(params: VarietyParams, n: int, c: int) -> bool:
    params.require_singular()
    return _omega_min_closed(params, n, c) is not None


def c_scan_cap(params: VarietyParams, n: int) -> int:
    return -(n // params.q) + params.m * (params.q + abs(n) + 1)


def c_min(params: VarietyParams, n: int, d: int, cap: int | None = None) -> int:
    """Smallest c = d (mod m) with R^c_n nonzero.  Every such c satisfies c >= -n/q."""
    params.require_singular()
    start = -(n // params.q)  # ceil(-n/q)
    start += (d - start) % params.m
    if cap is None:
        cap = c_scan_cap(params, n)
    c = start
    while c <= cap:
        if _omega_min_closed(params, n, c) is not None:
            return c
        c += params.m
    raise EmptyWeightSpace(
        f"empty weight space: no c = {d} (mod {params.m}) up to cap {cap} realizes n = {n} for {params}"
    )


def lambda_min(params: VarietyParams, n: int, d: int, j: int = 3) -> LambdaIndex:
    c = c_min(params, n, d)
    return LambdaIndex(n, c, omega_min(params, n, c), j)


def lambda_min_of_weight(params: VarietyParams, w: Weight, j: int = 3) -> LambdaIndex:
    return lambda_min(params, w.n, w.d, j)


def omegas(params: VarietyParams, n: int, c: int) -> list:
    """All omega with (n, c, omega) in Lambda, ascending in steps of q - p."""
    if not in_lambda_prime(params, n, c):
        return []
    lo = omega_min(params, n, c)
    return list(range(lo, _omega_upper(params, c) + 1, params.diff))


def basis_Rc_n(params: VarietyParams, n: int, c: int, j: int = 3) -> list:
    """Monomial basis {f_lambda} of R^c_n, ordered by increasing omega."""
    return [f_lambda(params, LambdaIndex(n, c, w, j)) for w in omegas(params, n, c)]


def lambda_table(params: VarietyParams, n_values, d: int, classes: int = 2, j: int = 3) -> list:
    """Rows (n, c, omega, f_lambda) for c = c_min, c_min + m, ... (`classes` values of c)."""
    rows = []
    for n in n_values:
        c0 = c_min(params, n, d)
        for k in range(classes):
            c = c0 + k * params.m
            for w in omegas(params, n, c):
                lam = LambdaIndex(n, c, w, j)
                rows.append((lam, f_lambda(params, lam)))
    return rows
