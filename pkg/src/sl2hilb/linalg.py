"""Exact sparse row reduction over Q.

Vectors are dicts {column key: coefficient}.  Rows are stored with integer
entries (fraction-free elimination with content removal), each row led by its
pivot, the smallest column under the supplied ordering.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, Mapping


def _integerize(vec: Mapping) -> tuple[dict, Fraction]:
    """Return (integer vector, scale) with integer vector = scale * vec."""
    den = 1
    for c in vec.values():
        den = lcm(den, Fraction(c).denominator)
    out = {}
    for k, c in vec.items():
        c = Fraction(c) * den
        if c:
            out[k] = c.numerator
    return out, Fraction(den)


def _content(vec: Mapping) -> int:
    g = 0
    for c in vec.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


class RowSpace:
    """Incrementally maintained echelon basis of a subspace of Q^columns.

    `key` orders columns; pivots are taken at the smallest key, so the
    columns that end up free are the ones late in the order.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None, track: bool = False):
        self._key = key or (lambda c: c)
        self._rows: dict = {}  # pivot column -> integer row
        self._combo: dict = {}  # pivot column -> rational combination of inserted vectors
        self._track = track
        self._ninserted = 0

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> set:
        return set(self._rows)

    def _reduce_int(self, vec: dict, combo: dict | None):
        """Reduce an integer vector in place; returns (vec, combo, multiplier)."""
        key = self._key
        heap = [(key(c), i, c) for i, c in enumerate(vec) if c in self._rows]
        heapq.heapify(heap)
        tiebreak = len(vec)
        mult = 1
        seen: set = set()
        while heap:
            _, _, c = heapq.heappop(heap)
            if c in seen or c not in vec:
                continue
            seen.add(c)
            row = self._rows[c]
            pr, vc = row[c], vec[c]
            g = gcd(pr, vc)
            a, b = pr // g, vc // g
            if a != 1:
                for k in vec:
                    vec[k] *= a
                if combo is not None:
                    for k in combo:
                        combo[k] *= a
                mult *= a
            for k, rc in row.items():
                v = vec.get(k, 0) - b * rc
                if v:
                    if k not in vec and k in self._rows and k not in seen:
                        tiebreak += 1
                        heapq.heappush(heap, (key(k), tiebreak, k))
                    vec[k] = v
                else:
                    vec.pop(k, None)
            if combo is not None:
                for k, rc in self._combo[c].items():
                    v = combo.get(k, 0) - b * rc
                    if v:
                        combo[k] = v
                    else:
                        combo.pop(k, None)
        return vec, combo, mult

    def reduce(self, vec: Mapping) -> dict:
        """Exact remainder of vec modulo the span, as {column: Fraction}."""
        iv, scale = _integerize(vec)
        iv, _, mult = self._reduce_int(iv, None)
        total = scale * mult
        return {k: Fraction(c) / total for k, c in iv.items()}

    def contains(self, vec: Mapping) -> bool:
        iv, _ = _integerize(vec)
        iv, _, _ = self._reduce_int(iv, None)
        return not iv

    def add(self, vec: Mapping) -> dict | None:
        """Insert vec.  Returns None if independent, else the dependency found.

        With tracking on, a dependency is returned as {insertion index: Fraction},
        a combination of previously inserted vectors plus this one summing to zero.
        Stored rows r satisfy r = sum combo[i] * vector_i with rational combo.
        """
        iv, scale = _integerize(vec)
        idx = self._ninserted
        self._ninserted += 1
        combo = {idx: scale} if self._track else None
        if not iv:
            return {idx: Fraction(1)} if self._track else {}
        iv, combo, _ = self._reduce_int(iv, combo)
        if not iv:
            if not self._track:
                return {}
            lead = combo[idx]
            return {k: c / lead for k, c in combo.items() if c}
        g = _content(iv)
        if g > 1:
            iv = {k: c // g for k, c in iv.items()}
            if combo is not None:
                combo = {k: c / g for k, c in combo.items()}
        pivot = min(iv, key=self._key)
        if iv[pivot] < 0:
            iv = {k: -c for k, c in iv.items()}
            if combo is not None:
                combo = {k: -c for k, c in combo.items()}
        self._rows[pivot] = iv
        if self._track:
            self._combo[pivot] = combo
        return None

    def free_columns(self, columns: Iterable) -> list:
        """Columns (from the given set) that are not pivots, in key order."""
        return sorted((c for c in columns if c not in self._rows), key=self._key)


def rank(vectors: Iterable[Mapping], key=None) -> int:
    space = RowSpace(key)
    for v in vectors:
        space.add(v)
    return space.rank


def kernel(images: list, key=None) -> list:
    """Basis of {x : sum_k x_k * images[k] = 0}, each as {index: Fraction}."""
    space = RowSpace(key, track=True)
    out = []
    for v in images:
        dep = space.add(v)
        if dep is not None:
            out.append(dep)
    return out


def rref(vectors: Iterable[Mapping], key=None) -> list:
    """Reduced row echelon form as a list of {column: Fraction}, pivot coefficient 1."""
    space = RowSpace(key)
    for v in vectors:
        space.add(v)
    k = space._key
    pivots = sorted(space._rows, key=k)
    rows = {p: {c: Fraction(x) for c, x in space._rows[p].items()} for p in pivots}
    for p in reversed(pivots):
        r = rows[p]
        lead = r[p]
        rows[p] = r = {c: x / lead for c, x in r.items()}
        for q in pivots:
            if q == p:
                continue
            other = rows[q]
            f = other.get(p)
            if f:
                for c, x in r.items():
                    v = other.get(c, 0) - f * x
                    if v:
                        other[c] = v
                    else:
                        other.pop(c, None)
    return [rows[p] for p in pivots]


def copy_space(space: RowSpace) -> RowSpace:
    """Untracked copy sharing no mutable state with the original's future inserts."""
    out = RowSpace(space._key)
    out._rows = dict(space._rows)
    return out
