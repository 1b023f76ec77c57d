"""Tabular (tsv) and structured (json) renderings of results.

Every document is built from plain dicts and lists with sorted keys, and
rationals are written as "p/q" strings, so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .grading import Polynomial, render_monomial, render_polynomial

FORMATS = ("tsv", "json")


def rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def plain(obj):
    """Convert results into json-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, Polynomial):
        return render_polynomial(obj)
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Table:
    """A header plus rows of cells, and free-form metadata for the json form."""

    title: str
    header: list
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, *cells) -> None:
        if len(cells) != len(self.header):
            raise ValueError(f"row has {len(cells)} cells, header has {len(self.header)}")
        self.rows.append(list(cells))

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "columns": list(self.header),
            "rows": [dict(zip(self.header, map(plain, r))) for r in self.rows],
            **{k: plain(v) for k, v in self.meta.items()},
        }


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return rational(v)
    if isinstance(v, (list, tuple)):
        if not v:
            return "-"
        return ",".join(_cell(x) for x in v)
    if v is None:
        return "-"
    return str(v)


def to_tsv(tables: list, config: dict) -> str:
    lines = ["# " + " ".join(f"{k}={_cell(config[k])}" for k in sorted(config))]
    for t in tables:
        lines.append(f"# {t.title}")
        for k in sorted(t.meta):
            lines.append(f"# {k}: {_cell(t.meta[k])}")
        lines.append("\t".join(t.header))
        lines.extend("\t".join(_cell(c) for c in r) for r in t.rows)
    return "\n".join(lines) + "\n"


def to_json(tables: list, config: dict) -> str:
    doc = {"config": plain(config), "results": [t.as_dict() for t in tables]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render(tables: list, config: dict, fmt: str) -> str:
    if fmt == "tsv":
        return to_tsv(tables, config)
    if fmt == "json":
        return to_json(tables, config)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def hilbert_table(report) -> Table:
    """One row per weight: n, d, dim bound, witness, certificate kind."""
    t = Table(
        f"hilbert {report.variant} s={rational(report.s)}",
        ["n", "d", "dim", "witness", "certificate", "certified"],
        meta={
            "verdict": report.verdict,
            "window": report.window_description(),
            "D": report.degree_bound,
        },
    )
    for r in report.rows:
        wit = render_monomial(r.witness[0]) if len(r.witness) == 1 else [render_monomial(u) for u in r.witness]
        t.add(r.n, r.d, r.dim, wit, r.certificate, r.certified)
    return t
