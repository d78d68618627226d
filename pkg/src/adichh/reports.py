"""Verification reports: structured results with deterministic emitters.

Every check produces a VerificationReport carrying the statement being
verified (from a static anchor registry), an echo of the inputs, the
per-side dimension tables, stability flags, and a three-valued verdict.
JSON serialization is canonical (sorted keys) so emit -> parse -> emit
is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional


VERDICTS = ("pass", "fail", "inconclusive")

# Statement registry: what each check verifies, in mathematical terms.
ANCHORS: Dict[str, str] = {
    "main-theorem": ("Adic completion commutes with Hochschild cohomology: "
                     "the completion of Ext^i over the enveloping ring agrees "
                     "with Ext^i over the completed enveloping ring, cell for "
                     "cell at every stable filtration level."),
    "hkr": ("Completed Hochschild cohomology of a polynomial ring in n "
            "variables is the i-th exterior power of a free rank-n module "
            "over the completed ring: binomial(n, i) copies of the "
            "truncated power-series ring, degree by degree."),
    "gm-duality": ("Greenlees-May duality: RHom(RGamma_a M, N) and "
                   "RHom(M, LLambda_a N) have equal cohomology, compared "
                   "here through stabilized Koszul and telescope towers."),
    "cofinality": ("The two-sided ideal generated by a in the enveloping "
                   "ring is cofinal with the sum of the one-sided powers: "
                   "aL^2n + aR^2n is contained in I^2n which is contained "
                   "in aL^n + aR^n."),
    "padic": ("Over the p-adic integers the completed enveloping ring "
              "collapses, HH^0 = Z/p^N and HH^i = 0 for i > 0 at every "
              "finite precision."),
    "wpr-example": ("The element x in k[x,y]/(xy) generates a weakly "
                    "proregular ideal: each Koszul homology tower on its "
                    "powers is pro-zero, with witness offset exactly 1."),
    "localcoh": ("Local cohomology towers stabilize to the closed forms: "
                 "H^1_(x) of k[x] is one-dimensional in each degree -1..-10 "
                 "and H^2_(x,y) of k[x,y] has dimension d-1 in degree -d."),
    "torsion": "Torsion submodule computed by stabilized annihilator towers.",
    "complete": "Adic completion at finite precision as a quotient module.",
    "gb": "Reduced Groebner basis computation.",
    "homology": "Homology of a complex of finitely presented modules.",
    "hochschild": "Hochschild cohomology via the diagonal Koszul resolution.",
    "wpr": "Pro-zero certificates for Koszul homology towers.",
}


class ReportError(Exception):
    pass


@dataclass
class Table:
    """A named dimension table with string cell keys."""
    name: str
    cells: Dict[str, Optional[int]]

    def as_dict(self) -> dict:
        return {"name": self.name, "cells": self.cells}


@dataclass
class VerificationReport:
    check_id: str
    anchor: str
    inputs: dict
    tables: List[Table]
    flags: List[str]
    verdict: str
    seed: Optional[int] = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ReportError(f"invalid verdict {self.verdict!r}")

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 2, "inconclusive": 3}[self.verdict]

    def as_dict(self) -> dict:
        d = {"check_id": self.check_id, "anchor": self.anchor,
             "inputs": self.inputs, "tables": [t.as_dict() for t in self.tables],
             "flags": self.flags, "verdict": self.verdict}
        if self.seed is not None:
            d["seed"] = self.seed
        if self.extra:
            d["extra"] = self.extra
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(check_id=d["check_id"], anchor=d["anchor"],
                   inputs=d["inputs"],
                   tables=[Table(t["name"], t["cells"]) for t in d["tables"]],
                   flags=list(d["flags"]), verdict=d["verdict"],
                   seed=d.get("seed"), extra=d.get("extra", {}))


def report_for(check_id: str, inputs: dict, tables: List[Table],
               flags: List[str], verdict: str,
               seed: Optional[int] = None, extra: Optional[dict] = None
               ) -> VerificationReport:
    anchor = ANCHORS.get(check_id, check_id)
    return VerificationReport(check_id, anchor, inputs, tables, flags,
                              verdict, seed, extra or {})


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------

def emit_json(report: VerificationReport) -> str:
    return json.dumps(report.as_dict(), sort_keys=True, indent=2) + "\n"


def parse_json(text: str) -> VerificationReport:
    return VerificationReport.from_dict(json.loads(text))


_MARKS = {"pass": "✓", "fail": "✗", "inconclusive": "?"}


def emit_markdown(report: VerificationReport) -> str:
    lines = [f"# {report.check_id}", "", report.anchor, ""]
    lines.append("| field | value |")
    lines.append("| --- | --- |")
    lines.append(f"| verdict | {_MARKS[report.verdict]} {report.verdict} |")
    for k in sorted(report.inputs):
        lines.append(f"| {k} | {report.inputs[k]} |")
    if report.seed is not None:
        lines.append(f"| seed | {report.seed} |")
    lines.append("")
    for t in report.tables:
        lines.append(f"## {t.name}")
        lines.append("")
        lines.append("| cell | dim | flag |")
        lines.append("| --- | --- | --- |")
        for key in sorted(t.cells):
            v = t.cells[key]
            if v is None:
                lines.append(f"| {key} | - | unstable |")
            else:
                lines.append(f"| {key} | {v} | stable |")
        lines.append("")
    if report.flags:
        lines.append("## flags")
        lines.append("")
        for f in report.flags:
            lines.append(f"- {f}")
        lines.append("")
    return "\n".join(lines)


def emit(report: VerificationReport, fmt: str = "json") -> str:
    if fmt == "json":
        return emit_json(report)
    if fmt == "markdown":
        return emit_markdown(report)
    raise ReportError(f"unknown format {fmt!r}")
