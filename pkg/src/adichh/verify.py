"""The verification suite: canned corpora behind the `verify` subcommands.

Each function runs a fixed battery of exact checks and returns a
VerificationReport.  The corpora are deliberately desk-scale: every cell
is an exact integer computed twice by independent routes, so a verdict
of "pass" means cell-for-cell equality, "fail" means a stable cell
disagreed, and "inconclusive" means some cell never stabilized inside
its window.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from . import completion, hochschild, wpr
from .modules import FPModule
from .reports import Table, VerificationReport, report_for
from .rings import GF, QQ, Field, Ring


def _merge_verdicts(verdicts: Sequence[str]) -> str:
    if any(v == "fail" for v in verdicts):
        return "fail"
    if any(v == "inconclusive" for v in verdicts):
        return "inconclusive"
    return "pass"


# ---------------------------------------------------------------------------
# hkr
# ---------------------------------------------------------------------------

def verify_hkr(n_values: Sequence[int] = (1, 2, 3),
               N_override: Optional[int] = None,
               field: Field = QQ) -> VerificationReport:
    """Completed Hochschild cohomology of k[x_1..x_n] against the
    exterior-power closed form, for i = 0..n."""
    tables: List[Table] = []
    flags: List[str] = []
    verdicts = []
    ranks: Dict[str, int] = {}
    for n in n_values:
        N = N_override if N_override is not None else (4 if n == 3 else 5)
        for i in range(0, n + 1):
            r = hochschild.hkr_check(n, i, N, field)
            verdicts.append(r.verdict)
            cells = {f"d={d}": r.table.dims[d] for d in r.table.window}
            tables.append(Table(f"n={n},i={i},N={N}", cells))
            from math import comb
            ranks[f"n={n},i={i}"] = comb(n, i)
            for m in r.mismatches:
                flags.append(f"n={n},i={i}: mismatch {m}")
            for d in r.table.unstable:
                flags.append(f"n={n},i={i}: guard-unstable degree {d}")
    return report_for("hkr", {"n_values": list(n_values),
                              "field": str(field)},
                      tables, flags, _merge_verdicts(verdicts),
                      extra={"ranks": ranks})


# ---------------------------------------------------------------------------
# main theorem
# ---------------------------------------------------------------------------

def _main_corpus_cases(field: Field):
    """(label, enveloping, a_gens, module, i_values, N) for the corpus."""
    E1 = hochschild.enveloping(1, field)
    Ae = E1.ring
    x, y = Ae.gens()
    a1 = [E1.base.var(0)]
    sq = (x - y) * (x - y)
    cube = (x + y) * (x + y) * (x + y)
    one_var = [
        ("A^e", hochschild.enveloping_free(E1)),
        ("A^e/((x-y)^2)", FPModule.quotient_by_ideal(Ae, [sq])),
        ("A (diagonal)", hochschild.diagonal_bimodule(E1)),
        ("A^e/((x-y)^2,(x+y)^3)", FPModule.quotient_by_ideal(Ae, [sq, cube])),
    ]
    for label, M in one_var:
        yield (f"k[x], {label}", E1, a1, M, (0, 1), 6)
    E2 = hochschild.enveloping(2, field)
    a2 = E2.base.gens()
    for label, M in [("A^e", hochschild.enveloping_free(E2)),
                     ("A (diagonal)", hochschild.diagonal_bimodule(E2))]:
        yield (f"k[x1,x2], {label}", E2, a2, M, (0, 1, 2), 4)


def verify_main_theorem(fields: Sequence[Field] = (QQ, GF(5)),
                        ) -> VerificationReport:
    """Completion of HH^i versus HH^i of the completion on the module
    corpus, over the rationals and F_5."""
    tables: List[Table] = []
    flags: List[str] = []
    verdicts = []
    for field in fields:
        for label, E, a, M, i_values, N in _main_corpus_cases(field):
            for i in i_values:
                r = hochschild.main_theorem_check(E, a, M, i, N)
                verdicts.append(r.verdict)
                name = f"{field}, {label}, i={i}, N={N}"
                cells: Dict[str, Optional[int]] = {}
                for d in r.window:
                    cells[f"left d={d}"] = r.left_dims[d]
                    cells[f"right d={d}"] = r.right.dims[d]
                tables.append(Table(name, cells))
                for m in r.mismatches:
                    flags.append(f"{name}: mismatch {m}")
                for d in r.right.unstable:
                    flags.append(f"{name}: guard-unstable degree {d}")
    return report_for("main-theorem",
                      {"fields": [str(f) for f in fields]},
                      tables, flags, _merge_verdicts(verdicts))


# ---------------------------------------------------------------------------
# gm duality
# ---------------------------------------------------------------------------

def _gm_pairs():
    """Module pairs (label, M, N, a_gens, J) for the duality battery."""
    R1 = Ring(QQ, ["x"])
    (x,) = R1.gens()
    A1 = FPModule.free(R1, (0,))
    k1 = FPModule.quotient_by_ideal(R1, [x])
    yield ("k[x]: (k, A)", k1, A1, [x], 12)
    yield ("k[x]: (A, A)", A1, A1, [x], 12)
    yield ("k[x]: (A, k)", A1, k1, [x], 12)
    yield ("k[x]: (k, k)", k1, k1, [x], 12)
    R2 = Ring(QQ, ["x", "y"])
    x2, y2 = R2.gens()
    A2 = FPModule.free(R2, (0,))
    k2 = FPModule.quotient_by_ideal(R2, [x2, y2])
    fin = FPModule.quotient_by_ideal(R2, [x2 * x2, x2 * y2, y2 * y2])
    yield ("k[x,y]: (A, k)", A2, k2, [x2, y2], 6)
    yield ("k[x,y]: (A, A/(x^2,xy,y^2))", A2, fin, [x2, y2], 6)


def verify_gm_duality(degrees: Sequence[int] = tuple(range(-10, 11)),
                      i_values: Sequence[int] = tuple(range(0, 4)),
                      ) -> VerificationReport:
    """Stabilized tower comparison of RHom(RGamma M, N) and
    RHom(M, truncations of N) on six module pairs."""
    tables: List[Table] = []
    flags: List[str] = []
    verdicts = []
    ext1_witness = None
    for label, M, N, a, J in _gm_pairs():
        r = completion.gm_duality_check(M, N, a, i_values, degrees, J=J)
        verdicts.append(r.verdict)
        cells: Dict[str, Optional[int]] = {}
        for (i, d), cell in sorted(r.left.items()):
            right = r.right.get((i, d))
            lv = cell.value if cell.stable else None
            rv = right.value if right is not None and right.stable else None
            if (lv or 0) != 0 or (rv or 0) != 0 or lv is None or rv is None:
                cells[f"i={i},d={d},left"] = lv
                cells[f"i={i},d={d},right"] = rv
        tables.append(Table(label, cells))
        for m in r.mismatches:
            flags.append(f"{label}: mismatch {m}")
        if label.endswith("(k, A)"):
            lc = r.left.get((1, -1))
            rc = r.right.get((1, -1))
            ext1_witness = (lc.value if lc and lc.stable else None,
                            rc.value if rc and rc.stable else None)
            if ext1_witness != (1, 1):
                flags.append(f"(k, A): expected Ext^1 = k, got {ext1_witness}")
                verdicts.append("fail")
    return report_for("gm-duality",
                      {"degrees": [min(degrees), max(degrees)],
                       "i_values": list(i_values)},
                      tables, flags, _merge_verdicts(verdicts),
                      extra={"ext1_k_A": list(ext1_witness or ())})


# ---------------------------------------------------------------------------
# cofinality / padic / wpr
# ---------------------------------------------------------------------------

def verify_cofinality(n_max: int = 4) -> VerificationReport:
    tables = []
    verdicts = []
    flags = []
    for ring, a_names in [(Ring(QQ, ["x"]), ["x"]),
                          (Ring(QQ, ["x1", "x2"]), ["x1", "x2"])]:
        a = [ring.parse(s) for s in a_names]
        res = completion.cofinality_check(ring, a, n_max)
        verdicts.append("pass" if res["ok"] else "fail")
        cells = {}
        for step in res["steps"]:
            cells[f"n={step['n']},lower"] = int(step["lower"])
            cells[f"n={step['n']},upper"] = int(step["upper"])
            if not (step["lower"] and step["upper"]):
                flags.append(f"{ring}: containment failed at n={step['n']}")
        tables.append(Table(str(ring), cells))
    return report_for("cofinality", {"n_max": n_max}, tables, flags,
                      _merge_verdicts(verdicts))


def verify_padic(primes: Sequence[int] = (2, 3, 5), N: int = 6
                 ) -> VerificationReport:
    tables = []
    verdicts = []
    flags = []
    for p in primes:
        res = completion.padic_check(p, N)
        verdicts.append("pass" if res["ok"] else "fail")
        cells = {f"HH^{i}": order for i, order in res["hh_orders"].items()}
        for t in res["tensor_orders"]:
            cells[f"tensor a={t['a']}"] = t["order"]
        tables.append(Table(f"p={p},N={N}", cells))
        if not res["ok"]:
            flags.append(f"p={p}: collapse identities failed")
    return report_for("padic", {"primes": list(primes), "N": N},
                      tables, flags, _merge_verdicts(verdicts))


def verify_wpr_example(J: int = 8) -> VerificationReport:
    """(x) in k[x,y]/(xy): every tower pro-zero with witness offset 1;
    a regular element certifies trivially alongside."""
    base = Ring(QQ, ["x", "y"])
    x, y = base.gens()
    Q = Ring(QQ, ["x", "y"], quotient_gens=[x * y])
    rep = wpr.wpr_certify(Q, [Q.var(0)], J)
    verdicts = [rep.verdict]
    flags = []
    cells: Dict[str, Optional[int]] = {}
    for (i, j), off in sorted(rep.witness_offsets().items()):
        cells[f"i={i},j={j}"] = off
        if off != 1:
            flags.append(f"witness offset at (i={i},j={j}) is {off}, not 1")
            verdicts.append("fail")
    tables = [Table("k[x,y]/(xy), a=(x)", cells)]
    # regular sequence control: (x) in k[x]
    R1 = Ring(QQ, ["x"])
    rep2 = wpr.wpr_certify(R1, R1.gens(), min(J, 6))
    verdicts.append(rep2.verdict)
    tables.append(Table("k[x], a=(x) (regular control)",
                        {f"i={i},j={j}": off
                         for (i, j), off in sorted(rep2.witness_offsets().items())}))
    return report_for("wpr-example", {"J": J}, tables, flags,
                      _merge_verdicts(verdicts))


def verify_localcoh(J: int = 12) -> VerificationReport:
    """Closed-form local cohomology oracles on free modules."""
    flags = []
    verdicts = []
    tables = []
    degrees = list(range(-10, 1))
    R1 = Ring(QQ, ["x"])
    res1 = completion.local_cohomology(FPModule.free(R1, (0,)),
                                       R1.gens(), J, degrees)
    cells1: Dict[str, Optional[int]] = {}
    ok = res1.all_stable()
    for (i, d), cell in sorted(res1.cells.items()):
        cells1[f"i={i},d={d}"] = cell.value if cell.stable else None
        expected = 1 if (i == 1 and -10 <= d <= -1) else 0
        if not cell.stable:
            flags.append(f"k[x] cell (i={i},d={d}) unstable")
        elif cell.value != expected:
            flags.append(f"k[x] cell (i={i},d={d}) = {cell.value}, "
                         f"expected {expected}")
            verdicts.append("fail")
    verdicts.append("pass" if ok else "inconclusive")
    tables.append(Table("H^i_(x) k[x]", cells1))
    R2 = Ring(QQ, ["x", "y"])
    res2 = completion.local_cohomology(FPModule.free(R2, (0,)),
                                       R2.gens(), J, degrees)
    cells2: Dict[str, Optional[int]] = {}
    ok2 = res2.all_stable()
    for (i, d), cell in sorted(res2.cells.items()):
        cells2[f"i={i},d={d}"] = cell.value if cell.stable else None
        expected = (-d - 1) if (i == 2 and d <= -2) else 0
        if not cell.stable:
            flags.append(f"k[x,y] cell (i={i},d={d}) unstable")
        elif cell.value != expected:
            flags.append(f"k[x,y] cell (i={i},d={d}) = {cell.value}, "
                         f"expected {expected}")
            verdicts.append("fail")
    verdicts.append("pass" if ok2 else "inconclusive")
    tables.append(Table("H^i_(x,y) k[x,y]", cells2))
    return report_for("localcoh", {"J": J, "degrees": [-10, 0]},
                      tables, flags, _merge_verdicts(verdicts))


ALL_CHECKS = {
    "hkr": verify_hkr,
    "main-theorem": verify_main_theorem,
    "gm-duality": verify_gm_duality,
    "cofinality": verify_cofinality,
    "padic": verify_padic,
    "wpr-example": verify_wpr_example,
    "localcoh": verify_localcoh,
}


def verify_all(workers: int = 1) -> Tuple[str, List[VerificationReport]]:
    """Run every check; the suite verdict is the worst individual one."""
    names = list(ALL_CHECKS)
    reports: List[Optional[VerificationReport]] = [None] * len(names)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as ex:
            futs = {ex.submit(ALL_CHECKS[n]): k for k, n in enumerate(names)}
            for f, k in futs.items():
                reports[k] = f.result()
    else:
        for k, n in enumerate(names):
            reports[k] = ALL_CHECKS[n]()
    final = [r for r in reports if r is not None]
    return _merge_verdicts([r.verdict for r in final]), final
