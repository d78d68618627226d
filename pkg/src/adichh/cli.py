"""Batch command-line front end.

Computations are described by JSON job files (schema-validated, with
JSON-pointer paths on violations) and dispatched to the library; the
`verify` group runs the canned exactness checks.  Exit codes: 0 pass,
2 fail, 3 inconclusive, 1 input error.
"""

from __future__ import annotations

import json
import os
import sys
from typing import Dict, List, Optional, Sequence

import click
import jsonschema

from . import completion, hochschild, verify as verify_mod, wpr as wpr_mod
from .groebner import buchberger
from .koszul import KoszulError
from .modules import (ChainComplex, FPModule, FreeModule, ModuleMap,
                      map_from_columns)
from .reports import Table, emit, report_for
from .rings import GF, QQ, Field, Polynomial, Ring, RingError
from .wpr import WprError

MAX_VARS = 4
MAX_PRECISION = 16
MAX_TOWER = 12

_MODULE_SCHEMA = {
    "oneOf": [
        {"type": "string", "enum": ["free", "diagonal"]},
        {"type": "object",
         "properties": {
             "twists": {"type": "array", "items": {"type": "integer"}},
             "relations": {"type": "array",
                           "items": {"type": "array",
                                     "items": {"type": "string"}}},
         },
         "required": ["twists"],
         "additionalProperties": False},
    ]
}

JOB_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "field": {"type": "string"},
        "ring": {
            "type": "object",
            "properties": {
                "variables": {"type": "array", "maxItems": MAX_VARS,
                              "items": {"type": "string"}},
                "quotient": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["variables"],
            "additionalProperties": False,
        },
        "a": {"type": "array", "items": {"type": "string"}},
        "generators": {"type": "array", "items": {"type": "string"}},
        "module": _MODULE_SCHEMA,
        "module2": _MODULE_SCHEMA,
        "complex": {
            "type": "object",
            "properties": {
                "terms": {"type": "object"},
                "diffs": {"type": "object"},
            },
            "required": ["terms"],
            "additionalProperties": False,
        },
        "parameters": {
            "type": "object",
            "properties": {
                "N": {"type": "integer", "minimum": 1,
                      "maximum": MAX_PRECISION},
                "J": {"type": "integer", "minimum": 1, "maximum": MAX_TOWER},
                "i": {"type": "integer", "minimum": 0},
                "i_values": {"type": "array", "items": {"type": "integer"}},
                "degrees": {"type": "array", "items": {"type": "integer"},
                            "minItems": 2, "maxItems": 2},
                "guard": {"type": "integer", "minimum": 1, "maximum": 4},
                "index": {"type": "integer"},
                "n_vars": {"type": "integer", "minimum": 1, "maximum": 3},
                "n_max": {"type": "integer", "minimum": 1},
                "p": {"type": "integer", "minimum": 2},
            },
            "additionalProperties": False,
        },
        "jobs": {"type": "array"},
    },
    "additionalProperties": False,
}


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# job parsing
# ---------------------------------------------------------------------------

def _load_job(path: str) -> dict:
    try:
        with open(path) as fh:
            job = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read job file: {e}")
    try:
        jsonschema.validate(job, JOB_SCHEMA)
    except jsonschema.ValidationError as e:
        ptr = "/" + "/".join(str(p) for p in e.absolute_path)
        raise InputError(f"schema violation at {ptr}: {e.message}")
    return job


def _parse_field(spec: Optional[str]) -> Field:
    if spec is None or spec in ("QQ", "Q"):
        return QQ
    for prefix in ("GF(", "Fp("):
        if spec.startswith(prefix) and spec.endswith(")"):
            try:
                p = int(spec[len(prefix):-1])
            except ValueError:
                raise InputError(f"bad field descriptor {spec!r}")
            return GF(p)   # primality enforced by the field constructor
    raise InputError(f"bad field descriptor {spec!r}")


def _parse_ring(job: dict) -> Ring:
    spec = job.get("ring")
    if spec is None:
        raise InputError("job needs a 'ring' entry")
    field = _parse_field(job.get("field"))
    plain = Ring(field, spec["variables"])
    qgens = [plain.parse(s) for s in spec.get("quotient", [])]
    if qgens:
        return Ring(field, spec["variables"], quotient_gens=qgens)
    return plain


def _parse_module(ring: Ring, spec, for_env: Optional["hochschild.EnvelopingRing"] = None
                  ) -> FPModule:
    if spec is None:
        raise InputError("job needs a 'module' entry")
    if isinstance(spec, str):
        if for_env is None:
            raise InputError(f"module keyword {spec!r} needs an enveloping "
                             "context")
        if spec == "free":
            return hochschild.enveloping_free(for_env)
        return hochschild.diagonal_bimodule(for_env)
    twists = tuple(spec["twists"])
    amb = FreeModule(ring, twists)
    cols = []
    for col in spec.get("relations", []):
        if len(col) != len(twists):
            raise InputError("relation column length must match twists")
        cols.append(tuple(ring.parse(s) for s in col))
    if not cols:
        return FPModule.free(ring, twists)
    return FPModule(map_from_columns(ring, amb, cols))


def _parse_a(job: dict, ring: Ring) -> List[Polynomial]:
    gens = [ring.parse(s) for s in job.get("a", [])]
    if not gens:
        raise InputError("job needs a nonempty ideal 'a'")
    return gens


def _parse_complex(ring: Ring, spec: dict) -> ChainComplex:
    terms = {}
    for key, twists in spec["terms"].items():
        terms[int(key)] = FreeModule(ring, tuple(twists))
    diffs = {}
    for key, rows in spec.get("diffs", {}).items():
        n = int(key)
        if n not in terms or (n - 1) not in terms:
            raise InputError(f"differential {n} without matching terms")
        m = [[ring.parse(s) for s in row] for row in rows]
        diffs[n] = ModuleMap(terms[n], terms[n - 1], m)
    try:
        return ChainComplex(ring, terms, diffs)
    except Exception as e:
        raise InputError(f"invalid complex: {e}")


def _module_table(M: FPModule, degrees: Sequence[int]) -> Dict[str, int]:
    return {f"d={d}": M.graded_dim(d) for d in degrees}


def _degree_window(params: dict, default=(-10, 10)) -> List[int]:
    lo, hi = params.get("degrees", default)
    if hi - lo > 40:
        raise InputError("degree window too wide (at most 41 degrees)")
    return list(range(lo, hi + 1))


# ---------------------------------------------------------------------------
# dispatchers for computation subcommands
# ---------------------------------------------------------------------------

def _run_gb(job: dict):
    ring = _parse_ring(job)
    gens = [ring.parse(s) for s in job.get("generators", [])]
    if not gens:
        raise InputError("gb needs 'generators'")
    gb = buchberger([(g,) for g in gens], ring)
    basis = sorted(str(v[0]) for v in gb.elements)
    return report_for("gb", {"ring": str(ring)},
                      [Table("reduced basis", {"elements": len(basis)})],
                      [], "pass", extra={"basis": basis})


def _run_homology(job: dict):
    ring = _parse_ring(job)
    if "complex" not in job:
        raise InputError("homology needs a 'complex'")
    C = _parse_complex(ring, job["complex"])
    params = job.get("parameters", {})
    i = params.get("index", params.get("i", 0))
    H = C.homology(i)
    degrees = _degree_window(params)
    return report_for("homology", {"ring": str(ring), "index": i},
                      [Table(f"H_{i} graded dims",
                             _module_table(H, degrees))],
                      [], "pass",
                      extra={"generators": len(H.ambient.twists),
                             "twists": list(H.ambient.twists)})


def _run_torsion(job: dict):
    ring = _parse_ring(job)
    M = _parse_module(ring, job.get("module"))
    a = _parse_a(job, ring)
    res = completion.torsion_submodule(M, a)
    degrees = _degree_window(job.get("parameters", {}), (0, 10))
    return report_for("torsion", {"ring": str(ring), "a": [str(g) for g in a]},
                      [Table("torsion graded dims",
                             _module_table(res.module, degrees))],
                      [], "pass", extra={"exponent": res.exponent})


def _run_complete(job: dict):
    ring = _parse_ring(job)
    M = _parse_module(ring, job.get("module"))
    a = _parse_a(job, ring)
    N = job.get("parameters", {}).get("N", 4)
    C = completion.complete(M, a, N)
    degrees = _degree_window(job.get("parameters", {}), (0, 10))
    return report_for("complete",
                      {"ring": str(ring), "a": [str(g) for g in a], "N": N},
                      [Table("truncation graded dims",
                             _module_table(C, degrees))],
                      [], "pass")


def _run_localcoh(job: dict):
    ring = _parse_ring(job)
    M = _parse_module(ring, job.get("module"))
    a = _parse_a(job, ring)
    params = job.get("parameters", {})
    J = params.get("J", 6)
    degrees = _degree_window(params)
    i_values = params.get("i_values")
    res = completion.local_cohomology(M, a, J, degrees, i_values)
    cells: Dict[str, Optional[int]] = {}
    flags = []
    for (i, d), cell in sorted(res.cells.items()):
        cells[f"i={i},d={d}"] = cell.value if cell.stable else None
        if not cell.stable:
            flags.append(f"cell (i={i},d={d}) not stabilized by J={J}")
    verdict = "pass" if res.all_stable() else "inconclusive"
    return report_for("localcoh",
                      {"ring": str(ring), "a": [str(g) for g in a], "J": J},
                      [Table("local cohomology", cells)], flags, verdict)


def _run_wpr(job: dict):
    ring = _parse_ring(job)
    a = _parse_a(job, ring)
    params = job.get("parameters", {})
    J = params.get("J", 6)
    rep = wpr_mod.wpr_certify(ring, a, J)
    cells = {f"i={i},j={j}": off
             for (i, j), off in sorted(rep.witness_offsets().items())}
    flags = [f"no witness for (i={c.i},j={c.j}) within depth {rep.search_depth}"
             for c in rep.certificates if not c.verified]
    return report_for("wpr", {"ring": str(ring),
                              "a": [str(g) for g in a], "J": J},
                      [Table("witness offsets", cells)], flags, rep.verdict)


def _env_context(job: dict):
    params = job.get("parameters", {})
    n_vars = params.get("n_vars", 1)
    field = _parse_field(job.get("field"))
    E = hochschild.enveloping(n_vars, field)
    return E, params


def _run_hochschild(job: dict):
    E, params = _env_context(job)
    M = _parse_module(E.ring, job.get("module", "diagonal"), for_env=E)
    i = params.get("i", 0)
    flags: List[str] = []
    tables = []
    H = hochschild.hochschild_cohomology(E, M, i)
    degrees = _degree_window(params, (-3, 10))
    tables.append(Table(f"HH^{i} graded dims", _module_table(H, degrees)))
    verdict = "pass"
    if "N" in params:
        a = [E.base.parse(s) for s in job.get("a", [])] or E.base.gens()
        t = hochschild.completed_hochschild(E, a, M, i, params["N"],
                                            params.get("guard", 2))
        tables.append(Table(f"completed HH^{i}, N={params['N']}",
                            {f"d={d}": t.dims[d] for d in t.window}))
        for d in t.unstable:
            flags.append(f"guard-unstable degree {d}")
        verdict = t.verdict
    return report_for("hochschild",
                      {"n_vars": E.n, "field": str(E.ring.field), "i": i},
                      tables, flags, verdict)


_COMMANDS = {
    "gb": _run_gb,
    "homology": _run_homology,
    "torsion": _run_torsion,
    "complete": _run_complete,
    "localcoh": _run_localcoh,
    "wpr": _run_wpr,
    "hochschild": _run_hochschild,
}


def _run_jobs(job: dict, command: str, fmt: str, workers: int) -> int:
    """Run one job or a batch; print reports; return worst exit code."""
    if "jobs" in job:
        subjobs = job["jobs"]
        for sub in subjobs:
            try:
                jsonschema.validate(sub, JOB_SCHEMA)
            except jsonschema.ValidationError as e:
                ptr = "/" + "/".join(str(p) for p in e.absolute_path)
                raise InputError(f"schema violation at {ptr}: {e.message}")
        runner = lambda sub: _COMMANDS[sub.get("command", command)](sub)
        if workers > 1:
            from concurrent.futures import ThreadPoolExecutor
            with ThreadPoolExecutor(max_workers=workers) as ex:
                reports = list(ex.map(runner, subjobs))
        else:
            reports = [runner(sub) for sub in subjobs]
    else:
        reports = [_COMMANDS[command](job)]
    code = 0
    for r in reports:
        click.echo(emit(r, fmt), nl=False)
        code = max(code, r.exit_code)
    return code


# ---------------------------------------------------------------------------
# click wiring
# ---------------------------------------------------------------------------

def _fail(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(1)


@click.group()
@click.option("--format", "fmt", type=click.Choice(["json", "markdown"]),
              default="json", show_default=True)
@click.option("--workers", type=int,
              default=lambda: int(os.environ.get("ADICHH_WORKERS", "1")),
              help="concurrent jobs in a batch")
@click.option("--seed", type=int, default=None,
              help="seed recorded in reports for randomized runs")
@click.pass_context
def main(ctx, fmt, workers, seed):
    """Exact-arithmetic checks of completion and Hochschild cohomology."""
    ctx.ensure_object(dict)
    ctx.obj.update(fmt=fmt, workers=workers, seed=seed)


def _computation_command(name):
    @main.command(name=name)
    @click.option("--job", "job_path", required=True,
                  type=click.Path(exists=False))
    @click.pass_context
    def _cmd(ctx, job_path):
        try:
            job = _load_job(job_path)
            code = _run_jobs(job, name, ctx.obj["fmt"], ctx.obj["workers"])
        except (InputError, RingError, KoszulError, WprError,
                completion.CompletionError, hochschild.HochschildError) as e:
            _fail(str(e))
            return
        sys.exit(code)
    return _cmd


for _name in _COMMANDS:
    _computation_command(_name)


@main.group()
def verify():
    """Run the canned verification suites."""


def _emit_and_exit(ctx, report):
    click.echo(emit(report, ctx.obj["fmt"]), nl=False)
    sys.exit(report.exit_code)


@verify.command("main-theorem")
@click.option("--job", "job_path", default=None, type=click.Path())
@click.pass_context
def verify_main(ctx, job_path):
    """Completion of HH^i vs HH^i of the completion (full corpus, or one
    case from a job file)."""
    try:
        if job_path is None:
            rep = verify_mod.verify_main_theorem()
        else:
            job = _load_job(job_path)
            E, params = _env_context(job)
            M = _parse_module(E.ring, job.get("module", "free"), for_env=E)
            a = [E.base.parse(s) for s in job.get("a", [])] or E.base.gens()
            i = params.get("i", 0)
            N = params.get("N", 4)
            r = hochschild.main_theorem_check(E, a, M, i, N,
                                              params.get("guard", 2))
            cells: Dict[str, Optional[int]] = {}
            for d in r.window:
                cells[f"left d={d}"] = r.left_dims[d]
                cells[f"right d={d}"] = r.right.dims[d]
            flags = [f"mismatch {m}" for m in r.mismatches]
            flags += [f"guard-unstable degree {d}" for d in r.right.unstable]
            rep = report_for("main-theorem",
                             {"n_vars": E.n, "i": i, "N": N,
                              "field": str(E.ring.field)},
                             [Table("both sides", cells)], flags, r.verdict)
    except (InputError, RingError, hochschild.HochschildError,
            completion.CompletionError) as e:
        _fail(str(e))
        return
    _emit_and_exit(ctx, rep)


@verify.command("hkr")
@click.option("--n", "n_vars", type=click.IntRange(1, 3), default=None)
@click.option("--precision", "-N", "precision", type=click.IntRange(1, 8),
              default=None)
@click.pass_context
def verify_hkr_cmd(ctx, n_vars, precision):
    """Completed HH of a polynomial ring vs the exterior-power closed form."""
    try:
        n_values = (n_vars,) if n_vars is not None else (1, 2, 3)
        rep = verify_mod.verify_hkr(n_values, precision)
    except hochschild.HochschildError as e:
        _fail(str(e))
        return
    _emit_and_exit(ctx, rep)


@verify.command("gm-duality")
@click.pass_context
def verify_gm(ctx):
    """Stabilized tower comparison on the module-pair battery."""
    _emit_and_exit(ctx, verify_mod.verify_gm_duality())


@verify.command("cofinality")
@click.option("--n-max", type=click.IntRange(1, 6), default=4,
              show_default=True)
@click.pass_context
def verify_cof(ctx, n_max):
    """Sandwich containments for the two-sided ideal powers."""
    _emit_and_exit(ctx, verify_mod.verify_cofinality(n_max))


@verify.command("padic")
@click.pass_context
def verify_padic_cmd(ctx):
    """Collapse identities over the p-adic integers."""
    _emit_and_exit(ctx, verify_mod.verify_padic())


@verify.command("wpr-example")
@click.option("--tower", "-J", "J", type=click.IntRange(1, 8), default=8,
              show_default=True)
@click.pass_context
def verify_wpr_cmd(ctx, J):
    """Pro-zero certificates for (x) in k[x,y]/(xy)."""
    _emit_and_exit(ctx, verify_mod.verify_wpr_example(J))


@verify.command("localcoh")
@click.pass_context
def verify_localcoh_cmd(ctx):
    """Local cohomology closed-form oracles."""
    _emit_and_exit(ctx, verify_mod.verify_localcoh())


@verify.command("all")
@click.pass_context
def verify_all_cmd(ctx):
    """Run the whole battery; worst verdict wins."""
    verdict, reports = verify_mod.verify_all(ctx.obj["workers"])
    for r in reports:
        click.echo(emit(r, ctx.obj["fmt"]), nl=False)
    sys.exit({"pass": 0, "fail": 2, "inconclusive": 3}[verdict])


if __name__ == "__main__":
    main()
