"""Command-line front end.

    qchbounds constants [--conv diameter|radius] [--format text|json|csv] [--out PATH]
    qchbounds bound NAME [--g G] [--n N] [--ell L] [--m M] [--K K] [--C C] [--A A] [--c0 C0]
    qchbounds sweep NAME --param P --from X --to Y --steps N [fixed params]
    qchbounds audit [--conv ...] [--tol ID=VALUE ...]

Exit status: 0 on success, 1 for domain errors (and for an audit with a
FAIL record), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable

from . import __version__, bounds
from .audit import CLAIM_IDS, AuditReport, run_audit
from .bounds import BoundResult, D2Convention, TheoremId, TwistSpec, Unit
from .errors import ConvergenceError, DomainError, NoSignChangeError

TOOL = "qchbounds"

FORMATS = ("text", "json", "csv")

AUDIT_JSON_SCHEMA = {
    "type": "object",
    "required": ["tool", "version", "records"],
    "properties": {
        "tool": {"type": "string"},
        "version": {"type": "string"},
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "paper_value", "computed", "diff", "tol", "status", "notes"],
                "properties": {
                    "id": {"type": "string"},
                    "paper_value": {"type": ["number", "string"]},
                    "computed": {"type": "number"},
                    "diff": {"type": "number"},
                    "tol": {"type": "number"},
                    "status": {"enum": ["PASS", "FAIL", "SENSITIVE"]},
                    "notes": {"type": "string"},
                },
            },
        },
    },
}


def num(x):
    """Round to 12 significant digits for machine-readable output."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        return x
    if isinstance(x, int):
        return x
    if not math.isfinite(x):
        return str(x)
    return float(f"{x:.12g}")


# -- bound dispatch -----------------------------------------------------------

INT_PARAMS = {"g", "n", "m"}
PARAM_FLAGS = ("g", "n", "ell", "m", "K", "C", "A", "c0")


@dataclass(frozen=True)
class BoundSpec:
    required: tuple[str, ...]
    optional: tuple[str, ...]
    run: Callable[[dict, D2Convention], BoundResult]

    @property
    def params(self) -> tuple[str, ...]:
        return self.required + self.optional


def _multitwist(p: dict, conv: D2Convention) -> BoundResult:
    t = TwistSpec(p["m"], p["ell"])
    return BoundResult(
        bounds.multi_twist_bound(t),
        TheoremId.MULTI_TWIST,
        {"m": t.m, "ell": t.ell, "right_branch": bounds.multi_twist_right_branch(t)},
    )


BOUNDS: dict[str, BoundSpec] = {
    "counting": BoundSpec(
        ("g", "n"), (),
        lambda p, c: BoundResult(bounds.counting_bound(p["g"], p["n"]),
                                 TheoremId.COUNTING, {"g": p["g"], "n": p["n"]}),
    ),
    "finite": BoundSpec(("g",), (), lambda p, c: bounds.finite_subgroup_bound(p["g"])),
    "periodic": BoundSpec(("g",), (), lambda p, c: bounds.periodic_bound(p["g"])),
    "pa": BoundSpec((), ("g",), lambda p, c: bounds.pseudo_anosov_constant(p.get("g", 2))),
    "mu_g": BoundSpec(
        ("g", "K"), (),
        lambda p, c: BoundResult(bounds.mu_g(p["g"], p["K"]), TheoremId.MU_G,
                                 {"g": p["g"], "K": p["K"]}),
    ),
    "multitwist": BoundSpec(("m", "ell"), (), _multitwist),
    "phi": BoundSpec(
        ("ell",), (),
        lambda p, c: BoundResult(bounds.phi(p["ell"], c), TheoremId.EMBEDDED_DISK,
                                 {"ell": p["ell"], "d2": c.d2}, Unit.SCALAR),
    ),
    "psi": BoundSpec(
        ("ell",), (),
        lambda p, c: BoundResult(bounds.psi_mt(p["ell"]), TheoremId.MULTI_TWIST,
                                 {"m": 1, "ell": p["ell"]}),
    ),
    "torsionfree": BoundSpec(
        ("g",), (),
        lambda p, c: BoundResult(bounds.torsion_free_bound(p["g"]), TheoremId.TORSION_FREE,
                                 {"g": p["g"]}, Unit.LOG_DILATATION),
    ),
    "torelli": BoundSpec(
        ("A", "c0"), (),
        lambda p, c: BoundResult(float(bounds.torelli_threshold(p["A"], p["c0"])),
                                 TheoremId.TORELLI_THRESHOLD,
                                 {"A": p["A"], "c0": p["c0"]}, Unit.GENUS),
    ),
    "counting-hypothesis": BoundSpec(
        ("C",), (),
        lambda p, c: BoundResult(bounds.hypothetical_counting_bound(p["C"]),
                                 TheoremId.HYPOTHETICAL_COUNTING, {"C": p["C"]}),
    ),
}


def evaluate_bound(name: str, params: dict, conv: D2Convention = D2Convention.DIAMETER) -> BoundResult:
    spec = BOUNDS[name]
    missing = [k for k in spec.required if params.get(k) is None]
    if missing:
        raise KeyError(missing)
    p = {k: params[k] for k in spec.params if params.get(k) is not None}
    return spec.run(p, D2Convention(conv))


# -- rendering ----------------------------------------------------------------


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _envelope(**kw) -> dict:
    return {"tool": TOOL, "version": __version__, **kw}


def constants_table(conv: D2Convention) -> list[tuple[str, str, str, float]]:
    """Rows ``(id, theorem, formula, value)`` for every named constant."""
    k_a = bounds.pseudo_anosov_constant().value
    L, kd = bounds.multi_twist_constant(conv)
    return [
        ("K_F", "finite subgroups", "sqrt psi(2 arccosh(1/42 + 1))",
         bounds.finite_subgroup_bound(2).value),
        ("K_P", "periodic classes", "sqrt psi(2 arccosh(6/5))",
         bounds.periodic_bound(2).value),
        ("K_A", "pseudo-Anosov classes", "root of K = mu_2(K)", k_a),
        ("L", "multi-twists", f"phi(L) = psi_mt(L), {conv.value} convention", L),
        ("K_D", "multi-twists", "phi(L)", kd.value),
        ("K_C", "pure cyclic subgroups", "min(K_D, K_A)", min(kd.value, k_a)),
        ("logK_T", "Torelli / congruence", "FLM log-dilatation floor", bounds.flm_bound()),
        ("K_id", "identity classes only", "external constant",
         bounds.CONSTANTS.identity_class_bound),
        ("logK_torsion_free_g2", "torsion-free subgroups", "1/(7000 g^2) at g = 2",
         bounds.torsion_free_bound(2)),
    ]


def render_constants(conv: D2Convention, fmt: str) -> str:
    rows = constants_table(conv)
    if fmt == "json":
        return _json(_envelope(
            convention=conv.value,
            constants=[{"id": i, "theorem": t, "formula": f, "value": num(v)}
                       for i, t, f, v in rows],
        ))
    if fmt == "csv":
        return _csv([["id", "theorem", "value"]] + [[i, t, f"{v:.12g}"] for i, t, _, v in rows])
    head = max(len(f"{i} {v:.6g}") for i, _, _, v in rows) + 2
    width = max(len(t) for _, t, _, _ in rows)
    lines = [f"{i} {v:.6g}".ljust(head) + f"{t:<{width}}  {f}" for i, t, f, v in rows]
    return "\n".join(lines) + "\n"


def render_bound(name: str, res: BoundResult, fmt: str) -> str:
    if fmt == "json":
        return _json(_envelope(bound={
            "name": name,
            "theorem": res.theorem_id.value,
            "value": num(res.value),
            "unit": res.unit.value,
            "inputs": {k: num(v) for k, v in res.inputs.items()},
        }))
    if fmt == "csv":
        keys = list(res.inputs)
        return _csv([["name", "theorem", "unit", "value"] + keys,
                      [name, res.theorem_id.value, res.unit.value, f"{res.value:.12g}"]
                      + [f"{num(res.inputs[k])}" for k in keys]])
    extra = ", ".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}"
                      for k, v in res.inputs.items())
    return f"{name} {res.value:.6g}  [{res.unit.value}; {res.theorem_id.value}; {extra}]\n"


def render_sweep(name: str, param: str, series: list[tuple[float, float]], fmt: str) -> str:
    if fmt == "json":
        return _json(_envelope(bound=name, param=param,
                               series=[{param: num(x), "value": num(v)} for x, v in series]))
    if fmt == "csv":
        return _csv([[param, "value"]] + [[f"{num(x)}", f"{v:.12g}"] for x, v in series])
    return "".join(f"{x:<14.6g}{v:.6g}\n" for x, v in series)


def audit_json(report: AuditReport) -> dict:
    return _envelope(
        convention=report.precision_config.get("convention"),
        timestamp=report.timestamp,
        precision=report.precision_config,
        records=[
            {
                "id": r.id,
                "description": r.description,
                "paper_value": num(r.paper_value),
                "computed": num(r.computed_value),
                "diff": num(r.abs_diff),
                "tol": num(r.tolerance),
                "status": r.status.value,
                "notes": r.convention_notes,
            }
            for r in report.records
        ],
    )


def render_audit(report: AuditReport, fmt: str) -> str:
    if fmt == "json":
        return _json(audit_json(report))
    header = ["id", "paper_value", "computed", "diff", "tol", "status", "notes"]
    if fmt == "csv":
        rows = [header] + [
            [r.id, f"{num(r.paper_value)}", f"{r.computed_value:.12g}",
             f"{r.abs_diff:.12g}", f"{r.tolerance:.12g}", r.status.value, r.convention_notes]
            for r in report.records
        ]
        return _csv(rows)
    w = max(len(r.id) for r in report.records)
    lines = [f"{'id':<{w}}  {'status':<9}  {'computed':>12}  {'printed':>14}  {'diff':>9}  {'tol':>7}"]
    for r in report.records:
        printed = r.paper_value if isinstance(r.paper_value, str) else f"{r.paper_value:.6g}"
        lines.append(
            f"{r.id:<{w}}  {r.status.value:<9}  {r.computed_value:>12.6g}  {printed:>14}  "
            f"{r.abs_diff:>9.2g}  {r.tolerance:>7.2g}"
        )
        if r.convention_notes:
            lines.append(f"{'':<{w}}    {r.convention_notes}")
    n_fail = len(report.failed)
    lines.append(f"{len(report.records)} claims, {n_fail} FAIL "
                 f"(convention {report.precision_config.get('convention')})")
    return "\n".join(lines) + "\n"


# -- argument parsing ---------------------------------------------------------


def _add_output_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", metavar="PATH", help="write here instead of standard output")


def _add_conv(p: argparse.ArgumentParser) -> None:
    p.add_argument("--conv", choices=[c.value for c in D2Convention], default="diameter",
                   help="reading of the embedded-disk constant (default: diameter)")


def _add_params(p: argparse.ArgumentParser) -> None:
    for flag in PARAM_FLAGS:
        p.add_argument(f"--{flag}", type=int if flag in INT_PARAMS else float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL,
        description="Quasiconformal homogeneity lower bounds and constant audit.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="table of named constants")
    _add_conv(p)
    _add_output_opts(p)

    p = sub.add_parser("bound", help="evaluate one bound")
    p.add_argument("name", choices=sorted(BOUNDS))
    _add_params(p)
    _add_conv(p)
    _add_output_opts(p)

    p = sub.add_parser("sweep", help="evaluate a bound over a parameter range")
    p.add_argument("name", choices=sorted(BOUNDS))
    p.add_argument("--param", required=True, choices=PARAM_FLAGS)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    _add_params(p)
    _add_conv(p)
    _add_output_opts(p)

    p = sub.add_parser("audit", help="recompute every audited claim")
    p.add_argument("--tol", action="append", default=[], metavar="ID=VALUE",
                   help="override a claim tolerance (repeatable)")
    _add_conv(p)
    _add_output_opts(p)
    return parser


def _parse_tol(parser: argparse.ArgumentParser, items: list[str]) -> dict[str, float]:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            parser.error(f"--tol expects ID=VALUE, got {item!r}")
        if key not in CLAIM_IDS:
            parser.error(f"--tol: unknown claim id {key!r}")
        try:
            tol = float(val)
        except ValueError:
            parser.error(f"--tol: bad number {val!r}")
        if not tol >= 0.0:
            parser.error(f"--tol: tolerance must be >= 0, got {val!r}")
        out[key] = tol
    return out


def _sweep_values(parser, args) -> list:
    if args.steps < 2:
        parser.error("--steps must be >= 2")
    if not args.start < args.stop:
        parser.error("--from must be smaller than --to")
    step = (args.stop - args.start) / (args.steps - 1)
    xs = [args.start + i * step for i in range(args.steps - 1)] + [args.stop]
    if args.param in INT_PARAMS:
        xs = sorted({int(round(x)) for x in xs})
    return xs


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    conv = D2Convention(args.conv)

    try:
        if args.command == "constants":
            _emit(render_constants(conv, args.format), args.out)
            return 0

        if args.command == "audit":
            report = run_audit(conv, _parse_tol(parser, args.tol))
            _emit(render_audit(report, args.format), args.out)
            return 0 if report.ok else 1

        spec = BOUNDS[args.name]
        params = {k: getattr(args, k) for k in PARAM_FLAGS}
        if args.command == "bound":
            missing = [k for k in spec.required if params[k] is None]
            if missing:
                parser.error(f"bound {args.name} needs " + ", ".join(f"--{k}" for k in missing))
            res = evaluate_bound(args.name, params, conv)
            _emit(render_bound(args.name, res, args.format), args.out)
            return 0

        # sweep
        if args.param not in spec.params:
            parser.error(f"bound {args.name} has no parameter {args.param!r}; "
                         f"choose from {', '.join(spec.params) or 'none'}")
        missing = [k for k in spec.required if k != args.param and params[k] is None]
        if missing:
            parser.error(f"bound {args.name} needs " + ", ".join(f"--{k}" for k in missing))
        series = []
        for x in _sweep_values(parser, args):
            params[args.param] = x
            series.append((x, evaluate_bound(args.name, params, conv).value))
        _emit(render_sweep(args.name, args.param, series, args.format), args.out)
        return 0
    except (DomainError, NoSignChangeError, ConvergenceError) as exc:
        print(f"{TOOL}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
