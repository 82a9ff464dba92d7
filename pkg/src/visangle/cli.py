"""Command-line front end.

Subcommands: ``body-info``, ``integrate``, ``bounds``, ``verify``.
Exit codes: 0 when every check passes, 1 on numerical disagreement or a
violated bound, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import formulas
from .body import BodySpecError, ConvexBody, ConvexityError, parse_body
from .bounds import bounds_report
from .functions import GrowthError, VisualFunction, parse_function
from .quadrature import QuadratureError, QuadratureSpec, integrate_exterior
from .special_fn import DomainError
from .verify import CHECKS, run_checks

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT = 0, 1, 2
METHODS = ("series", "functional", "closed", "direct")
CSV_COLUMNS = ("body_id", "function", "method", "value", "error_estimate", "K", "runtime_ms")

# relative accuracy each route is trusted to; pairs are compared against the sum
ROUTE_TOL = {"closed": 1e-12, "series": 1e-10, "functional": 1e-10, "direct": 1e-7}


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    body_source: str
    function: str = "crofton"
    method: str = "all"
    rel_tol: float = 1e-11
    output: str = "table"
    seed: int | None = None
    timing: bool = False
    threads: int | None = None
    extra: dict = field(default_factory=dict)


# -- helpers -----------------------------------------------------------------------


def _load_body(cfg: RunConfig) -> ConvexBody:
    src = cfg.body_source
    if cfg.seed is not None and src.split(":")[0].strip().lower() == "random":
        rest = src.partition(":")[2].split(",")[1:]
        src = ",".join([f"random:{cfg.seed}"] + rest)
    try:
        return parse_body(src)
    except ConvexityError as exc:
        raise InputError(f"body {cfg.body_source!r}: {exc}") from exc
    except (BodySpecError, OSError) as exc:
        raise InputError(str(exc)) from exc


def _parse_methods(text: str) -> list[str]:
    names = [m.strip().lower() for m in text.split(",") if m.strip()]
    if "all" in names:
        return list(METHODS)
    bad = [m for m in names if m not in METHODS]
    if bad or not names:
        raise InputError(f"unknown method(s) {bad or text!r}; choose from {', '.join(METHODS)} or all")
    return names


def _parse_m_range(text: str) -> list[int]:
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            for sep in ("..", "-"):
                if sep in part:
                    lo, hi = part.split(sep, 1)
                    out.extend(range(int(lo), int(hi) + 1))
                    break
            else:
                out.append(int(part))
    except ValueError:
        raise InputError(f"bad m range {text!r}; use e.g. 3, 1..5 or 2,4,6") from None
    if not out or min(out) < 1 or max(out) > formulas.M_MAX:
        raise InputError(f"m must lie in [1, {formulas.M_MAX}]")
    return out


def closed_form(body: ConvexBody, f: VisualFunction) -> float | None:
    """Closed-form value for the built-in families, ``None`` for anything else."""
    if f.kind == "crofton":
        return formulas.crofton(body)
    if f.kind == "omega_minus_sin_power":
        return formulas.omega_minus_sin_power(body, f.m)
    if f.kind == "sin_power" and f.m >= 3:
        return formulas.sin_power(body, f.m)
    if f.kind == "hurwitz":
        return formulas.hurwitz_integral(body, f.m)
    return None


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return "" if math.isnan(x) else repr(float(x))
    return "" if x is None else str(x)


def _table(headers, rows) -> str:
    cells = [list(map(str, headers))] + [[_fmt(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for r in rows:
        writer.writerow([_fmt(v) for v in r])
    return buf.getvalue()


def _render(fmt: str, headers, rows, payload) -> str:
    if fmt == "csv":
        return _csv(headers, rows)
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return _table(headers, rows)


# -- commands -------------------------------------------------------------------------


def cmd_body_info(cfg: RunConfig) -> tuple[int, str]:
    body = _load_body(cfg)
    info = body.summary().as_dict()
    info["K"] = body.K
    rows = [(k, v) for k, v in info.items()]
    payload = {"body_id": cfg.body_source, **info}
    return EXIT_OK, _render(cfg.output, ("quantity", "value"), rows, payload)


def cmd_integrate(cfg: RunConfig) -> tuple[int, str]:
    body = _load_body(cfg)
    try:
        fs = [parse_function(s) for s in cfg.function.split(",") if s.strip()]
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if not fs:
        raise InputError("no function given")
    methods = _parse_methods(cfg.method)
    spec = QuadratureSpec(rel_tol=cfg.rel_tol)
    rows, payload, status = [], [], EXIT_OK
    for f in fs:
        try:
            f.check_growth()
        except GrowthError as exc:
            raise InputError(str(exc)) from exc
        results = {}
        for method in methods:
            t0 = time.perf_counter()
            err = 0.0
            if method == "series":
                r = formulas.master_series(body, f)
                value, err = r.value, r.error_estimate
            elif method == "functional":
                value = formulas.functional_route(body, f).value
            elif method == "closed":
                value = closed_form(body, f)
                if value is None:
                    continue
            else:
                r = integrate_exterior(body, f, spec, workers=cfg.threads)
                value, err = r.value, r.error_estimate
                if not r.converged:
                    status = EXIT_DISAGREE
            ms = (time.perf_counter() - t0) * 1e3 if cfg.timing else math.nan
            results[method] = (float(value), float(err))
            rows.append((cfg.body_source, f.label, method, value, err, body.K, ms))
        deviations = []
        scale_floor = 1e-12 * body.length**2
        for (ma, (va, ea)), (mb, (vb, eb)) in itertools.combinations(results.items(), 2):
            scale = max(abs(va), abs(vb), scale_floor)
            dev = float(abs(va - vb) / scale)
            tol = float(ROUTE_TOL[ma] + ROUTE_TOL[mb] + (ea + eb) / scale)
            ok = bool(dev <= tol)
            if not ok:
                status = EXIT_DISAGREE
            deviations.append({"pair": f"{ma}-{mb}", "rel_deviation": dev, "tolerance": tol, "ok": ok})
        payload.append(
            {
                "function": f.label,
                "values": {m: {"value": v, "error_estimate": e} for m, (v, e) in results.items()},
                "deviations": deviations,
            }
        )
    if cfg.output == "csv":
        return status, _csv(CSV_COLUMNS, rows)
    if cfg.output == "json":
        return status, json.dumps({"body_id": cfg.body_source, "K": body.K, "results": payload}, indent=2, sort_keys=True) + "\n"
    text = _table(CSV_COLUMNS, rows)
    dev_rows = [(p["function"], d["pair"], d["rel_deviation"], d["tolerance"], "ok" if d["ok"] else "DISAGREE") for p in payload for d in p["deviations"]]
    if dev_rows:
        text += "\n" + _table(("function", "routes", "rel_deviation", "tolerance", "status"), dev_rows)
    return status, text


def cmd_bounds(cfg: RunConfig) -> tuple[int, str]:
    body = _load_body(cfg)
    ms = _parse_m_range(cfg.extra.get("m", "1..5"))
    headers = ("m", "bound", "side", "bound_value", "integral_value", "slack", "satisfied", "applicability")
    rows, payload, skipped, status = [], [], [], EXIT_OK
    for m in ms:
        rep = bounds_report(body, m)
        for b in rep.bounds:
            rows.append((m, b.name, b.side, b.bound_value, b.integral_value, b.slack, b.satisfied, b.applicability))
            if not b.satisfied:
                status = EXIT_DISAGREE
        skipped.extend(f"m={m}: {s}" for s in rep.skipped)
        payload.append({"m": m, "integral_value": rep.integral_value, "bounds": [b.as_dict() for b in rep.bounds], "skipped": rep.skipped})
    if cfg.output == "json":
        return status, json.dumps({"body_id": cfg.body_source, "reports": payload}, indent=2, sort_keys=True) + "\n"
    text = _render(cfg.output, headers, rows, None)
    if cfg.output == "table" and skipped:
        text += "\nnot applicable:\n" + "".join(f"  {s}\n" for s in skipped)
    return status, text


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    only = [s.strip() for s in cfg.extra.get("only", "").split(",") if s.strip()]
    try:
        results = run_checks(only or None)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    rows = [(r.name, r.residual, r.tolerance, "pass" if r.passed else "FAIL", r.detail) for r in results]
    payload = [{"name": r.name, "residual": r.residual, "tolerance": r.tolerance, "passed": r.passed} for r in results]
    status = EXIT_OK if all(r.passed for r in results) else EXIT_DISAGREE
    return status, _render(cfg.output, ("check", "residual", "tolerance", "status", "detail"), rows, payload)


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="visangle", description="Integrals of functions of the visual angle of convex bodies.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table", dest="output")
    common.add_argument("--out", help="write the report here instead of stdout")
    bodyarg = argparse.ArgumentParser(add_help=False)
    bodyarg.add_argument("--body", required=True, help="circle:r | ellipse:a,b[,K] | cw3:a0,a3 | random:seed[,K[,decay]] | JSON file")
    bodyarg.add_argument("--seed", type=int, help="seed for a random:... body")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("body-info", parents=[common, bodyarg], help="geometric functionals of a body")

    q = sub.add_parser("integrate", parents=[common, bodyarg], help="integrate f(w) dP by one or more routes")
    q.add_argument("--f", default="crofton", dest="function", help="crofton | masotti | sinpow:m | hurwitz:m | omspow:m (comma list)")
    q.add_argument("--method", default="all", help="series, functional, closed, direct or all (comma list)")
    q.add_argument("--rel-tol", type=float, default=1e-11, help="relative tolerance of direct quadrature")
    q.add_argument("--threads", type=int, help="threads for direct quadrature (default from VISANGLE_THREADS)")
    q.add_argument("--timing", action="store_true", help="fill runtime_ms (output is then not reproducible)")

    b = sub.add_parser("bounds", parents=[common, bodyarg], help="check inequalities for w^m - sin^m")
    b.add_argument("--m", default="1..5", help="exponents, e.g. 3, 1..8 or 2,4")

    v = sub.add_parser("verify", parents=[common], help="run the identity battery")
    v.add_argument("--only", default="", help="comma list of: " + ", ".join(CHECKS))
    return p


COMMANDS = {"body-info": cmd_body_info, "integrate": cmd_integrate, "bounds": cmd_bounds, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    cfg = RunConfig(
        body_source=getattr(args, "body", ""),
        function=getattr(args, "function", "crofton"),
        method=getattr(args, "method", "all"),
        rel_tol=getattr(args, "rel_tol", 1e-11),
        output=args.output,
        seed=getattr(args, "seed", None),
        timing=getattr(args, "timing", False),
        threads=getattr(args, "threads", None),
        extra={"m": getattr(args, "m", "1..5"), "only": getattr(args, "only", "")},
    )
    try:
        status, text = COMMANDS[args.command](cfg)
    except (InputError, DomainError, ValueError) as exc:
        print(f"visangle: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QuadratureError as exc:
        print(f"visangle: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
