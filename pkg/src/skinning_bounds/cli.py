"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, _kernels
from .constants import PRINTED, check_constant_identities, universal_constants
from .contraction import (BoundReport, OneMinus, asymptotic_rhs, contraction_constant,
                          loglog_ell_over_C, render_one_minus, skinning_factor)
from .errors import BoundsError, RegimeViolation
from .oracles import FAIL, verify_all
from .surface import make_geometry, make_topology
from .towerreal import TowerReal, render

log = logging.getLogger("skinning_bounds")

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3

SWEEP_COLUMNS = ["g", "n", "abs_chi", "kappa", "ell", "epsilon", "t", "a1", "ln_a2", "ln_C",
                 "loglog_ell_over_C", "asymptotic_rhs", "asymptotic_ratio"]

THREADS_ENV = "SKINNING_BOUNDS_THREADS"


class InputError(Exception):
    pass


# serialization -------------------------------------------------------------

def _num(x: float) -> str:
    return repr(float(x))


def _exact(x: TowerReal) -> str:
    return render(x).split(" ≈ ")[0]


def tower_json(x) -> dict:
    if isinstance(x, OneMinus):
        return {"text": render_one_minus(x), "one_minus": tower_json(x.gap)}
    return {"text": render(x), **x.to_dict()}


def report_to_dict(rep: BoundReport) -> dict:
    out = {}
    for name, value in vars(rep).items():
        if isinstance(value, (TowerReal, OneMinus)):
            out[name] = tower_json(value)
        else:
            out[name] = value
    return out


def report_to_row(rep: BoundReport) -> list[str]:
    return [str(rep.genus), str(rep.punctures), str(rep.abs_chi), str(rep.kappa),
            _num(rep.ell), _num(rep.epsilon), _num(rep.t_used), _num(rep.a1), _num(rep.ln_a2),
            _exact(rep.ln_C), _num(rep.loglog_ell_over_C), _num(rep.asymptotic_rhs),
            _num(rep.asymptotic_ratio)]


def report_text(rep: BoundReport) -> str:
    lines = []
    for name, value in vars(rep).items():
        if isinstance(value, OneMinus):
            value = render_one_minus(value)
        elif isinstance(value, TowerReal):
            value = render(value)
        lines.append(f"{name:18} {value}")
    return "\n".join(lines)


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# argument parsing helpers ----------------------------------------------------

def parse_int_range(text: str) -> list[int]:
    """``"3"``, ``"1,2,5"``, ``"1:5"`` or ``"0:10:2"`` (inclusive)."""
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            start, stop, step = parts
            if step <= 0:
                raise ValueError
            values = list(range(start, stop + 1, step))
        else:
            values = [int(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad integer range {text!r}") from None
    if not values:
        raise InputError(f"empty range {text!r}")
    return sorted(set(values))


def parse_float_range(text: str) -> list[float]:
    """``"0.5"``, ``"0.25,0.5"`` or ``"start:stop:step"`` (stop included up to rounding)."""
    try:
        if ":" in text:
            start, stop, step = (float(p) for p in text.split(":"))
            if step <= 0 or stop < start:
                raise ValueError
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            values = [start + i * step for i in range(count)]
        else:
            values = [float(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad real range {text!r}") from None
    if not values:
        raise InputError(f"empty range {text!r}")
    return sorted(set(values))


def parse_boundary(text: str) -> list[tuple[int, int, float]]:
    comps = []
    for i, chunk in enumerate(filter(None, (c.strip() for c in text.split(";"))), start=1):
        parts = chunk.split(",")
        try:
            if len(parts) != 3:
                raise ValueError
            comps.append((int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError:
            raise InputError(f"component {i}: expected 'g,n,l', got {chunk!r}") from None
    if not comps:
        raise InputError("boundary must contain at least one component")
    return comps


def _emit(text: str, output: str | None):
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# commands --------------------------------------------------------------------

def _evaluate(g, n, ell, epsilon, t) -> BoundReport:
    geo = make_geometry(make_topology(g, n), ell, epsilon)
    return contraction_constant(geo, t)


def cmd_bound(args) -> int:
    rep = _evaluate(args.genus, args.punctures, args.systole, args.epsilon, args.t)
    if args.format == "json":
        _emit(dumps_json(report_to_dict(rep)), args.output)
    elif args.format == "csv":
        _emit(rows_to_csv(SWEEP_COLUMNS, [report_to_row(rep)]), args.output)
    else:
        _emit(report_text(rep) + "\n", args.output)
    return EXIT_OK


def _sweep_cell(cell):
    g, n, ell, epsilon, t = cell
    try:
        return _evaluate(g, n, ell, epsilon, t), None
    except BoundsError as exc:
        return None, str(exc)


def sweep_reports(genera, punctures, systoles, epsilon=None, t=1.0, threads=1):
    """Evaluate every ``(g, n, l)`` cell in lexicographic order.

    Returns ``(reports, skipped)`` where ``skipped`` lists ``(cell, reason)``.
    """
    cells = [(g, n, ell, epsilon, t) for g in genera for n in punctures for ell in systoles]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_sweep_cell, cells))
    else:
        results = [_sweep_cell(c) for c in cells]
    reports, skipped = [], []
    for cell, (rep, reason) in zip(cells, results):
        if rep is None:
            skipped.append((cell[:3], reason))
        else:
            reports.append(rep)
    return reports, skipped


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return 1


def cmd_sweep(args) -> int:
    genera = parse_int_range(args.genus)
    punct = parse_int_range(args.punctures)
    systoles = parse_float_range(args.systole)
    reports, skipped = sweep_reports(genera, punct, systoles, args.epsilon, args.t,
                                     _threads(args))
    for (g, n, ell), reason in skipped:
        log.warning("skipped (g=%d, n=%d, l=%r): %s", g, n, ell, reason)
    total = len(genera) * len(punct) * len(systoles)
    log.warning("sweep: %d cells generated, %d evaluated, %d skipped",
                total, len(reports), len(skipped))
    if args.format == "json":
        text = dumps_json([report_to_dict(r) for r in reports])
    elif args.format == "text":
        text = "\n\n".join(report_text(r) for r in reports) + "\n"
    else:
        text = rows_to_csv(SWEEP_COLUMNS, [report_to_row(r) for r in reports])
    _emit(text, args.output)
    return EXIT_OK


def cmd_constants(args) -> int:
    k = universal_constants()
    rows = []
    for name in ("eps0", "c1", "c2", "c3", "c4", "c5", "c7"):
        value = getattr(k, name)
        rows.append({"name": name, "value": value, "printed": PRINTED[name],
                     "abs_diff": abs(value - PRINTED[name])})
    rows.append({"name": "c6", "value": render(k.c6_formula), "printed": k.c6_printed,
                 "abs_diff": None})
    if args.format == "json":
        text = dumps_json(rows)
    elif args.format == "csv":
        text = rows_to_csv(["name", "value", "printed", "abs_diff"],
                           [[r["name"], r["value"], r["printed"], r["abs_diff"]] for r in rows])
    else:
        lines = [f"{'name':6} {'value':>24} {'printed':>10} {'abs_diff':>10}"]
        for r in rows:
            diff = "" if r["abs_diff"] is None else f"{r['abs_diff']:.2e}"
            lines.append(f"{r['name']:6} {str(r['value']):>24} {r['printed']:>10} {diff:>10}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.grid < 1000:
        raise InputError("--grid must be at least 1000")
    if args.tol is not None and args.tol < 0:
        raise InputError("--tol must be non-negative")
    oracle_results = verify_all(args.grid, args.tol)
    identity = check_constant_identities(args.tol)
    failures = [r.claim_id for r in oracle_results if r.status == FAIL]
    failures += [c.name for c in identity if not c.passed]
    documented = [r for r in oracle_results if r.status == "documented"]
    if args.format == "json":
        payload = {
            "oracles": [vars(r) for r in oracle_results],
            "identities": [vars(c) for c in identity],
            "failures": failures,
        }
        text = json.dumps(payload, indent=2, ensure_ascii=False,
                          default=str).replace("NaN", "null") + "\n"
    else:
        lines = [f"{'claim':32} {'status':10} {'worst_point':>14} {'worst_residual':>15} samples"]
        for r in oracle_results:
            lines.append(f"{r.claim_id:32} {r.status:10} {r.worst_point:>14.6g} "
                         f"{r.worst_residual:>15.6g} {r.samples}")
        lines.append("")
        lines.append(f"{'identity':32} {'status':10} {'residual':>14}")
        for c in identity:
            status = "documented" if c.documented else ("pass" if c.passed else "fail")
            lines.append(f"{c.name:32} {status:10} {c.residual:>14.6g}  {c.detail}")
        lines.append("")
        lines.append("documented findings:")
        for r in documented:
            lines.append(f"  {r.claim_id}: {r.note}")
        for c in identity:
            if c.documented:
                lines.append(f"  {c.name}: {c.detail}")
        lines.append("verdict: " + ("FAIL (" + ", ".join(failures) + ")" if failures else "ok"))
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_VERIFY if failures else EXIT_OK


def _genus_schedule(max_genus: int) -> list[int]:
    out, base = [], 10
    while base <= max_genus:
        for m in (1, 2, 5):
            if m * base <= max_genus:
                out.append(m * base)
        base *= 10
    if out[-1] != max_genus:
        out.append(max_genus)
    return out


def asymptotic_rows(max_genus: int, epsilon=None):
    eps0 = universal_constants().eps0
    rows = []
    for n_rule in ("0", "g"):
        for g in _genus_schedule(max_genus):
            n = 0 if n_rule == "0" else g
            top = make_topology(g, n)
            geo = make_geometry(top, 2.0 * eps0, epsilon)
            loglog = loglog_ell_over_C(geo)
            rhs = asymptotic_rhs(top)
            leading = 4.0 * top.abs_chi ** 2 / geo.epsilon
            rows.append({"g": g, "n": n, "abs_chi": top.abs_chi, "kappa": top.kappa,
                         "loglog_ell_over_C": loglog, "asymptotic_rhs": rhs,
                         "ratio": loglog / rhs, "leading_ratio": loglog / leading,
                         "n_rule": n_rule})
    return rows


def _deviation_decreasing(rows) -> dict:
    out = {}
    for rule in ("0", "g"):
        devs = [abs(r["ratio"] - 1.0) for r in rows if r["n_rule"] == rule]
        out[rule] = all(b < a for a, b in zip(devs, devs[1:]))
    return out


def cmd_asymptotic(args) -> int:
    if args.max_genus < 10:
        raise InputError("--max-genus must be at least 10")
    rows = asymptotic_rows(args.max_genus, args.epsilon)
    flags = _deviation_decreasing(rows)
    cols = ["g", "n", "abs_chi", "kappa", "loglog_ell_over_C", "asymptotic_rhs", "ratio",
            "leading_ratio"]
    if args.format == "json":
        text = dumps_json({"rows": [{c: r[c] for c in cols} for r in rows],
                           "deviation_decreasing": {"n=0": flags["0"], "n=g": flags["g"]}})
    elif args.format == "csv":
        text = rows_to_csv(cols, [[r[c] for c in cols] for r in rows])
    else:
        lines = [f"{'g':>6} {'n':>6} {'|chi|':>7} {'kappa':>7} {'loglog(l/C)':>16} "
                 f"{'rhs':>16} {'ratio':>10} {'leading':>10}"]
        for r in rows:
            lines.append(f"{r['g']:>6} {r['n']:>6} {r['abs_chi']:>7} {r['kappa']:>7} "
                         f"{r['loglog_ell_over_C']:>16.6f} {r['asymptotic_rhs']:>16.6f} "
                         f"{r['ratio']:>10.6f} {r['leading_ratio']:>10.6f}")
        lines.append(f"|ratio - 1| decreasing in g: n=0: {'yes' if flags['0'] else 'no'}, "
                     f"n=g: {'yes' if flags['g'] else 'no'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_skinning(args) -> int:
    comps = parse_boundary(args.boundary)
    bound, reports, idx = skinning_factor(comps, args.epsilon, args.t)
    dom = reports[idx]
    if args.format == "json":
        text = dumps_json({"max_norm_bound": tower_json(bound),
                           "dominating_component": idx + 1,
                           "components": [report_to_dict(r) for r in reports]})
    elif args.format == "csv":
        text = rows_to_csv(["component"] + SWEEP_COLUMNS,
                           [[str(i)] + report_to_row(r) for i, r in enumerate(reports, start=1)])
    else:
        blocks = [f"component {i}\n{report_text(r)}" for i, r in enumerate(reports, start=1)]
        blocks.append(f"max norm bound     {render_one_minus(bound)}\n"
                      f"dominating         component {idx + 1} "
                      f"(g={dom.genus}, n={dom.punctures}, l={dom.ell!r})")
        text = "\n\n".join(blocks) + "\n"
    _emit(text, args.output)
    return EXIT_OK


# parser ----------------------------------------------------------------------

def _common(default_format: str = "text") -> argparse.ArgumentParser:
    # fresh parent per subcommand: argparse parents share Action objects
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=default_format)
    common.add_argument("-o", "--output", default=None, help="write to this file instead of stdout")
    common.add_argument("--quiet", action="store_true", help="suppress the version banner")
    return common


def build_parser() -> argparse.ArgumentParser:
    geom = argparse.ArgumentParser(add_help=False)
    geom.add_argument("--epsilon", type=float, default=None, help="thick-part scale (default arcsinh 1)")
    geom.add_argument("--t", type=float, default=1.0, help="free parameter t >= 1 (default 1)")

    p = argparse.ArgumentParser(prog="skinning-bounds", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", parents=[_common(), geom], help="contraction constant of one surface")
    b.add_argument("-g", "--genus", type=int, required=True)
    b.add_argument("-n", "--punctures", type=int, required=True)
    b.add_argument("-l", "--systole", type=float, required=True)
    b.set_defaults(func=cmd_bound)

    s = sub.add_parser("sweep", parents=[_common(), geom], help="evaluate a (g, n, l) grid")
    s.add_argument("-g", "--genus", required=True, help="e.g. 1:5 or 1,2,3")
    s.add_argument("-n", "--punctures", required=True, help="e.g. 0:5")
    s.add_argument("-l", "--systole", required=True, help="e.g. 0.25,0.5,1.0 or 0.1:1.0:0.1")
    s.add_argument("--threads", type=int, default=None,
                   help=f"worker threads (default ${THREADS_ENV} or 1)")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("constants", parents=[_common()], help="universal constants table")
    c.set_defaults(func=cmd_constants)

    v = sub.add_parser("verify", parents=[_common()], help="run the oracle suite")
    v.add_argument("--grid", type=int, default=10_000)
    v.add_argument("--tol", type=float, default=None, help="override every check tolerance")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("asymptotic", parents=[_common()], help="loglog(l/C) against its expansion")
    a.add_argument("--max-genus", type=int, default=100)
    a.add_argument("--epsilon", type=float, default=None)
    a.set_defaults(func=cmd_asymptotic)

    k = sub.add_parser("skinning", parents=[_common(), geom], help="max bound over boundary components")
    k.add_argument("--boundary", required=True, help='"g,n,l;g,n,l;..."')
    k.set_defaults(func=cmd_skinning)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    if not args.quiet:
        print(f"skinning-bounds {__version__} (kernels: {_kernels.BACKEND})", file=sys.stderr)
    try:
        return args.func(args)
    except (InputError, BoundsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except RegimeViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
