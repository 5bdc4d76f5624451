"""Command-line front end.

Subcommands: ``eval``, ``table1``, ``killdemo``, ``limit-scan``, ``closed``
and ``conformance``.  Data goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 2 flag or parse error, 3 domain error, 4
non-convergence (including the oracle's refusal of unbounded growth).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

import numpy as np

from . import closed_form as cf
from . import conformance as conf
from . import cyl_gaussian as cyl
from . import sph_gaussian as sph
from .errors import (
    AccuracyLossError,
    BesselIntError,
    DegenerateError,
    DomainError,
    NonConvergenceError,
    OverflowRangeError,
)
from .oracle import DEFAULT_CONFIG, gaussian_integrand, kill_range, oracle_gaussian
from .types import (
    DistributionalValue,
    EvalResult,
    GaussKind,
    Interval,
    Method,
    RadialIntegralSpec,
    complex_from_json,
    complex_to_json,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4

CYL_KINDS = tuple(k.value for k in GaussKind)
SPH_KINDS = ("jj", "jy", "yy", "jym")
_SPH_FUNCS = {"jj": sph.int_jj, "jy": sph.int_jy, "yy": sph.int_yy, "jym": sph.int_jym}

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^(?P<re>{_NUM})?(?:(?P<im>[+-]\s*(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?$")


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi``, ``a-bi``, ``bi`` (spaces allowed, exponents allowed)."""
    t = text.replace(" ", "")
    if not t:
        raise argparse.ArgumentTypeError("empty complex number")
    if t.endswith("i") and re.fullmatch(rf"{_NUM}i", t):
        body = t[:-1]
        return complex(0.0, float(body))
    m = _COMPLEX_RE.match(t)
    if not m or m.group(0) == "":
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}; use a+bi")
    re_part = float(m.group("re")) if m.group("re") else 0.0
    im = m.group("im")
    if im is None:
        return complex(re_part, 0.0)
    im = im.replace(" ", "")
    if im in ("+", "-"):
        im += "1"
    try:
        return complex(re_part, float(im))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}") from exc


def _float(text: str) -> float:
    try:
        v = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    return v


def fmt_complex(z: complex, digits: int = 10) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


# ---------------------------------------------------------------------------
# record serialization
# ---------------------------------------------------------------------------


def eval_result_to_json(res: EvalResult) -> dict:
    return {
        "regular": complex_to_json(res.regular),
        "delta_coeff": complex_to_json(res.delta_coeff),
        "delta_tag": "delta(K-k)",
        "method": res.method.value,
        "err_estimate": float(res.err_estimate),
        "notes": res.notes,
    }


def eval_result_from_json(d: dict) -> EvalResult:
    return EvalResult(
        DistributionalValue(complex_from_json(d["regular"]), complex_from_json(d["delta_coeff"])),
        Method(d["method"]),
        float(d["err_estimate"]),
        d.get("notes", ""),
    )


def _write_csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _validate_kind(kind: str, n, b):
    if kind in SPH_KINDS:
        if n is None:
            raise DomainError(f"spherical kind {kind} needs --n")
        if n < 0:
            raise DomainError("n must be a non-negative integer")
        return n
    if kind in CYL_KINDS:
        order = b if b is not None else n
        if order is None:
            raise DomainError(f"cylindrical kind {kind} needs --b (or --n)")
        if order < 0:
            raise DomainError("order b must be non-negative")
        return order
    raise DomainError(f"unknown kind {kind!r}")


def _analytic(kind, order, K, k, eta) -> EvalResult:
    if eta <= 0:
        raise DomainError("eta must be positive")
    if kind in SPH_KINDS:
        v = _SPH_FUNCS[kind](order, K, k, eta)
    else:
        v = cyl._DISPATCH[GaussKind(kind)](order, K, k, eta)
    return EvalResult(DistributionalValue(complex(v), 0j), Method.analytic)


def _quadrature(kind, order, K, k, eta) -> EvalResult:
    if eta <= 0:
        raise DomainError("eta must be positive")
    if kind == "yy" and order != 0:
        # same precondition as the analytic path
        _analytic(kind, order, K, k, eta)
    return oracle_gaussian(kind, order, K, k, eta, DEFAULT_CONFIG)


def cmd_eval(args) -> tuple[str, int]:
    order = _validate_kind(args.kind, args.n, args.b)
    records = {}
    if args.method in ("analytic", "both"):
        records["analytic"] = _analytic(args.kind, order, args.K, args.k, args.eta)
    if args.method in ("quadrature", "both"):
        records["quadrature"] = _quadrature(args.kind, order, args.K, args.k, args.eta)
    dev = None
    if len(records) == 2:
        a = records["analytic"].regular
        q = records["quadrature"].regular
        dev = {"abs_dev": abs(a - q), "rel_dev": abs(a - q) / abs(q) if q else float("inf")}
    head = {"kind": args.kind, "order": order, "K": args.K, "k": args.k, "eta": args.eta}
    if args.format == "json":
        out = {
            "kind": args.kind,
            "order": order,
            "K": complex_to_json(args.K),
            "k": complex_to_json(args.k),
            "eta": args.eta,
            "results": {m: eval_result_to_json(r) for m, r in records.items()},
        }
        if dev:
            out.update(dev)
        return json.dumps(out, indent=2), EXIT_OK
    if args.format == "csv":
        rows = [
            [args.kind, order, m, repr(r.regular.real), repr(r.regular.imag), repr(r.err_estimate)]
            for m, r in records.items()
        ]
        return _write_csv(rows, ["kind", "order", "method", "re", "im", "err_estimate"]), EXIT_OK
    lines = [f"{head['kind']} order={order} K={fmt_complex(args.K)} k={fmt_complex(args.k)} eta={args.eta:g}"]
    for m, r in records.items():
        lines.append(f"  {m:<10s} {fmt_complex(r.regular)}  (err ~ {r.err_estimate:.2e})")
    if dev:
        lines.append(f"  deviation  abs {dev['abs_dev']:.3e}  rel {dev['rel_dev']:.3e}")
    return "\n".join(lines), EXIT_OK


def _reports_out(reports, fmt, header) -> str:
    if fmt == "json":
        return conf.reports_to_json(reports, header)
    if fmt == "csv":
        return conf.reports_to_csv(reports)
    lines = []
    for r in reports:
        a = r.analytic if r.analytic is not None else r.oracle
        lines.append(
            f"{'PASS' if r.passed else 'FAIL'}  {r.id:<48s} "
            f"{fmt_complex(a) if a is not None else '-':>34s}  "
            f"expected {fmt_complex(r.expected) if r.expected is not None else '-':>30s}  "
            f"rel {r.rel_dev:.2e}"
        )
        if r.notes and not r.passed:
            lines.append(f"      {r.notes}")
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{n_pass}/{len(reports)} passed")
    return "\n".join(lines)


def cmd_table1(args) -> tuple[str, int]:
    reports = conf.run_suite("table1")
    print(f"table1: {sum(r.passed for r in reports)}/{len(reports)} pass", file=sys.stderr)
    return _reports_out(reports, args.format, {"suite": "table1"}), EXIT_OK


def cmd_conformance(args) -> tuple[str, int]:
    reports = conf.run_suite(args.suite, seed=args.seed)
    print(f"{args.suite}: {sum(r.passed for r in reports)}/{len(reports)} pass", file=sys.stderr)
    return _reports_out(reports, args.format, {"suite": args.suite, "seed": args.seed}), EXIT_OK


def killdemo_data(etas, samples: int, x_max: float | None = None) -> dict:
    """Curve samples and damped integral values for the kill demonstration."""
    etas = sorted(float(e) for e in etas)
    if not etas or min(etas) <= 0:
        raise DomainError("eta values must be positive")
    if samples < 2:
        raise DomainError("samples must be at least 2")
    values = []
    for eta in etas:
        res = conf.kill_quadrature(eta)
        values.append({"eta": eta, "value": res.regular, "err_estimate": res.err_estimate})
    growth = abs(conf.KILL_Y_ARG.imag)
    if x_max is None:
        x_max = kill_range(min(etas), 0.0, growth, 1.0, DEFAULT_CONFIG)
    x = np.linspace(0.0, x_max, samples)
    f = gaussian_integrand("jy", 1, conf.KILL_J_ARG, conf.KILL_Y_ARG)
    # the integrand vanishes linearly at the origin
    undamped = np.zeros_like(x)
    undamped[x > 0] = np.abs(f(x[x > 0]))
    damped = {eta: undamped * np.exp(-eta * x * x) for eta in etas}
    return {
        "j_arg": conf.KILL_J_ARG,
        "y_arg": conf.KILL_Y_ARG,
        "n": 1,
        "x": x,
        "undamped": undamped,
        "damped": damped,
        "values": values,
        "limit": conf.kill_limit(),
    }


def cmd_killdemo(args) -> tuple[str, int]:
    data = killdemo_data(args.eta, args.samples, args.x_max)
    etas = sorted(data["damped"])
    if args.format == "json":
        out = {
            "j_arg": complex_to_json(data["j_arg"]),
            "y_arg": complex_to_json(data["y_arg"]),
            "n": 1,
            "x": data["x"].tolist(),
            "undamped": data["undamped"].tolist(),
            "damped": {repr(e): data["damped"][e].tolist() for e in etas},
            "values": [
                {"eta": v["eta"], "value": complex_to_json(v["value"]), "err_estimate": v["err_estimate"]}
                for v in data["values"]
            ],
            "limit": complex_to_json(data["limit"]),
        }
        return json.dumps(out), EXIT_OK
    if args.format == "csv":
        header = ["x", "undamped"] + [f"damped_eta_{e:g}" for e in etas]
        rows = [
            [repr(float(data["x"][i])), repr(float(data["undamped"][i]))]
            + [repr(float(data["damped"][e][i])) for e in etas]
            for i in range(len(data["x"]))
        ]
        for v in data["values"]:
            print(f"eta={v['eta']:g} integral={fmt_complex(v['value'])}", file=sys.stderr)
        print(f"limit={fmt_complex(data['limit'])}", file=sys.stderr)
        return _write_csv(rows, header), EXIT_OK
    lines = ["damped integral of x^2 j_1(1.37 x) y_1((2.96+0.457i) x) exp(-eta x^2)"]
    for v in data["values"]:
        lines.append(f"  eta={v['eta']:<8g} {fmt_complex(v['value'])}  (err ~ {v['err_estimate']:.1e})")
    lines.append(f"  limit      {fmt_complex(data['limit'])}")
    lines.append(f"  {len(data['x'])} curve samples on [0, {data['x'][-1]:.4g}]; use --format csv for the data")
    return "\n".join(lines), EXIT_OK


def limit_scan_data(kind, n, K, k, eta_start, eta_end, points) -> dict:
    if not eta_start > eta_end > 0:
        raise DomainError("need eta_start > eta_end > 0")
    if points < 2:
        raise DomainError("points must be at least 2")
    if kind not in ("jj", "jy", "yy0"):
        raise DomainError("kind must be jj, jy or yy0")
    lim = sph.limit_eta0(kind, n, K, k)
    fn = {"jj": sph.int_jj, "jy": sph.int_jy, "yy0": sph.int_yy}[kind]
    etas = np.geomspace(eta_start, eta_end, points)
    rows = []
    for eta in etas:
        v = complex(fn(n, K, k, float(eta)))
        rows.append({"eta": float(eta), "value": v, "distance": abs(v - lim.regular)})
    # only jy approaches its limit algebraically; the others decay like
    # exp(-(K-k)^2/(4 eta)) and have no power-law order
    usable = [(r["eta"], r["distance"]) for r in rows if r["distance"] > 0]
    order = None
    if kind == "jy" and len(usable) >= 2:
        e, d = np.array(usable).T
        order = float(np.polyfit(np.log(e), np.log(d), 1)[0])
    return {"kind": kind, "n": n, "K": K, "k": k, "limit": lim, "rows": rows, "order": order}


def cmd_limit_scan(args) -> tuple[str, int]:
    d = limit_scan_data(args.kind, args.n, args.K, args.k, args.eta_start, args.eta_end, args.points)
    if args.format == "json":
        out = {
            "kind": d["kind"],
            "n": d["n"],
            "K": complex_to_json(d["K"]),
            "k": complex_to_json(d["k"]),
            "limit": {
                "regular": complex_to_json(d["limit"].regular),
                "delta_coeff": complex_to_json(d["limit"].delta_coeff),
                "delta_tag": "delta(K-k)",
            },
            "rows": [
                {"eta": r["eta"], "value": complex_to_json(r["value"]), "distance": r["distance"]}
                for r in d["rows"]
            ],
            "order": d["order"],
        }
        return json.dumps(out, indent=2), EXIT_OK
    if args.format == "csv":
        rows = [[repr(r["eta"]), repr(r["value"].real), repr(r["value"].imag), repr(r["distance"])] for r in d["rows"]]
        print(f"fitted order: {d['order']}", file=sys.stderr)
        return _write_csv(rows, ["eta", "re", "im", "distance"]), EXIT_OK
    lim = d["limit"]
    lines = [
        f"limit: {fmt_complex(lim.regular)} + ({fmt_complex(lim.delta_coeff)}) delta(K-k)",
        f"{'eta':>12s}  {'value':>40s}  {'distance':>12s}",
    ]
    for r in d["rows"]:
        lines.append(f"{r['eta']:12.4e}  {fmt_complex(r['value']):>40s}  {r['distance']:12.4e}")
    lines.append(f"fitted order: {d['order']:.4f}" if d["order"] is not None else "fitted order: n/a")
    return "\n".join(lines), EXIT_OK


def cmd_closed(args) -> tuple[str, int]:
    if args.L is None and not args.inf:
        raise DomainError("give either --L or --inf")
    if args.L is not None and args.inf:
        raise DomainError("--L and --inf are exclusive")
    try:
        iv = Interval(args.R, None if args.inf else args.L)
        spec = RadialIntegralSpec(args.type, args.pair, args.n, args.K, args.k, iv)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    res = cf.evaluate_radial(spec)
    if args.format == "json":
        out = {"spec": {"type": args.type, "pair": args.pair, "n": args.n, "K": complex_to_json(args.K),
                        "k": complex_to_json(args.k), "interval": str(iv)}}
        out.update(eval_result_to_json(res))
        return json.dumps(out, indent=2), EXIT_OK
    if args.format == "csv":
        row = [args.type, args.pair, args.n, str(iv), repr(res.regular.real), repr(res.regular.imag),
               repr(res.delta_coeff.real), repr(res.delta_coeff.imag), res.method.value, repr(res.err_estimate)]
        header = ["type", "pair", "n", "interval", "re", "im", "re_delta", "im_delta", "method", "err_estimate"]
        return _write_csv([row], header), EXIT_OK
    lines = [
        f"{args.type} {args.pair} n={args.n} on {iv}",
        f"  regular      {fmt_complex(res.regular)}",
        f"  delta(K-k)   {fmt_complex(res.delta_coeff)}",
        f"  method       {res.method.value}",
        f"  err_estimate {res.err_estimate:.2e}",
    ]
    if res.notes:
        lines.append(f"  notes        {res.notes}")
    return "\n".join(lines), EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="besselint", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="human"):
        sp.add_argument("--format", choices=("json", "csv", "human"), default=default)

    e = sub.add_parser("eval", help="evaluate one Gaussian-damped integral")
    e.add_argument("--kind", required=True, choices=CYL_KINDS + SPH_KINDS)
    e.add_argument("--n", type=int, help="spherical order")
    e.add_argument("--b", type=float, help="cylindrical order")
    e.add_argument("--K", type=parse_complex, required=True)
    e.add_argument("--k", type=parse_complex, required=True)
    e.add_argument("--eta", type=_float, required=True)
    e.add_argument("--method", choices=("analytic", "quadrature", "both"), default="analytic")
    fmt(e)
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table1", help="reproduce the published table of spherical integrals")
    fmt(t)
    t.set_defaults(func=cmd_table1)

    kd = sub.add_parser("killdemo", help="curve data and values of the kill demonstration")
    kd.add_argument("--eta", type=_float, nargs="+", default=[0.01, 0.005])
    kd.add_argument("--samples", type=int, default=400)
    kd.add_argument("--x-max", type=float, default=None)
    fmt(kd)
    kd.set_defaults(func=cmd_killdemo)

    ls = sub.add_parser("limit-scan", help="approach of a spherical integral to its eta -> 0 limit")
    ls.add_argument("--kind", required=True, choices=("jj", "jy", "yy0"))
    ls.add_argument("--n", type=int, required=True)
    ls.add_argument("--K", type=parse_complex, required=True)
    ls.add_argument("--k", type=parse_complex, required=True)
    ls.add_argument("--eta-start", type=float, default=1.0)
    ls.add_argument("--eta-end", type=float, default=1e-3)
    ls.add_argument("--points", type=int, default=10)
    fmt(ls)
    ls.set_defaults(func=cmd_limit_scan)

    c = sub.add_parser("closed", help="closed-form M or N radial integral")
    c.add_argument("--type", required=True, choices=("M", "N"))
    c.add_argument("--pair", required=True, choices=("jj", "yy", "jy", "hh"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--K", type=parse_complex, required=True)
    c.add_argument("--k", type=parse_complex, required=True)
    c.add_argument("--R", type=float, default=0.0)
    c.add_argument("--L", type=float, default=None)
    c.add_argument("--inf", action="store_true")
    fmt(c)
    c.set_defaults(func=cmd_closed)

    cs = sub.add_parser("conformance", help="run a conformance suite")
    cs.add_argument("--suite", choices=conf.SUITES, default="full")
    cs.add_argument("--seed", type=int, default=conf.DEFAULT_SEED)
    fmt(cs)
    cs.set_defaults(func=cmd_conformance)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on flag errors
    try:
        text, code = args.func(args)
    except DegenerateError as exc:
        print(f"error: {exc} (delta coefficient {fmt_complex(exc.delta_coeff or 0)})", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, OverflowRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (NonConvergenceError, AccuracyLossError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except BesselIntError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
