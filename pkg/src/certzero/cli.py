"""Command-line surface: zero tables, verification sweeps, constant
reproduction, scans, and direct oracle queries.

All output is CSV with headers, 17 significant digits, '\n' line endings;
identical invocations produce byte-identical output.  Exit codes: 0 success,
2 usage/hypothesis error, 3 unsupported feature, 4 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import engine, lab, oracle

# fixed sweep used by `verify` when no grid is given
_DEFAULT_NUS = (1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0)
_DEFAULT_M = (1, 50)

# name -> (paper value, tolerance, one-sided upper bound?)
_PAPER_CONSTANTS = {
    "c1": (1.0082524557, 1e-9, False),
    "c2": (0.99176, 1e-4, False),
    "kappa_prime": (1.0000277286, 1e-9, False),
    "kappa_prime_arg": (12.0, 0.5, False),
    "psi0": (0.0434514175, 1e-9, False),
    "exp_psi0": (1.0444092531, 1e-9, False),
    "kappa2": (1.000273093257, 1e-9, False),
    "kappa2_arg": (-10.44187, 1e-3, False),
    "composite": (1.0446944743, 0.0, True),
    "eta11": (2.0 ** (1.0 / 3.0) * 44873962351.0 / 3302530481250.0,
              1e-12, False),
    "eta_dot_bound": (1.00411, 1e-5, False),
    "z_tilde": (3.87444, 1e-4, False),
    "chi_sup": (0.62034, 1e-4, False),
}


def _fmt(x):
    return f"{float(x):.17g}"


def _emit(lines, out):
    text = "\n".join(lines) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _parse_nu_list(text):
    try:
        nus = [float(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise ValueError(f"nu: could not parse {text!r} as a list of reals")
    if not nus:
        raise ValueError("nu: empty list")
    return nus


def _parse_m_range(text):
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValueError(f"m: could not parse {text!r} (expected N or N..M)")
    if lo < 1 or hi < lo:
        raise ValueError(f"m: invalid range {text!r}")
    return lo, hi


def _policy(name):
    return oracle.EXTENDED if name == "extended" else oracle.STANDARD


def _jobs_default():
    return int(os.environ.get("CERTZERO_JOBS", "1"))


def _pmap(fn, items, jobs):
    # per-worker results merged in spec order, not completion order
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=8))


# ---------------------------------------------------------------------------
# workers (module level so they pickle under ProcessPoolExecutor)

def _zeros_row(task):
    nu, m, scale, check, policy_name = task
    e = engine.enclosure(nu, m, scale=scale)
    row = [_fmt(nu), str(m), _fmt(e.point), _fmt(e.lower), _fmt(e.upper),
           _fmt(e.width)]
    if check:
        ref = float(oracle.reference_zero(nu, m, _policy(policy_name)))
        if scale == "z":
            ref /= nu
        inside = e.lower < ref < e.upper
        row += [_fmt(ref), "true" if inside else "false"]
    return ",".join(row)


def _verify_row(task):
    nu, m, policy_name = task
    e = engine.enclosure(nu, m, scale="j")
    ref = float(oracle.reference_zero(nu, m, _policy(policy_name)))
    c = engine.coefficients(nu, m)
    point_z = c.zm0 + c.zm1 / nu ** 2 + c.zm2 / nu ** 4
    norm = (ref / nu - point_z) * nu ** 6 / c.zm3
    chi_term = engine.chi(nu, m) / nu ** (5.0 / 3.0)
    lo = float(engine.LOWER_CONST) - chi_term
    hi = float(engine.UPPER_CONST) + chi_term
    ok = (e.lower < ref < e.upper) and (lo < norm < hi)
    return ",".join([_fmt(nu), str(m), _fmt(ref), _fmt(e.lower), _fmt(e.upper),
                     _fmt(norm), _fmt(lo), _fmt(hi),
                     "true" if ok else "false"]), ok


# ---------------------------------------------------------------------------
# subcommands

def cmd_zeros(args):
    nus = _parse_nu_list(args.nu)
    lo, hi = _parse_m_range(args.m)
    tasks = [(nu, m, args.scale, args.check, args.policy)
             for nu in nus for m in range(lo, hi + 1)]
    header = "nu,m,j_point,j_lower,j_upper,width"
    if args.check:
        header += ",oracle,inside"
    rows = _pmap(_zeros_row, tasks, args.jobs)
    _emit([header] + rows, args.out)
    return 0


def cmd_verify(args):
    nus = _parse_nu_list(args.nu) if args.nu else list(_DEFAULT_NUS)
    lo, hi = _parse_m_range(args.m) if args.m else _DEFAULT_M
    tasks = [(nu, m, args.policy) for nu in nus for m in range(lo, hi + 1)]
    results = _pmap(_verify_row, tasks, args.jobs)
    lines = ["nu,m,oracle,j_lower,j_upper,normalized_error,window_lo,"
             "window_hi,pass"]
    lines += [row for row, _ in results]
    n_pass = sum(1 for _, ok in results if ok)
    n_fail = len(results) - n_pass
    lines += ["pass_count,fail_count", f"{n_pass},{n_fail}"]
    _emit(lines, args.out)
    return 4 if n_fail else 0


def cmd_constants(args):
    computed = lab.structural_constants()
    names = list(_PAPER_CONSTANTS) if args.name is None else [args.name]
    if args.name is not None and args.name not in _PAPER_CONSTANTS:
        raise ValueError(f"name: unknown constant {args.name!r}")
    lines = ["name,computed,paper,abs_diff,tolerance,pass"]
    any_fail = False
    for name in names:
        paper, tol, upper_only = _PAPER_CONSTANTS[name]
        got = float(computed[name])
        diff = abs(got - paper)
        ok = got <= paper + 1e-10 if upper_only else diff <= tol
        any_fail |= not ok
        lines.append(",".join([name, _fmt(got), _fmt(paper), _fmt(diff),
                               _fmt(tol), "true" if ok else "false"]))
    _emit(lines, args.out)
    return 4 if any_fail else 0


def cmd_scan(args):
    try:
        rep = lab.scan(args.scan_id, samples=args.samples)
    except lab.UnsupportedScanError as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return 3
    lines = [f"{rep.grid_name},value"]
    lines += [f"{_fmt(g)},{_fmt(val)}" for g, val in rep.rows()]
    lines += ["min,max,argmin,argmax,all_positive",
              ",".join([_fmt(rep.vmin), _fmt(rep.vmax), _fmt(rep.argmin),
                        _fmt(rep.argmax),
                        "true" if rep.all_positive else "false"])]
    _emit(lines, args.out)
    return 0


def cmd_oracle(args):
    policy = _policy(args.policy)
    if (args.x is None) == (args.m is None):
        raise ValueError("x/m: exactly one of --x and --m is required")
    if args.x is not None:
        val = oracle.bessel_j(args.nu, args.x, policy)
        _emit(["nu,x,J", f"{_fmt(args.nu)},{_fmt(args.x)},{_fmt(val)}"],
              args.out)
    else:
        root = oracle.reference_zero(args.nu, args.m, policy)
        _emit(["nu,m,root", f"{_fmt(args.nu)},{args.m},{_fmt(root)}"],
              args.out)
    return 0


# ---------------------------------------------------------------------------

def _build_parser():
    p = argparse.ArgumentParser(
        prog="certzero",
        description="Certified enclosures for positive Bessel-function "
                    "zeros, with verification sweeps and figure-data scans.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", default=None, metavar="PATH",
                        help="output file (default: stdout)")

    sp = sub.add_parser("zeros", help="enclosure table for a (nu, m) sweep")
    sp.add_argument("--nu", required=True, help="comma-separated list, each >= 1")
    sp.add_argument("--m", required=True, help="index or range N..M")
    sp.add_argument("--scale", choices=("j", "z"), default="j")
    sp.add_argument("--check", action="store_true",
                    help="append oracle,inside columns")
    sp.add_argument("--policy", choices=("standard", "extended"),
                    default="standard")
    sp.add_argument("--jobs", type=int, default=_jobs_default())
    common(sp)
    sp.set_defaults(fn=cmd_zeros)

    sp = sub.add_parser("verify", help="containment + window sweep")
    sp.add_argument("--nu", default=None)
    sp.add_argument("--m", default=None)
    sp.add_argument("--policy", choices=("standard", "extended"),
                    default="standard")
    sp.add_argument("--jobs", type=int, default=_jobs_default())
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("constants", help="reproduce the named constants")
    sp.add_argument("name", nargs="?", default=None)
    common(sp)
    sp.set_defaults(fn=cmd_constants)

    sp = sub.add_parser("scan", help="figure-data scan of a named function")
    sp.add_argument("scan_id", choices=lab.SCAN_IDS)
    sp.add_argument("--samples", type=int, default=10000)
    common(sp)
    sp.set_defaults(fn=cmd_scan)

    sp = sub.add_parser("oracle", help="direct J_nu evaluation or zero")
    sp.add_argument("--nu", type=float, required=True)
    sp.add_argument("--x", type=float, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--policy", choices=("standard", "extended"),
                    default="standard")
    common(sp)
    sp.set_defaults(fn=cmd_oracle)
    return p


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
