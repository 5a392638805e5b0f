"""Command-line front end: ``superinv mult|series|hook|verify|cache``.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import characters
from .characters import (CacheCorrupt, CharStore, m_oracle, mbar_oracle,
                         resolve_cache_dir, set_default_store)
from .multiplicity import ROUTE_EXACT, m_ct
from .partitions import (enumerate_hook, format_partition, is_large,
                         is_typical, parse_partition)
from .series import KINDS, SERIES
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for mismatches here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superinv", description="Multiplicities and Poincare series for "
                "invariants of the general linear Lie superalgebra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, hook=True):
        if hook:
            sp.add_argument("--k", type=_nonneg, required=True)
            sp.add_argument("--l", type=_nonneg, required=True)
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--cache-dir", default=None,
                        help="character cache directory (default: $SUPERINV_CACHE_DIR or ./.superinv-cache)")
        sp.add_argument("--no-cache", action="store_true", help="keep characters in memory only")
        sp.add_argument("--no-timing", action="store_true", help="omit runtimes for byte-stable output")

    m = sub.add_parser("mult", help="multiplicity m_lambda or m-bar_lambda")
    common(m)
    m.add_argument("--lambda", dest="lam", required=True,
                   help='comma-separated parts; "" or "-" for the empty partition')
    m.add_argument("--bar", action="store_true", help="compute m-bar instead of m")
    m.add_argument("--method", choices=("oracle", "ct", "auto", "both"), default="auto")
    m.add_argument("--threads", type=_positive, default=1)

    s = sub.add_parser("series", help="truncated generating series")
    common(s)
    s.add_argument("--kind", required=True, help=f"one of {', '.join(KINDS)}")
    s.add_argument("--a", type=_nonneg, required=True)
    s.add_argument("--b", type=_nonneg, required=True)
    s.add_argument("--maxdeg", type=_nonneg, required=True)
    s.add_argument("--threads", type=_positive, default=1)

    h = sub.add_parser("hook", help="list H(k,l;n) with large/typical flags")
    common(h)
    h.add_argument("--n", type=_nonneg, required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    common(v, hook=False)
    v.add_argument("--suite", choices=SUITES, default="quick")

    c = sub.add_parser("cache", help="inspect or clear the character cache")
    c.add_argument("--cache-dir", default=None)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--stats", action="store_true")
    g.add_argument("--clear", action="store_true")
    return p


def _open_store(args) -> CharStore:
    if getattr(args, "no_cache", False):
        return CharStore()
    directory = resolve_cache_dir(args.cache_dir)
    try:
        return CharStore.in_dir(directory)
    except OSError as exc:
        raise UsageError(f"cache directory {directory} is not usable: {exc}") from None


def _number(v):
    # integral values go out as JSON integers (exact at any size); anything else as a string
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return str(v)


def _emit(obj: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
        return
    width = max(len(k) for k in obj)
    for key, val in obj.items():
        if isinstance(val, list):
            val = format_partition(val) or "-"
        elif isinstance(val, bool):
            val = str(val).lower()
        out.write(f"{key:<{width}}  {val}\n")


def run_mult(args, out) -> int:
    try:
        lam = parse_partition(args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    h = (args.k, args.l)
    store = _open_store(args)
    oracle = mbar_oracle if args.bar else m_oracle
    start = time.perf_counter()
    report = {"k": args.k, "l": args.l, "lambda": list(lam), "bar": args.bar, "method": args.method}
    code = EXIT_OK
    try:
        if args.method == "oracle":
            report["value"] = _number(oracle(lam, h, store))
            report["route"] = "character-sum"
        elif args.method == "ct":
            value, route = m_ct(lam, h, args.bar)
            report["value"], report["route"] = _number(value), route
        elif args.method == "auto":
            if is_large(lam, h):
                value, route = m_ct(lam, h, args.bar)
            else:
                value, route = oracle(lam, h, store), "character-sum"
            report["value"], report["route"] = _number(value), route
        else:
            mo = oracle(lam, h, store)
            mc, route = m_ct(lam, h, args.bar)
            report["value"] = _number(mo)
            report["m_oracle"], report["m_ct"] = _number(mo), _number(mc)
            report["route"] = route
            report["match"] = mo == mc
            # away from large partitions the constant term is m' and may differ legitimately
            report["comparable"] = route == ROUTE_EXACT
            if route == ROUTE_EXACT and mo != mc:
                code = EXIT_MISMATCH
    finally:
        store.flush()
    if not args.no_timing:
        report["runtime_ms"] = round((time.perf_counter() - start) * 1000)
    _emit(report, args.format, out)
    return code


def _series_records(s):
    # total degree first, then lexicographically larger exponents first (t1 before t2 before u1)
    t_vars, u_vars = s.t_vars, s.u_vars
    rows = []
    for exps, coef in s.poly.items():
        e = dict(exps)
        te = tuple(e.get(v, 0) for v in t_vars)
        ue = tuple(e.get(v, 0) for v in u_vars)
        rows.append((sum(te) + sum(ue), te + ue, te, ue, coef))
    zero = (0,) * (len(t_vars) + len(u_vars))
    if not any(r[1] == zero for r in rows):
        # the constant term is always reported, even when it vanishes
        rows.append((0, zero, zero[:len(t_vars)], zero[len(t_vars):], 0))
    rows.sort(key=lambda r: (r[0], tuple(-x for x in r[1])))
    return [(te, ue, coef) for _, _, te, ue, coef in rows]


def run_series(args, out) -> int:
    if args.kind not in SERIES:
        raise UsageError(f"unknown series kind {args.kind!r}; expected one of {', '.join(KINDS)}")
    store = _open_store(args)
    set_default_store(store)
    start = time.perf_counter()
    try:
        s = SERIES[args.kind]((args.k, args.l), args.a, args.b, args.maxdeg, workers=args.threads)
    finally:
        store.flush()
    elapsed = round((time.perf_counter() - start) * 1000)
    records = _series_records(s)
    if args.format == "json":
        obj = {"kind": args.kind, "k": args.k, "l": args.l, "a": args.a, "b": args.b,
               "maxdeg": args.maxdeg, "t_vars": list(s.t_vars), "u_vars": list(s.u_vars),
               "terms": [{"t": list(te), "u": list(ue), "coef": _number(c)} for te, ue, c in records]}
        if not args.no_timing:
            obj["runtime_ms"] = elapsed
        out.write(json.dumps(obj) + "\n")
    else:
        width = max((len(str(c)) for _, _, c in records), default=1)
        for te, ue, c in records:
            t_txt = " ".join(map(str, te)) or "-"
            u_txt = " ".join(map(str, ue)) or "-"
            out.write(f"{str(c):>{width}}  {t_txt} | {u_txt}\n")
    return EXIT_OK


def run_hook(args, out) -> int:
    h = (args.k, args.l)
    K, L = args.k * args.k + args.l * args.l, 2 * args.k * args.l
    rows = [{"lambda": list(lam), "large": is_large(lam, h), "typical": is_typical(lam, K, L)}
            for lam in enumerate_hook(h, args.n)]
    if args.format == "json":
        out.write(json.dumps({"k": args.k, "l": args.l, "n": args.n, "count": len(rows),
                              "partitions": rows}) + "\n")
    else:
        for r in rows:
            flags = [f for f in ("large", "typical") if r[f]]
            out.write(f"{format_partition(r['lambda']) or '-'}  {' '.join(flags)}".rstrip() + "\n")
        out.write(f"# {len(rows)} partitions\n")
    return EXIT_OK


def run_verify(args, out) -> int:
    store = _open_store(args)
    set_default_store(store)
    results = []

    def echo(line):
        if args.format == "table":
            out.write(line + "\n")
            out.flush()

    try:
        results = run_suite(args.suite, echo)
    finally:
        store.flush()
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        checks = []
        for r in results:
            item = {"name": r.name, "ok": r.ok, "detail": r.detail}
            if not args.no_timing:
                item["seconds"] = round(r.seconds, 3)
            checks.append(item)
        out.write(json.dumps({"suite": args.suite, "passed": len(results) - len(failed),
                              "failed": len(failed), "checks": checks}) + "\n")
    else:
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def run_cache(args, out) -> int:
    store = _open_store(args)
    if args.clear:
        try:
            store.clear()
        except OSError as exc:
            raise UsageError(f"cannot clear {store.path}: {exc}") from None
        out.write(f"cleared {store.path}\n")
        return EXIT_OK
    stats = store.stats()
    out.write(f"{store.path}: {len(store)} records\n")
    for n, count in stats.items():
        out.write(f"n={n}  {count}\n")
    return EXIT_OK


COMMANDS = {"mult": run_mult, "series": run_series, "hook": run_hook,
            "verify": run_verify, "cache": run_cache}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    previous = characters.default_store()
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, CacheCorrupt) as exc:
        sys.stderr.write(f"superinv: error: {exc}\n")
        return EXIT_USAGE
    finally:
        set_default_store(previous)


if __name__ == "__main__":
    sys.exit(main())
