"""Deterministic command-line front end.

Every subcommand sweeps a parameter grid in the order the flags declare it
and emits CSV or JSON that is byte-identical across runs for the same
configuration.  Exact quantities serialize as integers or num/den strings;
approximate ratio columns carry a separate marker so exactness is never
ambiguous downstream.  Exit codes: 0 success, 2 usage error, 3 closure
budget overflow, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .asymptotics import (ChebotarevParams, chebotarev_lower, genus_lower_bound,
                          mf_log_upper_bound, mq_ratio_sequence,
                          splitting_place_feasible, t_of)
from .genus import GenusParityError, cyclotomic_genus, cyclotomic_phi
from .intbounds import prime_power_decompose
from .poly import parse_poly
from .ramification import (RamFiltration, abelian_different_lower_bound,
                           conductor_exponent, conductor_via_identity,
                           different_exponent, enumerate_filtrations)
from .towers import (ClosureBudgetError, RationalMap, TowerSpec, WildKummerError,
                     builtin_tower, tower_summary)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4


class UsageError(ValueError):
    pass


def _parse_range(text: str) -> list[int]:
    """Either a single integer or an inclusive range ``a..b``."""
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _rat(value) -> str | int:
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _emit(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
    else:
        json.dump({"columns": columns, "rows": rows}, out, indent=2)
        out.write("\n")


def _require_prime_power(q: int) -> int:
    try:
        prime_power_decompose(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return q


# -- subcommand handlers -------------------------------------------------------


def _cmd_cyclotomic(args, out) -> int:
    rows = []
    for q in args.q:
        _require_prime_power(q)
        for d in args.d:
            for n in args.n:
                g = cyclotomic_genus(q, d, n)
                rows.append({"q": q, "d": d, "n": n,
                             "phi": cyclotomic_phi(q, d, n),
                             "two_g_minus_2": g.two_g_minus_2, "g": g.g})
    _emit(rows, ["q", "d", "n", "phi", "two_g_minus_2", "g"], args.format, out)
    return EXIT_OK


def _cmd_asymptotic(args, out) -> int:
    rows = []
    if args.family == "d":
        indices = args.d
    else:
        indices = args.n
        if len(args.d) != 1:
            raise UsageError("family 'n' needs a single --d value")
    for q in args.q:
        _require_prime_power(q)
        d_fixed = args.d[0]
        data = mq_ratio_sequence(q, args.family, indices,
                                 d=None if args.family == "d" else d_fixed,
                                 precision=args.precision)
        for row in data:
            base = {"q": q}
            if args.family == "d":
                base.update({"d": row.index, "n": 1})
            else:
                base.update({"d": d_fixed, "n": row.index})
            base.update({"m": row.m, "g": row.g,
                         "ratio": "" if row.skipped else str(row.ratio),
                         "approx": "" if row.skipped else "~",
                         "flag": "skipped-nonpositive-genus" if row.skipped else ""})
            rows.append(base)
    _emit(rows, ["q", "d", "n", "m", "g", "ratio", "approx", "flag"],
          args.format, out)
    return EXIT_OK


def _cmd_chebotarev(args, out) -> int:
    rows = []
    for q in args.q:
        _require_prime_power(q)
        for k in args.k:
            params = ChebotarevParams(q=q, k=k, m=args.m, g_f=args.g_f,
                                      g_e=args.g_e, d=args.d,
                                      conj_size=args.conj_size)
            lower = chebotarev_lower(params)
            rows.append({"q": q, "k": k, "m": args.m, "conj_size": args.conj_size,
                         "g_f": args.g_f, "g_e": args.g_e, "d": args.d,
                         "lower": _rat(lower), "positive": int(lower > 0)})
    _emit(rows, ["q", "k", "m", "conj_size", "g_f", "g_e", "d", "lower",
                 "positive"], args.format, out)
    return EXIT_OK


def _cmd_bounds(args, out) -> int:
    rows: list[dict] = []
    columns: list[str]
    if args.mode == "splitting":
        columns = ["q", "g", "t", "m_f", "frobenius_half", "base_quarter",
                   "genus_term", "degree_term", "feasible"]
        for q in args.q:
            _require_prime_power(q)
            for g in args.g:
                report = splitting_place_feasible(q, g, t=args.t_override)
                c = report.checks
                rows.append({"q": q, "g": g, "t": report.params.t,
                             "m_f": report.params.m_f,
                             "frobenius_half": int(c[0].holds),
                             "base_quarter": int(c[1].holds),
                             "genus_term": int(c[2].holds),
                             "degree_term": int(c[3].holds),
                             "feasible": int(report.feasible)})
    elif args.mode == "genus":
        columns = ["q", "m_f", "t", "parity", "lower", "upper", "exact"]
        for q in args.q:
            _require_prime_power(q)
            parity = args.parity or ("even" if q % 2 == 0 else "odd")
            for m_f in args.m_f:
                bracket = genus_lower_bound(q, m_f, args.t, parity)
                rows.append({"q": q, "m_f": m_f, "t": args.t, "parity": parity,
                             "lower": _rat(bracket.lower),
                             "upper": _rat(bracket.upper),
                             "exact": int(bracket.exact)})
    else:  # mflog
        columns = ["q", "t", "g_e", "conductor_degree", "log_ceil",
                   "upper_int", "m_f_bound"]
        for q in args.q:
            _require_prime_power(q)
            for t in args.t_range:
                b = mf_log_upper_bound(q, t, args.g_e, args.conductor_degree)
                rows.append({"q": q, "t": t, "g_e": args.g_e,
                             "conductor_degree": args.conductor_degree,
                             "log_ceil": b.log_ceil, "upper_int": b.upper_int,
                             "m_f_bound": b.m_f_bound})
    _emit(rows, columns, args.format, out)
    return EXIT_OK


def _filtration_row(filt: RamFiltration) -> dict:
    d = different_exponent(filt)
    c = conductor_exponent(filt)
    row = {"orders": str(filt), "p": filt.p, "e": filt.e, "a": filt.a,
           "d": d, "c": c,
           "c_identity": _rat(conductor_via_identity(filt)) if filt.a else "",
           "b": filt.b, "w": filt.w}
    if filt.is_wild() and c >= 2:
        row["lemma_bound"] = abelian_different_lower_bound(c, filt.b, filt.p, filt.w)
    else:
        row["lemma_bound"] = ""
    return row


def _cmd_ramification(args, out) -> int:
    columns = ["orders", "p", "e", "a", "d", "c", "c_identity", "b", "w",
               "lemma_bound"]
    rows = []
    if args.enumerate:
        if args.b is None or args.w is None:
            raise UsageError("--enumerate needs --b and --w")
        for filt in enumerate_filtrations(args.b, args.p, args.w, args.n_max):
            rows.append(_filtration_row(filt))
    else:
        if args.orders is None:
            raise UsageError("give --orders or --enumerate")
        filt = RamFiltration.parse(args.orders, args.p)
        rows.append(_filtration_row(filt))
    _emit(rows, columns, args.format, out)
    return EXIT_OK


def _parse_rational_map(text: str, field) -> RationalMap:
    num_s, sep, den_s = text.partition("/")
    if not sep:
        den_s = "1"
    return RationalMap(parse_poly(num_s, field), parse_poly(den_s, field))


def _cmd_tower(args, out) -> int:
    _require_prime_power(args.q)
    if args.builtin:
        spec = builtin_tower(args.builtin, args.q)
    else:
        if not (args.f and args.h and args.e):
            raise UsageError("custom towers need --f, --h and --e")
        from .field import make_field
        p, s = prime_power_decompose(args.q)
        base = make_field(p, s, 0)
        spec = TowerSpec(name="custom", e=args.e,
                         f=_parse_rational_map(args.f, base),
                         h=_parse_rational_map(args.h, base), base=base)
    summary = tower_summary(spec, max_ext=args.max_ext, max_iter=args.max_iter)
    payload = {
        "tower": summary["tower"],
        "q": summary["q"],
        "e": summary["e"],
        "lambda0": summary["lambda0"].render(),
        "lambda": summary["lambda"].render(),
        "degree_sum": summary["degree_sum"],
        "gamma_bound": _rat(summary["gamma_bound"]),
        "bq_lower": _rat(summary["bq_lower"]),
        "tame": summary["tame"],
        "first_step_genus": summary["first_step_genus"],
    }
    json.dump(payload, out, indent=2)
    out.write("\n")
    return EXIT_OK


def _cmd_selftest(args, out) -> int:
    from .acceptance import CRITERIA, run_all
    if args.only is not None:
        if not 1 <= args.only <= len(CRITERIA):
            raise UsageError(f"--only must be in 1..{len(CRITERIA)}")
        result = CRITERIA[args.only - 1]()
        out.write(result.line() + "\n")
        return EXIT_OK if result.passed else EXIT_INVARIANT
    results = run_all(emit=lambda line: out.write(line + "\n"))
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVARIANT


# -- argument wiring -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="funcfield",
        description="Exact function-field computations: cyclotomic genera, "
                    "ramification, tower bounds, place-counting estimates.")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="table output format (tower always emits JSON)")
    parser.add_argument("--output", help="write to this path instead of stdout")
    parser.add_argument("--precision", type=int, default=20,
                        help="decimal digits of displayed ratios (>= 6)")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cyclotomic", help="torsion-field genus table")
    c.add_argument("--q", type=_parse_range, required=True)
    c.add_argument("--d", type=_parse_range, required=True)
    c.add_argument("--n", type=_parse_range, default=[1])
    c.set_defaults(handler=_cmd_cyclotomic)

    a = sub.add_parser("asymptotic", help="abelian-subgroup estimator ratios")
    a.add_argument("--q", type=_parse_range, required=True)
    a.add_argument("--family", choices=("d", "n"), required=True)
    a.add_argument("--d", type=_parse_range, default=[1])
    a.add_argument("--n", type=_parse_range, default=[2])
    a.set_defaults(handler=_cmd_asymptotic)

    ch = sub.add_parser("chebotarev", help="explicit place-counting lower bound")
    ch.add_argument("--q", type=_parse_range, required=True)
    ch.add_argument("--k", type=_parse_range, required=True)
    ch.add_argument("--m", type=int, required=True)
    ch.add_argument("--conj-size", type=int, default=1)
    ch.add_argument("--g-f", type=int, required=True)
    ch.add_argument("--g-e", type=int, required=True)
    ch.add_argument("--d", type=int, required=True)
    ch.set_defaults(handler=_cmd_chebotarev)

    b = sub.add_parser("bounds", help="split-place feasibility and log bounds")
    b.add_argument("--mode", choices=("splitting", "genus", "mflog"),
                   default="splitting")
    b.add_argument("--q", type=_parse_range, required=True)
    b.add_argument("--g", type=_parse_range, default=[2])
    b.add_argument("--t-override", type=int, default=None)
    b.add_argument("--m-f", type=_parse_range, default=[1])
    b.add_argument("--t", type=int, default=1)
    b.add_argument("--parity", choices=("even", "odd"), default=None)
    b.add_argument("--t-range", type=_parse_range, default=[1])
    b.add_argument("--g-e", type=int, default=0)
    b.add_argument("--conductor-degree", type=int, default=0)
    b.set_defaults(handler=_cmd_bounds)

    r = sub.add_parser("ramification", help="filtration invariants")
    r.add_argument("--orders", help="comma-separated group orders, e.g. 6,3,3")
    r.add_argument("--p", type=int, required=True)
    r.add_argument("--enumerate", action="store_true")
    r.add_argument("--b", type=int)
    r.add_argument("--w", type=int)
    r.add_argument("--n-max", type=int, default=6)
    r.set_defaults(handler=_cmd_ramification)

    t = sub.add_parser("tower", help="recursive tower analysis (JSON)")
    t.add_argument("--builtin", choices=("y3", "y4"))
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--f", help="rational map NUM/DEN for the left side")
    t.add_argument("--h", help="rational map NUM/DEN for the right side")
    t.add_argument("--e", type=int, help="Kummer exponent of a custom tower")
    t.add_argument("--max-ext", type=int, default=12)
    t.add_argument("--max-iter", type=int, default=64)
    t.set_defaults(handler=_cmd_tower)

    st = sub.add_parser("selftest", help="run the acceptance suite")
    st.add_argument("--only", type=int, default=None,
                    help="run a single criterion by number")
    st.set_defaults(handler=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.precision < 6:
        parser.error("--precision must be >= 6")
    buffer = io.StringIO()
    try:
        status = args.handler(args, buffer)
    except ClosureBudgetError as exc:
        print(f"budget overflow ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GenusParityError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, WildKummerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(buffer.getvalue())
    else:
        sys.stdout.write(buffer.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
