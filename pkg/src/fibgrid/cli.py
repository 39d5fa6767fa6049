"""Command-line front end.

Subcommands: ``term``, ``identities``, ``grid``, ``ratio-table``, ``verify``.
Exit codes are 0 for success, 1 for a failed verification and 2 for bad
usage (including refused resource limits).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from decimal import Context, Decimal
from fractions import Fraction

from . import grid, identities
from .errors import IndexCapError, VerificationError
from .seqcore import FIBONACCI, SeedPair, fib, gen_term, lucas
from .sums import SumQuery, equidistant_sum_closed, equidistant_sum_direct

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
RATIO_TABLE_CAP = 64
_INT64 = 2**63
_DECIMAL = Context(prec=15)


class UsageError(Exception):
    pass


def _json_value(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x if -_INT64 <= x < _INT64 else str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, SeedPair):
        return [_json_value(x.a), _json_value(x.b)]
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def approx(x: Fraction) -> str:
    """Decimal approximation, 15 significant digits; never the source of truth."""
    d = _DECIMAL.divide(Decimal(x.numerator), Decimal(x.denominator))
    return format(d.normalize(_DECIMAL), "f") if abs(d) < 10**15 else str(d)


class Report:
    def __init__(self, command, inputs):
        self.command = command
        self.inputs = inputs
        self.results = []
        self.checks = []
        self.warnings = []

    def check(self, name, passed, detail=""):
        self.checks.append({"name": name, "passed": bool(passed), "detail": detail})
        return passed

    @property
    def ok(self):
        return all(c["passed"] for c in self.checks)

    def to_json(self):
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": self.checks,
        }
        if self.warnings:
            doc["warnings"] = self.warnings
        return json.dumps(_json_value(doc), indent=2)


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([str(v) for v in row])
    return buf.getvalue().rstrip("\n")


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_seeds(text: str) -> SeedPair:
    try:
        return SeedPair.parse(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


# --- commands -------------------------------------------------------------


def cmd_term(args):
    if args.kind == "gen" and args.seeds is None:
        raise UsageError("term gen requires --seeds A,B")
    if args.kind != "gen" and args.seeds is not None:
        raise UsageError(f"--seeds only applies to 'term gen', not {args.kind!r}")
    if args.kind == "fib":
        value = fib(args.n)
    elif args.kind == "lucas":
        value = lucas(args.n)
    else:
        value = gen_term(args.seeds, args.n)

    rep = Report("term", {"kind": args.kind, "n": args.n, "seeds": args.seeds})
    rep.results.append({"kind": args.kind, "n": args.n, "value": value})
    if args.format == "json":
        return rep.to_json(), rep
    if args.format == "csv":
        return _csv(["kind", "n", "value"], [[args.kind, args.n, value]]), rep
    return str(value), rep


def cmd_identities(args):
    lo, hi = args.range
    reports = identities.run_suite((lo, hi), cerin_max_i=args.cerin_max_i)
    rep = Report("identities", {"range": [lo, hi], "cerin_max_i": args.cerin_max_i})
    for r in reports:
        first = r.failures[0] if r.failures else None
        rep.results.append(
            {
                "identity": r.identity_name,
                "window": list(r.index_window),
                "failures": len(r.failures),
                "first_failure": None if first is None else {"indices": first[0], "residual": first[1]},
            }
        )
        detail = "" if first is None else f"indices={first[0]} residual={first[1]}"
        rep.check(r.identity_name, r.passed, detail)

    if args.format == "json":
        return rep.to_json(), rep
    if args.format == "csv":
        rows = [[r.identity_name, lo, hi, len(r.failures)] for r in reports]
        return _csv(["identity", "lo", "hi", "failures"], rows), rep
    lines = []
    for c in rep.checks:
        status = "PASS" if c["passed"] else "FAIL"
        extra = f"  first failure: {c['detail']}" if c["detail"] else ""
        lines.append(f"{status} {c['name']} over [{lo}, {hi}]{extra}")
    lines.append("all identities hold" if rep.ok else "identity failures found")
    return "\n".join(lines), rep


def _format_cells(rendered):
    m = rendered.spec.order
    width = max(len(str(v)) for row in rendered.rows for v in row)
    out = []
    for r, row in enumerate(rendered.rows):
        cells = []
        for c, v in enumerate(row):
            s = str(v).rjust(width)
            main, anti = rendered.is_main(r, c), rendered.is_anti(r, c)
            if main and anti:
                s = "{" + s + "}"
            elif main:
                s = "[" + s + "]"
            elif anti:
                s = "(" + s + ")"
            else:
                s = " " + s + " "
            cells.append(s)
        out.append(" ".join(cells).rstrip())
    assert len(out) == m
    return out


def cmd_grid(args):
    spec = grid.GridSpec(args.order, args.start, args.seeds)
    if args.format == "plain" and spec.order > grid.DISPLAY_CAP:
        raise UsageError(f"order {spec.order} exceeds display cap {grid.DISPLAY_CAP}")
    rendered = grid.render_grid(spec) if spec.order <= grid.DISPLAY_CAP else None
    main, anti = grid.diagonal_sums(spec)
    general = grid.ratio_general(spec.order, spec.start)
    ratio = Fraction(main, anti) if anti != 0 else None

    rep = Report("grid", {"order": spec.order, "start": spec.start, "seeds": spec.seeds})
    if general.witness is not None:
        parity = "even" if spec.order % 2 == 0 else "odd"
        rep.warnings.append(f"order is {parity}: ratio is seed-dependent")
    if ratio is None:
        rep.warnings.append("anti-diagonal sum is zero for these seeds: ratio undefined")
    result = {
        "main_sum": main,
        "anti_sum": anti,
        "ratio": ratio,
        "ratio_approx": None if ratio is None else approx(ratio),
        "seed_independent": general.is_constant,
    }
    if rendered is not None:
        result["rows"] = rendered.rows
    rep.results.append(result)

    if args.format == "json":
        return rep.to_json(), rep
    if args.format == "csv":
        return _csv(
            ["order", "start", "A", "B", "main_sum", "anti_sum", "ratio", "ratio_approx"],
            [[spec.order, spec.start, spec.seeds.a, spec.seeds.b, main, anti,
              "" if ratio is None else ratio, "" if ratio is None else approx(ratio)]],
        ), rep
    lines = _format_cells(rendered)
    lines.append(f"main diagonal sum: {main}")
    lines.append(f"anti-diagonal sum: {anti}")
    if ratio is None:
        lines.append("ratio: undefined")
    else:
        lines.append(f"ratio: {ratio} (approx. {approx(ratio)})")
    lines.extend(f"warning: {w}" for w in rep.warnings)
    return "\n".join(lines), rep


def _check_nmax(n_max, lowest=1):
    if not lowest <= n_max <= RATIO_TABLE_CAP:
        raise UsageError(f"--max must be in [{lowest}, {RATIO_TABLE_CAP}], got {n_max}")


def cmd_ratio_table(args):
    _check_nmax(args.max)
    rep = Report("ratio-table", {"max": args.max})
    rows = []
    for n in range(1, args.max + 1):
        try:
            cert = grid.verify_theorem2(n)
        except VerificationError as e:
            rep.check(f"theorem2(n={n})", False, str(e))
            break
        rep.check(f"theorem2(n={n})", True)
        rows.append((n, cert.constant, cert.d_f, cert.prefactor))
        rep.results.append(
            {"n": n, "c": cert.constant, "c_approx": approx(cert.constant),
             "d_F": cert.d_f, "prefactor": cert.prefactor}
        )
    if not rep.ok:
        failed = next(c for c in rep.checks if not c["passed"])
        return f"verification failed: {failed['detail']}", rep

    if args.format == "json":
        return rep.to_json(), rep
    if args.format == "csv":
        return _csv(["n", "c", "d_F", "prefactor"], rows), rep
    table = [("n", "c(n)", "d_F(n)", "prefactor(n)", "c(n) approx.")]
    table += [(str(n), str(c), str(d), str(p), approx(c)) for n, c, d, p in rows]
    widths = [max(len(row[j]) for row in table) for j in range(5)]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in table
    ), rep


def _sum_queries(count, seed=0):
    rng = random.Random(seed)
    for _ in range(count):
        a, b = 0, 0
        while a == 0 and b == 0:
            a, b = rng.randint(-100, 100), rng.randint(-100, 100)
        m = rng.randint(1, 12)
        n1 = rng.randint(-20, 20)
        yield SumQuery(SeedPair(a, b), m, rng.randrange(m), n1, rng.randint(n1, 20))


def cmd_verify(args):
    _check_nmax(args.max)
    rep = Report("verify", {"max": args.max})
    for n in range(1, args.max + 1):
        try:
            cert = grid.verify_theorem2(n)
            rep.check(
                f"theorem2(n={n})", True,
                f"d_F({n})=d_L({n})={cert.d_f}, prefactor({n})={cert.prefactor}, c({n})={cert.constant}",
            )
            rep.results.append({"n": n, "c": cert.constant, "d_F": cert.d_f, "d_L": cert.d_l,
                                "prefactor": cert.prefactor})
        except VerificationError as e:
            rep.check(f"theorem2(n={n})", False, str(e))
        res = grid.verify_cross_identity(n)
        rep.check(f"cross_identity(n={n})", res == 0, f"residual={res}")
        lhs, reduced = grid.cross_identity_reduced(n)
        rep.check(f"cross_identity_reduced(n={n})", lhs == reduced, f"difference={lhs - reduced}")

    bad = None
    for q in _sum_queries(200):
        direct, closed = equidistant_sum_direct(q), equidistant_sum_closed(q)
        if direct != closed:
            bad = f"{q}: direct={direct} closed={closed}"
            break
    rep.check("equidistant_sums(200 queries)", bad is None, bad or "closed form == direct sum")

    for order in (2, 4):
        r = grid.ratio_general(order)
        if r.witness is None:
            rep.check(f"even_order_witness(m={order})", False, f"constant ratio {r.constant}")
        else:
            (s1, r1), (s2, r2) = r.witness
            rep.check(
                f"even_order_witness(m={order})", True,
                f"seeds {s1.a},{s1.b} -> {r1}; seeds {s2.a},{s2.b} -> {r2}",
            )
        cert = grid.proportionality_certificate(order)
        rep.check(f"even_order_nonproportional(m={order})", cert != 0, f"cross={cert}")

    if args.format == "json":
        return rep.to_json(), rep
    if args.format == "csv":
        return _csv(["check", "passed", "detail"],
                    [[c["name"], c["passed"], c["detail"]] for c in rep.checks]), rep
    lines = []
    for c in rep.checks:
        lines.append(f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}: {c['detail']}")
    if rep.ok:
        lines.append("all checks passed")
    else:
        failed = next(c for c in rep.checks if not c["passed"])
        lines.append(f"FAILED: {failed['name']}: {failed['detail']}")
    return "\n".join(lines), rep


# --- entry point ------------------------------------------------------------

_VALUE_OPTIONS = ("--range", "--seeds", "--start")


def _join_option_values(argv):
    # "--range -50:50" would be read as two options; glue value onto the flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibgrid",
        description="Exact generalized Fibonacci terms and diagonal-ratio verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("term", parents=[fmt], help="print a single term")
    p.add_argument("kind", choices=("fib", "lucas", "gen"))
    p.add_argument("n", type=int)
    p.add_argument("--seeds", type=parse_seeds, default=None, metavar="A,B")
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("identities", parents=[fmt], help="sweep the identity catalog")
    p.add_argument("--range", type=parse_range, default=(-50, 50), metavar="LO:HI")
    p.add_argument("--cerin-max-i", type=int, default=10)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("grid", parents=[fmt], help="fill a grid and report its diagonals")
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--seeds", type=parse_seeds, default=FIBONACCI, metavar="A,B")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("ratio-table", parents=[fmt], help="tabulate c(n) with its factors")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_ratio_table)

    p = sub.add_parser("verify", parents=[fmt], help="run every verification check")
    p.add_argument("--max", type=int, default=12)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # exact output is the point; lift the int->str digit limit
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_option_values(argv))
    if getattr(args, "cerin_max_i", 0) < 0:
        parser.error("--cerin-max-i must be non-negative")
    try:
        text, rep = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"fibgrid {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (IndexCapError, ValueError) as e:
        print(f"fibgrid {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        print(f"fibgrid {args.command}: verification failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    print(text)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
