"""Command-line front end: ``schrome <verb> [input] [options]``.

Results go to stdout, progress and diagnostics to stderr. Exit status is 0 on
success, 1 on usage or input errors (including tripped guards) and 2 when a
verification finds two routes disagreeing.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import sys
from typing import Callable, Sequence

from . import complex as cx
from .chromatic import (
    chrom_poly,
    chromatic_number,
    chromatic_table,
    f_vector_from_table,
    falling_factorial_form,
    leading_terms_ok,
    logconcavity_check,
)
from .complex import SimplicialComplex
from .errors import GUARD_ENV, SchromeError, TooLarge, VerificationError
from .lattice import build_lattice, euler_sequence, mobius_weighted, monochrome_set_of_coloring
from .partitions import count_independent_partitions, enumerate_bcp
from .polynomial import IntPolynomial

log = logging.getLogger("schrome")

FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise UsageError(message)


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--builtin", metavar="NAME", help=f"one of {', '.join(cx.BUILTIN_NAMES)}")
    g.add_argument("--file", metavar="PATH", help="facet file (plain, csv or json)")
    g.add_argument("--cyclic", metavar="M,N", help="boundary of the cyclic polytope CP(M,N)")
    g.add_argument("--simplex", metavar="M", type=int, help="full simplex on M vertices")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schrome", description="s-chromatic polynomials of simplicial complexes")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit the facets of a complex")
    _add_input(p)
    _add_format(p)
    p.add_argument("--skeleton", type=int, metavar="S", help="emit the S-skeleton instead")

    p = sub.add_parser("faces", help="f-vector, or the s-faces with -s")
    _add_input(p)
    _add_format(p)
    p.add_argument("-s", type=int)

    p = sub.add_parser("chrompoly", help="s-chromatic polynomial")
    _add_input(p)
    _add_format(p)
    p.add_argument("-s", type=int)
    p.add_argument("--all", action="store_true", help="every s from 1 to dim")
    p.add_argument("--method", choices=("stirling", "partition", "lattice"), default="stirling")
    p.add_argument("--falling", action="store_true", help="falling-factorial basis")

    p = sub.add_parser("table", help="chromatic table S(K, r, s)")
    _add_input(p)
    _add_format(p)
    p.add_argument("--max-s", type=int, help="extend rows past dim(K) with ordinary Stirling numbers")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("chromnum", help="s-chromatic number(s)")
    _add_input(p)
    _add_format(p)
    p.add_argument("-s", type=int)
    p.add_argument("--all", action="store_true")

    p = sub.add_parser("lattice", help="elements of L^s(K) with |π| and μ(0̂, ·)")
    _add_input(p)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--summary", action="store_true", help="size, μ(0̂,1̂) and maximal chain lengths only")

    p = sub.add_parser("mobius-weighted", help="μ(0̂,1̂) of a weighted partition lattice")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("weights", nargs="+", type=int)

    p = sub.add_parser("euler-seq", help="μ(0̂,1̂) of L^s_m(w) for a range of m")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--min-m", type=int)
    p.add_argument("--heavy", type=int, nargs="*", default=[], help="weights placed before the ones")

    p = sub.add_parser("logconcave", help="log-concavity of a sequence or of every table row")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--seq", type=int, nargs="+")
    g.add_argument("--builtin", metavar="NAME")
    g.add_argument("--file", metavar="PATH")
    g.add_argument("--cyclic", metavar="M,N")
    g.add_argument("--simplex", metavar="M", type=int)

    p = sub.add_parser("verify", help="cross-check all routes and brute-force references")
    _add_input(p)
    p.add_argument("-s", type=int)
    p.add_argument("--all", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200, help="random colorings per s")
    return parser


def load_complex(args) -> SimplicialComplex:
    if args.builtin:
        return cx.builtin(args.builtin)
    if args.file:
        return cx.load_facets(args.file)
    if args.cyclic:
        try:
            m, n = (int(x) for x in args.cyclic.split(","))
        except ValueError:
            raise UsageError(f"--cyclic expects M,N, got {args.cyclic!r}") from None
        return cx.cyclic_polytope_boundary(m, n)
    if args.simplex is not None:
        return cx.full_simplex(args.simplex)
    raise UsageError("no input complex given")


def _s_values(K: SimplicialComplex, args) -> list[int]:
    if getattr(args, "all", False):
        return list(range(1, K.dim + 1))
    if args.s is None:
        raise UsageError("give -s or --all")
    if args.s < 1:
        raise UsageError("-s must be at least 1")
    return [args.s]


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _grid(rows: Sequence[Sequence[int]]) -> str:
    width = max((len(str(x)) for row in rows for x in row), default=1)
    return "".join(" ".join(str(x).rjust(width) for x in row) + "\n" for row in rows)


# ---------------------------------------------------------------------------
# verbs


def cmd_gen(args, out) -> int:
    K = load_complex(args)
    if args.skeleton is not None:
        K = K.skeleton(args.skeleton)
    out.write(cx.dump_facets(K, args.format))
    return 0


def cmd_faces(args, out) -> int:
    K = load_complex(args)
    if args.s is None:
        f = list(K.f_vector())
        if args.format == "json":
            out.write(_json({"f_vector": f}))
        elif args.format == "csv":
            out.write(_csv([f]))
        else:
            out.write(" ".join(map(str, f)) + "\n")
        return 0
    faces = [list(f) for f in K.faces(args.s)]
    if args.format == "json":
        out.write(_json({"s": args.s, "faces": faces}))
    elif args.format == "csv":
        out.write(_csv(faces))
    else:
        out.write("".join(" ".join(map(str, f)) + "\n" for f in faces))
    return 0


def cmd_chrompoly(args, out) -> int:
    K = load_complex(args)
    svals = _s_values(K, args)
    results = {}
    for s in svals:
        log.info("s=%d: %s route", s, args.method)
        if args.falling:
            results[s] = falling_factorial_form(K, s)
        else:
            results[s] = chrom_poly(K, s, args.method)
    if args.format == "json":
        if args.falling:
            body = {str(s): {str(i): c for i, c in ff.coefficients.items()} for s, ff in results.items()}
        else:
            body = {str(s): list(p.coeffs) for s, p in results.items()}
        out.write(_json({"polys": body}))
    elif args.format == "csv":
        if args.falling:
            out.write(_csv([[s, i, c] for s, ff in results.items() for i, c in ff.coefficients.items()]))
        else:
            out.write(_csv([[s, *p.coeffs] for s, p in results.items()]))
    else:
        for s, p in results.items():
            out.write((f"s={s}: {p}" if len(svals) > 1 else str(p)) + "\n")
    return 0


def cmd_table(args, out) -> int:
    K = load_complex(args)
    table = chromatic_table(K, max_s=args.max_s, threads=args.threads)
    rows = table.matrix()
    if args.format == "json":
        nums = {str(s): chromatic_number(K, s) for s in table.rows if s <= K.dim}
        polys = {str(s): list(p.coeffs) for s, p in table.row_polys().items()}
        out.write(_json({"table": rows, "polys": polys, "chromatic_numbers": nums}))
    elif args.format == "csv":
        out.write(_csv([["s", *range(1, table.m + 1)]] + [[s, *table.rows[s]] for s in sorted(table.rows)]))
    else:
        out.write(_grid(rows))
        if table.stirling_rows:
            print(f"rows {sorted(table.stirling_rows)} lie past dim(K) and hold ordinary Stirling numbers", file=sys.stderr)
    return 0


def cmd_chromnum(args, out) -> int:
    K = load_complex(args)
    nums = {s: chromatic_number(K, s) for s in _s_values(K, args)}
    if args.format == "json":
        out.write(_json({"chromatic_numbers": {str(s): n for s, n in nums.items()}}))
    elif args.format == "csv":
        out.write(_csv([[s, n] for s, n in nums.items()]))
    elif len(nums) == 1:
        out.write(f"{next(iter(nums.values()))}\n")
    else:
        out.write("".join(f"s={s}: {n}\n" for s, n in nums.items()))
    return 0


def cmd_lattice(args, out) -> int:
    K = load_complex(args)
    L = build_lattice(K, args.s)
    if args.summary:
        lengths = " ".join(map(str, sorted(L.maximal_chain_lengths())))
        out.write(f"elements {len(L)}\nmu(bottom,top) {L.mu_bottom[L.top]}\nmaximal chain lengths {lengths}\n")
    else:
        out.write(L.dump())
    return 0


def cmd_mobius_weighted(args, out) -> int:
    out.write(f"{mobius_weighted(args.weights, args.s)}\n")
    return 0


def cmd_euler_seq(args, out) -> int:
    seq = euler_sequence(args.s, args.max_m, heavy=args.heavy, m_min=args.min_m)
    out.write(" ".join(map(str, seq)) + "\n")
    return 0


def cmd_logconcave(args, out) -> int:
    if args.seq:
        res = logconcavity_check(args.seq)
        out.write(res.status + (f" at {res.index}" if res.index is not None else "") + "\n")
        return 0
    K = load_complex(args)
    for s, row in chromatic_table(K).rows.items():
        res = logconcavity_check(row)
        # indices reported as column numbers r
        where = f" at r={res.index + 1}" if res.index is not None else ""
        out.write(f"s={s}: {res.status}{where}\n")
    return 0


class _Report:
    def __init__(self, out):
        self.out = out
        self.failures = 0

    def check(self, label: str, ok: bool, detail: str = "") -> None:
        if not ok:
            self.failures += 1
        self.out.write(f"{'ok  ' if ok else 'FAIL'} {label}{': ' + detail if detail and not ok else ''}\n")

    def skip(self, label: str, why: str) -> None:
        self.out.write(f"skip {label}: {why}\n")


def cmd_verify(args, out) -> int:
    from . import oracle

    K = load_complex(args)
    svals = _s_values(K, args)
    rep = _Report(out)
    rng = random.Random(args.seed)
    table = chromatic_table(K) if K.dim >= 1 else None
    if table is not None:
        rep.check("f-vector recovered from the table", f_vector_from_table(table) == K.f_vector())
    for s in svals:
        print(f"verifying s={s}", file=sys.stderr)
        ref = chrom_poly(K, s, "stirling")
        rep.check(f"s={s} leading terms", leading_terms_ok(K, s, ref))
        for method in ("partition", "lattice"):
            if K.m > 10:
                rep.skip(f"s={s} {method} route", "more than 10 vertices")
                continue
            try:
                p = chrom_poly(K, s, method)
            except TooLarge as exc:
                rep.skip(f"s={s} {method} route", str(exc))
                continue
            rep.check(f"s={s} {method} route = stirling route", p == ref, f"{p} != {ref}")
        try:
            n = chromatic_number(K, s)
            rep.check(f"s={s} chromatic number routes agree ({n})", True)
        except VerificationError as exc:
            rep.check(f"s={s} chromatic number routes agree", False, str(exc))
        for r in range(1, 5):
            if r ** K.m > 10**6:
                break
            b = oracle.brute_colorings(K, r, s)
            rep.check(f"s={s} r={r} brute-force colorings", b == ref(r), f"{b} != {ref(r)}")
        if K.m <= 9:
            ok = all(
                oracle.brute_partitions(K, r, s) == count_independent_partitions(K, r, s)
                for r in range(K.m + 1)
            )
            rep.check(f"s={s} brute-force partition counts", ok)
            bcp = sorted(tuple(sorted(P)) for P in enumerate_bcp(K, s))
            rep.check(f"s={s} block-connected partitions ({len(bcp)})", bcp == oracle.brute_bcp(K, s))
        if K.m <= 8:
            ok = all(
                oracle.alt_stirling_recurrence(K, r, s) == count_independent_partitions(K, r, s)
                for r in range(K.m + 1)
            )
            rep.check(f"s={s} first-vertex recurrence", ok)
        if K.m <= 12:
            try:
                L = build_lattice(K, s)
            except TooLarge as exc:
                rep.skip(f"s={s} monochrome sets", str(exc))
            else:
                ok = True
                for _ in range(args.samples):
                    col = [rng.randrange(max(2, K.m // 2)) for _ in range(K.m)]
                    ok &= L.element_of(monochrome_set_of_coloring(K, col, s)) is not None
                rep.check(f"s={s} monochrome sets of {args.samples} random colorings lie in the lattice", ok)
    out.write(f"{rep.failures} failure(s)\n")
    return 2 if rep.failures else 0


COMMANDS: dict[str, Callable] = {
    "gen": cmd_gen,
    "faces": cmd_faces,
    "chrompoly": cmd_chrompoly,
    "table": cmd_table,
    "chromnum": cmd_chromnum,
    "lattice": cmd_lattice,
    "mobius-weighted": cmd_mobius_weighted,
    "euler-seq": cmd_euler_seq,
    "logconcave": cmd_logconcave,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"schrome: usage error: {exc}", file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        print(f"schrome: usage error: {exc}", file=sys.stderr)
    except VerificationError as exc:
        print(f"schrome: verification mismatch: {exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"schrome: guard tripped: {exc}", file=sys.stderr)
    except SchromeError as exc:
        print(f"schrome: {type(exc).__name__}: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"schrome: cannot read input: {exc}", file=sys.stderr)
    return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
