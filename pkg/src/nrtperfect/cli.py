"""Command-line interface.

Exit codes are uniform across subcommands: 0 success/true, 1 a definite
negative answer, 2 usage or input errors, 3 an enumeration or search that ran
out of budget (undecided).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional, Sequence

from . import codefile
from .certificates import (
    DEFAULT_BUDGET,
    audit_sticky_set,
    build_sticky_set,
    build_sticky_vector,
    verify_sticky_vector,
)
from .codes import (
    constant_lift_map,
    is_covering,
    is_packing,
    lift_general,
    random_translate_lift_map,
)
from .core import NrtMatrix, Params
from .decompose import is_decomposable
from .enumeration import BudgetExceeded, ball_volume
from .feasibility import Outcome, scan, verdict
from .search import SearchConfig, SearchStatus, search_perfect

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_ABORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _params(args: argparse.Namespace) -> Params:
    try:
        return Params(args.q, args.s, args.r, args.R)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _print_matrix(m: NrtMatrix, out) -> None:
    for line in m.to_text(sep="\n").splitlines():
        print(f"  {line}", file=out)


def cmd_verdict(args: argparse.Namespace, out) -> int:
    p = _params(args)
    v = verdict(p.q, p.s, p.r, p.R)
    if args.format == "machine":
        print(json.dumps(v.as_dict(), sort_keys=True, ensure_ascii=False), file=out)
        return EXIT_OK
    vol = ball_volume(p)
    divides = p.space_size % vol == 0
    print(f"params: q={p.q} s={p.s} r={p.r} R={p.R}", file=out)
    print(f"verdict: {v.summary()}", file=out)
    print(f"reason: {v.reason.value}: {v.citation}", file=out)
    if len(v.all_reasons) > 1:
        print(f"all reasons: {', '.join(x.value for x in v.all_reasons)}", file=out)
    print(f"delta: {p.delta}", file=out)
    print(f"t: {p.t}", file=out)
    print(f"ball volume: {vol}", file=out)
    print(f"divisibility: {vol} {'divides' if divides else 'does not divide'} {p.space_size}", file=out)
    return EXIT_OK


def cmd_search(args: argparse.Namespace, out) -> int:
    p = _params(args)
    if not args.ignore_verdict:
        v = verdict(p.q, p.s, p.r, p.R)
        if v.outcome is Outcome.NONEXISTENT:
            print(f"verdict: {v.summary()}; search skipped (use --ignore-verdict to run it)", file=out)
            return EXIT_NEGATIVE
    if args.threads < 1 or args.max_nodes < 1:
        raise UsageError("--threads and --max-nodes must be >= 1")
    config = SearchConfig(max_nodes=args.max_nodes, parallel_width=args.threads)
    result = search_perfect(p, config)
    if result.status is SearchStatus.FOUND:
        print(f"Found: |C| = {len(result.code)} ({result.nodes_explored} nodes)", file=out)
        if args.out:
            codefile.write_code_file(args.out, result.code)
            print(f"wrote {args.out}", file=out)
        return EXIT_OK
    if result.status is SearchStatus.EXHAUSTED_NONE:
        print(f"ExhaustedNone: no {p.R}-perfect code exists "
              f"(full search with 0 in C, {result.nodes_explored} nodes)", file=out)
        return EXIT_NEGATIVE
    print(f"Aborted: undecided after {result.nodes_explored} nodes (budget exhausted)", file=out)
    return EXIT_ABORTED


def _read_code(path: str):
    try:
        return codefile.read_code_file(path)
    except codefile.CodeFileError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_verify(args: argparse.Namespace, out) -> int:
    code = _read_code(args.code)
    if args.R < 0:
        raise UsageError("--R must be >= 0")
    p = code.params(args.R)
    vol = ball_volume(p)
    packing = is_packing(code, args.R)
    counting = len(code) * vol == p.space_size
    print(f"code: q={code.q} s={code.s} r={code.r} |C|={len(code)}", file=out)
    print(f"packing: {str(packing).lower()}", file=out)
    print(f"counting: |C|*|B(R)| = {len(code)}*{vol} = {len(code) * vol} "
          f"{'==' if counting else '!='} {p.space_size}", file=out)
    ok = packing and counting
    if args.full_covering:
        try:
            covering = is_covering(code, args.R, args.budget)
        except BudgetExceeded as exc:
            print(f"covering: aborted ({exc})", file=out)
            return EXIT_ABORTED
        print(f"covering: {str(covering).lower()}", file=out)
        ok = ok and covering
    print(f"perfect: {str(ok).lower()}", file=out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_sticky(args: argparse.Namespace, out) -> int:
    p = _params(args)
    if p.s < 2:
        raise UsageError("certificates need s >= 2")
    if p.R + 1 > p.s * p.r:
        raise UsageError("B(R) is the whole space; no certificate applies")
    print(f"params: q={p.q} s={p.s} r={p.r} R={p.R} delta={p.delta} t={p.t}", file=out)
    if p.delta < 0 or (p.delta == 0 and p.r < 2):
        print("no certificate: ball is R-closed (δ≤0)", file=out)
        return EXIT_NEGATIVE
    try:
        if p.delta >= 1:
            cert = build_sticky_vector(p)
            print(f"sticky vector: ell={cert.ell} h={cert.h} weight={cert.m.weight()}", file=out)
            print("m:", file=out)
            _print_matrix(cert.m, out)
            if args.verify:
                ok = verify_sticky_vector(cert, args.budget)
                print(f"verified: {str(ok).lower()}", file=out)
                return EXIT_OK if ok else EXIT_NEGATIVE
            return EXIT_OK
        cert = build_sticky_set(p)
        print(f"sticky set: two points related by the cyclic row shift, weight {cert.m.weight()}", file=out)
        print("m:", file=out)
        _print_matrix(cert.m, out)
        print("m':", file=out)
        _print_matrix(cert.m_prime, out)
        if args.verify:
            audit = audit_sticky_set(cert, args.budget)
            print(f"centers: {audit.centers_m} around m, {audit.centers_m_prime} around m'; "
                  f"pairs checked: {audit.pairs_checked}", file=out)
            print(f"proof conditions: {str(audit.proof_conditions_hold).lower()}", file=out)
            print(f"verified: {str(audit.sticky).lower()}", file=out)
            return EXIT_OK if audit.sticky and audit.proof_conditions_hold else EXIT_NEGATIVE
        return EXIT_OK
    except BudgetExceeded as exc:
        print(f"verified: aborted ({exc})", file=out)
        return EXIT_ABORTED


SCAN_COLUMNS = ("q", "s", "r", "R", "delta", "t", "ball_volume", "outcome", "reason", "all_reasons", "recipe")


def cmd_scan(args: argparse.Namespace, out) -> int:
    if min(args.s_max, args.r_max, args.R_max) < 1 or args.q < 2:
        raise UsageError("bounds must be >= 1 and q >= 2")
    rows = scan(args.q, args.s_max, args.r_max, args.R_max)
    if args.format == "machine":
        print("\t".join(SCAN_COLUMNS), file=out)
        for v in rows:
            d = v.as_dict()
            d["all_reasons"] = ",".join(d["all_reasons"]) or "-"
            d["recipe"] = v.recipe.describe() if v.recipe else "-"
            print("\t".join(str(d[c]) for c in SCAN_COLUMNS), file=out)
        return EXIT_OK
    print(f"{'s':>3} {'r':>3} {'R':>3} {'delta':>6} {'|B(R)|':>10}  verdict", file=out)
    for v in rows:
        p = v.params
        print(f"{p.s:>3} {p.r:>3} {p.R:>3} {p.delta:>6} {ball_volume(p):>10}  {v.summary()}", file=out)
    return EXIT_OK


def cmd_ball(args: argparse.Namespace, out) -> int:
    p = _params(args)
    print(ball_volume(p), file=out)
    return EXIT_OK


def parse_matrix(text: str, q: int, s: int, r: int) -> NrtMatrix:
    """Parse ``"01/01/01"`` or ``"0 1/0 1/0 1"`` (rows split by ``/``)."""
    rows = [part.strip() for part in text.split("/")]
    parsed = []
    for row in rows:
        tokens = row.replace(",", " ").split() if (" " in row or "," in row) else list(row)
        try:
            parsed.append([int(t) for t in tokens])
        except ValueError as exc:
            raise UsageError(f"bad matrix row {row!r}") from exc
    if len(parsed) != s or any(len(row) != r for row in parsed):
        raise UsageError(f"matrix must have {s} rows of {r} entries, got {text!r}")
    if any(not 0 <= e < q for row in parsed for e in row):
        raise UsageError(f"matrix entries must lie in [0, {q})")
    return NrtMatrix(q, tuple(tuple(row) for row in parsed))


def cmd_decompose(args: argparse.Namespace, out) -> int:
    p = _params(args)
    x = parse_matrix(args.matrix, p.q, p.s, p.r)
    part = is_decomposable(x, p.R)
    print(f"row weights: {' '.join(str(w) for w in x.row_weights())} (total {x.weight()})", file=out)
    if part is None:
        print("indecomposable", file=out)
        return EXIT_NEGATIVE

    def fmt(rows):
        return "{" + ", ".join(str(i + 1) for i in sorted(rows)) + "}"

    print(f"decomposable: I = {fmt(part.I)}, J = {fmt(part.J)}", file=out)
    return EXIT_OK


def cmd_lift(args: argparse.Namespace, out) -> int:
    base = _read_code(args.code)
    if args.h < 1:
        raise UsageError("--h must be >= 1")
    if args.R > base.r:
        raise UsageError(f"lifting needs R <= r = {base.r}")
    try:
        if args.seed is None:
            f = constant_lift_map(base, args.h)
        else:
            f = random_translate_lift_map(base, args.h, args.R, random.Random(args.seed))
        lifted = lift_general(f, args.R)
    except ValueError as exc:
        print(f"lift failed: {exc}", file=out)
        return EXIT_NEGATIVE
    print(f"lifted: q={lifted.q} s={lifted.s} r={lifted.r} |C|={len(lifted)}, {args.R}-perfect", file=out)
    if args.out:
        codefile.write_code_file(args.out, lifted)
        print(f"wrote {args.out}", file=out)
    return EXIT_OK


def _add_params(p: argparse.ArgumentParser, q_default: Optional[int] = None) -> None:
    if q_default is None:
        p.add_argument("--q", type=int, required=True, help="alphabet size")
    else:
        p.add_argument("--q", type=int, default=q_default, help=f"alphabet size (default {q_default})")
    p.add_argument("--s", type=int, required=True, help="number of rows (chains)")
    p.add_argument("--r", type=int, required=True, help="row length (chain length)")
    p.add_argument("--R", type=int, required=True, help="radius")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nrtperfect", description="Perfect codes in NRT spaces", allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verdict", help="existence verdict for (q, s, r, R)", allow_abbrev=False)
    _add_params(p)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("search", help="exhaustive perfect-code search", allow_abbrev=False)
    _add_params(p)
    p.add_argument("--max-nodes", type=int, default=10**7)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="write the found code to this file")
    p.add_argument("--ignore-verdict", action="store_true", help="search even if ruled out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a code file for perfection", allow_abbrev=False)
    p.add_argument("--code", required=True)
    p.add_argument("--R", type=int, required=True)
    p.add_argument("--full-covering", action="store_true", help="also enumerate the covering")
    p.add_argument("--budget", type=int, default=10**7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sticky", help="non-existence certificate for delta >= 0", allow_abbrev=False)
    _add_params(p, q_default=2)
    p.add_argument("--verify", action="store_true", help="verify exhaustively at alphabet q")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_sticky)

    p = sub.add_parser("scan", help="verdict table over a parameter box", allow_abbrev=False)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--R-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("ball", help="ball volume |B(R)|", allow_abbrev=False)
    _add_params(p)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("decompose", help="decomposability witness for a matrix", allow_abbrev=False)
    _add_params(p)
    p.add_argument("--matrix", required=True, help='rows separated by "/", e.g. "01/01/01"')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("lift", help="lift a perfect code by h columns", allow_abbrev=False)
    p.add_argument("--code", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--R", type=int, required=True)
    p.add_argument("--seed", type=int, help="random translates per suffix (default: constant map)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_lift)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser._subparsers._group_actions[0].choices[args.command].print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
