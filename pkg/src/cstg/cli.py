"""Command-line interface.

Subcommands: generate, verify, extract, oracle, bench, render, tables.
Exit codes: 0 success, 1 usage error, 2 verification failed, 3 invalid
drawing or input, 4 budget or candidate pool exhausted.  All outputs are
deterministic for fixed argv and seed.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from . import codec, generators, oracles, svg
from .chromatics import ChiCache, phi_table, validate_observation
from .drawing import CONVEX, TWISTED, Certificate, verify_certificate
from .errors import (
    BudgetExhausted,
    CstgError,
    InternalInvariantBroken,
    ParseError,
)
from .extraction import extract_pattern
from .planepath import extract_plane_path

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_INVALID = 3
EXIT_EXHAUSTED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cstg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a drawing document")
    gen.add_argument(
        "--family",
        required=True,
        choices=["convex", "twisted", "halfcircle", "points", "horton"],
    )
    gen.add_argument("--n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--points", help="integer points as 'x,y;x,y;...'")
    gen.add_argument("--out")

    ver = sub.add_parser("verify", help="check a certificate against a drawing")
    ver.add_argument("drawing")
    ver.add_argument("certificate", nargs="?")
    ver.add_argument("--self", dest="self_check", action="store_true")

    ext = sub.add_parser("extract", help="run an extraction pipeline")
    ext.add_argument("what", choices=["pattern", "planepath"])
    ext.add_argument("drawing")
    ext.add_argument("--m1", type=int, default=4)
    ext.add_argument("--m2", type=int, default=4)
    ext.add_argument("--m-override", type=int)
    ext.add_argument("--path-target", type=int)
    ext.add_argument("--budget-seconds", type=float)
    ext.add_argument("--budget-nodes", type=int)
    ext.add_argument("--out", help="write the certificate document here")
    ext.add_argument("--star-out", help="write the bipartite star document here")

    orc = sub.add_parser("oracle", help="run a brute-force search")
    orc.add_argument("what", choices=["maxconvex", "maxtwisted", "planepath"])
    orc.add_argument("drawing")
    orc.add_argument("--budget-seconds", type=float)
    orc.add_argument("--budget-nodes", type=int)
    orc.add_argument("--out", help="write the witness certificate here")

    ben = sub.add_parser("bench", help="batch extraction trials, CSV summary")
    ben.add_argument("--family", default="halfcircle", choices=["halfcircle"])
    ben.add_argument("--n", type=int, required=True)
    ben.add_argument("--trials", type=int, required=True)
    ben.add_argument("--seed", type=int, default=0, help="base seed")
    ben.add_argument("--m1", type=int, default=4)
    ben.add_argument("--m2", type=int, default=4)
    ben.add_argument("--jobs", type=int, default=1)
    ben.add_argument("--out", required=True)

    ren = sub.add_parser("render", help="render a geometric drawing as SVG")
    ren.add_argument("drawing")
    ren.add_argument("--out", required=True)
    ren.add_argument("--overlay", help="certificate document to highlight")

    tab = sub.add_parser("tables", help="export chi or phi values as CSV")
    tab.add_argument("what", choices=["chi", "phi"])
    tab.add_argument("drawing")
    tab.add_argument("--out", required=True)

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_points(raw: str):
    pts = []
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        x, y = chunk.split(",")
        pts.append((int(x), int(y)))
    return pts


def _cmd_generate(args) -> int:
    if args.family == "points":
        if not args.points:
            raise UsageError("points family needs --points")
        d = generators.gen_straightline(_parse_points(args.points))
    elif args.family == "horton":
        if args.n is None:
            raise UsageError("horton family needs --n (a power of two)")
        k = args.n.bit_length() - 1
        if 2**k != args.n:
            raise UsageError(f"--n must be a power of two, got {args.n}")
        d = generators.gen_straightline(generators.gen_horton(k))
    else:
        if args.n is None:
            raise UsageError(f"{args.family} family needs --n")
        if args.family == "convex":
            d = generators.gen_convex(args.n)
        elif args.family == "twisted":
            d = generators.gen_twisted(args.n)
        else:
            d = generators.gen_halfcircle(args.n, seed=args.seed)
    _emit(codec.encode_drawing(d), args.out)
    return EXIT_OK


def _self_check(d) -> int:
    # codec round-trip must be byte-stable
    text = codec.encode_drawing(d)
    if codec.encode_drawing(codec.decode_drawing(text)) != text:
        print("self-check: codec round-trip failed", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    if d.model == "convex":
        report = verify_certificate(d, Certificate(CONVEX, tuple(range(d.n))))
    elif d.model == "twisted":
        report = verify_certificate(d, Certificate(TWISTED, tuple(range(d.n))))
    else:
        ad = generators.anchored_view(d)
        obs = validate_observation(ad)
        if not obs.ok:
            print(f"self-check: observation violated at {obs.violation}", file=sys.stderr)
            return EXIT_INVALID
        print(f"self-check passed ({obs.triples_checked} triples)")
        return EXIT_OK
    if not report.ok:
        print(f"self-check: {report.failure}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    print(f"self-check passed ({report.checked} tuples)")
    return EXIT_OK


def _cmd_verify(args) -> int:
    d = codec.load_drawing(args.drawing)
    if args.self_check:
        return _self_check(d)
    if args.certificate is None:
        raise UsageError("verify needs a certificate document or --self")
    cert = codec.load_certificate(args.certificate)
    report = verify_certificate(d, cert)
    if report.ok:
        print(f"pass: {cert.kind} certificate, {report.checked} checks")
        return EXIT_OK
    print(f"fail: {report.failure}", file=sys.stderr)
    return EXIT_VERIFY_FAILED


def _cmd_extract(args) -> int:
    d = codec.load_drawing(args.drawing)
    ad = generators.anchored_view(d)
    if args.what == "pattern":
        outcome = extract_pattern(ad, args.m1, args.m2)
        for line in outcome.report_lines():
            print(line)
        if outcome.exhausted:
            return EXIT_EXHAUSTED
        if args.out:
            codec.save_certificate(outcome.certificate, args.out)
        return EXIT_OK
    budget = None
    if args.budget_seconds or args.budget_nodes:
        budget = oracles.OracleBudget(seconds=args.budget_seconds, nodes=args.budget_nodes)
    outcome = extract_plane_path(
        ad,
        m_override=args.m_override,
        path_target=args.path_target,
        budget=budget,
    )
    for line in outcome.report_lines():
        print(line)
    if args.out:
        codec.save_certificate(outcome.path, args.out)
    if args.star_out and outcome.bipartite is not None:
        codec.save_certificate(outcome.bipartite, args.star_out)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    d = codec.load_drawing(args.drawing)
    budget = None
    if args.budget_seconds or args.budget_nodes:
        budget = oracles.OracleBudget(seconds=args.budget_seconds, nodes=args.budget_nodes)
    try:
        if args.what == "planepath":
            result = oracles.longest_plane_path_exact(d, budget=budget)
            kind = "plane_path"
        else:
            kind = CONVEX if args.what == "maxconvex" else TWISTED
            result = oracles.max_pattern_exact(d, kind, budget=budget)
    except BudgetExhausted as exc:
        result = exc.payload
        for line in result.report_lines():
            print(line)
        return EXIT_EXHAUSTED
    for line in result.report_lines():
        print(line)
    if args.out:
        codec.save_certificate(Certificate(kind, result.witness), args.out)
    return EXIT_OK


def _bench_trial(task):
    n, seed, m1, m2 = task
    d = generators.gen_halfcircle(n, seed=seed)
    ad = generators.anchored_view(d)
    outcome = extract_pattern(ad, m1, m2)
    if outcome.certificate is not None:
        report = verify_certificate(d, outcome.certificate)
        if not report.ok:
            raise InternalInvariantBroken(f"bench certificate failed: {report.failure}")
        kind = outcome.certificate.kind
        size = len(outcome.certificate.vertices)
    else:
        kind = "none"
        size = 0
    return (
        seed,
        outcome.stats.outcome,
        kind,
        size,
        outcome.stats.stages,
        outcome.stats.total_edges,
    )


BENCH_HEADER = "# cstg-bench-1\ntrial,seed,family,n,m1,m2,outcome,kind,size,stages,edges_built,ref_ceil_8log2n\n"


def _cmd_bench(args) -> int:
    tasks = [(args.n, args.seed + t, args.m1, args.m2) for t in range(args.trials)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_trial, tasks))
    else:
        rows = [_bench_trial(task) for task in tasks]
    reference = math.ceil(8 * math.log2(args.n))
    lines = [BENCH_HEADER]
    for trial, row in enumerate(rows):
        seed, outcome, kind, size, stages, edges = row
        lines.append(
            f"{trial},{seed},{args.family},{args.n},{args.m1},{args.m2},"
            f"{outcome},{kind},{size},{stages},{edges},{reference}\n"
        )
    _emit("".join(lines), args.out)
    return EXIT_OK


def _cmd_render(args) -> int:
    d = codec.load_drawing(args.drawing)
    overlay = codec.load_certificate(args.overlay) if args.overlay else None
    svg.render_svg(d, out_path=args.out, overlay=overlay)
    return EXIT_OK


def _cmd_tables(args) -> int:
    d = codec.load_drawing(args.drawing)
    ad = generators.anchored_view(d)
    n = ad.n
    lines: List[str] = []
    if args.what == "chi":
        cache = ChiCache(ad)
        lines.append("# cstg-chi-1\ni,j,k,color\n")
        for i in range(1, n - 2):
            for j in range(i + 1, n - 1):
                for k in range(j + 1, n):
                    lines.append(f"{i},{j},{k},{cache.get(i, j, k)}\n")
    else:
        table = phi_table(ad)
        lines.append("# cstg-phi-1\ni,j,a,b\n")
        for i in range(1, n - 1):
            for j in range(i + 1, n):
                value = table.value(i, j)
                lines.append(f"{i},{j},{value.a},{value.b}\n")
    _emit("".join(lines), args.out)
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "extract": _cmd_extract,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
    "render": _cmd_render,
    "tables": _cmd_tables,
}


def dispatch(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (ParseError,) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print(f"missing file: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CstgError as exc:
        print(f"invalid input: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
