"""Command-line entry point: ``sockmatch <subcommand> [options]``.

Exit codes: 0 success, 1 usage or input error, 2 a Monte Carlo band check
failed. The seed comes from ``--seed``, else ``$SOCKMATCH_SEED``, else 42.
"""

from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager
from typing import IO

from . import experiments, formulas, patterns, persecute, randgen, sockproc
from .core import DyckTrace, GaussWord, OrderedMatching, matching_from_word, trace_of
from .enumeration import BudgetExceededError, SizeCapError, sock_distribution
from .wordio import (
    WordParseError,
    emit_object,
    emit_table,
    format_matching,
    format_trace,
    format_word,
    parse_word,
)

SEED_ENV = "SOCKMATCH_SEED"
DEFAULT_SEED = 42


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=None, help=f"master seed (default ${SEED_ENV} or {DEFAULT_SEED})")
    p.add_argument("--threads", type=int, default=1, help="worker processes (results do not depend on it)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    return p


def _csv_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _int_list(text: str) -> list[int]:
    return [int(t) for t in _csv_list(text)]


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="sockmatch", description="Sock process on ordered r-matchings.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("sockuence", parents=[common], help="sockuence, sock number and lengths of one matching")
    p.add_argument("--word", required=True, help="Gauss word, e.g. ABBCAC or '1 2 2 1'")
    p.add_argument("--r", type=int, default=None, help="multiplicity (inferred from the word if omitted)")

    p = sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo run with a band check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--statistic", choices=experiments.STATISTICS, default="avg")
    p.add_argument("--patterns", type=_csv_list, default=(), help="allowed patterns for the clique statistic")
    p.add_argument("--family", type=_csv_list, default=(), help="persecuted words for the persecute statistic")
    p.add_argument("--k", type=int, default=2, help="alphabet size for the persecute statistic")
    p.add_argument("--center", type=float, default=None)
    p.add_argument("--halfwidth", type=float, default=None)
    p.add_argument("--scale", choices=("n", "sqrt_n", "1"), default=None)
    p.add_argument("--grid", type=_int_list, default=None, help="comma-separated n values; emits one summary row each")
    p.add_argument("--summary", default=None, help="write the summary JSON here (default stderr)")

    p = sub.add_parser("enumerate", parents=[common], help="exact sock-number distribution s_j(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--budget", type=int, default=10**7)

    p = sub.add_parser("formula", parents=[common], help="exact closed forms")
    p.add_argument("quantity", choices=("expected-xk", "summary", "sock-counts", "dyck-height"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--j", type=int, default=None, help="height bound for dyck-height")

    p = sub.add_parser("dyck", parents=[common], help="Dyck traces: inspect, sample, count")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--trace", help="comma-separated +1/-1 steps")
    g.add_argument("--word", help="Gauss word (r = 2) whose trace to inspect")
    g.add_argument("--random", type=int, metavar="N", help="sample a uniform Dyck sequence of length 2N")

    p = sub.add_parser("patterns", parents=[common], help="patterns, cliques and collectability")
    p.add_argument("action", choices=("list", "classify", "clique", "probe"))
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--partite", action="store_true", help="list only r-partite patterns")
    p.add_argument("--e1", type=_int_list, help="first block, e.g. 1,4")
    p.add_argument("--e2", type=_int_list, help="second block, e.g. 2,3")
    p.add_argument("--word", help="Gauss word for the clique action")
    p.add_argument("--allowed", type=_csv_list, help="allowed patterns for the clique action")
    p.add_argument("--pattern", help="pattern for the probe action")
    p.add_argument("--k", type=int, default=3, help="clique size for the probe action")

    p = sub.add_parser("persecute", parents=[common], help="persecuted-word reduction")
    p.add_argument("--word", required=True)
    p.add_argument("--family", type=_csv_list, required=True, help="comma-separated persecuted words")
    return parser


@contextmanager
def _sink(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            yield f


def _infer_r(letters) -> int:
    counts = {c: letters.count(c) for c in set(letters)}
    rs = set(counts.values())
    if len(rs) != 1:
        raise UsageError(f"letter counts {sorted(rs)} differ; not a Gauss word")
    return rs.pop()


def _emit(args, rows: list[dict], out: IO[str], columns=None) -> None:
    if args.format == "json" and len(rows) == 1 and columns is None:
        emit_object(rows[0], out)
    else:
        emit_table(rows, out, args.format, columns)


def cmd_sockuence(args, out) -> int:
    w = parse_word(args.word)
    r = args.r if args.r is not None else _infer_r(list(w.letters))
    m = matching_from_word(GaussWord.from_word(w, r))
    s = sockproc.sockuence(m)
    lengths = sockproc.edge_lengths(m)
    row = {
        "word": format_word(w),
        "r": r,
        "n": m.n,
        "xs": list(s.xs),
        "y": s.y,
        "avg": s.avg,
        "length_total": lengths.total,
        "length_avg": lengths.avg,
    }
    _emit(args, [row], out)
    return 0


def cmd_simulate(args, out) -> int:
    spec = experiments.ExperimentSpec(
        n=args.n,
        r=args.r,
        samples=args.samples,
        seed=args.seed,
        statistic=args.statistic,
        patterns=tuple(args.patterns),
        family=tuple(args.family),
        k=args.k,
        center=args.center,
        halfwidth=args.halfwidth,
        scale=args.scale,
    )
    if args.grid:
        summaries = experiments.sweep(spec, args.grid, workers=args.threads)
        emit_table([s.to_record() for s in summaries], out, args.format)
        return 0 if all(s.passed for s in summaries) else 2
    summary = experiments.run(spec, workers=args.threads)
    if args.format == "csv":
        emit_table(summary.sample_rows(), out, "csv", columns=["sample_index", "value"])
        if args.summary:
            with open(args.summary, "w", encoding="utf-8") as f:
                emit_object(summary.to_record(), f)
        else:
            emit_object(summary.to_record(), sys.stderr)
    else:
        record = summary.to_record()
        record["values"] = summary.values
        emit_object(record, out)
    return 0 if summary.passed else 2


def cmd_enumerate(args, out) -> int:
    table = sock_distribution(args.n, args.r, workers=args.threads, budget=args.budget)
    emit_table(table.rows(), out, args.format, columns=["n", "r", "j", "s"])
    return 0


def cmd_formula(args, out) -> int:
    n, r = args.n, args.r
    if args.quantity == "expected-xk":
        rows = [{"n": n, "r": r, "k": k, "exk": formulas.expected_xk(n, r, k)} for k in range(1, r * n + 1)]
        emit_table(rows, out, args.format, columns=["n", "r", "k", "exk"])
    elif args.quantity == "summary":
        prof = formulas.ExpectationProfile.compute(n, r)
        row = {
            "n": n,
            "r": r,
            "expected_avg": formulas.expected_avg(n, r),
            "expected_avg_length": formulas.expected_avg_length(n, r),
            "argmax_cut": prof.k0,
            "exact_argmax": prof.exact_argmax() if prof.values else 0,
            "asymptotic_max": formulas.asymptotic_max(n, r),
            "matchings": formulas.matching_count(n, r),
        }
        _emit(args, [row], out)
    elif args.quantity == "sock-counts":
        rows = [{"n": n, "j": j, "s": s} for j, s in formulas.closed_sock_counts(n).items()]
        emit_table(rows, out, args.format, columns=["n", "j", "s"])
    else:
        if args.j is None:
            raise UsageError("dyck-height needs --j")
        _emit(args, [{"n": n, "j": args.j, "count": formulas.dyck_count_height_leq(n, args.j)}], out)
    return 0


def _trace_row(t: DyckTrace) -> dict:
    return {
        "trace": format_trace(t),
        "n": t.n,
        "height": t.height(),
        "multiplicity": formulas.trace_multiplicity(t),
        "crossing_free": format_word(_word(randgen.matching_with_trace(t, "crossing-free"))),
        "nesting_free": format_word(_word(randgen.matching_with_trace(t, "nesting-free"))),
    }


def _word(m: OrderedMatching):
    return m.labels()


def cmd_dyck(args, out) -> int:
    if args.trace is not None:
        t = DyckTrace(tuple(_int_list(args.trace)))
    elif args.word is not None:
        t = trace_of(matching_from_word(GaussWord.from_word(parse_word(args.word), 2)))
    else:
        t = randgen.random_dyck(args.random, randgen.SeedSpec(args.seed, 0))
    _emit(args, [_trace_row(t)], out)
    return 0


def cmd_patterns(args, out) -> int:
    if args.action == "list":
        pats = patterns.r_partite_patterns(args.r) if args.partite else patterns.all_patterns(args.r)
        rows = [{"r": p.r, "pattern": p.word, "r_partite": p.is_r_partite()} for p in pats]
        emit_table(rows, out, args.format, columns=["r", "pattern", "r_partite"])
    elif args.action == "classify":
        if not args.e1 or not args.e2:
            raise UsageError("classify needs --e1 and --e2")
        _emit(args, [{"e1": args.e1, "e2": args.e2, "pattern": patterns.classify_pair(args.e1, args.e2).word}], out)
    elif args.action == "clique":
        if not args.word or not args.allowed:
            raise UsageError("clique needs --word and --allowed")
        w = parse_word(args.word)
        r = _infer_r(list(w.letters))
        m = matching_from_word(GaussWord.from_word(w, r))
        _emit(args, [{"word": format_word(w), "allowed": "+".join(args.allowed), "z": patterns.z_clique(m, args.allowed)}], out)
    else:
        if not args.pattern:
            raise UsageError("probe needs --pattern")
        wit = patterns.collectable_probe(args.pattern, args.k)
        row = {
            "pattern": patterns.Pattern.of(args.pattern).word,
            "k": args.k,
            "found": wit is not None,
            "witness": format_word(wit.labels()) if wit is not None else "",
        }
        _emit(args, [row], out)
    return 0


def cmd_persecute(args, out) -> int:
    w = parse_word(args.word)
    fam = [parse_word(f) for f in args.family]
    run = persecute.reduce(w, fam)
    names = [format_word(f) for f in fam]
    if args.format == "json":
        emit_object(
            {
                "word": format_word(w),
                "family": names,
                "result": format_word(run.result),
                "y": run.y,
                "survivors": run.survivors,
                "removals": [
                    {"step": rm.step, "positions": list(rm.positions), "member": names[rm.member]}
                    for rm in run.removals
                ],
            },
            out,
        )
    else:
        log = ";".join(f"{rm.step}:{' '.join(map(str, rm.positions))}:{names[rm.member]}" for rm in run.removals)
        emit_table(
            [{"word": format_word(w), "family": " ".join(names), "result": format_word(run.result), "y": run.y, "removals": log}],
            out,
            "csv",
        )
    return 0


COMMANDS = {
    "sockuence": cmd_sockuence,
    "simulate": cmd_simulate,
    "enumerate": cmd_enumerate,
    "formula": cmd_formula,
    "dyck": cmd_dyck,
    "patterns": cmd_patterns,
    "persecute": cmd_persecute,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.seed is None:
            env = os.environ.get(SEED_ENV)
            args.seed = int(env) if env else DEFAULT_SEED
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        with _sink(args.out) as out:
            return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (WordParseError, ValueError, BudgetExceededError, SizeCapError, patterns.SearchBudgetError) as exc:
        print(f"sockmatch: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
