"""Command-line interface: ``ksink {solve,evaluate,exact,gen-hs,verify-hs}``.

Exit status is 0 whenever a document or report is written (an infeasible
sink set is a result, not an error), 2 for unreadable or invalid input and
3 when the exhaustive search refuses to run over its budget.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from ksink import documents
from ksink.evaluator import evacuation_time
from ksink.exact_oracle import DEFAULT_BUDGET, BudgetExceeded, solve_exact, solve_exact_threshold
from ksink.fptas import as_fraction, sample_positions, solve_fptas, subset_count
from ksink.hardness_gen import brute_force_hitting_set, from_hitting_set
from ksink.network_model import Instance, all_integer_positions, make_sink_set

EXIT_INPUT = 2
EXIT_BUDGET = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_instance(args) -> Instance:
    instance = documents.parse_instance(_read(args.instance))
    if args.k_override is not None:
        if args.k_override < 1:
            raise documents.DocumentError("--k-override", "must be >= 1")
        instance = Instance(instance.network, args.k_override)
    return instance


def _epsilon(text: str):
    try:
        eps = as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if eps <= 0:
        raise argparse.ArgumentTypeError("epsilon must be positive")
    return eps


def cmd_solve(args) -> int:
    instance = _load_instance(args)
    started = time.perf_counter()
    n_cand = len(sample_positions(instance.network, args.epsilon))
    if instance.k > n_cand:
        print(
            f"warning: k={instance.k} exceeds the {n_cand} candidate positions; using all of them",
            file=sys.stderr,
        )
    res = solve_fptas(instance, args.epsilon, parallelism=args.parallelism)
    doc = documents.solution_to_dict(
        instance.network,
        documents.eps_tag(res.epsilon),
        instance.k,
        res.sinks,
        res.time,
        candidates=res.num_candidates,
        subsets_evaluated=res.candidates_evaluated,
        wall_time=time.perf_counter() - started if args.timing else None,
    )
    _write(documents.dump(doc), args.output)
    return 0


def cmd_evaluate(args) -> int:
    instance = _load_instance(args)
    net = instance.network
    started = time.perf_counter()
    sinks = make_sink_set(net, [documents.parse_position(net, t) for t in args.sinks])
    result = evacuation_time(net, sinks)
    doc = documents.solution_to_dict(
        net,
        "evaluate",
        len(sinks),
        sinks,
        result,
        wall_time=time.perf_counter() - started if args.timing else None,
    )
    _write(documents.dump(doc), args.output)
    return 0


def cmd_exact(args) -> int:
    instance = _load_instance(args)
    started = time.perf_counter()
    res = solve_exact(instance, budget=args.budget, parallelism=args.parallelism)
    n_pos = len(all_integer_positions(instance.network))
    doc = documents.solution_to_dict(
        instance.network,
        "exact",
        instance.k,
        res.sinks,
        res.time,
        candidates=n_pos,
        subsets_evaluated=subset_count(n_pos, instance.k),
        wall_time=time.perf_counter() - started if args.timing else None,
    )
    _write(documents.dump(doc), args.output)
    return 0


def cmd_gen_hs(args) -> int:
    hs = documents.parse_hitting_set(_read(args.hitting_set))
    _write(documents.dump_instance(from_hitting_set(hs)), args.output)
    return 0


def cmd_verify_hs(args) -> int:
    hs = documents.parse_hitting_set(_read(args.hitting_set))
    has_hitting_set = brute_force_hitting_set(hs, args.budget)
    sinks_within_1 = solve_exact_threshold(from_hitting_set(hs), 1, args.budget)
    report = {
        "format": "ksink-verify-report",
        "version": documents.VERSION,
        "k": hs.k,
        "hitting_set": has_hitting_set,
        "sinks_within_1": sinks_within_1,
        "result": "pass" if has_hitting_set == sinks_within_1 else "fail",
    }
    _write(documents.dump(report), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ksink", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance=True):
        if instance:
            p.add_argument("instance", help="instance document, or - for stdin")
            p.add_argument("--k-override", type=int, default=None, help="replace the instance's k")
        p.add_argument("--output", "-o", default=None, help="write the document here instead of stdout")
        p.add_argument("--timing", action="store_true", help="record wall time in the output")

    p = sub.add_parser("solve", help="approximate the best k sinks")
    common(p)
    p.add_argument("--epsilon", type=_epsilon, default=as_fraction("1/2"), help='e.g. 1/4, 0.5 (default 1/2)')
    p.add_argument("--parallelism", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("evaluate", help="evacuation time for given sinks")
    common(p)
    p.add_argument("sinks", nargs="+", help="vertex names or e<index>:<offset>")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("exact", help="exhaustive optimum over all integer positions")
    common(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--parallelism", type=int, default=1)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen-hs", help="sink location instance from a hitting set document")
    p.add_argument("hitting_set")
    common(p, instance=False)
    p.set_defaults(func=cmd_gen_hs)

    p = sub.add_parser("verify-hs", help="check both sides of the hitting set equivalence")
    p.add_argument("hitting_set")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(p, instance=False)
    p.set_defaults(func=cmd_verify_hs)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
