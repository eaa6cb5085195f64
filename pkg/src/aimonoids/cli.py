"""Command line front door.

Three commands:

    aimonoids reduce --system A --rank 3 "2 1 2 1"
    aimonoids equal  --system M --rank 3 "1 1 2 1" "1 2 1 2"
    aimonoids verify <harness> [options]

where <harness> is one of confluence-a, confluence-m, sink, garside,
cancel, linrep, cube, rank2, action.  Exit codes: 0 for pass or "equal",
1 for a property failure or "distinct", 2 for usage and parse errors.
`--json` prints a verification report as a single object with the fields
command, params, checks_run, failures and elapsed_ms; `--seed` makes the
randomized harnesses reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cube import (REVERSAL_BUDGET_EXCEEDED, cube_condition_check,
                   cube_presentation, upper_bound_census)
from .garside import check_lambda_identity, left_cancel_harness, verify_garside
from .linrep import verify_representation
from .monoid_core import (EQUAL, chain_ci_matrix, hasse_dot, is_lattice,
                          left_division_order, load_ci_matrix,
                          pair_collapse_action, rank2_monoid,
                          tuple_action_failures)
from .rewrite_a import a_confluence_audit, a_equal, a_reduce
from .rewrite_m import m_confluence_audit, m_equal, m_reduce, verify_sink
from .words import format_word, parse_word


def _letters(word) -> str:
    # the three-generator counterexample is traditionally written in a, b, c
    return " ".join("abc"[x - 1] for x in word)


def _cmd_reduce(args) -> int:
    word = parse_word(args.word, args.rank)
    reduce_fn = a_reduce if args.system == "A" else m_reduce
    print(format_word(reduce_fn(word)))
    return 0


def _cmd_equal(args) -> int:
    u = parse_word(args.u, args.rank)
    v = parse_word(args.v, args.rank)
    equal_fn = a_equal if args.system == "A" else m_equal
    if equal_fn(u, v):
        print("equal")
        return 0
    print("distinct")
    return 1


def _family_line(by_family: dict) -> str:
    parts = ["%s=%d" % (k, v) for k, v in sorted(by_family.items())]
    return "family counts: " + " ".join(parts)


def _verify_confluence_a(args):
    n = 5 if args.rank is None else args.rank
    samples = 200 if args.samples is None else args.samples
    rep = a_confluence_audit(n, args.max_exp, samples, args.seed)
    params = {"rank": n, "max_exponent": args.max_exp,
              "random_words": samples, "seed": args.seed}
    return params, rep.pairs_checked, rep.failures, [_family_line(rep.by_family)]


def _verify_confluence_m(args):
    n = 5 if args.rank is None else args.rank
    samples = 200 if args.samples is None else args.samples
    rep = m_confluence_audit(n, args.max_interleave, samples, args.seed)
    params = {"rank": n, "max_interleave": args.max_interleave,
              "random_words": samples, "seed": args.seed}
    return params, rep.pairs_checked, rep.failures, [_family_line(rep.by_family)]


def _verify_sink(args):
    n = 3 if args.rank is None else args.rank
    trials = 500 if args.samples is None else args.samples
    rep = verify_sink(n, trials, args.seed)
    params = {"rank": n, "trials": trials, "seed": args.seed}
    return params, rep.trials, rep.failures, []


def _verify_garside(args):
    n = 3 if args.rank is None else args.rank
    samples = 200 if args.samples is None else args.samples
    first = verify_garside(n, samples, args.seed)
    second = check_lambda_identity(n, samples, args.seed)
    params = {"rank": n, "samples": samples, "seed": args.seed}
    checks = first.checks_run + second.checks_run
    return params, checks, first.failures + second.failures, []


def _verify_cancel(args):
    n = 3 if args.rank is None else args.rank
    samples = 1000 if args.samples is None else args.samples
    rep = left_cancel_harness(n, samples, args.seed)
    params = {"rank": n, "samples": samples, "seed": args.seed}
    return params, rep.checks_run, rep.failures, []


def _verify_linrep(args):
    if args.matrix is not None:
        with open(args.matrix) as handle:
            matrix = load_ci_matrix(handle.read())
        params = {"matrix": args.matrix}
    else:
        n = 3 if args.rank is None else args.rank
        matrix = chain_ci_matrix(n)
        params = {"rank": n}
    rep = verify_representation(matrix)
    return params, rep.checks_run, rep.failures, []


def _verify_cube(args):
    p = cube_presentation()
    rep = cube_condition_check(p, 1, 2, 3, args.budget)
    census = upper_bound_census(p, max_len=args.max_len)
    params = {"budget": args.budget, "census_max_len": args.max_len}
    failures = list(census.failures)
    if rep.verdict == EQUAL:
        failures.append(("cube-condition-held", rep.w1, rep.w2))
    if rep.verdict == REVERSAL_BUDGET_EXCEEDED:
        failures.append(("reversal-budget-exceeded",))
    lines = [
        "w1 = %s" % _letters(rep.w1),
        "w2 = %s" % _letters(rep.w2),
        "verdict: %s" % rep.verdict,
        "census classes: %d and %d words within length %d" % (
            len(census.first_class), len(census.second_class), census.max_len),
    ]
    return params, 1 + census.checks_run, failures, lines


def _verify_rank2(args):
    monoid = rank2_monoid(args.k, args.l)
    order = left_division_order(monoid)
    lattice = is_lattice(order)
    failures = []
    if len(monoid.elements) != args.k + args.l:
        failures.append("size %d, expected %d" % (
            len(monoid.elements), args.k + args.l))
    if not lattice:
        failures.append("left division is not a lattice order")
    lines = ["%d elements, lattice: %s" % (
        len(monoid.elements), "yes" if lattice else "no")]
    if args.dot is not None:
        with open(args.dot, "w") as handle:
            handle.write(hasse_dot(order, monoid))
        lines.append("DOT written to %s" % args.dot)
    params = {"k": args.k, "l": args.l}
    return params, 2, failures, lines


def _verify_action(args):
    n = 3 if args.rank is None else args.rank
    act = pair_collapse_action(args.carrier, n)
    failures = tuple_action_failures(act)
    # one idempotence check per pair, two braid comparisons per triple
    checks = args.carrier ** 2 + 2 * args.carrier ** 3
    params = {"rank": n, "carrier": args.carrier}
    return params, checks, failures, []


_HARNESSES = {
    "confluence-a": _verify_confluence_a,
    "confluence-m": _verify_confluence_m,
    "sink": _verify_sink,
    "garside": _verify_garside,
    "cancel": _verify_cancel,
    "linrep": _verify_linrep,
    "cube": _verify_cube,
    "rank2": _verify_rank2,
    "action": _verify_action,
}


def _cmd_verify(args) -> int:
    start = time.monotonic()
    params, checks_run, failures, lines = _HARNESSES[args.harness](args)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    command = "verify %s" % args.harness
    if args.json:
        print(json.dumps({
            "command": command,
            "params": params,
            "checks_run": checks_run,
            "failures": list(failures),
            "elapsed_ms": elapsed_ms,
        }))
    else:
        print("%s: %s" % (
            command, " ".join("%s=%s" % kv for kv in sorted(params.items()))))
        for line in lines:
            print(line)
        print("checks run: %d" % checks_run)
        print("failures: %d" % len(failures))
        for failure in list(failures)[:10]:
            print("  %s" % (failure,))
        print("elapsed: %d ms" % elapsed_ms)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aimonoids",
        description="Normal forms, word problems and verification harnesses "
                    "for a family of idempotent Artin-like monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    reduce_p = sub.add_parser("reduce", help="print the normal form of a word")
    reduce_p.add_argument("--system", choices=("A", "M"), required=True)
    reduce_p.add_argument("--rank", type=int, required=True)
    reduce_p.add_argument("word", help="word text, letters separated by spaces")
    reduce_p.set_defaults(func=_cmd_reduce)

    equal_p = sub.add_parser("equal", help="decide whether two words are equal")
    equal_p.add_argument("--system", choices=("A", "M"), required=True)
    equal_p.add_argument("--rank", type=int, required=True)
    equal_p.add_argument("u")
    equal_p.add_argument("v")
    equal_p.set_defaults(func=_cmd_equal)

    verify_p = sub.add_parser("verify", help="run a verification harness")
    verify_p.add_argument("harness", choices=sorted(_HARNESSES))
    verify_p.add_argument("--rank", type=int, default=None,
                          help="letter cap (default depends on the harness)")
    verify_p.add_argument("--samples", type=int, default=None,
                          help="random sample count (default per harness)")
    verify_p.add_argument("--seed", type=int, default=0)
    verify_p.add_argument("--max-exp", type=int, default=2,
                          help="exponent cap for the confluence-a families")
    verify_p.add_argument("--max-interleave", type=int, default=1,
                          help="interleave cap for the confluence-m families")
    verify_p.add_argument("--k", type=int, default=3, help="rank2: first label")
    verify_p.add_argument("--l", type=int, default=4, help="rank2: second label")
    verify_p.add_argument("--dot", default=None,
                          help="rank2: write the Hasse diagram as DOT")
    verify_p.add_argument("--matrix", default=None,
                          help="linrep: verify the matrix in this file "
                               "instead of the chain diagram")
    verify_p.add_argument("--budget", type=int, default=10000,
                          help="cube: reversing step budget")
    verify_p.add_argument("--max-len", type=int, default=9,
                          help="cube: census length bound")
    verify_p.add_argument("--carrier", type=int, default=4,
                          help="action: carrier set size")
    verify_p.add_argument("--json", action="store_true",
                          help="print the report as one JSON object")
    verify_p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
