"""Command-line front end.

    cobweb build --seq fibonacci --n 6 --out poset.json
    cobweb eval --func mu --seq fibonacci --x 1,2 --y 1,4
    cobweb eval --func eta-pow --k 2 --seq fibonacci --x 1,1 --y 1,4
    cobweb count --kind all-chains --seq fibonacci --n 5 --x 1,0 --y 1,2
    cobweb matrix --func zeta --seq fibonacci --n 6 --format csv
    cobweb verify --seq fibonacci --n 6
    cobweb invert-demo --seq fibonacci --n 5 --rng-seed 7

Exit status: 0 on success, 1 on domain errors (bad coordinates, malformed
sequence, non-invertible input), 2 on usage errors, and 3 when verify
finds a failing check.  Output is deterministic for a given argv.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import formulas, incidence, oracle
from .errors import CobwebError
from .poset import Vertex, build_subposet
from .sequence import parse_sequence

_EVAL_FUNCS = ("zeta", "mu", "eta", "chi", "card", "eta-pow", "chi-pow")
_MATRIX_FUNCS = ("zeta", "mu", "eta", "chi", "C", "M", "C-inv", "M-inv")


def _vertex_arg(text: str) -> Vertex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected 'position,level', got {text!r}")
    try:
        position, level = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected integer coordinates, got {text!r}") from None
    try:
        return Vertex(position, level)
    except CobwebError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _depth_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"depth must be an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"depth must be >= 0, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobweb",
        description="Build cobweb posets and evaluate their incidence algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="materialize a finite poset")
    _add_seq_depth(p_build)
    p_build.add_argument("--out", help="write the JSON poset dump to this path")
    p_build.add_argument("--format", choices=("pretty", "json"), default="pretty")

    p_eval = sub.add_parser("eval", help="evaluate a closed form at one pair")
    p_eval.add_argument("--func", choices=_EVAL_FUNCS, required=True)
    p_eval.add_argument("--k", type=int, default=None, help="chain length for *-pow")
    p_eval.add_argument("--seq", required=True)
    p_eval.add_argument("--x", type=_vertex_arg, required=True, metavar="P,L")
    p_eval.add_argument("--y", type=_vertex_arg, required=True, metavar="P,L")
    p_eval.add_argument("--format", choices=("pretty", "json"), default="pretty")

    p_count = sub.add_parser("count", help="count chains between two vertices")
    p_count.add_argument("--kind", choices=("all-chains", "maximal-chains"),
                         required=True)
    _add_seq_depth(p_count)
    p_count.add_argument("--x", type=_vertex_arg, required=True, metavar="P,L")
    p_count.add_argument("--y", type=_vertex_arg, required=True, metavar="P,L")
    p_count.add_argument("--format", choices=("pretty", "json"), default="pretty")

    p_matrix = sub.add_parser("matrix", help="dump a named incidence matrix")
    p_matrix.add_argument("--func", choices=_MATRIX_FUNCS, required=True)
    _add_seq_depth(p_matrix)
    p_matrix.add_argument("--format", choices=("pretty", "csv", "json"),
                          default="pretty")
    p_matrix.add_argument("--out", help="write the dump to this path")

    p_verify = sub.add_parser("verify", help="run the brute-force cross-checks")
    _add_seq_depth(p_verify)
    p_verify.add_argument("--pairs-cap", type=int, default=300,
                          help="exhaustive pair coverage up to this nu; sampled beyond")
    p_verify.add_argument("--format", choices=("pretty", "json"), default="pretty")

    p_demo = sub.add_parser("invert-demo",
                            help="round-trip a random function through inversion")
    _add_seq_depth(p_demo)
    p_demo.add_argument("--rng-seed", type=int, required=True)
    return parser


def _add_seq_depth(subparser) -> None:
    subparser.add_argument("--seq", required=True, help="sequence spec string")
    subparser.add_argument("--n", type=_depth_arg, required=True, help="poset depth")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval" and args.func in ("eta-pow", "chi-pow") and args.k is None:
        parser.error(f"--func {args.func} requires --k")
    if args.command == "eval" and args.func not in ("eta-pow", "chi-pow") and args.k is not None:
        parser.error(f"--func {args.func} takes no --k")
    try:
        return _dispatch(args)
    except CobwebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    handler = {
        "build": _cmd_build,
        "eval": _cmd_eval,
        "count": _cmd_count,
        "matrix": _cmd_matrix,
        "verify": _cmd_verify,
        "invert-demo": _cmd_invert_demo,
    }[args.command]
    return handler(args)


def _cmd_build(args) -> int:
    p = build_subposet(parse_sequence(args.seq), args.n)
    dump = p.to_json_dict()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(dump, fh)
            fh.write("\n")
        return 0
    if args.format == "json":
        print(json.dumps(dump))
    else:
        sizes = " ".join(str(c) for c in p.level_sizes())
        print(f"poset over '{p.seq.spec}', depth {p.depth}")
        print(f"nu = {p.nu}")
        print(f"level sizes: {sizes}")
        print(f"hasse edges: {len(p.hasse_edges())}")
    return 0


def _cmd_eval(args) -> int:
    seq = parse_sequence(args.seq)
    x, y = args.x, args.y
    if args.func == "zeta":
        value = formulas.zeta_at(seq, x, y)
    elif args.func == "mu":
        value = formulas.mu_at(seq, x, y)
    elif args.func == "eta":
        value = formulas.eta_at(seq, x, y)
    elif args.func == "chi":
        value = formulas.chi_at(seq, x, y)
    elif args.func == "card":
        value = formulas.card_interval(seq, x, y)
    elif args.func == "eta-pow":
        value = formulas.eta_pow_at(seq, args.k, x, y)
    else:
        value = formulas.chi_pow_at(seq, args.k, x, y)
    if args.format == "json":
        payload = {"command": "eval", "func": args.func, "seq": seq.spec,
                   "x": [x.position, x.level], "y": [y.position, y.level],
                   "value": _scalar_json(value)}
        if args.k is not None:
            payload["k"] = args.k
        print(json.dumps(payload))
    else:
        print(value)
    return 0


def _cmd_count(args) -> int:
    p = build_subposet(parse_sequence(args.seq), args.n)
    if args.kind == "all-chains":
        value = formulas.count_all_chains(p, args.x, args.y)
    else:
        value = formulas.count_maximal_chains(p, args.x, args.y)
    if args.format == "json":
        print(json.dumps({"command": "count", "kind": args.kind,
                          "seq": p.seq.spec, "depth": p.depth,
                          "x": [args.x.position, args.x.level],
                          "y": [args.y.position, args.y.level],
                          "value": _scalar_json(value)}))
    else:
        print(value)
    return 0


def _named_matrix(p, func):
    if func == "zeta":
        return incidence.zeta(p)
    if func == "mu":
        return incidence.mu(p)
    if func == "eta":
        return incidence.eta(p)
    if func == "chi":
        return incidence.chi(p)
    if func == "C":
        return incidence.chain_kernel(p)
    if func == "M":
        return incidence.maximal_chain_kernel(p)
    if func == "C-inv":
        return incidence.invert(incidence.chain_kernel(p))
    return incidence.invert(incidence.maximal_chain_kernel(p))


def _cmd_matrix(args) -> int:
    p = build_subposet(parse_sequence(args.seq), args.n)
    f = _named_matrix(p, args.func)
    if args.format == "csv":
        text = incidence.matrix_to_csv(f)
    elif args.format == "json":
        text = json.dumps(incidence.matrix_to_json_dict(f)) + "\n"
    else:
        text = "\n".join(" ".join(str(e) for e in row) for row in f.entries) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        return 0
    sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    p = build_subposet(parse_sequence(args.seq), args.n)
    pretty = args.format == "pretty"

    def sink(check):
        if not pretty:
            return
        status = "PASS" if check.passed else "FAIL"
        line = f"{status} {check.name} ({check.pairs_checked} comparisons)"
        print(line)
        for fail in check.failures:
            print(f"     counterexample: x={fail.x} y={fail.y} "
                  f"expected={fail.expected} got={fail.got}")

    report = oracle.verify_suite(p, sink, pair_cap=args.pairs_cap)
    if pretty:
        failed = [c for c in report.checks if not c.passed]
        verdict = "all checks passed" if report.passed else \
            f"{len(failed)} of {len(report.checks)} checks failed"
        print(f"verify: {verdict} (nu={report.nu}, mode={report.mode})")
    else:
        print(json.dumps(report.to_json_dict()))
    return 0 if report.passed else 3


def _cmd_invert_demo(args) -> int:
    p = build_subposet(parse_sequence(args.seq), args.n)
    rng = random.Random(args.rng_seed)
    f = {v: rng.randint(-99, 99) for v in p.vertices}
    g = formulas.down_set_sums(p, f)
    recovered = formulas.mobius_inversion(p, g)
    diff = [v for v in p.vertices if recovered[v] != f[v]]
    print(f"inversion round trip on '{p.seq.spec}' P_{p.depth} "
          f"(nu={p.nu}, seed={args.rng_seed})")
    sample = ", ".join(f"f{v}={f[v]}" for v in p.vertices[:4])
    print(f"sample values: {sample}")
    if diff:
        print(f"diff: {len(diff)} vertex(es) disagree")
        for v in diff[:10]:
            print(f"  {v}: expected {f[v]}, got {recovered[v]}")
        print("FAIL round trip did not recover the original function")
        return 1
    print("diff: (empty)")
    print(f"PASS round trip recovered all {p.nu} values exactly")
    return 0


def _scalar_json(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


if __name__ == "__main__":
    sys.exit(main())
