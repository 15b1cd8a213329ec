"""Command line front end."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .errors import SkelhuffError
from .tree import build_huffman_tree, code_cost, kraft_sum, load_weights_file, q_source_of
from .classes import build_class_table
from .dp import min_pop_cubic, min_pop_fast, optimal_q_source
from .skeleton import optimal_skeleton, q_prime_of
from .oracle import brute_min_pop
from .codec import decode as codec_decode
from .codec import encode as codec_encode
from .dot import skeleton_to_dot, tree_to_dot

_popcount = int.bit_count


def _trimmed(q) -> list[int]:
    out = list(q)
    while out and out[-1] == 0:
        out.pop()
    return out


def _cmd_analyze(args) -> int:
    w = load_weights_file(args.weights)
    result = optimal_skeleton(w, algo=args.algo)
    cost = code_cost(result.q, w) if len(w) > 1 else 0
    table = build_class_table(build_huffman_tree(w))
    if args.json:
        payload = {
            "n": len(w),
            "huffman_cost": cost,
            "min_pop": result.min_pop,
            "skeleton_nodes": result.skeleton_nodes,
            "q_source": _trimmed(result.q),
            "q_prime": list(q_prime_of(result.q)),
        }
        if args.dump_classes:
            payload["classes"] = table.to_json_rows()
        print(json.dumps(payload, indent=2))
    else:
        print(f"n: {len(w)}")
        print(f"huffman_cost: {cost}")
        print(f"min_pop: {result.min_pop}")
        print(f"skeleton_nodes: {result.skeleton_nodes}")
        print("q_source:", " ".join(map(str, _trimmed(result.q))) or "-")
        print("q_prime:", " ".join(map(str, q_prime_of(result.q))))
        if args.dump_classes:
            for row in table.to_json_rows():
                print(
                    "class w={weight} size={size} leaves={leaves} "
                    "wprime={wprime} wsecond={wsecond} delta={delta} t={t}".format(**row)
                )
    if args.dot:
        with open(f"{args.dot}.tree.dot", "w") as fh:
            fh.write(tree_to_dot(result.code_tree))
        with open(f"{args.dot}.skeleton.dot", "w") as fh:
            fh.write(skeleton_to_dot(result.skeleton))
    return 0


def _cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    bad = 0
    for trial in range(args.trials):
        n = rng.randint(2, args.max_n)
        w = [rng.randint(1, 50) for _ in range(n)]
        table = build_class_table(build_huffman_tree(w))
        qc = optimal_q_source(table, algo="cubic")
        qf = optimal_q_source(table, algo="fast")
        pc = sum(_popcount(x) for x in qc)
        pf = sum(_popcount(x) for x in qf)
        pb = brute_min_pop(w)
        ok = (
            pc == pf == pb
            and kraft_sum(qc) == 1
            and kraft_sum(qf) == 1
            and code_cost(qc, w) == code_cost(q_source_of(build_huffman_tree(w)), w)
        )
        if not ok:
            bad += 1
            print(f"mismatch on weights {w}: cubic={pc} fast={pf} brute={pb}")
    print(f"ok: {args.trials - bad}/{args.trials}")
    return 1 if bad else 0


def _cmd_encode(args) -> int:
    with open(args.input, "rb") as fh:
        data = fh.read()
    with open(args.output, "wb") as fh:
        fh.write(codec_encode(data))
    return 0


def _cmd_decode(args) -> int:
    with open(args.input, "rb") as fh:
        blob = fh.read()
    with open(args.output, "wb") as fh:
        fh.write(codec_decode(blob))
    return 0


def _bench_weights(dist: str, n: int, seed: int) -> list[int]:
    if dist == "equal":
        return [1] * n
    if dist == "fib":
        w = [1, 1]
        while len(w) < n:
            w.append(w[-1] + w[-2])
        return w[:n]
    rng = random.Random(seed)
    return [rng.randint(1, 1_000_000) for _ in range(n)]


def _cmd_bench(args) -> int:
    w = _bench_weights(args.dist, args.n, args.seed)
    t0 = time.perf_counter()
    table = build_class_table(build_huffman_tree(w))
    t1 = time.perf_counter()
    print(f"classes: {len(table)} built in {t1 - t0:.3f}s")
    algos = ["cubic", "fast"] if args.algo == "both" else [args.algo]
    for algo in algos:
        t0 = time.perf_counter()
        value = min_pop_cubic(table) if algo == "cubic" else min_pop_fast(table)
        t1 = time.perf_counter()
        print(f"{algo}: min_pop={value} in {t1 - t0:.3f}s")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="skelhuff",
        description="Optimal prefix codes with the smallest shrunken code tree.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("analyze", help="report the best profile for a weights file")
    p.add_argument("--weights", required=True, help="text file, one weight per line")
    p.add_argument("--algo", choices=["fast", "cubic"], default="fast")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PREFIX", help="write PREFIX.{tree,skeleton}.dot")
    p.add_argument("--dump-classes", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="cross-check both solvers against brute force")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("encode", help="compress a file into a container")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="expand a container back into bytes")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("bench", help="time the solvers on synthetic weights")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--dist", choices=["uniform", "equal", "fib"], default="uniform")
    p.add_argument("--algo", choices=["cubic", "fast", "both"], default="both")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SkelhuffError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
