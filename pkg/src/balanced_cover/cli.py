"""Command-line front end: ``balanced-cover <subcommand> ...``.

Exit codes: 0 when every checked bound holds, 1 when a bound or a
verification fails (the report names the inequality), 2 for usage, parse
and precondition errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path

from . import io
from .chains import BUILDERS, build_chain, default_algo, half_cover
from .convert import TO_GRAPH, coverage_trace, family_to_graph, graph_to_family, map_chain
from .core import (
    BlockedBipartiteGraph,
    Chain,
    InstanceFamily,
    cover_slack,
    unbalance,
)
from .errors import BalancedCoverError, FormatError, GenerationFailure, InvariantViolation
from .generators import (
    gen_almost_regular,
    gen_hadamard_vectors,
    gen_mixed_family,
    gen_random_family,
    gen_zero_sum_vectors,
    vectors_to_family,
)
from .oracles import lemma_check, min_ordering_prefix_norm, optimal_chain, optimal_partition
from .partition import (
    PAIRWISE,
    TUCKER,
    partition_gaps,
    partition_pairwise,
    partition_tucker,
)
from .steinitz import VectorFamily, prefix_norms, steinitz_order

fs = io.frac_str


class UsageError(Exception):
    pass


# -- bounds ----------------------------------------------------------------------

def chain_bound(F: InstanceFamily, algo: str) -> tuple[str, Fraction]:
    """``(inequality, rhs)`` with the check ``unbalance^2 <= rhs`` at every prefix."""
    c = cover_slack(F)
    k = F.k
    if algo == "two":
        return "unbalance <= c", c * c
    if algo == "steinitz":
        return "unbalance <= 2(k-1)c", (2 * (k - 1) * c) ** 2
    return "unbalance^2 <= 2(k-1)c", 2 * (k - 1) * c


def partition_bound(F: InstanceFamily, kind: str) -> tuple[str, Fraction] | None:
    """``(inequality, rhs)`` with the check ``gap^2 <= rhs``, or ``None`` if uncertified."""
    c = cover_slack(F)
    if kind == TUCKER:
        return "gap <= 2kc", (2 * F.k * c) ** 2
    if kind == PAIRWISE:
        return "gap^2 <= 36kc^2", 36 * F.k * c * c
    return None


def _chain_steps(F: InstanceFamily, order) -> list[Fraction]:
    """Per-prefix unbalances, each recomputed directly from its prefix set."""
    steps, mask = [], 0
    for v in order:
        mask |= 1 << (v - 1)
        steps.append(unbalance(F, mask))
    return steps


def _check_chain(F, order, algo):
    ineq, rhs = chain_bound(F, algo)
    steps = _chain_steps(F, order)
    violations = [
        f"prefix {j}: unbalance^2 = {fs(u * u)} > {fs(rhs)} ({ineq})"
        for j, u in enumerate(steps, 1)
        if u * u > rhs
    ]
    return steps, ineq, rhs, violations


# -- documents --------------------------------------------------------------------

def family_chain_doc(F: InstanceFamily, chain: Chain, algo: str) -> tuple[dict, bool]:
    steps, ineq, rhs, violations = _check_chain(F, chain.order, algo)
    doc = {
        "schema": io.SCHEMA,
        "kind": "chain",
        "algo": algo,
        "n": F.n,
        "k": F.k,
        "cover_slack": fs(cover_slack(F)),
        "order": list(chain.order),
        "steps": [
            {"j": j, "added": v, "unbalance": fs(u), "unbalance_sq": fs(u * u), "within_bound": u * u <= rhs}
            for j, (v, u) in enumerate(zip(chain.order, steps), 1)
        ],
        "max_unbalance": fs(max(steps)),
        "bound": {"inequality": ineq, "rhs_sq": fs(rhs), "holds": not violations},
        "violations": violations,
    }
    return doc, not violations


def graph_chain_doc(G: BlockedBipartiteGraph, algo: str | None, with_half: bool) -> tuple[dict, bool]:
    F = graph_to_family(G)
    algo = algo or default_algo(F)
    f_chain = build_chain(F, algo)
    A_chain = map_chain(f_chain, TO_GRAPH)
    cov = coverage_trace(G, A_chain)
    _, ineq, rhs, violations = _check_chain(F, f_chain.order, algo)
    doc = {
        "schema": io.SCHEMA,
        "kind": "graph-chain",
        "algo": algo,
        "n": G.n,
        "k": G.k,
        "m": G.m,
        "cover_slack": fs(cover_slack(F)),
        "order": list(A_chain.order),
        "steps": [
            {"j": j, "added": v, "coverage": list(c), "gap": max(c) - min(c)}
            for j, (v, c) in enumerate(zip(A_chain.order, cov), 1)
        ],
        "bound": {"inequality": f"(coverage gap / m): {ineq}", "rhs_sq": fs(rhs), "holds": not violations},
        "violations": violations,
    }
    ok = not violations
    if with_half:
        hc = half_cover(G, A_chain, cover_slack(F))
        doc["half_cover"] = {
            "S": sorted(hc.S),
            "j": hc.j,
            "coverage": list(hc.coverage),
            "exceeding_coverage": list(hc.exceeding_coverage),
            "margin_holds": hc.margin_holds,
        }
        ok = ok and bool(hc.margin_holds)
    return doc, ok


def partition_doc(F: InstanceFamily, S, T, kind: str, certified: bool, witness=None) -> tuple[dict, bool]:
    gaps = partition_gaps(F, S, T)
    bound = partition_bound(F, kind)
    doc = {
        "schema": io.SCHEMA,
        "kind": "partition",
        "algo": kind,
        "n": F.n,
        "k": F.k,
        "cover_slack": fs(cover_slack(F)),
        "S": sorted(S),
        "T": sorted(T),
        "gaps": [fs(g) for g in gaps],
        "max_gap": fs(max(gaps)),
        "certified": certified,
    }
    violations = []
    if bound is not None:
        ineq, rhs = bound
        violations = [
            f"hypergraph {i}: gap^2 = {fs(g * g)} > {fs(rhs)} ({ineq})"
            for i, g in enumerate(gaps, 1)
            if g * g > rhs
        ]
        doc["bound"] = {"inequality": ineq, "rhs_sq": fs(rhs), "holds": not violations}
    doc["violations"] = violations
    if witness is not None:
        doc["witness"] = {"S0": sorted(witness[0]), "T0": sorted(witness[1])}
    return doc, not violations


def ordering_doc(V: VectorFamily, order0) -> tuple[dict, bool]:
    norms = prefix_norms(V, order0)
    rhs = V.d * V.max_norm
    violations = [f"prefix {j}: norm {fs(x)} > d*maxnorm = {fs(rhs)}" for j, x in enumerate(norms, 1) if x > rhs]
    doc = {
        "schema": io.SCHEMA,
        "kind": "ordering",
        "d": V.d,
        "order": [i + 1 for i in order0],
        "prefix_norms": [fs(x) for x in norms],
        "max_prefix_norm": fs(max(norms, default=Fraction(0))),
        "bound": {"inequality": "||prefix||_inf <= d*maxnorm", "rhs": fs(rhs), "holds": not violations},
        "violations": violations,
    }
    return doc, not violations


# -- plumbing ---------------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return io.parse_instance(_read_text(path))


def _expect(obj, kinds, what):
    if not isinstance(obj, kinds):
        raise UsageError(f"{what} needs a {' or '.join(k.__name__ for k in kinds)} instance, got {type(obj).__name__}")
    return obj


def _emit(doc, out: str | None):
    text = io.dumps(doc) if not isinstance(doc, str) else doc
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _jsonable(x):
    if isinstance(x, Fraction):
        return fs(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# -- subcommands ------------------------------------------------------------------

def cmd_chain(args) -> int:
    obj = _expect(_load(args.inp), (InstanceFamily, BlockedBipartiteGraph), "chain")
    if isinstance(obj, BlockedBipartiteGraph):
        doc, ok = graph_chain_doc(obj, args.algo, args.half_cover)
    else:
        if args.half_cover:
            raise UsageError("--half-cover needs a graph instance")
        algo = args.algo or default_algo(obj)
        doc, ok = family_chain_doc(obj, build_chain(obj, algo), algo)
    _emit(doc, args.out)
    return 0 if ok else 1


def cmd_partition(args) -> int:
    F = _expect(_load(args.inp), (InstanceFamily,), "partition")
    if args.algo == "tucker":
        res = partition_tucker(F, cap=args.cap, seed=args.seed)
    else:
        res = partition_pairwise(F, cap=args.cap)
    doc, ok = partition_doc(F, res.S, res.T, res.bound_kind, res.certified, res.witness)
    _emit(doc, args.out)
    return 0 if ok else 1


def cmd_order_vectors(args) -> int:
    V = _expect(_load(args.inp), (VectorFamily,), "order-vectors")
    doc, ok = ordering_doc(V, steinitz_order(V))
    _emit(doc, args.out)
    return 0 if ok else 1


def cmd_convert(args) -> int:
    obj = _load(args.inp)
    if args.to == "graph":
        out = family_to_graph(_expect(obj, (InstanceFamily,), "convert --to graph"), scale=args.scale)
    else:
        out = graph_to_family(_expect(obj, (BlockedBipartiteGraph,), "convert --to family"))
    _emit(io.serialize(out), args.out)
    return 0


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"gen --kind {args.kind} needs {', '.join(missing)}")


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "random":
        _need(args, "n", "k", "r", "c")
        _emit(io.serialize(gen_random_family(args.n, args.k, args.r, io.read_rational(args.c, "--c"), args.seed)), args.out)
    elif kind == "mixed":
        _need(args, "n", "k", "sizes")
        sizes = [int(s) for s in args.sizes.split(",")]
        _emit(io.serialize(gen_mixed_family(args.n, args.k, sizes, args.seed)), args.out)
    elif kind == "vectors":
        _need(args, "n", "d")
        _emit(io.serialize(gen_zero_sum_vectors(args.n, args.d, args.seed)), args.out)
    elif kind == "hadamard":
        _need(args, "k")
        _emit(io.serialize(gen_hadamard_vectors(args.k)), args.out)
    elif kind == "reduction":
        _need(args, "inp", "c", "theta")
        V = _expect(_load(args.inp), (VectorFamily,), "gen --kind reduction")
        c = io.read_rational(args.c, "--c")
        theta = io.read_rational(args.theta, "--theta")
        if args.rescale and V.max_norm > 0:
            V = V.scaled(theta * c / V.max_norm)
        _emit(io.serialize(vectors_to_family(V, c, theta)), args.out)
    elif kind == "almost-regular":
        _need(args, "c", "eps", "r", "m")
        try:
            G, report = gen_almost_regular(
                io.read_rational(args.c, "--c"), io.read_rational(args.eps, "--eps"), args.r, args.m,
                args.seed, retry_budget=args.budget, model=args.model,
            )
        except GenerationFailure as exc:
            print(f"generation failed: {exc}", file=sys.stderr)
            if exc.report is not None:
                _emit({"schema": io.SCHEMA, "kind": "almost-regular-report",
                       "report": _jsonable(asdict(exc.report))}, args.out)
            return 1
        _emit({
            "schema": io.SCHEMA,
            "kind": "almost-regular",
            "n": G.n,
            "m": G.m,
            "right_vertices": [{"block": b, "neighbors": list(nb)} for b, nb in G.right_vertices],
            "report": _jsonable(asdict(report)),
        }, args.out)
    return 0


def cmd_oracle(args) -> int:
    obj = _load(args.inp)
    which = args.which
    if which == "ordering":
        V = _expect(obj, (VectorFamily,), "oracle --which ordering")
        value, order = min_ordering_prefix_norm(V, n_cap=args.cap or 10)
        doc = {"schema": io.SCHEMA, "kind": "oracle-ordering", "value": fs(value),
               "value_sq": fs(value * value), "order": [i + 1 for i in order]}
    else:
        F = _expect(obj, (InstanceFamily,), f"oracle --which {which}")
        if which == "chain":
            chain, value = optimal_chain(F, n_cap=args.cap or 22)
            doc = {"schema": io.SCHEMA, "kind": "oracle-chain", "value": fs(value),
                   "value_sq": fs(value * value), "order": list(chain.order)}
        elif which == "partition":
            res, value = optimal_partition(F, n_cap=args.cap or 22)
            doc = {"schema": io.SCHEMA, "kind": "oracle-partition", "value": fs(value),
                   "S": sorted(res.S), "T": sorted(res.T), "gaps": [fs(g) for g in res.gaps]}
        else:
            if not args.subset:
                raise UsageError("oracle --which lemma needs --subset")
            S = [int(s) for s in args.subset.split(",")]
            rep = lemma_check(F, S)
            doc = {"schema": io.SCHEMA, "kind": "oracle-lemma", "S": sorted(S),
                   **_jsonable(asdict(rep))}
            _emit(doc, args.out)
            return 0 if rep.holds and rep.x_holds else 1
    _emit(doc, args.out)
    return 0


def _verify_chain(obj, doc, bound_choice):
    chain_order = doc.get("order")
    if not isinstance(chain_order, list):
        raise FormatError("chain file is missing 'order'")
    n = obj.n
    if sorted(chain_order) != list(range(1, n + 1)):
        return {"holds": False, "violations": [f"order is not a permutation of 1..{n}"]}, False
    if isinstance(obj, BlockedBipartiteGraph):
        F = graph_to_family(obj)
        order = tuple(reversed(chain_order))  # left-side chains run the family order backwards
    else:
        F = obj
        order = tuple(chain_order)
    algo = bound_choice or doc.get("algo")
    if algo not in BUILDERS:
        algo = "greedy"
    steps, ineq, rhs, violations = _check_chain(F, order, algo)
    if isinstance(obj, BlockedBipartiteGraph):
        # direct coverage check on the left-side prefixes
        mask = 0
        for j, v in enumerate(chain_order, 1):
            mask |= 1 << (v - 1)
            cov = obj.coverage(mask)
            gap = Fraction(max(cov) - min(cov), obj.m)
            if gap * gap > rhs:
                violations.append(f"left prefix {j}: (coverage gap/m)^2 = {fs(gap * gap)} > {fs(rhs)}")
    report = {
        "inequality": ineq,
        "rhs_sq": fs(rhs),
        "max_unbalance": fs(max(steps)),
        "holds": not violations,
        "violations": violations,
    }
    return report, not violations


def _verify_partition(F, doc, bound_choice):
    try:
        S = {int(v) for v in doc["S"]}
        T = {int(v) for v in doc["T"]}
    except (KeyError, TypeError, ValueError):
        raise FormatError("partition file needs integer lists 'S' and 'T'") from None
    full = set(range(1, F.n + 1))
    if S & T or S | T != full:
        return {"holds": False, "violations": ["S and T do not partition 1..n"]}, False
    kind = {"tucker": TUCKER, "pairwise": PAIRWISE}.get(bound_choice, bound_choice) or doc.get("algo")
    gaps = partition_gaps(F, S, T)
    bound = partition_bound(F, kind)
    if bound is None:
        return {"inequality": None, "gaps": [fs(g) for g in gaps], "holds": True, "violations": []}, True
    ineq, rhs = bound
    violations = [f"hypergraph {i}: gap^2 = {fs(g * g)} > {fs(rhs)} ({ineq})" for i, g in enumerate(gaps, 1) if g * g > rhs]
    return {"inequality": ineq, "rhs_sq": fs(rhs), "gaps": [fs(g) for g in gaps],
            "holds": not violations, "violations": violations}, not violations


def _verify_ordering(V, doc):
    order = doc.get("order")
    if not isinstance(order, list):
        raise FormatError("ordering file is missing 'order'")
    if sorted(order) != list(range(1, len(V) + 1)):
        return {"holds": False, "violations": [f"order is not a permutation of 1..{len(V)}"]}, False
    sub, ok = ordering_doc(V, [i - 1 for i in order])
    return {"inequality": sub["bound"]["inequality"], "rhs": sub["bound"]["rhs"],
            "max_prefix_norm": sub["max_prefix_norm"], "holds": ok, "violations": sub["violations"]}, ok


def cmd_verify(args) -> int:
    obj = _load(args.inp)
    given = [x for x in (args.chain, args.partition, args.ordering) if x]
    if len(given) != 1:
        raise UsageError("verify needs exactly one of --chain, --partition, --ordering")
    doc = io.loads(_read_text(given[0]))
    if not isinstance(doc, dict):
        raise FormatError("result file must hold a JSON object")
    if args.chain:
        _expect(obj, (InstanceFamily, BlockedBipartiteGraph), "verify --chain")
        report, ok = _verify_chain(obj, doc, args.bound)
        what = "chain"
    elif args.partition:
        _expect(obj, (InstanceFamily,), "verify --partition")
        report, ok = _verify_partition(obj, doc, args.bound)
        what = "partition"
    else:
        _expect(obj, (VectorFamily,), "verify --ordering")
        report, ok = _verify_ordering(obj, doc)
        what = "ordering"
    _emit({"schema": io.SCHEMA, "kind": "verification", "target": what, **report}, args.out)
    for line in report.get("violations", []):
        print(f"VIOLATION: {line}", file=sys.stderr)
    return 0 if ok else 1


BENCH_COLUMNS = ["n", "k", "r", "c", "algo", "max_unbalance_num", "max_unbalance_den",
                 "bound_sq_num", "bound_sq_den", "wall_ms"]


def _bench_threads() -> int:
    raw = os.environ.get("BC_THREADS")
    if raw is None:
        return 1
    try:
        t = int(raw)
    except ValueError:
        raise UsageError(f"BC_THREADS must be a positive integer, got {raw!r}") from None
    if t < 1:
        raise UsageError(f"BC_THREADS must be a positive integer, got {raw!r}")
    return t


def _suite_instances(path: str):
    doc = io.loads(_read_text(path))
    if not isinstance(doc, dict) or not isinstance(doc.get("instances"), list):
        raise FormatError("suite file needs an 'instances' list")
    base = Path(path).parent
    out = []
    for idx, item in enumerate(doc["instances"]):
        if "path" in item:
            F = _load(str(base / item["path"]))
        elif "gen" in item:
            g = item["gen"]
            try:
                F = gen_random_family(g["n"], g["k"], g["r"], io.read_rational(g["c"], "c"), g.get("seed", 0))
            except KeyError as exc:
                raise FormatError(f"suite entry {idx}: gen is missing {exc}") from None
        else:
            raise FormatError(f"suite entry {idx}: needs 'path' or 'gen'")
        if not isinstance(F, InstanceFamily):
            raise FormatError(f"suite entry {idx}: bench runs on family instances")
        algos = item.get("algos") or [default_algo(F)]
        for a in algos:
            if a not in BUILDERS:
                raise FormatError(f"suite entry {idx}: unknown algo {a!r}")
            out.append((idx, F, a))
    return out


def _bench_one(task):
    idx, F, algo = task
    t0 = time.perf_counter()
    chain = build_chain(F, algo)
    ms = (time.perf_counter() - t0) * 1000
    worst = max(_chain_steps(F, chain.order))
    _, rhs = chain_bound(F, algo)
    c = cover_slack(F)
    row = {
        "n": F.n, "k": F.k, "r": F.r, "c": fs(c), "algo": algo,
        "max_unbalance_num": worst.numerator, "max_unbalance_den": worst.denominator,
        "bound_sq_num": rhs.numerator, "bound_sq_den": rhs.denominator,
        "wall_ms": f"{ms:.3f}",
    }
    return (idx, algo), row, worst * worst <= rhs


def cmd_bench(args) -> int:
    tasks = _suite_instances(args.suite)
    threads = _bench_threads()
    if threads == 1:
        results = [_bench_one(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_bench_one, tasks))
    results.sort(key=lambda r: r[0])
    buf = _io.StringIO()
    w = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    w.writeheader()
    for _, row, _ in results:
        w.writerow(row)
    _emit(buf.getvalue(), args.out)
    failed = [row for _, row, ok in results if not ok]
    for row in failed:
        print(f"VIOLATION: {row['algo']} on n={row['n']} k={row['k']} exceeds its bound", file=sys.stderr)
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="balanced-cover", description="Balanced chains and partitions for hypergraph families.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        return sp

    sp = add("chain", cmd_chain, "build a balanced chain and its unbalance trace")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--algo", choices=sorted(BUILDERS), default=None)
    sp.add_argument("--half-cover", action="store_true", help="graph input: report the half-cover prefix")

    sp = add("partition", cmd_partition, "balanced bipartition with a certified gap")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--algo", choices=["tucker", "pairwise"], default="tucker")
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("order-vectors", cmd_order_vectors, "Steinitz ordering of zero-sum vectors")
    sp.add_argument("--in", dest="inp", required=True)

    sp = add("convert", cmd_convert, "convert between families and blocked graphs")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--to", choices=["graph", "family"], required=True)
    sp.add_argument("--scale", type=int, default=1)

    sp = add("gen", cmd_gen, "generate instances")
    sp.add_argument("--kind", required=True,
                    choices=["random", "almost-regular", "hadamard", "reduction", "mixed", "vectors"])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--c")
    sp.add_argument("--eps")
    sp.add_argument("--theta")
    sp.add_argument("--sizes", help="comma-separated edge sizes for --kind mixed")
    sp.add_argument("--budget", type=int, default=200)
    sp.add_argument("--model", choices=["balanced", "independent"], default="balanced")
    sp.add_argument("--in", dest="inp", help="vectors instance for --kind reduction")
    sp.add_argument("--rescale", action="store_true", help="scale vectors to max norm theta*c first")

    sp = add("oracle", cmd_oracle, "exact brute-force references")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--which", choices=["chain", "partition", "ordering", "lemma"], required=True)
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--subset", help="comma-separated vertices for --which lemma")

    sp = add("verify", cmd_verify, "recheck a result file against its instance")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--chain")
    sp.add_argument("--partition")
    sp.add_argument("--ordering")
    sp.add_argument("--bound", choices=sorted(BUILDERS) + ["tucker", "pairwise"], default=None,
                    help="inequality to check (default: the algo named in the file)")

    sp = add("bench", cmd_bench, "run a suite and write a CSV table")
    sp.add_argument("--suite", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "cap", None) is None and args.command == "partition":
            args.cap = 20 if args.algo == "tucker" else 24
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, GenerationFailure) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1
    except BalancedCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
