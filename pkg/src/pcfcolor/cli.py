"""Command line front end.

Subcommands: color, verify, gen, check, refute.  Exactly one JSON document
goes to stdout; progress notes go to stderr.  Exit codes: 0 for a
satisfiable result or a passing suite, 1 for unsat/obstruction/violations
or a failing suite, 2 for input errors, 3 when a search budget ran out.

Graphs are read from a file path or "-" (stdin), in either of two formats,
detected from the first line: an edge list ("n m" header then one "u v"
pair per line) or graph6.  Lists and colorings are JSON documents of the
shape {"lists": [[...], ...]} and {"colors": [..., null, ...]}.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import families, oracle, solver
from .graphs import Graph, parse_edge_list, parse_graph6, path_graph, write_graph6
from .kernel import ListAssignment, coloring_from_json, degree_plus_k_lists, verify
from .structure import (
    chain_is_good,
    ear_is_good,
    Ear,
    find_good_ear_or_chain,
    outer_embedding,
)

EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def load_graph(path: str) -> Graph:
    text = _read_text(path)
    first = next((line for line in text.splitlines() if line.strip()), "")
    tokens = first.split()
    if len(tokens) == 2:
        try:
            int(tokens[0]), int(tokens[1])
        except ValueError:
            pass
        else:
            return parse_edge_list(text)
    return parse_graph6(first.strip())


def load_lists(path: str) -> ListAssignment:
    return ListAssignment.from_json(json.loads(_read_text(path)))


def _trace_json(trace) -> list:
    return [
        {"case": s.case, "removed": list(s.removed), "colors": {str(v): c for v, c in sorted(s.colors.items())}}
        for s in trace
    ]


def _graph_doc(g: Graph) -> dict:
    return {"n": g.n, "graph6": write_graph6(g), "edges": [list(e) for e in g.edges()]}


# -- color / verify -----------------------------------------------------------


def cmd_color(args) -> tuple[int, dict]:
    g = load_graph(args.graph)
    lists = load_lists(args.lists)
    if args.trim:
        lists = solver.trim_lists(g, lists)
    if args.oracle:
        try:
            res = oracle.solve_exact(g, lists, budget=args.budget)
        except oracle.BudgetExceededError as exc:
            return EXIT_BUDGET, {"status": "budget_exceeded", "nodes": exc.nodes}
        if res.status == oracle.SAT:
            return EXIT_SAT, {
                "status": "sat",
                "engine": "oracle",
                "coloring": res.coloring,
                "nodes": res.nodes,
            }
        return EXIT_UNSAT, {"status": "unsat", "engine": "oracle", "nodes": res.nodes}
    res = solver.solve(g, lists)
    if res.ok:
        doc = {"status": "sat", "engine": "constructive", "coloring": res.coloring}
        if args.trace:
            doc["trace"] = _trace_json(res.trace)
        return EXIT_SAT, doc
    return EXIT_UNSAT, {
        "status": "obstruction",
        "reason": res.obstruction.reason,
        "detail": res.obstruction.detail,
    }


def cmd_verify(args) -> tuple[int, dict]:
    g = load_graph(args.graph)
    lists = load_lists(args.lists) if args.lists else None
    colors = coloring_from_json(json.loads(_read_text(args.coloring)))
    verdict = verify(g, colors, lists)
    if verdict.ok:
        return EXIT_SAT, {"status": "ok", "n": g.n}
    return EXIT_UNSAT, {
        "status": "violations",
        "violations": [
            {"vertex": v.vertex, "reason": v.reason, "other": v.other}
            for v in verdict.violations
        ],
    }


# -- gen ----------------------------------------------------------------------


def _instance_doc(inst: families.NamedInstance) -> dict:
    doc = {"status": "ok", "name": inst.name, "expected": inst.expected}
    doc.update(_graph_doc(inst.graph))
    doc["lists"] = inst.lists.to_json()["lists"] if inst.lists else None
    return doc


def cmd_gen(args) -> tuple[int, dict]:
    if args.family == "cycle":
        g = families.cycle(args.length)
        if args.length == 5 and args.hard_lists:
            return EXIT_SAT, _instance_doc(families.c5_uniform())
        doc = {"status": "ok", "name": f"cycle-{args.length}"}
        doc.update(_graph_doc(g))
        return EXIT_SAT, doc
    if args.family == "theta":
        a, b, c = args.lengths
        if args.hard_lists:
            if a != 1:
                raise ValueError("hard lists require the length-1 path first")
            return EXIT_SAT, _instance_doc(families.theta_hard_lists(b, c))
        doc = {"status": "ok", "name": f"theta-{a}-{b}-{c}"}
        doc.update(_graph_doc(families.theta(a, b, c)))
        return EXIT_SAT, doc
    if args.family == "gadget":
        host, v0 = _gadget_host(args.host, args.v0)
        return EXIT_SAT, _instance_doc(families.degree_plus_one_gadget(host, v0))
    if args.family == "corpus":
        graphs = families.enumerate_connected_outerplanar(args.n)
        return EXIT_SAT, {
            "status": "ok",
            "n": args.n,
            "count": len(graphs),
            "graphs": [write_graph6(g) for g in graphs],
        }
    if args.family == "random":
        g = families.random_outerplanar(args.n, args.seed)
        doc = {"status": "ok", "name": f"random-{args.n}", "seed": args.seed}
        doc.update(_graph_doc(g))
        return EXIT_SAT, doc
    raise ValueError(f"unknown family {args.family}")


def _gadget_host(name: str, v0: "int | None") -> tuple[Graph, int]:
    if name == "k2":
        return Graph(2, [(0, 1)]), 0 if v0 is None else v0
    if name == "p3":
        return path_graph(3), 1 if v0 is None else v0
    raise ValueError(f"unknown gadget host {name}")


# -- check --------------------------------------------------------------------


def _trial_rng(seed: int, *salt: int) -> random.Random:
    mixed = seed
    for s in salt:
        mixed = mixed * 1_000_003 + s + 1
    return random.Random(mixed)


def _check_c5(args, failures: list) -> dict:
    inst = families.c5_uniform()
    g = inst.graph
    res = solver.solve(g, inst.lists)
    if res.ok or res.obstruction.reason != solver.REASON_C5_UNIFORM:
        failures.append("uniform 5-cycle was not reported as the obstruction")
    if oracle.solve_exact(g, inst.lists, budget=args.budget).status != oracle.UNSAT:
        failures.append("oracle found a coloring of the uniform 5-cycle")
    done = 0
    for t in range(args.trials):
        rng = _trial_rng(args.seed, t)
        while True:
            lists = [frozenset(rng.sample(range(1, 7), 4)) for _ in range(5)]
            if any(l != lists[0] for l in lists):
                break
        la = ListAssignment(lists)
        res = solver.solve(g, la)
        if not res.ok:
            failures.append(f"trial {t}: constructive refused non-uniform lists {la}")
            continue
        if oracle.solve_exact(g, la, budget=args.budget).status != oracle.SAT:
            failures.append(f"trial {t}: oracle disagrees on non-uniform lists")
        done += 1
    return {"uniform": 1, "non_uniform_trials": done}


def _check_theta(args, failures: list) -> dict:
    counts = {}
    for l1, l2 in ((4, 4), (4, 7), (7, 7)):
        inst = families.theta_hard_lists(l1, l2)
        _log(f"check theta: {inst.name} ({inst.graph.n} vertices)")
        res = oracle.solve_exact(inst.graph, inst.lists, budget=args.budget)
        if res.status != oracle.UNSAT:
            failures.append(f"{inst.name}: oracle found a coloring, expected none")
        con = solver.solve(inst.graph, inst.lists)
        if con.ok or con.obstruction.reason != solver.REASON_LIST_TOO_SMALL:
            failures.append(f"{inst.name}: degree+1 lists not flagged as too small")
        counts[inst.name] = res.nodes
    return counts


def _check_gadget(args, failures: list) -> dict:
    counts = {}
    for host_name in ("k2", "p3"):
        host, v0 = _gadget_host(host_name, None)
        inst = families.degree_plus_one_gadget(host, v0)
        _log(f"check gadget: {inst.name} ({inst.graph.n} vertices)")
        res = oracle.solve_exact(inst.graph, inst.lists, budget=args.budget)
        if res.status != oracle.UNSAT:
            failures.append(f"{inst.name}: oracle found a coloring, expected none")
        counts[inst.name] = res.nodes
    return counts


def _check_corpus(args, failures: list) -> dict:
    solved = 0
    oracle_checked = 0
    for n in range(2, args.max_n + 1):
        graphs = families.enumerate_connected_outerplanar(n)
        _log(f"check corpus: n={n}, {len(graphs)} graphs x {args.trials} list samples")
        for gi, g in enumerate(graphs):
            universe = range(1, 2 * g.max_degree() + 5)
            for t in range(args.trials):
                rng = _trial_rng(args.seed, n, gi, t)
                lists = degree_plus_k_lists(g, 2, universe, rng)
                res = solver.solve(g, lists)
                if res.ok:
                    if not verify(g, res.coloring, lists).ok:
                        failures.append(f"n={n} graph {gi} trial {t}: invalid coloring")
                    solved += 1
                elif res.obstruction.reason == solver.REASON_C5_UNIFORM:
                    if not (g.n == 5 and all(lists[v] == lists[0] for v in range(5))):
                        failures.append(f"n={n} graph {gi} trial {t}: bogus obstruction")
                else:
                    failures.append(
                        f"n={n} graph {gi} trial {t}: unexpected {res.obstruction.reason}"
                    )
                if n <= args.oracle_max_n:
                    exact = oracle.solve_exact(g, lists, budget=args.budget)
                    want = oracle.SAT if res.ok else oracle.UNSAT
                    if exact.status != want:
                        failures.append(f"n={n} graph {gi} trial {t}: engines disagree")
                    oracle_checked += 1
    return {"solved": solved, "oracle_checked": oracle_checked}


def _check_paths(args, failures: list) -> dict:
    done = 0
    for s in range(3, 8):
        sizes = [2, 3] + [4] * (s - 3) + [3, 2]
        for t in range(args.trials):
            rng = _trial_rng(args.seed, s, t)
            lists = [frozenset(rng.sample(range(1, 9), k)) for k in sizes]
            try:
                solver.color_constrained_path(lists)
            except solver.SolverInternalError as exc:
                failures.append(f"s={s} trial {t}: {exc}")
            done += 1
    return {"trials": done}


def _check_ears(args, failures: list) -> dict:
    checked = 0
    for n in range(4, args.max_n + 1):
        graphs = [
            g
            for g in families.enumerate_two_connected_outerplanar(n)
            if g.m > g.n
        ]
        _log(f"check ears: n={n}, {len(graphs)} non-cycle blocks")
        for gi, g in enumerate(graphs):
            emb = outer_embedding(g)
            if emb is None:
                failures.append(f"n={n} graph {gi}: embedding failed")
                continue
            for x in range(n):
                try:
                    found = find_good_ear_or_chain(g, emb, x)
                except Exception as exc:
                    failures.append(f"n={n} graph {gi} x={x}: {exc}")
                    continue
                good = (
                    ear_is_good(g, found, x)
                    if isinstance(found, Ear)
                    else chain_is_good(g, found, x)
                )
                if not good:
                    failures.append(f"n={n} graph {gi} x={x}: structure not good")
                checked += 1
    return {"checked": checked}


def cmd_check(args) -> tuple[int, dict]:
    needs_seed = args.suite in ("c5", "corpus", "paths")
    if needs_seed and args.seed is None:
        raise ValueError(f"suite {args.suite} is randomized; pass --seed")
    if args.bound is not None:
        args.max_n = args.bound
    failures: list[str] = []
    runner = {
        "c5": _check_c5,
        "theta": _check_theta,
        "gadget": _check_gadget,
        "corpus": _check_corpus,
        "paths": _check_paths,
        "ears": _check_ears,
    }[args.suite]
    try:
        counts = runner(args, failures)
    except oracle.BudgetExceededError as exc:
        return EXIT_BUDGET, {
            "status": "budget_exceeded",
            "suite": args.suite,
            "nodes": exc.nodes,
        }
    doc = {
        "status": "pass" if not failures else "fail",
        "suite": args.suite,
        "counts": counts,
        "failures": failures[:50],
    }
    if args.seed is not None:
        doc["seed"] = args.seed
    return (EXIT_SAT if not failures else EXIT_UNSAT), doc


# -- refute -------------------------------------------------------------------


def cmd_refute(args) -> tuple[int, dict]:
    g = load_graph(args.graph)
    res = oracle.refute_choosability(
        g, args.k, universe_bound=args.universe, budget=args.budget
    )
    doc = {
        "status": res.status,
        "k": args.k,
        "assignments_checked": res.assignments_checked,
        "nodes": res.nodes,
        "witness": res.witness.to_json() if res.witness else None,
    }
    code = EXIT_BUDGET if res.status == oracle.INCONCLUSIVE else EXIT_SAT
    return code, doc


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pcfcolor",
        description="Proper conflict-free list coloring of outerplanar graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="color a graph from lists")
    c.add_argument("graph", help="graph file (edge list or graph6), or - for stdin")
    c.add_argument("--lists", required=True, help='JSON file {"lists": [[...], ...]}')
    c.add_argument("--trim", action="store_true", help="cut lists to degree+2 smallest first")
    c.add_argument("--trace", action="store_true", help="include the case trace")
    c.add_argument("--oracle", action="store_true", help="use the exhaustive oracle")
    c.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="verify a coloring certificate")
    v.add_argument("graph")
    v.add_argument("--lists", help="optional JSON lists to check membership")
    v.add_argument("--coloring", required=True, help='JSON file {"colors": [...]}')
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="generate graphs and instances")
    gsub = g.add_subparsers(dest="family", required=True)
    gc = gsub.add_parser("cycle")
    gc.add_argument("length", type=int)
    gc.add_argument("--hard-lists", action="store_true", help="uniform 4-lists (length 5)")
    gt = gsub.add_parser("theta")
    gt.add_argument("lengths", type=int, nargs=3, metavar="LEN")
    gt.add_argument("--hard-lists", action="store_true", help="degree+1 lists, unsat")
    gg = gsub.add_parser("gadget")
    gg.add_argument("--host", choices=("k2", "p3"), default="k2")
    gg.add_argument("--v0", type=int, default=None)
    gk = gsub.add_parser("corpus")
    gk.add_argument("n", type=int)
    gr = gsub.add_parser("random")
    gr.add_argument("n", type=int)
    gr.add_argument("--seed", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    k = sub.add_parser("check", help="run a self-check suite")
    k.add_argument("suite", choices=("c5", "theta", "gadget", "corpus", "paths", "ears"))
    k.add_argument("bound", type=int, nargs="?", default=None, help="max n (corpus, ears)")
    k.add_argument("--trials", type=int, default=50)
    k.add_argument("--seed", type=int, default=None)
    k.add_argument("--max-n", type=int, default=7)
    k.add_argument("--oracle-max-n", type=int, default=6)
    k.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    k.set_defaults(func=cmd_check)

    r = sub.add_parser("refute", help="search for a non-colorable degree+k assignment")
    r.add_argument("graph")
    r.add_argument("--k", type=int, required=True, choices=(0, 1, 2))
    r.add_argument("--universe", type=int, default=None, help="cap on distinct colors")
    r.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    r.set_defaults(func=cmd_refute)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, doc = args.func(args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(json.dumps({"status": "error", "message": str(exc)}))
        return EXIT_INPUT
    print(json.dumps(doc, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
