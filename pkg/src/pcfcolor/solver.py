"""Constructive proper conflict-free coloring of outerplanar graphs.

Every connected outerplanar graph except one obstruction family admits a
proper coloring from lists of size degree+2 in which each non-isolated
vertex sees some color exactly once in its neighborhood.  `solve` builds
such a coloring by peeling an end block and handling it by case: a pendant
edge, a whole or attached cycle, a good ear, a long ear, or an ear chain.
The only true obstruction among connected outerplanar inputs is the
5-cycle whose five lists are one identical 4-set.

Colors are chosen by minimum value at every free choice, so the output is
deterministic.  A `SolveResult` carries either a verified coloring or an
`Obstruction`, plus a trace of case steps that replays to the coloring.

`color_cycle`, `color_constrained_path` and `extend_ear` are the reusable
pieces of the induction and are exposed for direct use; each enforces its
own list-size preconditions.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .graphs import Graph, cycle_graph, path_graph
from .kernel import Coloring, ListAssignment, verify
from .structure import (
    KIND_CYCLE,
    KIND_EAR_CHAIN,
    KIND_GOOD_EAR,
    KIND_K2,
    KIND_LONG_EAR,
    classify_end_block,
    is_outerplanar,
)

REASON_C5_UNIFORM = "IsC5Uniform"
REASON_NOT_OUTERPLANAR = "NotOuterplanar"
REASON_LIST_TOO_SMALL = "ListTooSmall"
REASON_DISCONNECTED = "Disconnected"


@dataclass(frozen=True)
class Obstruction:
    reason: str
    detail: str = ""


@dataclass(frozen=True)
class TraceStep:
    """One inductive step: which case fired, which vertices it removed from
    the remaining graph, and the colors it assigned (host-graph ids)."""

    case: str
    removed: tuple[int, ...]
    colors: dict[int, int]


@dataclass(frozen=True)
class SolveResult:
    coloring: "Coloring | None"
    obstruction: "Obstruction | None"
    trace: tuple[TraceStep, ...]

    @property
    def ok(self) -> bool:
        return self.coloring is not None


class SolverInternalError(Exception):
    """A case invariant failed; indicates a bug, never a legal-input outcome."""

    def __init__(self, message: str, trace: tuple = ()):
        super().__init__(message)
        self.trace = tuple(trace)


def trace_to_json_lines(trace) -> str:
    lines = [
        json.dumps(
            {
                "case": step.case,
                "removed": list(step.removed),
                "colors": {str(v): c for v, c in sorted(step.colors.items())},
            },
            sort_keys=True,
        )
        for step in trace
    ]
    return "".join(line + "\n" for line in lines)


def trace_from_json_lines(text: str) -> tuple[TraceStep, ...]:
    steps = []
    for line in text.splitlines():
        if not line.strip():
            continue
        doc = json.loads(line)
        steps.append(
            TraceStep(
                doc["case"],
                tuple(doc["removed"]),
                {int(v): c for v, c in doc["colors"].items()},
            )
        )
    return tuple(steps)


def replay_trace(n: int, trace) -> Coloring:
    """Union of the per-step assignments; each vertex must appear once."""
    out: Coloring = [None] * n
    for step in trace:
        for v, c in step.colors.items():
            if out[v] is not None:
                raise ValueError(f"trace colors vertex {v} twice")
            out[v] = c
    return out


def trim_lists(g: Graph, lists, k: int = 2) -> ListAssignment:
    """Cut each vertex list to its degree+k smallest colors.

    Optional preprocessing: the solver never needs it, and it can lose
    solutions at the margin.  In particular a colorable 5-cycle whose lists
    share the same 4 smallest colors becomes the uniform obstruction after
    trimming.
    """
    la = lists if isinstance(lists, ListAssignment) else ListAssignment(lists)
    if len(la) != g.n:
        raise ValueError(f"graph has {g.n} vertices but {len(la)} lists given")
    return ListAssignment(
        [frozenset(sorted(la[v])[: g.degree(v) + k]) for v in range(g.n)]
    )


# -- reusable coloring lemmas --------------------------------------------------


def _min_excluding(pool, forbidden, what: str, trace=()) -> int:
    avail = [c for c in pool if c not in forbidden]
    if not avail:
        raise SolverInternalError(f"no color available for {what}", trace)
    return min(avail)


def color_cycle(lists) -> "list[int] | Obstruction":
    """Conflict-free coloring of a cycle, lists indexed along the cycle.

    Every list must have at least 4 colors.  Returns an Obstruction exactly
    when the cycle has length 5 and all five lists are the same 4-set; that
    single family admits no such coloring.
    """
    ls = [frozenset(x) for x in lists]
    ell = len(ls)
    if ell < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if any(len(x) < 4 for x in ls):
        raise ValueError("cycle coloring needs at least degree+2 = 4 colors per vertex")

    phi: list[int]
    if ell <= 4:
        phi = []
        for x in ls:  # rainbow: at most 3 prior colors against 4 choices
            phi.append(_min_excluding(x, set(phi), "cycle vertex"))
    elif all(x == ls[0] for x in ls):
        pal = sorted(ls[0])
        if ell == 5:
            if len(pal) == 4:
                return Obstruction(
                    REASON_C5_UNIFORM,
                    "5-cycle with all lists equal to one 4-element set",
                )
            phi = pal[:5]
        else:
            a, b, c, d = pal[:4]
            rem = ell % 3
            if rem == 0:
                phi = [a, b, c] * (ell // 3)
            elif rem == 1:
                phi = [a, b, c] * ((ell - 4) // 3) + [a, b, c, d]
            else:  # ell >= 8
                phi = [a, b, c] * ((ell - 8) // 3) + [a, b, c, d, a, b, c, d]
    else:
        # some neighboring pair has a list difference; rotate so it spans
        # the wrap-around edge, then color the path between greedily
        found = None
        for i in range(ell):
            for step in (1, -1):
                if ls[i] - ls[(i + step) % ell]:
                    found = (i, step)
                    break
            if found:
                break
        if found is None:
            raise SolverInternalError("unequal lists with no adjacent difference")
        i0, step = found
        order = [(i0 - step * t) % ell for t in range(ell)]
        lw = [ls[v] for v in order]
        alpha = min(lw[0] - lw[ell - 1])
        w = [0] * ell
        w[0] = alpha
        w[1] = _min_excluding(lw[1], {alpha}, "cycle vertex")
        for t in range(2, ell - 2):
            w[t] = _min_excluding(lw[t], {w[t - 2], w[t - 1]}, "cycle vertex")
        w[ell - 2] = _min_excluding(
            lw[ell - 2], {w[ell - 4], w[ell - 3], alpha}, "cycle vertex"
        )
        w[ell - 1] = _min_excluding(
            lw[ell - 1], {w[ell - 3], w[ell - 2], w[1]}, "cycle vertex"
        )
        phi = [0] * ell
        for t, v in enumerate(order):
            phi[v] = w[t]

    verdict = verify(cycle_graph(ell), list(phi), ListAssignment(ls))
    if not verdict.ok:
        raise SolverInternalError("cycle coloring failed verification")
    return list(phi)


def color_constrained_path(lists) -> list[int]:
    """Conflict-free coloring of a path under tight end constraints.

    For a path p_0..p_s with s >= 3 the list sizes must be at least
    2, 3, 4, ..., 4, 3, 2.  The coloring is proper and every vertex keeps a
    color that is unique in its path neighborhood, so it composes with an
    already-colored host graph whose excluded colors were stripped from the
    end lists beforehand.
    """
    ls = [frozenset(x) for x in lists]
    s = len(ls) - 1
    if s < 3:
        raise ValueError("the path must have at least 4 vertices")
    need = [2] + [3] + [4] * (s - 3) + [3] + [2]
    for i, (x, k) in enumerate(zip(ls, need)):
        if len(x) < k:
            raise ValueError(f"path vertex {i} needs {k} colors, has {len(x)}")

    if s == 3:
        phi = _path_base(ls)
    else:
        # fix the far end to its smallest color, strip it from the two
        # vertices adjacent or at distance 2, and recurse on the prefix
        alpha = min(ls[s])
        inner = list(ls[:s])
        inner[s - 2] = inner[s - 2] - {alpha}
        inner[s - 1] = inner[s - 1] - {alpha}
        phi = color_constrained_path(inner) + [alpha]

    verdict = verify(path_graph(s + 1), list(phi), ListAssignment(ls))
    if not verdict.ok:
        raise SolverInternalError("path coloring failed verification")
    return phi


def _path_base(ls) -> list[int]:
    # 4 vertices; work inside trimmed lists of sizes 2, 3, 3, 2
    a2 = frozenset(sorted(ls[0])[:2])
    b3 = frozenset(sorted(ls[1])[:3])
    c3 = frozenset(sorted(ls[2])[:3])
    d2 = frozenset(sorted(ls[3])[:2])
    common = a2 & d2
    if common:
        a = min(common)
        p1 = _min_excluding(b3, {a}, "path vertex 1")
        p2 = _min_excluding(c3, {a, p1}, "path vertex 2")
        return [a, p1, p2, a]
    # ends disjoint: one end color can dodge the 3-set of its neighbor
    beta = _min_excluding(a2 | d2, b3, "path end")
    if beta in a2:
        p3 = min(d2)
        p2 = _min_excluding(c3, {beta, p3}, "path vertex 2")
        p1 = _min_excluding(b3, {beta, p2, p3}, "path vertex 1")
        return [beta, p1, p2, p3]
    p0 = min(a2)
    p2 = _min_excluding(c3, {beta, p0}, "path vertex 2")
    p1 = _min_excluding(b3, {p0, p2}, "path vertex 1")
    return [p0, p1, p2, beta]


def extend_ear(host: Graph, colors, ear_vertices, lists) -> Coloring:
    """Color the interior of an ear of `host` on top of a partial coloring.

    `ear_vertices` lists the ear cycle u_1..u_r in path order; u_1 and u_r
    must already be colored, the interior not.  u_1 must have a colored
    neighbor, and either some color appears exactly once around u_1 or all
    its colored neighbors agree.  The extension is proper and leaves every
    vertex of the ear except u_r with a unique neighborhood color; interior
    lists need at least 4 colors.
    """
    seq = list(ear_vertices)
    if len(seq) < 3:
        raise ValueError("an ear has at least 3 vertices")
    out = list(colors)
    ls = lists.lists if isinstance(lists, ListAssignment) else tuple(frozenset(x) for x in lists)
    _extend_ear(host, tuple(range(host.n)), out, ls, seq, None, "EarExtension", ())
    return out


def _unique_nb_colors(sub: Graph, ids, colors, v: int) -> set[int]:
    seen: Counter = Counter()
    for w in sub.neighbors(v):
        c = colors[ids[w]]
        if c is not None:
            seen[c] += 1
    return {c for c, k in seen.items() if k == 1}


def _extend_ear(sub, ids, colors, lists, seq, trace, tag, removed) -> None:
    r = len(seq)
    u1, ur = seq[0], seq[-1]
    c1 = colors[ids[u1]]
    cr = colors[ids[ur]]
    if c1 is None or cr is None:
        raise SolverInternalError("ear root must be colored before extension")
    kept = _unique_nb_colors(sub, ids, colors, u1)
    if kept:
        c2 = min(kept)
    else:
        palette = {
            colors[ids[w]] for w in sub.neighbors(u1) if colors[ids[w]] is not None
        }
        if len(palette) != 1:
            raise SolverInternalError(
                "ear extension needs a unique or unanimous color at the near root"
            )
        c2 = next(iter(palette))
    assigned: dict[int, int] = {}
    for i in range(2, r):  # cycle positions u_2 .. u_{r-1}
        v = seq[i - 1]
        if colors[ids[v]] is not None:
            raise SolverInternalError("ear interior already colored")
        if i == 2:
            forb = {c1, c2}
        else:
            forb = {colors[ids[seq[i - 2]]], colors[ids[seq[i - 3]]]}
        if i >= r - 2:
            forb.add(cr)
        c = _min_excluding(lists[v], forb, f"ear vertex {ids[v]}")
        colors[ids[v]] = c
        assigned[ids[v]] = c
    if trace is not None:
        trace.append(TraceStep(tag, removed, assigned))


# -- the main recursion ---------------------------------------------------------


def solve(g: Graph, lists) -> SolveResult:
    """Conflict-free list coloring of a connected outerplanar graph.

    Inputs that cannot be handled return an `Obstruction` (checked in this
    order): disconnected graph, non-outerplanar graph, some list smaller
    than degree+2, or the 5-cycle with five identical 4-element lists.
    Everything else returns a coloring, verified before it is returned.
    """
    la = lists if isinstance(lists, ListAssignment) else ListAssignment(lists)
    if len(la) != g.n:
        raise ValueError(f"graph has {g.n} vertices but {len(la)} lists given")
    if g.n == 0:
        return SolveResult([], None, ())
    if not g.is_connected():
        return SolveResult(None, Obstruction(REASON_DISCONNECTED, "input graph is disconnected"), ())
    if not is_outerplanar(g):
        return SolveResult(None, Obstruction(REASON_NOT_OUTERPLANAR, "input graph is not outerplanar"), ())
    for v in range(g.n):
        if len(la[v]) < g.degree(v) + 2:
            return SolveResult(
                None,
                Obstruction(
                    REASON_LIST_TOO_SMALL,
                    f"vertex {v} has {len(la[v])} colors for degree {g.degree(v)}",
                ),
                (),
            )
    if g.n == 5 and all(g.degree(v) == 2 for v in range(5)):
        if len(la[0]) == 4 and all(la[v] == la[0] for v in range(5)):
            return SolveResult(
                None,
                Obstruction(
                    REASON_C5_UNIFORM,
                    "5-cycle whose lists are all the same 4-element set",
                ),
                (),
            )

    colors: Coloring = [None] * g.n
    trace: list[TraceStep] = []
    _solve(g, tuple(la[v] for v in range(g.n)), tuple(range(g.n)), colors, trace)
    verdict = verify(g, colors, la)
    if not verdict.ok:
        raise SolverInternalError(
            "constructed coloring fails verification: "
            + "; ".join(v.describe() for v in verdict.violations[:5]),
            tuple(trace),
        )
    return SolveResult(colors, None, tuple(trace))


def _solve(sub: Graph, lists, ids, colors, trace) -> None:
    n = sub.n
    if n <= 3:
        # rainbow within radius 2: trivially proper and conflict-free
        for v in range(n):
            forb = set()
            for w in sub.neighbors(v):
                if colors[ids[w]] is not None:
                    forb.add(colors[ids[w]])
                for z in sub.neighbors(w):
                    if colors[ids[z]] is not None:
                        forb.add(colors[ids[z]])
            colors[ids[v]] = _min_excluding(lists[v], forb, f"vertex {ids[v]}", trace)
        trace.append(
            TraceStep("Trivial", tuple(ids), {ids[v]: colors[ids[v]] for v in range(n)})
        )
        return

    case = classify_end_block(sub)
    if case.kind == KIND_K2:
        _case_pendant(sub, lists, ids, colors, trace, case)
    elif case.kind == KIND_CYCLE:
        _case_cycle(sub, lists, ids, colors, trace, case)
    elif case.kind == KIND_GOOD_EAR:
        _case_good_ear(sub, lists, ids, colors, trace, case)
    elif case.kind == KIND_LONG_EAR:
        _case_long_ear(sub, lists, ids, colors, trace, case)
    elif case.kind == KIND_EAR_CHAIN:
        _case_ear_chain(sub, lists, ids, colors, trace, case)
    else:
        raise SolverInternalError(f"unknown end-block case {case.kind}", tuple(trace))


def _recurse(sub, lists, ids, keep, colors, trace):
    """Solve the kept induced subgraph; returns it with id translation maps."""
    sub2, kept = sub.subgraph(keep)
    ids2 = tuple(ids[w] for w in kept)
    lists2 = tuple(lists[w] for w in kept)
    _solve(sub2, lists2, ids2, colors, trace)
    loc2 = {w: i for i, w in enumerate(kept)}
    return sub2, ids2, loc2


def _min_unique(sub2, ids2, colors, v2, what, trace) -> int:
    kept = _unique_nb_colors(sub2, ids2, colors, v2)
    if not kept:
        raise SolverInternalError(f"no unique neighborhood color at {what}", tuple(trace))
    return min(kept)


def _case_pendant(sub, lists, ids, colors, trace, case) -> None:
    v, x = case.pendant, case.anchor
    keep = [w for w in range(sub.n) if w != v]
    sub2, ids2, loc2 = _recurse(sub, lists, ids, keep, colors, trace)
    alpha = _min_unique(sub2, ids2, colors, loc2[x], f"anchor {ids[x]}", trace)
    c = _min_excluding(lists[v], {colors[ids[x]], alpha}, f"pendant {ids[v]}", trace)
    colors[ids[v]] = c
    trace.append(TraceStep("K2", (ids[v],), {ids[v]: c}))


def _case_cycle(sub, lists, ids, colors, trace, case) -> None:
    order = case.cycle_order
    if len(order) == sub.n:
        res = color_cycle([lists[v] for v in order])
        if isinstance(res, Obstruction):
            # reachable only if the top-level uniform-C5 screen were skipped
            raise SolverInternalError("uniform 5-cycle reached the cycle case", tuple(trace))
        assigned = {}
        for v, c in zip(order, res):
            colors[ids[v]] = c
            assigned[ids[v]] = c
        trace.append(TraceStep("CycleProp", tuple(ids[v] for v in order), assigned))
        return

    x = case.anchor
    body = list(order[1:])  # the cycle minus the anchor, in cycle order
    keep = sorted(set(range(sub.n)) - set(body))
    sub2, ids2, loc2 = _recurse(sub, lists, ids, keep, colors, trace)
    c1 = colors[ids[x]]
    alpha = _min_unique(sub2, ids2, colors, loc2[x], f"anchor {ids[x]}", trace)
    ell = len(order)
    assigned = {}

    def put(v, c):
        colors[ids[v]] = c
        assigned[ids[v]] = c

    if ell == 3:
        p0 = _min_excluding(lists[body[0]], {c1, alpha}, "cycle block", trace)
        put(body[0], p0)
        put(body[1], _min_excluding(lists[body[1]], {c1, alpha, p0}, "cycle block", trace))
        tag = "CycleBlock"
    elif ell == 4:
        p0 = _min_excluding(lists[body[0]], {c1, alpha}, "cycle block", trace)
        p2 = _min_excluding(lists[body[2]], {c1, alpha, p0}, "cycle block", trace)
        p1 = _min_excluding(lists[body[1]], {c1, p0, p2}, "cycle block", trace)
        put(body[0], p0)
        put(body[1], p1)
        put(body[2], p2)
        tag = "CycleBlock"
    else:
        plists = []
        for t, v in enumerate(body):
            cut = lists[v]
            if t in (0, ell - 2):
                cut = cut - {c1, alpha}
            elif t in (1, ell - 3):
                cut = cut - {c1}
            plists.append(cut)
        for v, c in zip(body, color_constrained_path(plists)):
            put(v, c)
        tag = "PathLemma"
    trace.append(TraceStep(tag, tuple(ids[v] for v in body), assigned))


def _case_good_ear(sub, lists, ids, colors, trace, case) -> None:
    ear = case.ear
    keep = sorted(set(range(sub.n)) - set(ear.interior))
    _recurse(sub, lists, ids, keep, colors, trace)
    seq = [ear.root[0], *ear.interior, ear.root[1]]
    _extend_ear(
        sub, ids, colors, lists, seq, trace, "GoodEar",
        tuple(ids[w] for w in ear.interior),
    )


def _case_long_ear(sub, lists, ids, colors, trace, case) -> None:
    ear = case.ear
    seq = [ear.root[0], *ear.interior, ear.root[1]]
    r = len(seq)
    keep = sorted(set(range(sub.n)) - set(ear.interior))
    sub2, ids2, loc2 = _recurse(sub, lists, ids, keep, colors, trace)
    u1, ur = seq[0], seq[-1]
    c1, c2 = colors[ids[u1]], colors[ids[ur]]
    if c1 == c2:
        raise SolverInternalError("long ear root edge colored improperly", tuple(trace))
    alpha = _min_unique(sub2, ids2, colors, loc2[u1], f"root {ids[u1]}", trace)
    beta = _min_unique(sub2, ids2, colors, loc2[ur], f"root {ids[ur]}", trace)

    # positions are 1-based along the ear; interiors work in their 4
    # smallest colors so that the set-difference tests below are decisive
    l4 = {v: frozenset(sorted(lists[v])[:4]) for v in ear.interior}
    assigned: dict[int, int] = {}

    def lof(i):
        return l4[seq[i - 1]]

    def phi(i):
        if i == 1:
            return c1
        if i == r:
            return c2
        return colors[ids[seq[i - 1]]]

    def put(i, c):
        colors[ids[seq[i - 1]]] = c
        assigned[ids[seq[i - 1]]] = c

    near_end = lof(r - 1)
    if len(near_end & {c2, beta}) <= 1:
        tag = "LongEar(sub1)"
        put(2, _min_excluding(lof(2), {c1, alpha}, "long ear", trace))
        for i in range(3, r - 2):
            put(i, _min_excluding(lof(i), {phi(i - 2), phi(i - 1)}, "long ear", trace))
        put(r - 2, _min_excluding(lof(r - 2), {c2, phi(r - 4), phi(r - 3)}, "long ear", trace))
        put(r - 1, _min_excluding(near_end, {c2, beta, phi(r - 3), phi(r - 2)}, "long ear", trace))
    else:
        diff = lof(r - 2) - near_end
        if diff:
            tag = "LongEar(sub2)"
            pivot = min(diff)  # not c2: c2 sits in the last list
        else:
            tag = "LongEar(sub3)"
            if lof(r - 2) != near_end or beta not in lof(r - 2):
                raise SolverInternalError("long ear subcase split broke", tuple(trace))
            pivot = beta
        put(r - 2, pivot)
        # for r = 6 the second vertex is also two steps before the pivot
        # vertex, so it must dodge the pivot color to protect u_3
        u2_forb = {c1, alpha, pivot} if r == 6 else {c1, alpha}
        put(2, _min_excluding(lof(2), u2_forb, "long ear", trace))
        for i in range(3, r - 4):
            put(i, _min_excluding(lof(i), {phi(i - 2), phi(i - 1)}, "long ear", trace))
        for i in (r - 4, r - 3):
            if i < 3:
                continue
            put(i, _min_excluding(lof(i), {pivot, phi(i - 2), phi(i - 1)}, "long ear", trace))
        if tag == "LongEar(sub2)":
            put(r - 1, _min_excluding(near_end, {c2, beta, phi(r - 3), pivot}, "long ear", trace))
        else:
            put(r - 1, _min_excluding(near_end, {c2, beta, phi(r - 3)}, "long ear", trace))
    trace.append(TraceStep(tag, tuple(ids[w] for w in ear.interior), assigned))


def _case_ear_chain(sub, lists, ids, colors, trace, case) -> None:
    chain = case.chain
    spine = chain.spine
    s = len(spine)
    v1, vs = spine[0], spine[-1]
    last = chain.ears[-1]
    rlast = last.size()

    removal = set(spine[1:-1])
    for e in chain.ears:
        removal.update(e.interior)
    keep = sorted(set(range(sub.n)) - removal)

    lists_rec = list(lists)
    gamma = None
    if s == 3 and rlast == 4:
        # reserve a color of the first closing-ear interior so the
        # recursion cannot hand it to either chain endpoint
        u2, u3 = last.interior
        t2 = frozenset(sorted(lists[u2])[:4])
        t3 = frozenset(sorted(lists[u3])[:4])
        gamma = min(t2 - t3) if t2 - t3 else min(t2)
        lists_rec[v1] = lists_rec[v1] - {gamma}
        lists_rec[vs] = lists_rec[vs] - {gamma}

    sub2, ids2, loc2 = _recurse(sub, tuple(lists_rec), ids, keep, colors, trace)
    c1, c2 = colors[ids[v1]], colors[ids[vs]]
    if c1 == c2:
        raise SolverInternalError("ear chain root edge colored improperly", tuple(trace))
    alpha = _min_unique(sub2, ids2, colors, loc2[v1], f"chain end {ids[v1]}", trace)
    beta = _min_unique(sub2, ids2, colors, loc2[vs], f"chain end {ids[vs]}", trace)

    assigned: dict[int, int] = {}

    def put(v, c):
        colors[ids[v]] = c
        assigned[ids[v]] = c

    def extend(t):
        ear = chain.ears[t]
        seq = [spine[t], *ear.interior, spine[t + 1]]
        _extend_ear(sub, ids, colors, lists, seq, trace, "EarExtension", ())

    if s >= 4:
        tag = "EarChain(s>=4)"
        iv = last.interior  # u_2..u_{r-1} of the closing ear, r = rlast

        def uphi(j):
            if j == rlast:
                return c2
            return colors[ids[iv[j - 2]]]

        put(iv[rlast - 3], _min_excluding(lists[iv[rlast - 3]], {c2, beta}, "chain ear", trace))
        for j in range(rlast - 2, 1, -1):
            put(
                iv[j - 2],
                _min_excluding(lists[iv[j - 2]], {c2, uphi(j + 1), uphi(j + 2)}, "chain ear", trace),
            )
        u2c = uphi(2)
        u3c = uphi(3)
        put(
            spine[s - 2],
            _min_excluding(lists[spine[s - 2]], {c2, beta, u2c, u3c}, "chain junction", trace),
        )
        for i in range(2, s - 1):  # junctions v_2..v_{s-2} along the spine
            forb = {colors[ids[spine[i - 2]]]}
            if i == 2:
                forb |= {c1, alpha}
            if i == s - 2:
                forb |= {c2, colors[ids[spine[s - 2]]], u2c}
            put(spine[i - 1], _min_excluding(lists[spine[i - 1]], forb, "chain junction", trace))
        trace.append(TraceStep(tag, tuple(ids[w] for w in sorted(removal)), assigned))
        for t in range(s - 2):
            extend(t)
        return

    v2 = spine[1]
    if rlast == 3:
        u2 = last.interior[0]
        put(u2, _min_excluding(lists[u2], {c1, c2, beta}, "chain ear", trace))
        put(
            v2,
            _min_excluding(
                lists[v2], {c1, c2, alpha, beta, colors[ids[u2]]}, "chain junction", trace
            ),
        )
        trace.append(TraceStep("EarChain(s3H3)", tuple(ids[w] for w in sorted(removal)), assigned))
        extend(0)
    elif rlast == 4:
        u2, u3 = last.interior
        t2 = frozenset(sorted(lists[u2])[:4])
        t3 = frozenset(sorted(lists[u3])[:4])
        if beta == c1:
            p2 = _min_excluding(t2, {c1, c2}, "chain ear", trace)
            p3 = _min_excluding(t3, {c1, c2, p2}, "chain ear", trace)
            put(u2, p2)
            put(u3, p3)
            put(v2, _min_excluding(lists[v2], {c1, c2, alpha, p2, p3}, "chain junction", trace))
        else:
            chosen = None
            for cand in sorted(t2 - {c1, c2}):
                if len(t3 - {c2, beta, cand}) >= 2:
                    chosen = cand
                    break
            if chosen is None:
                raise SolverInternalError("no pivot for the 4-vertex closing ear", tuple(trace))
            put(u2, chosen)
            put(v2, _min_excluding(lists[v2], {c1, c2, alpha, beta, chosen}, "chain junction", trace))
            put(u3, _min_excluding(t3, {c2, beta, chosen, colors[ids[v2]]}, "chain ear", trace))
        trace.append(TraceStep("EarChain(s3H4)", tuple(ids[w] for w in sorted(removal)), assigned))
        extend(0)
    elif rlast == 5:
        u2, u3, u4 = last.interior
        tv2 = frozenset(sorted(lists[v2] - {c1, c2, alpha, beta})[:2])
        tu3 = frozenset(sorted(lists[u3] - {c2})[:3])
        tu4 = frozenset(sorted(lists[u4] - {c2, beta})[:2])
        common = tv2 & tu4
        if common:
            pv2 = pu4 = min(common)
        else:
            outside = _min_excluding(tv2 | tu4, tu3, "chain far pair", trace)
            if outside in tv2:
                pv2, pu4 = outside, min(tu4)
            else:
                pv2, pu4 = min(tv2), outside
        put(v2, pv2)
        put(u4, pu4)
        if len(tu3 - {pv2, pu4}) < 2:
            raise SolverInternalError("middle list lost too many colors", tuple(trace))
        trace.append(TraceStep("EarChain(s3H5)", tuple(ids[w] for w in sorted(removal)), assigned))
        extend(0)
        late: dict[int, int] = {}
        gmid = _min_unique(sub, ids, colors, v2, f"junction {ids[v2]}", trace)
        cu2 = _min_excluding(lists[u2], {pv2, pu4, gmid}, "chain ear", trace)
        colors[ids[u2]] = cu2
        late[ids[u2]] = cu2
        cu3 = _min_excluding(tu3, {pv2, cu2, pu4}, "chain ear", trace)
        colors[ids[u3]] = cu3
        late[ids[u3]] = cu3
        trace.append(TraceStep("EarChain(s3H5)", (), late))
    else:
        raise SolverInternalError(f"closing ear of size {rlast} in chain case", tuple(trace))
