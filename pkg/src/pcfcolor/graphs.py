"""Simple undirected graphs on dense integer vertices, plus graph6 and edge-list I/O.

Vertices are always 0..n-1.  Adjacency is stored sorted so that every
iteration order in the package is deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.  Build once, then only query."""

    __slots__ = ("n", "_adj", "_adj_sets", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)
        self._adj_sets = tuple(frozenset(nb) for nb in self._adj)
        self._edges = tuple(sorted(seen))
        self._hash: int | None = None

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def vertices(self) -> range:
        return range(self.n)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj), default=0)

    # -- connectivity ----------------------------------------------------

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by smallest member."""
        seen = [False] * self.n
        parts: list[list[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            part = [start]
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        part.append(w)
                        queue.append(w)
            part.sort()
            parts.append(part)
        return parts

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    # -- derived graphs ---------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the map new index -> old index.

        All vertex renumbering in the package goes through here; the kept
        vertices are sorted, so new index order matches old index order.
        """
        kept = sorted(set(vertices))
        index_of = {old: new for new, old in enumerate(kept)}
        for old in kept:
            if not (0 <= old < self.n):
                raise ValueError(f"vertex {old} out of range")
        sub_edges = [
            (index_of[u], index_of[v])
            for u, v in self._edges
            if u in index_of and v in index_of
        ]
        return Graph(len(kept), sub_edges), tuple(kept)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- graph6 format ---------------------------------------------------------
#
# Standard 6-bit encoding: header char(s) for n, then the upper triangle of
# the adjacency matrix in column-major order (bit (u,v) for u<v ordered by
# v, then u), packed into 6-bit chunks, each chunk + 63 as a byte.

_G6_MAX_SHORT = 62
_G6_MAX_LONG = 258047


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= _G6_MAX_SHORT:
        head = chr(n + 63)
    elif n <= _G6_MAX_LONG:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError(f"graph6 writer supports n <= {_G6_MAX_LONG}, got {n}")
    bits: list[int] = []
    for v in range(1, n):
        row = g.neighbor_set(v)
        for u in range(v):
            bits.append(1 if u in row else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not (0 <= v <= 63):
            raise ValueError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] == 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 header")
        if vals[1] == 63:
            raise ValueError("graph6 strings for n > 258047 are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)}, expected {need} for n={n}")
    bits: list[int] = []
    for v in body:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 string")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


# -- plain edge-list format --------------------------------------------------
#
# First line "n m", then one "u v" line per edge.


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty edge list")
    if len(rows[0]) != 2:
        raise ValueError("first line must be 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError as exc:
        raise ValueError("first line must be 'n m'") from exc
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"malformed edge line {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError as exc:
            raise ValueError(f"malformed edge line {' '.join(row)!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)


def cycle_graph(length: int) -> Graph:
    """Cycle 0-1-...-(length-1)-0."""
    if length < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
