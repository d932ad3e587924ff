"""Core graph type, graph6 / edge-list IO, structural predicates, and
seeded random generators.

Vertices are dense integer indices 0..n-1. A Graph is immutable after
construction and safe to share between concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterable, Iterator, Sequence


class Graph6ParseError(ValueError):
    """Malformed graph6 input. `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GenerationError(RuntimeError):
    """A random generator exhausted its retry budget."""


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency is stored per vertex as a sorted tuple plus a frozenset for
    O(1) membership. No self-loops; duplicate edges collapse.
    """

    __slots__ = ("n", "_adj", "_nbr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) is not allowed")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self._nbr = tuple(frozenset(s) for s in sets)
        self._adj = tuple(tuple(sorted(s)) for s in sets)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in increasing order."""
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def closed_neighborhood(self, vs: Iterable[int]) -> frozenset[int]:
        """N[vs]: the given vertices together with all their neighbors."""
        out: set[int] = set()
        for v in vs:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} outside [0, {self.n})")
            out.add(v)
            out.update(self._nbr[v])
        return frozenset(out)

    def induced_subgraph(self, vs: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by vs, plus the map from new index to parent index.

        The mapping is needed whenever a vertex set found in the subgraph
        (e.g. an isolating set of one component) must be lifted back to
        this graph's labels.
        """
        keep = sorted(set(vs))
        for v in keep:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} outside [0, {self.n})")
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self._adj[u]
            if u < v and v in index
        ]
        return Graph(len(keep), edges), tuple(keep)

    def remove_vertices(self, vs: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Graph minus the given vertices, with the new-to-old index map."""
        drop = set(vs)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from explicit edges, collapsing duplicates."""
    return Graph(n, edges)


@dataclass(frozen=True)
class StructuralProfile:
    """Degree, connectivity, and cycle data used as algorithm preconditions.

    girth is None for acyclic graphs; regular_degree is None unless all
    degrees coincide.
    """

    min_degree: int
    max_degree: int
    is_connected: bool
    triangle_free: bool
    girth: int | None
    regular_degree: int | None

    def to_json_dict(self) -> dict:
        return {
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "is_connected": self.is_connected,
            "triangle_free": self.triangle_free,
            "girth": "infinite" if self.girth is None else self.girth,
            "regular_degree": self.regular_degree,
        }


def is_connected(G: Graph) -> bool:
    """True for graphs on 0 or 1 vertices and all connected larger graphs."""
    if G.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in G.neighbors(u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == G.n


def _has_triangle(G: Graph) -> bool:
    for u, v in G.edges():
        if G.neighbor_set(u) & G.neighbor_set(v):
            return True
    return False


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or None if the graph is acyclic.

    One BFS per root; the minimum over roots of the first non-tree edge
    closure is exact for unweighted graphs.
    """
    best: int | None = None
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and 2 * dist[u] >= best:
                break
            for v in G.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def structural_profile(G: Graph) -> StructuralProfile:
    """Compute all structural predicates exactly."""
    degrees = [G.degree(v) for v in range(G.n)]
    mind = min(degrees, default=0)
    maxd = max(degrees, default=0)
    return StructuralProfile(
        min_degree=mind,
        max_degree=maxd,
        is_connected=is_connected(G),
        triangle_free=not _has_triangle(G),
        girth=girth(G),
        regular_degree=mind if mind == maxd else None,
    )


# ---------------------------------------------------------------------------
# graph6 (bit-exact per the standard McKay encoding)

_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    raise ValueError(f"graph6 emitter supports n <= 258047, got {n}")


def emit_graph6(G: Graph) -> str:
    """Encode as a graph6 string (no header, no trailing newline)."""
    out = [_encode_size(G.n)]
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        for i in range(j):
            acc = (acc << 1) | (1 if G.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; tolerates the optional format header and
    surrounding whitespace. Round-trips with emit_graph6.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 input", 0)
    for i, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise Graph6ParseError(f"invalid graph6 byte {ord(ch)}", i)
    if s[0] != chr(126):
        n = ord(s[0]) - 63
        body_at = 1
    elif len(s) >= 2 and s[1] == chr(126):
        raise Graph6ParseError("graph6 sizes above 258047 are not supported", 0)
    else:
        if len(s) < 4:
            raise Graph6ParseError("truncated multi-byte size field", len(s))
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body_at = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - body_at < nbytes:
        raise Graph6ParseError(
            f"body too short: need {nbytes} bytes for n={n}", len(s)
        )
    if len(s) - body_at > nbytes:
        raise Graph6ParseError("trailing bytes after graph body", body_at + nbytes)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[body_at + bit // 6]) - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    # padding bits in the final byte must be zero
    if nbits % 6:
        tail = ord(s[body_at + nbytes - 1]) - 63
        if tail & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6ParseError("nonzero padding bits", body_at + nbytes - 1)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format: header "n m", then one "u v" line per edge

def emit_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: header line "n m", then m "u v" lines."""
    rows = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"expected integer header 'n m', got {rows[0]!r}") from None
    if len(rows) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(rows) - 1} lines follow")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected edge line 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# seeded generators

_RETRY_BUDGET = 5000


def random_regular_graph(n: int, r: int, seed: int) -> Graph:
    """Simple r-regular graph via the pairing model with whole-draw rejection.

    Deterministic per seed. Raises ValueError when n*r is odd or r >= n,
    GenerationError when the retry budget runs out.
    """
    if r >= n:
        raise ValueError(f"degree {r} needs at least {r + 1} vertices, got {n}")
    if (n * r) % 2:
        raise ValueError(f"n*r must be even, got n={n}, r={r}")
    rng = Random(seed)
    stubs = [v for v in range(n) for _ in range(r)]
    for _ in range(_RETRY_BUDGET):
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(n, edges)
    raise GenerationError(
        f"no simple {r}-regular pairing on {n} vertices after {_RETRY_BUDGET} draws"
    )


def random_min_degree_graph(n: int, delta: int, seed: int) -> Graph:
    """Random simple graph with minimum degree >= delta, deterministic per seed.

    Starts from one pairing-model draw (collisions skipped), then adds
    uniformly random edges at deficient vertices until the degree floor
    holds. Instances feed property tests, so simplicity beats
    distributional purity here.
    """
    if delta >= n:
        raise ValueError(f"minimum degree {delta} needs more than {n} vertices")
    rng = Random(seed)
    stubs = [v for v in range(n) for _ in range(delta)]
    rng.shuffle(stubs)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(0, len(stubs) - 1, 2):
        u, v = stubs[i], stubs[i + 1]
        if u != v and v not in adj[u]:
            adj[u].add(v)
            adj[v].add(u)
    budget = _RETRY_BUDGET * max(n, 1)
    for v in range(n):
        while len(adj[v]) < delta:
            budget -= 1
            if budget < 0:
                raise GenerationError("edge-repair retry budget exhausted")
            u = rng.randrange(n)
            if u != v and u not in adj[v]:
                adj[v].add(u)
                adj[u].add(v)
    return Graph(n, ((u, v) for u in range(n) for v in adj[u] if u < v))


def random_bipartite_min_degree_graph(n: int, delta: int, seed: int) -> Graph:
    """Random bipartite (hence triangle-free) graph with min degree >= delta.

    Sides are 0..ceil(n/2)-1 and the rest. Each left vertex draws delta
    distinct right neighbors, then deficient right vertices repair
    themselves the same way.
    """
    left = (n + 1) // 2
    right = n - left
    if delta > min(left, right):
        raise ValueError(
            f"min degree {delta} impossible with sides {left}/{right}"
        )
    rng = Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]

    def add_random_neighbors(v: int, lo: int, hi: int) -> None:
        budget = _RETRY_BUDGET
        while len(adj[v]) < delta:
            budget -= 1
            if budget < 0:
                raise GenerationError("bipartite repair budget exhausted")
            u = rng.randrange(lo, hi)
            if u not in adj[v]:
                adj[v].add(u)
                adj[u].add(v)

    for v in range(left):
        add_random_neighbors(v, left, n)
    for v in range(left, n):
        add_random_neighbors(v, 0, left)
    return Graph(n, ((u, v) for u in range(n) for v in adj[u] if u < v))


# convenience constructors used throughout the tests and families

def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
