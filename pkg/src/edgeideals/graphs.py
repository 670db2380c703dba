"""Finite simple graphs and the exhaustive combinatorial searches used here.

Vertices are labelled 1..n.  Every search in this module (covers, cycles,
induced matchings, partitions) is exhaustive and exact, guarded by a hard
vertex-count bound (default 16) that raises LimitExceeded instead of
silently degrading.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphFormatError, LimitExceeded

DEFAULT_MAX_VERTICES = 16


class Graph:
    """An undirected simple graph on vertices 1..vertex_count (no loops)."""

    __slots__ = ("vertex_count", "edges", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        n = int(vertex_count)
        if n < 0:
            raise ValueError("negative vertex count")
        norm: list[tuple[int, int]] = []
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 1..{n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            norm.append(key)
        self.vertex_count = n
        self.edges = tuple(sorted(norm))
        adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(s) for v, s in adj.items()}

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, frozenset())

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def is_edgeless(self) -> bool:
        return not self.edges

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, edges={list(self.edges)})"


@dataclass(frozen=True)
class CycleCertificate:
    """A simple cycle given by its vertex sequence (closing edge implied)."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def half_length(self) -> int:
        """n for an odd cycle of length 2n+1."""
        if not self.is_odd:
            raise ValueError("half_length is only defined for odd cycles")
        return (self.length - 1) // 2

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @classmethod
    def check(cls, g: Graph, vertices: Sequence[int]) -> "CycleCertificate":
        vs = tuple(int(v) for v in vertices)
        if len(vs) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if b not in g.neighbors(a):
                raise ValueError(f"cycle edge ({a},{b}) is not an edge of the graph")
        return cls(_canonical_cycle(vs))


def _canonical_cycle(vs: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to start at the minimum vertex, direction with smaller successor."""
    i = vs.index(min(vs))
    rot = vs[i:] + vs[:i]
    fwd = rot
    rev = (rot[0],) + tuple(reversed(rot[1:]))
    return fwd if fwd[1] < rev[1] else rev


def _check_bound(g: Graph, max_vertices: int) -> None:
    if g.vertex_count > max_vertices:
        raise LimitExceeded(
            f"graph has {g.vertex_count} vertices, exhaustive search bound is {max_vertices}"
        )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the given vertices plus the old->new index map.

    New labels are 1..k following the sorted order of the chosen vertices.
    """
    chosen = sorted(set(int(v) for v in vertices))
    for v in chosen:
        if not 1 <= v <= g.vertex_count:
            raise ValueError(f"vertex {v} not in graph")
    old_to_new = {v: i + 1 for i, v in enumerate(chosen)}
    keep = set(chosen)
    edges = [
        (old_to_new[u], old_to_new[v]) for u, v in g.edges if u in keep and v in keep
    ]
    return Graph(len(chosen), edges), old_to_new


def neighborhoods(g: Graph, vertices: Iterable[int]) -> frozenset:
    """Union of open neighborhoods of a vertex set.

    For the vertex set of a cycle this already contains the cycle itself,
    so the open and closed conventions agree there.
    """
    out: set[int] = set()
    for v in vertices:
        out |= g.neighbors(v)
    return frozenset(out)


def closed_neighborhoods(g: Graph, vertices: Iterable[int]) -> frozenset:
    vs = set(int(v) for v in vertices)
    return frozenset(vs | neighborhoods(g, vs))


def _adjacency_masks(g: Graph) -> list[int]:
    """Bit i (0-based) of masks[v] set when vertex i+1 is adjacent to v+1... indexed 0-based."""
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return masks


@dataclass(frozen=True)
class CoverSet:
    """All minimal vertex covers, the cover number, and the edgeless flag."""

    covers: tuple[tuple[int, ...], ...]
    alpha: int
    edgeless: bool


def minimal_vertex_covers(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> CoverSet:
    """Every inclusion-minimal vertex cover, via maximal independent sets.

    An edgeless graph has the single empty cover (flagged).
    """
    _check_bound(g, max_vertices)
    n = g.vertex_count
    if g.is_edgeless():
        return CoverSet(covers=((),), alpha=0, edgeless=True)
    adj = _adjacency_masks(g)
    full = (1 << n) - 1
    mis: list[int] = []

    def bron_kerbosch(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            mis.append(r)
            return
        # maximal cliques of the complement graph; pivot keeps the branching small
        pool = p | x
        pivot = max(_bits(pool), key=lambda v: _popcount(p & ~adj[v] & ~(1 << v)))
        cand = p & (adj[pivot] | (1 << pivot))
        for v in _bits(cand):
            vb = 1 << v
            compat = ~adj[v] & ~vb & full
            bron_kerbosch(r | vb, p & compat, x & compat)
            p &= ~vb
            x |= vb

    bron_kerbosch(0, full, 0)
    covers = sorted(
        set(tuple(i + 1 for i in _bits(full & ~s)) for s in mis),
        key=lambda c: (len(c), c),
    )
    alpha = min(len(c) for c in covers)
    return CoverSet(covers=tuple(covers), alpha=alpha, edgeless=False)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return mask.bit_count()


def induced_matching_number(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[int, tuple[tuple[int, int], ...]]:
    """nu(G) with a witness induced matching, by exhaustive recursion.

    An induced matching is a set of edges whose endpoint set induces exactly
    those edges; equivalently pairwise disjoint edges with no connecting edge.
    """
    _check_bound(g, max_vertices)
    n = g.vertex_count
    adj = _adjacency_masks(g)
    full = (1 << n) - 1
    memo: dict[int, tuple[int, tuple[tuple[int, int], ...]]] = {}

    def best(mask: int) -> tuple[int, tuple[tuple[int, int], ...]]:
        got = memo.get(mask)
        if got is not None:
            return got
        pick = -1
        for v in _bits(mask):
            if adj[v] & mask:
                pick = v
                break
        if pick < 0:
            memo[mask] = (0, ())
            return memo[mask]
        vb = 1 << pick
        size, witness = best(mask & ~vb)
        for u in _bits(adj[pick] & mask):
            rest = mask & ~(adj[pick] | adj[u] | vb | (1 << u))
            s2, w2 = best(rest)
            if s2 + 1 > size:
                size = s2 + 1
                witness = ((pick + 1, u + 1),) + w2
        memo[mask] = (size, witness)
        return memo[mask]

    nu, witness = best(full)
    return nu, tuple(sorted(tuple(sorted(e)) for e in witness))


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: dict[int, int] | None
    odd_cycle: CycleCertificate | None


def is_bipartite(g: Graph) -> BipartiteResult:
    """Two-color by BFS; on failure return an explicit odd cycle witness."""
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in sorted(g.neighbors(v)):
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    cycle = _odd_cycle_from_conflict(parent, v, w)
                    return BipartiteResult(False, None, CycleCertificate.check(g, cycle))
    return BipartiteResult(True, color, None)


def _odd_cycle_from_conflict(parent, v: int, w: int) -> tuple[int, ...]:
    anc_v = [v]
    while parent[anc_v[-1]] is not None:
        anc_v.append(parent[anc_v[-1]])
    index_v = {u: i for i, u in enumerate(anc_v)}
    path_w = [w]
    while path_w[-1] not in index_v:
        path_w.append(parent[path_w[-1]])
    lca = path_w[-1]
    path_v = anc_v[: index_v[lca] + 1]
    # v .. lca .. w, closed by the conflict edge (w, v)
    return tuple(path_v) + tuple(reversed(path_w[:-1]))


@dataclass(frozen=True)
class CycleData:
    odd_cycles: tuple[CycleCertificate, ...]
    all_cycle_count: int
    on_cycle: tuple[bool, ...]  # indexed by vertex-1, true when on ANY simple cycle

    def vertex_on_cycle(self, v: int) -> bool:
        return self.on_cycle[v - 1]


def odd_cycles(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> CycleData:
    """Enumerate all simple cycles; report the odd ones and per-vertex flags."""
    _check_bound(g, max_vertices)
    cycles: list[tuple[int, ...]] = []
    adj = {v: sorted(g.neighbors(v)) for v in g.vertices}

    def dfs(start: int, v: int, path: list[int], visited: set[int]) -> None:
        for w in adj[v]:
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > start and w not in visited:
                visited.add(w)
                path.append(w)
                dfs(start, w, path, visited)
                path.pop()
                visited.remove(w)

    for s in g.vertices:
        dfs(s, s, [s], {s})

    on = [False] * g.vertex_count
    for c in cycles:
        for v in c:
            on[v - 1] = True
    odd = sorted(
        (CycleCertificate(_canonical_cycle(c)) for c in cycles if len(c) % 2 == 1),
        key=lambda c: (c.length, c.vertices),
    )
    return CycleData(odd_cycles=tuple(odd), all_cycle_count=len(cycles), on_cycle=tuple(on))


def parallelization(
    g: Graph, weights: Sequence[int]
) -> tuple[Graph, tuple[int, ...]]:
    """The graph G(v): vertex i deleted when v_i = 0, duplicated v_i - 1 times.

    Returns the new graph and a map new_index (1-based position) -> old vertex.
    Copies of adjacent vertices are adjacent; copies of one vertex are not.
    """
    if len(weights) != g.vertex_count:
        raise ValueError("weight vector length must equal the vertex count")
    if any(int(w) < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    new_to_old: list[int] = []
    for v in g.vertices:
        new_to_old.extend([v] * int(weights[v - 1]))
    pos_of: dict[int, list[int]] = {}
    for i, old in enumerate(new_to_old):
        pos_of.setdefault(old, []).append(i + 1)
    edges = []
    for u, v in g.edges:
        for a in pos_of.get(u, ()):
            for b in pos_of.get(v, ()):
                edges.append((a, b))
    return Graph(len(new_to_old), edges), tuple(new_to_old)


@dataclass(frozen=True)
class DecompositionWitness:
    decomposable: bool
    parts: tuple[tuple[int, ...], ...] | None


def decomposability(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> DecompositionWitness:
    """Search for a partition V = V_1 | ... | V_r with sum alpha(G_i) = alpha(G), r >= 2.

    A two-part witness suffices: alpha is subadditive over any partition, so
    merging parts of a finer witness preserves equality.  The search runs
    over bipartitions with vertex 1 pinned to the first part.
    """
    _check_bound(g, max_vertices)
    n = g.vertex_count
    if n < 2:
        return DecompositionWitness(False, None)
    adj = _adjacency_masks(g)
    full = (1 << n) - 1
    memo: dict[int, int] = {0: 0}

    def mis(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        low = mask & -mask
        v = low.bit_length() - 1
        out = mis(mask & ~low)
        take = 1 + mis(mask & ~(adj[v] | low))
        if take > out:
            out = take
        memo[mask] = out
        return out

    def alpha(mask: int) -> int:
        return _popcount(mask) - mis(mask)

    total = alpha(full)
    # vertex 1 (bit 0) pinned into part one; iterate the rest of part one
    rest = full & ~1
    sub = rest
    while True:
        part1 = sub | 1
        part2 = full & ~part1
        if part2 and alpha(part1) + alpha(part2) == total:
            p1 = tuple(i + 1 for i in _bits(part1))
            p2 = tuple(i + 1 for i in _bits(part2))
            return DecompositionWitness(True, (p1, p2))
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return DecompositionWitness(False, None)


@dataclass(frozen=True)
class HypothesesReport:
    """Structural facts about (G, C) used by the regularity statements."""

    cycle: CycleCertificate
    n: int
    neighborhood: tuple[int, ...]          # union of open neighborhoods of V(C)
    closed_neighborhood: tuple[int, ...]   # the same union together with V(C)
    dominates_open: bool
    dominates_closed: bool
    h_vertices: tuple[int, ...]
    h_graph: Graph
    h_index_map: dict[int, int]
    h_off_all_cycles: bool
    nu_g: int
    nu_h: int
    gap: int
    gap_at_least_3: bool


def check_hypotheses(
    g: Graph, c: CycleCertificate, max_vertices: int = DEFAULT_MAX_VERTICES
) -> HypothesesReport:
    """Dominance and nu-gap data for a designated odd cycle.

    Both neighborhood conventions are reported; for cycle vertex sets they
    coincide, and the open-union one drives everything downstream.
    """
    c = CycleCertificate.check(g, c.vertices)
    if not c.is_odd:
        raise ValueError("designated cycle must be odd")
    nbhd = neighborhoods(g, c.vertices)
    closed = closed_neighborhoods(g, c.vertices)
    all_vs = frozenset(g.vertices)
    h_vertices = tuple(sorted(all_vs - nbhd))
    h_graph, h_map = induced_subgraph(g, h_vertices)
    cyc = odd_cycles(g, max_vertices)
    off = all(not cyc.vertex_on_cycle(v) for v in h_vertices)
    nu_g, _ = induced_matching_number(g, max_vertices)
    nu_h, _ = induced_matching_number(h_graph, max_vertices)
    gap = nu_g - nu_h
    return HypothesesReport(
        cycle=c,
        n=c.half_length,
        neighborhood=tuple(sorted(nbhd)),
        closed_neighborhood=tuple(sorted(closed)),
        dominates_open=nbhd == all_vs,
        dominates_closed=closed == all_vs,
        h_vertices=h_vertices,
        h_graph=h_graph,
        h_index_map=h_map,
        h_off_all_cycles=off,
        nu_g=nu_g,
        nu_h=nu_h,
        gap=gap,
        gap_at_least_3=gap >= 3,
    )


def dominating_odd_cycles(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[bool, tuple[tuple[CycleCertificate, bool], ...]]:
    """Whether every simple odd cycle's neighborhood covers all vertices."""
    data = odd_cycles(g, max_vertices)
    all_vs = frozenset(g.vertices)
    flags = tuple(
        (c, neighborhoods(g, c.vertices) == all_vs) for c in data.odd_cycles
    )
    return all(f for _, f in flags) and bool(flags), flags


def parse_graph_text(text: str) -> tuple[Graph, tuple[CycleCertificate, ...]]:
    """Parse the graph text format: 'n <count>', 'e <u> <v>', 'c <v1> ... <vk>'.

    Blank lines and '#' comments are ignored.  Errors carry line numbers.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    cycle_lines: list[tuple[int, tuple[int, ...]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag, args = parts[0], parts[1:]
        if tag == "n":
            if n is not None:
                raise GraphFormatError(lineno, "duplicate n line")
            if len(args) != 1 or not args[0].isdigit():
                raise GraphFormatError(lineno, "expected 'n <count>'")
            n = int(args[0])
        elif tag == "e":
            if n is None:
                raise GraphFormatError(lineno, "edge before n line")
            if len(args) != 2:
                raise GraphFormatError(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(args[0]), int(args[1])
            except ValueError:
                raise GraphFormatError(lineno, "edge endpoints must be integers")
            if u == v:
                raise GraphFormatError(lineno, f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(lineno, f"edge ({u},{v}) outside 1..{n}")
            key = (min(u, v), max(u, v))
            if key in set(edges):
                raise GraphFormatError(lineno, f"duplicate edge ({key[0]},{key[1]})")
            edges.append(key)
        elif tag == "c":
            if n is None:
                raise GraphFormatError(lineno, "cycle before n line")
            try:
                vs = tuple(int(a) for a in args)
            except ValueError:
                raise GraphFormatError(lineno, "cycle vertices must be integers")
            if len(vs) < 3:
                raise GraphFormatError(lineno, "cycle needs at least 3 vertices")
            cycle_lines.append((lineno, vs))
        else:
            raise GraphFormatError(lineno, f"unknown line tag {tag!r}")
    if n is None:
        raise GraphFormatError(0, "missing n line")
    g = Graph(n, edges)
    certs = []
    for lineno, vs in cycle_lines:
        try:
            certs.append(CycleCertificate.check(g, vs))
        except ValueError as exc:
            raise GraphFormatError(lineno, str(exc))
    return g, tuple(certs)


def render_graph_text(g: Graph, cycles: Sequence[CycleCertificate] = ()) -> str:
    lines = [f"n {g.vertex_count}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    lines += ["c " + " ".join(str(v) for v in c.vertices) for c in cycles]
    return "\n".join(lines) + "\n"
