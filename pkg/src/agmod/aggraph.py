"""The annihilating-submodule graph and its exact invariants.

AG(M) has a vertex for every nonzero submodule N admitting a nonzero proper
partner K with NK = (0) (K = N is allowed, so N with N^2 = 0 is a vertex even
when otherwise isolated; M itself is a vertex exactly when some nonzero
proper N has (N:M) equal to the annihilator).  Distinct vertices are adjacent
iff their product vanishes.  AG(M)* keeps only proper submodules whose colon
differs from the annihilator, with both ends of the defining partner
condition filtered the same way.

Adjacency is kept as per-vertex bitmasks.  The clique solver is a pivoting
maximal-clique search; the chromatic solver deepens the colour count from the
clique lower bound to a greedy upper bound, branching over vertices in
descending-degree order.  Degenerate conventions, pinned once here: the empty
graph has clique and chromatic number 0, no girth, no diameter, shape flag
{"empty"} only; girth is None for acyclic graphs; diameter is None below two
vertices or when disconnected; a star is K_{1,m} with m >= 0, so one- and
two-vertex graphs count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finmod import Module, Submodule


@dataclass(frozen=True)
class AnnGraph:
    """A graph on submodule vertices, with adjacency bitmasks by vertex index."""

    module: Module
    kind: str  # "AG" or "AG_star"
    vertices: tuple[Submodule, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def neighbors(self, i: int):
        mask = self.adj[i]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in self.neighbors(i)
            if i < j
        ]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)


def build_AG(module: Module) -> AnnGraph:
    """AG(M) from the full submodule lattice."""
    lat = module.lattice()
    zero = module.zero_submodule()
    nonzero = [s for s in lat.all if not s.is_zero]
    proper = [s for s in nonzero if not s.is_whole]
    verts = [
        n
        for n in nonzero
        if any(module.product(n, k) == zero for k in proper)
    ]
    return _with_edges(module, "AG", verts)


def build_AG_star(module: Module) -> AnnGraph:
    """AG(M)*: proper submodules with colon different from the annihilator."""
    lat = module.lattice()
    zero = module.zero_submodule()
    ann = module.annihilator()
    cands = [
        s
        for s in lat.all
        if not s.is_whole and module.colon(s) != ann
    ]
    verts = [
        n
        for n in cands
        if any(module.product(n, k) == zero for k in cands)
    ]
    return _with_edges(module, "AG_star", verts)


def _with_edges(module: Module, kind: str, verts: list[Submodule]) -> AnnGraph:
    zero = module.zero_submodule()
    n = len(verts)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if module.product(verts[i], verts[j]) == zero:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return AnnGraph(module, kind, tuple(verts), tuple(adj))


# -- invariants ----------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    girth: int | None
    diameter: int | None
    connected: bool
    bipartite: bool
    clique_number: int
    chromatic_number: int
    degree_sequence: tuple[int, ...]
    shape: frozenset[str]

    @property
    def is_tree(self) -> bool:
        return "tree" in self.shape

    @property
    def is_star(self) -> bool:
        return "star" in self.shape

    @property
    def is_path4(self) -> bool:
        return "path_4" in self.shape

    @property
    def triangle_free(self) -> bool:
        return self.clique_number <= 2

    def to_dict(self) -> dict:
        return {
            "girth": self.girth,
            "diameter": self.diameter,
            "connected": self.connected,
            "bipartite": self.bipartite,
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "degree_sequence": list(self.degree_sequence),
            "shape": sorted(self.shape),
        }


def invariants(g: AnnGraph) -> InvariantReport:
    n = g.n
    if n == 0:
        return InvariantReport(
            girth=None,
            diameter=None,
            connected=True,
            bipartite=True,
            clique_number=0,
            chromatic_number=0,
            degree_sequence=(),
            shape=frozenset({"empty"}),
        )
    degrees = sorted(g.degree(i) for i in range(n))
    edge_count = sum(degrees) // 2
    connected = _is_connected(g)
    girth = _girth(g)
    diameter = _diameter(g) if connected and n >= 2 else None
    bipartite = _is_bipartite(g)
    clique, _ = max_clique(g.adj, n)
    chromatic = chromatic_number(g.adj, n, lower=clique)

    shape = set()
    if connected and edge_count == n - 1:
        shape.add("tree")
        if n <= 2 or max(degrees) == n - 1:
            shape.add("star")
        if n == 1 or (degrees.count(1) == 2 and degrees.count(2) == n - 2):
            shape.add(f"path_{n}")
    if edge_count == n * (n - 1) // 2:
        shape.add("complete")
    if degrees[0] == degrees[-1]:
        shape.add("regular")
    if girth is not None:
        shape.add("cycle_present")

    return InvariantReport(
        girth=girth,
        diameter=diameter,
        connected=connected,
        bipartite=bipartite,
        clique_number=clique,
        chromatic_number=chromatic,
        degree_sequence=tuple(degrees),
        shape=frozenset(shape),
    )


def _bfs_dist(g: AnnGraph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.neighbors(u):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def _is_connected(g: AnnGraph) -> bool:
    if g.n <= 1:
        return True
    return all(d >= 0 for d in _bfs_dist(g, 0))


def _diameter(g: AnnGraph) -> int | None:
    best = 0
    for s in range(g.n):
        dist = _bfs_dist(g, s)
        if any(d < 0 for d in dist):
            return None
        best = max(best, max(dist))
    return best


def _girth(g: AnnGraph) -> int | None:
    """Shortest cycle by breadth-first search from every vertex."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.neighbors(u):
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u]:
                        cycle = dist[u] + dist[v] + 1
                        if best is None or cycle < best:
                            best = cycle
            frontier = nxt
    return best


def _is_bipartite(g: AnnGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.neighbors(u):
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        nxt.append(v)
                    elif color[v] == color[u]:
                        return False
            frontier = nxt
    return True


# -- exact solvers ----------------------------------------------------------------


def max_clique(adj, n: int) -> tuple[int, int]:
    """Maximum clique size and one witness bitmask, by pivoted expansion."""
    if n == 0:
        return 0, 0
    best = 0
    best_mask = 0
    full = (1 << n) - 1

    def expand(size: int, mask: int, cand: int, excl: int):
        nonlocal best, best_mask
        if not cand and not excl:
            if size > best:
                best, best_mask = size, mask
            return
        if size + cand.bit_count() <= best:
            return
        pool = cand | excl
        pivot, pivot_deg = -1, -1
        m = pool
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (cand & adj[v]).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
        branch = cand & ~adj[pivot]
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            expand(size + 1, mask | low, cand & adj[v], excl & adj[v])
            cand &= ~low
            excl |= low

    expand(0, 0, full, 0)
    return best, best_mask


def greedy_coloring(adj, n: int) -> int:
    """Descending-degree greedy; an upper bound for the chromatic number."""
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())
    colors = {}
    used = 0
    for v in order:
        banned = {colors[u] for u in colors if adj[v] >> u & 1}
        c = 0
        while c in banned:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used


def _colorable(adj, order, k: int) -> bool:
    n = len(order)
    colors = [-1] * n

    def bt(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        banned = 0
        for u in range(n):
            if adj[v] >> u & 1 and colors[u] >= 0:
                banned |= 1 << colors[u]
        limit = min(used + 1, k)  # at most one brand-new colour, breaks symmetry
        for c in range(limit):
            if banned >> c & 1:
                continue
            colors[v] = c
            if bt(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return bt(0, 0)


def chromatic_number(adj, n: int, lower: int | None = None) -> int:
    """Exact chromatic number: deepen k from the clique bound to the greedy bound."""
    if n == 0:
        return 0
    lb = max(1, lower if lower is not None else max_clique(adj, n)[0])
    ub = greedy_coloring(adj, n)
    if lb >= ub:
        return ub
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())
    for k in range(lb, ub):
        if _colorable(adj, order, k):
            return k
    return ub


# -- DOT export --------------------------------------------------------------------


def to_dot(g: AnnGraph) -> str:
    """Deterministic DOT text: vertices in canonical submodule-encoding order."""
    order = sorted(range(g.n), key=lambda i: g.vertices[i].encoding)
    names = {v: f"v{pos}" for pos, v in enumerate(order)}
    lines = [f"graph {g.kind} {{"]
    for v in order:
        lines.append(f'  {names[v]} [label="{g.vertices[v].label}"];')
    edge_pairs = sorted(
        (min(names[i], names[j], key=lambda s: int(s[1:])),
         max(names[i], names[j], key=lambda s: int(s[1:])))
        for i, j in g.edges()
    )
    for a, b in sorted(edge_pairs, key=lambda p: (int(p[0][1:]), int(p[1][1:]))):
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
