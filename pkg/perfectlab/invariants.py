"""Exact clique number, chromatic number and independent-set structure.

All routines take an optional vertex set ``s`` and work on G[s] in the
original labels. omega(empty) = chi(empty) = 0. Ties are broken towards the
lexicographically least witness under ascending vertex order.
"""

from typing import Iterator

from .bitset import VertexSet, bits, lowest, popcount
from .certificates import CliqueWitness, Coloring
from .config import CACHE_WIDTH, INDEPENDENT_SET_DP_CAP
from .errors import SizeLimitError
from .graph import Graph


def _domain(g: Graph, s: VertexSet | None) -> VertexSet:
    return g.vertices if s is None else s


# --- cliques ---------------------------------------------------------------

def max_clique(g: Graph, s: VertexSet | None = None) -> VertexSet:
    """Lexicographically least maximum clique of G[s] (branch and bound)."""
    dom = _domain(g, s)
    best = [0, 0]  # mask, size

    def expand(clique: VertexSet, size: int, cand: VertexSet) -> None:
        if size > best[1]:
            best[0], best[1] = clique, size
        while cand:
            if size + popcount(cand) <= best[1]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(clique | low, size + 1, cand & g.adj[v])
            cand ^= low

    expand(0, 0, dom)
    return best[0]


def clique_number(g: Graph, s: VertexSet | None = None) -> int:
    return popcount(max_clique(g, s))


def clique_witness(g: Graph, s: VertexSet | None = None) -> CliqueWitness:
    return CliqueWitness(max_clique(g, s))


# --- colorings -------------------------------------------------------------

def _to_coloring(assignment: dict[int, int]) -> Coloring:
    k = max(assignment.values(), default=-1) + 1
    classes = [0] * k
    for v, c in assignment.items():
        classes[c] |= 1 << v
    return Coloring(tuple(classes))


def _normalize(assignment: dict[int, int]) -> dict[int, int]:
    """Rename colors in order of first appearance along ascending vertices."""
    rename: dict[int, int] = {}
    out = {}
    for v in sorted(assignment):
        c = assignment[v]
        if c not in rename:
            rename[c] = len(rename)
        out[v] = rename[c]
    return out


def greedy_coloring(g: Graph, s: VertexSet | None = None) -> Coloring:
    """DSATUR greedy coloring; an upper bound for chi."""
    dom = _domain(g, s)
    colors: dict[int, int] = {}
    uncolored = dom
    while uncolored:
        v = max(
            bits(uncolored),
            key=lambda u: (
                len({colors[w] for w in bits(g.adj[u] & dom) if w in colors}),
                popcount(g.adj[u] & uncolored),
                -u,
            ),
        )
        taken = {colors[w] for w in bits(g.adj[v] & dom) if w in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        uncolored &= ~(1 << v)
    return _to_coloring(_normalize(colors))


def _search_coloring(
    g: Graph, dom: VertexSet, k: int, fixed: dict[int, int], counter: list[int] | None = None
) -> dict[int, int] | None:
    """Backtracking k-coloring of G[dom] extending `fixed`.

    DSATUR vertex choice, forward checking on per-vertex color masks, and
    only the lowest never-used color is tried (unused colors are interchangeable).
    """
    if not dom:
        return {}
    if k <= 0:
        return None
    palette = (1 << k) - 1
    allowed = {v: palette for v in bits(dom)}
    used = 0
    for v, c in fixed.items():
        if c >= k:
            return None
        used |= 1 << c
        for u in bits(g.adj[v] & dom):
            allowed[u] &= ~(1 << c)
    for v, c in fixed.items():
        if not allowed[v] >> c & 1:
            return None
    colors = dict(fixed)
    uncolored = dom
    for v in fixed:
        uncolored &= ~(1 << v)

    def search(uncolored: VertexSet, used: int) -> bool:
        if not uncolored:
            return True
        if counter is not None:
            counter[0] += 1
        pick, pick_key = -1, None
        for v in bits(uncolored):
            options = allowed[v]
            if not options:
                return False
            key = (popcount(options), -popcount(g.adj[v] & uncolored), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        v = pick
        options = allowed[v]
        fresh = options & ~used
        if fresh:
            options = (options & used) | (fresh & -fresh)
        rest = uncolored & ~(1 << v)
        for c in bits(options):
            bit = 1 << c
            changed = []
            ok = True
            for u in bits(g.adj[v] & rest):
                if allowed[u] & bit:
                    allowed[u] &= ~bit
                    changed.append(u)
                    if not allowed[u]:
                        ok = False
                        break
            if ok:
                colors[v] = c
                if search(rest, used | bit):
                    return True
                del colors[v]
            for u in changed:
                allowed[u] |= bit
        return False

    return colors if search(uncolored, used) else None


def is_k_colorable(g: Graph, k: int, within: VertexSet | None = None) -> Coloring | None:
    """Lexicographically least proper coloring with at most k colors, or None."""
    dom = _domain(g, within)
    found = _search_coloring(g, dom, k, {})
    if found is None:
        return None
    sol = _normalize(found)
    fixed: dict[int, int] = {}
    for v in bits(dom):
        for c in range(sol[v]):
            trial = _search_coloring(g, dom, k, {**fixed, v: c})
            if trial is not None:
                sol = _normalize(trial)
                break
        fixed[v] = sol[v]
    return _to_coloring(sol)


def _chromatic(g: Graph, dom: VertexSet, lower: int = 0, upper: int | None = None) -> tuple[int, Coloring]:
    if not dom:
        return 0, Coloring(())
    clique = max_clique(g, dom)
    lower = max(lower, popcount(clique))
    greedy = greedy_coloring(g, dom)
    best = greedy
    top = greedy.num_colors if upper is None else min(upper, greedy.num_colors)
    seed = {v: i for i, v in enumerate(bits(clique))}
    for k in range(lower, top):
        found = _search_coloring(g, dom, k, seed)
        if found is not None:
            return k, _to_coloring(_normalize(found))
    if best.num_colors > top:
        found = _search_coloring(g, dom, top, seed)
        best = _to_coloring(_normalize(found))
    return top, best


def chromatic_number(g: Graph, s: VertexSet | None = None) -> int:
    """Exact chi(G[s]): omega lower bound, DSATUR upper bound, then k-colorability tests."""
    return _chromatic(g, _domain(g, s))[0]


def optimal_coloring(g: Graph, s: VertexSet | None = None) -> Coloring:
    return _chromatic(g, _domain(g, s))[1]


# --- independent sets ------------------------------------------------------

def maximal_independent_sets(g: Graph, s: VertexSet | None = None) -> Iterator[VertexSet]:
    """Every maximal independent set of G[s] exactly once (Bron-Kerbosch with pivot
    on the complement)."""
    dom = _domain(g, s)

    def non_neighbors(v: int) -> VertexSet:
        return dom & ~g.adj[v] & ~(1 << v)

    def bk(r: VertexSet, p: VertexSet, x: VertexSet) -> Iterator[VertexSet]:
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (popcount(p & non_neighbors(u)), -u))
        for v in bits(p & ~non_neighbors(pivot)):
            bit = 1 << v
            yield from bk(r | bit, p & non_neighbors(v), x & non_neighbors(v))
            p &= ~bit
            x |= bit

    yield from bk(0, dom, 0)


def chromatic_number_by_independent_sets(g: Graph, s: VertexSet | None = None) -> int:
    """chi via set cover: chi(S) = 1 + min over maximal independent I of chi(S - I)."""
    dom = _domain(g, s)
    if popcount(dom) > INDEPENDENT_SET_DP_CAP:
        raise SizeLimitError("independent-set chromatic DP", popcount(dom), INDEPENDENT_SET_DP_CAP)
    memo: dict[VertexSet, int] = {0: 0}

    def chi(t: VertexSet) -> int:
        if t not in memo:
            memo[t] = 1 + min(chi(t & ~i) for i in maximal_independent_sets(g, t))
        return memo[t]

    return chi(dom)


# --- subset memoization ----------------------------------------------------

class SubsetCache:
    """Per-graph memo of omega, chi and perfection over vertex subsets.

    Confined to one checker run; do not share between threads or processes.
    Above CACHE_WIDTH vertices nothing is stored.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.enabled = graph.n <= CACHE_WIDTH
        self.omega_table: dict[VertexSet, int] = {0: 0}
        self.chi_table: dict[VertexSet, int] = {0: 0}
        self.perfect_table: dict[VertexSet, bool] = {}

    def omega(self, s: VertexSet) -> int:
        if s in self.omega_table:
            return self.omega_table[s]
        if not self.enabled:
            return clique_number(self.graph, s)
        # omega(S) = max(omega(S - v), 1 + omega(S & N(v))), v = lowest vertex of S
        v = lowest(s)
        value = max(self.omega(s & ~(1 << v)), 1 + self.omega(s & self.graph.adj[v]))
        self.omega_table[s] = value
        return value

    def chi(self, s: VertexSet) -> int:
        if s in self.chi_table:
            return self.chi_table[s]
        lower, upper = self.omega(s), None
        smaller = s & ~(1 << lowest(s))
        if smaller in self.chi_table:
            lower = max(lower, self.chi_table[smaller])
            upper = self.chi_table[smaller] + 1
        value = _chromatic(self.graph, s, lower, upper)[0]
        if self.enabled:
            self.chi_table[s] = value
        return value

    def check_owner(self, graph: Graph) -> None:
        if graph != self.graph:
            raise ValueError("SubsetCache belongs to a different graph")
