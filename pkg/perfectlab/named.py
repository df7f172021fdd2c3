"""Named graphs used as fixtures and CLI inputs.

Standard families come from networkx generators; the Mycielskian is built
directly on adjacency masks.
"""

from typing import Callable

import networkx as nx

from .graph import Graph, from_edge_list


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Convert, labeling vertices 0..n-1 in sorted node order."""
    order = sorted(nx_graph.nodes())
    index = {node: i for i, node in enumerate(order)}
    return from_edge_list(len(order), [(index[u], index[v]) for u, v in nx_graph.edges() if u != v])


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def cycle(n: int) -> Graph:
    return from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return from_networkx(nx.path_graph(n))


def complete(n: int) -> Graph:
    return from_networkx(nx.complete_graph(n))


def empty(n: int) -> Graph:
    return from_networkx(nx.empty_graph(n))


def complete_bipartite(a: int, b: int) -> Graph:
    return from_networkx(nx.complete_bipartite_graph(a, b))


def petersen() -> Graph:
    """Outer 5-cycle 0-1-2-3-4, spokes i-(i+5), inner pentagram on 5..9."""
    return from_networkx(nx.petersen_graph())


def mycielskian(g: Graph) -> Graph:
    """Vertices 0..n-1 keep g; n+i is the shadow of i; 2n is the apex.

    Preserves triangle-freeness and raises the chromatic number by one.
    """
    n = g.n
    edges = []
    for u, v in g.edges():
        edges += [(u, v), (u, v + n), (u + n, v)]
    edges += [(n + i, 2 * n) for i in range(n)]
    return from_edge_list(2 * n + 1, edges)


def grotzsch() -> Graph:
    """Smallest triangle-free graph with chromatic number 4 (11 vertices)."""
    return mycielskian(cycle(5))


def double_mycielskian_c5() -> Graph:
    """23 vertices, triangle-free, chromatic number 5."""
    return mycielskian(grotzsch())


NAMED: dict[str, Callable[[], Graph]] = {
    "k1": lambda: complete(1),
    "k4": lambda: complete(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "c7": lambda: cycle(7),
    "p4": lambda: path(4),
    "petersen": petersen,
    "grotzsch": grotzsch,
    "mycielski5": double_mycielskian_c5,
}


def get_named(name: str) -> Graph:
    factory = NAMED.get(name.lower())
    if not factory:
        raise ValueError(f"Unknown named graph: {name}")
    return factory()
