"""Instance generators: uncolorable gadget families and random benchmarks.

Two hand-constructible families with no cooperative coloring live here:
a recursive forest family grown from a 4-vertex two-path seed, and a
family of complete bipartite graphs split by hypercube coordinates.
Random generators produce degree-capped benchmark systems, reproducible
per graph from (seed, graph index) derived streams.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .system import (
    CoopColorError,
    GraphSystem,
    NotAForest,
    build_system,
    is_forest,
)


class InfeasibleDegree(CoopColorError):
    pass


@dataclass
class ForestFamily:
    """One level of the recursive uncolorable forest family.

    ``labels`` maps each dense vertex index to its nested pair label:
    level-2 labels are plain ints 0..3, and each extension step turns a
    label pair (u, v) into the product vertex (u, v), with the literal
    string "z" for the extra block.
    """

    level: int
    system: GraphSystem
    labels: list


def two_path_system() -> GraphSystem:
    """The 4-vertex seed: two paths with no cooperative coloring.

    Graph 0 is the path 0-1-2-3, graph 1 the path 0-2-1-3.
    """
    return build_system(4, [[(0, 1), (1, 2), (2, 3)], [(0, 2), (1, 2), (1, 3)]])


def product_extension(s: GraphSystem) -> GraphSystem:
    """Extend m forests on V into m+1 forests on (V + {z}) x V.

    The new vertex set has n^2 + n vertices laid out in blocks: block u
    occupies indices [u*n, u*n + n) for u in V, the z block occupies
    [n^2, n^2 + n).  Each old forest is copied once per block; the new
    forest joins (z, u) to (u, v) for all u, v, i.e. it is a disjoint
    union of n stars of degree n.  If no input graph has a cooperative
    coloring, neither does the output (every block forces the star
    forest to pick a vertex inside it, and the star centers collide).
    """
    n = s.n
    for j in range(s.m):
        if not is_forest(s, j):
            raise NotAForest(f"graph {j} of the input system contains a cycle")
    offsets = [u * n for u in range(n)] + [n * n]
    new_edges = []
    for j in range(s.m):
        copied = [(o + u, o + v) for o in offsets for (u, v) in s.edges[j]]
        new_edges.append(copied)
    stars = [(u * n + v, n * n + u) for u in range(n) for v in range(n)]
    new_edges.append(stars)
    return build_system(n * n + n, new_edges)


def _chain_components(s: GraphSystem) -> GraphSystem:
    """Join each graph's components into one tree with leaf-leaf edges.

    Components are chained in index order; the link vertex of each is
    its lowest-index vertex of (original) degree <= 1, so no vertex
    gains more than two edges and acyclicity is preserved.
    """
    new_edges = []
    for j in range(s.m):
        adj = s.adj[j]
        seen = [False] * s.n
        links = []
        for v in range(s.n):
            if seen[v]:
                continue
            stack = [v]
            seen[v] = True
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            link = min(u for u in comp if len(adj[u]) <= 1)
            links.append(link)
        extra = [(links[k], links[k + 1]) for k in range(len(links) - 1)]
        new_edges.append(list(s.edges[j]) + extra)
    return build_system(s.n, new_edges, roots=s.roots, lefts=s.lefts)


def tree_counterexample(m: int, connect: bool = False) -> ForestFamily:
    """Level-m member of the recursive uncolorable forest family.

    Starts from the two-path seed (level 2) and applies the product
    extension m-2 times.  Sizes follow n' = n^2 + n (4, 20, 420, ...)
    and the max degree equals the previous level's vertex count.  With
    ``connect`` each forest is additionally chained into a single tree,
    which only adds edges and therefore preserves uncolorability.
    """
    if m < 2:
        raise ValueError(f"family starts at level 2, got {m}")
    system = two_path_system()
    labels = list(range(4))
    for _ in range(m - 2):
        n = system.n
        system = product_extension(system)
        new_labels: list = [None] * (n * n + n)
        for u in range(n):
            for v in range(n):
                new_labels[u * n + v] = (labels[u], labels[v])
        for v in range(n):
            new_labels[n * n + v] = ("z", labels[v])
        labels = new_labels
    if connect:
        system = _chain_components(system)
    return ForestFamily(level=m, system=system, labels=labels)


def hypercube_counterexample(m: int) -> GraphSystem:
    """m complete bipartite graphs on {0,1}^m, split by each coordinate.

    Vertex v encodes the word (v_0, ..., v_{m-1}) with v_j = (v >> j) & 1.
    Graph j contains every edge between {v : v_j = 0} and {v : v_j = 1},
    so each graph has degree 2^(m-1) and any independent set lies inside
    one side; the word opposite to the chosen sides is never covered.
    Bipartition annotations carry the v_j = 0 sides.
    """
    if m < 1:
        raise ValueError(f"need at least one coordinate, got {m}")
    n = 1 << m
    edge_lists = []
    lefts = []
    for j in range(m):
        zeros = [v for v in range(n) if not (v >> j) & 1]
        ones = [v for v in range(n) if (v >> j) & 1]
        edge_lists.append([(u, w) for u in zeros for w in ones])
        lefts.append(zeros)
    return build_system(n, edge_lists, lefts=lefts)


def random_forest_system(n: int, m: int, d: int, seed: int) -> GraphSystem:
    """m independent uniform-attachment trees with degree capped at d.

    Vertex t attaches to a uniformly chosen earlier vertex of residual
    degree < d.  Graph i draws from the stream (seed, i), so individual
    graphs are reproducible regardless of generation order.
    """
    if d < 1:
        raise InfeasibleDegree(f"degree cap must be >= 1, got {d}")
    if d == 1 and n > 2:
        raise InfeasibleDegree(f"cannot attach {n} vertices as a tree with degree cap 1")
    edge_lists = []
    for i in range(m):
        rng = np.random.default_rng([seed, i])
        degrees = [0] * n
        open_slots = [0]  # earlier vertices with residual degree < d
        edges = []
        for t in range(1, n):
            pick = int(rng.integers(len(open_slots)))
            parent = open_slots[pick]
            edges.append((parent, t))
            degrees[parent] += 1
            degrees[t] += 1
            if degrees[parent] >= d:
                open_slots[pick] = open_slots[-1]
                open_slots.pop()
            if degrees[t] < d:
                open_slots.append(t)
        edge_lists.append(edges)
    return build_system(n, edge_lists, roots=[[0] if n else [] for _ in range(m)])


def random_bipartite_system(n: int, m: int, d: int, seed: int) -> GraphSystem:
    """m random bipartite graphs with a balanced split and degree cap d.

    Each graph splits the vertices uniformly into sides of size
    ceil(n/2) / floor(n/2) and then tries n*d random cross pairs,
    inserting each while both endpoints still have residual degree < d
    (duplicates skipped).  Bipartition annotations are attached.
    """
    if d < 0:
        raise InfeasibleDegree(f"degree cap must be >= 0, got {d}")
    edge_lists = []
    lefts = []
    for i in range(m):
        rng = np.random.default_rng([seed, i])
        perm = rng.permutation(n)
        left = np.sort(perm[: (n + 1) // 2])
        right = np.sort(perm[(n + 1) // 2 :])
        lefts.append([int(v) for v in left])
        if d == 0 or len(left) == 0 or len(right) == 0:
            edge_lists.append([])
            continue
        attempts = n * d
        cand_u = left[rng.integers(len(left), size=attempts)].astype(np.int64)
        cand_v = right[rng.integers(len(right), size=attempts)].astype(np.int64)
        slots = np.full((n, d), -1, dtype=np.int64)
        deg = np.zeros(n, dtype=np.int64)
        edge_u = np.empty(attempts, dtype=np.int64)
        edge_v = np.empty(attempts, dtype=np.int64)
        count = kernels.capped_insert(cand_u, cand_v, d, slots, deg, edge_u, edge_v)
        edge_lists.append([(int(edge_u[k]), int(edge_v[k])) for k in range(count)])
    return build_system(n, edge_lists, lefts=lefts)
