"""Systems of graphs on a shared vertex set, and the coloring verifier.

A system is m simple undirected graphs over the dense vertex set
0..n-1.  A cooperative coloring assigns each vertex one covering graph
index; it is valid when every color class is independent in its own
graph.  Everything here is pure and the objects are treated as
immutable after construction.
"""

from collections import deque
from dataclasses import dataclass, field

import numpy as np


class CoopColorError(Exception):
    """Base class for all library errors."""


class OutOfRangeVertex(CoopColorError):
    pass


class SelfLoop(CoopColorError):
    pass


class DuplicateEdge(CoopColorError):
    pass


class LengthMismatch(CoopColorError):
    pass


class IndexOutOfRange(CoopColorError):
    pass


class CycleDetected(CoopColorError):
    pass


class OddCycleDetected(CoopColorError):
    pass


class NotAForest(CoopColorError):
    pass


class MissingBipartition(CoopColorError):
    pass


class InvalidAnnotation(CoopColorError):
    pass


@dataclass
class GraphSystem:
    """m simple graphs sharing the vertex set 0..n-1.

    edges[j] holds graph j's edge list, canonicalized (u < v, sorted);
    adj[j][v] is the sorted neighbor list of v in graph j.  roots[j] /
    lefts[j] are optional structure annotations: preferred forest roots,
    or the left side of a bipartition.  Build through
    :func:`build_system`, which validates everything.
    """

    n: int
    edges: list
    adj: list
    roots: list
    lefts: list
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, j: int, v: int) -> int:
        return len(self.adj[j][v])


@dataclass
class CooperativeColoring:
    """Per-vertex choice of covering graph index (assignment form)."""

    assignment: tuple

    def as_sets(self, m: int) -> list:
        """Set form: the m color classes, each a sorted vertex list."""
        sets = [[] for _ in range(m)]
        for v, j in enumerate(self.assignment):
            sets[j].append(v)
        return sets

    @classmethod
    def from_sets(cls, sets, n: int) -> "CooperativeColoring":
        """Assignment form from (possibly overlapping) covering sets.

        Each vertex gets its lowest covering index; subsets of
        independent sets stay independent, so validity is preserved.
        Raises LengthMismatch if some vertex is covered by no set.
        """
        assignment = [-1] * n
        for j, vs in enumerate(sets):
            for v in vs:
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"vertex {v} outside [0, {n})")
                if assignment[v] < 0:
                    assignment[v] = j
        for v, j in enumerate(assignment):
            if j < 0:
                raise LengthMismatch(f"vertex {v} not covered by any set")
        return cls(tuple(assignment))


@dataclass
class VerificationReport:
    """Outcome of verify_coloring: valid iff both lists are empty."""

    valid: bool
    violations: list  # (graph index j, edge (u, v)) with both endpoints in I_j
    uncovered: list  # vertices in no I_j


def build_system(n, edge_lists, roots=None, lefts=None) -> GraphSystem:
    """Validate and build a GraphSystem from per-graph edge sequences.

    Rejects out-of-range endpoints, self-loops and duplicate edges
    (multigraph input is an error, not deduplicated).  Optional
    annotations are validated: a roots annotation requires the graph to
    be acyclic, a lefts annotation must be a genuine bipartition side.
    """
    if n < 0:
        raise OutOfRangeVertex(f"negative vertex count {n}")
    m = len(edge_lists)
    roots = list(roots) if roots is not None else [None] * m
    lefts = list(lefts) if lefts is not None else [None] * m
    if len(roots) != m or len(lefts) != m:
        raise LengthMismatch("annotation lists must match the number of graphs")

    edges = []
    adj = []
    for j, raw in enumerate(edge_lists):
        seen = set()
        canon = []
        nbrs = [[] for _ in range(n)]
        for u, v in raw:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeVertex(f"graph {j}: edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise SelfLoop(f"graph {j}: self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdge(f"graph {j}: duplicate edge {e}")
            seen.add(e)
            canon.append(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        canon.sort()
        for lst in nbrs:
            lst.sort()
        edges.append(canon)
        adj.append(nbrs)

    system = GraphSystem(n=n, edges=edges, adj=adj, roots=roots, lefts=lefts)

    for j in range(m):
        if roots[j] is not None:
            root_forest(system, j, preferred_roots=roots[j])  # raises CycleDetected
        if lefts[j] is not None:
            side = set(lefts[j])
            for v in side:
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"graph {j}: left-side vertex {v} out of range")
            for u, v in edges[j]:
                if (u in side) == (v in side):
                    raise InvalidAnnotation(
                        f"graph {j}: edge ({u}, {v}) lies within one annotated side"
                    )
    return system


def max_degree(s: GraphSystem) -> int:
    """Maximum degree over all graphs and vertices (0 if edgeless)."""
    best = 0
    for nbrs in s.adj:
        for lst in nbrs:
            if len(lst) > best:
                best = len(lst)
    return best


def is_independent(s: GraphSystem, j: int, vertices) -> bool:
    """True iff no edge of graph j has both endpoints in ``vertices``."""
    inside = set(vertices)
    return not any(u in inside and v in inside for u, v in s.edges[j])


def verify_coloring(s: GraphSystem, coloring) -> VerificationReport:
    """Check a coloring against the system; never mutates its inputs.

    Accepts a CooperativeColoring (assignment form) or raw set form (a
    sequence of m vertex collections, overlaps and uncovered vertices
    allowed).  The report lists every monochromatic edge per graph and
    every vertex left uncovered.
    """
    if isinstance(coloring, CooperativeColoring):
        assignment = coloring.assignment
        if len(assignment) != s.n:
            raise LengthMismatch(f"assignment length {len(assignment)} != n {s.n}")
        for v, j in enumerate(assignment):
            if not 0 <= j < s.m:
                raise IndexOutOfRange(f"vertex {v}: graph index {j} outside [0, {s.m})")
        sets = [set() for _ in range(s.m)]
        for v, j in enumerate(assignment):
            sets[j].add(v)
    else:
        if len(coloring) != s.m:
            raise LengthMismatch(f"set form has {len(coloring)} sets, system has {s.m}")
        sets = []
        for vs in coloring:
            vs = set(vs)
            for v in vs:
                if not 0 <= v < s.n:
                    raise IndexOutOfRange(f"vertex {v} outside [0, {s.n})")
            sets.append(vs)

    violations = []
    for j in range(s.m):
        members = sets[j]
        for u, v in s.edges[j]:
            if u in members and v in members:
                violations.append((j, (u, v)))
    covered = set().union(*sets) if sets else set()
    uncovered = [v for v in range(s.n) if v not in covered]
    return VerificationReport(
        valid=not violations and not uncovered,
        violations=violations,
        uncovered=uncovered,
    )


def root_forest(s: GraphSystem, j: int, preferred_roots=None):
    """Orient acyclic graph j away from one root per component.

    Returns (parents, roots): parents[v] is -1 for roots, else the BFS
    parent.  Components take their lowest-index vertex as root unless a
    preferred root inside them is given; two preferred roots in one
    component are rejected.  Raises CycleDetected (naming a cycle edge)
    when graph j is not acyclic.
    """
    n = s.n
    adj = s.adj[j]
    preferred = set()
    if preferred_roots is not None:
        for r in preferred_roots:
            if not 0 <= r < n:
                raise IndexOutOfRange(f"preferred root {r} outside [0, {n})")
            preferred.add(r)

    parents = [-1] * n
    component = [-1] * n
    comp_lowest = []
    for v in range(n):
        if component[v] >= 0:
            continue
        cid = len(comp_lowest)
        comp_lowest.append(v)
        component[v] = cid
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if component[w] < 0:
                    component[w] = cid
                    parents[w] = u
                    queue.append(w)
                elif w != parents[u]:
                    raise CycleDetected(f"graph {j}: cycle through edge ({min(u, w)}, {max(u, w)})")

    roots = list(comp_lowest)
    chosen = {}
    for r in preferred:
        cid = component[r]
        if cid in chosen:
            raise InvalidAnnotation(
                f"graph {j}: preferred roots {chosen[cid]} and {r} share a component"
            )
        chosen[cid] = r
        roots[cid] = r

    if chosen:  # re-orient the components whose root moved
        for cid, r in chosen.items():
            if r == comp_lowest[cid]:
                continue
            queue = deque([r])
            parents[r] = -1
            visited = {r}
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in visited:
                        visited.add(w)
                        parents[w] = u
                        queue.append(w)
    return parents, sorted(roots)


def bipartition(s: GraphSystem, j: int):
    """Two-color graph j by BFS; returns the sides (L, R) as sorted lists.

    Per component, the side containing its lowest-index vertex goes to
    L, so isolated vertices land in L.  Raises OddCycleDetected when
    graph j is not bipartite.
    """
    n = s.n
    adj = s.adj[j]
    side = [-1] * n
    for v in range(n):
        if side[v] >= 0:
            continue
        side[v] = 0
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    raise OddCycleDetected(
                        f"graph {j}: odd cycle through edge ({min(u, w)}, {max(u, w)})"
                    )
    left = [v for v in range(n) if side[v] == 0]
    right = [v for v in range(n) if side[v] == 1]
    return left, right


def is_forest(s: GraphSystem, j: int) -> bool:
    """True iff graph j is acyclic."""
    try:
        root_forest(s, j)
    except CycleDetected:
        return False
    return True


def neighbor_csr(s: GraphSystem):
    """CSR over key j*n+v of all neighbors, cached on the system."""
    if "nbr_csr" not in s._cache:
        s._cache["nbr_csr"] = _build_csr(s, lower_only=False)
    return s._cache["nbr_csr"]


def lower_neighbor_csr(s: GraphSystem):
    """CSR over key j*n+v of neighbors with index < v (search kernels)."""
    if "lower_csr" not in s._cache:
        s._cache["lower_csr"] = _build_csr(s, lower_only=True)
    return s._cache["lower_csr"]


def _build_csr(s: GraphSystem, lower_only: bool):
    n, m = s.n, s.m
    keys = []
    vals = []
    for j, canon in enumerate(s.edges):
        for u, v in canon:  # u < v by canonicalization
            keys.append(j * n + v)
            vals.append(u)
            if not lower_only:
                keys.append(j * n + u)
                vals.append(v)
    keys = np.asarray(keys, dtype=np.int64)
    vals = np.asarray(vals, dtype=np.int64)
    order = np.lexsort((vals, keys))
    keys = keys[order]
    vals = vals[order]
    ptr = np.zeros(m * n + 1, dtype=np.int64)
    if keys.size:
        np.add.at(ptr, keys + 1, 1)
    np.cumsum(ptr, out=ptr)
    return ptr, vals
