"""Connected simple undirected graphs and their exact distance machinery.

Vertices are internal indices 0..n-1, each carrying an arbitrary hashable
external label. Graphs are immutable once constructed, so every operation
here is a pure function and safe to use concurrently. All distances are
exact integers obtained by breadth-first search; no floating point appears
anywhere in this package.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    EdgeListFormatError,
    EmptyEdgeSetError,
    SelfLoopError,
)


class Graph:
    """Immutable connected simple undirected graph.

    This is the low-level constructor: it takes the label sequence and a
    per-vertex neighbor-index list and validates simplicity, symmetry and
    connectivity. Most callers want :func:`graph_from_edge_list`,
    :func:`single_vertex_graph` or :func:`parse_edge_list` instead.
    """

    __slots__ = ("n", "m", "labels", "adjacency", "_index")

    def __init__(self, labels, adjacency):
        labels = tuple(labels)
        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        n = len(labels)
        if n == 0:
            raise ValueError("a graph needs at least one vertex")
        if len(adjacency) != n:
            raise ValueError("labels and adjacency have different lengths")
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise ValueError(f"duplicate vertex label {label!r}")
            index[label] = i
        degree_sum = 0
        directed = set()
        for u, nbrs in enumerate(adjacency):
            degree_sum += len(nbrs)
            for a, b in zip(nbrs, nbrs[1:]):
                if a == b:
                    raise DuplicateEdgeError(
                        f"parallel edge {labels[u]!r} -- {labels[a]!r}"
                    )
            for v in nbrs:
                if v == u:
                    raise SelfLoopError(f"self-loop at {labels[u]!r}")
                if not 0 <= v < n:
                    raise ValueError(f"neighbor index {v} out of range")
                directed.add((u, v))
        for u, v in directed:
            if (v, u) not in directed:
                raise ValueError(
                    f"asymmetric adjacency {labels[u]!r} -> {labels[v]!r}"
                )
        self.n = n
        self.m = degree_sum // 2
        self.labels = labels
        self.adjacency = adjacency
        self._index = index
        dist = bfs_distances(self, 0)
        unreached = [v for v, d in enumerate(dist) if d < 0]
        if unreached:
            sample = ", ".join(repr(labels[v]) for v in unreached[:5])
            raise DisconnectedError(
                f"{len(unreached)} vertices unreachable from "
                f"{labels[0]!r}, e.g. {sample}"
            )

    def degree(self, v):
        return len(self.adjacency[v])

    def edges(self):
        """All edges as (u, v) index pairs with u < v, in sorted order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def index_of(self, label):
        """Internal index of an external label."""
        return self._index[label]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceDistribution:
    """Counts of unordered object pairs indexed by distance.

    counts[k] is the number of pairs at distance k. By the coincident-pair
    convention counts[0] equals the number of objects themselves (each object
    is at distance 0 from itself), so sum(counts[1:]) == C(counts[0], 2).
    """

    counts: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", cs)
        if not cs:
            raise ValueError("a distance distribution cannot be empty")
        if any(c < 0 for c in cs):
            raise ValueError("negative pair count")
        if len(cs) > 1 and cs[-1] == 0:
            raise ValueError("distribution not trimmed: trailing zero count")
        if sum(cs[1:]) != comb(cs[0], 2):
            raise ValueError(
                f"pair counts sum to {sum(cs[1:])}, expected C({cs[0]}, 2) = "
                f"{comb(cs[0], 2)}"
            )


def graph_from_edge_list(pairs):
    """Build a graph from (label, label) pairs.

    Internal indices are assigned in first-appearance order of the labels.
    Rejects self-loops, duplicate edges (in either orientation) and
    disconnected inputs.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError(
            "empty edge list; use single_vertex_graph for the one-vertex graph"
        )
    index = {}
    labels = []
    adjacency = []
    seen = set()
    for a, b in pairs:
        if a == b:
            raise SelfLoopError(f"self-loop {a!r} -- {b!r}")
        for label in (a, b):
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
                adjacency.append([])
        u, v = index[a], index[b]
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {a!r} -- {b!r}")
        seen.add(key)
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(labels, adjacency)


def single_vertex_graph(label):
    """The one-vertex graph carrying the given label."""
    return Graph((label,), ((),))


def is_tree(g):
    """True iff g is acyclic; connectivity is already a type invariant."""
    return g.m == g.n - 1


def bfs_distances(g, source):
    """Distances from source to every vertex, by breadth-first search."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range for n={g.n}")
    adj = g.adjacency
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        append = nxt.append
        for u in frontier:
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = d
                    append(v)
        frontier = nxt
    return dist


def distance_distribution(g):
    """Counts of unordered vertex pairs by distance, one BFS per source.

    Each pair is counted once (only targets with a higher index than the
    source are tallied); counts[0] is n by the coincident-pair convention.
    """
    tally = Counter()
    for src in range(g.n):
        tally.update(bfs_distances(g, src)[src + 1 :])
    counts = [0] * (max(tally) + 1 if tally else 1)
    counts[0] = g.n
    for k, c in tally.items():
        counts[k] = c
    return DistanceDistribution(tuple(counts))


def line_graph(g):
    """The line graph of g plus the map from its vertices back to g's edges.

    Line-graph vertex i represents the i-th edge of g (edges enumerated in
    sorted index order) and is labeled "e{i}"; two vertices are adjacent
    exactly when the underlying edges share an endpoint. Returns
    (line_graph, edge_map) where edge_map[i] is the (label, label) pair of
    the represented edge.
    """
    if g.m == 0:
        raise EmptyEdgeSetError("the one-vertex graph has no line graph")
    edges = g.edges()
    incident = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    adjacency = [[] for _ in range(g.m)]
    for ids in incident:
        # distinct edges of a simple graph share at most one endpoint, so
        # each adjacent pair is generated at exactly one vertex
        for a, b in combinations(ids, 2):
            adjacency[a].append(b)
            adjacency[b].append(a)
    labels = tuple(f"e{i}" for i in range(g.m))
    edge_map = tuple((g.labels[u], g.labels[v]) for u, v in edges)
    return Graph(labels, adjacency), edge_map


def edge_distance_distribution(g):
    """Counts of unordered edge pairs by distance in the line graph."""
    if g.m == 0:
        raise EmptyEdgeSetError("no edges, so no edge-distance distribution")
    lg, _ = line_graph(g)
    return distance_distribution(lg)


def parse_edge_list(text):
    """Parse the edge-list text format into a Graph.

    One edge per line as two whitespace-separated tokens. Lines starting
    with '#' and blank lines are ignored. A line with a single token
    declares an isolated labeled vertex and is only legal as the sole
    content line (the one-vertex graph).
    """
    edge_lines = []
    single_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            single_lines.append((lineno, tokens[0]))
        elif len(tokens) == 2:
            edge_lines.append((lineno, tokens))
        else:
            raise EdgeListFormatError(
                f"line {lineno}: expected 1 or 2 tokens, got {len(tokens)}"
            )
    if single_lines:
        lineno, label = single_lines[0]
        if edge_lines or len(single_lines) > 1:
            raise EdgeListFormatError(
                f"line {lineno}: single-token vertex line is only legal "
                "as the sole line of the file"
            )
        return single_vertex_graph(label)
    if not edge_lines:
        raise EdgeListFormatError("no edges found in input")
    return graph_from_edge_list([tuple(tokens) for _, tokens in edge_lines])


def format_edge_list(g):
    """Render a graph in the edge-list text format (labels as tokens)."""
    if g.m == 0:
        return f"{g.labels[0]}\n"
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edges())
