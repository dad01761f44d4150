"""Cuts, flows and connectivity on multigraphs.

Parallel edges count with multiplicity everywhere: an edge of multiplicity
``mu`` is a capacity-``mu`` connection in flow problems and a weight-``mu``
entry in the Stoer-Wagner adjacency matrix.
"""

from __future__ import annotations

import dataclasses
from collections import deque

import numpy as np

from .graph import GraphError, Multigraph, boundary, is_regular


@dataclasses.dataclass(frozen=True)
class Cut:
    side: frozenset[int]
    weight: int


@dataclasses.dataclass(frozen=True)
class GomoryHuTree:
    """Cut tree stored as a parent array rooted at vertex 0.

    ``parent[v]`` and ``capacity[v]`` describe the tree edge above ``v``;
    both are ``-1`` / ``0`` at the root.
    """

    n: int
    parent: tuple[int, ...]
    capacity: tuple[int, ...]

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return [(v, self.parent[v], self.capacity[v]) for v in range(1, self.n)]

    def _path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] != -1:
            path.append(self.parent[path[-1]])
        return path

    def min_cut_value(self, s: int, t: int) -> int:
        if s == t:
            raise ValueError("s and t must differ")
        up_s, up_t = self._path_to_root(s), self._path_to_root(t)
        common = set(up_s) & set(up_t)
        best = None
        for path in (up_s, up_t):
            for v in path:
                if v in common:
                    break
                c = self.capacity[v]
                best = c if best is None else min(best, c)
        return best

    def subtree(self, v: int) -> frozenset[int]:
        """Vertices separated from the root by removing the edge above ``v``."""
        children: dict[int, list[int]] = {}
        for w in range(self.n):
            if self.parent[w] != -1:
                children.setdefault(self.parent[w], []).append(w)
        out, stack = [], [v]
        while stack:
            w = stack.pop()
            out.append(w)
            stack.extend(children.get(w, ()))
        return frozenset(out)


def _weight_matrix(G: Multigraph) -> np.ndarray:
    W = np.zeros((G.n, G.n), dtype=np.int64)
    for a, b in G.edges:
        W[a, b] += 1
        W[b, a] += 1
    return W


def stoer_wagner(G: Multigraph) -> Cut:
    """Global minimum cut of a connected multigraph with at least two vertices."""
    if G.n < 2:
        raise GraphError("a cut needs at least two vertices")
    W = _weight_matrix(G)
    groups = [[v] for v in range(G.n)]
    active = list(range(G.n))
    best_weight, best_side = None, None
    while len(active) > 1:
        idx = np.array(active)
        sub = W[np.ix_(idx, idx)]
        k = len(active)
        added = np.zeros(k, dtype=bool)
        conn = np.zeros(k, dtype=np.int64)
        added[0] = True
        conn += sub[0]
        prev, last = 0, 0
        for _ in range(k - 1):
            masked = np.where(added, -1, conn)
            nxt = int(np.argmax(masked))
            prev, last = last, nxt
            added[nxt] = True
            conn += sub[nxt]
        cut_of_phase = int(masked[last])
        s, t = active[prev], active[last]
        if best_weight is None or cut_of_phase < best_weight:
            best_weight, best_side = cut_of_phase, frozenset(groups[t])
        # merge t into s
        W[s, :] += W[t, :]
        W[:, s] += W[:, t]
        W[s, s] = 0
        groups[s].extend(groups[t])
        active.remove(t)
    return Cut(best_side, best_weight)


def edge_connectivity(G: Multigraph) -> int:
    """Minimum number of edges whose removal disconnects ``G``; 0 if already disconnected."""
    if G.n < 2 or not G.is_connected():
        return 0
    return stoer_wagner(G).weight


class _FlowNetwork:
    """Undirected unit-capacity-per-copy network for repeated s-t max flows."""

    def __init__(self, G: Multigraph):
        self.n = G.n
        self.cap: list[dict[int, int]] = [dict() for _ in range(G.n)]
        for a, b in G.edges:
            self.cap[a][b] = self.cap[a].get(b, 0) + 1
            self.cap[b][a] = self.cap[b].get(a, 0) + 1

    def max_flow(self, s: int, t: int) -> tuple[int, frozenset[int]]:
        """Flow value and the source side of a minimum s-t cut."""
        flow = [dict.fromkeys(c, 0) for c in self.cap]
        value = 0
        while True:
            pred = {s: None}
            queue = deque([s])
            while queue and t not in pred:
                v = queue.popleft()
                for w, c in self.cap[v].items():
                    if w not in pred and c - flow[v][w] > 0:
                        pred[w] = v
                        queue.append(w)
            if t not in pred:
                return value, frozenset(pred)
            bottleneck, w = None, t
            while pred[w] is not None:
                v = pred[w]
                r = self.cap[v][w] - flow[v][w]
                bottleneck = r if bottleneck is None else min(bottleneck, r)
                w = v
            w = t
            while pred[w] is not None:
                v = pred[w]
                flow[v][w] += bottleneck
                flow[w][v] -= bottleneck
                w = v
            value += bottleneck


def max_flow_value(G: Multigraph, s: int, t: int) -> int:
    return _FlowNetwork(G).max_flow(s, t)[0]


def gomory_hu(G: Multigraph) -> GomoryHuTree:
    """Gusfield's construction: ``n - 1`` max flows, no graph contraction.

    The tree is a genuine cut tree: removing the edge above ``v`` splits the
    vertices into two sets whose boundary in ``G`` has exactly that capacity.
    """
    if not G.is_connected():
        raise GraphError("Gomory-Hu tree needs a connected graph")
    n = G.n
    net = _FlowNetwork(G)
    parent = [0] * n
    cap = [0] * n
    parent[0] = -1
    for s in range(1, n):
        t = parent[s]
        value, side = net.max_flow(s, t)
        cap[s] = value
        for i in range(s + 1, n):
            if i in side and parent[i] == t:
                parent[i] = s
        if parent[t] != -1 and parent[t] in side:
            parent[s] = parent[t]
            parent[t] = s
            cap[s], cap[t] = cap[t], value
    return GomoryHuTree(n, tuple(parent), tuple(cap))


def min_odd_cut(G: Multigraph, tree: GomoryHuTree | None = None) -> Cut:
    """Minimum ``|boundary(S)|`` over vertex sets of odd size.

    The optimum is attained at a fundamental cut of the Gomory-Hu tree with an
    odd side (Padberg-Rao with T = V), so only ``n - 1`` candidates are scanned.
    """
    if G.n % 2:
        raise GraphError("odd cuts need an even number of vertices")
    if tree is None:
        tree = gomory_hu(G)
    best = None
    for v in range(1, G.n):
        side = tree.subtree(v)
        if len(side) % 2 == 0:
            continue
        if best is None or tree.capacity[v] < best[0]:
            best = (tree.capacity[v], side)
    if best is None:
        raise GraphError("no odd tree cut; graph needs at least two vertices")
    weight = len(boundary(G, best[1]))
    if weight != best[0]:
        raise AssertionError(f"cut tree inconsistent: capacity {best[0]} vs boundary {weight}")
    return Cut(best[1], weight)


def is_r_graph(G: Multigraph) -> int | None:
    """``r`` if ``G`` is r-regular of even order with every odd cut at least ``r``."""
    r = is_regular(G)
    if r is None or G.n % 2 or G.n == 0:
        return None
    for comp in G.components():
        if len(comp) % 2:
            return None
        H, _ = G.induced(comp)
        if min_odd_cut(H).weight < r:
            return None
    return r
