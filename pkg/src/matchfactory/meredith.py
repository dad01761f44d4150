"""Meredith extension and the exact vertex cover used to pick where to apply it."""

from __future__ import annotations

from .graph import GraphError, Multigraph, pair_key


def meredith_extend(G: Multigraph, v: int) -> Multigraph:
    """Replace ``v`` (degree ``t``) by a copy of ``K_{t,t-1}``.

    The former edges of ``v``, sorted by (neighbour, edge id), attach to the
    ``t`` degree-``(t-1)`` vertices ``a_1..a_t`` in that order.  ``a_1`` keeps
    the index of ``v``; ``a_2..a_t`` and then ``b_1..b_{t-1}`` are appended.
    Edge ids of ``G`` are kept; the ``t(t-1)`` gadget edges ``a_i b_j``
    (``i`` major) are appended.
    """
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} not in graph")
    inc = G.incidence[v]
    t = len(inc)
    if t < 2:
        raise GraphError(f"Meredith extension needs degree >= 2, vertex {v} has {t}")
    order = sorted(inc, key=lambda e: (G.other(e, v), e))
    a = [v] + list(range(G.n, G.n + t - 1))
    b = list(range(G.n + t - 1, G.n + 2 * t - 2))
    attach = {e: a[i] for i, e in enumerate(order)}
    edges = []
    for i, (x, y) in enumerate(G.edges):
        if i in attach:
            other = y if x == v else x
            edges.append((attach[i], other))
        else:
            edges.append((x, y))
    edges += [(ai, bj) for ai in a for bj in b]
    return Multigraph(G.n + 2 * t - 2, tuple(edges))


def meredith_simple(G: Multigraph, cover) -> Multigraph:
    """Extend every vertex of ``cover`` (ascending) to remove all parallel edges."""
    cover = sorted(set(cover))
    if any(not 0 <= x < G.n for x in cover):
        raise GraphError("cover contains vertices outside the graph")
    cs = set(cover)
    missed = [p for p, mu in G.multiplicity.items() if mu > 1 and not (p[0] in cs or p[1] in cs)]
    if missed:
        raise GraphError(f"cover misses parallel classes {missed[:5]}")
    H = G
    for x in cover:
        H = meredith_extend(H, x)
    return H


def is_vertex_cover(G: Multigraph, cover) -> bool:
    cs = set(cover)
    return all(a in cs or b in cs for a, b in G.edges)


def min_vertex_cover(G: Multigraph) -> list[int]:
    """Minimum vertex cover of the simple projection, by branch and bound.

    Degree-0 and degree-1 vertices are reduced away, components of maximum
    degree 2 (paths and cycles) are solved in closed form, and otherwise the
    search branches on a maximum-degree vertex ``v``: either ``v`` is in the
    cover or all its neighbours are.  Bounds: a greedy matching and
    ``edges / max degree``.
    """
    n = G.n
    adj = [0] * n
    for x, y in G.multiplicity:
        adj[x] |= 1 << y
        adj[y] |= 1 << x

    def bits(mask):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def lower_bound(alive):
        free, size = alive, 0
        edges, maxdeg = 0, 0
        for x in bits(alive):
            d = (adj[x] & alive).bit_count()
            edges += d
            maxdeg = max(maxdeg, d)
            if free >> x & 1:
                nb = adj[x] & free
                if nb:
                    y = (nb & -nb).bit_length() - 1
                    free &= ~((1 << x) | (1 << y))
                    size += 1
        edges //= 2
        return max(size, -(-edges // maxdeg) if maxdeg else 0)

    def small_degree_cover(alive):
        # every vertex has degree <= 2: disjoint paths and cycles
        cover, seen = [], 0
        for s in bits(alive):
            if seen >> s & 1:
                continue
            comp, stack = [], [s]
            seen |= 1 << s
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in bits(adj[x] & alive & ~seen):
                    seen |= 1 << y
                    stack.append(y)
            if len(comp) == 1:
                continue
            ends = [x for x in comp if (adj[x] & alive).bit_count() == 1]
            start = ends[0] if ends else comp[0]
            walk, prev, cur = [start], -1, start
            while True:
                nxt = [y for y in bits(adj[cur] & alive) if y != prev and y not in walk]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                walk.append(cur)
            # odd positions of a path / cycle walk form a minimum cover
            if ends:
                cover += walk[1::2]
            else:
                cover += walk[1::2] + ([walk[-1]] if len(walk) % 2 else [])
        return cover

    best = {"cover": _greedy_cover(G)}

    def solve(alive, taken):
        taken = list(taken)
        changed = True
        while changed:
            changed = False
            for x in bits(alive):
                if not alive >> x & 1:
                    continue
                nb = adj[x] & alive
                d = nb.bit_count()
                if d == 0:
                    alive &= ~(1 << x)
                    changed = True
                elif d == 1:
                    y = nb.bit_length() - 1
                    taken.append(y)
                    alive &= ~((1 << x) | (1 << y))
                    changed = True
        if len(taken) >= len(best["cover"]):
            return
        if not alive:
            best["cover"] = taken
            return
        if len(taken) + lower_bound(alive) >= len(best["cover"]):
            return
        v, dv = -1, -1
        for x in bits(alive):
            d = (adj[x] & alive).bit_count()
            if d > dv:
                v, dv = x, d
        if dv <= 2:
            cand = taken + small_degree_cover(alive)
            if len(cand) < len(best["cover"]):
                best["cover"] = cand
            return
        nb = adj[v] & alive
        solve(alive & ~nb & ~(1 << v), taken + list(bits(nb)))
        solve(alive & ~(1 << v), taken + [v])

    solve((1 << n) - 1, [])
    cover = sorted(best["cover"])
    assert is_vertex_cover(G, cover)
    return cover


def _greedy_cover(G: Multigraph) -> list[int]:
    remaining = set(pair_key(e) for e in G.edges)
    cover = []
    while remaining:
        deg: dict[int, int] = {}
        for x, y in remaining:
            deg[x] = deg.get(x, 0) + 1
            deg[y] = deg.get(y, 0) + 1
        x = max(sorted(deg), key=deg.get)
        cover.append(x)
        remaining = {p for p in remaining if x not in p}
    return cover
