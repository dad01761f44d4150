"""DIMACS CNF encoding of "G has m pairwise disjoint perfect matchings".

Variable ``x(e, i) = i * |E| + e + 1`` says edge ``e`` belongs to matching
``i`` (``0 <= i < m``).  Clauses, in this order:

1. for each matching ``i`` and each vertex ``v`` (both ascending): the
   at-least-one clause over the edges at ``v`` (increasing id), followed by
   the pairwise at-most-one clauses ``-x(e,i) -x(f,i)`` for ``e < f``;
2. for each edge ``e`` and each pair ``i < j``: ``-x(e,i) -x(e,j)``.

Output is ``p cnf <vars> <clauses>`` on the first line and one clause per
line, literals separated by single spaces and terminated by `` 0``.  A vertex
without edges yields the empty clause ``0``.
"""

from __future__ import annotations

import itertools

from .graph import Multigraph


def cnf_clauses(G: Multigraph, m: int) -> tuple[int, list[list[int]]]:
    if m < 1:
        raise ValueError("m must be at least 1")
    E = G.m

    def x(e, i):
        return i * E + e + 1

    clauses: list[list[int]] = []
    for i in range(m):
        for v in range(G.n):
            inc = G.incidence[v]
            clauses.append([x(e, i) for e in inc])
            clauses.extend([-x(e, i), -x(f, i)] for e, f in itertools.combinations(inc, 2))
    for e in range(E):
        clauses.extend([-x(e, i), -x(e, j)] for i, j in itertools.combinations(range(m), 2))
    return m * E, clauses


def cnf_export(G: Multigraph, m: int) -> str:
    nvars, clauses = cnf_clauses(G, m)
    lines = [f"p cnf {nvars} {len(clauses)}"]
    lines += [" ".join(map(str, c + [0])) for c in clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    """Read back a DIMACS document (comments allowed) as ``(nvars, clauses)``."""
    nvars, expected, clauses = None, None, []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            _, fmt, nv, nc = line.split()
            if fmt != "cnf":
                raise ValueError(f"not a CNF problem line: {line!r}")
            nvars, expected = int(nv), int(nc)
            continue
        lits = [int(t) for t in line.split()]
        if not lits or lits[-1] != 0:
            raise ValueError(f"clause not terminated by 0: {line!r}")
        clauses.append(lits[:-1])
    if nvars is None or expected != len(clauses):
        raise ValueError("missing problem line or clause count mismatch")
    return nvars, clauses


def decode_model(G: Multigraph, m: int, model) -> list[frozenset[int]]:
    """Matchings encoded by a satisfying assignment (list of true/false literals)."""
    true = {lit for lit in model if lit > 0}
    return [frozenset(e for e in range(G.m) if i * G.m + e + 1 in true) for i in range(m)]
