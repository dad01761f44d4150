"""Edge-list documents and DOT export.

Edge-list document (canonical, UTF-8 JSON, LF line endings)::

    {
      "n": 3,
      "edges": [
        [0, 1],
        [1, 2]
      ]
    }

``n`` is the vertex count and ``edges`` the ordered edge list with 0-based
endpoints; the position in the list is the edge id.  Exactly two spaces of
indentation, one edge per line, ``", "`` between endpoints, a final newline.
An empty edge list is written as ``"edges": []``.  Any JSON with the same
content parses; the layout above is what :func:`serialize` emits.

DOT export::

    graph G {
      0;
      1;
      0 -- 1;
    }

one ``v;`` statement per vertex, then one ``a -- b;`` statement per edge in id
order, so parallel edges appear as repeated statements.
"""

from __future__ import annotations

import json

from .graph import GraphError, Multigraph


class ParseError(GraphError):
    """The document is not a well-formed edge list."""


def serialize(G: Multigraph) -> str:
    if not G.edges:
        return '{\n  "n": %d,\n  "edges": []\n}\n' % G.n
    body = ",\n".join(f"    [{a}, {b}]" for a, b in G.edges)
    return '{\n  "n": %d,\n  "edges": [\n%s\n  ]\n}\n' % (G.n, body)


def parse(text: str) -> Multigraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("document needs fields 'n' and 'edges'")
    n, edges = doc["n"], doc["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"'n' must be a non-negative integer, got {n!r}")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list")
    pairs = []
    for i, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"edge {i} is not a pair of integers: {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Multigraph(n, tuple(pairs))
    except GraphError as exc:  # loops, endpoints out of range
        raise ParseError(str(exc)) from exc


def to_dot(G: Multigraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f"  {a} -- {b};" for a, b in G.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_graph(G: Multigraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(G))
