"""Records of where each gadget lives inside a composed graph.

The provenance of a construction is also written to disk as a JSON sidecar
next to the edge list (see :meth:`Provenance.to_dict`).  Sidecar schema,
version 1::

    {
      "schema": "matchfactory.provenance/1",
      "family": "H", "k": 1, "variant": "base",
      "n": 60, "m": 120,
      "blocks": [
        {"role": "Q", "index": 0,
         "vertices": [...],             # host id of local vertex 0, 1, ...
         "marked_vertices": {"u_Q": 5, "z1": 0, "z2": 10},
         "marked_edges": {"U1": [...], "U2": [...], "V1": [...], "V2": [...]}},
        ...
      ],
      "edge_sets": {"z2_triangle": [...]},
      "matching_copies": [{"name": "N0", "start": 120, "stop": 150}, ...]
    }

``matching_copies`` lists half-open edge-id ranges that hold the copies
appended by a matching-addition step, in the order they were appended.
"""

from __future__ import annotations

import dataclasses
from typing import Any

SCHEMA = "matchfactory.provenance/1"

# Local layout of Q_k: copy 1 of P_k occupies 0..9 with its u1 (local 5) being
# the shared vertex u_Q; copy 2 adds v1..v5 at 10..14 and u2..u5 at 15..18.
Q_ORDER = 19
Q_UQ, Q_Z1, Q_Z2 = 5, 0, 10
Q_COPY_LOCAL = (
    tuple(range(10)),
    (10, 11, 12, 13, 14, 5, 15, 16, 17, 18),
)


@dataclasses.dataclass(frozen=True, eq=False)
class BlockEmbedding:
    role: str          # "P", "Q" or "T"
    index: int
    vertices: tuple[int, ...]
    marked_vertices: dict[str, int] = dataclasses.field(default_factory=dict)
    marked_edges: dict[str, tuple[int, ...]] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("block vertex map is not injective")
        if self.role not in ("P", "Q", "T"):
            raise ValueError(f"unknown block role {self.role!r}")
        if self.role == "Q":
            if len(self.vertices) != Q_ORDER:
                raise ValueError("a Q block has 19 vertices")
            for key in ("u_Q", "z1", "z2"):
                if key not in self.marked_vertices:
                    raise ValueError(f"Q block lacks marked vertex {key}")

    def copy_vertices(self, copy: int) -> dict[int, int]:
        """Host vertex -> Petersen vertex for Petersen copy 1 or 2 of a Q block."""
        if self.role == "P":
            return {h: i for i, h in enumerate(self.vertices)}
        if self.role != "Q":
            raise ValueError("only P and Q blocks carry Petersen copies")
        return {self.vertices[loc]: pv for pv, loc in enumerate(Q_COPY_LOCAL[copy - 1])}

    def to_dict(self) -> dict[str, Any]:
        return {
            "role": self.role,
            "index": self.index,
            "vertices": list(self.vertices),
            "marked_vertices": dict(self.marked_vertices),
            "marked_edges": {k: list(v) for k, v in self.marked_edges.items()},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BlockEmbedding":
        return cls(d["role"], d["index"], tuple(d["vertices"]),
                   dict(d.get("marked_vertices", {})),
                   {k: tuple(v) for k, v in d.get("marked_edges", {}).items()})

    def shifted(self, voff: int, eoff: int, index: int | None = None) -> "BlockEmbedding":
        return BlockEmbedding(
            self.role, self.index if index is None else index,
            tuple(x + voff for x in self.vertices),
            {k: x + voff for k, x in self.marked_vertices.items()},
            {k: tuple(e + eoff for e in v) for k, v in self.marked_edges.items()},
        )


@dataclasses.dataclass(frozen=True)
class MatchingCopy:
    name: str
    start: int
    stop: int

    @property
    def ids(self) -> range:
        return range(self.start, self.stop)


@dataclasses.dataclass(eq=False)
class Provenance:
    family: str
    k: int | None
    variant: str | None
    n: int
    m: int
    blocks: list[BlockEmbedding] = dataclasses.field(default_factory=list)
    edge_sets: dict[str, tuple[int, ...]] = dataclasses.field(default_factory=dict)
    matching_copies: list[MatchingCopy] = dataclasses.field(default_factory=list)

    def blocks_of(self, role: str) -> list[BlockEmbedding]:
        return [b for b in self.blocks if b.role == role]

    def copies_named(self, name: str) -> list[MatchingCopy]:
        return [c for c in self.matching_copies if c.name == name]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "family": self.family,
            "k": self.k,
            "variant": self.variant,
            "n": self.n,
            "m": self.m,
            "blocks": [b.to_dict() for b in self.blocks],
            "edge_sets": {k: list(v) for k, v in self.edge_sets.items()},
            "matching_copies": [dataclasses.asdict(c) for c in self.matching_copies],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Provenance":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported provenance schema {d.get('schema')!r}")
        return cls(
            d["family"], d["k"], d["variant"], d["n"], d["m"],
            [BlockEmbedding.from_dict(b) for b in d["blocks"]],
            {k: tuple(v) for k, v in d["edge_sets"].items()},
            [MatchingCopy(**c) for c in d["matching_copies"]],
        )
