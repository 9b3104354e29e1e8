"""Immutable simple graphs with role-tagged vertices.

Vertices are dense integers ``0..vertex_count-1``.  Edges are stored as
canonical ``(min, max)`` pairs so that edge sets hash and compare
deterministically.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import InputError

Edge = tuple[int, int]


class Role(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"
    CENTER = "O"
    A = "a"
    B = "b"
    C = "c"
    SPECIAL = "s"
    INTERIOR = "interior"

    @property
    def is_outmost(self) -> bool:
        return self in (Role.X, Role.Y, Role.Z)

    @property
    def is_extreme(self) -> bool:
        return self in (Role.A, Role.B, Role.C)


OUTMOST = (Role.X, Role.Y, Role.Z)
EXTREMES = (Role.A, Role.B, Role.C)


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GraphStats:
    num_vertices: int
    num_edges: int
    degree_histogram: dict[int, int]


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """An undirected simple graph plus per-vertex metadata.

    Instances are treated as immutable; build them through
    :meth:`from_edges` so the adjacency lists are derived consistently.
    """

    vertex_count: int
    edges: frozenset[Edge]
    roles: Mapping[int, Role]
    birth_iteration: Mapping[int, int]
    labels: Mapping[int, str] | None = None
    family: str = "graph"
    n: int | None = None
    adjacency: tuple[frozenset[int], ...] = field(default=(), repr=False)

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        roles: Mapping[int, Role] | None = None,
        birth_iteration: Mapping[int, int] | None = None,
        labels: Mapping[int, str] | None = None,
        family: str = "graph",
        n: int | None = None,
    ) -> LabeledGraph:
        if vertex_count < 0:
            raise InputError("vertex_count must be nonnegative")
        canon = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            canon.add(canonical_edge(u, v))
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        full_roles = {v: Role.INTERIOR for v in range(vertex_count)}
        if roles:
            full_roles.update(roles)
        births = dict(birth_iteration) if birth_iteration else {v: 0 for v in range(vertex_count)}
        return cls(
            vertex_count=vertex_count,
            edges=frozenset(canon),
            roles=full_roles,
            birth_iteration=births,
            labels=dict(labels) if labels is not None else None,
            family=family,
            n=n,
            adjacency=tuple(frozenset(a) for a in adj),
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertex_of(self, role: Role | str) -> int:
        """Return the unique vertex carrying ``role``."""
        role = Role(role)
        found = [v for v, r in self.roles.items() if r is role]
        if len(found) != 1:
            raise InputError(f"graph has {len(found)} vertices with role {role.value!r}")
        return found[0]

    def vertices_with_role(self, role: Role | str) -> list[int]:
        role = Role(role)
        return sorted(v for v, r in self.roles.items() if r is role)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and canonical_edge(u, v) in self.edges

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise InputError(f"vertex {v!r} out of range [0, {self.vertex_count})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.edges == other.edges
            and dict(self.roles) == dict(other.roles)
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))


def neighbors(g: LabeledGraph, v: int) -> frozenset[int]:
    g._check_vertex(v)
    return g.adjacency[v]


def is_matching(g: LabeledGraph, m: Iterable[tuple[int, int]]) -> bool:
    """True iff no two edges of ``m`` share an endpoint.

    Raises:
        InputError: if an edge of ``m`` is not an edge of ``g``.
    """
    seen: set[int] = set()
    ok = True
    for u, v in m:
        e = canonical_edge(u, v)
        if e not in g.edges:
            raise InputError(f"edge {e} is not in the graph")
        if u in seen or v in seen:
            ok = False
        seen.add(u)
        seen.add(v)
    return ok


def is_dominating_set(g: LabeledGraph, d: Iterable[int]) -> bool:
    chosen = set(d)
    for v in chosen:
        g._check_vertex(v)
    for v in range(g.vertex_count):
        if v not in chosen and not (g.adjacency[v] & chosen):
            return False
    return True


def delete_vertices(g: LabeledGraph, u: Iterable[int]) -> tuple[LabeledGraph, dict[int, int]]:
    """Induced subgraph on the vertices not in ``u``.

    Returns the new graph and a map from old vertex ids to new ones; the
    surviving vertices keep their relative order.
    """
    removed = set(u)
    for v in removed:
        g._check_vertex(v)
    old_to_new: dict[int, int] = {}
    for v in range(g.vertex_count):
        if v not in removed:
            old_to_new[v] = len(old_to_new)
    edges = [
        (old_to_new[a], old_to_new[b])
        for a, b in g.edges
        if a in old_to_new and b in old_to_new
    ]
    sub = LabeledGraph.from_edges(
        len(old_to_new),
        edges,
        roles={old_to_new[v]: r for v, r in g.roles.items() if v in old_to_new},
        birth_iteration={old_to_new[v]: b for v, b in g.birth_iteration.items() if v in old_to_new},
        labels=(
            {old_to_new[v]: s for v, s in g.labels.items() if v in old_to_new}
            if g.labels is not None
            else None
        ),
        family=g.family,
        n=g.n,
    )
    return sub, old_to_new


def stats(g: LabeledGraph) -> GraphStats:
    hist = Counter(len(a) for a in g.adjacency)
    return GraphStats(g.vertex_count, g.num_edges, dict(sorted(hist.items())))


def is_connected(g: LabeledGraph) -> bool:
    if g.vertex_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


# --- serialization ---------------------------------------------------------


def to_edgelist(g: LabeledGraph) -> str:
    lines = [f"# family={g.family} n={g.n} vertices={g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> LabeledGraph:
    """Parse the edge-list format written by :func:`to_edgelist`.

    Roles are not part of this format; every vertex comes back interior.
    """
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise InputError("edge list must start with a '# family=... n=... vertices=...' header")
    header = dict(tok.split("=", 1) for tok in lines[0][1:].split())
    try:
        vertex_count = int(header["vertices"])
    except (KeyError, ValueError) as exc:
        raise InputError("edge list header lacks a vertex count") from exc
    n = header.get("n")
    edges = []
    for line in lines[1:]:
        if line.strip():
            a, b = line.split()
            edges.append((int(a), int(b)))
    return LabeledGraph.from_edges(
        vertex_count,
        edges,
        family=header.get("family", "graph"),
        n=int(n) if n not in (None, "None") else None,
    )


def to_json_dict(g: LabeledGraph) -> dict:
    out = {
        "family": g.family,
        "n": g.n,
        "vertices": g.vertex_count,
        "edges": [list(e) for e in g.sorted_edges()],
        "roles": {str(v): g.roles[v].value for v in range(g.vertex_count)},
    }
    if g.labels is not None:
        out["labels"] = {str(v): g.labels[v] for v in range(g.vertex_count)}
    return out


def to_json(g: LabeledGraph) -> str:
    return json.dumps(to_json_dict(g), indent=None, separators=(",", ":")) + "\n"


def from_json(text: str | dict) -> LabeledGraph:
    data = json.loads(text) if isinstance(text, str) else text
    labels = data.get("labels")
    return LabeledGraph.from_edges(
        int(data["vertices"]),
        [tuple(e) for e in data["edges"]],
        roles={int(k): Role(v) for k, v in data.get("roles", {}).items()},
        labels={int(k): v for k, v in labels.items()} if labels is not None else None,
        family=data.get("family", "graph"),
        n=data.get("n"),
    )
