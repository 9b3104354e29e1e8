"""Builders for Apollonian networks, Hanoi graphs and extended Hanoi graphs.

Each family has two constructions where the literature offers two
(iterative/self-similar for Apollonian networks, move-rule/self-similar for
Hanoi graphs) so that one can be checked against the other.
"""

from __future__ import annotations

import os
from itertools import product

from .errors import InputError, ResourceLimitError
from .graph_core import EXTREMES, LabeledGraph, Role

ITERATIVE = "iterative"
SELF_SIMILAR = "self-similar"
MOVE_RULE = "move-rule"

DEFAULT_MAX_N = int(os.environ.get("FGC_MAX_GENERATE_N", "16"))


def _check_n(n: int, minimum: int, max_n: int | None) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise InputError(f"n must be an integer >= {minimum}, got {n!r}")
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise ResourceLimitError(f"n={n} exceeds the generation cap {cap}")


# --- Apollonian networks ---------------------------------------------------


def gen_apollonian_iterative(n: int, max_n: int | None = None) -> LabeledGraph:
    """Grow A_n by inserting a vertex into every triangle made last round.

    Outmost vertices are 0, 1, 2 (X, Y, Z); the first inserted vertex is 3
    and carries the center role.  Vertices are numbered in creation order.
    """
    _check_n(n, 0, max_n)
    edges = [(0, 1), (1, 2), (0, 2)]
    births = {0: 0, 1: 0, 2: 0}
    fresh = [(0, 1, 2)]
    count = 3
    for t in range(1, n + 1):
        spawned = []
        for u, v, w in fresh:
            z = count
            count += 1
            births[z] = t
            edges.extend(((u, z), (v, z), (w, z)))
            spawned.extend(((u, v, z), (v, w, z), (w, u, z)))
        fresh = spawned
    roles = {0: Role.X, 1: Role.Y, 2: Role.Z}
    if n >= 1:
        roles[3] = Role.CENTER
    return LabeledGraph.from_edges(
        count, edges, roles=roles, birth_iteration=births, family="apollonian", n=n
    )


def gen_apollonian_selfsimilar(n: int, max_n: int | None = None) -> LabeledGraph:
    """Build A_n by gluing three copies of A_{n-1}, starting from K4.

    Copy outmost vertices are identified as Y1=Z2 -> X, Y3=Z1 -> Y,
    Y2=Z3 -> Z, and X1=X2=X3 -> O.
    """
    _check_n(n, 0, max_n)
    if n == 0:
        return LabeledGraph.from_edges(
            3,
            [(0, 1), (1, 2), (0, 2)],
            roles={0: Role.X, 1: Role.Y, 2: Role.Z},
            family="apollonian",
            n=0,
        )
    # ids 0..3 are X, Y, Z, O throughout
    count = 4
    edges = {(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)}
    births = {0: 0, 1: 0, 2: 0, 3: 1}
    X, Y, Z, O = 0, 1, 2, 3
    for _ in range(1, n):
        # copy outmost (X_i, Y_i, Z_i) -> vertex of the glued graph
        corner_maps = [
            {X: O, Y: X, Z: Y},
            {X: O, Y: Z, Z: X},
            {X: O, Y: Y, Z: Z},
        ]
        new_edges: set[tuple[int, int]] = set()
        new_births = {X: 0, Y: 0, Z: 0, O: 1}
        new_count = 4
        for corners in corner_maps:
            local = dict(corners)
            for v in range(3, count):
                local[v] = new_count
                new_births[new_count] = births[v] + 1
                new_count += 1
            for u, v in edges:
                a, b = local[u], local[v]
                new_edges.add((a, b) if a < b else (b, a))
        edges, births, count = new_edges, new_births, new_count
    return LabeledGraph.from_edges(
        count,
        edges,
        roles={X: Role.X, Y: Role.Y, Z: Role.Z, O: Role.CENTER},
        birth_iteration=births,
        family="apollonian",
        n=n,
    )


def gen_apollonian(n: int, method: str = ITERATIVE, max_n: int | None = None) -> LabeledGraph:
    if method == ITERATIVE:
        return gen_apollonian_iterative(n, max_n)
    if method == SELF_SIMILAR:
        return gen_apollonian_selfsimilar(n, max_n)
    raise InputError(f"unknown Apollonian construction {method!r}")


# --- Hanoi graphs ----------------------------------------------------------


def hanoi_id(label: str | tuple[int, ...]) -> int:
    """Vertex id of a Hanoi label, smallest disk as most significant digit."""
    value = 0
    for ch in label:
        d = int(ch) if str(ch) in "012" else -1
        if d < 0:
            raise InputError(f"bad Hanoi label {label!r}: digits must be 0, 1 or 2")
        value = value * 3 + d
    return value


def hanoi_label(vid: int, n: int) -> str:
    digits = []
    for _ in range(n):
        vid, r = divmod(vid, 3)
        digits.append(str(r))
    return "".join(reversed(digits))


def hanoi_adjacent(xi: str, zeta: str) -> bool:
    """Legal single-disk move between two configurations.

    ``xi[i]`` is the peg of the (i+1)-th smallest disk.  The labels must
    differ in one position i, and every smaller disk must sit on the third
    peg so that disk i is on top of both the source and destination pegs.
    """
    if len(xi) != len(zeta):
        return False
    diff = [i for i, (p, q) in enumerate(zip(xi, zeta)) if p != q]
    if len(diff) != 1:
        return False
    i = diff[0]
    third = str(3 - int(xi[i]) - int(zeta[i]))
    return all(xi[j] == third for j in range(i))


def _hanoi_meta(n: int) -> tuple[dict[int, Role], dict[int, str]]:
    labels = {v: hanoi_label(v, n) for v in range(3**n)}
    roles = {hanoi_id(str(peg) * n): role for peg, role in enumerate(EXTREMES)}
    return roles, labels


def _hanoi_move_rule_edges(n: int) -> list[tuple[int, int]]:
    # enumerate legal moves per configuration instead of testing all pairs
    edges = []
    for label in product("012", repeat=n):
        xi = "".join(label)
        for i in range(n):
            if i and (xi[i] == xi[0] or any(xi[j] != xi[0] for j in range(1, i))):
                # disk i is covered, or the smaller disks are split
                continue
            if i == 0:
                targets = [p for p in "012" if p != xi[0]]
            else:
                targets = [str(3 - int(xi[0]) - int(xi[i]))]
            for peg in targets:
                a, b = hanoi_id(xi), hanoi_id(xi[:i] + peg + xi[i + 1 :])
                if a < b:
                    edges.append((a, b))
    return edges


def _hanoi_selfsimilar_edges(n: int) -> list[tuple[int, int]]:
    """Edges of H_n as labels, built from three copies of H_{n-1}."""
    label_edges = [("0", "1"), ("1", "2"), ("0", "2")]
    for m in range(1, n):
        nxt = []
        for k in "012":
            nxt.extend((a + k, b + k) for a, b in label_edges)
        for i, j in (("0", "1"), ("1", "2"), ("0", "2")):
            t = str(3 - int(i) - int(j))
            nxt.append((t * m + i, t * m + j))
        label_edges = nxt
    return [(hanoi_id(a), hanoi_id(b)) for a, b in label_edges]


def gen_hanoi(n: int, method: str = MOVE_RULE, max_n: int | None = None) -> LabeledGraph:
    """Tower of Hanoi graph H_n on the 3**n labels.

    The move-rule construction is the reference; the self-similar one
    should produce the same canonical edge set.
    """
    _check_n(n, 1, max_n)
    if method == MOVE_RULE:
        edges = _hanoi_move_rule_edges(n)
    elif method == SELF_SIMILAR:
        edges = _hanoi_selfsimilar_edges(n)
    else:
        raise InputError(f"unknown Hanoi construction {method!r}")
    roles, labels = _hanoi_meta(n)
    return LabeledGraph.from_edges(3**n, edges, roles=roles, labels=labels, family="hanoi", n=n)


def gen_ext_hanoi(n: int, method: str = MOVE_RULE, max_n: int | None = None) -> LabeledGraph:
    """H_n plus a special vertex (id 3**n) joined to the three extremes."""
    h = gen_hanoi(n, method, max_n)
    s = h.vertex_count
    extremes = [h.vertex_of(r) for r in EXTREMES]
    roles = dict(h.roles)
    roles[s] = Role.SPECIAL
    labels = dict(h.labels or {})
    labels[s] = "s"
    return LabeledGraph.from_edges(
        s + 1,
        list(h.edges) + [(e, s) for e in extremes],
        roles=roles,
        labels=labels,
        family="ext-hanoi",
        n=n,
    )


FAMILIES = ("apollonian", "hanoi", "ext-hanoi")


def generate(family: str, n: int, method: str | None = None, max_n: int | None = None) -> LabeledGraph:
    if family == "apollonian":
        return gen_apollonian(n, method or ITERATIVE, max_n)
    if family == "hanoi":
        return gen_hanoi(n, method or MOVE_RULE, max_n)
    if family == "ext-hanoi":
        return gen_ext_hanoi(n, method or MOVE_RULE, max_n)
    raise InputError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
