"""Explicit witnesses: perfect matchings, the unique Apollonian MDS and the
four parity-code dominating sets of the extended Hanoi graph."""

from __future__ import annotations

from itertools import product

from .errors import InputError, InvariantViolation
from .generators import gen_apollonian_iterative, gen_ext_hanoi, hanoi_id
from .graph_core import EXTREMES, Edge, LabeledGraph, Role, canonical_edge, is_dominating_set, is_matching
from .recurrence import domination_sizes


def _label_edge(a: str, b: str) -> Edge:
    return canonical_edge(hanoi_id(a), hanoi_id(b))


def _pm_minus_extreme(n: int, peg: str) -> list[tuple[str, str]]:
    """Perfect matching of H_n minus the extreme with every disk on ``peg``."""
    if n == 1:
        a, b = (p for p in "012" if p != peg)
        return [(a, b)]
    out: list[tuple[str, str]] = []
    for k in "012":
        # every copy drops its own ``peg`` extreme
        out.extend((a + k, b + k) for a, b in _pm_minus_extreme(n - 1, peg))
    i, j = (k for k in "012" if k != peg)
    out.append((peg * (n - 1) + i, peg * (n - 1) + j))
    return out


def _pm_minus_extremes(n: int) -> list[tuple[str, str]]:
    if n == 1:
        return []
    out: list[tuple[str, str]] = []
    for k in "012":
        out.extend((a + k, b + k) for a, b in _pm_minus_extremes(n - 1))
    for i, j in (("0", "1"), ("1", "2"), ("0", "2")):
        t = str(3 - int(i) - int(j))
        out.append((t * (n - 1) + i, t * (n - 1) + j))
    return out


def build_perfect_matching_ext_hanoi(n: int) -> set[Edge]:
    """A perfect matching of the extended Hanoi graph on ``3**n + 1`` vertices.

    H_n minus its extreme ``2...2`` is matched recursively (each copy misses
    its own ``2`` extreme, the two vacant ones in copies 0 and 1 are
    bridged), and the special vertex takes the deleted extreme.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    edges = {_label_edge(a, b) for a, b in _pm_minus_extreme(n, "2")}
    special = 3**n
    edges.add(canonical_edge(hanoi_id("2" * n), special))
    return edges


def build_pm_hanoi_minus_extremes(n: int) -> set[Edge]:
    """Perfect matching of H_n minus its three extremes, in H_n vertex ids."""
    if n < 2:
        raise InputError("n must be >= 2")
    return {_label_edge(a, b) for a, b in _pm_minus_extremes(n)}


def build_apollonian_mds(n: int, graph: LabeledGraph | None = None) -> set[int]:
    """The unique minimum dominating set of A_n for n >= 4.

    It is the copy of A_{n-3} inside A_n, i.e. every vertex created in the
    first n - 3 iterations.
    """
    if n < 4:
        raise InputError("the MDS of A_n is unique only for n >= 4")
    g = graph if graph is not None else gen_apollonian_iterative(n)
    chosen = {v for v, t in g.birth_iteration.items() if t <= n - 3}
    gamma = domination_sizes(n)[4]
    if len(chosen) != gamma or not is_dominating_set(g, chosen):
        raise InvariantViolation(
            f"A_{n}: birth <= {n - 3} set has {len(chosen)} vertices, expected a dominating set of size {gamma}"
        )
    return chosen


def _digit_counts(label: str) -> tuple[int, int, int]:
    return label.count("0"), label.count("1"), label.count("2")


def in_code_class(label: str, k: int) -> bool:
    f0, f1, f2 = _digit_counts(label)
    if k == 1:
        return f0 % 2 == 0 and f1 % 2 == 0
    if k == 2:
        return f0 % 2 == 0 and f2 % 2 == 0
    if k == 3:
        return f1 % 2 == 0 and f2 % 2 == 0
    if k == 4:
        return f0 % 2 == 1 and f1 % 2 == 1 and f2 % 2 == 1
    raise InputError(f"class index must be 1..4, got {k}")


def build_code_class(n: int, k: int) -> set[int]:
    """Vertices of the extended Hanoi graph in parity class ``k`` (odd n only).

    Class membership depends on the parities of the digit counts of the
    Hanoi label; class 4 also holds the special vertex ``3**n``.
    """
    if n < 1 or n % 2 == 0:
        raise InputError(f"parity classes are defined for odd n, got {n}")
    out = {hanoi_id(lab) for lab in ("".join(t) for t in product("012", repeat=n)) if in_code_class(lab, k)}
    if k == 4:
        out.add(3**n)
    return out


def classify_extreme_types(g: LabeledGraph, d: set[int] | frozenset[int]) -> tuple[str, str, str]:
    """Type I/D/C of the extremes a, b, c relative to the Hanoi part of g.

    I: in ``d``.  D: adjacent to a member of ``d`` inside H_n.  C: neither,
    so dominated only by the special vertex.
    """
    if not is_dominating_set(g, d):
        raise InputError("d is not a dominating set")
    inside = {v for v in d if g.roles[v] is not Role.SPECIAL}
    types = []
    for role in EXTREMES:
        v = g.vertex_of(role)
        if v in d:
            types.append("I")
        elif g.adjacency[v] & inside:
            types.append("D")
        else:
            types.append("C")
    return tuple(types)


def verify_witnesses(n_odd: tuple[int, ...] = (1, 3, 5)) -> dict[str, bool]:
    """Validate the constructed witnesses with the definitional checkers."""
    results: dict[str, bool] = {}
    for n in range(1, 5):
        g = gen_ext_hanoi(n)
        m = build_perfect_matching_ext_hanoi(n)
        results[f"perfect matching S+_{n}"] = is_matching(g, m) and 2 * len(m) == g.vertex_count
    for n in n_odd:
        g = gen_ext_hanoi(n)
        classes = [build_code_class(n, k) for k in range(1, 5)]
        ok = all(is_dominating_set(g, c) and len(c) == (3**n + 1) // 4 for c in classes)
        ok = ok and set().union(*classes) == set(range(g.vertex_count))
        ok = ok and sum(len(c) for c in classes) == g.vertex_count
        results[f"code classes S+_{n}"] = ok
    return results
