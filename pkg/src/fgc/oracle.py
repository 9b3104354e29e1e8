"""Exact exhaustive solvers used as ground truth.

Matchings are counted with a vertex-elimination search: vertices are taken
in a low-frontier order and the lowest undecided vertex is either left
vacant or matched to a later neighbour.  Every matching is produced by
exactly one branch, and sub-searches are memoised on the set of later
vertices already consumed, which keeps counts exact while avoiding
one-by-one enumeration.

Dominating sets are enumerated by branch and bound on the undominated
vertex with the fewest candidates.  A branch that picks the i-th candidate
forbids the earlier ones, so every set is reached exactly once; iterative
deepening on the set size makes the first non-empty level the minimum.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import InputError, ResourceLimitError
from .graph_core import OUTMOST, LabeledGraph, Role, delete_vertices
from .profiles import DominationProfile, MatchingProfile

DEFAULT_BUDGET = 10**9


def default_budget() -> int:
    raw = os.environ.get("FGC_ORACLE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class Constraint(str, Enum):
    COVER = "cover"
    VACATE = "vacate"
    INCLUDE = "include"
    EXCLUDE = "exclude"
    FREE = "free"


MATCHING_CONSTRAINTS = (Constraint.COVER, Constraint.VACATE, Constraint.FREE)
DOMINATION_CONSTRAINTS = (Constraint.INCLUDE, Constraint.EXCLUDE, Constraint.FREE)


@dataclass(frozen=True)
class ConditionedMatchingResult:
    max_size: int | None
    count_at_max: int


@dataclass(frozen=True)
class ConditionedDominationResult:
    min_size: int | None
    count_at_min: int


ConstraintMap = Mapping["Role | str | int", "Constraint | str"]


def resolve_constraints(
    g: LabeledGraph, constraints: ConstraintMap | None, allowed: tuple[Constraint, ...]
) -> dict[int, Constraint]:
    """Map role names or vertex ids to concrete vertices.

    Only outmost, center, extreme and special vertices may be constrained.
    """
    out: dict[int, Constraint] = {}
    for key, value in (constraints or {}).items():
        c = Constraint(value)
        if c not in allowed:
            raise InputError(f"constraint {c.value!r} does not apply to this problem")
        if isinstance(key, int) and not isinstance(key, bool):
            g._check_vertex(key)
            v = key
        else:
            v = g.vertex_of(key)
        if g.roles[v] is Role.INTERIOR:
            raise InputError(f"vertex {v} is interior and cannot carry a constraint")
        if c is not Constraint.FREE:
            out[v] = c
    return out


def _search_order(g: LabeledGraph) -> list[int]:
    """Greedy vertex order keeping the processed/unprocessed boundary small."""
    V = g.vertex_count
    adj = g.adjacency
    done: set[int] = set()
    frontier: set[int] = set()
    order: list[int] = []
    while len(order) < V:
        pool = frontier if frontier else (set(range(V)) - done)
        best = None
        best_key = None
        for v in sorted(pool):
            grow = sum(1 for w in adj[v] if w not in done and w not in frontier)
            key = (grow - (1 if v in frontier else 0), len(adj[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        order.append(best)
        done.add(best)
        frontier.discard(best)
        frontier.update(w for w in adj[best] if w not in done)
    return order


class _Budget:
    def __init__(self, limit: int | None) -> None:
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimitError(f"search exceeded its budget of {self.limit} node expansions")


def max_matching_search(
    g: LabeledGraph,
    constraints: ConstraintMap | None = None,
    budget: int | None = None,
) -> ConditionedMatchingResult:
    """Largest matching respecting the constraints, and how many attain it.

    ``constraints`` maps a role (``"X"``, ``Role.A``...) or vertex id to
    ``cover`` or ``vacate``.  When no matching satisfies the constraints the
    size is ``None`` and the count 0.

    Raises:
        ResourceLimitError: if more than ``budget`` search states are expanded.
    """
    cons = resolve_constraints(g, constraints, MATCHING_CONSTRAINTS)
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    V = g.vertex_count
    vacate = {pos[v] for v, c in cons.items() if c is Constraint.VACATE}
    cover = {pos[v] for v, c in cons.items() if c is Constraint.COVER}
    if cover & vacate:
        return ConditionedMatchingResult(None, 0)
    later: list[list[int]] = [[] for _ in range(V)]
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        if a in vacate or b in vacate:
            continue
        lo, hi = (a, b) if a < b else (b, a)
        later[lo].append(hi)
    for lst in later:
        lst.sort()
    must_cover = [i in cover for i in range(V)]
    tracker = _Budget(budget)
    memo: dict[tuple[int, int], tuple[int, int]] = {}
    NEG = -1

    def solve(i: int, used: int) -> tuple[int, int]:
        # ``used`` holds bits of vertices >= i that are already matched
        while i < V and used & 1:
            i += 1
            used >>= 1
        if i == V:
            return (0, 1)
        key = (i, used)
        hit = memo.get(key)
        if hit is not None:
            return hit
        tracker.tick()
        best, count = NEG, 0
        if not must_cover[i]:
            best, count = solve(i + 1, used >> 1)
        for j in later[i]:
            bit = 1 << (j - i)
            if used & bit:
                continue
            size, c = solve(i + 1, (used | bit) >> 1)
            if size == NEG:
                continue
            size += 1
            if size > best:
                best, count = size, c
            elif size == best:
                count += c
        memo[key] = (best, count)
        return memo[key]

    limit = sys.getrecursionlimit()
    if limit < 4 * V + 100:
        sys.setrecursionlimit(4 * V + 100)
    size, count = solve(0, 0)
    if size == NEG:
        return ConditionedMatchingResult(None, 0)
    return ConditionedMatchingResult(size, count)


def count_perfect_matchings(g: LabeledGraph, budget: int | None = None) -> int:
    if g.vertex_count % 2:
        return 0
    res = max_matching_search(g, budget=budget)
    if res.max_size is None or 2 * res.max_size != g.vertex_count:
        return 0
    return res.count_at_max


def min_domination_search(
    g: LabeledGraph,
    constraints: ConstraintMap | None = None,
    budget: int | None = None,
    collect: bool = False,
) -> ConditionedDominationResult | tuple[ConditionedDominationResult, list[frozenset[int]]]:
    """Smallest dominating set under membership constraints, with its count.

    With ``collect=True`` the minimum dominating sets themselves are also
    returned, as a sorted list of frozensets.
    """
    cons = resolve_constraints(g, constraints, DOMINATION_CONSTRAINTS)
    V = g.vertex_count
    full = (1 << V) - 1
    closed = [(1 << v) | sum(1 << w for w in g.adjacency[v]) for v in range(V)]
    include = [v for v, c in cons.items() if c is Constraint.INCLUDE]
    excluded_mask = sum(1 << v for v, c in cons.items() if c is Constraint.EXCLUDE)
    base_dom = 0
    for v in include:
        base_dom |= closed[v]
    base_chosen = sum(1 << v for v in include)
    tracker = _Budget(budget)
    found: list[int] = []

    def candidates(v: int, blocked: int) -> list[int]:
        m = closed[v] & ~blocked
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def search(k: int, dominated: int, chosen: int, blocked: int) -> int:
        tracker.tick()
        if dominated == full:
            if k == 0:
                if collect:
                    found.append(chosen)
                return 1
            return 0
        if k == 0:
            return 0
        undominated = full & ~dominated
        # pick the undominated vertex with fewest usable dominators
        pick, pick_cands = -1, None
        m = undominated
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            cands = candidates(v, blocked)
            if not cands:
                return 0
            if pick_cands is None or len(cands) < len(pick_cands):
                pick, pick_cands = v, cands
                if len(cands) == 1:
                    break
        # k dominators can cover at most the k best remaining gains
        need = undominated.bit_count()
        gains = sorted(
            ((closed[u] & undominated).bit_count() for u in range(V) if not (blocked >> u) & 1),
            reverse=True,
        )
        if sum(gains[:k]) < need:
            return 0
        total = 0
        extra = 0
        for u in pick_cands:
            total += search(k - 1, dominated | closed[u], chosen | (1 << u), blocked | extra | (1 << u))
            extra |= 1 << u
        return total

    blocked0 = excluded_mask | base_chosen
    # include and exclude on the same vertex is unsatisfiable
    if any((excluded_mask >> v) & 1 for v in include):
        return (ConditionedDominationResult(None, 0), []) if collect else ConditionedDominationResult(None, 0)
    for k in range(0, V - len(include) + 1):
        found.clear()
        count = search(k, base_dom, base_chosen, blocked0)
        if count:
            result = ConditionedDominationResult(len(include) + k, count)
            if collect:
                sets = sorted(
                    (frozenset(v for v in range(V) if (c >> v) & 1) for c in found),
                    key=sorted,
                )
                return result, sets
            return result
    if collect:
        return ConditionedDominationResult(None, 0), []
    return ConditionedDominationResult(None, 0)


def enumerate_mds(g: LabeledGraph, constraints: ConstraintMap | None = None, budget: int | None = None) -> list[frozenset[int]]:
    _, sets = min_domination_search(g, constraints, budget, collect=True)
    return sets


# --- Apollonian profiles ---------------------------------------------------

# outmost coverage patterns for exactly k covered/included, X first
_PATTERNS = {
    0: (False, False, False),
    1: (True, False, False),
    2: (True, True, False),
    3: (True, True, True),
}


def _pattern(k: int, yes: Constraint, no: Constraint) -> dict[Role, Constraint]:
    return {r: (yes if flag else no) for r, flag in zip(OUTMOST, _PATTERNS[k])}


def oracle_matching_profile(n: int, graph: LabeledGraph | None = None, budget: int | None = None) -> MatchingProfile:
    """Conditioned matching sizes and counts of A_n by exhaustive search.

    ``graph`` lets the caller pass an alternative construction of A_n.
    """
    if graph is None:
        from .generators import gen_apollonian_iterative

        graph = gen_apollonian_iterative(n)
    sized = [
        max_matching_search(graph, _pattern(k, Constraint.COVER, Constraint.VACATE), budget)
        for k in range(4)
    ]
    # the two-covered count is defined with X vacant and Y, Z covered
    two = max_matching_search(
        graph, {Role.X: Constraint.VACATE, Role.Y: Constraint.COVER, Role.Z: Constraint.COVER}, budget
    )
    free = max_matching_search(graph, None, budget)
    return MatchingProfile(
        n=n,
        beta=tuple(r.max_size for r in sized),
        matching_number=free.max_size,
        all_vacant=sized[0].count_at_max,
        one_covered=sized[1].count_at_max,
        two_covered=two.count_at_max,
        maximum=free.count_at_max,
    )


def oracle_domination_profile(n: int, graph: LabeledGraph | None = None, budget: int | None = None) -> DominationProfile:
    if graph is None:
        from .generators import gen_apollonian_iterative

        graph = gen_apollonian_iterative(n)
    sized = [
        min_domination_search(graph, _pattern(k, Constraint.INCLUDE, Constraint.EXCLUDE), budget)
        for k in range(4)
    ]
    free = min_domination_search(graph, None, budget)
    X, Y, Z = (graph.vertex_of(r) for r in OUTMOST)
    deleted = []
    for removed in ({X, Y, Z}, {X, Y}, {X}):
        sub, _ = delete_vertices(graph, removed)
        deleted.append(min_domination_search(sub, None, budget).count_at_min)
    return DominationProfile(
        n=n,
        gamma=tuple(r.min_size for r in sized),
        domination_number=free.min_size,
        whole=free.count_at_min,
        minus_three=deleted[0],
        minus_two=deleted[1],
        minus_one=deleted[2],
    )


def restricted_mds_counts(graph: LabeledGraph, budget: int | None = None) -> tuple[int, int, int, int]:
    """MDS counts keeping only sets that hold every surviving outmost vertex.

    Same layout as the plain counts: whole graph, minus {X, Y, Z}, minus
    {X, Y}, minus {X}.  These are the quantities the self-similar gluing
    composes; from n = 4 on they equal the plain counts.
    """
    X, Y, Z = (graph.vertex_of(r) for r in OUTMOST)
    out = []
    for removed in (set(), {X, Y, Z}, {X, Y}, {X}):
        sub, remap = delete_vertices(graph, removed)
        keep = {remap[v] for v in (X, Y, Z) if v in remap}
        out.append(sum(1 for s in enumerate_mds(sub, budget=budget) if keep <= s))
    return tuple(out)
