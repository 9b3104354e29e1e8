"""Brute-force reference solvers for tiny graphs, plus graph strategies."""

from itertools import combinations

from hypothesis import strategies as st

from fgc.graph_core import LabeledGraph, Role


def brute_matchings(g, cover=(), vacate=()):
    """(max size, count) over every edge subset; (None, 0) if infeasible."""
    edges = sorted(g.edges)
    best, count = None, 0
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            used = [v for e in sub for v in e]
            if len(used) != len(set(used)):
                continue
            s = set(used)
            if not set(cover) <= s or s & set(vacate):
                continue
            if best is None or r > best:
                best, count = r, 1
            elif r == best:
                count += 1
    return best, count


def brute_domination(g, include=(), exclude=()):
    best, sets = None, []
    V = range(g.vertex_count)
    for r in range(g.vertex_count + 1):
        for sub in combinations(V, r):
            s = set(sub)
            if not set(include) <= s or s & set(exclude):
                continue
            dominated = set(s)
            for v in s:
                dominated |= g.adjacency[v]
            if len(dominated) == g.vertex_count:
                sets.append(frozenset(s))
        if sets:
            return r, sorted(sets, key=sorted)
    return None, []


@st.composite
def small_graphs(draw, max_vertices=8, max_edges=12):
    V = draw(st.integers(3, max_vertices))
    pairs = list(combinations(range(V), 2))
    edges = draw(st.lists(st.sampled_from(pairs), max_size=max_edges, unique=True))
    roles = {0: Role.X, 1: Role.Y, 2: Role.Z}
    return LabeledGraph.from_edges(V, edges, roles=roles)
