"""Cross-validation of exhaustive search, recursions and constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import recurrence as rec
from .generators import (
    SELF_SIMILAR,
    gen_apollonian_iterative,
    gen_apollonian_selfsimilar,
    gen_ext_hanoi,
    gen_hanoi,
    hanoi_adjacent,
)
from .graph_core import EXTREMES, delete_vertices, is_dominating_set, is_matching, stats
from .growth import QUOTED_Z, z_bounds
from .oracle import (
    count_perfect_matchings,
    enumerate_mds,
    max_matching_search,
    min_domination_search,
    oracle_domination_profile,
    oracle_matching_profile,
    restricted_mds_counts,
)
from .structures import (
    build_apollonian_mds,
    build_code_class,
    build_perfect_matching_ext_hanoi,
    build_pm_hanoi_minus_extremes,
    classify_extreme_types,
)

FAULTS = ("matching-base",)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        out = fn()
    except Exception as exc:  # a crash is a failed identity, not an abort
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return Check(name, bool(out[0]), out[1])
    return Check(name, bool(out))


def _cmp(got, want) -> tuple[bool, str]:
    return got == want, f"got {got}, expected {want}"


def run_checks(max_oracle_n: int = 4, fault: str | None = None) -> Iterator[Check]:
    """Yield one :class:`Check` per identity.

    ``fault`` deliberately corrupts one recursion input so callers can
    confirm a mismatch is detected.
    """
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    count_base = rec.MATCHING_COUNT_BASE
    if fault == "matching-base":
        count_base = (count_base[0], count_base[1], count_base[2], count_base[3] + 1)

    # generators
    yield _check(
        "apollonian constructions agree on stats, n<=6",
        lambda: all(
            stats(gen_apollonian_iterative(n)) == stats(gen_apollonian_selfsimilar(n)) for n in range(0, 7)
        ),
    )
    yield _check(
        "apollonian vertex/edge formulas, n<=6",
        lambda: all(
            stats(gen_apollonian_iterative(n)).num_vertices == rec.vertex_count_apollonian(n)
            and stats(gen_apollonian_iterative(n)).num_edges == rec.edge_count_apollonian(n)
            for n in range(0, 7)
        ),
    )
    yield _check(
        "hanoi constructions agree on edge sets, n<=7",
        lambda: all(gen_hanoi(n).edges == gen_hanoi(n, SELF_SIMILAR).edges for n in range(1, 8)),
    )
    yield _check(
        "hanoi adjacency satisfies the move rule, n<=5",
        lambda: all(
            hanoi_adjacent(g.labels[u], g.labels[v]) for n in range(1, 6) for g in [gen_hanoi(n)] for u, v in g.edges
        ),
    )
    yield _check(
        "extended hanoi graphs are 3-regular, n<=7",
        lambda: all(stats(gen_ext_hanoi(n)).degree_histogram == {3: 3**n + 1} for n in range(1, 8)),
    )

    # matchings on A_n
    for n in range(1, min(max_oracle_n, 3) + 1):
        def matching_n(n=n):
            prof = oracle_matching_profile(n)
            sizes = rec.matching_sizes(n)
            ok = prof.beta == sizes[:4] and prof.matching_number == sizes[4]
            if n >= 3:
                ok = ok and prof.counts == rec.matching_count_series(n, count_base)
                return ok, f"oracle {prof.beta} {prof.counts}"
            return ok, f"oracle sizes {prof.beta}"

        yield _check(f"A_{n} matching profile: oracle == recursion", matching_n)
    if max_oracle_n >= 3:
        yield _check(
            "A_3 profile: self-similar construction == iterative",
            lambda: oracle_matching_profile(3, gen_apollonian_selfsimilar(3))
            == oracle_matching_profile(3),
        )
    if max_oracle_n >= 4:
        yield _check(
            "A_4 matching number and count",
            lambda: _cmp(
                (lambda r: (r.max_size, r.count_at_max))(max_matching_search(gen_apollonian_iterative(4))),
                (rec.matching_sizes(4)[4], rec.matching_count_series(4, count_base)[3]),
            ),
        )

    # perfect matchings of the extended Hanoi graph
    for n in range(1, min(max_oracle_n, 3) + 1):
        want = 3 if n == 1 else rec.hanoi_matching_counts(n).perfect_ext
        yield _check(
            f"S+_{n} perfect matchings", lambda n=n, want=want: _cmp(count_perfect_matchings(gen_ext_hanoi(n)), want)
        )
    for n in range(2, min(max_oracle_n, 3) + 1):
        def hanoi_counts(n=n):
            h = gen_hanoi(n)
            ext = [h.vertex_of(r) for r in EXTREMES]
            three = max_matching_search(delete_vertices(h, ext)[0])
            one = max_matching_search(delete_vertices(h, ext[:1])[0])
            r = rec.hanoi_matching_counts(n)
            return _cmp(
                (three.max_size, three.count_at_max, one.count_at_max), (r.beta0, r.minus_three, r.minus_one)
            )

        yield _check(f"H_{n} minus extremes matching counts", hanoi_counts)

    # domination on A_n
    for n in range(1, max_oracle_n + 1):
        def domination_n(n=n):
            prof = oracle_domination_profile(n)
            sizes = rec.domination_sizes(n)
            ok = prof.gamma == sizes[:4] and prof.domination_number == sizes[4]
            if n >= 4:
                ok = ok and prof.counts == rec.domination_counts(n)
            return ok, f"oracle {prof.gamma} {prof.counts}"

        yield _check(f"A_{n} domination profile: oracle == recursion", domination_n)
    if max_oracle_n >= 3:
        def restricted_n3():
            w, x, y, z = restricted_mds_counts(gen_apollonian_iterative(3))
            r = rec.domination_counts(3)
            whole = min_domination_search(gen_apollonian_iterative(3)).count_at_min
            return _cmp((whole, x, y, z, w), (r[0], r[1], r[2], r[3], rec.DOMINATION_COUNT_SEED[0]))

        yield _check("A_3 MDS counts seeding the recursion", restricted_n3)
    if max_oracle_n >= 4:
        yield _check(
            "A_4 unique MDS == first-iteration vertices",
            lambda: _cmp(enumerate_mds(gen_apollonian_iterative(4)), [frozenset(build_apollonian_mds(4))]),
        )

    # domination on the extended Hanoi graph
    want_counts = {1: 4, 2: 22, 3: 4}
    for n in range(1, min(max_oracle_n, 3) + 1):
        yield _check(
            f"S+_{n} domination number and MDS count",
            lambda n=n: _cmp(
                (lambda r: (r.min_size, r.count_at_min))(min_domination_search(gen_ext_hanoi(n))),
                (rec.ext_hanoi_domination_number(n)[0], want_counts[n]),
            ),
        )
    if max_oracle_n >= 3:
        def classes_n3():
            g = gen_ext_hanoi(3)
            classes = sorted((frozenset(build_code_class(3, k)) for k in range(1, 5)), key=sorted)
            mds = enumerate_mds(g)
            bad = [d for d in mds if classify_extreme_types(g, d) == ("I", "I", "C")]
            return classes == sorted(mds, key=sorted) and not bad, f"{len(mds)} MDSs"

        yield _check("S+_3 MDSs == parity classes, no I-I-C type", classes_n3)

    # constructions
    for n in (1, 3, 5):
        def code_classes(n=n):
            g = gen_ext_hanoi(n)
            classes = [build_code_class(n, k) for k in range(1, 5)]
            disjoint = sum(len(c) for c in classes) == g.vertex_count
            cover = set().union(*classes) == set(range(g.vertex_count))
            sized = all(len(c) == (3**n + 1) // 4 for c in classes)
            return disjoint and cover and sized and all(is_dominating_set(g, c) for c in classes)

        yield _check(f"S+_{n} parity classes partition and dominate", code_classes)
    yield _check(
        "perfect matching witnesses, S+_n n<=5",
        lambda: all(
            is_matching(g, m) and 2 * len(m) == g.vertex_count
            for n in range(1, 6)
            for g, m in [(gen_ext_hanoi(n), build_perfect_matching_ext_hanoi(n))]
        ),
    )

    def pm_minus_extremes():
        for n in range(2, 6):
            h = gen_hanoi(n)
            sub, remap = delete_vertices(h, [h.vertex_of(r) for r in EXTREMES])
            m = {(remap[a], remap[b]) for a, b in build_pm_hanoi_minus_extremes(n)}
            if not (is_matching(sub, m) and 2 * len(m) == sub.vertex_count):
                return False
        return True

    yield _check("perfect matching witnesses, H_n minus extremes n<=5", pm_minus_extremes)
    yield _check("unique Apollonian MDS witnesses, n=4..7", lambda: all(build_apollonian_mds(n) for n in range(4, 8)))

    # growth constant
    def growth7():
        b = z_bounds(7)
        return b.gap < 1e-2 and b.lower <= QUOTED_Z <= b.upper, f"[{b.lower:.10f}, {b.upper:.10f}]"

    yield _check("growth bracket at m=7 holds 0.43017 with gap < 1e-2", growth7)
