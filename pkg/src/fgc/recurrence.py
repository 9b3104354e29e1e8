"""Exact evaluation of the self-similar recursions and their closed forms.

Every quantity with both a recursion and a closed form is computed both
ways and compared; a mismatch raises :class:`InvariantViolation`.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .errors import InputError, InvariantViolation, ResourceLimitError
from .profiles import DominationProfile, HanoiMatchingCounts, MatchingProfile

SIZE_N_CAP = 60
COUNT_N_CAP = 14

# hand-computed conditioned sizes for small n
MATCHING_BASE = {1: (0, 1, 1, 2), 2: (1, 2, 3, 3), 3: (4, 5, 6, 7)}
DOMINATION_BASE = {1: (1, 1, 2, 3), 2: (1, 2, 2, 3), 3: (3, 3, 3, 3)}
# (all vacant, X covered, Y and Z covered, maximum) at n = 3
MATCHING_COUNT_BASE = (108, 246, 480, 738)
# MDS counts at n = 3 restricted to sets holding every surviving outmost
# vertex: (whole graph, minus XYZ, minus XY, minus X)
DOMINATION_COUNT_SEED = (1, 1, 2, 1)


def _check(n: int, lo: int, cap: int | None, what: str) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < lo:
        raise InputError(f"{what} needs an integer n >= {lo}, got {n!r}")
    if cap is not None and n > cap:
        raise ResourceLimitError(f"{what}: n={n} exceeds the configured cap {cap}")


def vertex_count_apollonian(n: int) -> int:
    return (3**n + 5) // 2


def edge_count_apollonian(n: int) -> int:
    return 3 if n == 0 else (3 ** (n + 1) + 3) // 2


# --- matching sizes ----------------------------------------------------------


def matching_size_step(b: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """One step of the max-recursions for the conditioned matching sizes.

    All candidate configurations are evaluated, not only the winning one.
    """
    b0, b1, b2, b3 = b
    return (
        max(3 * b0, 2 * b0 + b1),
        max(2 * b0 + b1, 2 * b0 + b2, b0 + 2 * b1),
        max(2 * b0 + b3, b0 + b1 + b2, 3 * b1, b0 + 2 * b1, 2 * b0 + b2),
        max(b0 + b1 + b2, b0 + b1 + b3, b0 + 2 * b2, 3 * b1, 2 * b1 + b2),
    )


def matching_sizes_closed(n: int) -> tuple[int, int, int, int]:
    p = 3 ** (n - 1)
    return ((p - 1) // 2, (p + 1) // 2, (p + 3) // 2, (p + 5) // 2)


@lru_cache(maxsize=None)
def _matching_sizes_by_recursion(n: int) -> tuple[int, int, int, int]:
    if n == 3:
        return MATCHING_BASE[3]
    return matching_size_step(_matching_sizes_by_recursion(n - 1))


def matching_sizes(n: int, cap: int = SIZE_N_CAP) -> tuple[int, int, int, int, int]:
    """Return ``(beta0, beta1, beta2, beta3, matching_number)`` of A_n."""
    _check(n, 1, cap, "matching_sizes")
    if n < 3:
        b = MATCHING_BASE[n]
        return (*b, max(b))
    rec = _iterate(_matching_sizes_by_recursion, n)
    closed = matching_sizes_closed(n)
    if rec != closed:
        raise InvariantViolation(f"matching sizes at n={n}: recursion {rec} != closed form {closed}")
    return (*rec, max(rec))


def _iterate(fn, n: int):
    # warm the cache bottom-up so deep n never recurses far
    for k in range(3, n):
        fn(k)
    return fn(n)


# --- matching counts ---------------------------------------------------------


def matching_count_step(c: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    phi, theta, phi2, tau = c
    return (
        3 * theta * phi * phi,
        2 * phi2 * phi * phi + 4 * theta * theta * phi,
        tau * phi * phi + 8 * phi2 * theta * phi + 3 * theta**3,
        6 * tau * theta * phi + 6 * phi * phi2 * phi2 + 12 * theta * theta * phi2,
    )


def matching_count_series(n: int, base: tuple[int, int, int, int] = MATCHING_COUNT_BASE) -> tuple[int, int, int, int]:
    """Iterate the count recursion from an arbitrary n = 3 base, uncached."""
    c = base
    for _ in range(3, n):
        c = matching_count_step(c)
    return c


_count_table: list[tuple[int, int, int, int]] = [MATCHING_COUNT_BASE]
_count_lock = threading.Lock()


def matching_counts(n: int, cap: int = COUNT_N_CAP) -> tuple[int, int, int, int]:
    """Maximum-matching counts of A_n for n >= 3.

    Returns ``(all_vacant, one_covered, two_covered, maximum)``.
    """
    _check(n, 3, cap, "matching_counts")
    with _count_lock:
        while len(_count_table) <= n - 3:
            _count_table.append(matching_count_step(_count_table[-1]))
        return _count_table[n - 3]


def matching_profile(n: int) -> MatchingProfile:
    """Recursion-side profile; n in {1, 2} has sizes only (counts are None)."""
    sizes = matching_sizes(n)
    counts = matching_counts(n) if n >= 3 else (None, None, None, None)
    return MatchingProfile(n, sizes[:4], sizes[4], *counts)


# --- domination sizes --------------------------------------------------------


def domination_size_step(g: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """One step of the min-recursions for the conditioned domination sizes.

    Each entry lists the center-excluded configuration first, then the
    center-included one.  For exactly one outmost vertex the center-excluded
    term is gamma0 + 2*gamma1 - 1 (copy sums minus the doubly counted X).
    """
    g0, g1, g2, g3 = g
    return (
        min(3 * g0, 3 * g1 - 2),
        min(g0 + 2 * g1 - 1, 2 * g2 + g1 - 3),
        min(g2 + 2 * g1 - 2, g3 + 2 * g2 - 4),
        min(3 * g2 - 3, 3 * g3 - 5),
    )


def domination_sizes_closed(n: int) -> tuple[int, int, int, int]:
    p = 3 ** (n - 3)
    return (
        (p + 3 * 2 ** (n - 2) - 1) // 2,
        (p + 2 ** (n - 1) + 1) // 2,
        (p + 2 ** (n - 2) + 3) // 2,
        (p + 5) // 2,
    )


@lru_cache(maxsize=None)
def _domination_sizes_by_recursion(n: int) -> tuple[int, int, int, int]:
    if n == 3:
        return DOMINATION_BASE[3]
    return domination_size_step(_domination_sizes_by_recursion(n - 1))


def domination_sizes(n: int, cap: int = SIZE_N_CAP) -> tuple[int, int, int, int, int]:
    """Return ``(gamma0, gamma1, gamma2, gamma3, domination_number)`` of A_n."""
    _check(n, 1, cap, "domination_sizes")
    if n < 3:
        g = DOMINATION_BASE[n]
        return (*g, min(g))
    rec = _iterate(_domination_sizes_by_recursion, n)
    closed = domination_sizes_closed(n)
    if rec != closed:
        raise InvariantViolation(f"domination sizes at n={n}: recursion {rec} != closed form {closed}")
    return (*rec, min(rec))


# --- domination counts -------------------------------------------------------


@lru_cache(maxsize=1)
def _whole_mds_count_n3() -> int:
    from .generators import gen_apollonian_iterative
    from .oracle import min_domination_search

    return min_domination_search(gen_apollonian_iterative(3)).count_at_min


def domination_count_step(w: int, y: int, z: int) -> tuple[int, int, int]:
    """Advance the deleted-subgraph MDS counts ``(minus_three, minus_two, minus_one)``."""
    return (y**3, z * z * y, w * z * z)


def domination_counts(n: int, cap: int = COUNT_N_CAP) -> tuple[int, int, int, int]:
    """MDS counts ``(whole, minus_three, minus_two, minus_one)`` of A_n.

    At n = 3 the whole-graph count comes from exhaustive search, and the
    deleted-subgraph entries are the counts that feed the recursion: MDSs
    holding every surviving outmost vertex.  From n = 4 on every MDS holds
    all outmost vertices, so the restricted and plain counts coincide.
    """
    _check(n, 3, cap, "domination_counts")
    if n == 3:
        _, x, y, z = DOMINATION_COUNT_SEED
        return (_whole_mds_count_n3(), x, y, z)
    w, x, y, z = DOMINATION_COUNT_SEED
    for _ in range(3, n):
        x, y, z = domination_count_step(w, y, z)
        # the whole-graph MDS is unique from n = 4 on
        w = 1
    return (w, x, y, z)


def domination_profile(n: int) -> DominationProfile:
    sizes = domination_sizes(n)
    counts = domination_counts(n) if n >= 3 else (None, None, None, None)
    return DominationProfile(n, sizes[:4], sizes[4], *counts)


# --- Hanoi graphs ------------------------------------------------------------


def hanoi_pm_closed(n: int) -> int:
    return 2 ** ((3 ** (n - 1) - 1) // 2)


def hanoi_matching_counts(n: int, cap: int = 30) -> HanoiMatchingCounts:
    """Perfect-matching counts of H_n minus three / minus one extreme."""
    _check(n, 2, cap, "hanoi_matching_counts")
    three, one = 2, 2
    for _ in range(2, n):
        three, one = three**3 + one**3, one * one * three + one**3
    closed = hanoi_pm_closed(n)
    if not (three == one == closed):
        raise InvariantViolation(
            f"Hanoi matching counts at n={n}: recursion ({three}, {one}) != closed form {closed}"
        )
    return HanoiMatchingCounts(n, three, one, (3**n - 3) // 2, 3 * one)


def ext_hanoi_domination_number(n: int) -> tuple[int, int | None]:
    """Domination number of the extended Hanoi graph and, for odd n, its MDS count."""
    _check(n, 1, None, "ext_hanoi_domination_number")
    if n % 2:
        return (3**n + 1) // 4, 4
    return (3**n + 3) // 4, None


# --- small-n table ----------------------------------------------------------

TABLE1_ROWS = ("V", "all_vacant", "one_covered", "two_covered", "maximum")


def table1(max_n: int = 5) -> dict[str, list[int]]:
    """Rows of the small-n table; columns n <= 2 come from exhaustive search."""
    from .oracle import oracle_matching_profile

    rows: dict[str, list[int]] = {r: [] for r in TABLE1_ROWS}
    for n in range(1, max_n + 1):
        rows["V"].append(vertex_count_apollonian(n))
        if n <= 2:
            counts = oracle_matching_profile(n).counts
        else:
            counts = matching_counts(n)
        for r, c in zip(TABLE1_ROWS[1:], counts):
            rows[r].append(c)
    return rows
