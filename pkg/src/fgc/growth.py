"""Growth constant of the number of maximum matchings in A_n.

The matching-count ratios are kept as exact fractions; only the final
bounds are rendered as floats through big-integer logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InvariantViolation, ResourceLimitError
from .recurrence import COUNT_N_CAP, matching_counts, vertex_count_apollonian

LN2 = math.log(2.0)
ETA0 = Fraction(2, 3)
LAMBDA0 = Fraction(12, 11)
QUOTED_Z = 0.43017


def big_log(N: int) -> float:
    """Natural log of a positive integer of any size.

    Keeps the top 64 bits as a mantissa and adds the dropped bits as a
    multiple of ln 2.
    """
    if N <= 0:
        raise InputError("logarithm of a non-positive integer")
    shift = max(N.bit_length() - 64, 0)
    return math.log(N >> shift) + shift * LN2


def big_log_halving(N: int) -> float:
    """Natural log by halving N in fixed 256-bit steps until a float holds it."""
    if N <= 0:
        raise InputError("logarithm of a non-positive integer")
    halvings = 0
    while N.bit_length() > 900:
        N >>= 256
        halvings += 256
    return math.log(float(N)) + halvings * LN2


def log_fraction(x: Fraction) -> float:
    return big_log(x.numerator) - big_log(x.denominator)


@dataclass(frozen=True)
class GrowthRatios:
    n: int
    alpha: Fraction
    eta: Fraction
    lam: Fraction
    p: Fraction


@dataclass(frozen=True)
class GrowthBounds:
    m: int
    lower: float
    upper: float
    z_estimate: float
    q: float

    @property
    def gap(self) -> float:
        return self.upper - self.lower


def growth_ratios(n: int) -> GrowthRatios:
    phi, theta, phi2, tau = matching_counts(n)
    alpha = Fraction(phi, theta)
    return GrowthRatios(n, alpha, Fraction(theta, phi2), Fraction(tau, phi2), 3 / alpha)


def q_fraction() -> Fraction:
    """Upper growth factor built from alpha_3 and the limiting ratio bounds."""
    a3 = growth_ratios(3).alpha
    return 6 * (a3 * ETA0**2 / LAMBDA0**2 + a3 * ETA0 / LAMBDA0**3 + 2 * (ETA0**2 / LAMBDA0**3))


def q_constant() -> tuple[Fraction, float]:
    q = q_fraction()
    return q, float(q)


def q_dominates(n: int) -> bool:
    """True iff q bounds the per-step growth factor of the maximum count at n."""
    r = growth_ratios(n)
    local = 6 * (r.alpha * r.eta**2 / r.lam**2 + r.alpha * r.eta / r.lam**3 + 2 * (r.eta**2 / r.lam**3))
    return q_fraction() >= local


def _agreed_log(N: int) -> float:
    a, b = big_log(N), big_log_halving(N)
    if abs(a - b) > 1e-10 * max(abs(a), 1.0):
        raise InvariantViolation(f"big-integer logarithms disagree: {a!r} vs {b!r}")
    return a


def z_estimate(n: int) -> float:
    """ln(max-matching count) / vertex count of A_n."""
    tau = matching_counts(n)[3]
    return _agreed_log(tau) / vertex_count_apollonian(n)


def z_limit_estimate(n: int) -> float:
    """2 ln(max-matching count) / 3**n, the form whose limit is the constant."""
    return 2 * _agreed_log(matching_counts(n)[3]) / 3**n


def z_bounds(m: int) -> GrowthBounds:
    """Lower and upper bounds on the growth constant from the counts at m."""
    if m < 3:
        raise InputError("bounds need m >= 3")
    phi, _, _, tau = matching_counts(m)
    p = growth_ratios(m).p
    q = q_fraction()
    scale = 3**m
    lower = (2 * _agreed_log(phi) + log_fraction(p)) / scale
    upper = (2 * _agreed_log(tau) + log_fraction(q)) / scale
    if not lower <= upper:
        raise InvariantViolation(f"bounds inverted at m={m}: {lower} > {upper}")
    return GrowthBounds(m, lower, upper, z_estimate(m), float(q))


def growth_table(max_m: int) -> list[GrowthBounds]:
    if max_m > COUNT_N_CAP:
        raise ResourceLimitError(f"max_m={max_m} exceeds the count cap {COUNT_N_CAP}")
    return [z_bounds(m) for m in range(3, max_m + 1)]
