"""Result records shared by the oracle and recurrence modules."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MatchingProfile:
    """Conditioned matching sizes and maximum-matching counts of A_n.

    ``beta[k]`` is the largest matching covering exactly k outmost vertices.
    The counts are taken at those maxima: all outmost vacant, only X
    covered, only Y and Z covered, and unconstrained.
    """

    n: int
    beta: tuple[int, int, int, int]
    matching_number: int
    all_vacant: int
    one_covered: int
    two_covered: int
    maximum: int

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.all_vacant, self.one_covered, self.two_covered, self.maximum)


@dataclass(frozen=True)
class DominationProfile:
    """Conditioned domination sizes of A_n and MDS counts.

    ``gamma[k]`` is the smallest dominating set holding exactly k outmost
    vertices.  ``whole`` counts MDSs of A_n; ``minus_three``, ``minus_two``
    and ``minus_one`` count MDSs after deleting {X, Y, Z}, {X, Y} and {X}.
    """

    n: int
    gamma: tuple[int, int, int, int]
    domination_number: int
    whole: int
    minus_three: int
    minus_two: int
    minus_one: int

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.whole, self.minus_three, self.minus_two, self.minus_one)


@dataclass(frozen=True)
class HanoiMatchingCounts:
    """Matching counts for H_n with extremes removed.

    ``minus_three`` counts maximum matchings of H_n minus all three extremes,
    ``minus_one`` those of H_n minus one extreme; ``perfect_ext`` is the number
    of perfect matchings of the extended graph.
    """

    n: int
    minus_three: int
    minus_one: int
    beta0: int
    perfect_ext: int
