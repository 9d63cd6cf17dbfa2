"""Budget thresholds that split positions into rich, poor, and critical regimes.

For each stone count ``n`` there are two pairs of cutoffs:

* ``rich_i(n)`` / ``rich_ii(n)``: the least budget with which Player I
  (respectively II) can force a win against an opponent whose budget never
  binds.  At or above the cutoff a player is *rich* and the winner follows
  from the cutoffs alone.
* ``poor_i(n)`` / ``poor_ii(n)``: closed-form cutoffs (depending only on the
  minimum removal amount) below which a player is *poor*; poor games are
  decided by comparing how many minimum moves each side can still afford.

Positions where neither rule applies (each player between their cutoffs) are
*critical*; those are handled by the periodicity machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .game import Funds, MoveSet, Winner, clamp_funds
from .errors import OutOfRange, WrongRegion
from .oracle import standard_winners


@dataclass(frozen=True)
class ThresholdTables:
    """Rich-side cutoff arrays for ``0 <= n <= n_max``.

    ``winners[n]`` is True iff the mover wins the plain subtraction game.
    ``rich_i_move[n]`` records the smallest removal witnessing ``rich_i[n]``
    (-1 where no move is possible), for strategy extraction.
    """

    moves: MoveSet
    n_max: int
    winners: np.ndarray
    rich_i: np.ndarray
    rich_ii: np.ndarray
    rich_i_move: np.ndarray

    def check_range(self, n: int) -> None:
        if n < 0 or n > self.n_max:
            raise OutOfRange(f"n={n} outside table range 0..{self.n_max}")


@dataclass(frozen=True)
class PoorThresholds:
    poor_i: int
    poor_ii: int


class Region(Enum):
    """Total classification of a position by the two cutoff pairs."""

    RICH_I = "rich-I"
    RICH_II = "rich-II"
    RICH_BOTH = "rich-both"
    POOR_I = "poor-I"
    POOR_II = "poor-II"
    POOR_BOTH = "poor-both"
    CRITICAL = "critical"


def build_thresholds(moves: MoveSet, n_max: int) -> ThresholdTables:
    """Compute the rich-side cutoffs by the defining recursion.

    On a mover-wins position, ``rich_i`` prices the cheapest winning reply
    (opponent's completed cutoff there plus the move's cost) and ``rich_ii``
    completes the loser's side as the worst ``rich_i`` among successors.  On
    a mover-loses position the roles are mirrored: ``rich_ii`` is the worst
    successor ``rich_i``, and the completed ``rich_i`` prices the cheapest
    escape through a successor attaining that worst case.  Below the minimum
    removal both cutoffs are zero.
    """
    if n_max < 0:
        raise OutOfRange(f"n_max must be >= 0, got {n_max}")
    winners = standard_winners(moves, n_max)
    a1 = moves.a_min
    rich_i = np.zeros(n_max + 1, dtype=np.int64)
    rich_ii = np.zeros(n_max + 1, dtype=np.int64)
    witness = np.full(n_max + 1, -1, dtype=np.int64)
    for n in range(a1, n_max + 1):
        legal = [a for a in moves if a <= n]
        if winners[n]:
            best = min(
                (rich_ii[n - a] + a, a) for a in legal if not winners[n - a]
            )
            rich_i[n], witness[n] = best
            rich_ii[n] = max(rich_i[n - a] for a in legal)
        else:
            rich_ii[n] = max(rich_i[n - a] for a in legal)
            best = min(
                (rich_ii[n - a] + a, a)
                for a in legal
                if rich_i[n - a] == rich_ii[n]
            )
            rich_i[n], witness[n] = best
    return ThresholdTables(moves, n_max, winners, rich_i, rich_ii, witness)


def poor_thresholds(moves: MoveSet, n: int) -> PoorThresholds:
    """Closed-form poor cutoffs; they depend on the move set only through min(A)."""
    if n < 0:
        raise OutOfRange(f"n must be >= 0, got {n}")
    a1 = moves.a_min
    i = n % (2 * a1)
    half = (n - i) // 2
    return PoorThresholds(half + min(i + 1, a1), half + max(0, i - a1 + 1))


def classify(tables: ThresholdTables, n: int, d: Funds, e: Funds) -> Region:
    """Assign a position to its regime; rich checks take precedence.

    Budgets are clamped to ``n`` first.  When neither player is rich and
    neither is poor the position is critical: each budget sits in the gap
    between its poor and rich cutoffs.
    """
    tables.check_range(n)
    dc, ec = clamp_funds(d, n), clamp_funds(e, n)
    fi, fii = int(tables.rich_i[n]), int(tables.rich_ii[n])
    if dc >= fi and ec >= fii:
        return Region.RICH_BOTH
    if dc >= fi:
        return Region.RICH_I
    if ec >= fii:
        return Region.RICH_II
    g = poor_thresholds(tables.moves, n)
    if dc >= g.poor_i and ec < g.poor_ii:
        return Region.POOR_I
    if dc < g.poor_i and ec >= g.poor_ii:
        return Region.POOR_II
    if dc < g.poor_i and ec < g.poor_ii:
        return Region.POOR_BOTH
    return Region.CRITICAL


def rich_winner(tables: ThresholdTables, n: int, d: Funds, e: Funds) -> Winner:
    """Winner when at least one player is rich; raises WrongRegion otherwise."""
    region = classify(tables, n, d, e)
    if region is Region.RICH_I:
        return Winner.MOVER
    if region is Region.RICH_II:
        return Winner.OPPONENT
    if region is Region.RICH_BOTH:
        return Winner.MOVER if tables.winners[n] else Winner.OPPONENT
    raise WrongRegion(f"({n};{d},{e}) is {region.value}, not a rich position")


def poor_winner(moves: MoveSet, n: int, d: Funds, e: Funds) -> Winner:
    """Winner when at least one player is poor; raises WrongRegion otherwise.

    With both players poor, whoever can afford strictly more minimum moves
    wins; the mover loses ties.
    """
    dc, ec = clamp_funds(d, n), clamp_funds(e, n)
    g = poor_thresholds(moves, n)
    a1 = moves.a_min
    if dc >= g.poor_i and ec < g.poor_ii:
        return Winner.MOVER
    if dc < g.poor_i and ec >= g.poor_ii:
        return Winner.OPPONENT
    if dc < g.poor_i and ec < g.poor_ii:
        return Winner.MOVER if dc // a1 > ec // a1 else Winner.OPPONENT
    raise WrongRegion(f"({n};{d},{e}) has no poor player")
