"""Myerson and position values via the two communication-restricted games.

The point game lives on the players: a coalition is worth the sum of its
connected pieces.  The conference game lives on the hyperlinks: a
hyperlink subset is worth the total component worth it induces over the
full player set.  The Myerson value is the Shapley value of the former;
the position value splits each hyperlink's Shapley payoff in the latter
equally among its members.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .connectivity import components
from .model import Allocation, Hyperlink, HypergraphGame, ZERO, zero_allocation
from .shapley import DEFAULT_SUBSET_CAP, TUGame, shapley_by_subsets


def restricted_worth(game: HypergraphGame, coalition: Iterable) -> Fraction:
    """Point-game worth: total worth of the coalition's connected pieces."""
    s = frozenset(coalition)
    inside = (e for e in game.hyperlinks if e <= s)
    return sum((game.worth(t) for t in components(s, inside)), ZERO)


def conference_worth(game: HypergraphGame, hyperlinks: Iterable[Hyperlink]) -> Fraction:
    """Conference-game worth v^N(H'): component worths over all players."""
    return sum((game.worth(t) for t in components(game.players, hyperlinks)), ZERO)


def point_game(game: HypergraphGame) -> TUGame:
    return TUGame(game.players, lambda s: restricted_worth(game, s))


def hyperlink_game(game: HypergraphGame) -> TUGame:
    """TU-game whose ground set is the hyperlinks themselves."""
    return TUGame(game.hyperlinks, lambda active: conference_worth(game, active))


def myerson_value(game: HypergraphGame, cap: int = DEFAULT_SUBSET_CAP) -> Allocation:
    return shapley_by_subsets(point_game(game), cap=cap)


def position_value(game: HypergraphGame, cap: int = DEFAULT_SUBSET_CAP) -> Allocation:
    """Each hyperlink's conference-game Shapley payoff, split equally
    among its members; players on no hyperlink get zero."""
    payoffs = zero_allocation(game.players)
    if not game.hyperlinks:
        return payoffs
    link_payoffs = shapley_by_subsets(hyperlink_game(game), cap=cap)
    for e in game.hyperlinks:
        share = link_payoffs[e] / len(e)
        for i in e:
            payoffs[i] += share
    return payoffs
