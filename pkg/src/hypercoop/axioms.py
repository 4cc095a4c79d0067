"""Axiom checkers, identity verifiers, and the axiomatic reconstruction
of the position value.

Everything here takes an allocation *rule* — a callable mapping a
hypergraph game to an Allocation — so the same checkers exercise the
position value, the Myerson value, and deliberately broken rules alike.
Reports carry exact residuals for every ordered player pair (or every
component), never just a boolean, so failures show *where* and *by how
much* an invariant breaks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .connectivity import components
from .expansion import (
    DEFAULT_STATE_CAP,
    ExpandedPlayer,
    as_tu_game,
    block_symmetric_shapley,
    build_uniform,
    conference_mask_worth,
)
from .model import (
    Allocation,
    Hyperlink,
    HypergraphGame,
    ONE,
    PlayerId,
    ZERO,
    incident_hyperlinks,
    is_r_uniform,
    link_key,
    zero_allocation,
)
from .shapley import CapExceeded, harsanyi_dividends
from .solutions import position_value

DEFAULT_RECURSION_CAP = 12
DEFAULT_DIVIDEND_UNIVERSE_CAP = 16

Rule = Callable[[HypergraphGame], Allocation]


class SingularSystemError(ArithmeticError):
    """An exactly-solved linear system had no unique solution."""


def solve_linear_system(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square system exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    if any(len(row) != n + 1 for row in aug):
        raise ValueError("matrix must be square and match the right-hand side")
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError(f"no pivot available in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


@dataclass(frozen=True)
class PairSides:
    """The two sides of an equal-gains condition for one ordered pair."""

    i: PlayerId
    j: PlayerId
    left: Fraction
    right: Fraction

    @property
    def residual(self) -> Fraction:
        return self.left - self.right


@dataclass(frozen=True)
class ContributionReport:
    """All ordered-pair comparisons for one balanced-contributions axiom."""

    axiom: str
    pairs: dict[tuple[PlayerId, PlayerId], PairSides]

    def residual(self, i: PlayerId, j: PlayerId) -> Fraction:
        return self.pairs[(i, j)].residual

    def failures(self) -> list[PairSides]:
        return [p for p in self.pairs.values() if p.residual != 0]

    @property
    def passed(self) -> bool:
        return not self.failures()


def _pair_report(
    rule: Rule,
    game: HypergraphGame,
    axiom: str,
    weight_of: Callable[[Hyperlink], Fraction],
) -> ContributionReport:
    """left(i, j) totals what i gains from j's hyperlinks existing:
    sum over e containing j of weight(e) * (f_i(H) - f_i(H minus e))."""
    base = rule(game)
    removed = {e: rule(game.without_hyperlink(e)) for e in game.hyperlinks}
    pairs: dict[tuple[PlayerId, PlayerId], PairSides] = {}
    incident = {i: incident_hyperlinks(game.hypergraph, i) for i in game.players}
    for i in game.players:
        for j in game.players:
            left = sum(
                (weight_of(e) * (base[i] - removed[e][i]) for e in incident[j]), ZERO
            )
            right = sum(
                (weight_of(e) * (base[j] - removed[e][j]) for e in incident[i]), ZERO
            )
            pairs[(i, j)] = PairSides(i, j, left, right)
    return ContributionReport(axiom, pairs)


def check_balanced_link_contributions(rule: Rule, game: HypergraphGame) -> ContributionReport:
    """Pairwise-link version: every hyperlink must have exactly two members."""
    if not is_r_uniform(game.hypergraph, 2):
        raise ValueError("balanced link contributions applies only to 2-member hyperlinks")
    return _pair_report(rule, game, "balanced link contributions", lambda e: ONE)


def check_balanced_conference_contributions(rule: Rule, game: HypergraphGame) -> ContributionReport:
    """Unweighted equal gains over whole hyperlinks of any size."""
    return _pair_report(rule, game, "balanced conference contributions", lambda e: ONE)


def check_partial_balanced_conference_contributions(rule: Rule, game: HypergraphGame) -> ContributionReport:
    """Equal gains with each hyperlink weighted by one over its size."""
    return _pair_report(
        rule,
        game,
        "partial balanced conference contributions",
        lambda e: Fraction(1, len(e)),
    )


@dataclass(frozen=True)
class ComponentEntry:
    component: frozenset[PlayerId]
    allocated: Fraction
    worth: Fraction

    @property
    def residual(self) -> Fraction:
        return self.allocated - self.worth


@dataclass(frozen=True)
class ComponentEfficiencyReport:
    entries: tuple[ComponentEntry, ...]

    def failures(self) -> list[ComponentEntry]:
        return [e for e in self.entries if e.residual != 0]

    @property
    def passed(self) -> bool:
        return not self.failures()


def check_component_efficiency(rule: Rule, game: HypergraphGame) -> ComponentEfficiencyReport:
    """Each communication component must split exactly its own worth."""
    payoffs = rule(game)
    entries = []
    for comp in components(game.players, game.hyperlinks):
        allocated = sum((payoffs[i] for i in comp), ZERO)
        entries.append(ComponentEntry(comp, allocated, game.worth(comp)))
    return ComponentEfficiencyReport(tuple(entries))


def position_by_dividends(game: HypergraphGame, cap: int = DEFAULT_DIVIDEND_UNIVERSE_CAP) -> Allocation:
    """Position value recomputed from the dividends of the one-fold
    expanded game: each dividend is split equally over its coalition of
    copies and credited to the copies' original players."""
    payoffs = zero_allocation(game.players)
    if not game.hyperlinks:
        return payoffs
    expansion = build_uniform(game, 1)
    dividends = harsanyi_dividends(as_tu_game(expansion), cap=cap)
    for coalition, coeff in dividends.items():
        share = coeff / len(coalition)
        for ep in coalition:
            payoffs[ep.origin] += share
    return payoffs


@dataclass(frozen=True)
class CopyDeletionReport:
    """Deleting one copy of a hyperlink from the one-fold expansion versus
    deleting the hyperlink outright.

    `grouped` sums the expanded game's Shapley payoffs per original
    player after the copy is removed from the universe; `reduced` is the
    position value of the game without the hyperlink.  The two must
    agree exactly.
    """

    link: Hyperlink
    removed: ExpandedPlayer
    grouped: Allocation
    reduced: Allocation

    def residual(self, i: PlayerId) -> Fraction:
        return self.grouped[i] - self.reduced[i]

    @property
    def passed(self) -> bool:
        return self.grouped == self.reduced


def check_copy_deletion(
    game: HypergraphGame,
    link,
    removed: ExpandedPlayer | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> CopyDeletionReport:
    e = frozenset(link)
    if e not in game.hyperlinks:
        raise ValueError(f"no hyperlink {sorted(e)} to delete a copy of")
    expansion = build_uniform(game, 1)
    block = expansion.blocks[link_key(e)]
    if removed is None:
        removed = block[0]
    if removed not in block:
        raise ValueError("the removed copy must belong to the deleted hyperlink's block")
    links = game.hyperlinks
    target = links.index(e)
    sizes = [expansion.rho] * len(links)
    completions = list(sizes)
    sizes[target] -= 1
    per_block = block_symmetric_shapley(
        sizes, completions, conference_mask_worth(game), state_cap=state_cap
    )
    grouped = zero_allocation(game.players)
    for j, other in enumerate(links):
        for ep in expansion.blocks[link_key(other)]:
            if ep == removed:
                continue
            grouped[ep.origin] += per_block[j]
    reduced = position_value(game.without_hyperlink(e))
    return CopyDeletionReport(e, removed, grouped, reduced)


def value_from_axioms(game: HypergraphGame, cap: int = DEFAULT_RECURSION_CAP) -> Allocation:
    """Reconstruct the unique allocation rule satisfying component
    efficiency plus partial balanced conference contributions.

    The equal-gains condition against a fixed anchor player, together
    with the component's efficiency equation, pins down each component's
    payoffs once every one-hyperlink-smaller situation is solved.  The
    recursion bottoms out at the empty structure, where everyone is
    isolated and zero-normalization gives zero.
    """
    links = game.hyperlinks
    m = len(links)
    if m > cap:
        raise CapExceeded(f"{m} hyperlinks exceeds the recursion cap {cap}")
    cf = game.characteristic
    weight = {e: Fraction(1, len(e)) for e in links}
    memo: dict[int, Allocation] = {}

    def solve(mask: int) -> Allocation:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        active = [links[j] for j in range(m) if mask >> j & 1]
        out = zero_allocation(game.players)
        for comp in components(game.players, active):
            if len(comp) == 1:
                (lone,) = comp
                out[lone] = cf.worth(comp)
                continue
            members = sorted(comp)
            index = {q: t for t, q in enumerate(members)}
            incident = {
                q: [j for j in range(m) if mask >> j & 1 and q in links[j]]
                for q in members
            }
            d = {
                q: sum((weight[links[j]] for j in incident[q]), ZERO) for q in members
            }
            anchor = members[0]
            rows: list[list[Fraction]] = []
            rhs: list[Fraction] = []
            for q in members[1:]:
                row = [ZERO] * len(members)
                row[0] = d[q]
                row[index[q]] = -d[anchor]
                value = ZERO
                for j in incident[q]:
                    value += weight[links[j]] * solve(mask & ~(1 << j))[anchor]
                for j in incident[anchor]:
                    value -= weight[links[j]] * solve(mask & ~(1 << j))[q]
                rows.append(row)
                rhs.append(value)
            rows.append([ONE] * len(members))
            rhs.append(cf.worth(comp))
            try:
                solution = solve_linear_system(rows, rhs)
            except SingularSystemError as exc:
                raise SingularSystemError(
                    f"the axiom system is singular on component {sorted(comp)}"
                ) from exc
            for q, val in zip(members, solution):
                out[q] = val
        memo[mask] = out
        return out

    return solve((1 << m) - 1)
