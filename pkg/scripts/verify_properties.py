#!/usr/bin/env python3
"""Randomized verification sweep over a seeded corpus of hypergraph games.

Replays the core identities with fresh random games and exact rationals:

  1. the position value equals the grouped Shapley value of every
     uniform expansion (per requested k),
  2. the axiomatic system reconstructs the position value,
  3. agent-form payoffs match the block-symmetric Shapley computation
     on the one-fold expansion (on games within the agent budget),
  4. deleting one copy of a hyperlink matches deleting the hyperlink,
  5. component efficiency holds for both the position and Myerson values.

Exit status 0 when every pass is clean, 1 otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from hypercoop import (
    agent_form_payoffs,
    build_agent_form,
    build_uniform,
    check_component_efficiency,
    check_copy_deletion,
    grouped_position,
    myerson_value,
    position_value,
    shapley_blockwise,
    value_from_axioms,
)
from hypercoop.corpus import DEFAULT_SEED, game_corpus


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = DEFAULT_SEED
    count: int = 200
    max_players: int = 6
    max_links: int = 4
    max_link_size: int = 4
    ks: tuple[int, ...] = (1, 2)
    agent_budget: int = 12      # max expanded-universe size for the agent pass
    deletion_links: int = 3     # copy-deletion pass runs on games with at most this many links
    axiom_links: int = 5        # axiom pass runs on games with at most this many links


def parse_args(argv: list[str] | None = None) -> VerifyConfig:
    defaults = VerifyConfig()
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--count", type=int, default=defaults.count)
    parser.add_argument("--max-players", type=int, default=defaults.max_players)
    parser.add_argument("--max-links", type=int, default=defaults.max_links)
    parser.add_argument("--max-link-size", type=int, default=defaults.max_link_size)
    parser.add_argument("--ks", type=int, nargs="+", default=list(defaults.ks))
    parser.add_argument("--agent-budget", type=int, default=defaults.agent_budget)
    parser.add_argument("--deletion-links", type=int, default=defaults.deletion_links)
    parser.add_argument("--axiom-links", type=int, default=defaults.axiom_links)
    ns = parser.parse_args(argv)
    return VerifyConfig(
        seed=ns.seed,
        count=ns.count,
        max_players=ns.max_players,
        max_links=ns.max_links,
        max_link_size=ns.max_link_size,
        ks=tuple(ns.ks),
        agent_budget=ns.agent_budget,
        deletion_links=ns.deletion_links,
        axiom_links=ns.axiom_links,
    )


def run_pass(name: str, checked: int, failures: list[str]) -> bool:
    verdict = "PASS" if not failures else "FAIL"
    print(f"{verdict}  {name}: {checked} checks")
    for line in failures[:5]:
        print(f"      {line}")
    return not failures


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    games = game_corpus(
        seed=cfg.seed,
        count=cfg.count,
        max_players=cfg.max_players,
        max_links=cfg.max_links,
        max_link_size=cfg.max_link_size,
    )
    print(f"corpus: {len(games)} games (seed {cfg.seed})")
    started = time.perf_counter()
    ok = True

    failures: list[str] = []
    checked = 0
    for idx, game in enumerate(games):
        direct = position_value(game)
        for k in cfg.ks:
            checked += 1
            if grouped_position(build_uniform(game, k)) != direct:
                failures.append(f"game {idx}, k={k}")
    ok &= run_pass("position value == grouped expansion payoffs", checked, failures)

    failures, checked = [], 0
    for idx, game in enumerate(games):
        if len(game.hyperlinks) > cfg.axiom_links:
            continue
        checked += 1
        if value_from_axioms(game) != position_value(game):
            failures.append(f"game {idx}")
    ok &= run_pass("axiomatic reconstruction == position value", checked, failures)

    failures, checked = [], 0
    for idx, game in enumerate(games):
        expansion = build_uniform(game, 1)
        if len(expansion.universe) > cfg.agent_budget:
            continue
        checked += 1
        build_agent_form(game)  # validates construction
        if agent_form_payoffs(game) != shapley_blockwise(expansion):
            failures.append(f"game {idx}")
    ok &= run_pass("agent-form payoffs == block-symmetric payoffs", checked, failures)

    failures, checked = [], 0
    for idx, game in enumerate(games):
        if len(game.hyperlinks) > cfg.deletion_links:
            continue
        for e in game.hyperlinks:
            checked += 1
            if not check_copy_deletion(game, e).passed:
                failures.append(f"game {idx}, link {sorted(e)}")
    ok &= run_pass("one-copy deletion == hyperlink deletion", checked, failures)

    failures, checked = [], 0
    for idx, game in enumerate(games):
        for rule_name, rule in (("position", position_value), ("myerson", myerson_value)):
            checked += 1
            if not check_component_efficiency(rule, game).passed:
                failures.append(f"game {idx}, {rule_name}")
    ok &= run_pass("component efficiency (both rules)", checked, failures)

    elapsed = time.perf_counter() - started
    print(f"{'all passes clean' if ok else 'FAILURES above'} in {elapsed:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
