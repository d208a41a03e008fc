"""Rule-based game representation (basic marginal-contribution nets).

A rule (positive, negative) -> value applies to a coalition S when every
positive agent is in S and no negative agent is. A net's worth for S is the
sum of its applicable rule values. Games and incentive regulations share
this representation, which is what makes coordinating them a concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .errors import RosterMismatch, UnknownAgent
from .games import ISNGame, Money, as_money, coalition, members_of


@dataclass(frozen=True)
class MCNetRule:
    """positive/negative agent patterns mapped to a nonzero value."""

    positive: frozenset
    negative: frozenset
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "positive", coalition(self.positive))
        object.__setattr__(self, "negative", coalition(self.negative))
        object.__setattr__(self, "value", as_money(self.value))
        if self.positive & self.negative:
            raise ValueError("positive and negative patterns must be disjoint")
        if not self.positive and not self.negative:
            raise ValueError("a rule must mention at least one agent")
        if self.value == 0:
            raise ValueError("rule values must be nonzero")


@dataclass(frozen=True)
class MCNet:
    """Ordered rule list over a fixed roster; rule indices are positions."""

    n_agents: int
    rules: "tuple[MCNetRule, ...]"

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if self.n_agents < 1:
            raise ValueError("a net needs at least one agent")
        full = frozenset(range(self.n_agents))
        for rule in self.rules:
            if not (rule.positive | rule.negative) <= full:
                raise UnknownAgent(
                    f"rule mentions agents outside the roster of {self.n_agents}"
                )
            if rule.negative == full:
                raise ValueError("negative pattern may not be the whole roster")


def empty_net(n_agents: int) -> MCNet:
    return MCNet(n_agents, ())


def applicable(rule: MCNetRule, s: Iterable[int]) -> bool:
    """True when all positive agents and no negative agents are in s."""
    s = coalition(s)
    return rule.positive <= s and not (rule.negative & s)


def evaluate(net: MCNet, s: Iterable[int]) -> Money:
    """Sum of the values of the rules applicable to s."""
    s = coalition(s)
    for i in s:
        if i >= net.n_agents:
            raise UnknownAgent(f"agent {i} not on a roster of {net.n_agents}")
    return sum(
        (rule.value for rule in net.rules if rule.positive <= s and not (rule.negative & s)),
        Fraction(0),
    )


def from_isn_game(game: ISNGame) -> MCNet:
    """Canonical net of a normalized game: one rule per valued coalition.

    For every S with two or more members and nonzero worth, emit
    (S, roster minus S) -> v(S), in ascending subset order. Exactly one of
    these rules applies to any coalition, so evaluation reproduces the game.
    """
    n = game.n_agents
    full_mask = (1 << n) - 1
    rules = []
    for mask in range(1 << n):
        if mask.bit_count() < 2:
            continue
        v = game.value_of_mask(mask)
        if v == 0:
            continue
        rules.append(MCNetRule(members_of(mask), members_of(full_mask & ~mask), v))
    return MCNet(n, tuple(rules))


def rule_shapley(rule: MCNetRule, n_agents: int) -> "tuple[Fraction, ...]":
    """Shapley allocation of a single rule's indicator game.

    With p positive and q negative agents, each positive agent gets
    value * (p-1)! q! / (p+q)! and each negative agent gets
    -value * p! (q-1)! / (p+q)!; everyone else gets zero. Matches the
    permutation average exactly (property-tested against it).
    """
    full = frozenset(range(n_agents))
    if not (rule.positive | rule.negative) <= full:
        raise UnknownAgent(f"rule does not fit a roster of {n_agents}")
    p, q = len(rule.positive), len(rule.negative)
    total = factorial(p + q)
    out = [Fraction(0)] * n_agents
    for i in rule.positive:
        out[i] = rule.value * Fraction(factorial(p - 1) * factorial(q), total)
    for i in rule.negative:
        out[i] = -rule.value * Fraction(factorial(p) * factorial(q - 1), total)
    return tuple(out)


def net_shapley(net: MCNet) -> "tuple[Fraction, ...]":
    """Shapley allocation of a whole net: rule-wise sums, by linearity."""
    out = [Fraction(0)] * net.n_agents
    for rule in net.rules:
        for i, share in enumerate(rule_shapley(rule, net.n_agents)):
            out[i] += share
    return tuple(out)


def compose(a: MCNet, b: MCNet) -> MCNet:
    """Concatenate rule lists; evaluation becomes the sum of both nets."""
    if a.n_agents != b.n_agents:
        raise RosterMismatch(f"rosters differ: {a.n_agents} vs {b.n_agents}")
    return MCNet(a.n_agents, a.rules + b.rules)
