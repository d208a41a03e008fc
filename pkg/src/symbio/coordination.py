"""Normative coordination: policies, incentive rules, coordinated games.

A policy labels agent groups as promoted, permitted or prohibited. The
regulator turns labels into an incentive net: a minimal subsidy on each
promoted group's grand coalition (making the group's Shapley allocation
enter its core) and a tax on each prohibited group pushing its coordinated
worth strictly below what its members get alone. Incentive rules use the
exact-group pattern (S, roster minus S), so they touch no other coalition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    NonpositiveEpsilon,
    PolicyInvalid,
    RosterMismatch,
    TargetTooSmall,
    UnknownAgent,
)
from .games import ISNGame, Money, as_money, coalition, mask_of, members_of, subgame
from .mcnets import MCNet, MCNetRule, compose, evaluate, from_isn_game, net_shapley

#: Incentive regulations are plain MC-nets; positive values are subsidies,
#: negative values are taxes.
IncentiveNet = MCNet


class PolicyLabel(enum.Enum):
    PROMOTED = "promoted"
    PERMITTED = "permitted"
    PROHIBITED = "prohibited"


@dataclass(frozen=True)
class Policy:
    """Group labels assigned by the authority; unlabeled means permitted."""

    labels: Mapping

    def __post_init__(self):
        canonical = {}
        for raw, label in self.labels.items():
            group = coalition(raw)
            if len(group) < 2:
                raise ValueError("only groups of two or more agents can be labeled")
            if not isinstance(label, PolicyLabel):
                raise ValueError(f"not a policy label: {label!r}")
            if group in canonical:
                raise ValueError(f"group {sorted(group)} labeled twice")
            canonical[group] = label
        object.__setattr__(self, "labels", canonical)

    @classmethod
    def from_groups(cls, promoted=(), prohibited=()) -> "Policy":
        labels = {}
        for g in promoted:
            labels[coalition(g)] = PolicyLabel.PROMOTED
        for g in prohibited:
            group = coalition(g)
            if group in labels:
                raise ValueError(f"group {sorted(group)} labeled twice")
            labels[group] = PolicyLabel.PROHIBITED
        return cls(labels)

    def groups(self, label: PolicyLabel):
        """Groups carrying a label, ascending by bitmask for determinism."""
        return sorted(
            (g for g, l in self.labels.items() if l is label), key=mask_of
        )


def classify(policy: Policy, s: Iterable[int]) -> PolicyLabel:
    return policy.labels.get(coalition(s), PolicyLabel.PERMITTED)


def validate_policy(policy: Policy):
    """None when promoted groups are pairwise disjoint, else one clash."""
    promoted = policy.groups(PolicyLabel.PROMOTED)
    for i, a in enumerate(promoted):
        for b in promoted[i + 1 :]:
            if a & b:
                return (a, b)
    return None


def incentive_value(net: IncentiveNet, s: Iterable[int]) -> Money:
    """Total subsidy minus tax the rules grant to coalition s."""
    return evaluate(net, s)


@dataclass(frozen=True)
class CoordinatedGame:
    """Market game plus incentives: worth is v(S) + incentive(S)."""

    base: ISNGame
    incentives: IncentiveNet

    def __post_init__(self):
        if self.base.n_agents != self.incentives.n_agents:
            raise RosterMismatch(
                f"game has {self.base.n_agents} agents, incentives {self.incentives.n_agents}"
            )

    @property
    def n_agents(self) -> int:
        return self.base.n_agents

    def value(self, s: Iterable[int]) -> Money:
        return self.base.value(s) + evaluate(self.incentives, s)

    def value_of_mask(self, mask: int) -> Money:
        return self.value(members_of(mask))

    def as_mcnet(self) -> MCNet:
        return compose(from_isn_game(self.base), self.incentives)


def coordinate(game: ISNGame, incentives: IncentiveNet) -> CoordinatedGame:
    return CoordinatedGame(game, incentives)


def synthesize_promotion(game, target: Iterable[int]):
    """Minimal subsidy making the target group fair-and-stable.

    Returns (rule, amount). Subsidizing the group's grand coalition by x
    lifts each member's Shapley payoff by x/|target| while leaving proper
    subsets untouched, so the smallest sufficient subsidy is
    max over proper nonempty S of (v(S) - shapley(S)) * |target| / |S|,
    clamped at zero. When zero, no rule is emitted (rule is None).
    """
    target = coalition(target)
    if len(target) < 2:
        raise TargetTooSmall("promotion targets need at least two members")
    sub = subgame(game, target)
    phi = net_shapley(from_isn_game(sub))
    k = sub.n_agents
    needed = Fraction(0)
    for mask in range(1, (1 << k) - 1):
        size = mask.bit_count()
        share = sum(phi[i] for i in range(k) if mask >> i & 1)
        gap = (sub.value_of_mask(mask) - share) * Fraction(k, size)
        if gap > needed:
            needed = gap
    if needed == 0:
        return None, Fraction(0)
    rest = frozenset(range(game.n_agents)) - target
    return MCNetRule(target, rest, needed), needed


def synthesize_prohibition(game, target: Iterable[int], epsilon) -> "MCNetRule | None":
    """Tax wiping out the target's worth and epsilon more.

    The coordinated worth becomes -epsilon < 0, so members do strictly
    better splitting up. Returns None only in the degenerate case where
    the target already sits exactly at -epsilon (a zero-valued rule is not
    representable, and none is needed).
    """
    target = coalition(target)
    epsilon = as_money(epsilon)
    if len(target) < 2:
        raise TargetTooSmall("prohibition targets need at least two members")
    if epsilon <= 0:
        raise NonpositiveEpsilon("prohibition margin must be > 0")
    tax = -(game.value(target) + epsilon)
    if tax == 0:
        return None
    rest = frozenset(range(game.n_agents)) - target
    return MCNetRule(target, rest, tax)


def enforce_policy(game: ISNGame, policy: Policy, epsilon=Fraction(1)) -> IncentiveNet:
    """Incentive net realizing a policy over the whole roster.

    Promoted groups must be pairwise disjoint (PolicyInvalid otherwise).
    Prohibition taxes are synthesized first; promotion subsidies are then
    computed against the tax-coordinated game, so a prohibited group nested
    inside a promoted one is priced in. Exact-group rules guarantee that
    permitted groups keep their market worth.
    """
    clash = validate_policy(policy)
    if clash is not None:
        raise PolicyInvalid(*clash)
    roster = frozenset(range(game.n_agents))
    for group in policy.labels:
        if not group <= roster:
            raise UnknownAgent(
                f"policy labels group {sorted(group)} outside the roster of {game.n_agents}"
            )

    taxes = []
    for group in policy.groups(PolicyLabel.PROHIBITED):
        rule = synthesize_prohibition(game, group, epsilon)
        if rule is not None:
            taxes.append(rule)
    taxed = CoordinatedGame(game, MCNet(game.n_agents, tuple(taxes)))

    subsidies = []
    for group in policy.groups(PolicyLabel.PROMOTED):
        rule, _ = synthesize_promotion(taxed, group)
        if rule is not None:
            subsidies.append(rule)
    return MCNet(game.n_agents, tuple(subsidies) + tuple(taxes))
