"""Transferable-utility games over a finite roster of firms.

Agents are dense integer ids 0..n-1. Coalitions are frozensets of ids and
are stored internally as bitmasks into a dense value table, which is why
construction is capped at ENUMERATION_BOUND agents. All money amounts are
exact rationals (fractions.Fraction); nothing in this package ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    AgentCountMismatch,
    BoundExceeded,
    MissingCoalition,
    UnknownAgent,
)

Money = Fraction
AgentId = int
Coalition = frozenset

#: Dense coalition tables become unreasonable past 2^16 entries.
ENUMERATION_BOUND = 16


def as_money(x) -> Money:
    """Coerce ints, strings ("3", "1/2", "0.25") and Decimals to Fraction.

    Binary floats are rejected: converting them would silently import
    rounding error into computations that must stay exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a money amount")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (str, Decimal)):
        return Fraction(x)
    raise TypeError(f"cannot represent {x!r} exactly; use int, Fraction or string")


def coalition(members: Iterable[int]) -> Coalition:
    """Canonicalize an iterable of agent ids into a Coalition."""
    s = frozenset(members)
    for i in s:
        if not isinstance(i, int) or isinstance(i, bool) or i < 0:
            raise UnknownAgent(f"agent ids must be non-negative integers, got {i!r}")
    return s


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def members_of(mask: int) -> Coalition:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def coalitions(n_agents: int, min_size: int = 0) -> Iterator[Coalition]:
    """All coalitions of an n-agent roster in ascending bitmask order."""
    for mask in range(1 << n_agents):
        if mask.bit_count() >= min_size:
            yield members_of(mask)


@dataclass(frozen=True)
class ISNGame:
    """Normalized TU game: v(S)=0 for |S|<=1, stored values for |S|>=2.

    The value table is a tuple indexed by coalition bitmask, so instances
    are immutable and hashable; reads are safe from any number of threads.
    """

    n_agents: int
    table: tuple

    def __post_init__(self):
        if self.n_agents < 1:
            raise AgentCountMismatch("a game needs at least one agent")
        if self.n_agents > ENUMERATION_BOUND:
            raise BoundExceeded(
                f"dense coalition table supports at most {ENUMERATION_BOUND} agents"
            )
        if len(self.table) != 1 << self.n_agents:
            raise ValueError("value table must have one entry per subset")

    @classmethod
    def from_values(cls, n_agents: int, values: Mapping) -> "ISNGame":
        """Build a game from a {coalition: money} mapping over |S|>=2.

        Unlisted coalitions of size >= 2 default to 0; singleton or empty
        keys are rejected because normalization fixes those values.
        """
        table = [Fraction(0)] * (1 << n_agents)
        for raw, val in values.items():
            s = coalition(raw)
            _check_roster(s, n_agents)
            if len(s) < 2:
                raise ValueError(f"coalition {sorted(s)} has fewer than two members")
            table[mask_of(s)] = as_money(val)
        return cls(n_agents, tuple(table))

    def value(self, s: Iterable[int]) -> Money:
        """v(S); zero for the empty set and singletons by definition."""
        s = coalition(s)
        _check_roster(s, self.n_agents)
        if len(s) <= 1:
            return Fraction(0)
        return self.table[mask_of(s)]

    def value_of_mask(self, mask: int) -> Money:
        if mask.bit_count() <= 1:
            return Fraction(0)
        return self.table[mask]

    def grand_coalition(self) -> Coalition:
        return frozenset(range(self.n_agents))


def _check_roster(s: Coalition, n_agents: int) -> None:
    for i in s:
        if i >= n_agents:
            raise UnknownAgent(f"agent {i} not on a roster of {n_agents}")


def make_isn_game(n_agents: int, t_table: Mapping, o_table: Mapping) -> ISNGame:
    """Build the game v(S) = T(S) - O(S) from total cost tables.

    Both tables must carry an entry for every coalition with two or more
    members. Construction succeeds even if the result is not superadditive;
    run check_superadditive separately to validate that claim.
    """
    if n_agents < 1:
        raise AgentCountMismatch("a game needs at least one agent")
    if n_agents > ENUMERATION_BOUND:
        raise BoundExceeded(
            f"dense coalition table supports at most {ENUMERATION_BOUND} agents"
        )

    def normalize(table: Mapping, name: str) -> dict:
        out = {}
        for raw, val in table.items():
            s = coalition(raw)
            for i in s:
                if i >= n_agents:
                    raise AgentCountMismatch(
                        f"{name} table mentions agent {i}, roster has {n_agents}"
                    )
            if len(s) < 2:
                raise ValueError(
                    f"{name} table keys need two or more members, got {sorted(s)}"
                )
            out[mask_of(s)] = as_money(val)
        return out

    t = normalize(t_table, "T")
    o = normalize(o_table, "O")
    values = [Fraction(0)] * (1 << n_agents)
    for mask in range(1 << n_agents):
        if mask.bit_count() < 2:
            continue
        if mask not in t or mask not in o:
            missing = "T" if mask not in t else "O"
            raise MissingCoalition(
                f"{missing} table lacks coalition {sorted(members_of(mask))}"
            )
        values[mask] = t[mask] - o[mask]
    return ISNGame(n_agents, tuple(values))


def check_superadditive(game) -> "tuple[Coalition, Coalition] | None":
    """Return None if v(S u T) >= v(S) + v(T) for all disjoint nonempty S, T.

    Otherwise return one violating pair, deterministically chosen and
    normalized so the smaller bitmask comes first. Works on any object
    exposing n_agents and value_of_mask/value.
    """
    n = game.n_agents
    val = _mask_value_fn(game)
    for a in range(1, 1 << n):
        rest = ((1 << n) - 1) & ~a
        b = rest
        # iterate nonzero submasks of the complement, descending
        while b:
            if val(a | b) < val(a) + val(b):
                lo, hi = min(a, b), max(a, b)
                return (members_of(lo), members_of(hi))
            b = (b - 1) & rest
    return None


def _mask_value_fn(game):
    if hasattr(game, "value_of_mask"):
        return game.value_of_mask
    return lambda mask: game.value(members_of(mask))


def subgame(game, members: Iterable[int]) -> ISNGame:
    """Restrict a game to `members`, re-indexing them densely by ascending id.

    The restriction must itself be normalized (zero singleton values);
    coordinated games whose incentive rules target groups always are.
    """
    members = coalition(members)
    _check_roster(members, game.n_agents)
    order = sorted(members)
    k = len(order)
    if k < 1:
        raise ValueError("subgame needs at least one member")
    for i in order:
        if game.value(frozenset([i])) != 0:
            raise ValueError("subgame would have a nonzero singleton value")
    values = {}
    for mask in range(1 << k):
        if mask.bit_count() < 2:
            continue
        original = frozenset(order[i] for i in range(k) if mask >> i & 1)
        values[members_of(mask)] = game.value(original)
    return ISNGame.from_values(k, values)
