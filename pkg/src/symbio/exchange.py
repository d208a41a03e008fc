"""Firm-level resource exchange model.

Firms post waste offers and input demands. A coalition realizes savings by
shipping offered waste into matching demands, paying treatment, transport
and a fixed transaction cost per activated firm pair, instead of paying to
discharge the waste and purchase virgin inputs. The baseline cost of a
coalition (no exchange at all) and the minimized realized cost define the
coalition's worth: baseline minus optimum.

Plan optimization is a fixed-charge transportation problem. It is solved
exactly: enumerate subsets of activated firm pairs, then solve the
continuous shipment subproblem for each subset with the exact simplex.
Quantities are divisible; everything is Fraction arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import BoundExceeded, ScenarioError, UnknownAgent
from .games import ENUMERATION_BOUND, ISNGame, Money, as_money, coalition
from .lp import solve_lp

OFFER = "offer"
DEMAND = "demand"


@dataclass(frozen=True)
class ResourceStream:
    """One firm's offered waste or demanded input for a single resource.

    Offers carry the per-unit discharge cost avoided when the waste is
    shipped instead of dumped. Demands carry the per-unit purchase cost of
    the virgin input they would otherwise buy plus the per-unit treatment
    cost of making received waste usable.
    """

    firm: int
    resource: str
    kind: str
    quantity: Fraction
    unit_discharge_cost: "Fraction | None" = None
    unit_purchase_cost: "Fraction | None" = None
    unit_treatment_cost: "Fraction | None" = None

    def __post_init__(self):
        if self.kind not in (OFFER, DEMAND):
            raise ScenarioError(f"stream kind must be offer or demand, got {self.kind!r}")
        if self.quantity < 0:
            raise ScenarioError("stream quantity must be >= 0")
        offer_fields = (self.unit_discharge_cost,)
        demand_fields = (self.unit_purchase_cost, self.unit_treatment_cost)
        if self.kind == OFFER:
            if any(f is None for f in offer_fields) or any(f is not None for f in demand_fields):
                raise ScenarioError("offers carry exactly unit_discharge_cost")
        else:
            if any(f is None for f in demand_fields) or any(f is not None for f in offer_fields):
                raise ScenarioError(
                    "demands carry exactly unit_purchase_cost and unit_treatment_cost"
                )
        for f in offer_fields + demand_fields:
            if f is not None and f < 0:
                raise ScenarioError("unit costs must be >= 0")


def waste_offer(firm: int, resource: str, quantity, unit_discharge_cost) -> ResourceStream:
    return ResourceStream(
        firm, resource, OFFER, as_money(quantity), unit_discharge_cost=as_money(unit_discharge_cost)
    )


def input_demand(
    firm: int, resource: str, quantity, unit_purchase_cost, unit_treatment_cost
) -> ResourceStream:
    return ResourceStream(
        firm,
        resource,
        DEMAND,
        as_money(quantity),
        unit_purchase_cost=as_money(unit_purchase_cost),
        unit_treatment_cost=as_money(unit_treatment_cost),
    )


@dataclass(frozen=True)
class Shipment:
    from_firm: int
    to_firm: int
    resource: str
    quantity: Fraction

    def key(self):
        return (self.from_firm, self.to_firm, self.resource, self.quantity)


@dataclass(frozen=True)
class ExchangePlan:
    """Shipments of one coalition's realized exchange, sorted by route."""

    shipments: "tuple[Shipment, ...]"

    def key(self):
        return tuple(s.key() for s in self.shipments)


EMPTY_PLAN = ExchangePlan(())


@dataclass(frozen=True)
class ExchangeScenario:
    """Streams plus per-unit transport and fixed per-pair transaction costs.

    transport maps (from_firm, to_firm, resource) to a per-unit cost and
    transaction maps (from_firm, to_firm) to a fixed cost charged once per
    activated ordered pair. Both must cover every pair of distinct firms
    with a matching offer/demand resource. Treat instances as immutable.
    """

    n_agents: int
    streams: "tuple[ResourceStream, ...]"
    transport: Mapping
    transaction: Mapping

    def __post_init__(self):
        object.__setattr__(self, "streams", tuple(self.streams))
        object.__setattr__(
            self, "transport", {k: as_money(v) for k, v in self.transport.items()}
        )
        object.__setattr__(
            self, "transaction", {k: as_money(v) for k, v in self.transaction.items()}
        )
        if self.n_agents < 1:
            raise ScenarioError("a scenario needs at least one firm")
        for s in self.streams:
            if not 0 <= s.firm < self.n_agents:
                raise ScenarioError(f"stream firm {s.firm} outside roster of {self.n_agents}")
        for cost in list(self.transport.values()) + list(self.transaction.values()):
            if cost < 0:
                raise ScenarioError("transport and transaction costs must be >= 0")
        for o, d in self._compatible_pairs():
            route = (o.firm, d.firm, o.resource)
            if route not in self.transport:
                raise ScenarioError(f"missing transport cost for {route}")
            if (o.firm, d.firm) not in self.transaction:
                raise ScenarioError(f"missing transaction cost for {(o.firm, d.firm)}")

    def _compatible_pairs(self):
        """Offer/demand stream pairs that could ever ship (distinct firms)."""
        for o in self.streams:
            if o.kind != OFFER:
                continue
            for d in self.streams:
                if d.kind == DEMAND and d.resource == o.resource and d.firm != o.firm:
                    yield o, d


def t_value(scenario: ExchangeScenario, s: Iterable[int]) -> Money:
    """Baseline cost of a coalition: discharge every offer, buy every demand."""
    members = coalition(s)
    _check_members(scenario, members)
    total = Fraction(0)
    for stream in scenario.streams:
        if stream.firm not in members:
            continue
        if stream.kind == OFFER:
            total += stream.quantity * stream.unit_discharge_cost
        else:
            total += stream.quantity * stream.unit_purchase_cost
    return total


def optimal_exchange_plan(scenario: ExchangeScenario, s: Iterable[int]):
    """Cheapest realized plan for a coalition: returns (plan, cost).

    cost = shipping (treatment + transport) + transaction fixed costs of
    activated pairs + residual discharge/purchase of unshipped quantities.
    The empty plan is always feasible, so cost <= t_value(scenario, s).
    Among equally cheap candidates the lexicographically smallest shipment
    list wins, which keeps outputs deterministic.
    """
    members = coalition(s)
    _check_members(scenario, members)
    baseline = t_value(scenario, s)

    # Stream pairs eligible inside this coalition, with per-unit saving.
    pair_vars = []  # (offer_idx, demand_idx, gain)
    for oi, o in enumerate(scenario.streams):
        if o.kind != OFFER or o.firm not in members:
            continue
        for di, d in enumerate(scenario.streams):
            if d.kind != DEMAND or d.firm not in members:
                continue
            if d.resource != o.resource or d.firm == o.firm:
                continue
            haul = scenario.transport[(o.firm, d.firm, o.resource)]
            gain = o.unit_discharge_cost + d.unit_purchase_cost - d.unit_treatment_cost - haul
            if gain > 0:
                pair_vars.append((oi, di, gain))

    # Candidate firm pairs: only those whose best-case saving can beat the
    # fixed transaction cost are ever worth activating.
    by_route = {}
    for oi, di, gain in pair_vars:
        route = (scenario.streams[oi].firm, scenario.streams[di].firm)
        by_route.setdefault(route, []).append((oi, di, gain))
    candidates = []
    for route in sorted(by_route):
        fixed = scenario.transaction[route]
        bound = sum(
            gain * min(scenario.streams[oi].quantity, scenario.streams[di].quantity)
            for oi, di, gain in by_route[route]
        )
        if bound > fixed:
            candidates.append(route)

    best_cost = baseline
    best_plan = EMPTY_PLAN
    for chosen in range(1, 1 << len(candidates)):
        routes = [candidates[i] for i in range(len(candidates)) if chosen >> i & 1]
        fixed_total = sum(scenario.transaction[r] for r in routes)
        variables = [pv for r in routes for pv in sorted(by_route[r])]
        saving, plan = _best_shipments(scenario, variables)
        cost = baseline - saving + fixed_total
        if cost < best_cost or (cost == best_cost and plan.key() < best_plan.key()):
            best_cost = cost
            best_plan = plan
    return best_plan, best_cost


def _best_shipments(scenario, variables):
    """Maximize total per-unit saving over stream capacity constraints."""
    gains = [g for _, _, g in variables]
    caps = {}  # stream index -> row of the constraint matrix
    a_ub, b_ub = [], []
    for k, (oi, di, _) in enumerate(variables):
        for idx in (oi, di):
            if idx not in caps:
                caps[idx] = len(a_ub)
                a_ub.append([Fraction(0)] * len(variables))
                b_ub.append(scenario.streams[idx].quantity)
            a_ub[caps[idx]][k] = Fraction(1)
    result = solve_lp(gains, a_ub=a_ub, b_ub=b_ub, maximize=True)
    amounts = {}
    for (oi, di, _), qty in zip(variables, result.x, strict=True):
        if qty > 0:
            o, d = scenario.streams[oi], scenario.streams[di]
            key = (o.firm, d.firm, o.resource)
            amounts[key] = amounts.get(key, Fraction(0)) + qty
    shipments = tuple(Shipment(*key, qty) for key, qty in sorted(amounts.items()))
    return result.objective, ExchangePlan(shipments)


def scenario_to_game(scenario: ExchangeScenario, max_agents: int = ENUMERATION_BOUND) -> ISNGame:
    """Game with every coalition worth its baseline-minus-optimal saving.

    Values are nonnegative (the empty plan is feasible) and the game is
    superadditive: disjoint coalitions can always merge their plans.
    """
    n = scenario.n_agents
    if n > max_agents:
        raise BoundExceeded(f"scenario has {n} firms, enumeration bound is {max_agents}")
    values = {}
    for mask in range(1 << n):
        if mask.bit_count() < 2:
            continue
        members = frozenset(i for i in range(n) if mask >> i & 1)
        _, cost = optimal_exchange_plan(scenario, members)
        values[members] = t_value(scenario, members) - cost
    return ISNGame.from_values(n, values)


def _check_members(scenario, members):
    for i in members:
        if i >= scenario.n_agents:
            raise UnknownAgent(f"firm {i} not on a roster of {scenario.n_agents}")
