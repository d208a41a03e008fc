"""Independent oracles and random generators shared by the test modules.

Everything here recomputes results from definitions (permutation averages,
integer grid search, constraint checks) without going through the library
code paths under test, so agreement is meaningful.
"""

from fractions import Fraction
from itertools import permutations, product

from symbio.exchange import ExchangeScenario, input_demand, t_value, waste_offer
from symbio.games import ISNGame


def perm_shapley(n_agents, value_fn):
    """Average marginal contribution over all orderings, from scratch.

    value_fn takes a frozenset of agent ids; a nonzero empty-set value is
    respected (needed for rules with empty positive patterns).
    """
    totals = [Fraction(0)] * n_agents
    count = 0
    for order in permutations(range(n_agents)):
        count += 1
        so_far = frozenset()
        for i in order:
            joined = so_far | {i}
            totals[i] += value_fn(joined) - value_fn(so_far)
            so_far = joined
    return tuple(t / count for t in totals)


def rule_indicator_value(rule):
    """Set function of a single rule, straight from the definition."""

    def value_fn(s):
        if rule.positive <= s and not (rule.negative & s):
            return rule.value
        return Fraction(0)

    return value_fn


def coalition_worth(x, members):
    return sum(x[i] for i in members)


def core_constraints_hold(game, x):
    """Direct check of efficiency and all coalition rationality constraints."""
    n = game.n_agents
    everyone = frozenset(range(n))
    if sum(x) != game.value(everyone):
        return False
    for mask in range(1, 1 << n):
        members = frozenset(i for i in range(n) if mask >> i & 1)
        if members == everyone:
            continue
        if coalition_worth(x, members) < game.value(members):
            return False
    return True


def grid_plan_cost(scenario, members):
    """Minimum realized cost by integer grid search over shipments.

    Valid oracle for integer quantities: the shipment polytope has integer
    vertices, so some optimal plan is integral.
    """
    members = frozenset(members)
    pairs = []
    for oi, o in enumerate(scenario.streams):
        if o.kind != "offer" or o.firm not in members:
            continue
        for di, d in enumerate(scenario.streams):
            if (
                d.kind == "demand"
                and d.firm in members
                and d.resource == o.resource
                and d.firm != o.firm
            ):
                pairs.append((oi, di))
    caps = [
        int(min(scenario.streams[oi].quantity, scenario.streams[di].quantity))
        for oi, di in pairs
    ]
    best = t_value(scenario, members)
    for combo in product(*(range(c + 1) for c in caps)):
        shipped_out = {}
        shipped_in = {}
        for (oi, di), qty in zip(pairs, combo):
            shipped_out[oi] = shipped_out.get(oi, 0) + qty
            shipped_in[di] = shipped_in.get(di, 0) + qty
        if any(
            shipped_out[oi] > scenario.streams[oi].quantity for oi in shipped_out
        ) or any(shipped_in[di] > scenario.streams[di].quantity for di in shipped_in):
            continue
        cost = Fraction(0)
        active_routes = set()
        for (oi, di), qty in zip(pairs, combo):
            if qty == 0:
                continue
            o, d = scenario.streams[oi], scenario.streams[di]
            haul = scenario.transport[(o.firm, d.firm, o.resource)]
            cost += qty * (d.unit_treatment_cost + haul)
            active_routes.add((o.firm, d.firm))
        for a, b in active_routes:
            cost += scenario.transaction[(a, b)]
        for idx, s in enumerate(scenario.streams):
            if s.firm not in members:
                continue
            if s.kind == "offer":
                cost += (s.quantity - shipped_out.get(idx, 0)) * s.unit_discharge_cost
            else:
                cost += (s.quantity - shipped_in.get(idx, 0)) * s.unit_purchase_cost
        best = min(best, cost)
    return best


def random_game(rng, n, lo=-8, hi=20):
    """Normalized game with random small-denominator rational values."""
    values = {}
    for mask in range(1 << n):
        if mask.bit_count() < 2:
            continue
        members = frozenset(i for i in range(n) if mask >> i & 1)
        den = rng.choice([1, 1, 2, 3, 4])
        values[members] = Fraction(rng.randint(lo * den, hi * den), den)
    return ISNGame.from_values(n, values)


def random_scenario(rng, n, resources=("r", "s"), max_qty=10):
    """Exchange scenario with integer data; every firm gets 1-2 streams."""
    streams = []
    for firm in range(n):
        for _ in range(rng.randint(1, 2)):
            resource = rng.choice(resources)
            qty = rng.randint(0, max_qty)
            if rng.random() < 0.5:
                streams.append(waste_offer(firm, resource, qty, rng.randint(0, 9)))
            else:
                streams.append(
                    input_demand(firm, resource, qty, rng.randint(0, 9), rng.randint(0, 5))
                )
    transport = {
        (a, b, r): rng.randint(0, 5)
        for a in range(n)
        for b in range(n)
        if a != b
        for r in resources
    }
    transaction = {
        (a, b): rng.randint(0, 15) for a in range(n) for b in range(n) if a != b
    }
    return ExchangeScenario(
        n_agents=n, streams=tuple(streams), transport=transport, transaction=transaction
    )
