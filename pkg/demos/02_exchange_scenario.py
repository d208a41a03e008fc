#!/usr/bin/env python3
"""From firm-level waste/input streams to a cooperative game.

Firm 0 pays 5/unit to discharge 10 units of slag; firm 1 pays 7/unit for
8 units of a virgin input it could replace with treated slag (treatment
2/unit). Shipping costs 1/unit and opening the relation costs a fixed 10.
The pair's worth is what the optimal exchange plan saves.
"""

from symbio import (
    ExchangeScenario,
    input_demand,
    optimal_exchange_plan,
    scenario_to_game,
    t_value,
    waste_offer,
)

scenario = ExchangeScenario(
    n_agents=2,
    streams=(
        waste_offer(0, "slag", 10, 5),
        input_demand(1, "slag", 8, 7, 2),
    ),
    transport={(0, 1, "slag"): 1},
    transaction={(0, 1): 10},
)

print("baseline cost, nobody cooperates:", t_value(scenario, {0, 1}))
plan, realized = optimal_exchange_plan(scenario, {0, 1})
for s in plan.shipments:
    print(f"optimal plan ships {s.quantity} {s.resource} from firm {s.from_firm} to {s.to_firm}")
print("realized cost:", realized)

game = scenario_to_game(scenario)
print("pair worth:", game.value({0, 1}))

# A transaction fee larger than the achievable saving kills the exchange.
pricey = ExchangeScenario(
    n_agents=2,
    streams=scenario.streams,
    transport=scenario.transport,
    transaction={(0, 1): 100},
)
plan, realized = optimal_exchange_plan(pricey, {0, 1})
print("with a 100 fee the best plan ships nothing:", plan.shipments == ())
print("pair worth collapses to:", scenario_to_game(pricey).value({0, 1}))
