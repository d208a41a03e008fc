"""Cooperative-game tooling for industrial symbiosis networks.

Build transferable-utility games from coalition cost tables or firm-level
resource-exchange scenarios, represent them as marginal-contribution nets,
compute Shapley allocations and exact core verdicts, and synthesize the
subsidy/tax rules that make policy-promoted collaborations fair and stable
while blocking prohibited ones. All arithmetic is exact rational.
"""

from .coordination import (
    CoordinatedGame,
    IncentiveNet,
    Policy,
    PolicyLabel,
    classify,
    coordinate,
    enforce_policy,
    incentive_value,
    synthesize_prohibition,
    synthesize_promotion,
    validate_policy,
)
from .errors import (
    AgentCountMismatch,
    BoundExceeded,
    LengthMismatch,
    MissingCoalition,
    NonpositiveEpsilon,
    ParseError,
    PolicyInvalid,
    RosterMismatch,
    ScenarioError,
    SymbioError,
    TargetTooSmall,
    UnknownAgent,
    ValidationError,
)
from .exchange import (
    ExchangePlan,
    ExchangeScenario,
    ResourceStream,
    Shipment,
    input_demand,
    optimal_exchange_plan,
    scenario_to_game,
    t_value,
    waste_offer,
)
from .games import (
    ENUMERATION_BOUND,
    ISNGame,
    Money,
    as_money,
    check_superadditive,
    coalition,
    coalitions,
    make_isn_game,
    subgame,
)
from .mcnets import (
    MCNet,
    MCNetRule,
    applicable,
    compose,
    empty_net,
    evaluate,
    from_isn_game,
    net_shapley,
    rule_shapley,
)
from .solutions import (
    FACTORIAL_BOUND,
    CoreResult,
    core_nonempty,
    core_nonempty_by_enumeration,
    in_core,
    is_implementable,
    shapley_bruteforce,
)

__version__ = "0.1.0"

__all__ = [
    "AgentCountMismatch",
    "BoundExceeded",
    "CoordinatedGame",
    "CoreResult",
    "ENUMERATION_BOUND",
    "ExchangePlan",
    "ExchangeScenario",
    "FACTORIAL_BOUND",
    "ISNGame",
    "IncentiveNet",
    "LengthMismatch",
    "MCNet",
    "MCNetRule",
    "MissingCoalition",
    "Money",
    "NonpositiveEpsilon",
    "ParseError",
    "Policy",
    "PolicyInvalid",
    "PolicyLabel",
    "ResourceStream",
    "RosterMismatch",
    "ScenarioError",
    "Shipment",
    "SymbioError",
    "TargetTooSmall",
    "UnknownAgent",
    "ValidationError",
    "applicable",
    "as_money",
    "check_superadditive",
    "classify",
    "coalition",
    "coalitions",
    "compose",
    "coordinate",
    "core_nonempty",
    "core_nonempty_by_enumeration",
    "empty_net",
    "enforce_policy",
    "evaluate",
    "from_isn_game",
    "in_core",
    "incentive_value",
    "input_demand",
    "is_implementable",
    "make_isn_game",
    "net_shapley",
    "optimal_exchange_plan",
    "rule_shapley",
    "scenario_to_game",
    "shapley_bruteforce",
    "subgame",
    "synthesize_prohibition",
    "synthesize_promotion",
    "t_value",
    "validate_policy",
    "waste_offer",
]
