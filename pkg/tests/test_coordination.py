import random
from fractions import Fraction

import pytest

from symbio.coordination import (
    CoordinatedGame,
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
from symbio.errors import NonpositiveEpsilon, PolicyInvalid, RosterMismatch, TargetTooSmall
from symbio.games import ISNGame, coalitions, subgame
from symbio.mcnets import MCNet, MCNetRule, empty_net, net_shapley, from_isn_game
from symbio.solutions import is_implementable

from helpers import random_game


def test_classify_defaults_to_permitted():
    policy = Policy({frozenset({0, 1}): PolicyLabel.PROMOTED})
    assert classify(policy, {0, 1}) is PolicyLabel.PROMOTED
    assert classify(policy, {1, 2}) is PolicyLabel.PERMITTED
    banned = Policy({frozenset({0, 1, 2}): PolicyLabel.PROHIBITED})
    assert classify(banned, {0, 1, 2}) is PolicyLabel.PROHIBITED


def test_policy_validation():
    with pytest.raises(ValueError):
        Policy({frozenset({0}): PolicyLabel.PROMOTED})
    with pytest.raises(ValueError):
        Policy.from_groups(promoted=[{0, 1}], prohibited=[{0, 1}])


def test_validate_policy_mutual_exclusivity():
    ok = Policy.from_groups(promoted=[{0, 1}, {2, 3}])
    assert validate_policy(ok) is None
    clash = Policy.from_groups(promoted=[{0, 1}, {1, 2}])
    assert validate_policy(clash) == (frozenset({0, 1}), frozenset({1, 2}))
    assert validate_policy(Policy.from_groups()) is None


def test_incentive_value_is_mcnet_evaluation():
    net = MCNet(3, (MCNetRule({0, 1, 2}, set(), Fraction(1, 2)),))
    assert incentive_value(net, {0, 1, 2}) == Fraction(1, 2)
    assert incentive_value(net, {0, 1}) == 0
    assert incentive_value(empty_net(3), {0, 1}) == 0


def test_promotion_on_g3_grand_coalition(g3):
    rule, amount = synthesize_promotion(g3, {0, 1, 2})
    assert amount == Fraction(1, 2)
    assert (rule.positive, rule.negative, rule.value) == (
        frozenset({0, 1, 2}),
        frozenset(),
        Fraction(1, 2),
    )
    coordinated = coordinate(g3, MCNet(3, (rule,)))
    assert is_implementable(subgame(coordinated, {0, 1, 2}))


def test_promotion_of_two_agent_group_needs_nothing(g3):
    assert synthesize_promotion(g3, {0, 1}) == (None, 0)


def test_promotion_on_symmetric_game(g3_prime):
    rule, amount = synthesize_promotion(g3_prime, {0, 1, 2})
    assert amount == 3  # Shapley is (4,4,4); each pair needs (10-8)*3/2
    coordinated = coordinate(g3_prime, MCNet(3, (rule,)))
    assert is_implementable(subgame(coordinated, {0, 1, 2}))


def test_promotion_target_too_small(g3):
    with pytest.raises(TargetTooSmall):
        synthesize_promotion(g3, {0})


def test_prohibition_rule(g3):
    rule = synthesize_prohibition(g3, {0, 1}, 1)
    assert rule.value == -11
    coordinated = coordinate(g3, MCNet(3, (rule,)))
    assert coordinated.value({0, 1}) == -1
    flat = ISNGame.from_values(3, {})
    assert synthesize_prohibition(flat, {0, 1}, 1).value == -1


def test_prohibition_validation(g3):
    with pytest.raises(TargetTooSmall):
        synthesize_prohibition(g3, {0}, 1)
    with pytest.raises(NonpositiveEpsilon):
        synthesize_prohibition(g3, {0, 1}, 0)


def test_prohibition_degenerate_zero_tax():
    game = ISNGame.from_values(2, {(0, 1): -1})
    assert synthesize_prohibition(game, {0, 1}, 1) is None


def test_coordinate_additivity(g3):
    bump = MCNet(3, (MCNetRule({0, 1, 2}, set(), Fraction(1, 2)),))
    coordinated = coordinate(g3, bump)
    assert coordinated.value({0, 1, 2}) == Fraction(25, 2)
    for members in coalitions(3):
        if members != frozenset({0, 1, 2}):
            assert coordinated.value(members) == g3.value(members)
    identity = coordinate(g3, empty_net(3))
    for members in coalitions(3):
        assert identity.value(members) == g3.value(members)


def test_coordinate_matches_mcnet_composition(g3):
    rng = random.Random(2)
    rules = tuple(
        MCNetRule({0, 1}, {2}, rng.randint(1, 5)) for _ in range(2)
    ) + (MCNetRule({1, 2}, set(), Fraction(-3, 2)),)
    coordinated = coordinate(g3, MCNet(3, rules))
    net = coordinated.as_mcnet()
    from symbio.mcnets import evaluate

    for members in coalitions(3):
        assert evaluate(net, members) == coordinated.value(members)


def test_coordinate_roster_mismatch(g3):
    with pytest.raises(RosterMismatch):
        coordinate(g3, empty_net(4))


def test_coordination_additivity_for_arbitrary_nets():
    rng = random.Random(19)
    for _ in range(15):
        n = rng.randint(2, 6)
        game = random_game(rng, n)
        rules = []
        for _ in range(rng.randint(0, 4)):
            pos = set(rng.sample(range(n), rng.randint(0, n)))
            rest = [i for i in range(n) if i not in pos]
            neg = set(rng.sample(rest, rng.randint(0, len(rest))))
            if not (pos | neg) or neg == set(range(n)):
                continue
            value = Fraction(rng.randint(-12, 12), rng.choice([1, 2, 3]))
            if value == 0:
                continue
            rules.append(MCNetRule(pos, neg, value))
        net = MCNet(n, tuple(rules))
        coordinated = coordinate(game, net)
        for members in coalitions(n):
            assert coordinated.value(members) == game.value(members) + incentive_value(
                net, members
            )


def test_incentive_rules_target_exactly_one_coalition(g3):
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(2, 5)
        game = random_game(rng, n)
        size = rng.randint(2, n)
        target = frozenset(rng.sample(range(n), size))
        rule = MCNetRule(target, frozenset(range(n)) - target, rng.randint(1, 7))
        coordinated = coordinate(game, MCNet(n, (rule,)))
        for members in coalitions(n):
            expected = game.value(members) + (rule.value if members == target else 0)
            assert coordinated.value(members) == expected


def test_promotion_additivity_of_shapley_shift(g3):
    rule, amount = synthesize_promotion(g3, {0, 1, 2})
    coordinated = coordinate(g3, MCNet(3, (rule,)))
    shifted = net_shapley(coordinated.as_mcnet())
    base = net_shapley(from_isn_game(g3))
    assert shifted == tuple(b + amount / 3 for b in base)


def test_enforce_policy_promotion_only(g3):
    net = enforce_policy(g3, Policy.from_groups(promoted=[{0, 1, 2}]))
    assert [(r.positive, r.value) for r in net.rules] == [
        (frozenset({0, 1, 2}), Fraction(1, 2))
    ]


def test_enforce_policy_prohibition_only(g3):
    net = enforce_policy(g3, Policy.from_groups(prohibited=[{0, 1}]), epsilon=1)
    assert [(r.positive, r.negative, r.value) for r in net.rules] == [
        (frozenset({0, 1}), frozenset({2}), Fraction(-11))
    ]


def test_enforce_policy_rejects_overlapping_promotions(g3):
    with pytest.raises(PolicyInvalid):
        enforce_policy(g3, Policy.from_groups(promoted=[{0, 1}, {1, 2}]))


def test_enforce_policy_prices_in_nested_prohibition():
    rng = random.Random(31)
    game = random_game(rng, 4, lo=0, hi=12)
    policy = Policy.from_groups(promoted=[{0, 1, 2}], prohibited=[{0, 1}])
    net = enforce_policy(game, policy, epsilon=2)
    coordinated = coordinate(game, net)
    assert coordinated.value({0, 1}) == -2
    assert is_implementable(subgame(coordinated, {0, 1, 2}))


def test_enforce_policy_non_interference():
    rng = random.Random(37)
    for _ in range(10):
        game = random_game(rng, 4)
        policy = Policy.from_groups(promoted=[{0, 1}], prohibited=[{2, 3}])
        coordinated = coordinate(game, enforce_policy(game, policy))
        labeled = {frozenset({0, 1}), frozenset({2, 3})}
        for members in coalitions(4):
            if members not in labeled:
                assert coordinated.value(members) == game.value(members)


def test_promotion_minimality_at_one_permille(g3_prime):
    rule, amount = synthesize_promotion(g3_prime, {0, 1, 2})
    assert amount > 0
    shaved = MCNetRule(rule.positive, rule.negative, amount * Fraction(999, 1000))
    coordinated = coordinate(g3_prime, MCNet(3, (shaved,)))
    assert not is_implementable(subgame(coordinated, {0, 1, 2}))


def test_disjoint_promotions_are_simultaneously_implementable():
    rng = random.Random(41)
    for _ in range(10):
        game = random_game(rng, 5)
        policy = Policy.from_groups(promoted=[{0, 1}, {2, 3, 4}])
        coordinated = coordinate(game, enforce_policy(game, policy))
        assert is_implementable(subgame(coordinated, {0, 1}))
        assert is_implementable(subgame(coordinated, {2, 3, 4}))


def test_coordinated_game_validates_roster(g3):
    with pytest.raises(RosterMismatch):
        CoordinatedGame(g3, empty_net(2))
