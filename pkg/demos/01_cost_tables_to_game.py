#!/usr/bin/env python3
"""Build a coalition game from total-cost tables and validate its shape.

Three firms can save money by cooperating: T holds what each group pays
without any exchange, O what it pays when cooperating. The worth of a
group is the cost reduction T - O; singletons are worth nothing because
a firm alone has nobody to trade with.
"""

from symbio import check_superadditive, coalitions, make_isn_game

T = {(0, 1): 30, (0, 2): 24, (1, 2): 26, (0, 1, 2): 60}
O = {(0, 1): 20, (0, 2): 20, (1, 2): 20, (0, 1, 2): 48}

game = make_isn_game(3, T, O)

print("coalition worths (T - O):")
for group in coalitions(3, min_size=2):
    print(f"  {sorted(group)}: {game.value(group)}")

print("singletons and the empty set are normalized to zero:")
print(f"  v({{0}}) = {game.value({0})}, v({{}}) = {game.value(set())}")

violation = check_superadditive(game)
if violation is None:
    print("superadditive: merging disjoint groups never loses value")
else:
    a, b = violation
    print(f"NOT superadditive: {sorted(a)} + {sorted(b)} is worth less than apart")
