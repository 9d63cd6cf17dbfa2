#!/usr/bin/env python3
"""A guided tour of one game: {1,3,4} from 14 stones.

Removing a stones costs the mover a dollars.  With no budget pressure the
second player owns n = 14; squeeze both budgets and the position flips back
and forth between the players depending on who can outlast whom.
"""

from nimcash import (
    UNLIMITED,
    CashState,
    WinEngine,
    Winner,
    apply_move,
    best_move,
    new_move_set,
    solve_cash,
    solve_standard,
    wins_miserly,
)

ms = new_move_set([1, 3, 4])
print(f"move set {ms}: remove 1, 3, or 4 stones; each removal costs its size\n")

print("no budgets at all (the classical game):")
print(f"  14 stones -> {solve_standard(ms, 14).as_player()} wins\n")

print("the same 14 stones under different budgets:")
for d, e in [(UNLIMITED, 10), (4, 4), (9, 9)]:
    state = CashState(14, d, e)
    result = solve_cash(ms, state)
    moves = f", winning moves {list(result.winning_moves)}" if result.winning_moves else ""
    print(f"  {state}: {result.winner.as_player()} wins{moves}")
print()

print("rich pockets lose, empty pockets lose, the middle wins:")
engine = WinEngine(ms, 20)
for d, e in [(UNLIMITED, 10), (4, 4), (9, 9)]:
    decision = engine.decide(14, d, e)
    print(f"  (14;{d},{e}) sits in the {decision.region.value} regime "
          f"-> decided by the {decision.method} rule")
print()

print("four plies down the main line from (14;9,9), both sides removing 1:")
state = CashState(14, 9, 9)
for _ in range(4):
    a = best_move(ms, state)
    if a is None:
        a = 1  # the losing side stalls with the cheapest move
    nxt = apply_move(state, a, ms)
    print(f"  from {state} remove {a} -> {nxt}")
    state = nxt
result = solve_cash(ms, state)
print(f"  ...and {state} is again a {result.winner.as_player()} win\n")

print("grinding wins: forced to remove 1 every turn, who still wins?")
for state, who in [
    (CashState(14, 4, 4), Winner.OPPONENT),
    (CashState(9, 8, 5), Winner.MOVER),
]:
    ok = wins_miserly(ms, state, who)
    print(f"  {state}: {who.as_player()} grinding minimum moves -> "
          f"{'wins' if ok else 'does not win'}")
