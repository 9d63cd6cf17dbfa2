from __future__ import annotations

import pytest

from nimcash import (
    UNLIMITED,
    CashState,
    CashTable,
    OutOfRange,
    ResourceLimit,
    Winner,
    best_move,
    legal_moves,
    new_move_set,
    solve_cash,
    solve_standard,
    standard_winners,
    wins_miserly,
    wins_normally,
)
from reference import ref_mover_wins, ref_standard_wins, ref_wins_miserly

SETS = [(1, 3, 4), (1, 4), (2, 3), (3, 5, 6, 10, 11), (1, 2, 5)]


class TestAgainstReference:
    @pytest.mark.parametrize("values", SETS)
    def test_single_query_solver_matches_reference(self, values):
        ms = new_move_set(values)
        memo: dict = {}
        for n in range(15):
            for d in range(15):
                for e in range(15):
                    got = solve_cash(ms, CashState(n, d, e)).winner
                    want = ref_mover_wins(values, n, d, e, memo)
                    assert (got is Winner.MOVER) == want, (n, d, e)

    @pytest.mark.parametrize("values", SETS)
    def test_cube_matches_reference(self, values):
        ms = new_move_set(values)
        table = CashTable(ms, 14)
        memo: dict = {}
        for n in range(15):
            for d in range(15):
                for e in range(15):
                    assert table.mover_wins(n, d, e) == ref_mover_wins(
                        values, n, d, e, memo
                    ), (n, d, e)

    def test_unlimited_funds_queries(self):
        ms = new_move_set([1, 3, 4])
        memo: dict = {}
        for n in range(12):
            got = solve_cash(ms, CashState(n, UNLIMITED, 5)).winner
            assert (got is Winner.MOVER) == ref_mover_wins((1, 3, 4), n, n, 5, memo)

    @pytest.mark.parametrize("values", SETS)
    def test_standard_matches_reference(self, values):
        ms = new_move_set(values)
        win = standard_winners(ms, 60)
        memo: dict = {}
        for n in range(61):
            assert bool(win[n]) == ref_standard_wins(values, n, memo)


class TestWorkedExample:
    """The {1,3,4} tour: every labelled state, exact."""

    MS = new_move_set([1, 3, 4])

    @pytest.mark.parametrize(
        "state, winner",
        [
            (CashState(14, UNLIMITED, 10), Winner.OPPONENT),
            (CashState(14, 4, 4), Winner.OPPONENT),
            (CashState(14, 9, 9), Winner.MOVER),
            (CashState(9, 8, 5), Winner.MOVER),
            (CashState(10, 8, 6), Winner.MOVER),
            (CashState(12, 8, 8), Winner.MOVER),
            (CashState(7, 7, 4), Winner.MOVER),
            (CashState(8, 7, 5), Winner.MOVER),
            (CashState(10, 7, 7), Winner.MOVER),
            (CashState(0, 5, 5), Winner.OPPONENT),
        ],
    )
    def test_labelled_states(self, state, winner):
        assert solve_cash(self.MS, state).winner is winner

    def test_winning_moves_consistency(self):
        result = solve_cash(self.MS, CashState(14, 9, 9))
        assert result.winner is Winner.MOVER
        assert result.winning_moves
        assert 1 in result.winning_moves
        for a in result.winning_moves:
            assert a in legal_moves(self.MS, CashState(14, 9, 9))

    def test_plies_bound(self):
        assert solve_cash(self.MS, CashState(14, 9, 9)).plies_bound == 14
        ms = new_move_set([3, 5])
        assert solve_cash(ms, CashState(14, 14, 14)).plies_bound == 5


class TestSolveStandard:
    def test_examples(self):
        assert solve_standard(new_move_set([1, 3, 4]), 14) is Winner.OPPONENT
        assert solve_standard(new_move_set([1, 4]), 7) is Winner.OPPONENT
        assert solve_standard(new_move_set([1, 4]), 0) is Winner.OPPONENT

    def test_equals_cash_game_with_unlimited_budgets(self):
        ms = new_move_set([2, 3, 7])
        for n in range(40):
            cash = solve_cash(ms, CashState(n, UNLIMITED, UNLIMITED)).winner
            assert solve_standard(ms, n) is cash


class TestWinsNormally:
    def test_examples(self):
        ms = new_move_set([1, 3, 4])
        assert wins_normally(ms, 10, 7)
        for d in [0, 5, 9, 14, 50]:
            assert not wins_normally(ms, 14, d)

    def test_just_below_threshold(self):
        # {1,4}: the mover's cutoff at n=13 is 10, so 9 loses against a rich opponent
        assert not wins_normally(new_move_set([1, 4]), 13, 9)
        assert wins_normally(new_move_set([1, 4]), 13, 10)


class TestWinsMiserly:
    MS = new_move_set([1, 3, 4])

    def test_opponent_grinds_out_a_win(self):
        assert wins_miserly(self.MS, CashState(14, 4, 4), Winner.OPPONENT)

    def test_mover_wins_miserly(self):
        assert wins_miserly(self.MS, CashState(9, 8, 5), Winner.MOVER)

    def test_lost_mover(self):
        assert not wins_miserly(self.MS, CashState(0, 5, 5), Winner.MOVER)

    @pytest.mark.parametrize("values", [(1, 3, 4), (2, 3), (3, 5, 6, 10, 11)])
    def test_matches_reference(self, values):
        ms = new_move_set(values)
        for n in range(13):
            for d in range(10):
                for e in range(10):
                    s = CashState(n, d, e)
                    assert wins_miserly(ms, s, Winner.MOVER) == ref_wins_miserly(
                        values, n, d, e, True
                    )
                    assert wins_miserly(ms, s, Winner.OPPONENT) == ref_wins_miserly(
                        values, n, d, e, False
                    )

    def test_miserly_win_implies_real_win(self):
        ms = new_move_set([1, 4])
        for n in range(15):
            for d in range(12):
                for e in range(12):
                    if wins_miserly(ms, CashState(n, d, e), Winner.MOVER):
                        assert solve_cash(ms, CashState(n, d, e)).winner is Winner.MOVER


class TestBestMove:
    def test_smallest_winning_move(self):
        ms = new_move_set([1, 3, 4])
        assert best_move(ms, CashState(14, 9, 9)) == 1

    def test_absent_when_lost(self):
        ms = new_move_set([1, 3, 4])
        assert best_move(ms, CashState(14, 4, 4)) is None

    def test_tie_break_on_multiple_winners(self):
        # at (4;4,0) for {1,4} both 1 and 4 win; the smaller is reported
        ms = new_move_set([1, 4])
        result = solve_cash(ms, CashState(4, 4, 0))
        assert set(result.winning_moves) == {1, 4}
        assert best_move(ms, CashState(4, 4, 0)) == 1


class TestResourceLimits:
    def test_solver_bound(self):
        ms = new_move_set([1, 2])
        with pytest.raises(ResourceLimit):
            solve_cash(ms, CashState(100, 5, 5), bound=50)
        solve_cash(ms, CashState(50, 5, 5), bound=50)

    def test_env_var_bound(self, monkeypatch):
        monkeypatch.setenv("NIMCASH_MAX_N", "30")
        ms = new_move_set([1, 2])
        with pytest.raises(ResourceLimit):
            solve_cash(ms, CashState(31, 5, 5))

    def test_cube_out_of_range(self):
        table = CashTable(new_move_set([1, 2]), 10)
        with pytest.raises(OutOfRange):
            table.mover_wins(11, 3, 3)
        table_small_cap = CashTable(new_move_set([1, 2]), 10, cap=4)
        with pytest.raises(OutOfRange):
            table_small_cap.mover_wins(10, 9, 3)
        assert isinstance(table_small_cap.mover_wins(10, 4, 3), bool)


class TestTableInvariants:
    def test_winner_iff_winning_moves(self, cube_cache):
        table = cube_cache((1, 3, 4), 20)
        for n in range(21):
            for d in range(0, 21, 3):
                for e in range(0, 21, 3):
                    result = table.solve(CashState(n, d, e))
                    assert (result.winner is Winner.MOVER) == bool(result.winning_moves)

    def test_soundness_audit_clean(self, cube_cache):
        assert cube_cache((1, 3, 4), 60).audit_soundness() == []
        assert cube_cache((3, 5, 6, 10, 11), 60).audit_soundness() == []

    def test_cube_is_read_only(self):
        table = CashTable(new_move_set([1, 3, 4]), 10)
        with pytest.raises(ValueError):
            table.win[5, 5, 5] = True

    def test_soundness_audit_catches_corruption(self):
        table = CashTable(new_move_set([1, 3, 4]), 30)
        table.win.flags.writeable = True  # deliberately break the contract
        table.win[17, 9, 9] = not table.win[17, 9, 9]
        bad = table.audit_soundness()
        assert bad
        assert any(n in (17, 18, 20, 21) for n, _, _ in bad)


class TestRandomSets:
    def test_cube_vs_reference_on_random_move_sets(self):
        import random

        rng = random.Random(20250811)
        for _ in range(12):
            size = rng.randint(1, 4)
            values = tuple(sorted(rng.sample(range(1, 9), size)))
            ms = new_move_set(values)
            table = CashTable(ms, 12)
            memo: dict = {}
            for n in range(13):
                for d in range(13):
                    for e in range(13):
                        assert table.mover_wins(n, d, e) == ref_mover_wins(
                            values, n, d, e, memo
                        ), (values, n, d, e)

    def test_singleton_move_set(self):
        ms = new_move_set([5])
        assert solve_standard(ms, 5) is Winner.MOVER
        assert solve_standard(ms, 12) is Winner.OPPONENT
        result = solve_cash(ms, CashState(15, 9, 11))
        assert result.winner is Winner.OPPONENT  # mover affords one move, not two
        assert solve_cash(ms, CashState(15, 11, 9)).winner is Winner.MOVER


class TestDeepPositions:
    def test_single_query_solver_matches_closed_form_at_depth(self):
        """The O(n^2) solver agrees with the family closed form far past cube range."""
        from nimcash import family_win, one_l

        ms = new_move_set([1, 4])
        kind = one_l(4)
        n = 1501
        for d, e in [(700, 800), (752, 751), (751, 752), (300, 900), (900, 300), (760, 757)]:
            want = family_win(kind, n, d, e)
            got = solve_cash(ms, CashState(n, d, e)).winner
            assert got is want, (n, d, e)
