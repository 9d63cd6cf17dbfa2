from __future__ import annotations

import pytest

from nimcash import (
    UNLIMITED,
    OutOfRange,
    Region,
    Winner,
    WrongRegion,
    build_thresholds,
    classify,
    new_move_set,
    poor_thresholds,
    poor_winner,
    rich_winner,
)

CORPUS = [(1, 4), (1, 6), (1, 5, 6), (1, 4, 5), (1, 3, 4), (3, 5, 6, 10, 11)]


class TestBuildThresholds:
    def test_known_values_one_four(self, tables_cache):
        t = tables_cache((1, 4), 20)
        assert t.rich_i[13] == 10
        assert t.rich_ii[9] == 6
        assert t.rich_i[5] == 3 and t.rich_ii[5] == 4

    def test_base_range_is_zero(self, tables_cache):
        t = tables_cache((3, 5, 6, 10, 11), 30)
        for n in range(3):
            assert t.rich_i[n] == 0 and t.rich_ii[n] == 0

    @pytest.mark.parametrize("values", CORPUS)
    def test_defining_clauses_hold(self, values, tables_cache):
        """Re-verify all four clauses of the cutoff recursion independently."""
        t = tables_cache(values, 150)
        ms = t.moves
        w = t.winners
        fi, fii = t.rich_i, t.rich_ii
        for n in range(ms.a_min, 151):
            legal = [a for a in ms if a <= n]
            if w[n]:
                assert fi[n] == min(fii[n - a] + a for a in legal if not w[n - a])
                assert fii[n] == max(fi[n - a] for a in legal)
            else:
                assert fii[n] == max(fi[n - a] for a in legal)
                assert fi[n] == min(
                    fii[n - a] + a for a in legal if fi[n - a] == fii[n]
                )

    def test_witness_moves_attain_the_cutoff(self, tables_cache):
        t = tables_cache((1, 4), 60)
        for n in range(1, 61):
            a = int(t.rich_i_move[n])
            assert a in t.moves and a <= n
            assert t.rich_i[n] == t.rich_ii[n - a] + a

    def test_least_cash_semantics(self, tables_cache, cube_cache):
        """On mover-winning n, rich_i is exactly the least winning budget."""
        for values in [(1, 4), (3, 5, 6, 10, 11)]:
            t = tables_cache(values, 60)
            cube = cube_cache(values, 60)
            for n in range(61):
                if t.winners[n]:
                    least = next(d for d in range(n + 1) if cube.mover_wins(n, d, n))
                    assert least == t.rich_i[n], n

    def test_boundary_sharpness(self, tables_cache, cube_cache):
        for values in [(1, 3, 4), (2, 3)]:
            t = tables_cache(values, 60)
            cube = cube_cache(values, 60)
            for n in range(61):
                fi, fii = int(t.rich_i[n]), int(t.rich_ii[n])
                if fii >= 1:
                    assert cube.winner(n, fi, fii - 1) is Winner.MOVER
                    assert cube.winner(n, fi - 1, fii) is Winner.OPPONENT

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            build_thresholds(new_move_set([1, 2]), -1)


class TestPoorThresholds:
    def test_min_one(self):
        g = poor_thresholds(new_move_set([1, 4]), 10)
        assert (g.poor_i, g.poor_ii) == (6, 5)

    def test_min_three(self):
        g = poor_thresholds(new_move_set([3, 5, 6, 10, 11]), 7)
        assert (g.poor_i, g.poor_ii) == (5, 3)

    def test_zero_stones(self):
        for a1 in (1, 2, 5):
            g = poor_thresholds(new_move_set([a1, a1 + 1]), 0)
            assert (g.poor_i, g.poor_ii) == (1, 0)

    def test_depends_only_on_minimum(self):
        for n in range(50):
            a = poor_thresholds(new_move_set([3, 5]), n)
            b = poor_thresholds(new_move_set([3, 11, 20]), n)
            assert a == b

    @pytest.mark.parametrize("values", CORPUS)
    def test_sanity_after_irregular_head(self, values, tables_cache):
        """Poor cutoffs never exceed rich ones once past the head below max(A)."""
        t = tables_cache(values, 500)
        for n in range(t.moves.a_max, 501):
            g = poor_thresholds(t.moves, n)
            assert g.poor_i <= t.rich_i[n], n
            assert g.poor_ii <= t.rich_ii[n], n


class TestClassify:
    def test_rich_one_side(self, tables_cache):
        t = tables_cache((1, 4), 20)
        assert classify(t, 13, 12, 2) is Region.RICH_I

    def test_critical(self, tables_cache):
        t = tables_cache((1, 4), 20)
        assert classify(t, 13, 8, 7) is Region.CRITICAL

    def test_rich_precedence_over_poor(self, tables_cache):
        # (5;0,9) satisfies both the poor-II and rich-II hypotheses; rich wins
        t = tables_cache((1, 4), 20)
        assert classify(t, 5, 0, 9) is Region.RICH_II

    def test_unlimited_clamped(self, tables_cache):
        t = tables_cache((1, 3, 4), 20)
        assert classify(t, 14, UNLIMITED, 10) is Region.RICH_BOTH

    def test_total_on_box(self, tables_cache):
        t = tables_cache((1, 4, 5), 30)
        for n in range(31):
            for d in range(31):
                for e in range(31):
                    assert classify(t, n, d, e) in Region

    def test_out_of_range(self, tables_cache):
        t = tables_cache((1, 4), 20)
        with pytest.raises(OutOfRange):
            classify(t, 21, 3, 3)


class TestRichWinner:
    def test_rich_mover_wins(self, tables_cache):
        t = tables_cache((1, 4), 20)
        assert rich_winner(t, 13, 12, 2) is Winner.MOVER

    def test_rich_both_follows_standard_game(self, tables_cache):
        t = tables_cache((1, 4), 20)
        assert rich_winner(t, 10, 20, 20) is Winner.OPPONENT

    def test_worked_example_rich_state(self, tables_cache):
        t = tables_cache((1, 3, 4), 20)
        assert rich_winner(t, 14, UNLIMITED, 10) is Winner.OPPONENT

    def test_wrong_region(self, tables_cache):
        t = tables_cache((1, 4), 20)
        with pytest.raises(WrongRegion):
            rich_winner(t, 13, 8, 7)


class TestPoorWinner:
    def test_both_poor_tie_loses(self):
        assert poor_winner(new_move_set([1, 3, 4]), 14, 4, 4) is Winner.OPPONENT

    def test_poor_mover_against_funded_opponent(self):
        ms = new_move_set([3, 5, 6, 10, 11])
        assert poor_winner(ms, 20, 2, 9) is Winner.OPPONENT

    def test_both_poor_margin_wins(self):
        assert poor_winner(new_move_set([1, 4]), 9, 3, 2) is Winner.MOVER

    def test_wrong_region(self):
        with pytest.raises(WrongRegion):
            poor_winner(new_move_set([1, 4]), 9, 9, 9)

    def test_minimum_move_counting(self):
        ms = new_move_set([3, 5])
        # both poor at n=30 (cutoffs 16/15): compare floor(d/3) vs floor(e/3)
        assert poor_winner(ms, 30, 8, 5) is Winner.MOVER
        assert poor_winner(ms, 30, 5, 5) is Winner.OPPONENT


class TestRegimeAgreement:
    @pytest.mark.parametrize("values", [(1, 4), (3, 5, 6, 10, 11)])
    def test_non_critical_regions_match_oracle(self, values, tables_cache, cube_cache):
        t = tables_cache(values, 40)
        cube = cube_cache(values, 40)
        ms = t.moves
        for n in range(41):
            for d in range(41):
                for e in range(41):
                    region = classify(t, n, d, e)
                    if region is Region.CRITICAL:
                        continue
                    if region in (Region.RICH_I, Region.RICH_II, Region.RICH_BOTH):
                        got = rich_winner(t, n, d, e)
                    else:
                        got = poor_winner(ms, n, d, e)
                    assert got is cube.winner(n, d, e), (values, n, d, e, region)
