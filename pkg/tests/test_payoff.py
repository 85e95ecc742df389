"""Unit tests for the occurrence/conditional decomposition and the oracle."""

from fractions import Fraction

import pytest

from baccarat import (
    CLASSIC,
    InfoSet,
    MODERN,
    PARLOR,
    Action,
    PlayerRow,
    STARRED_CELLS,
    best_response,
    build_reduced_game,
    classify_info_sets,
    improvement_at_info_set,
    info_set_stats,
    mandated_banker_strategy,
    oracle_payoff_entry,
    tableau_action,
)
from baccarat.payoff import (
    natural_probability,
    oracle_outcome_distribution,
    two_card_total_distribution,
    value_distribution,
)

F = Fraction
S5, D5 = PlayerRow.STAND_ON_5, PlayerRow.DRAW_ON_5


def test_value_distribution():
    nu = value_distribution()
    assert nu[0] == F(4, 13)
    assert all(nu[v] == F(1, 13) for v in range(1, 10))
    assert sum(nu.values()) == 1


def test_two_card_total_distribution():
    tau = two_card_total_distribution()
    assert tau[0] == F(25, 169)
    assert all(tau[t] == F(16, 169) for t in range(1, 10))
    assert sum(tau.values()) == 1


def test_natural_probability():
    # 1 - (137/169)^2: at least one side holds an 8 or 9 on two cards.
    assert natural_probability() == 1 - F(137, 169) ** 2
    assert natural_probability() == F(9792, 28561)


class TestInfoSetStats:
    def test_occurrence_of_stood_pat_cells(self):
        # Banker 6, Player stands: 48/169 stand totals vs 32/169 by row.
        assert info_set_stats(InfoSet(6, None), S5).occurrence == F(768, 28561)
        assert info_set_stats(InfoSet(6, None), D5).occurrence == F(512, 28561)

    def test_occurrences_partition_the_non_natural_mass(self):
        for row in (S5, D5):
            total = sum(
                info_set_stats(InfoSet(b, c), row).occurrence
                for b in range(8)
                for c in (*range(10), None)
            )
            assert total == F(137, 169) ** 2

    def test_improvement_is_affine_in_alpha(self):
        info = InfoSet(5, 4)
        for row in (S5, D5):
            f0 = improvement_at_info_set(info, row, 0)
            f1 = improvement_at_info_set(info, row, F(1, 30))
            f2 = improvement_at_info_set(info, row, F(1, 15))
            assert f2 - f1 == f1 - f0  # equal steps, equal increments

    def test_known_improvements(self):
        assert improvement_at_info_set(InfoSet(6, None), D5, 0) == F(1, 13)
        assert improvement_at_info_set(InfoSet(6, None), D5, F(1, 20)) == F(7, 104)
        assert improvement_at_info_set(InfoSet(4, 1), D5, F(1, 20)) == F(1, 390)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            info_set_stats(InfoSet(6, None), D5, 0.05)


class TestClassification:
    def test_agrees_at_zero(self):
        cls = classify_info_sets()
        assert cls.agrees_with_tableau
        assert set(cls.starred) == set(STARRED_CELLS)
        assert cls.determined[InfoSet(0, 0)] is Action.DRAW
        assert cls.determined[InfoSet(7, 3)] is Action.STAND

    def test_determined_means_better_under_both_rows(self):
        cls = classify_info_sets(F(1, 20))
        for info, action in cls.determined.items():
            for row in (S5, D5):
                imp = improvement_at_info_set(info, row, F(1, 20))
                assert (imp > 0) == (action is Action.DRAW), (info, row)

    def test_starred_cells_split_by_row(self):
        # A starred cell's draw edge must point in different directions
        # (or vanish) across the two rows -- that is what makes it strategic.
        cls = classify_info_sets()
        for info in cls.starred:
            signs = {
                improvement_at_info_set(info, row, 0) > 0 for row in (S5, D5)
            }
            zero = any(
                improvement_at_info_set(info, row, 0) == 0 for row in (S5, D5)
            )
            assert len(signs) == 2 or zero, info


class TestReducedGame:
    def test_full_game_shape(self):
        game = build_reduced_game(CLASSIC)
        assert game.row_labels == (S5, D5)
        assert len(game.column_labels) == 16
        assert game.column_labels[0] == "SSSS"
        assert game.column_labels[-1] == "DDDD"
        assert len(game.A) == 2 and len(game.A[0]) == 16

    def test_modern_game_shape(self):
        game = build_reduced_game(MODERN, F(1, 20))
        assert game.column_labels == ("SS", "SD", "DS", "DD")

    def test_zero_sum_at_zero_commission(self):
        game = build_reduced_game(PARLOR)
        for r in range(2):
            for j in range(16):
                assert game.B[r][j] == -game.A[r][j]

    def test_zero_sum_matrix_ignores_commission(self):
        g0 = build_reduced_game(CLASSIC, 0)
        g1 = build_reduced_game(CLASSIC, F(1, 20))
        assert g0.A == g1.A
        assert g0.B != g1.B

    def test_columns_match_their_labels(self):
        game = build_reduced_game(CLASSIC)
        j = game.column_labels.index("DSDS")
        assert game.columns[j] == (
            Action.DRAW,
            Action.STAND,
            Action.DRAW,
            Action.STAND,
        )
        assignment = game.column_assignment(j)
        assert assignment[InfoSet(3, 9)] is Action.DRAW
        assert assignment[InfoSet(6, None)] is Action.STAND

    def test_column_strategy_extends_by_tableau(self):
        game = build_reduced_game(CLASSIC)
        strat = game.banker_strategy(game.column_labels.index("DDDD"))
        for cell in STARRED_CELLS:
            assert strat[cell] is Action.DRAW
        for b in range(8):
            for c in (*range(10), None):
                info = InfoSet(b, c)
                fixed = tableau_action(info)
                if fixed is not None:
                    assert strat[info] is fixed

    def test_bound_enforcement(self):
        with pytest.raises(ValueError):
            build_reduced_game(CLASSIC, F(1, 10))
        game = build_reduced_game(CLASSIC, F(1, 10), enforce_bound=False)
        assert len(game.column_labels) == 16


def test_oracle_agrees_on_spot_entries():
    """Two independently computed payoffs for the same pure profiles."""
    game = build_reduced_game(MODERN, F(1, 30))
    for label in ("SS", "DD"):
        j = game.column_labels.index(label)
        strat = game.banker_strategy(j)
        for r, row in enumerate(game.row_labels):
            pe, be = oracle_payoff_entry(row, strat, F(1, 30))
            assert pe == game.A[r][j]
            assert be == game.B[r][j]


def test_oracle_distribution_is_a_distribution():
    pw, bw, tie = oracle_outcome_distribution(D5, mandated_banker_strategy())
    assert pw + bw + tie == 1
    assert 0 < pw < bw < 1  # the drawing game favors Banker's side


class TestBestResponse:
    def test_banker_ties_at_equilibrium_row_mix(self):
        # At Player's classic equilibrium mix, the (6,-) cell is exactly
        # indifferent; the tie must be reported, with stand as tiebreak.
        p = F(179, 214)
        br = best_response("banker", (1 - p, p), CLASSIC, F(1, 20))
        assert InfoSet(6, None) in br.ties
        assert br.actions[InfoSet(6, None)] is Action.STAND

    def test_player_response_to_all_stand(self):
        game = build_reduced_game(CLASSIC)
        j = game.column_labels.index("SSSS")
        weights = tuple(F(int(k == j)) for k in range(16))
        br = best_response("player", weights, CLASSIC)
        assert br.row is D5  # standing Banker is punished by drawing

    def test_role_and_mix_validation(self):
        with pytest.raises(ValueError):
            best_response("dealer", (1, 0), CLASSIC)
        with pytest.raises(ValueError):
            best_response("banker", (F(1, 2), F(1, 3)), CLASSIC)
