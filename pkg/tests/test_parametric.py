"""Unit tests for commission sweeps, the break-even rate, and validity bounds."""

from fractions import Fraction

import pytest

from baccarat import (
    CLASSIC,
    InfoSet,
    MODERN,
    PARLOR,
    PlayerRow,
    equilibrium_curve,
    find_alpha_star,
    solve_variant,
    table_validity_bound,
)
from baccarat.parametric import (
    DEFAULT_ALPHA_GRID,
    classic_banker_value,
    classic_draw_probability,
    modern_banker_value,
)

F = Fraction


class TestSolveVariant:
    def test_parlor_report_spans_all_sixteen_columns(self):
        sol = solve_variant(PARLOR)
        assert len(sol.report.column_strategy) == 16
        assert set(sol.column_mixture) == {"DSDS", "DSDD"}
        assert sum(sol.column_mixture.values()) == 1
        assert sol.banker_value == -sol.player_value

    def test_classic_needs_mixed_dominators(self):
        """Pure-vs-pure dominance alone cannot finish the column cleanup."""
        sol = solve_variant(CLASSIC, F(1, 20))
        assert any(len(s.dominator_indices) == 2 for s in sol.elimination_log)
        assert all(s.side == "column" for s in sol.elimination_log)
        assert len(sol.reduced.column_labels) == 5

    def test_modern_reduces_to_a_point(self):
        sol = solve_variant(MODERN, F(1, 20))
        assert len(sol.reduced.column_labels) == 1
        assert sol.reduced.column_labels == ("DD",)
        assert sol.report.kind == "pure"

    def test_modern_equilibrium_survives_higher_commissions(self):
        sol = solve_variant(MODERN, F(1, 3))
        assert sol.report.kind == "pure"
        assert sol.player_draw_probability == 1
        assert sol.player_value == solve_variant(MODERN, 0).player_value

    def test_alpha_bound_enforced(self):
        with pytest.raises(ValueError):
            solve_variant(CLASSIC, F(1, 10))
        with pytest.raises(ValueError):
            solve_variant(MODERN, F(2, 5))
        with pytest.raises(TypeError):
            solve_variant(CLASSIC, 0.05)


class TestClosedForms:
    @pytest.mark.parametrize("alpha", [0, F(1, 100), F(1, 30), F(1, 20), F(1, 16)])
    def test_draw_probability_formula(self, alpha):
        sol = solve_variant(CLASSIC, alpha)
        a = F(alpha)
        assert sol.player_draw_probability == classic_draw_probability(alpha)
        assert classic_draw_probability(alpha) == (9 - a) / (11 - 6 * a)

    @pytest.mark.parametrize("alpha", [0, F(1, 30), F(1, 20)])
    def test_banker_value_formulas(self, alpha):
        sol = solve_variant(CLASSIC, alpha)
        assert sol.banker_value == classic_banker_value(alpha)
        solm = solve_variant(MODERN, alpha)
        assert solm.banker_value == modern_banker_value(alpha)

    def test_player_value_does_not_depend_on_commission(self):
        values = {
            solve_variant(CLASSIC, a).player_value
            for a in (0, F(1, 30), F(1, 20))
        }
        assert values == {solve_variant(PARLOR).player_value}

    def test_commission_transfers_from_banker_only(self):
        # Raising the commission hurts Banker and leaves Player alone.
        v_low = classic_banker_value(F(1, 100))
        v_high = classic_banker_value(F(1, 20))
        assert v_high < v_low


class TestEquilibriumCurve:
    def test_default_grid_passes_internal_checks(self):
        sweep = equilibrium_curve(CLASSIC)
        assert sweep.validity_bound == F(1, 15)
        assert len(sweep.samples) == len(DEFAULT_ALPHA_GRID)
        alphas = [a for a, _ in sweep.samples]
        assert alphas == sorted(alphas)

    def test_modern_sweep(self):
        sweep = equilibrium_curve(MODERN, (0, F(1, 20), F(1, 5), F(39, 100)))
        assert sweep.validity_bound == F(2, 5)
        for _, sol in sweep.samples:
            assert sol.report.kind == "pure"

    def test_grid_outside_bound_rejected(self):
        with pytest.raises(ValueError):
            equilibrium_curve(CLASSIC, (0, F(1, 14)))


class TestAlphaStar:
    def test_default_bracket(self):
        br = find_alpha_star()
        assert br.hi - br.lo <= F(1, 10**9)
        assert 0 < br.lo < br.hi < F(33, 500)
        assert br.iterations > 20
        # Below the break-even rate banking is strictly the better seat;
        # above it the order flips.
        parlor = solve_variant(PARLOR).player_value
        assert classic_banker_value(br.lo) > parlor
        assert classic_banker_value(br.hi) < parlor

    def test_coarse_tolerance(self):
        br = find_alpha_star(F(1, 10**4))
        assert br.hi - br.lo <= F(1, 10**4)
        assert abs(float(br.midpoint) - 0.0556531) < 1e-4
        assert br.tolerance == F(1, 10**4)

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            find_alpha_star(0)
        with pytest.raises(TypeError):
            find_alpha_star(1e-9)


class TestValidityBounds:
    def test_known_bounds(self):
        assert table_validity_bound(CLASSIC) == F(1, 15)
        assert table_validity_bound(PARLOR) == F(1, 15)
        assert table_validity_bound(MODERN) == F(2, 5)

    def test_modern_bound_is_where_a_mandate_stops_binding(self):
        # At the modern bound the forced stand at (6,-) ceases to be a
        # restriction: drawing there stops being strictly better for
        # Banker against Player's drawing row.
        from baccarat import improvement_at_info_set

        bound = table_validity_bound(MODERN)
        below = improvement_at_info_set(
            InfoSet(6, None), PlayerRow.DRAW_ON_5, bound - F(1, 100)
        )
        at = improvement_at_info_set(InfoSet(6, None), PlayerRow.DRAW_ON_5, bound)
        assert below > 0
        assert at == 0
