"""How the solved games move with the commission rate alpha.

This module solves a variant end to end at a given rate (reduction by
strict dominance, then support enumeration, then independent
verification on the unreduced game), sweeps that solution across a grid
of rates, locates the break-even rate at which Banker's seat stops being
worth more than Player's, and finds the exact rate at which each
variant's fixed drawing rules lose their justification.

Closed forms worth naming (all verified against the solver, which never
uses them):

* The parlor game (no commission) has value -679568 / (11 * 13^6) to
  Player, with Player drawing on 5 with probability 9/11 and Banker
  drawing at (6, None) with probability 859/2288.

* With commission alpha, Player's equilibrium draw probability becomes
  (9 - alpha) / (11 - 6*alpha); Banker's mix is unchanged, so Player's
  value does not move while Banker's erodes.

* The modern game has the unique pure equilibrium (draw on 5; draw at
  both optional cells), giving Player -59280 / 13^6 regardless of alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .payoff import (
    ReducedGame,
    build_reduced_game,
    classify_info_sets,
    info_set_stats,
)
from .rules import (
    ALL_INFO_SETS,
    Action,
    CLASSIC,
    InfoSet,
    MODERN,
    PARLOR,
    PlayerRow,
    STARRED_CELLS,
    Variant,
    _coerce_rational,
)
from .solver import (
    EliminationStep,
    EquilibriumReport,
    MixedStrategy,
    eliminate_strictly_dominated,
    enumerate_nash_2xn,
    verify_equilibrium,
)

__all__ = [
    "PARLOR_PLAYER_VALUE",
    "PARLOR_PLAYER_DRAW_P",
    "BANKER_STAND_CELL_DRAW_Q",
    "MODERN_PLAYER_VALUE",
    "classic_draw_probability",
    "classic_banker_value",
    "modern_banker_value",
    "VariantSolution",
    "solve_variant",
    "CommissionSweep",
    "DEFAULT_ALPHA_GRID",
    "equilibrium_curve",
    "AlphaStarBracket",
    "find_alpha_star",
    "table_validity_bound",
]

_D6 = 13**6

#: Player's equilibrium value in the commission-free game.
PARLOR_PLAYER_VALUE = Fraction(-679568, 11 * _D6)

#: Player's equilibrium probability of drawing on 5, commission-free.
PARLOR_PLAYER_DRAW_P = Fraction(9, 11)

#: Banker's equilibrium probability of drawing at (6, None), any alpha.
BANKER_STAND_CELL_DRAW_Q = Fraction(859, 2288)

#: Player's value in the modern game (alpha-free: the equilibrium is pure).
MODERN_PLAYER_VALUE = Fraction(-59280, _D6)


def classic_draw_probability(alpha) -> Fraction:
    """Player's equilibrium draw-on-5 probability at commission alpha."""
    a = _coerce_rational(alpha, "alpha")
    return (9 - a) / (11 - 6 * a)


def classic_banker_value(alpha) -> Fraction:
    """Banker's equilibrium expected payoff at commission alpha."""
    a = _coerce_rational(alpha, "alpha")
    num = 84946 - 3099233 * a + 1668708 * a * a
    return Fraction(8, _D6) * num / (11 - 6 * a)


def modern_banker_value(alpha) -> Fraction:
    """Banker's expected payoff in the modern game at commission alpha."""
    a = _coerce_rational(alpha, "alpha")
    return Fraction(8, _D6) * (7410 - 276593 * a)


@dataclass(frozen=True)
class VariantSolution:
    """A fully solved variant at one commission rate.

    ``report`` is stated over the *unreduced* strategic form (every
    Banker column of the variant), and has been re-verified there; the
    reduction that produced it, and its audit log, ride along.
    """

    variant: Variant
    alpha: Fraction
    game: ReducedGame
    reduced: ReducedGame
    elimination_log: tuple[EliminationStep, ...]
    report: EquilibriumReport

    @property
    def player_value(self) -> Fraction:
        return self.report.row_value

    @property
    def banker_value(self) -> Fraction:
        return self.report.column_value

    @property
    def player_draw_probability(self) -> Fraction:
        """Weight the equilibrium puts on drawing with a total of 5."""
        i = self.game.row_labels.index(PlayerRow.DRAW_ON_5)
        return self.report.row_strategy[i]

    @property
    def column_mixture(self) -> Mapping[str, Fraction]:
        """Support of Banker's equilibrium mix, by column label."""
        return {
            self.game.column_labels[j]: self.report.column_strategy[j]
            for j in self.report.column_support
        }

    def banker_draw_probability(self, cell: InfoSet) -> Fraction:
        """Marginal probability that the equilibrium draws at one cell."""
        idx = self.variant.optional_cells.index(cell)
        return sum(
            self.report.column_strategy[j]
            for j in self.report.column_support
            if self.game.columns[j][idx] is Action.DRAW
        )


def _expand_weights(weights, sub_labels, full_labels) -> MixedStrategy:
    out = [Fraction(0)] * len(full_labels)
    for w, lab in zip(weights, sub_labels):
        out[full_labels.index(lab)] = w
    return MixedStrategy(tuple(out))


def solve_variant(variant: Variant, alpha=0) -> VariantSolution:
    """Reduce, solve, and independently verify one variant at one rate.

    Strict-dominance elimination never creates or destroys equilibria,
    so solving the residual solves the variant; if the residual is a
    single profile, strictness alone certifies it as the unique
    equilibrium.  Whatever is found is re-checked by
    :func:`baccarat.solver.verify_equilibrium` on the unreduced game
    before being returned.
    """
    game = build_reduced_game(variant, alpha)
    reduced, log = eliminate_strictly_dominated(game)
    m = len(reduced.A)
    n = len(reduced.A[0])
    if m == 1 and n == 1:
        row = _expand_weights((Fraction(1),), reduced.row_labels, game.row_labels)
        col = _expand_weights(
            (Fraction(1),), reduced.column_labels, game.column_labels
        )
        report = EquilibriumReport(
            row_strategy=row,
            column_strategy=col,
            row_value=reduced.A[0][0],
            column_value=reduced.B[0][0],
            row_support=row.support,
            column_support=col.support,
            kind="pure",
            unique=True,
        )
    elif m == 2:
        enum = enumerate_nash_2xn(reduced.A, reduced.B)
        if len(enum.equilibria) != 1:
            raise AssertionError(
                f"{variant.name} at alpha={alpha}: expected exactly one "
                f"equilibrium, found {len(enum.equilibria)} "
                f"(complete={enum.complete})"
            )
        sub = enum.equilibria[0]
        row = _expand_weights(
            sub.row_strategy.weights, reduced.row_labels, game.row_labels
        )
        col = _expand_weights(
            sub.column_strategy.weights, reduced.column_labels, game.column_labels
        )
        report = EquilibriumReport(
            row_strategy=row,
            column_strategy=col,
            row_value=sub.row_value,
            column_value=sub.column_value,
            row_support=row.support,
            column_support=col.support,
            kind=sub.kind,
            unique=sub.unique,
            note=sub.note,
        )
    else:
        raise AssertionError(
            f"unexpected residual shape {m}x{n} for {variant.name}"
        )
    if not verify_equilibrium(game.A, game.B, report):
        raise AssertionError(
            f"solved profile failed verification on the full "
            f"{variant.name} game at alpha={alpha}"
        )
    return VariantSolution(
        variant=variant,
        alpha=game.alpha,
        game=game,
        reduced=reduced,
        elimination_log=log,
        report=report,
    )


#: Commission rates swept by default (clipped to each variant's bound).
DEFAULT_ALPHA_GRID = (
    Fraction(0),
    Fraction(1, 100),
    Fraction(1, 30),
    Fraction(1, 20),
    Fraction(1, 16),
    Fraction(33, 500),
)


@dataclass(frozen=True)
class CommissionSweep:
    """Solutions along a grid of commission rates, plus the exact rate
    at which the variant's fixed rules stop being justified."""

    variant: Variant
    samples: tuple[tuple[Fraction, VariantSolution], ...]
    validity_bound: Fraction


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(msg)


def equilibrium_curve(variant: Variant, alpha_grid=None) -> CommissionSweep:
    """Solve a variant across a grid of rates, asserting the closed forms.

    For parlor/classic games every sample is checked against the exact
    formulas for Player's draw probability, Banker's unchanged mix, the
    constant Player value, and Banker's value; for the modern game, the
    pure equilibrium and its value line.  A sample that violates any of
    these raises rather than returning quietly wrong data.
    """
    if alpha_grid is None:
        grid = [a for a in DEFAULT_ALPHA_GRID if a < variant.alpha_bound]
    else:
        grid = [variant.check_alpha(a) for a in alpha_grid]
    samples = []
    for a in grid:
        sol = solve_variant(variant, a)
        if variant in (PARLOR, CLASSIC):
            _check(
                sol.player_draw_probability == classic_draw_probability(a),
                f"draw probability off closed form at alpha={a}",
            )
            _check(
                sol.banker_draw_probability(InfoSet(6, None))
                == BANKER_STAND_CELL_DRAW_Q,
                f"banker mix off 859/2288 at alpha={a}",
            )
            _check(
                sol.player_value == PARLOR_PLAYER_VALUE,
                f"player value moved with alpha at alpha={a}",
            )
            _check(
                sol.banker_value == classic_banker_value(a),
                f"banker value off closed form at alpha={a}",
            )
        elif variant == MODERN:
            _check(
                sol.report.kind == "pure"
                and sol.player_draw_probability == 1
                and sol.column_mixture == {"DD": Fraction(1)},
                f"modern equilibrium not the pure draw/draw profile at {a}",
            )
            _check(
                sol.player_value == MODERN_PLAYER_VALUE,
                f"modern player value off constant at alpha={a}",
            )
            _check(
                sol.banker_value == modern_banker_value(a),
                f"modern banker value off closed form at alpha={a}",
            )
        samples.append((a, sol))
    return CommissionSweep(
        variant=variant,
        samples=tuple(samples),
        validity_bound=table_validity_bound(variant)
        if variant in (CLASSIC, MODERN)
        else variant.alpha_bound,
    )


@dataclass(frozen=True)
class AlphaStarBracket:
    """An exact bracket around the break-even commission rate.

    Banker's equilibrium value exceeds Player's below the rate and falls
    short above it; ``lo`` and ``hi`` are exact rationals with
    ``hi - lo <= tolerance`` and a sign change between them.
    """

    lo: Fraction
    hi: Fraction
    tolerance: Fraction
    iterations: int
    player_value: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def find_alpha_star(tolerance=Fraction(1, 10**9)) -> AlphaStarBracket:
    """Bisect for the commission rate equalizing the two seats' values.

    The classic game's Player value is constant in alpha while Banker's
    value falls, so the premium ``banker_value(alpha) - player_value``
    has exactly one root in the validity interval; plain bisection on
    exact rationals brackets it to within ``tolerance``.
    """
    tol = _coerce_rational(tolerance, "tolerance")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    target = PARLOR_PLAYER_VALUE

    def premium(a: Fraction) -> Fraction:
        return solve_variant(CLASSIC, a).banker_value - target

    lo, hi = Fraction(0), Fraction(33, 500)
    if premium(lo) <= 0 or premium(hi) >= 0:
        raise AssertionError("break-even bracket assumptions violated")
    iterations = 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        iterations += 1
        g = premium(mid)
        if g > 0:
            lo = mid
        elif g < 0:
            hi = mid
        else:  # pragma: no cover - the root is irrational
            lo = hi = mid
            break
    return AlphaStarBracket(
        lo=lo,
        hi=hi,
        tolerance=tol,
        iterations=iterations,
        player_value=target,
    )


def _improvement_affine(info: InfoSet, row: PlayerRow) -> tuple[Fraction, Fraction]:
    """(constant, slope) of the cell's draw-minus-stand value in alpha."""
    at0 = info_set_stats(info, row, 0).improvement
    at_half = info_set_stats(info, row, Fraction(1, 2)).improvement
    return at0, 2 * (at_half - at0)


def table_validity_bound(variant: Variant) -> Fraction:
    """Smallest commission rate at which the variant's fixed drawing
    rules lose their game-theoretic justification.

    For the classic game that is the first rate at which some cell of
    the 88 stops being determined the way the tableau fixes it (the
    row-independence classification shifts).  For the modern game the
    optional cells must keep strictly favoring a draw against Player's
    equilibrium row, and the distinguishing mandate -- the forced stand
    at (6, None) -- must remain a genuine restriction, i.e. Banker must
    still strictly prefer drawing there against that row.  Each
    condition is a finite conjunction of strict signs of cell values
    affine in alpha, so it can only change state at one of the exact
    crossover rates; scanning those rates in order finds the first
    failure exactly.
    """
    if set(variant.optional_cells) == set(STARRED_CELLS):
        # Parlor/classic structure: every starred cell is free, so the
        # tableau is justified exactly while the classification holds.
        def holds(a: Fraction) -> bool:
            return classify_info_sets(a).agrees_with_tableau
    elif variant == MODERN:
        game0 = build_reduced_game(MODERN, 0)
        d5 = game0.row_labels.index(PlayerRow.DRAW_ON_5)
        s5 = 1 - d5
        if not all(
            game0.A[d5][j] > game0.A[s5][j]
            for j in range(len(game0.column_labels))
        ):  # pragma: no cover - structural, alpha-free
            raise AssertionError("drawing on 5 should dominate in the modern game")
        watched = (*MODERN.optional_cells, InfoSet(6, None))

        def holds(a: Fraction) -> bool:
            return all(
                info_set_stats(c, PlayerRow.DRAW_ON_5, a).improvement > 0
                for c in watched
            )
    else:
        raise ValueError(
            "validity bound is defined for the classic and modern variants"
        )

    roots = set()
    for info in ALL_INFO_SETS:
        for row in (PlayerRow.STAND_ON_5, PlayerRow.DRAW_ON_5):
            const, slope = _improvement_affine(info, row)
            if slope != 0:
                r = -const / slope
                if 0 < r < 1:
                    roots.add(r)
    prev = Fraction(0)
    for r in sorted(roots):
        if not holds((prev + r) / 2):  # pragma: no cover - strict signs
            raise AssertionError(f"validity lost strictly inside ({prev}, {r})")
        if not holds(r):
            return r
        prev = r
    return Fraction(1)  # pragma: no cover - always breaks before 1
