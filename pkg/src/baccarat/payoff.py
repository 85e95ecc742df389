"""Exact payoff analysis: occurrence probabilities, conditional values,
info-set classification, reduced strategic-form games, and an
independent brute-force oracle.

Everything here is exact rational arithmetic.  The central objects:

* ``value_distribution`` -- the card-value law nu: value 0 has mass 4/13,
  values 1..9 have mass 1/13 each (sampling with replacement).

* ``two_card_total_distribution`` -- the induced law tau of a two-card
  total: tau(0) = 25/169 and tau(t) = 16/169 for t = 1..9.

* Per information set I = (b, c) and Player row r, the *occurrence
  probability* w_r(I) that Banker actually faces I, and the conditional
  expected Banker payoffs ``e_draw`` and ``e_stand`` of the two actions
  given I.  Banker's total expected payoff against row r under strategy
  f decomposes as

      E[banker payoff] = (natural-phase part) + sum_I w_r(I) * e_{f(I)}(I)

  so each info set can be optimized cell by cell.  The commission rate
  alpha enters only through the value of a Banker win, 1 - alpha, which
  is why all internal tables store alpha-free win/loss/tie probability
  triples and apply alpha at the end.

* ``build_reduced_game`` -- the variant's strategic form after the
  tableau's determined cells are fixed: 2 Player rows against one Banker
  column per assignment of actions to the variant's optional cells
  (16 columns for parlor/classic, 4 for modern).  ``A`` is Player's
  expected payoff (alpha-free), ``B`` is Banker's (affine in alpha).

* ``oracle_outcome_distribution`` / ``oracle_payoff_entry`` -- a second,
  deliberately independent route to the same numbers: direct enumeration
  of all six card slots of a coup, resolved through
  :func:`baccarat.rules.play_coup` with integer weights.  The
  decomposition above is never consulted, so agreement between the two
  routes is a real check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, NamedTuple, Sequence

from .rules import (
    ALL_INFO_SETS,
    Action,
    BankerStrategy,
    InfoSet,
    PlayerRow,
    STARRED_CELLS,
    Variant,
    _coerce_rational,
    mandated_player_action,
    play_coup,
    tableau_action,
)

__all__ = [
    "value_distribution",
    "two_card_total_distribution",
    "natural_probability",
    "InfoSetStats",
    "info_set_stats",
    "improvement_at_info_set",
    "Classification",
    "classify_info_sets",
    "ReducedGame",
    "build_reduced_game",
    "oracle_outcome_distribution",
    "oracle_payoff_entry",
    "BestResponse",
    "best_response",
]

_ROWS = (PlayerRow.STAND_ON_5, PlayerRow.DRAW_ON_5)


@lru_cache(maxsize=None)
def value_distribution() -> Mapping[int, Fraction]:
    """Law of a single card value: {0: 4/13, 1..9: 1/13 each}."""
    return {v: Fraction(4 if v == 0 else 1, 13) for v in range(10)}


@lru_cache(maxsize=None)
def two_card_total_distribution() -> Mapping[int, Fraction]:
    """Law of a two-card total mod 10 under independent card values."""
    nu = value_distribution()
    tau = {t: Fraction(0) for t in range(10)}
    for a, wa in nu.items():
        for b, wb in nu.items():
            tau[(a + b) % 10] += wa * wb
    return tau


@lru_cache(maxsize=None)
def natural_probability() -> Fraction:
    """Probability that at least one side's two cards total 8 or 9."""
    tau = two_card_total_distribution()
    live = sum(tau[t] for t in range(8))
    return 1 - live * live


class _WLT(NamedTuple):
    """A (banker win, player win, tie) probability triple."""

    banker_win: Fraction
    player_win: Fraction
    tie: Fraction


def _player_final_totals(info: InfoSet, row: PlayerRow):
    """Weighted final Player totals, conditioned on Banker facing ``info``.

    Yields (final_total, weight) pairs; weights sum to the probability
    that Player's side of the condition occurs (drew card c, or stood).
    """
    tau = two_card_total_distribution()
    nu = value_distribution()
    c = info.player_third
    if c is None:
        stand_totals = (6, 7) if row is PlayerRow.DRAW_ON_5 else (5, 6, 7)
        for t in stand_totals:
            yield t, tau[t]
    else:
        draw_totals = range(6) if row is PlayerRow.DRAW_ON_5 else range(5)
        for t in draw_totals:
            yield (t + c) % 10, tau[t] * nu[c]


def _compare(pf: int, bf: int) -> int:
    return (bf > pf) - (bf < pf)  # +1 banker win, -1 player win, 0 tie


def _bin(cmp: int) -> int:
    """Index into a (banker win, player win, tie) accumulator."""
    return 0 if cmp > 0 else (1 if cmp < 0 else 2)


@lru_cache(maxsize=None)
def _cell_data(info: InfoSet, row: PlayerRow) -> tuple[Fraction, _WLT, _WLT]:
    """Occurrence probability and conditional triples for one cell.

    Returns ``(occurrence, stand_triple, draw_triple)`` where the triples
    are conditioned on the cell occurring.
    """
    tau = two_card_total_distribution()
    nu = value_distribution()
    b = info.banker_total
    finals = list(_player_final_totals(info, row))
    mass = sum(w for _, w in finals)
    occurrence = tau[b] * mass

    bins_stand = [Fraction(0)] * 3  # index 0: bw, 1: pw, 2: tie
    bins_draw = [Fraction(0)] * 3
    for pf, w in finals:
        bins_stand[_bin(_compare(pf, b))] += w
        for d, wd in nu.items():
            bins_draw[_bin(_compare(pf, (b + d) % 10))] += w * wd
    stand = _WLT(*(x / mass for x in bins_stand))
    draw = _WLT(*(x / mass for x in bins_draw))
    return occurrence, stand, draw


def _banker_value(triple: _WLT, alpha: Fraction) -> Fraction:
    return (1 - alpha) * triple.banker_win - triple.player_win


@dataclass(frozen=True)
class InfoSetStats:
    """Occurrence probability and conditional action values for one cell
    against one Player row, at a given commission rate."""

    info: InfoSet
    row: PlayerRow
    alpha: Fraction
    occurrence: Fraction
    e_stand: Fraction
    e_draw: Fraction

    @property
    def improvement(self) -> Fraction:
        """How much drawing beats standing, conditionally on the cell."""
        return self.e_draw - self.e_stand


def info_set_stats(info: InfoSet, row: PlayerRow, alpha=0) -> InfoSetStats:
    """Exact per-cell statistics; ``alpha`` must be exact (no floats)."""
    if info not in set(ALL_INFO_SETS):
        raise ValueError(f"not a Banker information set: {info!r}")
    a = _coerce_rational(alpha, "alpha")
    if not 0 <= a < 1:
        raise ValueError(f"alpha must satisfy 0 <= alpha < 1, got {a}")
    occurrence, stand, draw = _cell_data(info, row)
    return InfoSetStats(
        info=info,
        row=row,
        alpha=a,
        occurrence=occurrence,
        e_stand=_banker_value(stand, a),
        e_draw=_banker_value(draw, a),
    )


def improvement_at_info_set(info: InfoSet, row: PlayerRow, alpha=0) -> Fraction:
    """``e_draw - e_stand`` for one cell; affine in alpha."""
    return info_set_stats(info, row, alpha).improvement


@dataclass(frozen=True)
class Classification:
    """Partition of the 88 info sets at one commission rate.

    A cell is *determined* when the same action is strictly better
    against both Player rows; the rest (row-dependent cells, and exact
    ties) are *starred*.
    """

    alpha: Fraction
    determined: Mapping[InfoSet, Action]
    starred: tuple[InfoSet, ...]

    @property
    def agrees_with_tableau(self) -> bool:
        return self.starred == STARRED_CELLS and all(
            self.determined[i] == tableau_action(i)
            for i in ALL_INFO_SETS
            if i not in self.starred
        )


def classify_info_sets(alpha=0) -> Classification:
    """Split the 88 cells into determined and starred at rate ``alpha``."""
    a = _coerce_rational(alpha, "alpha")
    determined: dict[InfoSet, Action] = {}
    starred: list[InfoSet] = []
    for info in ALL_INFO_SETS:
        imps = [info_set_stats(info, r, a).improvement for r in _ROWS]
        if all(x > 0 for x in imps):
            determined[info] = Action.DRAW
        elif all(x < 0 for x in imps):
            determined[info] = Action.STAND
        else:
            starred.append(info)
    return Classification(alpha=a, determined=determined, starred=tuple(starred))


@dataclass(frozen=True)
class ReducedGame:
    """Strategic form of a variant after fixing all non-optional cells.

    Rows are Player's two choices on a total of 5; column ``j`` is the
    pure Banker strategy acting per ``columns[j]`` at the variant's
    optional cells (and per tableau / variant mandate elsewhere).
    ``A[r][j]`` is Player's expected payoff (independent of alpha);
    ``B[r][j]`` is Banker's at this game's ``alpha``.
    """

    variant: Variant
    alpha: Fraction
    row_labels: tuple[PlayerRow, ...]
    column_labels: tuple[str, ...]
    columns: tuple[tuple[Action, ...], ...]
    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[tuple[Fraction, ...], ...]

    def column_assignment(self, j: int) -> dict[InfoSet, Action]:
        return dict(zip(self.variant.optional_cells, self.columns[j]))

    def banker_strategy(self, j: int) -> BankerStrategy:
        return BankerStrategy.from_assignment(
            self.column_assignment(j),
            variant=self.variant,
            label=self.column_labels[j],
        )


@lru_cache(maxsize=None)
def _natural_phase() -> _WLT:
    """Unconditional (bw, pw, tie) contribution of coups with a natural."""
    tau = two_card_total_distribution()
    bins = [Fraction(0)] * 3
    for pt, wp in tau.items():
        for bt, wb in tau.items():
            if pt >= 8 or bt >= 8:
                bins[_bin(_compare(pt, bt))] += wp * wb
    return _WLT(*bins)


def _accumulate(total: list[Fraction], triple: _WLT, weight: Fraction) -> None:
    for i in range(3):
        total[i] += weight * triple[i]


@lru_cache(maxsize=None)
def _row_outcome_profile(
    row: PlayerRow, fixed: tuple[tuple[InfoSet, Action], ...]
) -> tuple[_WLT, tuple[tuple[InfoSet, _WLT, _WLT], ...]]:
    """Split a row's outcome law into a fixed part plus per-cell options.

    ``fixed`` maps every non-optional cell to its action.  Returns the
    unconditional (bw, pw, tie) triple of the fixed part (naturals plus
    fixed cells) and, for each remaining cell, its occurrence-weighted
    stand and draw triples.
    """
    fixed_map = dict(fixed)
    base = list(_natural_phase())
    free: list[tuple[InfoSet, _WLT, _WLT]] = []
    for info in ALL_INFO_SETS:
        occurrence, stand, draw = _cell_data(info, row)
        if info in fixed_map:
            chosen = stand if fixed_map[info] is Action.STAND else draw
            _accumulate(base, chosen, occurrence)
        else:
            free.append(
                (
                    info,
                    _WLT(*(occurrence * x for x in stand)),
                    _WLT(*(occurrence * x for x in draw)),
                )
            )
    return _WLT(*base), tuple(free)


def _variant_fixed_actions(variant: Variant) -> tuple[tuple[InfoSet, Action], ...]:
    out = []
    optional = set(variant.optional_cells)
    for info in ALL_INFO_SETS:
        if info in optional:
            continue
        action = variant.fixed_actions.get(info, tableau_action(info))
        if action is None:
            raise ValueError(f"no action fixed for non-optional cell {info}")
        out.append((info, action))
    return tuple(out)


def build_reduced_game(variant: Variant, alpha=0, *, enforce_bound=True) -> ReducedGame:
    """Assemble the variant's 2-row strategic form at rate ``alpha``.

    With ``enforce_bound`` (the default), ``alpha`` must lie in the
    variant's validity interval ``[0, alpha_bound)``; passing
    ``enforce_bound=False`` builds the matrices anyway, which is useful
    exactly once -- when probing where the analysis breaks down.
    """
    if enforce_bound:
        a = variant.check_alpha(alpha)
    else:
        a = _coerce_rational(alpha, "alpha")
        if not 0 <= a < 1:
            raise ValueError(f"alpha must satisfy 0 <= alpha < 1, got {a}")

    cells = variant.optional_cells
    fixed = _variant_fixed_actions(variant)
    assignments = tuple(itertools.product((Action.STAND, Action.DRAW), repeat=len(cells)))
    labels = tuple("".join(str(x) for x in asg) for asg in assignments)

    A: list[tuple[Fraction, ...]] = []
    B: list[tuple[Fraction, ...]] = []
    for row in _ROWS:
        base, free = _row_outcome_profile(row, fixed)
        per_cell = {info: (stand, draw) for info, stand, draw in free}
        if set(per_cell) != set(cells):
            raise AssertionError("optional-cell bookkeeping out of sync")
        a_row = []
        b_row = []
        for asg in assignments:
            total = list(base)
            for info, action in zip(cells, asg):
                stand, draw = per_cell[info]
                chosen = stand if action is Action.STAND else draw
                for i in range(3):
                    total[i] += chosen[i]
            bw, pw, _tie = total
            a_row.append(pw - bw)
            b_row.append((1 - a) * bw - pw)
        A.append(tuple(a_row))
        B.append(tuple(b_row))

    return ReducedGame(
        variant=variant,
        alpha=a,
        row_labels=_ROWS,
        column_labels=labels,
        columns=assignments,
        A=tuple(A),
        B=tuple(B),
    )


# ---------------------------------------------------------------------------
# Brute-force oracle.
#
# Enumerates the six card slots of a coup (two Player cards, two Banker
# cards, and the two potential third cards) with integer weights -- value
# 0 counts 4, every other value 1 -- and resolves each branch through
# play_coup.  Slots that the rules never consume are integrated out by
# multiplying with 13 (one card) or 169 (two cards).  The per-branch
# resolution is memoized on the totals actually seen, which is harmless
# because play_coup depends on the cards only through those totals.
# ---------------------------------------------------------------------------

_SCALE = 13**6
_W = tuple(4 if v == 0 else 1 for v in range(10))


@lru_cache(maxsize=None)
def oracle_outcome_distribution(
    row: PlayerRow, strategy: BankerStrategy
) -> tuple[Fraction, Fraction, Fraction]:
    """(P(player wins), P(banker wins), P(tie)) by direct enumeration."""
    win = 0  # player wins, weighted count out of 13^6
    loss = 0
    memo: dict[tuple, int] = {}

    def resolve(p_cards, b_cards, draws) -> int:
        key = (
            (p_cards[0] + p_cards[1]) % 10,
            (b_cards[0] + b_cards[1]) % 10,
            tuple(draws),
        )
        sign = memo.get(key)
        if sign is None:
            sign = play_coup(p_cards, b_cards, draws, row, strategy).player_payoff
            memo[key] = sign
        return sign

    def tally(sign: int, weight: int):
        nonlocal win, loss
        if sign > 0:
            win += weight
        elif sign < 0:
            loss += weight

    for p1 in range(10):
        for p2 in range(10):
            wp = _W[p1] * _W[p2]
            pt = (p1 + p2) % 10
            for b1 in range(10):
                for b2 in range(10):
                    w0 = wp * _W[b1] * _W[b2]
                    bt = (b1 + b2) % 10
                    pc = (p1, p2)
                    bc = (b1, b2)
                    if pt >= 8 or bt >= 8:
                        tally(resolve(pc, bc, ()), w0 * 169)
                        continue
                    if mandated_player_action(pt, row) is Action.DRAW:
                        for p3 in range(10):
                            w1 = w0 * _W[p3]
                            if strategy[InfoSet(bt, p3)] is Action.DRAW:
                                for b3 in range(10):
                                    tally(
                                        resolve(pc, bc, (p3, b3)), w1 * _W[b3]
                                    )
                            else:
                                tally(resolve(pc, bc, (p3,)), w1 * 13)
                    else:
                        if strategy[InfoSet(bt, None)] is Action.DRAW:
                            for b3 in range(10):
                                tally(resolve(pc, bc, (b3,)), w0 * 13 * _W[b3])
                        else:
                            tally(resolve(pc, bc, ()), w0 * 169)

    p_win = Fraction(win, _SCALE)
    p_loss = Fraction(loss, _SCALE)
    return p_win, p_loss, 1 - p_win - p_loss


def oracle_payoff_entry(
    row: PlayerRow, strategy: BankerStrategy, alpha=0
) -> tuple[Fraction, Fraction]:
    """(player EV, banker EV) for one pure profile, by brute force only."""
    a = _coerce_rational(alpha, "alpha")
    p_win, p_loss, _tie = oracle_outcome_distribution(row, strategy)
    return p_win - p_loss, (1 - a) * p_loss - p_win


@dataclass(frozen=True)
class BestResponse:
    """A pure best reply and its expected payoff.

    For ``role == "player"`` the reply is ``row`` (a PlayerRow); for
    ``role == "banker"`` it is ``actions``, one Action per optional cell
    of the variant.  ``ties`` lists alternatives that do exactly as well:
    rows for Player, optional cells where both actions are optimal for
    Banker.
    """

    role: str
    value: Fraction
    row: PlayerRow | None = None
    actions: Mapping[InfoSet, Action] | None = None
    ties: tuple = ()


def _as_weights(mix, n: int) -> tuple[Fraction, ...]:
    w = getattr(mix, "weights", mix)
    ws = tuple(Fraction(x) for x in w)
    if len(ws) != n:
        raise ValueError(f"opponent mix must have {n} weights, got {len(ws)}")
    if any(x < 0 for x in ws) or sum(ws) != 1:
        raise ValueError("mix weights must be nonnegative and sum to 1")
    return ws


def best_response(role: str, opponent_mix, variant: Variant, alpha=0) -> BestResponse:
    """Exact pure best reply within a variant's reduced game.

    ``opponent_mix`` is a weight vector (or anything with ``.weights``)
    over the opponent's pure strategies in reduced-game order: the two
    Player rows when ``role == "banker"``, the variant's Banker columns
    when ``role == "player"``.
    """
    game = build_reduced_game(variant, alpha)
    if role == "banker":
        mix = _as_weights(opponent_mix, 2)
        actions: dict[InfoSet, Action] = {}
        ties: list[InfoSet] = []
        for info in variant.optional_cells:
            diff = Fraction(0)
            for weight, row in zip(mix, game.row_labels):
                stats = info_set_stats(info, row, game.alpha)
                diff += weight * stats.occurrence * stats.improvement
            if diff == 0:
                ties.append(info)
                actions[info] = Action.STAND
            else:
                actions[info] = Action.DRAW if diff > 0 else Action.STAND
        j = game.columns.index(tuple(actions[c] for c in variant.optional_cells))
        value = sum(w * game.B[r][j] for r, w in enumerate(mix))
        return BestResponse(
            role=role, value=value, actions=actions, ties=tuple(ties)
        )
    if role == "player":
        mix = _as_weights(opponent_mix, len(game.column_labels))
        per_row = [
            sum(w * game.A[r][j] for j, w in enumerate(mix))
            for r in range(len(game.row_labels))
        ]
        best = max(per_row)
        winners = [r for r, v in enumerate(per_row) if v == best]
        return BestResponse(
            role=role,
            value=best,
            row=game.row_labels[winners[0]],
            ties=tuple(game.row_labels[r] for r in winners[1:]),
        )
    raise ValueError(f'role must be "player" or "banker", got {role!r}')
