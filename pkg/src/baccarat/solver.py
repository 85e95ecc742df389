"""Exact solvers for 2 x n bimatrix games.

Conventions: ``A[r][j]`` is the row player's payoff and ``B[r][j]`` the
column player's when row ``r`` meets column ``j``.  Zero-sum games are
handled as the special case ``B = -A``.  All arithmetic is over exact
rationals; floats in inputs are rejected rather than silently rounded.

The module offers:

* :func:`eliminate_strictly_dominated` -- iterated elimination with a
  full audit log.  Columns are tested against pure *and* two-point mixed
  dominators, which is a complete test when the opponent has two pure
  strategies (the payoff vectors live in the plane, so any dominating
  mixture can be thinned to at most two support points).

* :func:`solve_zero_sum_2xn` -- the lower-envelope method: the optimal
  row mix maximizes ``min_j`` of the column lines, evaluated only at
  exact pairwise intersection points, so the value is exact.

* :func:`enumerate_nash_2xn` -- support enumeration for bimatrix games,
  with a degeneracy check.  On a nondegenerate game the enumeration is
  exhaustive and ``complete`` is True; on a degenerate one isolated
  equilibria are still reported but continua are only flagged.

* :func:`is_nondegenerate` / :func:`verify_equilibrium` -- independent
  certificates used by the rest of the package before any equilibrium
  claim is trusted.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

__all__ = [
    "MixedStrategy",
    "EquilibriumReport",
    "Game",
    "EliminationStep",
    "eliminate_strictly_dominated",
    "solve_zero_sum_2xn",
    "NashEnumeration",
    "enumerate_nash_2xn",
    "DegeneracyWitness",
    "is_nondegenerate",
    "verify_equilibrium",
]


def _exact(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError(
            f"matrix entries and weights must be exact rationals, got {x!r}"
        )
    return Fraction(x)


def _matrix(M) -> tuple[tuple[Fraction, ...], ...]:
    rows = tuple(tuple(_exact(x) for x in row) for row in M)
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows must have equal length")
    return rows


@dataclass(frozen=True)
class MixedStrategy:
    """An exact probability vector over pure strategies."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "weights", tuple(_exact(w) for w in self.weights)
        )
        if any(w < 0 for w in self.weights):
            raise ValueError("mixed-strategy weights must be nonnegative")
        if sum(self.weights) != 1:
            raise ValueError("mixed-strategy weights must sum to 1")

    @classmethod
    def pure(cls, index: int, n: int) -> "MixedStrategy":
        return cls(tuple(Fraction(int(i == index)) for i in range(n)))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]


@dataclass(frozen=True)
class EquilibriumReport:
    """One equilibrium of a 2 x n game, with exact strategies and values.

    ``kind`` is "pure" when both strategies are pure, else "mixed".
    ``unique`` is True only when the producing routine certified that no
    other equilibrium exists.  ``note`` carries caveats, e.g. that the
    point represents a continuum in a degenerate game.
    """

    row_strategy: MixedStrategy
    column_strategy: MixedStrategy
    row_value: Fraction
    column_value: Fraction
    row_support: tuple[int, ...]
    column_support: tuple[int, ...]
    kind: str
    unique: bool = False
    note: str = ""


@dataclass(frozen=True)
class Game:
    """A lightweight bimatrix container for the elimination routine.

    ``B`` defaults to ``-A`` (zero-sum); labels default to R0.. / C0..
    Objects with the same field names (for instance the reduced games
    built by :mod:`baccarat.payoff`) work interchangeably.
    """

    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[tuple[Fraction, ...], ...] | None = None
    row_labels: tuple = ()
    column_labels: tuple = ()

    def __post_init__(self):
        A = _matrix(self.A)
        object.__setattr__(self, "A", A)
        B = (
            tuple(tuple(-x for x in row) for row in A)
            if self.B is None
            else _matrix(self.B)
        )
        if len(B) != len(A) or len(B[0]) != len(A[0]):
            raise ValueError("A and B must have identical shape")
        object.__setattr__(self, "B", B)
        if not self.row_labels:
            object.__setattr__(
                self, "row_labels", tuple(f"R{i}" for i in range(len(A)))
            )
        if not self.column_labels:
            object.__setattr__(
                self, "column_labels", tuple(f"C{j}" for j in range(len(A[0])))
            )


@dataclass(frozen=True)
class EliminationStep:
    """Audit record: which strategy fell, and what dominated it."""

    side: str  # "row" or "column"
    index: int  # index in the original game
    label: object
    dominator_indices: tuple[int, ...]
    dominator_weights: tuple[Fraction, ...]


def _find_dominator(vectors, j, alive):
    """A pure or two-point mixed strict dominator of ``vectors[j]``.

    ``vectors[i]`` is pure strategy i's payoff against each opposing
    pure strategy in turn.  Returns (indices, weights) or None.  The
    two-point search is exhaustive over exact candidate mixing weights,
    so for two-dimensional payoff vectors it is a complete test.
    """
    vj = vectors[j]
    others = [k for k in alive if k != j]
    for k in others:
        if all(a > b for a, b in zip(vectors[k], vj)):
            return (k,), (Fraction(1),)
    for k, l in combinations(others, 2):
        vk, vl = vectors[k], vectors[l]
        cuts = {Fraction(0), Fraction(1)}
        for x in range(len(vj)):
            slope = vk[x] - vl[x]
            if slope != 0:
                t = (vj[x] - vl[x]) / slope
                if 0 < t < 1:
                    cuts.add(t)
        pts = sorted(cuts)
        probes = pts + [(a + b) / 2 for a, b in zip(pts, pts[1:])]
        for t in probes:
            if all(
                t * vk[x] + (1 - t) * vl[x] > vj[x] for x in range(len(vj))
            ):
                return (k, l), (t, 1 - t)
    return None


def eliminate_strictly_dominated(game):
    """Iterated strict-dominance elimination; returns (reduced, log).

    ``game`` is any dataclass with fields ``A`` and ``B`` (and
    optionally ``row_labels`` / ``column_labels`` / ``columns``); the
    reduction is returned as the same type with those fields sliced.
    Rows are tested against the row player's matrix ``A``, columns
    against the column player's ``B``.  Strict elimination never removes
    any equilibrium strategy, so solving the reduction solves the game.
    """
    A, B = _matrix(game.A), _matrix(game.B)
    m, n = len(A), len(A[0])
    rows_alive = list(range(m))
    cols_alive = list(range(n))
    row_labels = getattr(game, "row_labels", tuple(range(m)))
    col_labels = getattr(game, "column_labels", tuple(range(n)))
    log: list[EliminationStep] = []

    while True:
        col_vectors = {
            j: tuple(B[r][j] for r in rows_alive) for j in cols_alive
        }
        hit = None
        for j in cols_alive:
            dom = _find_dominator(col_vectors, j, cols_alive)
            if dom is not None:
                hit = ("column", j, dom)
                break
        if hit is None:
            row_vectors = {
                r: tuple(A[r][j] for j in cols_alive) for r in rows_alive
            }
            for r in rows_alive:
                dom = _find_dominator(row_vectors, r, rows_alive)
                if dom is not None:
                    hit = ("row", r, dom)
                    break
        if hit is None:
            break
        side, idx, (dom_idx, dom_w) = hit
        labels = col_labels if side == "column" else row_labels
        log.append(
            EliminationStep(
                side=side,
                index=idx,
                label=labels[idx],
                dominator_indices=tuple(dom_idx),
                dominator_weights=tuple(dom_w),
            )
        )
        (cols_alive if side == "column" else rows_alive).remove(idx)

    new_A = tuple(tuple(A[r][j] for j in cols_alive) for r in rows_alive)
    new_B = tuple(tuple(B[r][j] for j in cols_alive) for r in rows_alive)
    kwargs = {"A": new_A, "B": new_B}
    names = {f.name for f in dataclasses.fields(game)}
    if "row_labels" in names:
        kwargs["row_labels"] = tuple(row_labels[r] for r in rows_alive)
    if "column_labels" in names:
        kwargs["column_labels"] = tuple(col_labels[j] for j in cols_alive)
    if "columns" in names:
        kwargs["columns"] = tuple(game.columns[j] for j in cols_alive)
    reduced = dataclasses.replace(game, **kwargs)
    return reduced, tuple(log)


def _require_two_rows(A):
    if len(A) != 2:
        raise ValueError(f"this solver handles exactly 2 rows, got {len(A)}")


def solve_zero_sum_2xn(A) -> EquilibriumReport:
    """Exact optimal strategies and value of a zero-sum 2 x n game.

    The row player maximizes.  Writing p for the weight on the second
    row, each column j contributes the line ``A[0][j] + p*(A[1][j] -
    A[0][j])``; the game's value is the maximum over p in [0,1] of the
    lower envelope of those lines, attained at p = 0, p = 1, or an
    exact pairwise intersection.
    """
    A = _matrix(A)
    _require_two_rows(A)
    n = len(A[0])
    lines = [(A[0][j], A[1][j] - A[0][j]) for j in range(n)]

    candidates = {Fraction(0), Fraction(1)}
    for (a1, s1), (a2, s2) in combinations(lines, 2):
        if s1 != s2:
            p = (a2 - a1) / (s1 - s2)
            if 0 < p < 1:
                candidates.add(p)

    def envelope(p: Fraction) -> Fraction:
        return min(a + s * p for a, s in lines)

    value = max(envelope(p) for p in candidates)
    best_ps = sorted(p for p in candidates if envelope(p) == value)
    p = best_ps[0]
    row_unique = len(best_ps) == 1

    support_cols = [j for j, (a, s) in enumerate(lines) if a + s * p == value]
    if p == 0 or p == 1:
        # Saddle side: among the envelope-active columns, valid optima
        # are those that also hold the *other* row down to the value.
        other = 1 if p == 0 else 0
        valid = [j for j in support_cols if A[other][j] <= value]
        if not valid:  # cannot happen for a true optimum
            raise AssertionError("no optimal column at boundary optimum")
        col_weights = [Fraction(0)] * n
        col_weights[valid[0]] = Fraction(1)
        # Optimal column mixes are the simplex over the envelope-active
        # columns cut by "other row held <= value"; that set is a single
        # point only when one column is active, or when exactly one is
        # playable and it pins the other row at the value exactly (any
        # weight elsewhere would push the average above it).
        if len(support_cols) == 1:
            col_unique = True
        else:
            col_unique = len(valid) == 1 and A[other][valid[0]] == value
    else:
        zeros = [j for j in support_cols if lines[j][1] == 0]
        negs = [j for j in support_cols if lines[j][1] < 0]
        poss = [j for j in support_cols if lines[j][1] > 0]
        col_weights = [Fraction(0)] * n
        if negs and poss:
            j_neg, j_pos = negs[0], poss[0]
            s_neg, s_pos = lines[j_neg][1], lines[j_pos][1]
            w_neg = s_pos / (s_pos - s_neg)
            col_weights[j_neg] = w_neg
            col_weights[j_pos] = 1 - w_neg
            col_unique = len(negs) == 1 and len(poss) == 1 and not zeros
        elif zeros:
            col_weights[zeros[0]] = Fraction(1)
            col_unique = len(zeros) == 1 and not negs and not poss
        else:  # pragma: no cover - interior optimum needs balancing slopes
            raise AssertionError("interior optimum without balancing columns")

    row = MixedStrategy((1 - p, p))
    col = MixedStrategy(tuple(col_weights))
    kind = "pure" if len(row.support) == 1 and len(col.support) == 1 else "mixed"
    return EquilibriumReport(
        row_strategy=row,
        column_strategy=col,
        row_value=value,
        column_value=-value,
        row_support=row.support,
        column_support=col.support,
        kind=kind,
        unique=row_unique and col_unique,
    )


@dataclass(frozen=True)
class DegeneracyWitness:
    """Evidence of degeneracy: a strategy with too many best responses.

    ``side`` names whose strategy it is; ``strategy`` is a pure index or
    an exact row-mix weight; ``best_responses`` are the opposing pure
    strategies that all tie as best replies.
    """

    side: str
    strategy: object
    best_responses: tuple[int, ...]


def is_nondegenerate(A, B) -> tuple[bool, DegeneracyWitness | None]:
    """Check the support-counting degeneracy condition for 2 x n games.

    A game is nondegenerate when no mixed strategy with support of size
    s has more than s pure best responses.  With two rows this reduces
    to three finite checks: no pure column leaves both rows tied as best
    replies, no pure row has two best-reply columns tied, and no
    interior row mix has three or more best-reply columns tied.
    """
    A, B = _matrix(A), _matrix(B)
    _require_two_rows(A)
    n = len(A[0])
    for c in range(n):
        if A[0][c] == A[1][c]:
            return False, DegeneracyWitness("column", c, (0, 1))
    for r in range(2):
        best = max(B[r])
        tied = tuple(j for j in range(n) if B[r][j] == best)
        if len(tied) > 1:
            return False, DegeneracyWitness("row", r, tied)
    lines = [(B[0][j], B[1][j] - B[0][j]) for j in range(n)]
    for (j, (a1, s1)), (k, (a2, s2)) in combinations(enumerate(lines), 2):
        if s1 == s2:
            continue
        p = (a1 - a2) / (s2 - s1)
        if not 0 < p < 1:
            continue
        top = max(a + s * p for a, s in lines)
        tied = tuple(
            c for c, (a, s) in enumerate(lines) if a + s * p == top
        )
        if len(tied) > 2:
            return False, DegeneracyWitness("row mix", p, tied)
    return True, None


@dataclass(frozen=True)
class NashEnumeration:
    """All equilibria found by support enumeration, plus a completeness
    certificate (True only when the game verified as nondegenerate)."""

    equilibria: tuple[EquilibriumReport, ...]
    complete: bool
    witness: DegeneracyWitness | None = None


def _support_from(weights) -> tuple[int, ...]:
    return tuple(i for i, w in enumerate(weights) if w > 0)


def enumerate_nash_2xn(A, B) -> NashEnumeration:
    """Enumerate Nash equilibria of a 2 x n bimatrix game by supports.

    Pure-pure pairs are checked directly; mixed equilibria are sought
    over row support {0,1} and every column support pair.  On degenerate
    games, equilibrium continua are represented by sample points with an
    explanatory note, and ``complete`` is False.
    """
    A, B = _matrix(A), _matrix(B)
    _require_two_rows(A)
    n = len(A[0])
    complete, witness = is_nondegenerate(A, B)
    found: dict[tuple, tuple] = {}  # (row weights, col weights) -> (k, note)

    def record(rw, cw, kind, note=""):
        key = (tuple(rw), tuple(cw))
        found.setdefault(key, (kind, note))

    # Pure x pure.
    for r in range(2):
        for c in range(n):
            if A[r][c] >= A[1 - r][c] and B[r][c] == max(B[r]):
                rw = [Fraction(int(i == r)) for i in range(2)]
                cw = [Fraction(int(j == c)) for j in range(n)]
                record(rw, cw, "pure")

    def col_line(j, p):
        return (1 - p) * B[0][j] + p * B[1][j]

    # Mixed row, two-column support.
    for c1, c2 in combinations(range(n), 2):
        d0 = B[0][c1] - B[0][c2]
        d1 = B[1][c1] - B[1][c2]
        if d0 == d1:
            # Parallel payoff lines never cross (d0 != 0); identical ones
            # (d0 == 0) give continua handled via the degeneracy flag.
            continue
        p = d0 / (d0 - d1)  # row mix (1-p, p) equalizing the two columns
        if not 0 < p < 1:
            continue
        top = max(col_line(j, p) for j in range(n))
        if col_line(c1, p) != top or col_line(c2, p) != top:
            continue
        u = A[0][c1] - A[1][c1]
        w = A[0][c2] - A[1][c2]
        if u == w:
            continue  # no interior column mix equalizes the rows
        q1 = w / (w - u)  # weight on c1 equalizing the two rows
        if not 0 < q1 < 1:
            continue
        rw = [1 - p, p]
        cw = [Fraction(0)] * n
        cw[c1], cw[c2] = q1, 1 - q1
        record(rw, cw, "mixed")

    # Degenerate families: row mixes against one pure column.
    for c in range(n):
        if A[0][c] != A[1][c]:
            continue
        # Every p keeps Player indifferent; find where column c is a
        # best reply and report the midpoint of that p-interval.
        lo, hi = Fraction(0), Fraction(1)
        ok = True
        for j in range(n):
            if j == c:
                continue
            diff0 = B[0][c] - B[0][j]
            slope = (B[1][c] - B[1][j]) - diff0
            if slope == 0:
                if diff0 < 0:
                    ok = False
                    break
            elif slope > 0:
                lo = max(lo, -diff0 / slope)
            else:
                hi = min(hi, -diff0 / slope)
        if ok and lo <= hi:
            p = (lo + hi) / 2
            rw = [1 - p, p]
            cw = [Fraction(int(j == c)) for j in range(n)]
            record(rw, cw, "mixed", "represents a continuum of row mixes")

    # Degenerate families: pure row against mixes of tied best columns.
    for r in range(2):
        best = max(B[r])
        tied = [j for j in range(n) if B[r][j] == best]
        if len(tied) < 2:
            continue
        for c1, c2 in combinations(tied, 2):
            # Row r must stay a best reply: find a feasible column mix.
            g1 = A[r][c1] - A[1 - r][c1]
            g2 = A[r][c2] - A[1 - r][c2]
            lo, hi = Fraction(0), Fraction(1)
            if g1 == g2:
                if g1 < 0:
                    continue
            elif g1 > g2:
                t = -g2 / (g1 - g2)
                lo = max(lo, t)
            else:
                t = -g2 / (g1 - g2)
                hi = min(hi, t)
            if lo > hi:
                continue
            q = (lo + hi) / 2
            if not 0 < q < 1:
                continue
            rw = [Fraction(int(i == r)) for i in range(2)]
            cw = [Fraction(0)] * n
            cw[c1], cw[c2] = q, 1 - q
            record(rw, cw, "mixed", "represents a continuum of column mixes")

    reports = []
    unique = complete and len(found) == 1
    for (rw, cw), (kind, note) in sorted(found.items()):
        row = MixedStrategy(rw)
        col = MixedStrategy(cw)
        rv = sum(
            row[r] * col[c] * A[r][c] for r in range(2) for c in range(n)
        )
        cv = sum(
            row[r] * col[c] * B[r][c] for r in range(2) for c in range(n)
        )
        reports.append(
            EquilibriumReport(
                row_strategy=row,
                column_strategy=col,
                row_value=rv,
                column_value=cv,
                row_support=row.support,
                column_support=col.support,
                kind=kind,
                unique=unique,
                note=note,
            )
        )
    return NashEnumeration(
        equilibria=tuple(reports), complete=complete, witness=witness
    )


def verify_equilibrium(A, B, report: EquilibriumReport) -> bool:
    """Independently check a claimed equilibrium, exactly.

    Confirms that the stated supports match the strategies, that every
    support strategy is a best reply to the opponent's mix, and that the
    stated values equal the realized expected payoffs.
    """
    A, B = _matrix(A), _matrix(B)
    _require_two_rows(A)
    n = len(A[0])
    row, col = report.row_strategy, report.column_strategy
    if len(row) != 2 or len(col) != n:
        return False
    if row.support != report.row_support or col.support != report.column_support:
        return False

    row_payoffs = [
        sum(col[j] * A[r][j] for j in range(n)) for r in range(2)
    ]
    best_row = max(row_payoffs)
    if any(row_payoffs[r] != best_row for r in row.support):
        return False

    col_payoffs = [
        sum(row[r] * B[r][j] for r in range(2)) for j in range(n)
    ]
    best_col = max(col_payoffs)
    if any(col_payoffs[j] != best_col for j in col.support):
        return False

    rv = sum(row[r] * row_payoffs[r] for r in range(2))
    cv = sum(col[j] * col_payoffs[j] for j in range(n))
    return rv == report.row_value and cv == report.column_value
