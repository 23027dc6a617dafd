"""Random-change-of-basis moduli selection experiments.

The experiment: draw a g x g 0/1 matrix M with i.i.d. Bernoulli(p)
entries, use it as a change of basis omega_i = sum_j M_ij zeta_j of the
holomorphic differentials of a plane-curve model, and test whether the
products {omega_a omega_b} indexed by the first-three-rows pair set span
the quadratic-differential space (dimension 3g-3).  All rank decisions
are exact integer computations; all randomness flows through splitmix64
streams so runs are bit-reproducible.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

from .curves import PlaneCurveModel
from .errors import DomainError, ValidationError
from .exact import integer_rank, is_nonsingular
from .rng import SplitMix64, derive_seed

# ---------------------------------------------------------------------------
# Bernoulli matrices


@dataclass(frozen=True)
class BernoulliMatrix:
    g: int
    entries: tuple[tuple[int, ...], ...]
    p: float
    seed: int

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]


def bernoulli_matrix(g: int, p: float, seed: int) -> BernoulliMatrix:
    """g x g matrix of i.i.d. Bernoulli(p) bits from a splitmix64 stream.

    Entry (i, j) consumes draw number i*g + j of the stream; it is 1 iff
    the draw is below floor(p * 2^64).  Regeneration from (g, p, seed) is
    bit-identical.
    """
    if g < 1:
        raise DomainError("g must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise DomainError("p must lie in [0, 1]")
    threshold = math.floor(p * 2**64)
    stream = SplitMix64(seed)
    rows = tuple(
        tuple(1 if stream.next_u64() < threshold else 0 for _ in range(g)) for _ in range(g)
    )
    return BernoulliMatrix(g=g, entries=rows, p=p, seed=seed)


def is_nonsingular_exact(m: BernoulliMatrix) -> bool:
    """Exact nonsingularity over the rationals (no floating point)."""
    return is_nonsingular(m.entries)


# ---------------------------------------------------------------------------
# Index sets and the product-span rank test


@dataclass(frozen=True)
class IndexSet:
    """Ordered pairs (i, j), 0-based, with i <= j."""

    pairs: tuple[tuple[int, int], ...]


def first_three_rows_indices(g: int) -> IndexSet:
    """The 3g-3 pairs {(0,j)}_{j>=0} u {(1,j)}_{j>=1} u {(2,j)}_{j>=2}.

    These index the products omega_1*omega_1 .. omega_3*omega_g coming
    from the first three rows of a symmetric period matrix.
    """
    if g < 3:
        raise DomainError("first_three_rows_indices requires g >= 3")
    pairs = tuple((i, j) for i in range(3) for j in range(i, g))
    assert len(pairs) == 3 * g - 3
    return IndexSet(pairs=pairs)


def product_span_rank(model: PlaneCurveModel, m: BernoulliMatrix, idx: IndexSet) -> int:
    """Exact rank of the product coefficient matrix in the quad-monomial basis.

    omega_i = sum_j M_ij zeta_j with zeta the model's monomial
    differentials; each product omega_a omega_b expands to an integer
    vector over the quad monomials.  Returns the integer rank of the
    |idx| x (3g-3) matrix of those vectors.
    """
    g = model.genus
    if m.g != g:
        raise ValidationError("matrix size must equal the model genus")
    quad_index = {mon: c for c, mon in enumerate(model.quad_monomials)}
    diff = model.diff_monomials
    # prod_col[j][l] = column of zeta_j * zeta_l in the quad basis
    prod_col = [
        [quad_index[tuple(a + b for a, b in zip(diff[j], diff[l]))] for l in range(g)]
        for j in range(g)
    ]
    ncols = len(model.quad_monomials)
    rows = []
    for a, b in idx.pairs:
        if not (0 <= a <= b < g):
            raise ValidationError("index pairs must satisfy 0 <= i <= j < g")
        ra, rb = m.entries[a], m.entries[b]
        vec = [0] * ncols
        for j in range(g):
            ca = ra[j]
            if not ca:
                continue
            cols_j = prod_col[j]
            for l in range(g):
                cb = rb[l]
                if cb:
                    vec[cols_j[l]] += ca * cb
        rows.append(vec)
    return integer_rank(rows)


# ---------------------------------------------------------------------------
# Trials and aggregation


@dataclass(frozen=True)
class TrialRecord:
    trial_index: int
    seed: int
    matrix_nonsingular: bool
    span_rank: int
    success: bool


@dataclass(frozen=True)
class SuccessStats:
    """Aggregated counts; ``estimate`` is successes/trials.

    For singularity-rate runs, "success" counts singular draws; the
    nonsingular count is always carried alongside.
    """

    trials: int
    successes: int
    nonsingular_count: int
    estimate: float
    ci95_halfwidth: float

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "nonsingular_count": self.nonsingular_count,
            "estimate": self.estimate,
            "ci95_halfwidth": self.ci95_halfwidth,
        }


def _stats(trials: int, successes: int, nonsingular: int, exact: bool = False) -> SuccessStats:
    est = successes / trials
    half = 0.0 if exact else 1.96 * math.sqrt(est * (1.0 - est) / trials)
    return SuccessStats(
        trials=trials,
        successes=successes,
        nonsingular_count=nonsingular,
        estimate=est,
        ci95_halfwidth=half,
    )


def run_trial(model: PlaneCurveModel, p: float, seed: int, trial_index: int = 0) -> TrialRecord:
    """One full experiment instance with an explicit per-trial seed."""
    g = model.genus
    m = bernoulli_matrix(g, p, seed)
    nonsing = is_nonsingular_exact(m)
    rank = product_span_rank(model, m, first_three_rows_indices(g))
    target = 3 * g - 3
    return TrialRecord(
        trial_index=trial_index,
        seed=seed,
        matrix_nonsingular=nonsing,
        span_rank=rank,
        success=rank == target,
    )


def run_trials(model: PlaneCurveModel, p: float, n_trials: int, seed: int) -> list[TrialRecord]:
    if n_trials < 1:
        raise DomainError("n_trials must be >= 1")
    return [run_trial(model, p, derive_seed(seed, i), trial_index=i) for i in range(n_trials)]


def monte_carlo(model: PlaneCurveModel, p: float, n_trials: int, seed: int) -> SuccessStats:
    """Monte Carlo success estimate over independent seeded trials.

    Per-trial seeds come from derive_seed(seed, index), so the aggregate
    is independent of execution order and any single trial can be
    reproduced in isolation.
    """
    records = run_trials(model, p, n_trials, seed)
    succ = sum(r.success for r in records)
    nonsing = sum(r.matrix_nonsingular for r in records)
    return _stats(n_trials, succ, nonsing)


def exhaustive(model: PlaneCurveModel) -> SuccessStats:
    """Exact success/nonsingularity counts over every 0/1 matrix.

    Refused above genus 3 because the enumeration has 2^(g^2) cases.
    """
    g = model.genus
    if g > 3:
        raise DomainError(
            f"exhaustive enumeration refused: 2^{g * g} = {2 ** (g * g):.3e} matrices"
        )
    idx = first_three_rows_indices(g)
    target = 3 * g - 3
    succ = 0
    nonsing = 0
    total = 2 ** (g * g)
    for code in range(total):
        bits = tuple(
            tuple((code >> (i * g + j)) & 1 for j in range(g)) for i in range(g)
        )
        m = BernoulliMatrix(g=g, entries=bits, p=0.5, seed=code)
        if is_nonsingular_exact(m):
            nonsing += 1
        if product_span_rank(model, m, idx) == target:
            succ += 1
    return _stats(total, succ, nonsing, exact=True)


def singularity_rate(g: int, p: float, n_trials: int, seed: int) -> SuccessStats:
    """Estimate Pr[M singular] for g x g Bernoulli(p) matrices.

    ``successes`` counts singular draws; every test is exact.
    """
    if g < 1:
        raise DomainError("g must be >= 1")
    if n_trials < 1:
        raise DomainError("n_trials must be >= 1")
    singular = 0
    for i in range(n_trials):
        m = bernoulli_matrix(g, p, derive_seed(seed, i))
        if not is_nonsingular_exact(m):
            singular += 1
    return _stats(n_trials, singular, n_trials - singular)


# ---------------------------------------------------------------------------
# Probability expressions

def paper_bounds(g: int) -> list[tuple[str, float]]:
    """Heuristic probability expressions for size-g experiments.

    The o(1) terms in the Tao-Vu style rates are dropped, so the first
    two values are heuristic approximations, not bounds certified here:

    * tao_vu_conjectured_nonsingular: 1 - (1/2)^g, the conjectured
      nonsingularity rate for random 0/1 matrices.
    * tao_vu_proved_lower_bound: 1 - (3/4)^g, the proved lower-bound form.
    * displayed_expression: (3g-3) / 16^(3g-3).
    * union_bound_reading: 1 - (3g-3) * (1/16)^(3g-3), the complementary
      reading of the same expression as a failure-probability bound.
    """
    if g < 2:
        raise DomainError("paper_bounds requires g >= 2")
    k = 3 * g - 3
    displayed = k / 16.0**k
    return [
        ("tao_vu_conjectured_nonsingular", 1.0 - 0.5**g),
        ("tao_vu_proved_lower_bound", 1.0 - 0.75**g),
        ("displayed_expression", displayed),
        ("union_bound_reading", 1.0 - displayed),
    ]


# ---------------------------------------------------------------------------
# Trial logs


def write_trial_log(records, path) -> None:
    """CSV log: trial_index, seed, nonsingular (0/1), span_rank, success (0/1)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["trial_index", "seed", "nonsingular", "span_rank", "success"])
        for r in records:
            w.writerow(
                [r.trial_index, r.seed, int(r.matrix_nonsingular), r.span_rank, int(r.success)]
            )
