"""Aggregation into the hierarchy's figures of merit, plus the closed-form
Haar-average predictors (Page entropies, purity, rank thresholds).

Aggregate fields that are undefined (no detections, or an empty
denominator) carry None, never 0: "no detection" and "zero entanglement"
are different statements.
"""

import math
from dataclasses import dataclass, field

from .criteria import CRITERIA, EPS


@dataclass(frozen=True)
class CriterionStats:
    n_detected: int
    fraction: float | None        # F over the LN > 0 population
    fraction_stderr: float | None  # Bernoulli standard error sqrt(F(1-F)/n)
    mean_ln: float | None          # M, mean LN over detected records
    min_ln: float | None           # m, min LN over detected records


@dataclass(frozen=True)
class SweepStats:
    d1: int
    d2: int
    k: int
    n_total: int
    n_npt: int
    per_criterion: dict = field(default_factory=dict)


def ln_threshold(eps=EPS):
    """LN value equivalent to the PT epsilon: log2(1 + 2*eps)."""
    return math.log2(1.0 + 2.0 * eps)


def aggregate(records, eps=EPS):
    """Reduce StateRecords of one (d1, d2, k) cell to SweepStats.

    Only records with LN above the epsilon-equivalent threshold enter the
    fraction denominator; means use exact (fsum) accumulation so the
    result is independent of record order and of shard merging.
    """
    records = list(records)
    if not records:
        raise ValueError("cannot aggregate an empty record list")
    first = records[0].spec
    if first is not None:
        cell = (first.d1, first.d2, first.k)
        for r in records:
            if r.spec is not None and (r.spec.d1, r.spec.d2, r.spec.k) != cell:
                raise ValueError("records span more than one (d1, d2, k) cell")
        d1, d2, k = cell
    else:
        d1 = d2 = k = 0

    eps_ln = ln_threshold(eps)
    population = [r for r in records if r.ln > eps_ln]
    n_pos = len(population)
    n_npt = sum(1 for r in records if r.verdicts["pt"].detected)

    per = {}
    for name in CRITERIA:
        detected_ln = [r.ln for r in population if r.verdicts[name].detected]
        n_det = len(detected_ln)
        if n_pos == 0:
            per[name] = CriterionStats(n_det, None, None, None, None)
            continue
        f = n_det / n_pos
        stderr = math.sqrt(f * (1.0 - f) / n_pos)
        if n_det == 0:
            per[name] = CriterionStats(0, f, stderr, None, None)
        else:
            per[name] = CriterionStats(
                n_det, f, stderr, math.fsum(detected_ln) / n_det, min(detected_ln)
            )
    return SweepStats(d1, d2, k, len(records), n_npt, per)


def hierarchy_order(stats):
    """Criteria sorted by descending fraction; ties keep the fixed order.

    Returns a list of lists: criteria within one inner list are tied.
    Criteria with an undefined fraction sort last.
    """
    keyed = [(stats.per_criterion[c].fraction, c) for c in CRITERIA]
    ordered = sorted(keyed, key=lambda t: -1.0 if t[0] is None else t[0], reverse=True)
    groups = []
    for f, c in ordered:
        if groups and groups[-1][0] == f:
            groups[-1][1].append(c)
        else:
            groups.append((f, [c]))
    return [names for _, names in groups]


def page_entropies(d1, d2, k):
    """Haar-average subsystem entropies (natural log) for rank-k states."""
    _check_cell(d1, d2, k)
    s1 = math.log(d1) - d1 / (2.0 * d2 * k)
    s2 = math.log(d2) - d2 / (2.0 * d1 * k)
    s12 = math.log(k) - k / (2.0 * d1 * d2)
    return s1, s2, s12


def average_purity(d1, d2, k):
    """Haar-average Tr rho^2 of a rank-k state: (d1 d2 + k)/(d1 d2 k + 1)."""
    _check_cell(d1, d2, k)
    return (d1 * d2 + k) / (d1 * d2 * k + 1)


def entropy_rank_threshold(d1, d2):
    """Rank above which the entropy criterion fails on Haar average."""
    _check_dims(d1, d2)
    return max(d1, d2)


def realignment_rank_bound(d1, d2):
    """Rank at or above which realignment detection is ineffective.

    Requires d1 <= d2 (swap at the call site otherwise). Returns +inf for
    equal dimensions, where the bound is vacuous.
    """
    _check_dims(d1, d2)
    if d1 > d2:
        raise ValueError("requires d1 <= d2; swap the arguments")
    if d1 == d2:
        return math.inf
    return (d1 ** 3 * d2 - 1) / (d1 * (d2 - d1))


def ppt_rank_sufficient(d1, d2):
    """Rank making a Haar sample certainly PPT: d1 d2 (d1 d2 - 1) - 1."""
    _check_dims(d1, d2)
    n = d1 * d2
    return n * (n - 1) - 1


def _check_dims(d1, d2):
    if d1 < 2 or d2 < 2:
        raise ValueError("subsystem dimensions must be at least 2")


def _check_cell(d1, d2, k):
    _check_dims(d1, d2)
    if not 1 <= k <= d1 * d2:
        raise ValueError(f"rank k={k} outside [1, {d1 * d2}]")
