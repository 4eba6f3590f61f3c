"""The five entanglement detection criteria and logarithmic negativity.

Each detector returns a Verdict carrying a continuous witness value next
to the boolean outcome. Thresholds are strict with a shared epsilon
(default 1e-10): boundary states are classified as not detected, since a
one-sided separability test at its boundary carries no certificate.

Witness conventions:

* pt           min eigenvalue of the partial transpose; detected < -eps
* reduction    min eigenvalue over both reduction operators; detected < -eps
* majorization largest excess of a descending partial sum of the global
               spectrum over a marginal's (marginals zero-padded);
               detected > eps
* entropy      min conditional entropy (natural log); detected < -eps
* realignment  trace norm of the realigned matrix minus 1; detected > eps
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    partial_trace,
    partial_transpose,
    realign,
    spectrum,
    trace_norm,
    von_neumann_entropy,
)

EPS = 1e-10

CRITERIA = ("pt", "reduction", "majorization", "entropy", "realignment")


@dataclass(frozen=True)
class Verdict:
    criterion: str
    detected: bool
    witness: float


@dataclass(frozen=True)
class StateRecord:
    """One evaluated sample: log-negativity plus all five verdicts."""

    ln: float
    verdicts: dict = field(default_factory=dict)
    spec: object = None


def _reduction_operators(rho):
    rho1 = partial_trace(rho, 2).mat
    rho2 = partial_trace(rho, 1).mat
    op1 = np.kron(rho1, np.eye(rho.d2)) - rho.mat
    op2 = np.kron(np.eye(rho.d1), rho2) - rho.mat
    return op1, op2


def _majorization_witness(global_eigs, marginal_eigs):
    # Zero-pad the marginal spectrum to the global length, then compare
    # every descending prefix sum.
    n = len(global_eigs)
    padded = np.zeros(n)
    padded[: len(marginal_eigs)] = marginal_eigs
    return float((np.cumsum(global_eigs) - np.cumsum(padded)).max())


def _log_negativity_from_pt_eigs(pt_eigs, eps=EPS):
    tn = float(np.abs(pt_eigs).sum())
    if tn <= 1.0 + 2.0 * eps:
        return 0.0
    return math.log2(tn)


def detect_pt(rho, eps=EPS):
    w = float(np.linalg.eigvalsh(partial_transpose(rho, 1))[0])
    return Verdict("pt", w < -eps, w)


def detect_reduction(rho, eps=EPS):
    op1, op2 = _reduction_operators(rho)
    w = float(min(np.linalg.eigvalsh(op1)[0], np.linalg.eigvalsh(op2)[0]))
    return Verdict("reduction", w < -eps, w)


def detect_majorization(rho, eps=EPS):
    eigs = spectrum(rho)
    w = max(
        _majorization_witness(eigs, spectrum(partial_trace(rho, 2))),
        _majorization_witness(eigs, spectrum(partial_trace(rho, 1))),
    )
    return Verdict("majorization", w > eps, w)


def detect_entropy(rho, eps=EPS):
    s12 = von_neumann_entropy(spectrum(rho))
    s1 = von_neumann_entropy(spectrum(partial_trace(rho, 2)))
    s2 = von_neumann_entropy(spectrum(partial_trace(rho, 1)))
    w = min(s12 - s1, s12 - s2)
    return Verdict("entropy", w < -eps, w)


def detect_realignment(rho, eps=EPS):
    w = trace_norm(realign(rho)) - 1.0
    return Verdict("realignment", w > eps, w)


def log_negativity(rho, eps=EPS):
    """log2 of the trace norm of the partial transpose, clipped to 0 on PPT."""
    pt_eigs = np.linalg.eigvalsh(partial_transpose(rho, 2))
    return _log_negativity_from_pt_eigs(pt_eigs, eps)


def evaluate_state(rho, spec=None, eps=EPS):
    """Run all five criteria plus log-negativity on one state.

    Shares the expensive eigendecompositions between the detectors; the
    partial-transpose spectrum is independent of which side is transposed,
    so the PT witness and the log-negativity come from a single solve.
    """
    pt_eigs = np.linalg.eigvalsh(partial_transpose(rho, 1))
    pt_min = float(pt_eigs[0])

    rho1 = partial_trace(rho, 2)
    rho2 = partial_trace(rho, 1)
    eigs12 = spectrum(rho)
    eigs1 = spectrum(rho1)
    eigs2 = spectrum(rho2)

    op1 = np.kron(rho1.mat, np.eye(rho.d2)) - rho.mat
    op2 = np.kron(np.eye(rho.d1), rho2.mat) - rho.mat
    red_min = float(min(np.linalg.eigvalsh(op1)[0], np.linalg.eigvalsh(op2)[0]))

    maj = max(
        _majorization_witness(eigs12, eigs1),
        _majorization_witness(eigs12, eigs2),
    )

    s12 = von_neumann_entropy(eigs12)
    ent = min(s12 - von_neumann_entropy(eigs1), s12 - von_neumann_entropy(eigs2))

    rl = trace_norm(realign(rho)) - 1.0

    verdicts = {
        "pt": Verdict("pt", pt_min < -eps, pt_min),
        "reduction": Verdict("reduction", red_min < -eps, red_min),
        "majorization": Verdict("majorization", maj > eps, maj),
        "entropy": Verdict("entropy", ent < -eps, ent),
        "realignment": Verdict("realignment", rl > eps, rl),
    }
    return StateRecord(
        ln=_log_negativity_from_pt_eigs(pt_eigs, eps), verdicts=verdicts, spec=spec
    )
