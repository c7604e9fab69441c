"""Steering quantification built on entanglement witnesses.

A state is steerable from one side iff a particular mixture of the
state with a locally depolarized copy (the tau state) is entangled.
For X-states the witness reduces to comparing the squared coherences
against three threshold combinations Q_a, Q_b, Q_c of the populations;
the quantifier rescales the witness excess by 8/sqrt(3) so the Bell
state scores exactly 1.

Direction convention: tau1 (depolarizing the second qubit) witnesses
steering from the second party to the first (B -> A); the quantifier
for that direction carries +Q_b, the A -> B one carries -Q_b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qstate import DenseState, InvalidStateError, TwoQubitXState, require_valid

SQRT3 = np.sqrt(3.0)

BRANCH_CORNER = "corner"  # driven by c14, the |00><11| coherence
BRANCH_INNER = "inner"    # driven by c23, the |01><10| coherence


@dataclass(frozen=True)
class WitnessThresholds:
    qa: float
    qb: float
    qc: float


@dataclass(frozen=True)
class EntSteeringReport:
    """Directional entanglement-based steerabilities with the active branch."""

    t_ab: float
    t_ba: float
    delta: float
    branch_ab: str
    branch_ba: str


def concurrence_xstate(s: TwoQubitXState) -> float:
    """Concurrence of an X-state: 2 max{|c14| - sqrt(p22 p33), |c23| - sqrt(p11 p44), 0}."""
    require_valid(s)
    return 2.0 * max(
        abs(s.c14) - np.sqrt(max(s.p22, 0.0) * max(s.p33, 0.0)),
        abs(s.c23) - np.sqrt(max(s.p11, 0.0) * max(s.p44, 0.0)),
        0.0,
    )


def concurrence_oracle(d: DenseState) -> float:
    """Spin-flip eigenvalue concurrence for an arbitrary two-qubit state.

    Independent of the X-state closed form: the square roots of the
    eigenvalues of rho (sy x sy) rho* (sy x sy), sorted descending, give
    max{0, l1 - l2 - l3 - l4}.  They are evaluated as the singular
    values of sqrt(rho~) sqrt(rho) with rho~ the spin-flipped state,
    which is the same spectrum without the sqrt-amplified roundoff of
    the non-Hermitian product.
    """
    if d.dim != 4:
        raise InvalidStateError("invalid state: need a two-qubit density matrix")
    sy = np.array([[0, -1j], [1j, 0]])
    flip = np.kron(sy, sy)
    ev, vec = np.linalg.eigh(d.matrix)
    if ev.min() < -1e-10:
        raise InvalidStateError(f"invalid state: eigenvalue {ev.min():.3e}")
    # Roundoff-scale eigenvalues must be flushed to exact zero: sqrt would
    # amplify 1e-17 noise to 1e-8.5 in the null space otherwise.
    ev = np.where(ev < 1e-14, 0.0, ev)
    sqrt_rho = (vec * np.sqrt(ev)) @ vec.conj().T
    sqrt_flipped = flip @ sqrt_rho.conj() @ flip
    lam = np.linalg.svd(sqrt_flipped @ sqrt_rho, compute_uv=False)
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def witness_thresholds(s: TwoQubitXState) -> WitnessThresholds:
    """The three population combinations entering the witness inequalities."""
    require_valid(s)
    # Population products are grouped so exchanging the qubits (which
    # swaps p22 <-> p33) leaves qa, qc bit-identical and negates qb.
    corner, inner = s.p11 * s.p44, s.p22 * s.p33
    cross = 0.25 * (s.p11 + s.p44) * (s.p22 + s.p33)
    qa = 0.5 * (2.0 - SQRT3) * corner + 0.5 * (2.0 + SQRT3) * inner + cross
    qb = 0.25 * (s.p11 - s.p44) * (s.p22 - s.p33)
    qc = 0.5 * (2.0 + SQRT3) * corner + 0.5 * (2.0 - SQRT3) * inner + cross
    return WitnessThresholds(qa=qa, qb=qb, qc=qc)


def steerability_ent(s: TwoQubitXState) -> EntSteeringReport:
    """Directional entanglement-based steerabilities of an X-state.

    t_ab = max{0, (8/sqrt3)(c14^2 - Qa - Qb), (8/sqrt3)(c23^2 - Qc - Qb)}
    t_ba = max{0, (8/sqrt3)(c14^2 - Qa + Qb), (8/sqrt3)(c23^2 - Qc + Qb)}
    """
    q = witness_thresholds(s)
    scale = 8.0 / SQRT3

    def direction(sign: float) -> tuple[float, str]:
        corner = scale * (s.c14 * s.c14 - q.qa + sign * q.qb)
        inner = scale * (s.c23 * s.c23 - q.qc + sign * q.qb)
        if corner >= inner:
            return max(0.0, corner), BRANCH_CORNER
        return max(0.0, inner), BRANCH_INNER

    t_ab, branch_ab = direction(-1.0)
    t_ba, branch_ba = direction(+1.0)
    return EntSteeringReport(t_ab=t_ab, t_ba=t_ba, delta=abs(t_ab - t_ba),
                             branch_ab=branch_ab, branch_ba=branch_ba)


def tau_states(s: TwoQubitXState) -> tuple[TwoQubitXState, TwoQubitXState]:
    """Witness states (tau1, tau2) for the two steering directions.

    tau1 = rho/sqrt3 + (3-sqrt3)/3 (rho_A x I/2): entangled iff B can
    steer A.  tau2 uses I/2 x rho_B and witnesses A steering B.  Both
    stay in X form; only diagonals shift.
    """
    require_valid(s)
    k = 1.0 / SQRT3
    w = (3.0 - SQRT3) / 6.0
    # Marginal populations: rho_A diag = (p11+p22, p33+p44); rho_B = (p11+p33, p22+p44).
    ra0, ra1 = s.p11 + s.p22, s.p33 + s.p44
    rb0, rb1 = s.p11 + s.p33, s.p22 + s.p44
    tau1 = TwoQubitXState(
        p11=k * s.p11 + w * ra0, p22=k * s.p22 + w * ra0,
        p33=k * s.p33 + w * ra1, p44=k * s.p44 + w * ra1,
        c14=k * s.c14, c23=k * s.c23,
    )
    tau2 = TwoQubitXState(
        p11=k * s.p11 + w * rb0, p22=k * s.p22 + w * rb1,
        p33=k * s.p33 + w * rb0, p44=k * s.p44 + w * rb1,
        c14=k * s.c14, c23=k * s.c23,
    )
    return tau1, tau2
