"""Built-in verification suites: every closed form against its oracle.

Each check returns (name, ok, detail).  The CLI `selfcheck` subcommand
runs them all and prints one line per check; the pytest acceptance
suite reuses them at the same tolerances.
"""

from __future__ import annotations

import numpy as np

from . import steering_ent, steering_entropy
from .hawking import (
    PAIRS,
    HawkingParams,
    closed_form_report,
    monogamy_residuals,
    pipeline_report,
)
from .qstate import TwoQubitXState, embed_dense, bloch_coefficients

ORACLE_TOL = 1e-10
PIPELINE_TOL = 1e-10
MONOGAMY_TOL = 1e-12

ENTROPY_FIELDS = ("i_ab", "i_ba", "s_ab", "s_ba", "delta")
ENT_FIELDS = ("t_ab", "t_ba", "delta")


def random_xstates(n: int, seed: int = 20240817) -> list[TwoQubitXState]:
    """Deterministic sample of valid X-states covering the full parameter box."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        pops = rng.dirichlet(np.ones(4))
        c14 = rng.uniform(-1.0, 1.0) * np.sqrt(pops[0] * pops[3])
        c23 = rng.uniform(-1.0, 1.0) * np.sqrt(pops[1] * pops[2])
        out.append(TwoQubitXState(*pops, c14=c14, c23=c23))
    return out


def grid_temperatures(n: int = 200) -> np.ndarray:
    """Logarithmic temperature grid, in units of omega."""
    return np.geomspace(1e-2, 1e4, n)


def reduced_state_population(n_grid: int = 200) -> list[TwoQubitXState]:
    """The three reduced-state families sampled on the temperature grid."""
    from .hawking import amplitudes, reduced_xstate

    states = []
    for t in grid_temperatures(n_grid):
        a = amplitudes(HawkingParams(t, 1.0))
        states.extend(reduced_xstate(a, pair) for pair in PAIRS)
    return states


def check_concurrence_oracle(n_random: int = 1000) -> tuple[str, bool, str]:
    worst = 0.0
    for s in random_xstates(n_random) + reduced_state_population():
        closed = steering_ent.concurrence_xstate(s)
        oracle = steering_ent.concurrence_oracle(embed_dense(s))
        worst = max(worst, abs(closed - oracle))
    return ("concurrence closed form vs spin-flip oracle",
            worst <= ORACLE_TOL, f"max discrepancy {worst:.3e}")


def check_entropy_oracle(n_random: int = 1000) -> tuple[str, bool, str]:
    worst = 0.0
    for s in random_xstates(n_random) + reduced_state_population():
        d = embed_dense(s)
        b = bloch_coefficients(s)
        for direction in (steering_entropy.A_TO_B, steering_entropy.B_TO_A):
            closed = steering_entropy.entropy_sum_closed_form(b, direction)
            oracle = steering_entropy.entropy_sum_from_oracle(d, direction)
            worst = max(worst, abs(closed - oracle))
    return ("entropy sum closed form vs measurement-statistics oracle",
            worst <= ORACLE_TOL, f"max discrepancy {worst:.3e}")


def check_pipeline_equivalence(n_grid: int = 200) -> tuple[str, bool, str]:
    worst = 0.0
    for t in grid_temperatures(n_grid):
        p = HawkingParams(t, 1.0)
        for pair in PAIRS:
            a = closed_form_report(p, pair)
            b = pipeline_report(p, pair)
            for f in ENTROPY_FIELDS:
                worst = max(worst, abs(getattr(a.entropy, f) - getattr(b.entropy, f)))
            for f in ENT_FIELDS:
                worst = max(worst, abs(getattr(a.ent, f) - getattr(b.ent, f)))
            worst = max(worst, abs(a.concurrence - b.concurrence))
    return ("matrix pipeline vs closed-form reports",
            worst <= PIPELINE_TOL, f"max discrepancy {worst:.3e}")


def check_monogamy(n_grid: int = 200) -> tuple[str, bool, str]:
    worst = 0.0
    for t in grid_temperatures(n_grid):
        res = monogamy_residuals(HawkingParams(t, 1.0))
        for r in res.applicable:
            worst = max(worst, abs(r))
    return ("steering/entanglement monogamy residuals",
            worst <= MONOGAMY_TOL, f"max residual {worst:.3e}")


ALL_CHECKS = (
    check_concurrence_oracle,
    check_entropy_oracle,
    check_pipeline_equivalence,
    check_monogamy,
)


def run_all() -> list[tuple[str, bool, str]]:
    return [check() for check in ALL_CHECKS]
