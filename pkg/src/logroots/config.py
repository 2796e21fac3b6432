"""Numerical tolerances used across the package.

All thresholds live in one place so they can be overridden consistently
(e.g. from the command line or a config file).  Relative tolerances are
applied against a problem-dependent scale by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Tolerances:
    # invertibility: |det A| must exceed this
    eps_sing: float = 1e-12
    # relative singular-value threshold for numerical rank
    eps_rank: float = 1e-9
    # relative reconstruction / verification residual (exp/log round trips,
    # Jordan reconstruction, group relations, unitarity)
    eps_recon: float = 1e-8
    # eigenvalue branch-data consistency
    eps_eig: float = 1e-9
    # relative clustering radius deciding equal eigenvalues
    eps_cluster: float = 1e-7
    # distance from the branch cut q in {0, 1} below which q snaps to 0
    eps_branch: float = 1e-9
    # relative residual for invariant-subspace detection
    eps_inv: float = 1e-8
    # absolute residual allowed when snapping the Chern sum to an integer
    eps_int: float = 1e-6
    # relative threshold for the dim-2 irreducibility certificate sigma
    eps_sigma: float = 1e-9
    # condition number of the Jordan basis above which results are flagged
    cond_max: float = 1e8
    # largest denominator tried when recognizing rational branch angles
    max_denominator: int = 4096
    # working precision (decimal digits) of the exact-mode verification
    exact_dps: int = 60

    def override(self, **kwargs) -> "Tolerances":
        """Return a copy with the given fields replaced."""
        return replace(self, **kwargs)


DEFAULT = Tolerances()

TOLERANCE_NAMES = tuple(f.name for f in fields(Tolerances))
