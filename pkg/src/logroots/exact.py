"""Exact branch-angle arithmetic for rational-angle, unit-modulus spectra.

The branch angle q of every eigenvalue is recomputed in high-precision
arithmetic and matched against a rational p/s with bounded denominator.
When every local monodromy certifies, downstream sums are done in exact
Fraction arithmetic, so results near the branch cut or near an integer
boundary are decided exactly instead of by a floating snap.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np

from .config import DEFAULT, Tolerances
from .errors import ExactModeError
from .linalg import BranchedEigenvalue, as_matrix


def rational_angles(a, tol: Tolerances = DEFAULT) -> list[BranchedEigenvalue]:
    """Eigenvalues of ``a`` with certified rational angles and modulus 1.

    Eigenvalues are computed at ``tol.exact_dps`` decimal digits; each angle
    must match a rational with denominator <= ``tol.max_denominator`` and
    each modulus must be 1, both to within the working precision.  Raises
    ExactModeError otherwise.
    """
    a = as_matrix(a)
    with mpmath.workdps(tol.exact_dps):
        m = mpmath.matrix([[mpmath.mpc(z) for z in row] for row in a.tolist()])
        eigs = [m[0, 0]] if a.shape[0] == 1 else mpmath.eig(m, left=False,
                                                            right=False)
        # The input is float64, so eigenvalues carry ~1e-15 * cond of
        # quantization error no matter the working precision.  Unique
        # rational identification only needs 1/(2 s^2) separation, so
        # certify to a hundredth of that.
        check = mpmath.mpf(1) / (100 * tol.max_denominator ** 2)
        out = []
        for lam in eigs:
            r = mpmath.fabs(lam)
            if mpmath.fabs(r - 1) > check:
                raise ExactModeError(
                    f"eigenvalue modulus {mpmath.nstr(r, 8)} != 1; exact mode "
                    "requires unit-modulus spectra")
            q = mpmath.arg(lam) / (2 * mpmath.pi)
            if q < 0:
                q += 1
            frac = Fraction(float(q)).limit_denominator(tol.max_denominator) % 1
            if mpmath.fabs(q - mpmath.mpf(frac.numerator) / frac.denominator) > check \
                    and mpmath.fabs(q - 1 - mpmath.mpf(frac.numerator) / frac.denominator) > check:
                raise ExactModeError(
                    f"angle {mpmath.nstr(q, 12)} is not a rational with "
                    f"denominator <= {tol.max_denominator}")
            out.append(BranchedEigenvalue(
                value=complex(mpmath.e ** (2j * mpmath.pi * float(frac))),
                r=1.0, q=float(frac), multiplicity=1, exact_angle=frac))
    # merge exact duplicates
    merged: dict[Fraction, BranchedEigenvalue] = {}
    for ev in out:
        key = ev.exact_angle
        if key in merged:
            prev = merged[key]
            merged[key] = BranchedEigenvalue(
                value=prev.value, r=1.0, q=prev.q,
                multiplicity=prev.multiplicity + 1, exact_angle=key)
        else:
            merged[key] = ev
    return sorted(merged.values(), key=lambda ev: ev.exact_angle)


def residual_mp(matrices, basis, tol: Tolerances = DEFAULT) -> float:
    """Invariance residual of a subspace, recomputed in high precision.

    Used by exact mode to re-verify borderline invariant subspaces; the
    inputs are still floating matrices, so this tightens the arithmetic,
    not the data.
    """
    with mpmath.workdps(tol.exact_dps):
        b = mpmath.matrix([[mpmath.mpc(z) for z in row] for row in basis.tolist()])
        n, k = basis.shape
        # orthonormalize columns (Gram-Schmidt)
        for j in range(k):
            for i in range(j):
                coef = sum(mpmath.conj(b[r, i]) * b[r, j] for r in range(n))
                for r in range(n):
                    b[r, j] -= coef * b[r, i]
            nrm = mpmath.sqrt(sum(mpmath.fabs(b[r, j]) ** 2 for r in range(n)))
            for r in range(n):
                b[r, j] /= nrm
        worst = mpmath.mpf(0)
        for m in matrices:
            mm = mpmath.matrix([[mpmath.mpc(z) for z in row] for row in m.tolist()])
            mb = mm * b
            proj = b * (b.H * mb)
            diff = mb - proj
            worst = max(worst, mpmath.norm(diff))
        return float(worst)
