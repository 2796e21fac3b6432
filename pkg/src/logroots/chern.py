"""First Chern class of the extended bundle from monodromy data.

The degree is minus the sum of the residue traces over the three poles
(0, 1, infinity), and each residue is the principal logarithm of the local
monodromy, so the trace at a pole is sum(ln r + 2*pi*i*q) over that
matrix's spectrum.  The ln-r parts cancel across the poles (determinant
coherence) and the q parts sum to an integer, which is -c1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import NonIntegerChern, ProvenBoundViolated
from .exact import rational_angles
from .linalg import BranchedEigenvalue, eigenvalues
from .rep import MonodromyRep, is_irreducible

POLES = ("0", "1", "inf")


@dataclass(frozen=True)
class PoleData:
    pole: str
    trace_of_log: complex
    q_sum: float
    exact_q_sum: Optional[Fraction] = None


@dataclass(frozen=True)
class ChernData:
    c1: int
    per_pole: tuple[PoleData, PoleData, PoleData]
    wrap_integers: tuple[int, ...]
    det_wrap: int
    raw_sum: float
    branch_sensitive: bool
    exact: bool = False


def _pole_spectra(rep: MonodromyRep, tol: Tolerances,
                  exact: bool) -> list[list[BranchedEigenvalue]]:
    """Branched spectra of the local monodromies at 0, 1, infinity.

    The spectrum at infinity is the inverse-mapped spectrum of M0*M1, so
    branch wrapping (q -> 1 - q for q > 0) is applied exactly.
    """
    eig = rational_angles if exact else eigenvalues
    s0 = eig(rep.m0, tol)
    s1 = eig(rep.m1, tol)
    sp = eig(rep.m0 @ rep.m1, tol)
    s_inf = [ev.inverse() for ev in sp]
    return [s0, s1, s_inf]


def _expand(spectrum) -> list[BranchedEigenvalue]:
    return [ev for ev in spectrum for _ in range(ev.multiplicity)]


def chern_class(rep: MonodromyRep, tol: Tolerances = DEFAULT,
                exact: bool = False) -> ChernData:
    """First Chern class via the residue-trace formula.

    Raises NonIntegerChern when the branch-angle sum misses every integer by
    more than ``tol.eps_int`` (floating mode) or is a genuine non-integer
    rational (exact mode).
    """
    spectra = _pole_spectra(rep, tol, exact)
    per_pole = []
    q_total = 0.0
    exact_total = Fraction(0) if exact else None
    ln_total = 0.0
    branch_sensitive = False
    for pole, spectrum in zip(POLES, spectra):
        trace = sum(ev.log() * ev.multiplicity for ev in spectrum)
        q_sum = float(sum(ev.q * ev.multiplicity for ev in spectrum))
        exact_q = None
        if exact:
            exact_q = sum((ev.exact_angle * ev.multiplicity for ev in spectrum),
                          Fraction(0))
            exact_total += exact_q
            q_sum = float(exact_q)
        per_pole.append(PoleData(pole=pole, trace_of_log=complex(trace),
                                 q_sum=q_sum, exact_q_sum=exact_q))
        q_total += q_sum
        ln_total += float(trace.real)
        branch_sensitive |= any(ev.branch_sensitive for ev in spectrum)

    raw = -q_total
    if exact:
        if exact_total.denominator != 1:
            raise NonIntegerChern(
                f"exact branch-angle sum {exact_total} is not an integer")
        c1 = -int(exact_total)
    else:
        c1 = round(raw)
        if abs(raw - c1) > tol.eps_int:
            raise NonIntegerChern(
                f"branch-angle sum {q_total:.9f} is {abs(raw - c1):.2e} away "
                "from an integer; consider exact rational-angle input")

    # diagnostics: per-eigenvalue wraps at infinity (q + q_inv is 0 or 1) and
    # the determinant wrap between the finite poles and the product spectrum
    prod_q = [1.0 - ev.q if ev.q > 0.0 else 0.0 for ev in _expand(spectra[2])]
    wraps = tuple(1 if ev.q > 0.0 else 0 for ev in _expand(spectra[2]))
    finite_q = sum(p.q_sum for p in per_pole[:2])
    det_wrap = round(finite_q - sum(prod_q))
    return ChernData(c1=c1, per_pole=tuple(per_pole), wrap_integers=wraps,
                     det_wrap=det_wrap, raw_sum=raw,
                     branch_sensitive=branch_sensitive, exact=exact)


@dataclass(frozen=True)
class BoundReport:
    name: str
    statement: str
    holds: bool
    conjectural: bool


def unitarity_test(rep: MonodromyRep, tol: Tolerances = DEFAULT) -> bool:
    """True iff both generator images are (literally) unitary."""
    eye = np.eye(rep.n)
    for m in (rep.m0, rep.m1):
        if np.linalg.norm(m.conj().T @ m - eye) >= tol.eps_recon:
            return False
    return True


def chern_bound_check(rep: MonodromyRep, data: ChernData,
                      tol: Tolerances = DEFAULT) -> list[BoundReport]:
    """Check every proven degree bound that applies to this rep.

    For n = 2 the bound 0 >= c1 >= -4 is a theorem, so a violation is a hard
    error; the n = 3 window -6 < c1 <= 0 is only reported as conjectural.
    """
    reports = []
    c1 = data.c1
    if rep.n == 2:
        holds = 0 >= c1 >= -4
        reports.append(BoundReport("chern-bound-dim2", "0 >= c1 >= -4",
                                   holds, conjectural=False))
        if not holds:
            raise ProvenBoundViolated(f"dim-2 degree bound failed: c1 = {c1}")
        if unitarity_test(rep, tol) and is_irreducible(rep, tol):
            strict = 0 > c1 >= -4
            reports.append(BoundReport("strict-bound-unitary-dim2",
                                       "0 > c1 >= -4 (irreducible unitary)",
                                       strict, conjectural=False))
            if not strict:
                raise ProvenBoundViolated(
                    f"strict bound for irreducible unitary dim-2 failed: c1 = {c1}")
    elif rep.n == 3:
        reports.append(BoundReport("chern-window-dim3", "-6 < c1 <= 0",
                                   -6 < c1 <= 0, conjectural=True))
    else:
        reports.append(BoundReport("character-range", "c1 in {0, -1, -2}",
                                   c1 in (0, -1, -2), conjectural=False))
    return reports
