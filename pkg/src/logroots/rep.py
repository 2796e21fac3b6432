"""Monodromy representations of the thrice-punctured line as matrix pairs.

A representation is the pair (M0, M1) of images of the two free generators;
the loop around infinity maps to (M0*M1)^{-1}.  This module detects common
invariant subspaces, irreducibility and decomposability, and extracts the
sub/quotient representations of a short exact sequence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import (DimensionError, InconsistentCertificate,
                     RelationViolated, SingularMatrix)
from .linalg import as_matrix, eigenvalues, _det


@dataclass(frozen=True)
class MonodromyRep:
    """Images (m0, m1) of the two generators; dimension n <= 3."""

    m0: np.ndarray
    m1: np.ndarray
    label: Optional[str] = None

    def __post_init__(self):
        m0 = as_matrix(self.m0)
        m1 = as_matrix(self.m1)
        if m0.shape != m1.shape:
            raise DimensionError("m0 and m1 must have the same dimension")
        for name, m in (("m0", m0), ("m1", m1)):
            if abs(_det(m)) <= DEFAULT.eps_sing:
                raise SingularMatrix(f"{name} is singular")
        object.__setattr__(self, "m0", m0)
        object.__setattr__(self, "m1", m1)

    @property
    def n(self) -> int:
        return self.m0.shape[0]

    @property
    def m_infinity(self) -> np.ndarray:
        """Local monodromy around infinity, (M0 M1)^{-1}."""
        return np.linalg.inv(self.m0 @ self.m1)


def character(v0: complex, v1: complex, label: Optional[str] = None) -> MonodromyRep:
    """One-dimensional representation mapping the generators to v0, v1."""
    return MonodromyRep(np.array([[v0]]), np.array([[v1]]), label=label)


def trivial(n: int, label: Optional[str] = None) -> MonodromyRep:
    return MonodromyRep(np.eye(n), np.eye(n), label=label)


@dataclass(frozen=True)
class InvariantSubspace:
    """A common invariant subspace, held as an orthonormal column basis."""

    dim: int
    basis: np.ndarray  # n x dim, orthonormal columns
    residual_norm: float
    non_isolated: bool = False


def _scale(rep: MonodromyRep) -> float:
    return max(np.linalg.norm(rep.m0), np.linalg.norm(rep.m1), 1.0)


def _invariance_residual(rep: MonodromyRep, basis: np.ndarray) -> float:
    res = 0.0
    proj = np.eye(rep.n) - basis @ basis.conj().T
    for m in (rep.m0, rep.m1):
        res = max(res, float(np.linalg.norm(proj @ (m @ basis))))
    return res / _scale(rep)


def _subspace_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Gap between subspaces with orthonormal column bases of equal dim."""
    s = np.linalg.svd(a.conj().T @ b, compute_uv=False)
    return float(np.sqrt(max(0.0, 1.0 - np.min(s) ** 2)))


def _common_lines(m0: np.ndarray, m1: np.ndarray,
                  tol: Tolerances) -> list[InvariantSubspace]:
    """Common eigenvectors of (m0, m1), searched over eigenvalue pairs."""
    n = m0.shape[0]
    scale = max(np.linalg.norm(m0), np.linalg.norm(m1), 1.0)
    rep_scale = scale
    found: list[InvariantSubspace] = []

    def _emit(vec: np.ndarray, non_isolated: bool):
        vec = vec / np.linalg.norm(vec)
        basis = vec.reshape(-1, 1)
        for other in found:
            if _subspace_distance(basis, other.basis) < max(tol.eps_inv, 1e-6):
                return
        res = 0.0
        for m in (m0, m1):
            w = m @ vec
            res = max(res, float(np.linalg.norm(w - (vec.conj() @ w) * vec)))
        found.append(InvariantSubspace(dim=1, basis=basis,
                                       residual_norm=res / rep_scale,
                                       non_isolated=non_isolated))

    for ev0, ev1 in itertools.product(eigenvalues(m0, tol), eigenvalues(m1, tol)):
        stacked = np.vstack([m0 - ev0.value * np.eye(n),
                             m1 - ev1.value * np.eye(n)])
        _, s, vh = np.linalg.svd(stacked)
        thr = tol.eps_inv * scale
        null = vh.conj().T[:, s <= thr]
        if null.shape[1] == 0:
            continue
        if null.shape[1] == n:
            # scalar pair: every line is invariant; report canonical lines
            for i in range(n):
                _emit(np.eye(n)[:, i].astype(complex), non_isolated=True)
        elif null.shape[1] > 1:
            for i in range(null.shape[1]):
                _emit(null[:, i], non_isolated=True)
        else:
            _emit(null[:, 0], non_isolated=False)
    return found


def common_invariant_subspaces(rep: MonodromyRep, k: int,
                               tol: Tolerances = DEFAULT) -> list[InvariantSubspace]:
    """Common invariant subspaces of dimension k, 1 <= k < n.

    k = 1 searches for common eigenvectors over eigenvalue pairs; k = n - 1
    applies the same search to the transpose pair and returns annihilators.
    For n = 3 these two routes cover all proper dimensions.
    """
    n = rep.n
    if not 1 <= k < n:
        raise DimensionError(f"k = {k} out of range for dimension {n}")
    if k == 1:
        return _common_lines(rep.m0, rep.m1, tol)
    # k == n - 1: annihilators of common eigenvectors of the transposes
    lines = _common_lines(rep.m0.T, rep.m1.T, tol)
    out = []
    for line in lines:
        w = line.basis[:, 0]
        basis = _row_annihilator(w)
        out.append(InvariantSubspace(dim=n - 1, basis=basis,
                                     residual_norm=_invariance_residual(rep, basis),
                                     non_isolated=line.non_isolated))
    # deduplicate
    dedup: list[InvariantSubspace] = []
    for sub in out:
        if all(_subspace_distance(sub.basis, o.basis) >= max(tol.eps_inv, 1e-6)
               for o in dedup):
            dedup.append(sub)
    return dedup


def _row_annihilator(w: np.ndarray) -> np.ndarray:
    """Orthonormal basis of {v : w^T v = 0} (bilinear, not Hermitian, pairing)."""
    _, _, vh = np.linalg.svd(w.reshape(1, -1))
    return vh.conj().T[:, 1:]


@dataclass(frozen=True)
class Sequence:
    """One short exact sequence 0 -> sub -> rep -> quotient -> 0."""

    sub_dim: int
    sub_rep: MonodromyRep
    quotient_rep: MonodromyRep
    basis_change: np.ndarray


@dataclass(frozen=True)
class CompositionData:
    """Invariant-subspace structure of a representation.

    ``kind`` is one of irreducible / sub1 / sub2 / both / decomposable.
    ``sequences`` lists every short exact sequence found, (n-1)-dimensional
    subs first; ``sub_rep``/``quotient_rep`` mirror the first one.  For
    decomposable reps ``components`` holds the direct summands.
    """

    kind: str
    basis_change: np.ndarray
    sub_rep: Optional[MonodromyRep] = None
    quotient_rep: Optional[MonodromyRep] = None
    sigma: Optional[complex] = None
    sequences: tuple[Sequence, ...] = ()
    components: tuple[MonodromyRep, ...] = ()
    non_isolated: bool = False


def _complete_basis(basis: np.ndarray) -> np.ndarray:
    """Extend orthonormal columns to a full orthonormal basis."""
    n = basis.shape[0]
    q, _ = np.linalg.qr(np.hstack([basis, np.eye(n, dtype=complex)]))
    # first columns of q span the same space as basis; use basis itself
    rest = q[:, basis.shape[1]:n]
    return np.hstack([basis, rest])


def _sequence_from_subspace(rep: MonodromyRep, sub: InvariantSubspace) -> Sequence:
    p = _complete_basis(sub.basis)
    pinv = np.linalg.inv(p)
    k = sub.dim
    t0 = pinv @ rep.m0 @ p
    t1 = pinv @ rep.m1 @ p
    sub_rep = MonodromyRep(t0[:k, :k], t1[:k, :k])
    quo_rep = MonodromyRep(t0[k:, k:], t1[k:, k:])
    return Sequence(sub_dim=k, sub_rep=sub_rep, quotient_rep=quo_rep,
                    basis_change=p)


def _sigma_certificate(rep: MonodromyRep, tol: Tolerances) -> tuple[complex, bool]:
    """Dim-2 irreducibility certificate.

    sigma = tr(M0 M1) - (l0*l1 + m0*m1) for a pairing of the eigenvalues;
    the rep is irreducible iff sigma != 0 for both pairings.  Returns the
    smaller-magnitude value and the nonzero verdict.
    """
    e0 = [ev.value for ev in eigenvalues(rep.m0, tol) for _ in range(ev.multiplicity)]
    e1 = [ev.value for ev in eigenvalues(rep.m1, tol) for _ in range(ev.multiplicity)]
    trp = complex(np.trace(rep.m0 @ rep.m1))
    s_a = trp - (e0[0] * e1[0] + e0[1] * e1[1])
    s_b = trp - (e0[0] * e1[1] + e0[1] * e1[0])
    sigma = s_a if abs(s_a) <= abs(s_b) else s_b
    scale = max(1.0, max(abs(z) for z in e0) * max(abs(z) for z in e1))
    return sigma, abs(sigma) > tol.eps_sigma * scale


def analyze(rep: MonodromyRep, tol: Tolerances = DEFAULT) -> CompositionData:
    """Full invariant-subspace analysis.

    Sequences with an (n-1)-dimensional sub are listed first, matching the
    preference order used by the classifier; when several subspaces exist
    all induced sequences are surfaced so conclusions can be intersected.
    """
    n = rep.n
    eye = np.eye(n, dtype=complex)
    if n == 1:
        return CompositionData(kind="irreducible", basis_change=eye)

    lines = common_invariant_subspaces(rep, 1, tol)
    planes = common_invariant_subspaces(rep, n - 1, tol) if n == 3 else []
    sigma = None
    if n == 2:
        sigma, sigma_nonzero = _sigma_certificate(rep, tol)
        if bool(lines) == sigma_nonzero:
            raise InconsistentCertificate(
                f"subspace search found {len(lines)} invariant line(s) but "
                f"|sigma| = {abs(sigma):.3e}; rerun with exact angles")

    non_isolated = any(s.non_isolated for s in lines + planes)

    if not lines and not planes:
        return CompositionData(kind="irreducible", basis_change=eye, sigma=sigma)

    # decomposability: a complementary pair of invariant subspaces
    components: tuple[MonodromyRep, ...] = ()
    basis_change = eye
    if n == 2:
        pairs = [(a, b) for a, b in itertools.combinations(lines, 2)]
    else:
        pairs = [(pl, ln) for pl in planes for ln in lines]
    for big, small in pairs:
        p = np.hstack([big.basis, small.basis])
        if abs(_det(p)) > 1e-6:
            pinv = np.linalg.inv(p)
            t0 = pinv @ rep.m0 @ p
            t1 = pinv @ rep.m1 @ p
            k = big.dim
            components = (MonodromyRep(t0[:k, :k], t1[:k, :k]),
                          MonodromyRep(t0[k:, k:], t1[k:, k:]))
            basis_change = p
            break

    sequences = tuple(_sequence_from_subspace(rep, s) for s in planes) + \
        tuple(_sequence_from_subspace(rep, s) for s in lines)

    if components:
        kind = "decomposable"
    elif n == 2:
        kind = "sub1"
    elif planes and lines:
        kind = "both"
    elif planes:
        kind = "sub2"
    else:
        kind = "sub1"

    first = sequences[0]
    return CompositionData(kind=kind,
                           basis_change=basis_change if components else first.basis_change,
                           sub_rep=first.sub_rep,
                           quotient_rep=first.quotient_rep,
                           sigma=sigma,
                           sequences=sequences,
                           components=components,
                           non_isolated=non_isolated)


def is_irreducible(rep: MonodromyRep, tol: Tolerances = DEFAULT) -> bool:
    """True iff no common proper invariant subspace exists.

    Dimension 1 has no proper nonzero subrepresentation, hence is
    irreducible.  For n = 2 the subspace search is cross-checked against the
    sigma certificate inside :func:`analyze`.
    """
    if rep.n == 1:
        return True
    return analyze(rep, tol).kind == "irreducible"


def build_from_pslz(t_eigenvalues, s_matrix,
                    tol: Tolerances = DEFAULT,
                    label: Optional[str] = None) -> MonodromyRep:
    """Build a representation factoring through the projective modular group.

    The T-image is diag(t_eigenvalues) and the S-image is ``s_matrix``; the
    pair defines such a representation iff S^2 = (ST)^3 = I, checked as an
    exact matrix identity within ``tol.eps_recon`` (no projective slack).
    Returns the rep with m0 the S-image and m1 the T-image.
    """
    t = np.diag(np.asarray(t_eigenvalues, dtype=complex))
    s = as_matrix(s_matrix)
    if s.shape != t.shape:
        raise DimensionError("S image and T eigenvalue list disagree in size")
    eye = np.eye(s.shape[0])
    res_s2 = float(np.linalg.norm(s @ s - eye))
    st = s @ t
    res_st3 = float(np.linalg.norm(st @ st @ st - eye))
    scale = max(1.0, float(np.linalg.norm(s)) ** 2)
    if res_s2 > tol.eps_recon * scale or res_st3 > tol.eps_recon * scale**3:
        raise RelationViolated(res_s2, res_st3)
    return MonodromyRep(s, t, label=label)
