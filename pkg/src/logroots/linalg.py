"""Complex dense linear algebra for matrices of dimension <= 3.

Eigenvalues are computed by closed-form quadratic/cubic formulas with one
Newton polishing step; the dimension cap makes general QR iteration
unnecessary and keeps the results deterministic.  Each eigenvalue carries
branch data (r, q) with value = r * exp(2*pi*i*q) and q in [0, 1), which is
the branch convention used throughout the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import DimensionError, SingularMatrix

_TWO_PI = 2.0 * math.pi


def as_matrix(a) -> np.ndarray:
    """Validate and normalize input to a complex n x n array, n in {1,2,3}."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] not in (1, 2, 3):
        raise DimensionError(f"dimension {m.shape[0]} not in {{1, 2, 3}}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValueError("matrix entries must be finite")
    return m


def _det(a: np.ndarray) -> complex:
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0])
    if n == 2:
        return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    return complex(
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def _check_invertible(a: np.ndarray, tol: Tolerances) -> None:
    if abs(_det(a)) <= tol.eps_sing:
        raise SingularMatrix(f"|det| = {abs(_det(a)):.3e} <= {tol.eps_sing}")


@dataclass(frozen=True)
class BranchedEigenvalue:
    """An eigenvalue with principal-branch data: value = r * e^(2*pi*i*q)."""

    value: complex
    r: float
    q: float
    multiplicity: int = 1
    exact_angle: Optional[Fraction] = None
    branch_sensitive: bool = False

    def log(self) -> complex:
        """Principal logarithm of the eigenvalue under the q in [0,1) branch."""
        return complex(math.log(self.r), _TWO_PI * self.q)

    def inverse(self) -> "BranchedEigenvalue":
        """Branch data of 1/value; q maps to (1 - q) mod 1 exactly."""
        if self.exact_angle is not None:
            qx = (-self.exact_angle) % 1
            q = float(qx)
        else:
            qx = None
            q = 0.0 if self.q == 0.0 else 1.0 - self.q
        return BranchedEigenvalue(
            value=1.0 / self.value,
            r=1.0 / self.r,
            q=q,
            multiplicity=self.multiplicity,
            exact_angle=qx,
            branch_sensitive=self.branch_sensitive,
        )


def _branch_data(value: complex, tol: Tolerances) -> tuple[float, float, bool]:
    r = abs(value)
    q = cmath.phase(value) / _TWO_PI
    if q < 0.0:
        q += 1.0
    sensitive = False
    # q discontinuously wraps at the positive real axis; snap and flag there
    if q < tol.eps_branch or q > 1.0 - tol.eps_branch:
        sensitive = q != 0.0
        q = 0.0
    return r, q, sensitive


def _roots_quadratic(b: complex, c: complex) -> list[complex]:
    # monic x^2 + b x + c, cancellation-free branch choice
    s = cmath.sqrt(b * b - 4.0 * c)
    if (b.conjugate() * s).real < 0.0:
        s = -s
    t = -0.5 * (b + s)
    if t == 0.0:
        return [0.0j, -b]
    return [t, c / t]


def _roots_cubic(a: complex, b: complex, c: complex) -> list[complex]:
    # monic x^3 + a x^2 + b x + c via Cardano on the depressed cubic
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + c
    shift = -a / 3.0
    if p == 0.0 and q == 0.0:
        return [shift, shift, shift]
    d = cmath.sqrt((q / 2.0) ** 2 + (p / 3.0) ** 3)
    # pick the sign avoiding cancellation in -q/2 +/- d
    u3 = -q / 2.0 + d
    if abs(-q / 2.0 - d) > abs(u3):
        u3 = -q / 2.0 - d
    u = u3 ** (1.0 / 3.0)
    v = -p / (3.0 * u) if u != 0.0 else 0.0j
    w = complex(-0.5, 0.5 * math.sqrt(3.0))  # primitive cube root of unity
    return [u + v + shift, u * w + v * w.conjugate() + shift,
            u * w.conjugate() + v * w + shift]


def _char_roots(a: np.ndarray) -> list[complex]:
    n = a.shape[0]
    if n == 1:
        return [complex(a[0, 0])]
    tr = complex(np.trace(a))
    det = _det(a)
    if n == 2:
        return _roots_quadratic(-tr, det)
    e2 = 0.5 * (tr * tr - complex(np.trace(a @ a)))
    roots = _roots_cubic(-tr, e2, -det)
    # one Newton step on the characteristic polynomial
    polished = []
    for z in roots:
        pv = z**3 - tr * z**2 + e2 * z - det
        dv = 3.0 * z**2 - 2.0 * tr * z + e2
        polished.append(z - pv / dv if abs(dv) > 1e-14 * max(1.0, abs(z)) ** 2 else z)
    return polished


def eigenvalues(a, tol: Tolerances = DEFAULT) -> list[BranchedEigenvalue]:
    """Eigenvalues of an invertible matrix with principal-branch data.

    Values closer than ``tol.eps_cluster`` (relative to the spectral radius)
    are merged into a single entry with summed multiplicity; the Jordan
    structure downstream depends on this explicit decision.
    """
    a = as_matrix(a)
    _check_invertible(a, tol)
    raw = _char_roots(a)
    if a.shape[0] == 2:
        # Newton polish for n == 2 as well
        tr = complex(np.trace(a))
        det = _det(a)
        polished = []
        for z in raw:
            pv = z * z - tr * z + det
            dv = 2.0 * z - tr
            polished.append(z - pv / dv if abs(dv) > 1e-14 * max(1.0, abs(z)) else z)
        raw = polished
    radius = max(abs(z) for z in raw)
    cut = tol.eps_cluster * radius
    clusters: list[list[complex]] = []
    for z in sorted(raw, key=lambda w: (w.real, w.imag)):
        for cl in clusters:
            if abs(z - cl[0]) <= cut:
                cl.append(z)
                break
        else:
            clusters.append([z])
    n = a.shape[0]
    tr = complex(np.trace(a))
    out = []
    for cl in clusters:
        value = sum(cl) / len(cl)
        # A root of multiplicity k is only located to O(eps^(1/k)) by the
        # solver, which would defeat the rank threshold downstream.  Multiple
        # roots are stationary points of the characteristic polynomial, so
        # recompute them from its derivative in closed form.
        if len(cl) == n and n > 1:
            value = tr / n
        elif len(cl) == 2 and n == 3:
            e2 = 0.5 * (tr * tr - complex(np.trace(a @ a)))
            stationary = _roots_quadratic(-2.0 * tr / 3.0, e2 / 3.0)
            value = min(stationary, key=lambda z: abs(z - value))
        r, q, sensitive = _branch_data(value, tol)
        out.append(BranchedEigenvalue(value=value, r=r, q=q,
                                      multiplicity=len(cl),
                                      branch_sensitive=sensitive))
    out.sort(key=lambda ev: (ev.q, ev.r))
    return out


def _rank(m: np.ndarray, tol: Tolerances, scale: float) -> int:
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(s > tol.eps_rank * max(scale, 1e-300)))


def _null_basis(m: np.ndarray, tol: Tolerances, scale: float) -> np.ndarray:
    """Orthonormal basis of the numerical null space, columns."""
    _, s, vh = np.linalg.svd(m)
    thr = tol.eps_rank * max(scale, 1e-300)
    small = np.concatenate([s, np.zeros(m.shape[1] - len(s))]) <= thr
    return vh.conj().T[:, small]


@dataclass(frozen=True)
class JordanDecomposition:
    """A = P J P^{-1} with J in Jordan form.

    ``blocks`` lists (eigenvalue, size) pairs in the order they appear in J:
    eigenvalues ordered by (q, r) lexicographically, larger blocks first.
    """

    P: np.ndarray
    J: np.ndarray
    blocks: tuple[tuple[BranchedEigenvalue, int], ...]
    cond_P: float
    low_confidence: bool

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(size for _, size in self.blocks)


def _chains_for_eigenvalue(a: np.ndarray, ev: BranchedEigenvalue,
                           tol: Tolerances) -> list[list[np.ndarray]]:
    """Jordan chains for one eigenvalue, largest block first.

    Each chain is returned base-first: [N^{k-1}v, ..., Nv, v].
    """
    n = a.shape[0]
    lam = ev.value
    m = ev.multiplicity
    nil = a - lam * np.eye(n)
    scale = max(np.linalg.norm(a), 1.0)
    if m == 1:
        v = _null_basis(nil, tol, scale)
        if v.shape[1] == 0:
            # fall back to the least singular direction
            _, _, vh = np.linalg.svd(nil)
            v = vh.conj().T[:, -1:]
        return [[v[:, 0]]]
    g = n - _rank(nil, tol, scale)
    g = min(max(g, 1), m)
    if g == m:
        basis = _null_basis(nil, tol, scale)
        if basis.shape[1] < m:  # borderline rank call; take the smallest directions
            _, _, vh = np.linalg.svd(nil)
            basis = vh.conj().T[:, -m:]
        return [[basis[:, i]] for i in range(m)]
    if m == 2:
        # one block of size 2 inside ker(nil^2); maximize |nil v| within it
        ker2 = _null_basis(nil @ nil, tol, scale**2)
        if ker2.shape[1] < 2:
            _, _, vh = np.linalg.svd(nil @ nil)
            ker2 = vh.conj().T[:, -2:]
        _, _, wh = np.linalg.svd(nil @ ker2)
        v = ker2 @ wh.conj().T[:, 0]
        u = nil @ v
        return [[u / np.linalg.norm(u), v / np.linalg.norm(u)]]
    # m == 3
    if g == 1:
        # single block of size 3: v maximizing |nil^2 v|
        _, _, vh = np.linalg.svd(nil @ nil)
        v = vh.conj().T[:, 0]
        u1 = nil @ nil @ v
        nrm = np.linalg.norm(u1)
        return [[u1 / nrm, (nil @ v) / nrm, v / nrm]]
    # g == 2: blocks {2, 1}; here nil^2 = 0, so chain from the top direction of nil
    _, _, vh = np.linalg.svd(nil)
    v = vh.conj().T[:, 0]
    u = nil @ v
    nrm = np.linalg.norm(u)
    chain = [u / nrm, v / nrm]
    ker = _null_basis(nil, tol, scale)
    if ker.shape[1] == 0:
        _, _, vh2 = np.linalg.svd(nil)
        ker = vh2.conj().T[:, -2:]
    # pick the kernel direction most independent of the chain base
    proj = ker - np.outer(chain[0], chain[0].conj() @ ker)
    norms = np.linalg.norm(proj, axis=0)
    w = proj[:, int(np.argmax(norms))]
    return [chain, [w / np.linalg.norm(w)]]


def jordan_form(a, tol: Tolerances = DEFAULT) -> JordanDecomposition:
    """Jordan decomposition A = P J P^{-1} for invertible A, n <= 3.

    Geometric multiplicities come from SVD ranks of (A - lambda I)^k.  When
    cond(P) exceeds ``tol.cond_max`` the result is flagged low-confidence
    rather than rejected.
    """
    a = as_matrix(a)
    evs = eigenvalues(a, tol)
    cols = []
    blocks = []
    for ev in evs:  # already ordered by (q, r)
        chains = _chains_for_eigenvalue(a, ev, tol)
        chains.sort(key=len, reverse=True)
        for chain in chains:
            blocks.append((ev, len(chain)))
            cols.extend(chain)
    p = np.column_stack(cols)
    n = a.shape[0]
    j = np.zeros((n, n), dtype=complex)
    pos = 0
    for ev, size in blocks:
        for i in range(size):
            j[pos + i, pos + i] = ev.value
            if i + 1 < size:
                j[pos + i, pos + i + 1] = 1.0
        pos += size
    cond = float(np.linalg.cond(p))
    return JordanDecomposition(P=p, J=j, blocks=tuple(blocks), cond_P=cond,
                               low_confidence=cond > tol.cond_max)


@dataclass(frozen=True)
class PrincipalLog:
    """L = log(A) under the q in [0,1) branch, with the source spectrum."""

    L: np.ndarray
    eigenvalues: tuple[BranchedEigenvalue, ...]
    trace_of_log: complex
    low_confidence: bool = False


def _log_jordan_block(ev: BranchedEigenvalue, size: int) -> np.ndarray:
    # (ln r + 2 pi i q) I + log(I + N/lambda); the nilpotent series is finite
    lam = ev.value
    base = ev.log() * np.eye(size, dtype=complex)
    if size >= 2:
        nil = np.diag(np.ones(size - 1, dtype=complex), 1) / lam
        base += nil
        if size == 3:
            base -= 0.5 * (nil @ nil)
    return base


def principal_log(a, tol: Tolerances = DEFAULT) -> PrincipalLog:
    """Principal matrix logarithm: exp(L) = A with every eigenvalue of L
    having imaginary part in [0, 2*pi)."""
    a = as_matrix(a)
    jd = jordan_form(a, tol)
    n = a.shape[0]
    logj = np.zeros((n, n), dtype=complex)
    pos = 0
    for ev, size in jd.blocks:
        logj[pos:pos + size, pos:pos + size] = _log_jordan_block(ev, size)
        pos += size
    l = jd.P @ logj @ np.linalg.inv(jd.P)
    evs = eigenvalues(a, tol)
    trace = sum(ev.log() * ev.multiplicity for ev in evs)
    return PrincipalLog(L=l, eigenvalues=tuple(evs), trace_of_log=trace,
                        low_confidence=jd.low_confidence)
