"""Dense eigensolver for the exact operator matrices.

Real symmetric matrices are diagonalised by cyclic Jacobi sweeps, rotating
away one off-diagonal pair at a time until the off-diagonal Frobenius mass
drops below 1e-12 times the Frobenius norm of the input.  A complex
Hermitian matrix X + iY is routed through the real symmetric embedding

    [[X, -Y],
     [Y,  X]]

whose eigenvalues are those of the original, each doubled; one complex
eigenvector per conjugate pair is recovered by a pivoted Gram-Schmidt over
the embedded eigenvectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

REL_OFF_TOL = 1e-12
MAX_SWEEPS = 80


@dataclass
class Spectrum:
    """Eigenvalues in ascending order with matching eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def size(self) -> int:
        return len(self.eigenvalues)

    def zero_count(self, tol: float) -> int:
        return int(np.sum(np.abs(self.eigenvalues) <= tol))

    def vectors_below(self, tol: float) -> np.ndarray:
        keep = np.abs(self.eigenvalues) <= tol
        return self.eigenvectors[:, keep]


def _off_mass(a: np.ndarray) -> float:
    # summed directly: subtracting diagonal mass from total mass cancels
    # catastrophically once the matrix is nearly diagonal
    off = a - np.diag(np.diag(a))
    return float(np.sum(np.square(off)))


def jacobi_eigh(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Returns (eigenvalues ascending, eigenvector columns).
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    v = np.eye(n)
    norm2 = float(np.sum(np.square(a)))
    if norm2 == 0.0:
        return np.zeros(n), v
    target = (REL_OFF_TOL ** 2) * norm2
    for _ in range(MAX_SWEEPS):
        if _off_mass(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                small = 100.0 * abs(apq)
                if (abs(a[p, p]) + small == abs(a[p, p])
                        and abs(a[q, q]) + small == abs(a[q, q])):
                    # entry already negligible at working precision
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                # rotation annihilating a[p,q], the numerically stable way
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta*theta would overflow
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi sweeps did not converge")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigh(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Real input goes straight to ``jacobi_eigh``; complex input runs through
    the doubled real embedding and the conjugate-pair reduction.
    """
    a = np.asarray(a)
    n = a.shape[0]
    if not np.iscomplexobj(a) or not np.any(a.imag):
        w, v = jacobi_eigh(a.real.astype(np.float64))
        return w, v.astype(np.complex128) if np.iscomplexobj(a) else v
    x = a.real.astype(np.float64)
    y = a.imag.astype(np.float64)
    big = np.block([[x, -y], [y, x]])
    w2, v2 = jacobi_eigh(big)
    # each eigenvalue shows up twice; each real eigenvector (u; w) encodes
    # the complex vector u + i w, and the partner vector encodes i times it
    kept_w = []
    kept_v = []
    for k in range(2 * n):
        cand = v2[:n, k] + 1j * v2[n:, k]
        for _ in range(2):
            for prev in kept_v:
                cand = cand - prev * np.vdot(prev, cand)
        nrm = np.linalg.norm(cand)
        if nrm > 1e-6:
            kept_w.append(w2[k])
            kept_v.append(cand / nrm)
            if len(kept_w) == n:
                break
    if len(kept_w) != n:
        raise RuntimeError("conjugate-pair reduction lost an eigenvector")
    return np.array(kept_w), np.column_stack(kept_v)


def spectrum_of_ndarray(a: np.ndarray) -> Spectrum:
    w, v = hermitian_eigh(a)
    return Spectrum(w, v)
