"""Unitary congruence canonical form for complex skew-symmetric matrices.

For any complex Z with Z^T = -Z there is a unitary U such that U Z U^T is
block diagonal: 2x2 blocks [[0, sigma], [-sigma, 0]] with sigma > 0, then
a zero block covering the kernel.  The construction goes through the
Hermitian product H = Z Z*: each positive eigenvalue of H carries an even
number of eigenvectors, and the antiunitary map u -> Z conj(u) / sigma
turns one eigenvector into its block partner.
"""

from dataclasses import dataclass

import numpy as np

from .clinalg import ConvergenceError, herm_eig, mgs_orthonormalize


@dataclass
class HuaForm:
    """Result of hua_decompose: U Z U^T = Sigma(sigmas, zero_dim)."""
    u: np.ndarray
    sigmas: list
    zero_dim: int
    residual: float
    unitarity_residual: float

    def canonical(self):
        """The block matrix Sigma this form certifies."""
        n = 2 * len(self.sigmas) + self.zero_dim
        s = np.zeros((n, n), dtype=complex)
        for t, sig in enumerate(self.sigmas):
            s[2 * t, 2 * t + 1] = sig
            s[2 * t + 1, 2 * t] = -sig
        return s

    def to_dict(self, include_u=True):
        out = {"sigmas": [float(s) for s in self.sigmas],
               "zero_dim": int(self.zero_dim),
               "residual": float(self.residual),
               "unitarity_residual": float(self.unitarity_residual)}
        if include_u:
            out["u"] = [[[float(v.real), float(v.imag)] for v in row]
                        for row in self.u]
        return out


def _check_complex_skew(z, tol):
    z = np.asarray(z, dtype=complex)
    if z.ndim != 2 or z.shape[0] != z.shape[1]:
        raise ValueError("need a square matrix, got shape %r" % (z.shape,))
    scale = max(1.0, float(np.abs(z).max(initial=0.0)))
    dev = float(np.abs(z + z.T).max(initial=0.0))
    if dev > tol * scale:
        raise ValueError("matrix is not skew-symmetric: max |Z + Z^T| = %.3e" % dev)
    return z


def positive_clusters(values, cluster_tol=1e-8):
    """Group the positive entries of an ascending eigenvalue array.

    Entries at or below cluster_tol * max(1, largest value) count as zero.
    Two neighbours share a cluster when their gap is at most that same
    threshold.  Returns a list of index lists, one per cluster.
    """
    values = np.asarray(values, dtype=float)
    lam_max = float(values.max(initial=0.0))
    cut = cluster_tol * max(1.0, lam_max)
    idx = [int(i) for i in np.argsort(values, kind="stable") if values[i] > cut]
    clusters = []
    for i in idx:
        if clusters and values[i] - values[clusters[-1][-1]] <= cut:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


def even_multiplicity_check(z, cluster_tol=1e-8):
    """Whether every positive eigenvalue of Z Z* appears an even number of times.

    True for every complex skew-symmetric Z; the quaternion analogue of
    this statement fails, which is the whole point of keeping it testable.
    """
    z = np.asarray(z, dtype=complex)
    h = z @ z.conj().T
    w, _ = herm_eig(h, tol=1e-12)
    return all(len(c) % 2 == 0 for c in positive_clusters(w, cluster_tol))


def hua_decompose(z, tol=1e-8, cluster_tol=1e-8):
    """Canonical pair form of a complex skew-symmetric matrix.

    Returns a HuaForm with U unitary, sigmas descending and positive, and
    the kernel gathered in a trailing zero block.  Raises ValueError for
    non-skew input or when a positive eigenvalue cluster has odd size
    (a clustering-tolerance failure), and ConvergenceError when the final
    residuals exceed their contracts.
    """
    z = _check_complex_skew(z, tol)
    n = z.shape[0]
    scale = max(1.0, float(np.sqrt((np.abs(z) ** 2).sum())))
    if n == 0:
        return HuaForm(np.zeros((0, 0), dtype=complex), [], 0, 0.0, 0.0)

    h = z @ z.conj().T
    lam, v = herm_eig(h, tol=1e-12)

    # measure each mode directly on Z; far sharper near the kernel than
    # sqrt of the H eigenvalue
    sig_hat = np.array([float(np.sqrt((np.abs(z @ v[:, j].conj()) ** 2).sum()))
                        for j in range(n)])
    zero_idx = [j for j in range(n) if sig_hat[j] <= tol * scale]
    pos_idx = sorted((j for j in range(n) if sig_hat[j] > tol * scale),
                     key=lambda j: sig_hat[j])

    # group positive modes whose squared values sit within the gap rule
    lam = sig_hat ** 2
    cut = cluster_tol * max(1.0, float(lam.max(initial=0.0)))
    clusters = []
    for j in pos_idx:
        if clusters and lam[j] - lam[clusters[-1][-1]] <= cut:
            clusters[-1].append(j)
        else:
            clusters.append([j])

    pairs = []  # (sigma, w_vec, u_vec)
    for cluster in sorted(clusters, key=lambda c: -sig_hat[c[0]]):
        if len(cluster) % 2:
            raise ValueError(
                "positive eigenvalue cluster of odd size %d at sigma ~ %.6g; "
                "clustering tolerance is off" % (len(cluster), sig_hat[cluster[0]]))
        pool = v[:, cluster].copy()
        selected = []
        for _ in range(len(cluster) // 2):
            work = pool.copy()
            for s_vec in selected:
                work -= np.outer(s_vec, s_vec.conj() @ work)
            for s_vec in selected:
                work -= np.outer(s_vec, s_vec.conj() @ work)
            norms = np.sqrt((np.abs(work) ** 2).sum(axis=0))
            best = int(np.argmax(norms))
            if norms[best] <= 1e-6:
                raise ValueError("pair extraction degenerated inside a cluster")
            u = work[:, best] / norms[best]
            sigma = float(np.sqrt((np.abs(z @ u.conj()) ** 2).sum()))
            w = (z @ u.conj()) / sigma
            # w is automatically orthogonal to u; scrub rounding against
            # the rest of the cluster
            for s_vec in selected:
                w -= (s_vec.conj() @ w) * s_vec
            w /= float(np.sqrt((np.abs(w) ** 2).sum()))
            selected.extend([w, u])
            pairs.append((sigma, w, u))

    pairs.sort(key=lambda p: -p[0])

    kernel = mgs_orthonormalize([v[:, j] for j in zero_idx], tol=1e-6)
    if len(kernel) != len(zero_idx):
        raise ValueError("kernel basis collapsed during orthonormalization")

    rows = []
    for _, w, u in pairs:
        rows.extend([w, u])
    rows.extend(kernel)
    rows = mgs_orthonormalize(rows, tol=1e-6)
    if len(rows) != n:
        raise ValueError("basis lost a vector during final orthonormalization")

    u_mat = np.array([r.conj() for r in rows])
    form = HuaForm(u_mat, [p[0] for p in pairs], len(kernel), 0.0, 0.0)
    sig_target = form.canonical()
    form.residual = float(np.sqrt((np.abs(u_mat @ z @ u_mat.T - sig_target) ** 2).sum()))
    eye = np.eye(n)
    form.unitarity_residual = float(
        np.sqrt((np.abs(u_mat.conj().T @ u_mat - eye) ** 2).sum()))

    if form.residual > tol * scale or form.unitarity_residual > tol:
        raise ConvergenceError(
            "canonical form residuals out of contract: "
            "reconstruction %.3e (limit %.3e), unitarity %.3e (limit %.3e)"
            % (form.residual, tol * scale, form.unitarity_residual, tol))
    return form
