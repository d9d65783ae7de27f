"""Right eigenvalues of Hermitian quaternion matrices via the complex adjoint.

The embedding chi sends an n x n quaternion matrix to a 2n x 2n complex
matrix multiplicatively, so Hermitian quaternion eigenproblems reduce to
complex ones.  Each real right eigenvalue of the quaternion matrix shows
up twice in the complex spectrum; the pairing is checked, every second
value is kept, and eigenvectors are mapped back to quaternion columns.
"""

from dataclasses import dataclass, field

import numpy as np

from .clinalg import herm_eig, lu_inverse
from .qmatrix import QuatMatrix

PAIR_TOL = 1e-9


@dataclass
class RightSpectrum:
    """Ascending real right eigenvalues with a quaternion eigenbasis.

    pairing_gaps holds the spread inside each doubled pair of the complex
    spectrum; values near machine precision confirm the doubling.
    """
    values: np.ndarray
    vectors: QuatMatrix
    pairing_gaps: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def to_dict(self, include_vectors=False):
        out = {"values": [float(v) for v in self.values],
               "pairing_gaps": [float(g) for g in self.pairing_gaps]}
        if include_vectors:
            out["vectors"] = self.vectors.data.tolist()
        return out


def chi(a):
    """Complex adjoint of a quaternion matrix (2m x 2n complex)."""
    if not isinstance(a, QuatMatrix):
        a = QuatMatrix(a)
    return a.chi()


def chi_inverse_map(c, tol=1e-10):
    """Back out the quaternion matrix whose adjoint is c.

    Raises ValueError when c violates the adjoint block symmetry by more
    than tol relative to its largest entry.
    """
    return QuatMatrix.from_chi(c, tol=tol)


def _antidual(v):
    """The antiunitary companion of a complex 2n-vector in adjoint coordinates.

    Commutes with every chi image and squares to -1; the companion of an
    eigenvector is an eigenvector for the same value, always orthogonal to
    the original.
    """
    n = v.size // 2
    return np.concatenate([-v[n:].conj(), v[:n].conj()])


def _lift_column(v):
    """Quaternion column from a complex eigenvector of the adjoint."""
    n = v.size // 2
    xc = v[:n]
    xd = -v[n:].conj()
    return xc, xd


def right_eigenvalues_hermitian(a, tol=1e-10):
    """Right spectrum of a Hermitian quaternion matrix.

    Returns a RightSpectrum: n ascending real eigenvalues, a unitary
    QuatMatrix of right eigenvectors (A x = x lambda per column), and the
    pairing gaps of the doubled complex spectrum.  Raises ValueError on
    non-Hermitian input or when the complex spectrum fails to pair within
    1e-9 * max(1, ||A||_F).
    """
    if not isinstance(a, QuatMatrix):
        a = QuatMatrix(a)
    if not a.is_hermitian(tol):
        raise ValueError("right spectrum needs a Hermitian matrix")
    n = a.nrows
    mu, v = herm_eig(a.chi(), tol=1e-12)

    pair_tol = PAIR_TOL * max(1.0, a.norm())
    gaps = mu[1::2] - mu[0::2]
    if gaps.size and float(gaps.max()) > pair_tol:
        raise ValueError(
            "complex spectrum does not pair: worst gap %.3e exceeds %.3e"
            % (float(gaps.max()), pair_tol))
    values = mu[::2].copy()

    # group pairs whose values collide, then pull one quaternion vector
    # per pair out of each group
    clusters = []
    start = 0
    for t in range(1, n):
        if values[t] - values[t - 1] > pair_tol:
            clusters.append((start, t))
            start = t
    clusters.append((start, n))

    cols_c = np.zeros((n, n), dtype=complex)
    cols_d = np.zeros((n, n), dtype=complex)
    out = 0
    for lo, hi in clusters:
        pool = v[:, 2 * lo:2 * hi].copy()
        chosen = []
        for _ in range(hi - lo):
            work = pool.copy()
            for c in chosen:
                for u in (c, _antidual(c)):
                    work -= np.outer(u, u.conj() @ work)
            norms = np.sqrt((np.abs(work) ** 2).sum(axis=0))
            best = int(np.argmax(norms))
            if norms[best] <= 1e-6:
                raise ValueError("eigenspace extraction degenerated; "
                                 "residual pool norm %.3e" % norms[best])
            x = work[:, best] / norms[best]
            chosen.append(x)
        for x in chosen:
            xc, xd = _lift_column(x)
            cols_c[:, out] = xc
            cols_d[:, out] = xd
            out += 1

    vectors = QuatMatrix.from_complex_pair(cols_c, cols_d)
    return RightSpectrum(values, vectors, gaps)


def gram_product(z, tol=1e-10):
    """W = Z Z* for a skew-symmetric quaternion Z.

    Also forms -Z conj(Z) independently and insists the two agree
    entrywise; for a skew-symmetric Z they are the same matrix.  The
    result is Hermitian positive semidefinite.
    """
    if not isinstance(z, QuatMatrix):
        z = QuatMatrix(z)
    if not z.is_skew_symmetric(tol):
        raise ValueError("gram_product needs a skew-symmetric matrix")
    w = z @ z.conj_transpose()
    w_alt = -(z @ z.conj())
    if not w.allclose(w_alt, tol):
        raise ValueError("Z Z* and -Z conj(Z) disagree beyond tolerance; "
                         "input is too far from skew-symmetric")
    return w


def quat_inverse(a, tol=1e-10):
    """Inverse of a quaternion matrix through the complex adjoint.

    Raises SingularMatrixError (from the LU pivot test) when the matrix is
    not invertible, and ValueError if the inverse loses the adjoint block
    structure beyond tolerance.
    """
    if not isinstance(a, QuatMatrix):
        a = QuatMatrix(a)
    a._require_square("quat_inverse")
    return chi_inverse_map(lu_inverse(a.chi(), tol=tol), tol=1e-8)


def is_positive_semidefinite(a, tol=1e-10):
    """Min right eigenvalue >= -tol * max(1, ||A||_F)."""
    if not isinstance(a, QuatMatrix):
        a = QuatMatrix(a)
    spec = right_eigenvalues_hermitian(a, tol)
    return float(spec.values.min()) >= -tol * max(1.0, a.norm())


def is_positive_definite(a, tol=1e-10):
    """Min right eigenvalue strictly above +tol * max(1, ||A||_F)."""
    if not isinstance(a, QuatMatrix):
        a = QuatMatrix(a)
    spec = right_eigenvalues_hermitian(a, tol)
    return float(spec.values.min()) > tol * max(1.0, a.norm())
