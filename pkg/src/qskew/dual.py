"""Dual quaternions and the Hermitian characterization of their matrices.

A dual quaternion is q_st + q_I * eps with quaternion parts and eps^2 = 0.
The conjugate used here keeps the printed convention of the source
material: the standard part is quaternion-conjugated, the infinitesimal
part is only negated.  Under that convention a dual quaternion matrix
equals its own conjugate transpose exactly when its standard part is
Hermitian and its infinitesimal part is skew-symmetric, and the module
keeps both sides of that equivalence independently computable.
"""

from dataclasses import dataclass

from .qmatrix import QuatMatrix
from .quaternion import Quaternion


@dataclass(frozen=True)
class DualQuaternion:
    std: Quaternion = Quaternion()
    inf: Quaternion = Quaternion()

    def __post_init__(self):
        object.__setattr__(self, "std", Quaternion.coerce(self.std))
        object.__setattr__(self, "inf", Quaternion.coerce(self.inf))

    def __add__(self, other):
        other = _coerce_dq(other)
        return DualQuaternion(self.std + other.std, self.inf + other.inf)

    __radd__ = __add__

    def __neg__(self):
        return DualQuaternion(-self.std, -self.inf)

    def __sub__(self, other):
        return self + (-_coerce_dq(other))

    def __mul__(self, other):
        other = _coerce_dq(other)
        return DualQuaternion(self.std * other.std,
                              self.std * other.inf + self.inf * other.std)

    def __rmul__(self, other):
        return _coerce_dq(other) * self

    def conjugate(self):
        """Conjugate per the printed convention: (conj q_st) - q_I eps."""
        return DualQuaternion(self.std.conjugate(), -self.inf)

    def max_abs(self):
        return max(abs(self.std), abs(self.inf))


def _coerce_dq(value):
    if isinstance(value, DualQuaternion):
        return value
    return DualQuaternion(Quaternion.coerce(value))


EPS = DualQuaternion(Quaternion(), Quaternion(1))


class DualQuatMatrix:
    """Square or rectangular matrix of dual quaternions, stored as two parts."""

    __slots__ = ("std", "inf")

    def __init__(self, std, inf=None):
        if not isinstance(std, QuatMatrix):
            std = QuatMatrix(std)
        if inf is None:
            inf = QuatMatrix.zeros(*std.shape)
        elif not isinstance(inf, QuatMatrix):
            inf = QuatMatrix(inf)
        if std.shape != inf.shape:
            raise ValueError("part shapes disagree: %r vs %r"
                             % (std.shape, inf.shape))
        object.__setattr__(self, "std", std)
        object.__setattr__(self, "inf", inf)

    def __setattr__(self, name, value):
        raise AttributeError("DualQuatMatrix is immutable")

    @property
    def shape(self):
        return self.std.shape

    def entry(self, i, j):
        return DualQuaternion(self.std.entry(i, j), self.inf.entry(i, j))

    def conj_transpose(self):
        """Entrywise dual conjugate, then transpose, entry by entry."""
        m, n = self.shape
        rows_std = []
        rows_inf = []
        for i in range(n):
            row_std = []
            row_inf = []
            for j in range(m):
                e = self.entry(j, i).conjugate()
                row_std.append(e.std)
                row_inf.append(e.inf)
            rows_std.append(row_std)
            rows_inf.append(row_inf)
        return DualQuatMatrix(QuatMatrix.from_entries(rows_std),
                              QuatMatrix.from_entries(rows_inf))

    def __sub__(self, other):
        return DualQuatMatrix(self.std - other.std, self.inf - other.inf)

    def to_dict(self):
        m, n = self.shape
        entries = []
        for i in range(m):
            for j in range(n):
                e = self.entry(i, j)
                entries.append([list(e.std.components()),
                                list(e.inf.components())])
        return {"rows": m, "cols": n, "entries_dq": entries}

    @classmethod
    def from_dict(cls, data):
        m, n = int(data["rows"]), int(data["cols"])
        entries = data["entries_dq"]
        if len(entries) != m * n:
            raise ValueError("expected %d dual entries, got %d"
                             % (m * n, len(entries)))
        std_rows = [[entries[i * n + j][0] for j in range(n)] for i in range(m)]
        inf_rows = [[entries[i * n + j][1] for j in range(n)] for i in range(m)]
        return cls(QuatMatrix.from_entries(std_rows),
                   QuatMatrix.from_entries(inf_rows))


def dq_hermitian_direct(a, tol=1e-10):
    """A* = A tested on the dual-quaternion entries themselves."""
    m, n = a.shape
    if m != n:
        raise ValueError("hermitian test needs a square matrix")
    diff = a.conj_transpose() - a
    std_ok = diff.std.max_abs() <= tol * max(1.0, a.std.max_abs())
    inf_ok = diff.inf.max_abs() <= tol * max(1.0, a.inf.max_abs())
    return std_ok and inf_ok


def dq_hermitian_split(a, tol=1e-10):
    """The part-structure test: standard part Hermitian, infinitesimal skew."""
    m, n = a.shape
    if m != n:
        raise ValueError("hermitian test needs a square matrix")
    return a.std.is_hermitian(tol) and a.inf.is_skew_symmetric(tol)


def is_dq_hermitian(a, tol=1e-10):
    """Hermitian predicate with the two routes cross-checked against each other."""
    direct = dq_hermitian_direct(a, tol)
    split = dq_hermitian_split(a, tol)
    if direct != split:
        raise RuntimeError("hermitian characterization routes disagree; "
                           "direct=%r split=%r" % (direct, split))
    return direct
