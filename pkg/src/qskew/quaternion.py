"""Scalar quaternion arithmetic.

A quaternion is stored as four floats (w, x, y, z) meaning w + x i + y j + z k
with the usual multiplication rules i^2 = j^2 = k^2 = ijk = -1, ij = k,
jk = i, ki = j.
"""

import math
import numbers


class Quaternion:
    """Immutable quaternion with Hamilton-product arithmetic.

    Supports +, -, *, /, scalar mixing, conjugation, inversion, and the
    similarity-class helpers ``standardize`` and ``euler_decompose``.
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        object.__setattr__(self, "w", float(w))
        object.__setattr__(self, "x", float(x))
        object.__setattr__(self, "y", float(y))
        object.__setattr__(self, "z", float(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def coerce(cls, value):
        """Accept a Quaternion, a real number, or a length-4 iterable."""
        if isinstance(value, cls):
            return value
        if isinstance(value, numbers.Real):
            return cls(float(value))
        if isinstance(value, (str, bytes)):
            raise TypeError("cannot coerce %r to Quaternion" % (value,))
        seq = tuple(value)
        if len(seq) != 4:
            raise ValueError("expected 4 components, got %d" % len(seq))
        return cls(*seq)

    # -- representation --------------------------------------------------------

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def __repr__(self):
        return "Quaternion(%g, %g, %g, %g)" % self.components()

    def __eq__(self, other):
        try:
            other = Quaternion.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.components() == other.components()

    def __hash__(self):
        return hash(self.components())

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other):
        other = Quaternion.coerce(other)
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        return self + (-Quaternion.coerce(other))

    def __rsub__(self, other):
        return Quaternion.coerce(other) + (-self)

    def __mul__(self, other):
        other = Quaternion.coerce(other)
        w1, x1, y1, z1 = self.components()
        w2, x2, y2, z2 = other.components()
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __rmul__(self, other):
        return Quaternion.coerce(other) * self

    def __truediv__(self, other):
        return self * Quaternion.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Quaternion.coerce(other) * self.inverse()

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self):
        return self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2

    def __abs__(self):
        return math.sqrt(self.norm_sq())

    def inverse(self):
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conjugate()
        return Quaternion(c.w / n2, c.x / n2, c.y / n2, c.z / n2)

    # -- structure -------------------------------------------------------------

    def real(self):
        return self.w

    def imag(self):
        """The purely imaginary part as a Quaternion."""
        return Quaternion(0.0, self.x, self.y, self.z)

    def imag_norm(self):
        return math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2)

    def is_real(self, tol=0.0):
        return self.imag_norm() <= tol

    def commutes_with(self, other, tol=0.0):
        other = Quaternion.coerce(other)
        return abs(self * other - other * self) <= tol

    def similar(self, other, tol=1e-10):
        """Whether two quaternions lie in the same similarity class.

        Two quaternions are similar exactly when their real parts agree
        and their magnitudes agree, compared here within absolute tol.
        """
        other = Quaternion.coerce(other)
        return (abs(self.w - other.w) <= tol
                and abs(abs(self) - abs(other)) <= tol)

    def standardize(self):
        """The canonical class representative Re(q) + |Im(q)| i, as complex."""
        return complex(self.w, self.imag_norm())

    def euler_decompose(self, unit_tol=1e-10):
        """Write a unit quaternion as cos(theta) + omega sin(theta).

        Returns (omega, theta) with theta in [0, pi] and omega a unit pure
        imaginary Quaternion.  When sin(theta) vanishes the axis is
        ill-defined and omega defaults to i.  Raises ValueError when the
        quaternion is not unit length within unit_tol.
        """
        if abs(abs(self) - 1.0) > unit_tol:
            raise ValueError("euler_decompose needs a unit quaternion")
        s = self.imag_norm()
        # atan2 instead of acos(w): exact at the real axis and free of the
        # sqrt(eps) error blowup when w is within rounding of +-1
        theta = math.atan2(s, self.w)
        if s == 0.0:
            return Quaternion(0.0, 1.0, 0.0, 0.0), theta
        return Quaternion(0.0, self.x / s, self.y / s, self.z / s), theta


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
