"""Directed complex numbers and the classical gamma function.

A directed complex number keeps its argument as an unrestricted real, so a
rotation by pi followed by a rotation by -pi returns the original value and
``(1, pi)`` and ``(1, -pi)`` stay distinct under complex powers.
"""
import cmath
import math

from .errors import DomainError, PoleError

__all__ = ["DirectedComplex", "from_principal", "rotate", "cpow", "gamma",
           "rgamma", "E_PLUS_PI", "E_MINUS_PI"]


class DirectedComplex:
    """Nonzero complex number with an explicit, unreduced argument.

    Whole half-turns are counted separately from the rest of the argument,
    so rotating by pi and back restores the stored value bit for bit.
    """

    __slots__ = ("modulus", "_base", "_turns")

    def __init__(self, modulus, argument, _turns=0):
        modulus, argument = float(modulus), float(argument)
        if not (modulus > 0.0) or not math.isfinite(modulus):
            raise DomainError("directed complex numbers need a positive finite modulus")
        if not math.isfinite(argument):
            raise DomainError("argument must be finite")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "_base", argument)
        object.__setattr__(self, "_turns", int(_turns))

    def __setattr__(self, name, value):
        raise AttributeError("DirectedComplex is immutable")

    @property
    def argument(self):
        if self._turns == 0:
            return self._base
        return self._base + self._turns * math.pi

    def __eq__(self, other):
        if not isinstance(other, DirectedComplex):
            return NotImplemented
        return self.modulus == other.modulus and self.argument == other.argument

    def __hash__(self):
        return hash((self.modulus, self.argument))

    def __repr__(self):
        return "DirectedComplex(modulus=%r, argument=%r)" % (self.modulus, self.argument)

    def __reduce__(self):
        return (DirectedComplex, (self.modulus, self._base, self._turns))

    @property
    def value(self):
        """Rectangular form."""
        return cmath.rect(self.modulus, self.argument)

    def log(self):
        return complex(math.log(self.modulus), self.argument)

    def __mul__(self, other):
        if isinstance(other, DirectedComplex):
            return DirectedComplex(self.modulus * other.modulus, self._base + other._base,
                                   self._turns + other._turns)
        if isinstance(other, (int, float)) and other > 0:
            return DirectedComplex(self.modulus * other, self._base, self._turns)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, DirectedComplex):
            return DirectedComplex(self.modulus / other.modulus, self._base - other._base,
                                   self._turns - other._turns)
        if isinstance(other, (int, float)) and other > 0:
            return DirectedComplex(self.modulus / other, self._base, self._turns)
        return NotImplemented

    def inverse(self):
        return DirectedComplex(1.0 / self.modulus, -self._base, -self._turns)

    def to_principal(self):
        return self.value

    def __complex__(self):
        return self.value


E_PLUS_PI = DirectedComplex(1.0, 0.0, 1)
E_MINUS_PI = DirectedComplex(1.0, 0.0, -1)


def from_principal(w):
    """Wrap a nonzero complex number using its principal argument in (-pi, pi]."""
    if isinstance(w, DirectedComplex):
        return w
    w = complex(w)
    if w == 0:
        raise DomainError("zero has no direction")
    arg = math.atan2(w.imag, w.real)
    # atan2 gives -pi for (-x, -0.0); the convention wants +pi there
    if arg == -math.pi:
        arg = math.pi
    return DirectedComplex(abs(w), arg)


def in_window(w, lo, hi):
    """Direct w with an argument in [lo, hi] (hi - lo < 2 pi).

    Used where a formula pins the branch of a sum like ``a + e^{-pi i} b``.
    """
    d = from_principal(w)
    arg = d.argument
    while arg > hi:
        arg -= 2 * math.pi
    while arg < lo:
        arg += 2 * math.pi
    if arg > hi + 1e-12:
        raise DomainError("argument %.6g outside window [%.6g, %.6g]" % (d.argument, lo, hi))
    return DirectedComplex(d.modulus, arg)


def rotate(a, theta):
    """Turn a by theta; multiples of pi are tracked exactly."""
    k = round(theta / math.pi)
    if k * math.pi == theta:
        return DirectedComplex(a.modulus, a._base, a._turns + k)
    return DirectedComplex(a.modulus, a.argument + theta)


def cpow(a, s):
    """a**s with the logarithm taken along the stored argument."""
    if not isinstance(a, DirectedComplex):
        a = from_principal(a)
    s = complex(s)
    return cmath.exp(s * a.log())


# Lanczos, g = 7, nine terms.  About 15 digits on Re s >= 1/2.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def _nonpositive_integer(s):
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def _gamma_right(s):
    z = s - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return cmath.exp(_HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t) * acc


def gamma(s):
    """Classical gamma function for complex s.

    Uses the reflection formula on Re s < 1/2.  Raises PoleError on the
    nonpositive integers.
    """
    s = complex(s)
    if _nonpositive_integer(s):
        raise PoleError("gamma has a pole at s = %g" % s.real)
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * _gamma_right(1.0 - s))
    return _gamma_right(s)


def rgamma(s):
    """1/gamma(s), entire; exactly zero at the nonpositive integers."""
    s = complex(s)
    if _nonpositive_integer(s):
        return 0j
    if s.real < 0.5:
        return cmath.sin(math.pi * s) * _gamma_right(1.0 - s) / math.pi
    return 1.0 / _gamma_right(s)
