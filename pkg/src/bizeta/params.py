"""Parameter vectors, slicing notation and domain predicates.

Indices in the public functions are 1-based to match the usual notation
for omega_1, ..., omega_r.
"""
import cmath
import math
from dataclasses import dataclass

from .dcx import DirectedComplex, from_principal, rotate
from .errors import BoundaryError, DomainError

EPS_GEO = 1e-12

UP = "up"
DOWN = "down"


class ParameterVector:
    """Immutable ordered tuple of directed complex numbers."""

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        self._entries = tuple(from_principal(e) for e in entries)

    @property
    def entries(self):
        return self._entries

    @property
    def values(self):
        return [e.value for e in self._entries]

    @property
    def args(self):
        return [e.argument for e in self._entries]

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __eq__(self, other):
        return isinstance(other, ParameterVector) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        inner = ", ".join("%.6g@%.6g" % (e.modulus, e.argument) for e in self._entries)
        return "ParameterVector(%s)" % inner

    def rotated(self, theta):
        return ParameterVector(rotate(e, theta) for e in self._entries)

    def scaled(self, alpha):
        """Multiply every entry by a directed scalar."""
        return ParameterVector(alpha * e for e in self._entries)


def as_vector(x):
    if isinstance(x, ParameterVector):
        return x
    if isinstance(x, (complex, float, int, DirectedComplex)):
        return ParameterVector([x])
    return ParameterVector(x)


def _check_index(r, j):
    if not (1 <= j <= r):
        raise IndexError("index %d outside 1..%d" % (j, r))


def hat(X, j):
    """Drop entry j."""
    X = as_vector(X)
    _check_index(len(X), j)
    e = X.entries
    return ParameterVector(e[:j - 1] + e[j:])


def _check_range(r, m, n, allow_low_empty):
    if (m, n) == (r + 1, r):
        return False
    if allow_low_empty and (m, n) == (1, 0):
        return False
    if not (1 <= m <= n <= r):
        raise IndexError("malformed range [%d, %d] for length %d" % (m, n, r))
    return True


def neg_range(X, m, n, direction):
    """Rotate entries m..n by +pi (``up``) or -pi (``down``)."""
    X = as_vector(X)
    if direction not in (UP, DOWN):
        raise ValueError("direction must be 'up' or 'down'")
    if not _check_range(len(X), m, n, allow_low_empty=False):
        return X
    theta = math.pi if direction == UP else -math.pi
    e = list(X.entries)
    for i in range(m - 1, n):
        e[i] = rotate(e[i], theta)
    return ParameterVector(e)


def sum_range(X, m, n):
    X = as_vector(X)
    if not _check_range(len(X), m, n, allow_low_empty=True):
        return 0j
    return complex(sum(X.values[m - 1:n]))


def prod_range(X, m, n):
    X = as_vector(X)
    if not _check_range(len(X), m, n, allow_low_empty=False):
        return 1 + 0j
    p = 1 + 0j
    for v in X.values[m - 1:n]:
        p *= v
    return p


def check_oc(z, omegas):
    """Argument spread of z and every omega strictly below pi."""
    args = [from_principal(z).argument] + as_vector(omegas).args
    return max(args) - min(args) < math.pi


def check_soc(z, omega0, omegas):
    omega0 = from_principal(omega0)
    top = omega0.argument
    if not (0.0 < top <= math.pi):
        raise DomainError("omega0 must have argument in (0, pi]")
    az = from_principal(z).argument
    if not (top - math.pi <= az <= top):
        return False
    return all(top - math.pi < a < top for a in as_vector(omegas).args)


def check_orc(omegas):
    args = as_vector(omegas).args
    return all(a < b for a, b in zip(args, args[1:]))


def _require_upper(omegas):
    for v in omegas.values:
        if not v.imag > 0:
            raise DomainError("parameter %r is not in the open upper half-plane" % v)


def _margin_result(margin, scale, strict):
    if margin > EPS_GEO * scale:
        return True
    if margin < -EPS_GEO * scale:
        return False
    if strict:
        raise BoundaryError("point within %.1e of the boundary" % (EPS_GEO * scale))
    return False


def zonotope_vertices(omegas):
    """Counter-clockwise vertices of the Minkowski sum of segments [0, omega_k]."""
    gens = sorted(as_vector(omegas).values, key=lambda w: math.atan2(w.imag, w.real))
    pts = [0j]
    for g in gens:
        pts.append(pts[-1] + g)
    for g in gens[:-1]:
        pts.append(pts[-1] - g)
    return pts


def cone_margin(z, omegas):
    """Signed distance-like margin of z inside the open zonotope D.

    Positive inside, negative outside, zero on the boundary.  For a single
    generator the zonotope is a segment and the margin is measured along it
    (off-line points get a negative margin).
    """
    omegas = as_vector(omegas)
    r = len(omegas)
    if r == 0:
        raise DomainError("cone needs at least one generator")
    _require_upper(omegas)
    z = complex(z)
    if r == 1:
        w = omegas.values[0]
        a = z / w
        off = abs(a.imag) * abs(w)
        if off > EPS_GEO * (abs(z) + abs(w)):
            return -off
        return min(a.real, 1.0 - a.real) * abs(w)
    pts = zonotope_vertices(omegas)
    best = math.inf
    for p, q in zip(pts, pts[1:] + pts[:1]):
        e = q - p
        d = ((e.real * (z - p).imag) - (e.imag * (z - p).real)) / abs(e)
        best = min(best, d)
    return best


def in_cone_D(z, omegas, strict=False):
    omegas = as_vector(omegas)
    scale = sum(abs(v) for v in omegas.values) if len(omegas) else 1.0
    return _margin_result(cone_margin(z, omegas), scale, strict)


def _principal_arg(z):
    return from_principal(z).argument


def in_sector_Dplus(z, omegas, strict=False):
    omegas = as_vector(omegas)
    a = _principal_arg(z)
    margin = min(a - omegas.args[-1], math.pi - a)
    return _margin_result(margin, 1.0, strict)


def in_sector_Dminus(z, omegas, strict=False):
    omegas = as_vector(omegas)
    a = _principal_arg(z)
    margin = min(a, omegas.args[0] - a)
    return _margin_result(margin, 1.0, strict)


@dataclass(frozen=True)
class NormalizedParams:
    k: int
    z_k: complex
    omega_jk: tuple
    x_k: complex
    q_jk: tuple
    z_k_directed: DirectedComplex = None


def normalize(z, omegas, k):
    """Quotients by omega_k: z_k, omega_jk (j != k) and their exponentials."""
    omegas = as_vector(omegas)
    _check_index(len(omegas), k)
    wk = omegas[k - 1]
    zd = from_principal(z) / wk
    z_k = zd.value
    omega_jk = tuple((w / wk).value for j, w in enumerate(omegas, 1) if j != k)
    x_k = cmath.exp(2j * math.pi * z_k)
    q_jk = tuple(cmath.exp(2j * math.pi * w) for w in omega_jk)
    return NormalizedParams(k, z_k, omega_jk, x_k, q_jk, zd)
