"""Forward-mode automatic differentiation on scalar seed bundles.

An ADScalar carries a value together with a vector of partial derivatives
("seeds") with respect to a fixed set of independent inputs.  Arithmetic
propagates the seeds by the exact chain rule, so Jacobians read off the
seeds are accurate to machine precision.  The bundle width is fixed when
the inputs are lifted; mixing bundles of different width is an error.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "ADScalar",
    "ADDomainError",
    "lift",
    "constant",
    "jacobian",
    "sin",
    "cos",
    "sqrt",
    "exp",
    "atan",
    "atan2",
    "relu_pow",
    "value_of",
    "values",
    "ad_matvec",
]


class ADDomainError(ValueError):
    """An elementary operation was evaluated outside its domain."""


class ADScalar:
    """Value plus seed-derivative bundle. Treat instances as immutable."""

    __slots__ = ("value", "seeds")

    def __init__(self, value, seeds):
        self.value = float(value)
        self.seeds = np.asarray(seeds, dtype=float)

    @property
    def width(self):
        return self.seeds.shape[0]

    def __repr__(self):
        return f"ADScalar({self.value!r}, seeds={self.seeds!r})"

    def _coerce(self, other):
        if isinstance(other, ADScalar):
            if other.seeds.shape != self.seeds.shape:
                raise ValueError(
                    f"seed width mismatch: {self.width} vs {other.width}"
                )
            return other
        return ADScalar(other, np.zeros_like(self.seeds))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        return ADScalar(self.value + o.value, self.seeds + o.seeds)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return ADScalar(self.value - o.value, self.seeds - o.seeds)

    def __rsub__(self, other):
        o = self._coerce(other)
        return ADScalar(o.value - self.value, o.seeds - self.seeds)

    def __mul__(self, other):
        o = self._coerce(other)
        return ADScalar(
            self.value * o.value, self.value * o.seeds + o.value * self.seeds
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.value == 0.0:
            raise ADDomainError(f"division by zero (numerator {self.value})")
        inv = 1.0 / o.value
        return ADScalar(
            self.value * inv,
            (self.seeds - self.value * inv * o.seeds) * inv,
        )

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __neg__(self):
        return ADScalar(-self.value, -self.seeds)

    def __pow__(self, p):
        return pow_real(self, p)

    # Comparisons act on values only; useful for branch selection.

    def __lt__(self, other):
        return self.value < _val(other)

    def __le__(self, other):
        return self.value <= _val(other)

    def __gt__(self, other):
        return self.value > _val(other)

    def __ge__(self, other):
        return self.value >= _val(other)

    def __float__(self):
        return self.value


def _val(x):
    return x.value if isinstance(x, ADScalar) else float(x)


# -- lifting ------------------------------------------------------------


def lift(x):
    """Lift a real vector to ADScalars with identity seeding.

    Element i receives seed vector e_i, so a single evaluation of a
    function on the lifted inputs yields all columns of its Jacobian.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("lift expects a nonempty 1-D vector")
    n = x.size
    eye = np.eye(n)
    return [ADScalar(x[i], eye[i]) for i in range(n)]


def constant(c, width):
    """Lift a constant: value c, all-zero seeds of the given width."""
    return ADScalar(c, np.zeros(width))


# -- elementary functions -----------------------------------------------


def sin(a):
    if isinstance(a, ADScalar):
        return ADScalar(math.sin(a.value), math.cos(a.value) * a.seeds)
    return math.sin(a)


def cos(a):
    if isinstance(a, ADScalar):
        return ADScalar(math.cos(a.value), -math.sin(a.value) * a.seeds)
    return math.cos(a)


def exp(a):
    if isinstance(a, ADScalar):
        e = math.exp(a.value)
        return ADScalar(e, e * a.seeds)
    return math.exp(a)


def sqrt(a):
    if isinstance(a, ADScalar):
        if a.value <= 0.0:
            raise ADDomainError(f"sqrt of non-positive value {a.value}")
        s = math.sqrt(a.value)
        return ADScalar(s, (0.5 / s) * a.seeds)
    if a <= 0.0:
        raise ADDomainError(f"sqrt of non-positive value {a}")
    return math.sqrt(a)


def atan(a):
    if isinstance(a, ADScalar):
        return ADScalar(math.atan(a.value), a.seeds / (1.0 + a.value * a.value))
    return math.atan(a)


def atan2(y, x):
    """Quadrant-correct arctangent; undefined at (0, 0)."""
    yv, xv = _val(y), _val(x)
    if yv == 0.0 and xv == 0.0:
        raise ADDomainError("atan2 undefined at (0, 0)")
    if not isinstance(y, ADScalar) and not isinstance(x, ADScalar):
        return math.atan2(yv, xv)
    width = y.width if isinstance(y, ADScalar) else x.width
    ys = y.seeds if isinstance(y, ADScalar) else np.zeros(width)
    xs = x.seeds if isinstance(x, ADScalar) else np.zeros(width)
    r2 = xv * xv + yv * yv
    return ADScalar(math.atan2(yv, xv), (xv * ys - yv * xs) / r2)


def pow_real(a, p):
    """a**p for real exponent p; non-integer p needs a >= 0."""
    p = float(p)
    av = _val(a)
    if av < 0.0 and p != round(p):
        raise ADDomainError(f"pow_real: negative base {av} with exponent {p}")
    if not isinstance(a, ADScalar):
        return av**p
    if av == 0.0:
        # d/da a^p at 0 is 0 for p > 1, p itself for p == 1.
        if p > 1.0:
            return ADScalar(0.0, np.zeros_like(a.seeds))
        if p == 1.0:
            return ADScalar(0.0, a.seeds.copy())
        raise ADDomainError(f"pow_real: zero base with exponent {p} <= 1")
    return ADScalar(av**p, p * av ** (p - 1.0) * a.seeds)


def relu_pow(a, p):
    """max(a, 0)**p with p > 1: the clipped power of contact models.

    Continuous with continuous value at the onset a = 0; the derivative
    p*max(a,0)**(p-1)*step(a) is continuous there because p > 1 (the
    step's own derivative at exactly 0 is taken as 0).
    """
    p = float(p)
    if p <= 1.0:
        raise ADDomainError(f"relu_pow requires exponent > 1, got {p}")
    av = _val(a)
    if not isinstance(a, ADScalar):
        return av**p if av > 0.0 else 0.0
    if av <= 0.0:
        return ADScalar(0.0, np.zeros_like(a.seeds))
    return ADScalar(av**p, p * av ** (p - 1.0) * a.seeds)


# -- vector helpers -----------------------------------------------------


def value_of(a):
    """Plain float of an ADScalar or number."""
    return _val(a)


def values(xs):
    """Value vector of a sequence of ADScalars/numbers."""
    return np.array([_val(x) for x in xs])


def ad_matvec(A, xs):
    """A @ xs for xs a float vector or a sequence of ADScalars.

    The ADScalar path batches the seed propagation through numpy
    (values: A @ v, seeds: A @ S), which keeps dense linear terms cheap.
    """
    A = np.asarray(A, dtype=float)
    if not any(isinstance(x, ADScalar) for x in xs):
        return A @ np.asarray(xs, dtype=float)
    width = next(x.width for x in xs if isinstance(x, ADScalar))
    v = np.empty(len(xs))
    S = np.empty((len(xs), width))
    for i, x in enumerate(xs):
        if isinstance(x, ADScalar):
            if x.width != width:
                raise ValueError("seed width mismatch in ad_matvec")
            v[i] = x.value
            S[i] = x.seeds
        else:
            v[i] = float(x)
            S[i] = 0.0
    ov = A @ v
    oS = A @ S
    return [ADScalar(ov[i], oS[i]) for i in range(ov.shape[0])]


def jacobian(f, x0):
    """Dense Jacobian of a vector function at x0 via one forward pass.

    f maps a sequence of ADScalars to a sequence of ADScalars (entries
    may degenerate to plain floats where f is locally constant).
    Returns an (m, n) array with row i = d f_i / d x_j.
    """
    x0 = np.asarray(x0, dtype=float)
    xs = lift(x0)
    out = f(xs)
    n = x0.size
    J = np.zeros((len(out), n))
    for i, o in enumerate(out):
        if isinstance(o, ADScalar):
            if o.width != n:
                raise ValueError("output seed width does not match input")
            J[i] = o.seeds
    return J
