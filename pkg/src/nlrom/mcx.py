"""Multicomplex arithmetic up to order 3.

A multicomplex number of order k carries 2**k real coefficients, one per
subset of the imaginary directions {i1, ..., ik}.  Coefficients are stored in
a flat array indexed by bitmask: bit (d-1) of the index is set iff direction
i_d is present, so parts[0] is the real part, parts[0b11] the i1*i2
coefficient, and so on.  With that layout the product rule is a convolution
over subsets,

    (a * b)[s] = sum over s1 ^ s2 == s of (-1)**popcount(s1 & s2) a[s1] b[s2],

which the kernels below evaluate by the recursive split
(z1 + z2*i_n)(w1 + w2*i_n) = (z1*w1 - z2*w2) + (z1*w2 + z2*w1)*i_n.

Elementary functions follow the angle-addition recursions, e.g.
sin(u + v*i_n) = sin(u)cosh(v) + cos(u)sinh(v)*i_n with u, v one order lower.

All kernels operate on the leading axis of an ndarray, so the same code
serves the scalar `MultiComplex` wrapper and the vectorized `MCArray` used by
network evaluation.  Every value is immutable after construction and all
operations are pure.
"""

from __future__ import annotations

import numpy as np

MAX_ORDER = 3


class OrderError(ValueError):
    """Requested order outside 0..MAX_ORDER, or direction beyond a value's order."""


# ---------------------------------------------------------------------------
# part-array kernels (axis 0 = 2**order coefficient slots)
# ---------------------------------------------------------------------------

def parts_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multicomplex product of two equal-order part stacks."""
    n = a.shape[0]
    if n == 1:
        return a * b
    h = n // 2
    z1, z2 = a[:h], a[h:]
    w1, w2 = b[:h], b[h:]
    lo = parts_mul(z1, w1) - parts_mul(z2, w2)
    hi = parts_mul(z1, w2) + parts_mul(z2, w1)
    return np.concatenate([lo, hi], axis=0)


def parts_inv(a: np.ndarray) -> np.ndarray:
    """Multicomplex reciprocal: 1/(z1 + z2*i_n) = (z1 - z2*i_n) / (z1^2 + z2^2)."""
    n = a.shape[0]
    if n == 1:
        return 1.0 / a
    h = n // 2
    z1, z2 = a[:h], a[h:]
    den_inv = parts_inv(parts_mul(z1, z1) + parts_mul(z2, z2))
    return np.concatenate([parts_mul(z1, den_inv), -parts_mul(z2, den_inv)], axis=0)


def _sincos(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if p.shape[0] == 1:
        return np.sin(p), np.cos(p)
    h = p.shape[0] // 2
    u, v = p[:h], p[h:]
    su, cu = _sincos(u)
    shv, chv = _sinhcosh(v)
    s = np.concatenate([parts_mul(su, chv), parts_mul(cu, shv)], axis=0)
    c = np.concatenate([parts_mul(cu, chv), -parts_mul(su, shv)], axis=0)
    return s, c


def _sinhcosh(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if p.shape[0] == 1:
        return np.sinh(p), np.cosh(p)
    h = p.shape[0] // 2
    u, v = p[:h], p[h:]
    shu, chu = _sinhcosh(u)
    sv, cv = _sincos(v)
    sh = np.concatenate([parts_mul(shu, cv), parts_mul(chu, sv)], axis=0)
    ch = np.concatenate([parts_mul(chu, cv), parts_mul(shu, sv)], axis=0)
    return sh, ch


def parts_sin(p: np.ndarray) -> np.ndarray:
    return _sincos(p)[0]


def parts_cos(p: np.ndarray) -> np.ndarray:
    return _sincos(p)[1]


def parts_sinh(p: np.ndarray) -> np.ndarray:
    return _sinhcosh(p)[0]


def parts_cosh(p: np.ndarray) -> np.ndarray:
    return _sinhcosh(p)[1]


def parts_exp(p: np.ndarray) -> np.ndarray:
    """exp(u + v*i_n) = exp(u) * (cos(v) + sin(v)*i_n)."""
    if p.shape[0] == 1:
        return np.exp(p)
    h = p.shape[0] // 2
    eu = parts_exp(p[:h])
    sv, cv = _sincos(p[h:])
    return np.concatenate([parts_mul(eu, cv), parts_mul(eu, sv)], axis=0)


def parts_cr_matrix(p: np.ndarray) -> np.ndarray:
    """Block-recursive Cauchy-Riemann real matrix of a part stack (1-d input)."""
    n = p.shape[0]
    if n == 1:
        return p.reshape(1, 1).astype(float)
    h = n // 2
    a = parts_cr_matrix(p[:h])
    b = parts_cr_matrix(p[h:])
    return np.block([[a, -b], [b, a]])


# ---------------------------------------------------------------------------
# scalar type
# ---------------------------------------------------------------------------

def _dirs_to_index(dirs) -> int:
    idx = 0
    for d in dirs:
        if not 1 <= int(d) <= MAX_ORDER:
            raise OrderError(f"imaginary direction {d} out of range 1..{MAX_ORDER}")
        idx |= 1 << (int(d) - 1)
    return idx


class MultiComplex:
    """Immutable multicomplex scalar of order 0..3.

    parts[s] is the coefficient of the product of the imaginary directions in
    the bitmask s (parts[0] = real part).
    """

    __slots__ = ("order", "parts")

    def __init__(self, parts):
        parts = np.asarray(parts, dtype=float).reshape(-1)
        order = int(parts.shape[0]).bit_length() - 1
        if parts.shape[0] != 1 << order or order > MAX_ORDER:
            raise OrderError(f"parts length {parts.shape[0]} is not 2**k with k <= {MAX_ORDER}")
        parts.setflags(write=False)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *_):
        raise AttributeError("MultiComplex is immutable")

    @staticmethod
    def promote(x: float, order: int) -> "MultiComplex":
        """Embed a real number at the given order (all imaginary parts zero)."""
        if not 0 <= order <= MAX_ORDER:
            raise OrderError(f"order {order} out of range 0..{MAX_ORDER}")
        parts = np.zeros(1 << order)
        parts[0] = x
        return MultiComplex(parts)

    def to_order(self, order: int) -> "MultiComplex":
        if order < self.order:
            raise OrderError("cannot demote a multicomplex value")
        if order == self.order:
            return self
        parts = np.zeros(1 << order)
        parts[: self.parts.shape[0]] = self.parts
        return MultiComplex(parts)

    @property
    def real(self) -> float:
        return float(self.parts[0])

    def im(self, dirs) -> float:
        """Coefficient of the mixed imaginary direction given by `dirs`."""
        idx = _dirs_to_index(dirs)
        if idx >= self.parts.shape[0]:
            raise OrderError(f"directions {set(dirs)} exceed order {self.order}")
        return float(self.parts[idx])

    def _coerce(self, other):
        if isinstance(other, MultiComplex):
            k = max(self.order, other.order)
            return self.to_order(k), other.to_order(k)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self, MultiComplex.promote(float(other), self.order)
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return MultiComplex(a.parts + b.parts)

    __radd__ = __add__

    def __neg__(self):
        return MultiComplex(-self.parts)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return MultiComplex(a.parts - b.parts)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return MultiComplex(parts_mul(a.parts, b.parts))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return MultiComplex(parts_mul(a.parts, parts_inv(b.parts)))

    def __rtruediv__(self, other):
        return MultiComplex(parts_mul(
            MultiComplex.promote(float(other), self.order).parts, parts_inv(self.parts)))

    def __repr__(self):
        return f"MultiComplex(order={self.order}, parts={self.parts.tolist()})"


# ---------------------------------------------------------------------------
# spec-surface functions
# ---------------------------------------------------------------------------

def promote(x: float, order: int) -> MultiComplex:
    return MultiComplex.promote(x, order)


def mc_add(a: MultiComplex, b: MultiComplex) -> MultiComplex:
    return a + b


def mc_mul(a: MultiComplex, b: MultiComplex) -> MultiComplex:
    return a * b


def mc_scale(a: MultiComplex, s: float) -> MultiComplex:
    return MultiComplex(a.parts * float(s))


def im_extract(z: MultiComplex, dirs) -> float:
    return z.im(dirs)


def _lift(fn, z: MultiComplex) -> MultiComplex:
    return MultiComplex(fn(z.parts))


def mc_sin(z: MultiComplex) -> MultiComplex:
    return _lift(parts_sin, z)


def mc_cos(z: MultiComplex) -> MultiComplex:
    return _lift(parts_cos, z)


def mc_sinh(z: MultiComplex) -> MultiComplex:
    return _lift(parts_sinh, z)


def mc_cosh(z: MultiComplex) -> MultiComplex:
    return _lift(parts_cosh, z)


def mc_exp(z: MultiComplex) -> MultiComplex:
    return _lift(parts_exp, z)


def cr_matrix(z: MultiComplex) -> np.ndarray:
    """2^n x 2^n real Cauchy-Riemann matrix; a ring homomorphism on add/mul."""
    return parts_cr_matrix(z.parts)


# ---------------------------------------------------------------------------
# vectorized container for network evaluation
# ---------------------------------------------------------------------------

class MCArray:
    """A vector (or batch of vectors) of equal-order multicomplex scalars.

    parts has shape (2**order, dim) or (2**order, dim, batch); the leading
    axis is the coefficient slot, so real linear maps act on each slot
    independently (the Cauchy-Riemann block rule) and the elementwise kernels
    above apply directly.
    """

    __slots__ = ("parts", "order")

    def __init__(self, parts: np.ndarray):
        parts = np.asarray(parts, dtype=float)
        order = int(parts.shape[0]).bit_length() - 1
        if parts.shape[0] != 1 << order or order > MAX_ORDER:
            raise OrderError(f"leading axis {parts.shape[0]} is not 2**k with k <= {MAX_ORDER}")
        self.parts = parts
        self.order = order

    @staticmethod
    def promote(x: np.ndarray, order: int) -> "MCArray":
        x = np.asarray(x, dtype=float)
        parts = np.zeros((1 << order,) + x.shape)
        parts[0] = x
        return MCArray(parts)

    @property
    def value(self) -> np.ndarray:
        return self.parts[0]

    def im(self, dirs) -> np.ndarray:
        idx = _dirs_to_index(dirs)
        if idx >= self.parts.shape[0]:
            raise OrderError(f"directions {set(dirs)} exceed order {self.order}")
        return self.parts[idx]

    def scalar(self, i: int) -> MultiComplex:
        """The i-th entry as a scalar MultiComplex (1-d payload only)."""
        if self.parts.ndim != 2:
            raise ValueError("scalar() requires an unbatched MCArray")
        return MultiComplex(self.parts[:, i].copy())

    def __add__(self, other):
        if isinstance(other, MCArray):
            return MCArray(self.parts + other.parts)
        out = self.parts.copy()
        out[0] = out[0] + other
        return MCArray(out)

    def __mul__(self, other):
        if isinstance(other, MCArray):
            return MCArray(parts_mul(self.parts, other.parts))
        return MCArray(self.parts * other)

    __rmul__ = __mul__

    def sin(self) -> "MCArray":
        return MCArray(parts_sin(self.parts))

    def exp(self) -> "MCArray":
        return MCArray(parts_exp(self.parts))
