"""Scalar arithmetic over the three real division algebras.

Quaternions are stored as four float64 components ``(a, b, c, d)`` for
``a + b i + c j + d k``.  The same ordering is used for quaternionic arrays,
which carry the components along a trailing axis of length 4; it matches the
split ``q = (a + b i) + (c + d i) j`` used by the complexification embedding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# HAMILTON[p, q, r]: coefficient of e_r in e_p * e_q, basis (1, i, j, k)
HAMILTON = np.zeros((4, 4, 4))
for _p, _q, _r, _s in [
    (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1),
    (1, 0, 1, 1), (1, 1, 0, -1), (1, 2, 3, 1), (1, 3, 2, -1),
    (2, 0, 2, 1), (2, 1, 3, -1), (2, 2, 0, -1), (2, 3, 1, 1),
    (3, 0, 3, 1), (3, 1, 2, 1), (3, 2, 1, -1), (3, 3, 0, -1),
]:
    HAMILTON[_p, _q, _r] = _s
del _p, _q, _r, _s

_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class Quaternion:
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    @classmethod
    def from_array(cls, arr) -> "Quaternion":
        a, b, c, d = (float(x) for x in arr)
        return cls(a, b, c, d)

    def to_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d])

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quaternion_mul(self, other)
        return Quaternion(self.a * other, self.b * other, self.c * other, self.d * other)

    def __rmul__(self, other):
        return self * other

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def conj(self) -> "Quaternion":
        return quaternion_conj(self)

    def norm(self) -> float:
        return math.sqrt(self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d)

    __abs__ = norm


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def quaternion_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p * q``."""
    return Quaternion(
        p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
        p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
        p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
        p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
    )


def quaternion_conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.a, -q.b, -q.c, -q.d)


def complex_split(q: Quaternion) -> tuple[complex, complex]:
    """Return ``(z1, z2)`` with ``q = z1 + z2 j``."""
    return complex(q.a, q.b), complex(q.c, q.d)


def complex_join(z1: complex, z2: complex) -> Quaternion:
    """Inverse of :func:`complex_split`."""
    z1, z2 = complex(z1), complex(z2)
    return Quaternion(z1.real, z1.imag, z2.real, z2.imag)


# -- array-level helpers (trailing axis of length 4) ------------------------

def qconj_array(x: np.ndarray) -> np.ndarray:
    return x * _CONJ_SIGNS


def qmul_array(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Elementwise Hamilton product of broadcastable quaternion arrays."""
    return np.einsum("pqr,...p,...q->...r", HAMILTON, x, y)


def qmatmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix product of quaternionic arrays of shape (n, m, 4) and (m, l, 4)."""
    return np.einsum("pqr,ijp,jkq->ikr", HAMILTON, x, y, optimize=True)


def split_array(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Complex parts ``(Z1, Z2)`` of a quaternionic array, ``X = Z1 + Z2 j``."""
    z1 = x[..., 0] + 1j * x[..., 1]
    z2 = x[..., 2] + 1j * x[..., 3]
    return z1, z2


def join_array(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    return np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=-1)
