"""Two-level (SU(2)) state algebra.

Spinors over labeled poles, spherical coordinates, Pauli operators,
expectation vectors, and closed-form rotation operators.

Conventions: the north-pole ket is (1, 0) and the south-pole ket is (0, 1),
so sigma_z is diagonal with +1 on the north pole.  A state at polar angle
theta and azimuth phi has amplitudes (cos(theta/2), e^{i phi} sin(theta/2))
and expectation vector (sin theta cos phi, sin theta sin phi, cos theta).
The two sphere families (P for photon polarization, B for electron spin)
share this algebra; the label only names the poles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import tolerances

__all__ = [
    "Sphere",
    "SphereCoords",
    "Spinor",
    "spinor_from_sphere",
    "sphere_from_spinor",
    "pauli",
    "expectation_vector",
    "pauli_dot",
    "rotation_operator",
    "inner_product",
    "apply",
]

TAU = 2.0 * math.pi


class Sphere(Enum):
    """Which sphere family names the poles: P for polarization states
    {|R>, |L>}, B for spin states {|up>, |down>}.  Presentation only."""

    P = "P"
    B = "B"


def _require_finite(*values: float) -> None:
    if not all(math.isfinite(v) for v in values):
        raise ValueError("values must be finite (no NaN or Inf)")


@dataclass(frozen=True)
class SphereCoords:
    """Spherical coordinates with theta in [0, pi] and phi in [0, 2*pi).

    The azimuth is undefined at the poles, so phi is canonicalized to 0
    when theta is exactly 0 or pi.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        theta = float(self.theta)
        phi = float(self.phi)
        _require_finite(theta, phi)
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
        if not 0.0 <= phi < TAU:
            raise ValueError(f"phi must lie in [0, 2*pi), got {phi!r}")
        if theta == 0.0 or theta == math.pi:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


@dataclass(frozen=True)
class Spinor:
    """Normalized two-component complex amplitude over labeled poles."""

    a_n: complex
    a_s: complex
    label: Sphere = Sphere.B

    def __post_init__(self) -> None:
        a_n = complex(self.a_n)
        a_s = complex(self.a_s)
        _require_finite(a_n.real, a_n.imag, a_s.real, a_s.imag)
        norm_sq = abs(a_n) ** 2 + abs(a_s) ** 2
        if abs(norm_sq - 1.0) > tolerances.DEFAULT_ATOL:
            raise ValueError(
                f"spinor must be normalized: |a_n|^2 + |a_s|^2 = {norm_sq!r}"
            )
        if not isinstance(self.label, Sphere):
            raise ValueError(f"label must be a Sphere member, got {self.label!r}")
        object.__setattr__(self, "a_n", a_n)
        object.__setattr__(self, "a_s", a_s)

    @property
    def vec(self) -> np.ndarray:
        """Amplitudes as a length-2 complex array."""
        return np.array([self.a_n, self.a_s], dtype=complex)


def spinor_from_sphere(c: SphereCoords, label: Sphere = Sphere.B) -> Spinor:
    """State at spherical coordinates c:
    cos(theta/2) |N> + e^{i phi} sin(theta/2) |S>."""
    half = 0.5 * c.theta
    return Spinor(math.cos(half), cmath.exp(1j * c.phi) * math.sin(half), label)


def sphere_from_spinor(s: Spinor) -> SphereCoords:
    """Invert ``spinor_from_sphere`` up to global phase.

    The global phase is removed by making a_n real and nonnegative; phi is
    0 by convention at the poles.
    """
    r_n = abs(s.a_n)
    r_s = abs(s.a_s)
    theta = 2.0 * math.atan2(r_s, r_n)
    if r_n == 0.0 or r_s == 0.0:
        return SphereCoords(theta, 0.0)
    phi = cmath.phase(s.a_s * s.a_n.conjugate()) % TAU
    if phi >= TAU:
        phi = 0.0
    return SphereCoords(theta, phi)


_SIGMA = {
    "identity": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_SIGMA_ALIASES = {0: "identity", 1: "x", 2: "y", 3: "z", "i": "identity"}


def pauli(axis) -> np.ndarray:
    """Pauli matrix for axis 'x'|'y'|'z' (or 1|2|3), or 'identity' (0)."""
    key = _SIGMA_ALIASES.get(axis, axis)
    if isinstance(key, str):
        key = key.lower()
    try:
        return _SIGMA[key].copy()
    except (KeyError, TypeError):
        raise ValueError(f"unknown Pauli axis {axis!r}") from None


def expectation_vector(s: Spinor) -> np.ndarray:
    """Pauli expectation (<sx>, <sy>, <sz>) of a pure state; a unit 3-vector.

    Read as the Stokes vector for label P and the Bloch vector for label B.
    """
    norm = math.sqrt(abs(s.a_n) ** 2 + abs(s.a_s) ** 2)
    a = s.a_n / norm
    b = s.a_s / norm
    cross = a.conjugate() * b
    return np.array([2.0 * cross.real, 2.0 * cross.imag, abs(a) ** 2 - abs(b) ** 2])


def _as_unit_vector(n, atol: float | None = None) -> np.ndarray:
    v = np.asarray(n, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    norm = float(np.linalg.norm(v))
    if atol is None:
        atol = tolerances.UNIT_ATOL
    if abs(norm - 1.0) > atol:
        raise ValueError(f"expected a unit vector, got |n| = {norm!r}")
    return v / norm


def pauli_dot(n) -> np.ndarray:
    """n . sigma for a unit 3-vector n.

    Hermitian and traceless with eigenvalues +1 and -1.
    """
    v = _as_unit_vector(n)
    return np.array(
        [[v[2], v[0] - 1j * v[1]], [v[0] + 1j * v[1], -v[2]]], dtype=complex
    )


def rotation_operator(n, angle: float) -> np.ndarray:
    """exp(-i angle/2 n.sigma) = cos(angle/2) I - i sin(angle/2) n.sigma.

    Unitary; rotates expectation vectors right-handed about n by angle.
    Note the double cover: a 2*pi angle returns -I on amplitudes.
    """
    half = 0.5 * float(angle)
    return math.cos(half) * np.eye(2, dtype=complex) - (
        1j * math.sin(half)
    ) * pauli_dot(n)


def inner_product(a: Spinor, b: Spinor) -> complex:
    """Hermitian inner product <a|b>.  The labels must match."""
    if a.label is not b.label:
        raise ValueError(
            f"sphere labels differ: {a.label.value} vs {b.label.value}"
        )
    return complex(a.a_n.conjugate() * b.a_n + a.a_s.conjugate() * b.a_s)


def apply(u: np.ndarray, s: Spinor) -> Spinor:
    """Apply a 2x2 unitary to a spinor.

    Renormalizes only to absorb rounding; if the output norm strays from 1
    by more than the default tolerance the operator was not unitary and a
    ValueError is raised.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 operator, got shape {u.shape}")
    w = u @ s.vec
    norm = float(np.linalg.norm(w))
    if abs(norm - 1.0) > tolerances.DEFAULT_ATOL:
        raise ValueError(
            f"operator does not preserve the norm (|U psi| = {norm!r}); not unitary"
        )
    return Spinor(w[0] / norm, w[1] / norm, s.label)
