"""SU(2): conjugacy-class geometry, Wigner matrices, and class-operator quadrature.

Conventions (all fixed by the Euler parametrization used here):

* group elements are [[a, b], [-conj(b), conj(a)]] with |a|^2 + |b|^2 = 1;
* g(t) = exp(i t/2 sigma3), h(theta) = exp(i theta/2 sigma1), and a general
  element is g(phi) h(theta) g(psi), so a = cos(theta/2) e^{i(phi+psi)/2} and
  b = i sin(theta/2) e^{i(phi-psi)/2};
* spins are stored as doubled integers j2 = 2j; the weight basis of spin j
  is ordered m = j, j-1, ..., -j; for integer spins the m = 0 column (index
  j2 // 2) is the vector fixed by the diagonal circle subgroup;
* the conjugacy class of g(psi), 0 < psi < 2pi, is the sphere of directions
  n(phi, theta) = (sin(theta)sin(phi), sin(theta)cos(phi), cos(theta)), and
  its invariant measure of total mass 1 is (1/4pi) sin(theta) dphi dtheta.

Spin-j matrices are evaluated through the factorized Euler form
D(g(phi,theta,psi)) = E(phi - pi/2) d(theta) E(psi + pi/2), where d is the
standard little-d matrix (explicit factorial/Jacobi-polynomial sum) and
E(t) = diag(e^{i m t}); the -pi/2 shifts account for the middle rotation
being generated by sigma1 rather than sigma2.  The construction is validated
by homomorphism/unitarity properties, not against external tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

__all__ = [
    "PAULI",
    "SU2Element",
    "WignerD",
    "SphereQuadrature",
    "class_operator_quadrature",
    "closed_form_eigenvalue",
    "weighted_class_operator_su2",
    "ad_map",
    "haar_random",
    "su2_haar_quadrature",
    "fixed_column_index",
]

PAULI = np.array(
    [
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, -1.0j], [1.0j, 0.0]],
        [[1.0, 0.0], [0.0, -1.0]],
    ],
    dtype=complex,
)


class SU2Element:
    """An SU(2) element stored by its Cayley-Klein parameters (a, b)."""

    __slots__ = ("a", "b")

    def __init__(self, a: complex, b: complex, renormalize: bool = True):
        if renormalize:
            norm = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
            if not 0.5 < norm < 2.0:
                raise ValueError("(a, b) is too far from the unit sphere")
            a, b = a / norm, b / norm
        self.a = complex(a)
        self.b = complex(b)

    @classmethod
    def identity(cls) -> "SU2Element":
        return cls(1.0, 0.0, renormalize=False)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "SU2Element":
        return cls(m[0, 0], m[0, 1])

    @classmethod
    def from_euler(cls, phi: float, theta: float, psi: float) -> "SU2Element":
        a = np.cos(theta / 2) * np.exp(0.5j * (phi + psi))
        b = 1j * np.sin(theta / 2) * np.exp(0.5j * (phi - psi))
        return cls(a, b)

    @classmethod
    def exp(cls, vec: np.ndarray) -> "SU2Element":
        """exp(i x . sigma) for a real 3-vector x."""
        vec = np.asarray(vec, dtype=float)
        r = float(np.linalg.norm(vec))
        if r < 1e-300:
            return cls.identity()
        unit = vec / r
        a = np.cos(r) + 1j * np.sin(r) * unit[2]
        b = 1j * np.sin(r) * (unit[0] - 1j * unit[1])
        return cls(a, b)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.a, self.b], [-np.conj(self.b), np.conj(self.a)]], dtype=complex
        )

    def __mul__(self, other: "SU2Element") -> "SU2Element":
        a = self.a * other.a + self.b * (-np.conj(other.b))
        b = self.a * other.b + self.b * np.conj(other.a)
        return SU2Element(a, b)

    def inverse(self) -> "SU2Element":
        return SU2Element(np.conj(self.a), -self.b, renormalize=False)

    def euler_angles(self) -> tuple[float, float, float]:
        """Angles (phi, theta, psi) with phi in [0, 2pi), theta in [0, pi],
        psi in [-2pi, 2pi), composing back to this element."""
        theta = 2.0 * np.arctan2(abs(self.b), abs(self.a))
        if abs(self.b) < 1e-15:
            phi, psi = 0.0, 2.0 * np.angle(self.a)
        elif abs(self.a) < 1e-15:
            psi, phi = 0.0, 2.0 * (np.angle(self.b) - np.pi / 2)
        else:
            s = 2.0 * np.angle(self.a)               # phi + psi, mod 4pi
            d = 2.0 * (np.angle(self.b) - np.pi / 2)  # phi - psi, mod 4pi
            phi, psi = (s + d) / 2.0, (s - d) / 2.0
        phi_mod = float(np.mod(phi, 2 * np.pi))
        psi = psi + (phi - phi_mod)                   # keep phi+psi, phi-psi intact mod 4pi
        psi = float(np.mod(psi + 2 * np.pi, 4 * np.pi) - 2 * np.pi)
        return phi_mod, float(theta), psi

    def __repr__(self) -> str:
        return f"SU2Element(a={self.a:.6f}, b={self.b:.6f})"


def haar_random(rng: np.random.Generator, count: int) -> list[SU2Element]:
    """Haar-uniform samples (uniform on the unit 3-sphere)."""
    raw = rng.standard_normal((count, 4))
    raw /= np.linalg.norm(raw, axis=1, keepdims=True)
    return [SU2Element(x[0] + 1j * x[1], x[2] + 1j * x[3], renormalize=False) for x in raw]


# ---------------------------------------------------------------------------
# Wigner matrices
# ---------------------------------------------------------------------------


def _check_spin(j2: int) -> int:
    j2 = int(j2)
    if j2 < 0:
        raise ValueError("doubled spin j2 must be >= 0")
    return j2


@lru_cache(maxsize=None)
def _little_d_terms(j2: int):
    """Precomputed factorial data for the explicit little-d sum at spin j2/2."""
    dim = j2 + 1
    m2 = np.arange(j2, -j2 - 2, -2)
    terms = []
    for r, mp2 in enumerate(m2):
        for c, mm2 in enumerate(m2):
            jp_m = (j2 + mm2) // 2
            jm_m = (j2 - mm2) // 2
            jp_mp = (j2 + mp2) // 2
            jm_mp = (j2 - mp2) // 2
            pref = np.sqrt(
                float(factorial(jp_m) * factorial(jm_m) * factorial(jp_mp) * factorial(jm_mp))
            )
            k_min = max(0, (mm2 - mp2) // 2)
            k_max = min(jp_m, jm_mp)
            entry = []
            for k in range(k_min, k_max + 1):
                sign = (-1) ** (k - (mm2 - mp2) // 2)
                denom = (
                    factorial(jp_m - k)
                    * factorial(k)
                    * factorial(jm_mp - k)
                    * factorial(k - (mm2 - mp2) // 2)
                )
                cos_pow = j2 - 2 * k + (mm2 - mp2) // 2
                sin_pow = 2 * k - (mm2 - mp2) // 2
                entry.append((sign * pref / denom, cos_pow, sin_pow))
            terms.append((r, c, entry))
    return dim, terms


class WignerD:
    """The spin-(j2/2) unitary irreducible representation of SU(2)."""

    def __init__(self, j2: int):
        self.j2 = _check_spin(j2)
        self.dim = self.j2 + 1
        self.m2 = np.arange(self.j2, -self.j2 - 2, -2)  # doubled weights, descending

    def weight_phases(self, t: float) -> np.ndarray:
        """Diagonal of E(t) = exp(i t J3) = diag(e^{i m t})."""
        return np.exp(0.5j * self.m2 * t)

    def little_d(self, theta) -> np.ndarray:
        """Standard d^j(theta) = exp(-i theta J2); vectorized over theta."""
        theta = np.asarray(theta, dtype=float)
        c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
        dim, terms = _little_d_terms(self.j2)
        out = np.zeros(theta.shape + (dim, dim))
        for r, col, entry in terms:
            acc = np.zeros(theta.shape)
            for coeff, cp, sp in entry:
                acc = acc + coeff * c**cp * s**sp
            out[..., r, col] = acc
        return out

    def euler(self, phi: float, theta: float, psi: float) -> np.ndarray:
        """D(g(phi) h(theta) g(psi)) via the shifted Euler factorization."""
        left = self.weight_phases(phi - np.pi / 2)
        right = self.weight_phases(psi + np.pi / 2)
        return left[:, None] * self.little_d(theta) * right[None, :]

    def __call__(self, g: SU2Element) -> np.ndarray:
        return self.euler(*g.euler_angles())

    def character(self, psi: float) -> float:
        """Character of g(psi): sin((2j+1) psi/2) / sin(psi/2)."""
        half = psi / 2.0
        if abs(np.sin(half)) < 1e-12:
            sign = np.cos((self.j2 + 1) * half) / np.cos(half) if abs(np.cos(half)) > 1e-12 else 1.0
            return float(self.dim * np.sign(sign) if self.j2 else 1.0)
        return float(np.sin((self.j2 + 1) * half) / np.sin(half))


def fixed_column_index(j2: int) -> int:
    """Index of the circle-fixed (m = 0) column for an integer spin."""
    j2 = _check_spin(j2)
    if j2 % 2:
        raise ValueError("half-integer spins have no circle-fixed vector")
    return j2 // 2


# ---------------------------------------------------------------------------
# quadrature over the class sphere and over the whole group
# ---------------------------------------------------------------------------


@dataclass
class SphereQuadrature:
    """Product rule on the class sphere: Gauss-Legendre in cos(theta), uniform phi.

    Weights are normalized so the constant 1 integrates to 1; the theta rule
    is exact for polynomials of degree <= 2 n_theta - 1 in cos(theta).
    """

    n_theta: int
    n_phi: int
    theta: np.ndarray
    theta_weights: np.ndarray
    phi: np.ndarray

    @classmethod
    def build(cls, n_theta: int = 16, n_phi: int = 32) -> "SphereQuadrature":
        if n_theta < 2 or n_phi < 2:
            raise ValueError("node counts must be >= 2")
        x, w = np.polynomial.legendre.leggauss(n_theta)
        theta = np.arccos(x)
        phi = 2 * np.pi * np.arange(n_phi) / n_phi
        return cls(n_theta=n_theta, n_phi=n_phi, theta=theta, theta_weights=w / 2.0, phi=phi)

    @property
    def total_weight(self) -> float:
        return float(np.sum(self.theta_weights))


def _check_psi(psi: float) -> float:
    psi = float(psi)
    if not 0.0 < psi < 2.0 * np.pi:
        raise ValueError("psi must lie strictly between 0 and 2*pi (central classes excluded)")
    return psi


def closed_form_eigenvalue(j2: int, psi: float) -> float:
    """sin((2j+1) psi/2) / ((2j+1) sin(psi/2)); the class-operator eigenvalue."""
    j2 = _check_spin(j2)
    psi = _check_psi(psi)
    return float(np.sin((j2 + 1) * psi / 2.0) / ((j2 + 1) * np.sin(psi / 2.0)))


def class_operator_quadrature(j2: int, psi: float, quad: SphereQuadrature) -> np.ndarray:
    """Quadrature of the class-operator integral in the spin-(j2/2) representation.

    Integrates D(g(phi) h(theta) g(psi) h(theta)^-1 g(phi)^-1) over the class
    sphere.  The uniform phi average multiplies entry (m', m) by the discrete
    phase mean of e^{i(m'-m)(phi - pi/2)}, which keeps the aliasing behaviour
    of the finite phi rule while letting the theta sum run vectorized.
    """
    j2 = _check_spin(j2)
    psi = _check_psi(psi)
    rep = WignerD(j2)
    d_stack = rep.little_d(quad.theta)                      # (n_theta, d, d)
    middle = rep.weight_phases(psi)
    core = np.einsum(
        "t,tij,j,tkj->ik", quad.theta_weights, d_stack, middle, d_stack
    )
    shifted = quad.phi - np.pi / 2.0
    m = rep.m2[:, None] / 2.0 - rep.m2[None, :] / 2.0       # integer differences
    phase_mean = np.exp(1j * m[..., None] * shifted).mean(axis=-1)
    return phase_mean * core


def weighted_class_operator_su2(
    j2: int,
    psi: float,
    weight_terms,
    quad: SphereQuadrature,
) -> np.ndarray:
    """Weighted class operator with a band-limited weight on the class sphere.

    ``weight_terms`` is an iterable of (l2, i, coeff): the weight function is
    sum coeff * conj(D^{l}_{i, m=0}) evaluated at the coset representative
    g(phi) h(theta).  Only integer l (even l2) is admissible; half-integer
    spins have no circle-fixed vector so no such weight exists.
    """
    j2 = _check_spin(j2)
    psi = _check_psi(psi)
    terms = [(int(l2), int(i), complex(c)) for (l2, i, c) in weight_terms]
    for l2, i, _ in terms:
        if l2 % 2:
            raise ValueError(
                "half-integer weight spin rejected: no circle-fixed vector exists"
            )
        if not 0 <= i <= l2:
            raise ValueError(f"weight row index {i} out of range for l2={l2}")
    rep = WignerD(j2)
    d_stack = rep.little_d(quad.theta)                      # (T, d, d)
    middle = np.diag(rep.weight_phases(psi))
    conj_core = np.einsum("tij,jk,tlk->til", d_stack, middle, d_stack)  # d E(psi) d^T
    phase_l = np.exp(
        0.5j * np.multiply.outer(quad.phi - np.pi / 2.0, rep.m2)
    )                                                       # (P, d): e^{im(phi-pi/2)}
    # weight values at each node
    values = np.zeros((quad.n_phi, quad.n_theta), dtype=complex)
    for l2, i, coeff in terms:
        wrep = WignerD(l2)
        col = fixed_column_index(l2)
        wd = wrep.little_d(quad.theta)                      # (T, dl, dl)
        lphase = np.exp(0.5j * np.multiply.outer(quad.phi - np.pi / 2.0, wrep.m2))
        right = wrep.weight_phases(np.pi / 2.0)[col]
        # D^{l}(g(phi)h(theta))_{i, col} = e^{i m_i (phi-pi/2)} d_{i,col}(theta) * right
        values += coeff * np.conj(lphase[:, [i]] * wd[None, :, i, col] * right)
    # assemble sum over nodes: E(phi-pi/2) core E(phi-pi/2)^H weighted
    out = np.einsum(
        "pt,t,pi,til,pl->il",
        values,
        quad.theta_weights,
        phase_l,
        conj_core,
        np.conj(phase_l),
    )
    return out / quad.n_phi


def ad_map(g: SU2Element) -> np.ndarray:
    """Adjoint action on the Lie algebra in the basis {i sigma_alpha}: SO(3) image."""
    m = g.matrix
    minv = g.inverse().matrix
    out = np.empty((3, 3))
    for alpha in range(3):
        conj = m @ PAULI[alpha] @ minv
        for beta in range(3):
            out[beta, alpha] = 0.5 * np.trace(PAULI[beta] @ conj).real
    return out


def su2_haar_quadrature(
    n_phi: int, n_theta: int, n_psi: int
) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for the normalized Haar integral over all of SU(2).

    Returns (angles, weights) with angles of shape (N, 3) holding Euler
    triples (phi, theta, psi) and weights summing to 1.  Exact for integrands
    that are band-limited below the node counts (matrix elements of small
    spins and their products).
    """
    if min(n_phi, n_theta, n_psi) < 2:
        raise ValueError("node counts must be >= 2")
    x, w = np.polynomial.legendre.leggauss(n_theta)
    theta = np.arccos(x)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    psi = -2 * np.pi + 4 * np.pi * np.arange(n_psi) / n_psi
    angles = np.array(
        [[p, t, q] for p in phi for t in theta for q in psi], dtype=float
    )
    weights = np.array(
        [wt / 2.0 / n_phi / n_psi for _ in phi for wt in w for _ in psi], dtype=float
    )
    return angles, weights
