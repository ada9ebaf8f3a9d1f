"""Direction sets with normalized weights for averages over the unit sphere.

Three schemes are provided: Lebedev (octahedrally symmetric, exact up to a
given polynomial degree), a Gauss-Legendre x uniform-azimuth tensor rule, and
the Fibonacci lattice (equal weights, no exactness guarantee).
"""
from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
import math

import numpy as np

from mcxc.angular._lebedev_table import ORBITS

LEBEDEV_ORDERS = tuple(sorted(ORBITS))


class Scheme(str, Enum):
    LEBEDEV = "lebedev"
    GAUSS_LEGENDRE = "gauss_legendre"
    FIBONACCI = "fibonacci"


@dataclass(frozen=True)
class Direction:
    """Unit vector ``e = (sin t cos p, sin t sin p, cos t)``."""
    e: tuple
    theta: float
    phi: float

    @classmethod
    def from_vector(cls, e):
        x, y, z = (float(v) for v in e)
        theta = math.acos(max(-1.0, min(1.0, z)))
        return cls((x, y, z), theta, math.atan2(y, x))

    @classmethod
    def from_angles(cls, theta, phi):
        st = math.sin(theta)
        return cls((st * math.cos(phi), st * math.sin(phi), math.cos(theta)),
                   float(theta), float(phi))


@dataclass(frozen=True, eq=False)
class AngularGrid:
    """Directions ``points`` (D, 3) and weights ``weights`` (D,) summing to one.

    ``exact_degree`` is the largest total degree of polynomials in the
    direction components averaged without error (None when not guaranteed).
    """
    points: np.ndarray
    weights: np.ndarray
    scheme: Scheme
    exact_degree: int = None

    def __post_init__(self):
        pts = np.ascontiguousarray(self.points, dtype=float)
        wts = np.ascontiguousarray(self.weights, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3 or len(pts) != len(wts):
            raise ValueError("points must be (D, 3) with one weight per point")
        if np.any(wts < 0):
            raise ValueError("angular weights must be nonnegative")
        pts.flags.writeable = False
        wts.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)

    def __len__(self):
        return len(self.weights)

    @property
    def directions(self):
        return [Direction.from_vector(e) for e in self.points]

    def average(self, values):
        """Weighted average over the last axis of ``values``."""
        return np.asarray(values) @ self.weights

    def __repr__(self):
        return (f"AngularGrid(scheme={self.scheme.value}, n={len(self)}, "
                f"exact_degree={self.exact_degree})")


def _expand_orbit(rep):
    pts = []
    seen = set()
    for perm in permutations(rep):
        for signs in product((1.0, -1.0), repeat=3):
            p = tuple(s * v for s, v in zip(signs, perm))
            # -0.0 and 0.0 collapse to one point
            key = tuple(v + 0.0 for v in p)
            if key not in seen:
                seen.add(key)
                pts.append(key)
    return pts


def lebedev_grid(order):
    """Lebedev rule of algebraic ``order`` (6 to 1202 points)."""
    if order not in ORBITS:
        raise ValueError(f"unsupported Lebedev order {order!r}; "
                         f"supported orders: {', '.join(map(str, LEBEDEV_ORDERS))}")
    pts, wts = [], []
    for rep, w in ORBITS[order]:
        orbit = _expand_orbit(rep)
        pts.extend(orbit)
        wts.extend([w] * len(orbit))
    wts = np.array(wts)
    return AngularGrid(np.array(pts), wts / wts.sum(), Scheme.LEBEDEV, order)


def lebedev_sizes():
    """Mapping order -> number of points for every supported Lebedev rule."""
    return {o: sum(len(_expand_orbit(rep)) for rep, _ in ORBITS[o]) for o in LEBEDEV_ORDERS}


def gauss_legendre_nodes(n, tol=1e-15, maxiter=100):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].

    Roots of P_n by Newton iteration from Chebyshev-like guesses; weights from
    ``2 / ((1 - x^2) P_n'(x)^2)``.
    """
    if n < 1:
        raise ValueError("need at least one Gauss-Legendre node")
    k = np.arange(1, n + 1)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))
    for _ in range(maxiter):
        p0, p1 = np.ones_like(x), x.copy()
        for j in range(2, n + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        if n == 1:
            p0, p1 = np.ones_like(x), x
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < tol:
            break
    # one last derivative at the converged nodes
    p0, p1 = np.ones_like(x), x.copy()
    for j in range(2, n + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    if n == 1:
        p0 = np.ones_like(x)
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    x, w = x[order], w[order]
    # enforce exact mirror symmetry of the rule
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    return x, w


def gauss_legendre_grid(n_theta, n_phi):
    """Tensor rule: Gauss-Legendre in ``cos(theta)`` times uniform azimuths."""
    if n_theta < 1 or n_phi < 1:
        raise ValueError("n_theta and n_phi must be positive")
    t, wt = gauss_legendre_nodes(n_theta)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    st = np.sqrt(1.0 - t * t)
    pts = np.empty((n_theta, n_phi, 3))
    pts[..., 0] = st[:, None] * np.cos(phi)
    pts[..., 1] = st[:, None] * np.sin(phi)
    pts[..., 2] = t[:, None]
    w = np.repeat(wt / wt.sum(), n_phi) / n_phi
    return AngularGrid(pts.reshape(-1, 3), w, Scheme.GAUSS_LEGENDRE,
                       min(2 * n_theta - 1, n_phi - 1))


GOLDEN_CONJUGATE = (math.sqrt(5.0) - 1.0) / 2.0


def fibonacci_grid(n):
    """Fibonacci lattice with offset heights ``t_k = 1 - (2k+1)/n``."""
    if n < 1:
        raise ValueError("Fibonacci lattice needs n >= 1")
    k = np.arange(n)
    t = 1.0 - (2.0 * k + 1.0) / n
    phi = 2.0 * np.pi * ((k * GOLDEN_CONJUGATE) % 1.0)
    st = np.sqrt(1.0 - t * t)
    pts = np.stack([st * np.cos(phi), st * np.sin(phi), t], axis=1)
    return AngularGrid(pts, np.full(n, 1.0 / n), Scheme.FIBONACCI, None)


_SIZE_KEYS = {Scheme.LEBEDEV: ("order",), Scheme.GAUSS_LEGENDRE: ("n_theta", "n_phi"),
              Scheme.FIBONACCI: ("n",)}


def make_grid(scheme, **size):
    """Build a grid from a scheme name and its size parameters."""
    scheme = Scheme(scheme)
    needed = _SIZE_KEYS[scheme]
    missing = [k for k in needed if k not in size]
    if missing:
        raise ValueError(f"{scheme.value} grid needs size parameter(s) {missing}")
    if scheme is Scheme.LEBEDEV:
        return lebedev_grid(int(size["order"]))
    if scheme is Scheme.GAUSS_LEGENDRE:
        return gauss_legendre_grid(int(size["n_theta"]), int(size["n_phi"]))
    return fibonacci_grid(int(size["n"]))


def moment(grid, exponents):
    """Quadrature of ``e_x^a e_y^b e_z^c`` over the grid."""
    a, b, c = exponents
    e = grid.points
    return float(np.dot(grid.weights, e[:, 0] ** a * e[:, 1] ** b * e[:, 2] ** c))


def exact_moment(exponents):
    """Analytic average of ``e_x^a e_y^b e_z^c`` over the unit sphere."""
    a, b, c = exponents
    if a % 2 or b % 2 or c % 2:
        return 0.0

    def dfact(k):
        return math.prod(range(k, 0, -2)) if k > 0 else 1

    return dfact(a - 1) * dfact(b - 1) * dfact(c - 1) / dfact(a + b + c + 1)
