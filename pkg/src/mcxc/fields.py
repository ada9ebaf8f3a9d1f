"""Analytic density/magnetization scenes, spatial sampling and spin rotations.

A scene is a set of closed-form fields n, m, tau, u on R^3.  Derivatives are
taken symbolically once per scene type and compiled with ``sympy.lambdify``;
``sample`` evaluates them on a tensor Gauss-Legendre grid.
"""
from dataclasses import dataclass, field, replace
from functools import lru_cache
import math

import numpy as np
import sympy as sp

from mcxc.angular import AngularGrid, Direction, gauss_legendre_nodes

X, Y, Z = sp.symbols("x y z", real=True)
COORDS = (X, Y, Z)

# Arrays whose last axis is a spin index; rotate_spin acts on it.
SPIN_ARRAYS = ("m", "grad_m", "lap_m", "u", "hess_m", "grad_lap_m", "grad_u")
EXTRA_ARRAYS = ("hess_n", "grad_lap_n", "grad_tau", "hess_m", "grad_lap_m", "grad_u")


# --------------------------------------------------------------------------
# scene catalog

def _gauss(center, sigma):
    r2 = sum((c - c0) ** 2 for c, c0 in zip(COORDS, center))
    return sp.exp(-r2 / (2 * sigma ** 2))


def _norm(v):
    return sp.sqrt(sum(c ** 2 for c in v))


def _uniform_collinear(p):
    m = list(p["m0"])
    return p["n0"], m, p["tau0"], list(p["u0"])


def _two_region(p):
    g1 = _gauss(p["c1"], p["sigma"])
    g2 = _gauss(p["c2"], p["sigma"])
    m = [a * g1 + b * g2 for a, b in zip(p["d1"], p["d2"])]
    n = p["n0"] + p["n_scale"] * (_norm(p["d1"]) * g1 + _norm(p["d2"]) * g2)
    return n, m, n, [sp.Rational(1, 2) * c for c in m]


def _quadratic_mx(p):
    m = [X ** 2, sp.Integer(0), sp.Integer(1)]
    return p["n0"], m, p["tau0"], [sp.Rational(1, 2) * c for c in m]


def _spin_spiral(p):
    q, m0 = p["q"], p["m0"]
    m = [m0 * sp.cos(q * Z), m0 * sp.sin(q * Z), sp.Integer(0)]
    return p["n0"], m, p["tau0"], [sp.Rational(1, 2) * c for c in m]


def _linear_bound(vec, mat, rho2):
    # |vec + mat.r/sigma| <= |vec| + |mat|_F (1 + r^2/sigma^2) / 2
    return _norm(vec) + _norm(mat) * (1 + rho2) / 2


def _gaussian_blob(p):
    sigma = p["sigma"]
    g = _gauss((0, 0, 0), sigma)
    rho = [c / sigma for c in COORDS]
    rho2 = sum(c ** 2 for c in rho)
    A, B = p["A"], p["B"]
    m = [g * (p["c"][i] + sum(A[3 * i + j] * rho[j] for j in range(3))) for i in range(3)]
    u = [g * (p["b"][i] + sum(B[3 * i + j] * rho[j] for j in range(3))) for i in range(3)]
    n = p["n_bg"] + g * (p["n0"] + _linear_bound(p["c"], A, rho2))
    tau = n + g * _linear_bound(p["b"], B, rho2)
    return n, m, tau, u


def _closed_shell(p):
    n = p["n0"] + p["amp"] * _gauss((0, 0, 0), p["sigma"])
    zero = [sp.Integer(0)] * 3
    return n, zero, n, zero


REQUIRED = object()

SCENES = {
    "uniform_collinear": (_uniform_collinear, {
        "n0": 1.0, "m0": (0.0, 0.0, 0.5), "tau0": 1.0, "u0": (0.0, 0.0, 0.25)}),
    "two_region": (_two_region, {
        "c1": (-1.0, 0.0, 0.0), "c2": (1.0, 0.0, 0.0), "sigma": 0.35,
        "d1": (0.0, 0.0, 1.0), "d2": (0.0, 0.0, -1.0), "n0": 0.1, "n_scale": 2.0}),
    "quadratic_mx": (_quadratic_mx, {"n0": 2.0, "tau0": 2.0}),
    "spin_spiral": (_spin_spiral, {"q": REQUIRED, "m0": REQUIRED, "n0": 1.0, "tau0": 1.0}),
    "gaussian_blob": (_gaussian_blob, {
        "sigma": 0.5, "n0": 0.5, "n_bg": 0.0,
        "c": (0.2, -0.1, 0.3),
        "A": (0.3, 0.1, 0.0, -0.2, 0.4, 0.1, 0.1, 0.0, 0.5),
        "b": (0.1, 0.05, -0.1),
        "B": (0.0, 0.2, 0.0, -0.1, 0.0, 0.0, 0.0, 0.1, 0.2)}),
    "closed_shell": (_closed_shell, {"n0": 0.5, "amp": 1.0, "sigma": 0.5}),
}


def _param_symbols(defaults):
    syms, flat = {}, []
    for key, val in defaults.items():
        if isinstance(val, tuple):
            vec = sp.symbols(f"{key}_0:{len(val)}", real=True)
            syms[key] = list(vec)
            flat.extend(vec)
        else:
            s = sp.Symbol(key, real=True)
            syms[key] = s
            flat.append(s)
    return syms, flat


@lru_cache(maxsize=None)
def _compiled(name):
    builder, defaults = SCENES[name]
    syms, flat = _param_symbols(defaults)
    n, m, tau, u = builder(syms)
    n, tau = sp.sympify(n), sp.sympify(tau)
    m = [sp.sympify(c) for c in m]
    u = [sp.sympify(c) for c in u]

    def grad(f):
        return [sp.diff(f, c) for c in COORDS]

    def lap(f):
        return sum(sp.diff(f, c, 2) for c in COORDS)

    grad_n = grad(n)
    lap_n = lap(n)
    grad_m = [[sp.diff(m[b], a) for b in range(3)] for a in COORDS]
    lap_m = [lap(c) for c in m]
    exprs = {
        "n": [n],
        "grad_n": grad_n,
        "lap_n": [lap_n],
        "tau": [tau],
        "m": m,
        "grad_m": sum(grad_m, []),
        "lap_m": lap_m,
        "u": u,
        "hess_n": [sp.diff(g, c) for c in COORDS for g in grad_n],
        "grad_lap_n": grad(lap_n),
        "grad_tau": grad(tau),
        "hess_m": [sp.diff(grad_m[g][b], a) for a in COORDS for g in range(3) for b in range(3)],
        "grad_lap_m": [sp.diff(lap_m[b], a) for a in COORDS for b in range(3)],
        "grad_u": [sp.diff(u[b], a) for a in COORDS for b in range(3)],
    }
    keys = list(exprs)
    sizes = [len(exprs[k]) for k in keys]
    flat_exprs = sum((exprs[k] for k in keys), [])
    fn = sp.lambdify((X, Y, Z, *flat), flat_exprs, modules="numpy", cse=True)
    return fn, keys, sizes


SHAPES = {
    "n": (), "grad_n": (3,), "lap_n": (), "tau": (), "m": (3,), "grad_m": (3, 3),
    "lap_m": (3,), "u": (3,), "hess_n": (3, 3), "grad_lap_n": (3,), "grad_tau": (3,),
    "hess_m": (3, 3, 3), "grad_lap_m": (3, 3), "grad_u": (3, 3),
}


@dataclass(frozen=True)
class Scene:
    """Closed-form fields of a named scene with concrete parameters."""
    name: str
    params: dict

    def _flat_params(self):
        out = []
        for key, val in self.params.items():
            out.extend(val if isinstance(val, tuple) else (val,))
        return out

    def evaluate(self, r):
        """All fields and derivatives at points ``r`` (P, 3), as a dict of arrays.

        Layout: ``grad_m[p, a, b] = d_a m_b``, ``hess_m[p, a, g, b] = d_a d_g m_b``,
        ``grad_lap_m[p, a, b] = d_a lap m_b``, ``grad_u[p, a, b] = d_a u_b``.
        """
        r = np.atleast_2d(np.asarray(r, dtype=float))
        fn, keys, sizes = _compiled(self.name)
        vals = fn(r[:, 0], r[:, 1], r[:, 2], *self._flat_params())
        P = len(r)
        out, i = {}, 0
        for key, size in zip(keys, sizes):
            block = [np.broadcast_to(np.asarray(v, dtype=float), (P,)) for v in vals[i:i + size]]
            i += size
            arr = np.stack(block, axis=-1).reshape((P,) + SHAPES[key])
            out[key] = np.ascontiguousarray(arr)
        return out


def make_scene(name, params=None):
    """Instantiate a catalog scene; unknown names or parameters raise ValueError."""
    if name not in SCENES:
        raise ValueError(f"unknown scene {name!r}; known scenes: {', '.join(SCENES)}")
    params = dict(params or {})
    defaults = SCENES[name][1]
    unknown = set(params) - set(defaults)
    if unknown:
        raise ValueError(f"scene {name!r} has no parameter(s) {sorted(unknown)}")
    resolved = {}
    for key, default in defaults.items():
        val = params.get(key, default)
        if val is REQUIRED:
            raise ValueError(f"scene {name!r} requires parameter {key!r}")
        if isinstance(default, tuple) or (default is REQUIRED and np.ndim(val)):
            val = tuple(float(v) for v in np.ravel(val))
            if isinstance(default, tuple) and len(val) != len(default):
                raise ValueError(f"parameter {key!r} of scene {name!r} needs "
                                 f"{len(default)} components, got {len(val)}")
        else:
            val = float(val)
        resolved[key] = val
    return Scene(name, resolved)


# --------------------------------------------------------------------------
# sampled fields

@dataclass(frozen=True)
class FieldPoint:
    r: np.ndarray
    n: float
    grad_n: np.ndarray
    lap_n: float
    tau: float
    m: np.ndarray
    grad_m: np.ndarray
    lap_m: np.ndarray
    u: np.ndarray
    w: float


@dataclass(frozen=True, eq=False)
class GridField:
    """Fields sampled at P points with quadrature weights ``w``.

    ``axes`` holds the 1-D node arrays when the points form an ``ij``-ordered
    tensor grid; the optional ``extras`` carry higher derivatives (Hessians,
    gradients of Laplacians) used for analytic divergences.
    """
    r: np.ndarray
    w: np.ndarray
    n: np.ndarray
    grad_n: np.ndarray
    lap_n: np.ndarray
    tau: np.ndarray
    m: np.ndarray
    grad_m: np.ndarray
    lap_m: np.ndarray
    u: np.ndarray
    box: tuple = None
    scene_id: str = None
    axes: tuple = None
    extras: dict = field(default_factory=dict)
    scene: Scene = None

    def __len__(self):
        return len(self.w)

    @property
    def volume(self):
        return float(np.prod([hi - lo for lo, hi in self.box])) if self.box else None

    @property
    def shape(self):
        return tuple(len(a) for a in self.axes) if self.axes else None

    def has(self, *names):
        return all(k in self.extras for k in names)

    def point(self, i):
        return FieldPoint(self.r[i], self.n[i], self.grad_n[i], self.lap_n[i], self.tau[i],
                          self.m[i], self.grad_m[i], self.lap_m[i], self.u[i], self.w[i])

    def subset(self, idx):
        """Rows ``idx`` as a new field (drops the tensor structure)."""
        ex = {k: v[idx] for k, v in self.extras.items()}
        return replace(self, r=self.r[idx], w=self.w[idx], n=self.n[idx],
                       grad_n=self.grad_n[idx], lap_n=self.lap_n[idx], tau=self.tau[idx],
                       m=self.m[idx], grad_m=self.grad_m[idx], lap_m=self.lap_m[idx],
                       u=self.u[idx], axes=None, extras=ex)


def _check_box(box):
    box = tuple((float(lo), float(hi)) for lo, hi in box)
    if len(box) != 3:
        raise ValueError("box needs three (lo, hi) extents")
    for lo, hi in box:
        if not (np.isfinite(lo) and np.isfinite(hi)) or hi <= lo:
            raise ValueError(f"degenerate box extent ({lo}, {hi})")
    return box


def from_values(values, r, w, **meta):
    core = {k: values[k] for k in ("n", "grad_n", "lap_n", "tau", "m", "grad_m", "lap_m", "u")}
    extras = {k: values[k] for k in EXTRA_ARRAYS if k in values}
    return GridField(r=r, w=w, extras=extras, **core, **meta)


def sample(scene, box, n_per_axis):
    """Evaluate ``scene`` on a tensor Gauss-Legendre grid over ``box``."""
    if n_per_axis < 1:
        raise ValueError("n_per_axis must be >= 1")
    box = _check_box(box)
    t, wt = gauss_legendre_nodes(n_per_axis)
    axes, waxes = [], []
    for lo, hi in box:
        half = 0.5 * (hi - lo)
        axes.append(lo + half * (t + 1.0))
        waxes.append(half * wt)
    grid = np.meshgrid(*axes, indexing="ij")
    r = np.stack([g.ravel() for g in grid], axis=1)
    w = np.einsum("i,j,k->ijk", *waxes).ravel()
    vals = scene.evaluate(r)
    return from_values(vals, r, w, box=box, scene_id=scene.name,
                       axes=tuple(axes), scene=scene)


def sample_points(scene, r, w):
    """Evaluate ``scene`` at arbitrary points with given weights."""
    r = np.atleast_2d(np.asarray(r, dtype=float))
    return from_values(scene.evaluate(r), r, np.asarray(w, dtype=float),
                       scene_id=scene.name, scene=scene)


# --------------------------------------------------------------------------
# projection onto a spin direction

@dataclass(frozen=True)
class ProjectedPoint:
    """Even channels copied, odd channels dotted with the direction."""
    n: np.ndarray
    grad_n: np.ndarray
    lap_n: np.ndarray
    tau: np.ndarray
    s: np.ndarray
    grad_s: np.ndarray
    lap_s: np.ndarray
    u_s: np.ndarray

    @property
    def m_w(self):
        return self.s

    def as_slots(self):
        """Stack into the 12 scalar slots (see ``functionals.SLOTS``)."""
        n = np.asarray(self.n, dtype=float)
        cols = [n, *np.moveaxis(np.asarray(self.grad_n, dtype=float), -1, 0),
                np.asarray(self.lap_n, dtype=float), np.asarray(self.tau, dtype=float),
                np.asarray(self.s, dtype=float),
                *np.moveaxis(np.asarray(self.grad_s, dtype=float), -1, 0),
                np.asarray(self.lap_s, dtype=float), np.asarray(self.u_s, dtype=float)]
        shape = np.broadcast_shapes(*(np.shape(c) for c in cols))
        return np.stack([np.broadcast_to(c, shape) for c in cols], axis=-1)


def _directions(d):
    if isinstance(d, AngularGrid):
        return d.points, False
    if isinstance(d, Direction):
        return np.asarray([d.e], dtype=float), True
    e = np.asarray(d, dtype=float)
    return (e[None, :], True) if e.ndim == 1 else (e, False)


def project(p, d):
    """Project a point or a whole field onto direction(s) ``d``.

    With a field of P points and D directions the odd channels have shape
    (P, D) (plus a trailing 3 for ``grad_s``) and the even ones are broadcast
    to match.
    """
    E, single = _directions(d)
    m = np.asarray(p.m, dtype=float)
    # einsum rather than matmul keeps results independent of BLAS threading
    s = np.einsum("...b,db->...d", m, E)
    grad_s = np.einsum("...ab,db->...da", np.asarray(p.grad_m, dtype=float), E)
    lap_s = np.einsum("...b,db->...d", np.asarray(p.lap_m, dtype=float), E)
    u_s = np.einsum("...b,db->...d", np.asarray(p.u, dtype=float), E)
    n = np.asarray(p.n, dtype=float)[..., None]
    grad_n = np.asarray(p.grad_n, dtype=float)[..., None, :]
    lap_n = np.asarray(p.lap_n, dtype=float)[..., None]
    tau = np.asarray(p.tau, dtype=float)[..., None]
    shape = s.shape
    scalars = [np.broadcast_to(n, shape), np.broadcast_to(lap_n, shape),
               np.broadcast_to(tau, shape), s, lap_s, u_s]
    vectors = [np.broadcast_to(grad_n, shape + (3,)), grad_s]
    if single:
        scalars = [v[..., 0] for v in scalars]
        vectors = [v[..., 0, :] for v in vectors]
    n, lap_n, tau, s, lap_s, u_s = scalars
    grad_n, grad_s = vectors
    return ProjectedPoint(n, grad_n, lap_n, tau, s, grad_s, lap_s, u_s)


# --------------------------------------------------------------------------
# spin rotations

@dataclass(frozen=True, eq=False)
class SpinRotation:
    R: np.ndarray

    def __post_init__(self):
        R = np.array(self.R, dtype=float)
        if R.shape != (3, 3):
            raise ValueError("spin rotation must be a 3x3 matrix")
        if np.abs(R.T @ R - np.eye(3)).max() > 1e-13 or abs(np.linalg.det(R) - 1.0) > 1e-13:
            raise ValueError("spin rotation must be orthogonal with det = +1")
        R.flags.writeable = False
        object.__setattr__(self, "R", R)

    def __matmul__(self, other):
        return SpinRotation(self.R @ other.R)

    @classmethod
    def identity(cls):
        return cls(np.eye(3))

    @classmethod
    def about_axis(cls, axis, angle):
        k = np.asarray(axis, dtype=float)
        k = k / np.linalg.norm(k)
        K = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
        R = np.eye(3) + math.sin(angle) * K + (1 - math.cos(angle)) * K @ K
        return cls(R)

    @classmethod
    def from_quaternion(cls, q):
        w, x, y, z = np.asarray(q, dtype=float) / np.linalg.norm(q)
        R = np.array([
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ])
        return cls(R)


def random_rotations(count, seed):
    """``count`` rotations from uniformly distributed unit quaternions."""
    rng = np.random.default_rng(seed)
    return [SpinRotation.from_quaternion(rng.standard_normal(4)) for _ in range(count)]


def octahedral_rotations():
    """The 24 proper rotations mapping the coordinate axes onto themselves."""
    out = []
    eye = np.eye(3)
    for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        for signs in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1),
                      (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1)):
            R = eye[list(perm)] * np.array(signs)[:, None]
            if np.linalg.det(R) > 0:
                out.append(SpinRotation(R))
    return out


def rotate_spin(f, rot):
    """Apply a global spin rotation to every spin-index array of ``f``."""
    if not isinstance(rot, SpinRotation):
        rot = SpinRotation(rot)
    R = rot.R

    def turn(v):
        return np.einsum("...b,cb->...c", v, R)

    core = {k: turn(getattr(f, k)) for k in ("m", "grad_m", "lap_m", "u")}
    extras = {k: (turn(v) if k in SPIN_ARRAYS else v) for k, v in f.extras.items()}
    return replace(f, extras=extras, **core)
