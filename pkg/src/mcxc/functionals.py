"""Collinear integrands f(kappa, chi) with analytic partials up to third order.

Variables are named scalar slots.  Time-reversal-even slots (``kappa``) are the
density and its derivatives plus tau; odd slots (``chi``) are the projected
spin density s = m.e, its gradient and Laplacian, and u_s = u.e.  Every
functional declares the subset it depends on; partials are returned in that
compact order.
"""
from dataclasses import dataclass
import math

import numpy as np

SLOTS = ("n", "grad_n_x", "grad_n_y", "grad_n_z", "lap_n", "tau",
         "s", "grad_s_x", "grad_s_y", "grad_s_z", "lap_s", "u_s")
KAPPA_SLOTS = SLOTS[:6]
CHI_SLOTS = SLOTS[6:]
SLOT_INDEX = {name: i for i, name in enumerate(SLOTS)}

C_X = 0.75 * (3.0 / math.pi) ** (1.0 / 3.0)


@dataclass(frozen=True)
class VariableSet:
    kappa: tuple = ()
    chi: tuple = ()

    def __post_init__(self):
        names = self.kappa + self.chi
        if not names:
            raise ValueError("a functional needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variables must be distinct")

    @property
    def names(self):
        return self.kappa + self.chi

    @property
    def is_chi(self):
        return np.array([False] * len(self.kappa) + [True] * len(self.chi))

    def __len__(self):
        return len(self.kappa) + len(self.chi)

    def index(self, name):
        return self.names.index(name)

    def slots(self):
        """Positions of the variables in ``SLOTS`` (local functionals only)."""
        return np.array([SLOT_INDEX[v] for v in self.names])

    def union(self, other):
        kappa = tuple(v for v in KAPPA_SLOTS if v in self.kappa or v in other.kappa)
        chi = tuple(v for v in CHI_SLOTS if v in self.chi or v in other.chi)
        extra_k = tuple(v for v in self.kappa + other.kappa if v not in KAPPA_SLOTS)
        extra_c = tuple(v for v in self.chi + other.chi if v not in CHI_SLOTS)
        return VariableSet(kappa + tuple(dict.fromkeys(extra_k)),
                           chi + tuple(dict.fromkeys(extra_c)))


@dataclass
class CollinearEval:
    """Value and partials of a collinear integrand at a batch of inputs.

    ``d1[..., i]``, ``d2[..., i, j]`` and ``d3[..., i, j, k]`` follow the order of
    ``varset.names``; higher orders are None unless requested.
    """
    varset: VariableSet
    f: np.ndarray
    d1: np.ndarray = None
    d2: np.ndarray = None
    d3: np.ndarray = None
    clamped: np.ndarray = None

    @property
    def order(self):
        return sum(d is not None for d in (self.d1, self.d2, self.d3))

    def partial(self, *names):
        idx = tuple(self.varset.index(v) for v in names)
        d = (self.f, self.d1, self.d2, self.d3)[len(idx)]
        if d is None:
            raise ValueError(f"order-{len(idx)} partials were not computed")
        return d[(Ellipsis,) + idx]


class Functional:
    """Local collinear integrand; subclasses implement ``_evaluate``."""
    name = None
    varset = None
    local = True
    kernel_code = None
    max_order = 3

    def evaluate(self, x, order=1):
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != len(self.varset):
            raise ValueError(f"{self.name} expects {len(self.varset)} variables, got {x.shape[-1]}")
        if not 0 <= order <= self.max_order:
            raise ValueError(f"{self.name}: derivative order {order} not available")
        return self._evaluate(x, order)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def _zeros(x, order):
    k = x.shape[-1]
    lead = x.shape[:-1]
    return [np.zeros(lead + (k,) * o) for o in range(1, order + 1)]


class SlaterLSDA(Functional):
    """f = -C_x [(n+s)^{4/3} + (n-s)^{4/3}], s clamped to [-n, n]."""
    name = "slater_lsda"
    varset = VariableSet(("n",), ("s",))
    kernel_code = 0

    def _evaluate(self, x, order):
        n = x[..., 0]
        s_raw = x[..., 1]
        s = np.clip(s_raw, -n, n)
        a, b = n + s, n - s
        ca, cb = np.cbrt(a), np.cbrt(b)
        out = CollinearEval(self.varset, -C_X * (a * ca + b * cb), clamped=np.abs(s_raw) > n)
        if order < 1:
            return out
        d1 = np.empty(x.shape)
        d1[..., 0] = -C_X * 4.0 / 3.0 * (ca + cb)
        d1[..., 1] = -C_X * 4.0 / 3.0 * (ca - cb)
        out.d1 = d1
        if order < 2:
            return out
        with np.errstate(divide="ignore"):
            ia, ib = 1.0 / (ca * ca), 1.0 / (cb * cb)
        plus = -C_X * 4.0 / 9.0 * (ia + ib)
        minus = -C_X * 4.0 / 9.0 * (ia - ib)
        out.d2 = np.stack([np.stack([plus, minus], -1), np.stack([minus, plus], -1)], -2)
        if order < 3:
            return out
        with np.errstate(divide="ignore", invalid="ignore"):
            ja, jb = ia / ca / ca / ca, ib / cb / cb / cb
        plus = C_X * 8.0 / 27.0 * (ja + jb)
        minus = C_X * 8.0 / 27.0 * (ja - jb)
        d3 = np.empty(x.shape[:-1] + (2, 2, 2))
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    d3[..., i, j, k] = minus if (i + j + k) % 2 else plus
        out.d3 = d3
        return out


class SpinGradientSquare(Functional):
    """f = grad s . grad s"""
    name = "toy1_gga"
    varset = VariableSet((), ("grad_s_x", "grad_s_y", "grad_s_z"))
    kernel_code = 1

    def _evaluate(self, x, order):
        out = CollinearEval(self.varset, np.einsum("...i,...i->...", x, x))
        ds = _zeros(x, order)
        if order >= 1:
            ds[0][:] = 2.0 * x
        if order >= 2:
            ds[1][..., [0, 1, 2], [0, 1, 2]] = 2.0
        out.d1, out.d2, out.d3 = (ds + [None] * 3)[:3]
        return out


class SpinDensityGradientCoupling(Functional):
    """f = s (grad n . grad s)"""
    name = "toy2_gga"
    varset = VariableSet(("grad_n_x", "grad_n_y", "grad_n_z"),
                         ("s", "grad_s_x", "grad_s_y", "grad_s_z"))
    kernel_code = 2

    def _evaluate(self, x, order):
        gn, s, gs = x[..., 0:3], x[..., 3], x[..., 4:7]
        dot = np.einsum("...i,...i->...", gn, gs)
        out = CollinearEval(self.varset, s * dot)
        ds = _zeros(x, order)
        if order >= 1:
            ds[0][..., 0:3] = s[..., None] * gs
            ds[0][..., 3] = dot
            ds[0][..., 4:7] = s[..., None] * gn
        if order >= 2:
            d2 = ds[1]
            for a in range(3):
                d2[..., a, 3] = d2[..., 3, a] = gs[..., a]
                d2[..., 3, 4 + a] = d2[..., 4 + a, 3] = gn[..., a]
                d2[..., a, 4 + a] = d2[..., 4 + a, a] = s
        if order >= 3:
            d3 = ds[2]
            for a in range(3):
                for i, j, k in ((a, 3, 4 + a), (a, 4 + a, 3), (3, a, 4 + a),
                                (3, 4 + a, a), (4 + a, a, 3), (4 + a, 3, a)):
                    d3[..., i, j, k] = 1.0
        out.d1, out.d2, out.d3 = (ds + [None] * 3)[:3]
        return out


class _Bilinear(Functional):
    """f = x0 * x1 for two odd variables."""

    def _evaluate(self, x, order):
        a, b = x[..., 0], x[..., 1]
        out = CollinearEval(self.varset, a * b)
        ds = _zeros(x, order)
        if order >= 1:
            ds[0][..., 0] = b
            ds[0][..., 1] = a
        if order >= 2:
            ds[1][..., 0, 1] = ds[1][..., 1, 0] = 1.0
        out.d1, out.d2, out.d3 = (ds + [None] * 3)[:3]
        return out


class SpinLaplacianCoupling(_Bilinear):
    """f = s lap s"""
    name = "toy3_mgga"
    varset = VariableSet((), ("s", "lap_s"))
    kernel_code = 3


class SpinKineticCoupling(_Bilinear):
    """f = s u_s"""
    name = "toy6_mgga_u"
    varset = VariableSet((), ("s", "u_s"))
    kernel_code = 4


class PairPower(Functional):
    """Point-pair integrand (s_1 s_2)^p of a non-local toy, as a local function."""

    def __init__(self, power):
        self.power = power
        self.name = f"pair_power_{power}"
        self.varset = VariableSet((), ("s_1", "s_2"))

    def _evaluate(self, x, order):
        p = self.power
        a, b = x[..., 0], x[..., 1]

        def mono(e1, e2):
            # d^e1/da^e1 d^e2/db^e2 of (a b)^p
            c = math.perm(p, e1) * math.perm(p, e2) if e1 <= p and e2 <= p else 0
            if c == 0:
                return np.zeros_like(a)
            return c * a ** (p - e1) * b ** (p - e2)

        out = CollinearEval(self.varset, mono(0, 0))
        for o in range(1, order + 1):
            d = np.empty(x.shape[:-1] + (2,) * o)
            for idx in np.ndindex(*(2,) * o):
                d[(Ellipsis,) + idx] = mono(idx.count(0), idx.count(1))
            setattr(out, f"d{o}", d)
        return out


class NonlocalFunctional:
    """E[s] = sum_ij w_i w_j (s_i s_j)^p over one spatial grid."""
    local = False

    def __init__(self, name, power):
        self.name = name
        self.power = power
        self.pair_integrand = PairPower(power)

    def energy(self, s, w):
        """Collinear energy; sums over axis 0 of ``s`` (extra axes are batches)."""
        s = np.asarray(s, dtype=float)
        w = np.asarray(w, dtype=float).reshape((-1,) + (1,) * (s.ndim - 1))
        moment = np.sum(w * s ** self.power, axis=0)
        return moment * moment

    def gradient(self, s, w):
        """dE/ds_i for every point i (same shape as ``s``)."""
        s = np.asarray(s, dtype=float)
        w = np.asarray(w, dtype=float).reshape((-1,) + (1,) * (s.ndim - 1))
        p = self.power
        moment = np.sum(w * s ** p, axis=0)
        return 2.0 * moment * p * w * s ** (p - 1)

    def response(self, s, w):
        """sum_i s_i dE/ds_i, the squeeze response of the energy."""
        s = np.asarray(s, dtype=float)
        return np.sum(s * self.gradient(s, w), axis=0)

    def effective_energy(self, s, w):
        return self.energy(s, w) + self.response(s, w)

    def __repr__(self):
        return f"<NonlocalFunctional {self.name}>"


class LinearCombination(Functional):
    """sum_k c_k f_k + constant."""
    kernel_code = None

    def __init__(self, terms, constant=0.0, name=None):
        self.terms = [(float(c), get_functional(f)) for c, f in terms]
        self.constant = float(constant)
        vs = self.terms[0][1].varset
        for _, f in self.terms[1:]:
            vs = vs.union(f.varset)
        self.varset = vs
        self.name = name or " + ".join(f"{c:g}*{f.name}" for c, f in self.terms)
        self.max_order = min(f.max_order for _, f in self.terms)

    def _evaluate(self, x, order):
        k = len(self.varset)
        lead = x.shape[:-1]
        out = CollinearEval(self.varset, np.full(lead, self.constant))
        acc = [np.zeros(lead + (k,) * o) for o in range(1, order + 1)]
        for c, f in self.terms:
            pos = [self.varset.index(v) for v in f.varset.names]
            part = f.evaluate(x[..., pos], order)
            out.f = out.f + c * part.f
            for o in range(1, order + 1):
                idx = np.ix_(*[pos] * o)
                acc[o - 1][(Ellipsis,) + idx] += c * getattr(part, f"d{o}")
        out.d1, out.d2, out.d3 = (acc + [None] * 3)[:3]
        return out


class SpinIndependent(Functional):
    """The n-only part of a functional: f(kappa, chi) -> f(kappa, 0)."""
    kernel_code = None

    def __init__(self, base):
        self.base = get_functional(base)
        self.varset = self.base.varset
        self.name = f"spin_independent({self.base.name})"
        self.max_order = self.base.max_order

    def _evaluate(self, x, order):
        mask = self.varset.is_chi
        x0 = np.where(mask, 0.0, x)
        out = self.base.evaluate(x0, order)
        for o in range(1, order + 1):
            d = getattr(out, f"d{o}").copy()
            for ax in range(o):
                sel = [slice(None)] * o
                sel[ax] = mask
                d[(Ellipsis,) + tuple(sel)] = 0.0
            setattr(out, f"d{o}", d)
        out.clamped = None
        return out


FUNCTIONALS = {
    "slater_lsda": SlaterLSDA(),
    "toy1_gga": SpinGradientSquare(),
    "toy2_gga": SpinDensityGradientCoupling(),
    "toy3_mgga": SpinLaplacianCoupling(),
    "toy6_mgga_u": SpinKineticCoupling(),
    "toy4_nonlocal": NonlocalFunctional("toy4_nonlocal", 1),
    "toy5_nonlocal": NonlocalFunctional("toy5_nonlocal", 2),
}
LOCAL_TOYS = ("toy1_gga", "toy2_gga", "toy3_mgga", "toy6_mgga_u")
NONLOCAL_TOYS = ("toy4_nonlocal", "toy5_nonlocal")


def get_functional(fid):
    if isinstance(fid, (Functional, NonlocalFunctional)):
        return fid
    try:
        return FUNCTIONALS[fid]
    except KeyError:
        raise ValueError(f"unknown functional {fid!r}; known: {', '.join(FUNCTIONALS)}") from None


def eval_collinear(fid, p, order=1):
    """Evaluate a local functional on a projected point (or batch of them)."""
    func = get_functional(fid)
    if not func.local:
        raise ValueError(f"{func.name} is non-local; use eval_nonlocal_collinear")
    x = p.as_slots()[..., func.varset.slots()]
    return func.evaluate(x, order)


def eval_nonlocal_collinear(fid, s_values):
    """Literal double sum sum_ij w_i w_j g(s_i, s_j) over (s_i, w_i) pairs."""
    func = get_functional(fid)
    if func.local:
        raise ValueError(f"{func.name} is local; use eval_collinear")
    s_values = list(s_values)
    if not s_values:
        raise ValueError("need at least one (s, w) pair")
    p = func.power
    total = 0.0
    for si, wi in s_values:
        for sj, wj in s_values:
            total += wi * wj * (si * sj) ** p
    return total
