"""Multi-collinear energies, potential channels, B^xc, torques and reference oracles.

Energy reductions over points use ``math.fsum`` (exactly rounded, so the
result does not depend on point order or on how the per-point work was split
across threads).  The per-point direction sums run in a fixed order inside the
kernels.
"""
from dataclasses import dataclass
import math

import numpy as np

from mcxc.angular import gauss_legendre_nodes
from mcxc.effective import effective_first_derivs, effective_integrand, effective_second_derivs
from mcxc.fields import ProjectedPoint, project, sample_points
from mcxc.functionals import SLOTS, get_functional
from mcxc import kernels

# |m| below which the locally collinear reference treats the point as unpolarized
LC_MAGNITUDE_FLOOR = 1e-12
# points per block when derivatives need (P, D, k, k) temporaries
_BLOCK = 1 << 14

# extras needed to differentiate each slot analytically along space
_SLOT_GRADIENT_SOURCE = {
    "n": None, "grad_n": "hess_n", "lap_n": "grad_lap_n", "tau": "grad_tau",
    "s": None, "grad_s": "hess_m", "lap_s": "grad_lap_m", "u_s": "grad_u",
}


def _slot_family(slot):
    name = SLOTS[slot]
    return name[:-2] if name.startswith("grad_") else name


@dataclass
class XCResult:
    """Energy, per-point potential channels and (optionally) field and torque.

    Channel layout: ``v_grad_n[p, a]`` pairs with d_a n; ``grad_channel[p, a, b]``
    is the average of (df_eff/d grad_a s) e_b; ``m_channel``, ``lap_channel`` and
    ``u_channel`` are the averages of (df_eff/dx) e for x = s, lap s, u_s.
    """
    energy: float
    energy_density: np.ndarray
    v_n: np.ndarray
    v_grad_n: np.ndarray
    v_lap_n: np.ndarray
    tau_channel: np.ndarray
    m_channel: np.ndarray
    grad_channel: np.ndarray
    lap_channel: np.ndarray
    u_channel: np.ndarray
    bxc: np.ndarray = None
    torque: np.ndarray = None
    global_torque: np.ndarray = None


def integrate(w, values):
    """sum_p w_p values_p with exact rounding; trailing axes are kept."""
    prod = np.asarray(w, dtype=float).reshape((-1,) + (1,) * (np.ndim(values) - 1)) * values
    if prod.ndim == 1:
        return math.fsum(prod)
    flat = prod.reshape(len(prod), -1)
    return np.array([math.fsum(flat[:, j]) for j in range(flat.shape[1])]).reshape(prod.shape[1:])


def _local(fid):
    func = get_functional(fid)
    if not func.local:
        raise ValueError(f"{func.name} is non-local; use mc_energy_nonlocal")
    return func


def _nonlocal(fid):
    func = get_functional(fid)
    if func.local:
        raise ValueError(f"{func.name} is local; use mc_energy")
    return func


def mc_energy_density(field, fid, ang, backend=None):
    eps, _, _ = kernels.mc_local(_local(fid), field, ang, channels=False, backend=backend)
    return eps


def mc_energy(field, fid, ang, backend=None):
    return integrate(field.w, mc_energy_density(field, fid, ang, backend))


def mc_energy_nonlocal(field, fid, ang):
    """Directional average of the effective non-local energy of s = m.e."""
    func = _nonlocal(fid)
    s = np.einsum("pb,db->pd", field.m, ang.points)
    per_dir = func.effective_energy(s, field.w)
    return math.fsum(ang.weights * per_dir)


def mc_potential_channels(field, fid, ang, backend=None):
    func = _local(fid)
    eps, vk, vo = kernels.mc_local(func, field, ang, channels=True, backend=backend)
    return XCResult(
        energy=integrate(field.w, eps), energy_density=eps,
        v_n=vk[:, 0], v_grad_n=vk[:, 1:4], v_lap_n=vk[:, 4], tau_channel=vk[:, 5],
        m_channel=vo[:, 0], grad_channel=vo[:, 1:4], lap_channel=vo[:, 4], u_channel=vo[:, 5],
    )


# --------------------------------------------------------------------------
# B^xc

def _uses(func, family):
    return any(_slot_family(s) == family for s in func.varset.slots())


def _analytic_requirements(func):
    need = {_SLOT_GRADIENT_SOURCE[_slot_family(s)] for s in func.varset.slots()}
    return sorted(k for k in need if k)


def _slot_gradients(sub, E, slots):
    """d_a of every projected variable: shape (P, D, k, 3)."""
    P, D = len(sub.n), len(E)
    out = np.empty((P, D, len(slots), 3))
    for i, slot in enumerate(slots):
        name = SLOTS[slot]
        if name == "n":
            g = np.broadcast_to(sub.grad_n[:, None, :], (P, D, 3))
        elif name.startswith("grad_n_"):
            g = np.broadcast_to(sub.extras["hess_n"][:, None, :, slot - 1], (P, D, 3))
        elif name == "lap_n":
            g = np.broadcast_to(sub.extras["grad_lap_n"][:, None, :], (P, D, 3))
        elif name == "tau":
            g = np.broadcast_to(sub.extras["grad_tau"][:, None, :], (P, D, 3))
        elif name == "s":
            g = np.einsum("pab,db->pda", sub.grad_m, E)
        elif name.startswith("grad_s_"):
            g = np.einsum("pab,db->pda", sub.extras["hess_m"][:, :, slot - 7, :], E)
        elif name == "lap_s":
            g = np.einsum("pab,db->pda", sub.extras["grad_lap_m"], E)
        else:
            g = np.einsum("pab,db->pda", sub.extras["grad_u"], E)
        out[:, :, i, :] = g
    return out


def _analytic_divergence(field, func, ang):
    """div of grad_channel by the chain rule through f_eff's Hessian."""
    slots = func.varset.slots()
    gs = [(i, slot - 7) for i, slot in enumerate(slots) if SLOTS[slot].startswith("grad_s_")]
    is_chi = func.varset.is_chi
    E, wts = ang.points, ang.weights
    out = np.zeros((len(field), 3))
    for lo in range(0, len(field), max(1, _BLOCK // len(wts))):
        sub = field.subset(slice(lo, lo + max(1, _BLOCK // len(wts))))
        x = project(sub, E).as_slots()[..., slots]
        hess = effective_second_derivs(func.evaluate(x, 3), x[..., is_chi])
        dx = _slot_gradients(sub, E, slots)
        t = sum(np.einsum("pdj,pdj->pd", hess[..., i, :], dx[..., a]) for i, a in gs)
        out[lo:lo + len(sub)] = np.einsum("pd,de->pe", t * wts, E)
    return out


def _diff_matrix(nodes):
    """Spectral first-derivative matrix on arbitrary distinct nodes."""
    x = np.asarray(nodes, dtype=float)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    lam = 1.0 / np.prod(diff, axis=1)
    Dm = (lam[None, :] / lam[:, None]) / diff
    np.fill_diagonal(Dm, 0.0)
    np.fill_diagonal(Dm, -Dm.sum(axis=1))
    return Dm


def spatial_derivative(field, values, axis):
    """d/dx_axis of per-point ``values`` via the tensor grid's interpolant."""
    if field.axes is None:
        raise ValueError("spectral derivatives need a tensor-grid field")
    vals = np.asarray(values, dtype=float)
    shape = field.shape
    grid = vals.reshape(shape + vals.shape[1:])
    Dm = _diff_matrix(field.axes[axis])
    moved = np.moveaxis(grid, axis, 0)
    res = np.einsum("ij,j...->i...", Dm, moved)
    return np.moveaxis(res, 0, axis).reshape(vals.shape)


def _spectral_divergence(field, G):
    return sum(spatial_derivative(field, G[:, a, :], a) for a in range(3))


def _spectral_laplacian(field, L):
    return sum(spatial_derivative(field, spatial_derivative(field, L, a), a) for a in range(3))


def resolve_bxc_method(field, fid, method="auto"):
    func = _local(fid)
    if method not in ("auto", "analytic", "spectral"):
        raise ValueError(f"unknown B^xc method {method!r}")
    analytic_ok = field.has(*_analytic_requirements(func))
    if method == "analytic" and not analytic_ok:
        raise ValueError(f"analytic B^xc needs {_analytic_requirements(func)} on the field")
    if method == "auto":
        method = "analytic" if analytic_ok else "spectral"
    if method == "spectral" and field.axes is None and (_uses(func, "grad_s") or _uses(func, "lap_s")):
        raise ValueError("field has neither second derivatives nor a tensor grid")
    if _uses(func, "lap_s") and field.axes is None:
        raise ValueError("the Laplacian channel needs a tensor-grid field")
    return method


def bxc(field, fid, ang, method="auto", channels=None, backend=None):
    """B^xc = -(m channel) + div(grad channel) - lap(Laplacian channel)."""
    func = _local(fid)
    method = resolve_bxc_method(field, func, method)
    ch = channels or mc_potential_channels(field, func, ang, backend)
    B = -ch.m_channel.copy()
    if _uses(func, "grad_s"):
        if method == "analytic":
            B += _analytic_divergence(field, func, ang)
        else:
            B += _spectral_divergence(field, ch.grad_channel)
    if _uses(func, "lap_s"):
        B -= _spectral_laplacian(field, ch.lap_channel)
    return B


def local_torque(field, bxc_field):
    B = np.asarray(bxc_field, dtype=float)
    if B.shape != field.m.shape:
        raise ValueError(f"B^xc has shape {B.shape}, field has {field.m.shape}")
    return np.cross(field.m, B)


def global_torque(field, torque_field):
    return integrate(field.w, np.asarray(torque_field, dtype=float))


def torque_tolerance(field, torque_field, bxc_field, rel=1e-10, floor=1e-14):
    """Bound on |global torque|: rel * sum w|torque| plus a roundoff floor on sum w|m||B|."""
    t = np.linalg.norm(torque_field, axis=1)
    mb = np.linalg.norm(field.m, axis=1) * np.linalg.norm(bxc_field, axis=1)
    return rel * integrate(field.w, t) + floor * integrate(field.w, mb)


def solve(field, fid, ang, method="auto", backend=None):
    """Channels, B^xc, local and global torque in one result."""
    ch = mc_potential_channels(field, fid, ang, backend)
    ch.bxc = bxc(field, fid, ang, method, channels=ch)
    ch.torque = local_torque(field, ch.bxc)
    ch.global_torque = global_torque(field, ch.torque)
    return ch


def boundary_torque_flux(scene, box, fid, ang, n_per_axis):
    """Surface integral of m x (normal . grad channel) over the faces of ``box``.

    For functionals whose odd variables are s and grad s only, this equals
    the volume integral of m x B^xc; it is the part that a finite box keeps.
    """
    func = _local(fid)
    odd = {_slot_family(s) for s in func.varset.slots() if s >= 6}
    if not odd <= {"s", "grad_s"}:
        raise ValueError("boundary flux is defined for functionals of s and grad s only")
    t, wt = gauss_legendre_nodes(n_per_axis)
    parts = []
    for axis in range(3):
        others = [a for a in range(3) if a != axis]
        (lo0, hi0), (lo1, hi1) = box[others[0]], box[others[1]]
        h0, h1 = 0.5 * (hi0 - lo0), 0.5 * (hi1 - lo1)
        u0, u1 = np.meshgrid(lo0 + h0 * (t + 1), lo1 + h1 * (t + 1), indexing="ij")
        w2 = np.outer(h0 * wt, h1 * wt).ravel()
        for sign, coord in ((-1.0, box[axis][0]), (1.0, box[axis][1])):
            r = np.empty((w2.size, 3))
            r[:, axis] = coord
            r[:, others[0]] = u0.ravel()
            r[:, others[1]] = u1.ravel()
            face = sample_points(scene, r, w2)
            ch = mc_potential_channels(face, func, ang)
            flux = sign * ch.grad_channel[:, axis, :]
            parts.append(integrate(w2, np.cross(face.m, flux)))
    return np.sum(parts, axis=0)


# --------------------------------------------------------------------------
# references and oracles

def collinear_energy(field, fid, axis=(0.0, 0.0, 1.0)):
    """Plain collinear functional evaluated on s = m.axis."""
    func = get_functional(fid)
    e = np.asarray(axis, dtype=float)
    e = e / np.linalg.norm(e)
    if not func.local:
        return float(func.energy(field.m @ e, field.w))
    x = project(field, e).as_slots()[..., func.varset.slots()]
    return integrate(field.w, func.evaluate(x, 0).f)


def spin_independent_energy(field, fid):
    """Collinear energy with every odd variable set to zero."""
    func = _local(fid)
    x = project(field, (0.0, 0.0, 1.0)).as_slots()[..., func.varset.slots()]
    x[..., func.varset.is_chi] = 0.0
    return integrate(field.w, func.evaluate(x, 0).f)


def closed_form_mc(field, fid):
    """Analytic directional averages of the effective toy integrands."""
    func = get_functional(fid)
    name = func.name
    w, m = field.w, field.m
    if name == "toy1_gga":
        return integrate(w, np.einsum("pab,pab->p", field.grad_m, field.grad_m))
    if name == "toy2_gga":
        return integrate(w, np.einsum("pb,pa,pab->p", m, field.grad_n, field.grad_m))
    if name == "toy3_mgga":
        return integrate(w, np.einsum("pb,pb->p", m, field.lap_m))
    if name == "toy6_mgga_u":
        return integrate(w, np.einsum("pb,pb->p", m, field.u))
    if name == "toy4_nonlocal":
        M = integrate(w, m)
        return float(M @ M)
    if name == "toy5_nonlocal":
        T = integrate(w, np.einsum("pa,pb->pab", m, m))
        return float((2.0 * np.sum(T * T) + np.trace(T) ** 2) / 3.0)
    raise ValueError(f"no closed form for {name}; use locally_collinear_energy")


LC_FUNCTIONALS = ("slater_lsda", "toy1_gga", "toy2_gga", "toy4_nonlocal", "toy5_nonlocal")


def _magnitude_and_gradient(field):
    mag = np.linalg.norm(field.m, axis=1)
    safe = mag >= LC_MAGNITUDE_FLOOR
    grad = np.zeros_like(field.grad_n)
    num = np.einsum("pb,pab->pa", field.m[safe], field.grad_m[safe])
    grad[safe] = num / mag[safe, None]
    return mag, grad


def locally_collinear_energy(field, fid):
    """Collinear functional evaluated at s = |m| (with grad |m| from m . grad m / |m|)."""
    func = get_functional(fid)
    if func.name not in LC_FUNCTIONALS:
        raise ValueError(f"no locally collinear reference for {func.name}")
    mag, grad = _magnitude_and_gradient(field)
    if not func.local:
        return float(func.energy(mag, field.w))
    zeros = np.zeros_like(mag)
    p = ProjectedPoint(field.n, field.grad_n, field.lap_n, field.tau, mag, grad, zeros, zeros)
    x = p.as_slots()[..., func.varset.slots()]
    return integrate(field.w, func.evaluate(x, 0).f)


def lsda_t_integral_oracle(n, m, fid="slater_lsda", n_t=64):
    """int_0^1 f_eff(n, m t) dt by n_t-point Gauss-Legendre on [0, 1]."""
    if n_t < 1:
        raise ValueError("n_t must be >= 1")
    func = _local(fid)
    if func.varset.names != ("n", "s"):
        raise ValueError("the t-integral oracle applies to functionals of (n, s)")
    x, wx = gauss_legendre_nodes(n_t)
    t, wt = 0.5 * (x + 1.0), 0.5 * wx
    n = np.asarray(n, dtype=float)
    m = np.asarray(m, dtype=float)
    nn, s = np.broadcast_arrays(n[..., None], m[..., None] * t)
    c = func.evaluate(np.stack([nn, s], axis=-1), 1)
    feff = effective_integrand(c, s[..., None])
    return np.sum(feff * wt, axis=-1)


def effective_energy_forms(field, fid, direction):
    """Effective energy along one direction, in pointwise and divergence form.

    Pointwise: int f + sum_j chi_j df/dchi_j.  Divergence form replaces the
    grad s . df/dgrad s term by -s div(df/dgrad s); the two agree when the
    boundary flux vanishes.
    """
    func = _local(fid)
    slots = func.varset.slots()
    families = {_slot_family(s) for s in slots if s >= 6}
    if not families <= {"s", "grad_s"}:
        raise ValueError("divergence form is implemented for functionals of s and grad s")
    missing = [k for k in _analytic_requirements(func) if not field.has(k)]
    if missing:
        raise ValueError(f"field lacks {missing}")
    e = np.asarray(direction, dtype=float)
    e = e / np.linalg.norm(e)
    E = e[None, :]
    x = project(field, E).as_slots()[..., slots]
    c = func.evaluate(x, 2)
    pointwise = effective_integrand(c, x[..., func.varset.is_chi])[:, 0]
    dx = _slot_gradients(field, E, slots)
    s_val = np.einsum("pb,b->p", field.m, e)
    dense = c.f[:, 0].copy()
    for i, slot in enumerate(slots):
        name = SLOTS[slot]
        if name == "s":
            dense += s_val * c.d1[:, 0, i]
        elif name.startswith("grad_s_"):
            a = slot - 7
            div = np.einsum("pj,pj->p", c.d2[:, 0, i, :], dx[:, 0, :, a])
            dense -= s_val * div
    return integrate(field.w, pointwise), integrate(field.w, dense)
