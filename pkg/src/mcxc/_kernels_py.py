"""Pure-numpy counterpart of the compiled angular accumulation kernel.

Works for any local ``Functional`` (including user combinations); used when
the extension is not built or ``MCXC_BACKEND=python`` is set.
"""
import numpy as np

from mcxc.effective import effective_first_derivs, effective_integrand

# (points x directions) evaluated per block
BLOCK = 1 << 16


def _slot_values(slot, sl, arrays, dirs):
    """One projected slot for every (point, direction) pair in ``sl``."""
    n, grad_n, lap_n, tau, m, grad_m, lap_m, u = arrays
    if 1 <= slot <= 3:
        v = grad_n[sl, slot - 1]
    elif 7 <= slot <= 9:
        v = grad_m[sl, slot - 7]
    else:
        v = {0: n, 4: lap_n, 5: tau, 6: m, 10: lap_m, 11: u}[slot][sl]
    if slot < 6:
        return np.broadcast_to(v[:, None], (len(v), len(dirs)))
    return np.einsum("pb,db->pd", v, dirs)


def mc_local(func, n, grad_n, lap_n, tau, m, grad_m, lap_m, u, dirs, wts,
             channels=True, nthreads=1):
    """Energy density (P,), even channels (P, 6) and odd channels (P, 6, 3)."""
    dirs = np.asarray(dirs, dtype=float)
    wts = np.asarray(wts, dtype=float)
    P, D = len(n), len(wts)
    slots = func.varset.slots()
    is_chi = func.varset.is_chi
    eps = np.empty(P)
    vk = np.zeros((P, 6))
    vo = np.zeros((P, 6, 3))
    step = max(1, BLOCK // D)
    for lo in range(0, P, step):
        sl = slice(lo, lo + step)
        arrays = (n, grad_n, lap_n, tau, m, grad_m, lap_m, u)
        x = np.stack([_slot_values(slot, sl, arrays, dirs) for slot in slots], axis=-1)
        c = func.evaluate(x, 2 if channels else 1)
        chi = x[..., is_chi]
        eps[sl] = np.sum(effective_integrand(c, chi) * wts, axis=-1)
        if not channels:
            continue
        dfe = effective_first_derivs(c, chi) * wts[:, None]
        for i, slot in enumerate(slots):
            if slot < 6:
                vk[sl, slot] = np.sum(dfe[..., i], axis=-1)
            else:
                vo[sl, slot - 6] = np.einsum("pd,de->pe", dfe[..., i], dirs)
    return eps, vk, vo
