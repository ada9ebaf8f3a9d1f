"""Effective collinear integrand and its partial derivatives.

    f_eff = f + sum_j chi_j df/dchi_j

Derivatives follow by the chain rule; an even variable picks up a factor 1 and
each odd variable in the differentiation adds one to the prefactor
(first order: 1 / 2, second order: 1 / 2 / 3).
"""
import numpy as np

from mcxc.functionals import CollinearEval


def _require(c, order):
    if c.order < order:
        raise ValueError(f"need collinear partials up to order {order}, have {c.order}")


def _chi_full(c, chi):
    """Odd-variable values scattered into the full variable axis (even slots zero)."""
    mask = c.varset.is_chi
    chi = np.asarray(chi, dtype=float)
    if chi.shape[-1] != mask.sum():
        raise ValueError(f"expected {mask.sum()} odd values, got {chi.shape[-1]}")
    full = np.zeros(chi.shape[:-1] + (len(mask),))
    full[..., mask] = chi
    return full


def effective_integrand(c, chi):
    _require(c, 1)
    x = _chi_full(c, chi)
    return c.f + np.einsum("...j,...j->...", x, c.d1)


def effective_first_derivs(c, chi):
    """Gradient of f_eff over all variables, in ``c.varset`` order."""
    _require(c, 2)
    x = _chi_full(c, chi)
    pref = 1.0 + c.varset.is_chi
    return pref * c.d1 + np.einsum("...ij,...j->...i", c.d2, x)


def effective_second_derivs(c, chi):
    """Hessian of f_eff; prefactors 1 (even-even), 2 (mixed), 3 (odd-odd)."""
    _require(c, 3)
    x = _chi_full(c, chi)
    odd = c.varset.is_chi.astype(float)
    pref = 1.0 + odd[:, None] + odd[None, :]
    return pref * c.d2 + np.einsum("...ikj,...j->...ik", c.d3, x)


def effective_eval(c, chi, order=1):
    """Bundle f_eff and its partials (up to ``order``) into a CollinearEval."""
    out = CollinearEval(c.varset, effective_integrand(c, chi))
    if order >= 1:
        out.d1 = effective_first_derivs(c, chi)
    if order >= 2:
        out.d2 = effective_second_derivs(c, chi)
    return out
