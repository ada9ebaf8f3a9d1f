"""Finite-difference oracles shared by the unit and acceptance tests."""
import numpy as np

from mcxc.effective import effective_first_derivs, effective_integrand, effective_second_derivs

FD_REL = 1e-6
FD_STEP = 1e-5


def random_inputs(func, rng, count=100):
    """Inputs inside each functional's smooth domain."""
    k = len(func.varset)
    x = rng.uniform(-1.5, 1.5, (count, k))
    if func.varset.names == ("n", "s"):
        n = rng.uniform(0.2, 2.0, count)
        x[:, 0] = n
        x[:, 1] = rng.uniform(-0.9, 0.9, count) * n
    return x


def _fd(fn, x, i):
    h = FD_STEP * np.maximum(np.abs(x[:, i]), 1.0)
    xp, xm = x.copy(), x.copy()
    xp[:, i] += h
    xm[:, i] -= h
    shape = (-1,) + (1,) * (np.ndim(fn(x)) - 1)
    return (fn(xp) - fn(xm)) / (2 * h).reshape(shape)


def worst_mismatch(fn, dfn, x):
    """max over inputs/variables of |fd - analytic| / max(|analytic|, 1)."""
    an = dfn(x)
    worst = 0.0
    for i in range(x.shape[1]):
        fd = _fd(fn, x, i)
        ref = an[..., i]
        worst = max(worst, float(np.max(np.abs(fd - ref) / np.maximum(np.abs(ref), 1.0))))
    return worst


def collinear_mismatches(func, x):
    """Worst FD mismatch of d1, d2, d3."""
    parts = [lambda y: func.evaluate(y, 0).f,
             lambda y: func.evaluate(y, 1).d1,
             lambda y: func.evaluate(y, 2).d2,
             lambda y: func.evaluate(y, 3).d3]
    return [worst_mismatch(parts[o], parts[o + 1], x) for o in range(3)]


def effective_mismatches(func, x):
    """Worst FD mismatch of the effective first and second derivatives."""
    chi = func.varset.is_chi

    def f(y):
        return effective_integrand(func.evaluate(y, 1), y[:, chi])

    def d1(y):
        return effective_first_derivs(func.evaluate(y, 2), y[:, chi])

    def d2(y):
        return effective_second_derivs(func.evaluate(y, 3), y[:, chi])

    return [worst_mismatch(f, d1, x), worst_mismatch(d1, d2, x)]
