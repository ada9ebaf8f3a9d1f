"""Backend dispatch for the per-point angular accumulation.

The compiled extension handles the built-in local functionals; anything else
(combinations, user subclasses) and every call with ``MCXC_BACKEND=python``
goes through the numpy implementation.  ``MCXC_THREADS`` caps the number of
threads used by the compiled loop.
"""
import os

from mcxc import _kernels_py

try:
    from mcxc import _kernels as _compiled
except ImportError:
    _compiled = None

BACKENDS = ("compiled", "python")


def available_backends():
    return BACKENDS if _compiled is not None else ("python",)


def default_backend():
    choice = os.environ.get("MCXC_BACKEND", "").strip().lower()
    if choice and choice not in BACKENDS:
        raise ValueError(f"MCXC_BACKEND must be one of {BACKENDS}, got {choice!r}")
    if choice == "python" or _compiled is None:
        return "python"
    return "compiled"


def num_threads():
    raw = os.environ.get("MCXC_THREADS", "").strip()
    if not raw:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"MCXC_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"MCXC_THREADS must be a positive integer, got {raw!r}")
    return n


def mc_local(func, field, grid, channels=True, backend=None):
    """Energy density and potential channels of a local functional.

    Returns ``eps`` (P,), even channels (P, 6) indexed like the first six
    slots and odd channels (P, 6, 3) for the six odd slots.
    """
    backend = backend or default_backend()
    if backend not in available_backends():
        raise ValueError(f"backend {backend!r} is not available")
    args = (field.n, field.grad_n, field.lap_n, field.tau, field.m, field.grad_m,
            field.lap_m, field.u, grid.points, grid.weights)
    if backend == "compiled" and func.kernel_code is not None:
        return _compiled.mc_local(func.kernel_code, *args, channels=channels,
                                  nthreads=num_threads())
    return _kernels_py.mc_local(func, *args, channels=channels)
