from mcxc.angular.grids import (
    LEBEDEV_ORDERS,
    AngularGrid,
    Direction,
    Scheme,
    exact_moment,
    fibonacci_grid,
    gauss_legendre_grid,
    gauss_legendre_nodes,
    lebedev_grid,
    lebedev_sizes,
    make_grid,
    moment,
)

__all__ = [
    "LEBEDEV_ORDERS", "AngularGrid", "Direction", "Scheme", "exact_moment",
    "fibonacci_grid", "gauss_legendre_grid", "gauss_legendre_nodes",
    "lebedev_grid", "lebedev_sizes", "make_grid", "moment",
]
