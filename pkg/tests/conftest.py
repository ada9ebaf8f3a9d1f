import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from mcxc.fields import make_scene, sample

settings.register_profile("mcxc", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("mcxc")

CANTED = {"d1": (1.0, 0.0, 0.0), "d2": (0.0, 0.6, 0.8)}


@pytest.fixture(scope="session")
def spiral_unit():
    return sample(make_scene("spin_spiral", {"q": 1.0, "m0": 1.0}), [(0, 1)] * 3, 8)


@pytest.fixture(scope="session")
def quadratic():
    return sample(make_scene("quadratic_mx"), [(-1, 1)] * 3, 6)


@pytest.fixture(scope="session")
def blob():
    return sample(make_scene("gaussian_blob"), [(-2.5, 2.5)] * 3, 12)


@pytest.fixture(scope="session")
def blob_fine():
    """Well resolved and decayed at the boundary (spectral derivatives, surface terms)."""
    return sample(make_scene("gaussian_blob"), [(-3, 3)] * 3, 44)


@pytest.fixture(scope="session")
def two_region():
    return sample(make_scene("two_region"), [(-2, 2), (-1.5, 1.5), (-1.5, 1.5)], 14)


@pytest.fixture(scope="session")
def two_region_canted():
    return sample(make_scene("two_region", CANTED), [(-2, 2), (-1.5, 1.5), (-1.5, 1.5)], 14)


@pytest.fixture(scope="session")
def closed_shell():
    return sample(make_scene("closed_shell"), [(-2, 2)] * 3, 10)


@pytest.fixture(scope="session")
def uniform():
    return sample(make_scene("uniform_collinear"), [(0, 1)] * 3, 4)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
