import pytest

from toric_nash.polyhedra import cone_from_rays
from toric_nash.report import catalog_entry, random_cones


def make_cone(*rays):
    return cone_from_rays(rays, len(rays[0]))


@pytest.fixture
def example_cone():
    return make_cone((1, 0, 0), (0, 1, 0), (1, 1, 2))


@pytest.fixture
def a3_cone():
    return make_cone((1, 0), (1, 4))


@pytest.fixture
def odp_cone():
    return catalog_entry('odp').to_cone()


@pytest.fixture
def third_cone():
    return catalog_entry('third-111').to_cone()


@pytest.fixture
def regular3_cone():
    return catalog_entry('regular-3').to_cone()


@pytest.fixture(scope='session')
def small_corpus():
    """A fast mixed-rank corpus for property tests."""
    return (
        random_cones(24, ranks=[2], max_coord=8, seed=11)
        + random_cones(16, ranks=[3], max_coord=4, max_rays=4, seed=12, max_det=20)
        + random_cones(6, ranks=[4], max_coord=2, max_rays=5, seed=13, max_det=12)
    )


@pytest.fixture(scope='session')
def acceptance_corpus():
    """Two hundred cones of ranks 2-4 with ray coordinates up to 8."""
    return random_cones(200, ranks=[2, 3, 4], max_coord=8, max_rays=5, seed=42)


@pytest.fixture(scope='session')
def rank2_corpus():
    return random_cones(120, ranks=[2], max_coord=8, seed=21)


@pytest.fixture(scope='session')
def rank3_corpus():
    """Rank-3 cones whose simplicial pieces have |det| at most 20."""
    return random_cones(50, ranks=[3], max_coord=4, max_rays=4, seed=23, max_det=20)


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: corpus-sized runs, deselect with -m "not slow"')
