import factory.random
import pytest
from hypothesis import HealthCheck
from hypothesis import settings as hypothesis_settings

from spchain.solver.fixtures import cmd_fixture

# the seeding fixture below is function scoped and reruns for every example
hypothesis_settings.register_profile(
    "spchain",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
hypothesis_settings.load_profile("spchain")


@pytest.fixture(autouse=True)
def seeded_random():
    factory.random.reseed_random("spchain")


@pytest.fixture
def fixture_file(tmp_path):
    """Writes a shipped fixture to a temporary CSV and returns its path"""

    def _write(name: str) -> str:
        path = tmp_path / "{}.csv".format(name)
        cmd_fixture(name, str(path))
        return str(path)

    return _write


@pytest.fixture
def pareto5_csv(fixture_file) -> str:
    return fixture_file("pareto5")


@pytest.fixture
def parabola20_csv(fixture_file) -> str:
    return fixture_file("parabola20")


@pytest.fixture
def staircase3d_csv(fixture_file) -> str:
    return fixture_file("staircase3d")
