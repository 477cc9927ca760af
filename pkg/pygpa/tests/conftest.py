import pytest

from pygpa.algebra.rings import RingSpec


def pytest_addoption(parser):
    parser.addoption(
        "--no-integration", action="store_true", default=False, help="Skip the slow exhaustive corpus tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "integration: mark test as an integration test")


def pytest_collection_modifyitems(config, items):
    if not config.getoption('--no-integration'):
        return
    skip_integration = pytest.mark.skip(reason="skipped with --no-integration")
    for item in items:
        if "integration" in item.keywords:
            item.add_marker(skip_integration)


@pytest.fixture(scope='session')
def integers():
    return RingSpec.integers()


@pytest.fixture(scope='session')
def rationals():
    return RingSpec.rationals()


@pytest.fixture(scope='session')
def z2():
    return RingSpec.integers_mod(2)


@pytest.fixture(scope='session')
def z3():
    return RingSpec.integers_mod(3)


@pytest.fixture(scope='session')
def z4():
    return RingSpec.integers_mod(4)


@pytest.fixture(scope='session')
def z6():
    return RingSpec.integers_mod(6)
