import pytest

import twosilt as ts


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the slow oracle types (A4, D4)")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: slow oracle cross-validation runs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def groups():
    """Session cache of enumerated Weyl groups keyed by (family, rank, labeling)."""
    cache = {}

    def get(family, rank, labeling="figure1"):
        key = (family, rank, labeling)
        if key not in cache:
            graph = ts.build_dynkin(family, rank, labeling)
            cache[key] = (graph, ts.enumerate_group(graph))
        return cache[key]

    return get
