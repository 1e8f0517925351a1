# -*- coding: utf-8  -*-

import numpy as np
import pytest

from twofactor.cycles import CycleSystem, OrientedCycle
from twofactor.generators import complete_graph


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='also run the sweeps over every small graph')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: sweep over a whole corpus; needs --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def k7():
    return complete_graph(7)


@pytest.fixture
def k7_two_triangles(k7):
    """Two triangles in K7 leaving vertex 6 uncovered."""
    return CycleSystem(k7, [OrientedCycle([0, 1, 2]), OrientedCycle([3, 4, 5])])
