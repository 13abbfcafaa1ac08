"""Pytest configuration"""
import random

import pytest
from click.testing import CliRunner

from qcong.core.config import settings


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the full acceptance ranges")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full acceptance range, only with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def test_settings(monkeypatch):
    """Every q-binomial is recomputed by the quotient formula during tests"""
    monkeypatch.setattr(settings, "QBINOM_CROSS_CHECK", True)
    yield settings


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture
def runner():
    return CliRunner()
