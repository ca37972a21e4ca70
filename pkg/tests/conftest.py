"""Shared test fixtures and configuration."""

import random

import pytest

from rainbowsat.families import build
from rainbowsat.models.family import Construction, parse_family_spec
from rainbowsat.settings import settings


@pytest.fixture
def construct():
    """Build a family member from keyword parameters.

    Returns:
        A function that accepts a family name and parameters and returns the Construction.
    """

    def _construct(family: str, **params) -> Construction:
        """Build one construction.

        Args:
            family: Family name such as "omega" or "t"
            **params: Remaining FamilySpec fields

        Returns:
            The built construction
        """
        return build(parse_family_spec({"family": family, **params}))

    return _construct


@pytest.fixture
def rng() -> random.Random:
    """Return a random generator seeded from settings.random_seed."""
    return random.Random(settings.random_seed)


def pytest_addoption(parser):
    """Add custom command line options."""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run exhaustive searches and large construction sweeps that take minutes.",
    )


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers",
        "slow: marks exhaustive searches that take minutes (enable with '--run-slow')",
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --run-slow is specified."""
    if config.getoption("--run-slow"):
        return

    skip_slow = pytest.mark.skip(reason="need --run-slow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
