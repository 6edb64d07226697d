"""Shared fixtures: one mid-size statistics table for the unit tests."""

import pytest

from qspt.partitions import StatTables


@pytest.fixture(scope="session")
def tables():
    return StatTables.build(640)
