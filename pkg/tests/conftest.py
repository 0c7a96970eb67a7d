import os
import sys

import pytest

# tests always exercise this checkout, installed or not
sys.path.insert(0, os.path.dirname(__file__))
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(__file__)), "src"))

import tridom as td


@pytest.fixture(scope="session")
def levels_to_9():
    return {n: level for n, level in td.levels(9)}


@pytest.fixture(scope="session")
def levels_to_11():
    return {n: level for n, level in td.levels(11)}


@pytest.fixture(scope="session")
def census_default(levels_to_11):
    """Rows and records for the default census range 5..11."""
    rows, records = td.census_records(5, 11, levels=sorted(levels_to_11.items()))
    return rows, records
