from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nimcash import CashTable, ThresholdTables, build_thresholds, new_move_set


@pytest.fixture(scope="session")
def cube_cache():
    """Share expensive winner cubes across tests: get(values, n_max[, cap])."""
    cache: dict = {}

    def get(values, n_max: int, cap: int | None = None) -> CashTable:
        key = (tuple(values), n_max, cap)
        if key not in cache:
            cache[key] = CashTable(new_move_set(values), n_max, cap)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def tables_cache():
    """Share threshold tables across tests: get(values, n_max)."""
    cache: dict = {}

    def get(values, n_max: int) -> ThresholdTables:
        key = (tuple(values), n_max)
        if key not in cache:
            cache[key] = build_thresholds(new_move_set(values), n_max)
        return cache[key]

    return get
