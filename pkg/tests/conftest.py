import functools

import pytest

from quasigray import enumerate_cycle, make_counter


@functools.lru_cache(maxsize=None)
def _cached_report(name, frozen_params):
    return enumerate_cycle(make_counter(name, **dict(frozen_params)))


def get_report(name, **params):
    """Session-wide memoized enumeration; the big lazy-counter cycles are
    shared between the module tests and the acceptance suite."""
    return _cached_report(name, tuple(sorted(params.items())))


@pytest.fixture(scope="session")
def cycle_report():
    return get_report
