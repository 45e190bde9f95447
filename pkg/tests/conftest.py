"""Shared fixtures: one session-scoped system per test family.

Systems memoize heavily (intervals, coset maxima, reduced words), so
sharing them across tests keeps the exhaustive sweeps cheap.
"""

from __future__ import annotations

import itertools

import pytest

from coxbruhat import coxeter_system


@pytest.fixture(scope="session")
def a2():
    return coxeter_system("A2")


@pytest.fixture(scope="session")
def a3():
    return coxeter_system("A3")


@pytest.fixture(scope="session")
def a4():
    return coxeter_system("A4")


@pytest.fixture(scope="session")
def b3():
    return coxeter_system("B3")


@pytest.fixture(scope="session")
def i25():
    return coxeter_system("I2:5")


@pytest.fixture(scope="session")
def i2inf():
    return coxeter_system("I2:inf")


@pytest.fixture(scope="session")
def aff2():
    return coxeter_system("A~2")


@pytest.fixture(scope="session")
def h3():
    return coxeter_system("H3")


def all_gensets(system):
    """Every subset of the generating set, smallest first."""
    return [
        frozenset(J)
        for size in range(system.rank + 1)
        for J in itertools.combinations(range(system.rank), size)
    ]
