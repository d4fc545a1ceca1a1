from __future__ import annotations

import pytest

from ywalk import builtin_cartan, compute_s_sets, compute_t_sets, run_walk

G2_WORD = (1, 2, 1, 2, 1, 2)


@pytest.fixture(scope="session")
def g2():
    return builtin_cartan("g2")


@pytest.fixture(scope="session")
def a1():
    return builtin_cartan("a1")


@pytest.fixture(scope="session")
def a2():
    return builtin_cartan("a2")


@pytest.fixture(scope="session")
def g2_reports(g2):
    return [run_walk(g2, G2_WORD, i, 8) for i in (1, 2)]


@pytest.fixture(scope="session")
def g2_s_sets(g2, g2_reports):
    return compute_s_sets(compute_t_sets(g2_reports), g2)
