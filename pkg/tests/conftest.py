import numpy as np
import pytest

from kamean.io import random_hpd, random_matrix
from kamean.matrix import Algebra

ALGEBRAS = list(Algebra)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


def hpd(tag, n, rng):
    return random_hpd(tag, n, rng)


def rand(tag, n, rng):
    return random_matrix(tag, n, rng)


def rel(X, Y):
    return float(np.linalg.norm(X.data - Y.data)) / max(1.0, float(np.linalg.norm(Y.data)))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
