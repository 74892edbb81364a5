import math
from pathlib import Path

import numpy as np
import pytest

from qjunta.boolfn import TruthTable

DATA = Path(__file__).with_name("data")


def table(arity, bits):
    return TruthTable(arity, np.asarray(bits, dtype=np.uint8))


def binomial_3sigma(p, trials):
    return 3.0 * math.sqrt(p * (1.0 - p) / trials)


@pytest.fixture
def data_dir():
    return DATA


# acceptance summary: one line per criterion at the end of the run
_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
