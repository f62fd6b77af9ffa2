import itertools

import numpy as np
import pytest

from landscape import _backend
from landscape.gbf import GenBoolFn


def all_functions(n, k):
    for vals in itertools.product(range(1 << k), repeat=1 << n):
        yield GenBoolFn(n, k, vals)


def random_functions(n, k, count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield GenBoolFn(n, k, rng.integers(0, 1 << k, 1 << n))


BACKENDS = ["python"] + (["cython"] if "cython" in _backend.available() else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    with _backend.using(request.param):
        yield request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
