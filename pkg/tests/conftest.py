import random

import pytest

from qsl21 import Gl2Module, QContext
from qsl21.cli import FAMILIES, build_module, sample_family_params

from _criterion_log import LINES


def pytest_terminal_summary(terminalreporter):
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def family_instances():
    """(ctx, family, params, module) for every family, l in {3..7},
    3 generic draws each — shared by the relation-audit and Casimir
    acceptance tests."""
    rng = random.Random(20260825)
    out = []
    for l in (3, 4, 5, 6, 7):
        ctx = QContext(l)
        for family in FAMILIES:
            for _ in range(3):
                params = sample_family_params(ctx, rng, family)
                out.append((ctx, family, params,
                            build_module(ctx, family, params)))
    return out
