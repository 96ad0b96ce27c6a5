"""
Shared fixtures for the CCC toolkit tests.

Provides small parameter triples with hand-checked values, an isolated
metrics collector and a clean ``CCC_*`` environment for every test.
"""

import logging
import os
from collections.abc import Iterator

import pytest

from src.groups import GroupParams, make_params
from src.reporting.metrics import SweepMetrics


@pytest.fixture(autouse=True)
def clean_ccc_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    Remove every CCC_* variable before each test.

    Why: Settings read the environment, so a developer's shell must not leak
         into test expectations
    What: Deletes CCC_* variables for the duration of one test
    How: Uses monkeypatch so the variables come back afterwards
    """
    for name in list(os.environ):
        if name.startswith("CCC_"):
            monkeypatch.delenv(name, raising=False)


@pytest.fixture(autouse=True)
def restore_root_logger() -> Iterator[None]:
    """
    Undo handler changes made by configure_logging.

    Why: The CLI installs a handler on the root logger; later tests must not
         write through a handler bound to a closed capture stream
    What: Snapshots root handlers and level, restores them after the test
    How: Copies the handler list before yielding
    """
    root = logging.getLogger()
    handlers = list(root.handlers)
    level = root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def metrics() -> SweepMetrics:
    """Fresh metrics collector so counters start at zero."""
    return SweepMetrics()


@pytest.fixture
def g211() -> GroupParams:
    """G(2,1,1): order 8, CCC graph 3xK1."""
    return make_params(2, 1, 1)


@pytest.fixture
def g221() -> GroupParams:
    """G(2,2,1): order 16, CCC graph 3xK2, all energies 6."""
    return make_params(2, 2, 1)


@pytest.fixture
def g222() -> GroupParams:
    """G(2,2,2): order 32, formulas and brute force disagree."""
    return make_params(2, 2, 2)


@pytest.fixture
def g212() -> GroupParams:
    """G(2,1,2): the m < n partner of G(2,2,1)."""
    return make_params(2, 1, 2)


@pytest.fixture
def g311() -> GroupParams:
    """G(3,1,1): order 27, CCC graph 4xK2."""
    return make_params(3, 1, 1)
