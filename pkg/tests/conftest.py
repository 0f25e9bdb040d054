import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

from src.engine.decomposer import resolve
from src.models.report import Truncation


@pytest.fixture(scope='session')
def octet_report():
    return resolve(1, 1, 1, 1)


@pytest.fixture
def small_truncation():
    # interior states carry at most one quantum
    return Truncation(5, 4)
