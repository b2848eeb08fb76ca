import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mps import families  # noqa: E402

PARAMS_FOLDER = Path(__file__).parent / "data" / "params"
SIGN_CLASSES = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def class_a():
    return families.build_class_a(1.0, 0.7, 1, 1)


@pytest.fixture
def class_b():
    return families.build_class_b(0.5)


@pytest.fixture
def spin_flip():
    return families.build_spin_flip(0.8, 0.3, 0.5, -1)


@pytest.fixture
def params_folder():
    return PARAMS_FOLDER
