import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from quiverhom import corpus


@pytest.fixture(scope="session")
def sec4():
    return corpus.algebra("sec4_example")


@pytest.fixture(scope="session")
def sec3():
    return corpus.algebra("sec3_example")


@pytest.fixture(scope="session")
def finito():
    return corpus.algebra("finito")


@pytest.fixture(scope="session")
def infinito():
    return corpus.algebra("infinito")
