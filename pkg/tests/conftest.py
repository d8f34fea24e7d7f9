"""Shared fixtures: the standard model tables and the fuzz families.

Session scope keeps the fuzz families (hundreds of instances each) built
once; everything here is immutable, so sharing is safe.
"""

import pytest

from zinbielkit import fuzz, trunc_integration
from zinbielkit.models import free_halfshuffle


@pytest.fixture(scope="session")
def t3():
    return trunc_integration(3, "right")


@pytest.fixture(scope="session")
def t5():
    return trunc_integration(5, "right")


@pytest.fixture(scope="session")
def l3():
    return trunc_integration(3, "left")


@pytest.fixture(scope="session")
def free23():
    return free_halfshuffle(2, 3)


@pytest.fixture(scope="session")
def standard_models():
    return fuzz.standard_models()


@pytest.fixture(scope="session")
def algebra_family():
    return fuzz.algebra_family(fuzz.DEFAULT_SEED)


@pytest.fixture(scope="session")
def bimodule_family():
    return fuzz.bimodule_family(fuzz.DEFAULT_SEED)


@pytest.fixture(scope="session")
def matched_pair_family():
    return fuzz.matched_pair_family(fuzz.DEFAULT_SEED)


@pytest.fixture(scope="session")
def goldens_dir(request):
    return request.config.rootpath / "tests" / "goldens"


@pytest.fixture(scope="session")
def corpus_dir(request):
    return request.config.rootpath / "tests" / "corpus"
