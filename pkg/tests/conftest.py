import pytest

from lscat import default_catalog


@pytest.fixture(scope="session")
def cat():
    return default_catalog()


@pytest.fixture(scope="session")
def alpha_n3(cat):
    return cat.word_class(("eta_2", "alpha1_3_p3", "alpha1_6_p3"))


@pytest.fixture(scope="session")
def alpha_m2(cat):
    return cat.word_class(("eta_2", "eta_3", "eta_4", "eps_5"))


@pytest.fixture(scope="session")
def alpha_m3(cat):
    return cat.word_class(("eta_2", "alpha1_3_p3", "alpha2_6_p3"))


@pytest.fixture(scope="session")
def alpha_l5(cat):
    return cat.word_class(("eta_2", "alpha1_3_p5", "alpha2_10_p5"))
