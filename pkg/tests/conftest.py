from __future__ import annotations

import pytest

from nilshadow.catalog import default_catalog


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def aff_h3(catalog):
    return catalog.affine_target("h3")


@pytest.fixture(scope="session")
def aff_rh3(catalog):
    return catalog.affine_target("rh3")


@pytest.fixture(scope="session")
def aff_n4(catalog):
    return catalog.affine_target("n4")
