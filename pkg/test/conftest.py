"""
Shared fixtures and hypothesis profiles.

Select a profile with HYPOTHESIS_PROFILE=ci for the longer sweep.
"""

import os

import pytest
from hypothesis import HealthCheck, settings

from app.core.examples import DihedralExampleParams, dihedral_example, trivial_brace
from app.core.groups import cyclic, dihedral, direct_product, presented_G, presented_H
from app.storage import store_structure

settings.register_profile("dev", max_examples=15, deadline=None)
settings.register_profile("ci", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("BRACOID_ORDER_CAP", "BRACOID_AUTOMORPHISM_CAP", "BRACOID_ENUMERATION_CAP",
                 "BRACOID_BRACE_CAP", "BRACOID_WORKERS", "BRACOID_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def c2():
    return cyclic(2)


@pytest.fixture
def c3():
    return cyclic(3)


@pytest.fixture
def c4():
    return cyclic(4)


@pytest.fixture
def klein():
    return direct_product(cyclic(2), cyclic(2))


@pytest.fixture
def d3():
    return dihedral(3)


@pytest.fixture
def gt3():
    return presented_G(3)


@pytest.fixture
def hw3():
    return presented_H(3)


@pytest.fixture(scope="session")
def example_333():
    return dihedral_example(DihedralExampleParams(3, 3, 3))


@pytest.fixture(scope="session")
def example_222():
    return dihedral_example(DihedralExampleParams(2, 2, 2))


@pytest.fixture
def trivial_c4_brace():
    return trivial_brace(cyclic(4))


@pytest.fixture
def example_file(tmp_path, example_333):
    path = tmp_path / "example_333.json"
    store_structure(example_333, path)
    return path
