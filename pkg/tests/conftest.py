import pytest

from lemspec.instances import build_instance, catalog, find_descriptor


def instance(name: str):
    desc = find_descriptor(name)
    assert desc is not None, name
    return build_instance(desc)


@pytest.fixture(scope="session")
def all_instances():
    return tuple(build_instance(d) for d in catalog())


@pytest.fixture(scope="session")
def z6_module():
    return instance("Z6-ideal-lattice")


@pytest.fixture(scope="session")
def klein_module():
    # smallest instance whose plain variety family is not a topology
    return instance("Z2xZ2-over-Z2-submodules")
