from pathlib import Path

import pytest

from xmodcat import (
    adjoint_action,
    symmetric,
    xm_cyc4,
    xm_flip,
    xm_inversion,
    xm_peiffer_broken,
    xm_sym3,
)

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def xm1():
    return xm_inversion()


@pytest.fixture(scope="session")
def xm2():
    return xm_sym3()


@pytest.fixture(scope="session")
def xm3():
    return xm_flip()


@pytest.fixture(scope="session")
def xm4():
    return xm_cyc4()


@pytest.fixture(scope="session")
def bad_xm():
    return xm_peiffer_broken()


@pytest.fixture(scope="session")
def all_xms(xm1, xm2, xm3, xm4):
    return [("xm1", xm1), ("xm2", xm2), ("xm3", xm3), ("xm4", xm4)]


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def adjoints(all_xms):
    return [(name, adjoint_action(xm)) for name, xm in all_xms]
