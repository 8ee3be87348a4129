import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ghostseries import validate  # noqa: E402


@pytest.fixture(scope="session")
def p11():
    return validate(11, 2, 0)


@pytest.fixture(scope="session")
def p11s9():
    return validate(11, 2, 9)


@pytest.fixture(scope="session")
def p13():
    return validate(13, 4, 3)


def grid(primes=(11, 13)):
    return [validate(p, a, s) for p in primes for a in range(2, p - 4) for s in sorted({0, p // 2, p - 2})]


SAMPLE = [(11, 2, 0), (11, 2, 9), (11, 6, 5), (13, 4, 3), (13, 8, 11), (17, 3, 8)]
