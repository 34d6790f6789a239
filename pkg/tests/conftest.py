import os

import pytest

SLOW = os.environ.get("GWCALC_SLOW_TESTS") == "1"

slow = pytest.mark.skipif(not SLOW, reason="set GWCALC_SLOW_TESTS=1 for the n=3 tier")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: n=3 quotient-engine tier")
