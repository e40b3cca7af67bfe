import sys

import pytest

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

from weylbounds.rootsys import build_label


@pytest.fixture(scope="session")
def systems():
    return {lab: build_label(lab) for lab in ("A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2")}
