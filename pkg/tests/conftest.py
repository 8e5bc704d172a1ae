import pytest

from nkerr.model import FieldMode, SystemConfig


def make_config(ga, gb, gc, na, nb, nc, da, db, dc, gamma=(0.0, 0.0, 0.0)):
    return SystemConfig(
        FieldMode("a", ga, da, na),
        FieldMode("b", gb, db, nb),
        FieldMode("c", gc, dc, nc),
        tuple(gamma),
    )


@pytest.fixture
def reference_config():
    """Weak-probe benchmark: g_a = g_c = 0.01, resonant pump block detuned."""
    return make_config(0.01, 1.0, 0.01, 1, 0, 1, 0.3, 0.1, 0.5)


@pytest.fixture
def lossy_config():
    return make_config(0.012, 1.1, 0.009, 2, 1, 1, 0.45, -0.2, 0.4,
                       gamma=(0.12, 0.2, 0.07))
