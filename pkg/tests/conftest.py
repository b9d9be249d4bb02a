import numpy as np
import pytest

from harmcert import build_curve, build_param

TWO_PI = 2.0 * np.pi


@pytest.fixture(scope="session")
def circle():
    return build_curve({"type": "circle", "radius": 1.0})


@pytest.fixture(scope="session")
def ellipse21():
    return build_curve({"type": "ellipse", "a": 2.0, "b": 1.0})


@pytest.fixture(scope="session")
def ellipse51():
    return build_curve({"type": "ellipse", "a": 5.0, "b": 1.0})


@pytest.fixture(scope="session")
def polar3():
    # nonconvex three-lobed curve
    return build_curve({"type": "polar", "formula_id": "cosine",
                        "params": {"eps": 0.3, "k": 3}})


@pytest.fixture(scope="session")
def polar_convex():
    return build_curve({"type": "polar", "formula_id": "cosine",
                        "params": {"eps": 0.1, "k": 2}})


def knots_spec(length: float, n: int = 17, seed: int = 7) -> dict:
    """Strictly increasing random monotone resample of [0, 2*pi] -> [0, length]."""
    rng = np.random.default_rng(seed)
    t = np.linspace(0.0, TWO_PI, n)
    steps = rng.uniform(0.2, 1.0, n - 1)
    steps /= steps.sum()
    f = np.concatenate([[0.0], np.cumsum(steps)]) * length
    f[-1] = length
    return {"type": "knots", "t": t.tolist(), "f": f.tolist()}


@pytest.fixture(scope="session")
def knots_param(circle):
    return build_param(knots_spec(circle.length), circle.length)


def assert_sound(cert):
    """Certified verdicts must never coexist with a folding oracle."""
    if cert.oracle is not None and cert.verdict == "certified-diffeomorphism":
        assert cert.oracle.verdict == "univalent-evidence", (
            f"soundness violation: {cert.curve_id} | {cert.map_id}")
