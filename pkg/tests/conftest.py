import numpy as np
import pytest

from pgakit import pga2d, pga3d


@pytest.fixture(scope="session")
def plane_alg():
    return pga2d()


@pytest.fixture(scope="session")
def space_alg():
    return pga3d()


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_mv(alg, rng, grade=None):
    coeffs = rng.normal(size=alg.n_blades)
    if grade is not None:
        mask = alg.grades == grade
        coeffs = np.where(mask, coeffs, 0.0)
    from pgakit import Multivector
    return Multivector(alg, coeffs)


# The 8x8 multiplication table of the degenerate planar algebra; the
# golden reference for every sign convention in the kernel.
PLANAR_TABLE = {
    "1":  ["1", "e0", "e1", "e2", "E0", "E1", "E2", "I"],
    "e0": ["e0", "0", "E2", "-E1", "I", "0", "0", "0"],
    "e1": ["e1", "-E2", "1", "E0", "e2", "I", "-e0", "E1"],
    "e2": ["e2", "E1", "-E0", "1", "-e1", "e0", "I", "E2"],
    "E0": ["E0", "I", "-e2", "e1", "-1", "-E2", "E1", "-e0"],
    "E1": ["E1", "0", "I", "-e0", "E2", "0", "0", "0"],
    "E2": ["E2", "0", "e0", "I", "-E1", "0", "0", "0"],
    "I":  ["I", "0", "E1", "E2", "-e0", "0", "0", "0"],
}
