import cmath

import numpy as np
import pytest

from logroots import MonodromyRep, parse_input_document, preset


def angle(q):
    """Unit-modulus complex number with branch angle q (fraction of a turn)."""
    return cmath.exp(2j * cmath.pi * q)


def random_invertible(rng, n, scale=1.0):
    while True:
        m = scale * (rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n)))
        if abs(np.linalg.det(m)) > 1e-3:
            return m


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def worked_example():
    """The reducible-indecomposable 3-dim rep with roots (0, -1, -2)."""
    return parse_input_document(preset("pslz-section5"))[0]


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
