import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_hermitian(rng, n, scale=1.0):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (z + z.conj().T) / 2.0


def haar_unitary(rng, n):
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_hermitian_circulant_weights(rng, n):
    w = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    w[0] = w[0].real
    for k in range(1, n // 2 + 1):
        w[n - k] = np.conj(w[k])
    if n % 2 == 0:
        w[n // 2] = w[n // 2].real
    return w


def max_abs(m):
    return float(np.max(np.abs(m)))
