import math

import numpy as np
import pytest

import entromark as em
from entromark.errors import ParameterError


def test_psnr_identical_is_inf():
    img = em.host_image(64, 1)
    assert em.psnr(img, img) == math.inf


def test_psnr_known_value():
    a = np.zeros((4, 4), dtype=np.uint8)
    b = a.copy()
    b[0, 0] = 4  # MSE = 1 over 16 pixels
    assert em.psnr(a, b) == 10.0 * math.log10(255.0**2)
    assert abs(em.psnr(a, b) - 48.1308036086791) < 1e-12


def test_psnr_shape_mismatch():
    with pytest.raises(ParameterError):
        em.psnr(np.zeros((4, 4), dtype=np.uint8), np.zeros((4, 8), dtype=np.uint8))


def test_correlation_self_and_complement(logo):
    assert em.correlation(logo, logo) == 1.0
    assert em.correlation(logo, 1 - logo) == -1.0


def test_correlation_tracks_bit_flips(logo):
    noisy = logo.copy()
    noisy[0, :8] ^= 1
    value = em.correlation(logo, noisy)
    assert 0.9 < value < 1.0


def test_correlation_rejects_constant():
    wm = np.ones((4, 4), dtype=np.uint8)
    other = np.eye(4, dtype=np.uint8)
    with pytest.raises(ParameterError, match="constant"):
        em.correlation(wm, other)


def test_correlation_size_mismatch(logo):
    with pytest.raises(ParameterError):
        em.correlation(logo, logo[:16, :])


def test_error_rate(logo):
    assert em.error_rate(logo, logo) == 0.0
    assert em.error_rate(logo, 1 - logo) == 1.0
    noisy = logo.copy()
    noisy.flat[:16] ^= 1
    assert em.error_rate(logo, noisy) == 16 / logo.size
