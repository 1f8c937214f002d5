import numpy as np
import pytest

import entromark as em
from entromark import dwt
from entromark.errors import ParameterError


def test_quadrant_layout_2x2_haar():
    img = np.array([[10, 20], [30, 40]], dtype=np.uint8)
    coeffs = em.forward(img, 1, "haar").coeffs
    a, b, c, d = 10.0, 20.0, 30.0, 40.0
    expect = np.array(
        [
            [(a + b + c + d) / 2, (a - b + c - d) / 2],
            [(a + b - c - d) / 2, (a - b - c + d) / 2],
        ]
    )
    assert np.allclose(coeffs, expect, atol=1e-12)


@pytest.mark.parametrize("filt", ["haar", "daub4"])
def test_perfect_reconstruction(filt):
    rng = np.random.default_rng(11)
    for shape in [(64, 64), (128, 72), (96, 160)]:
        img = rng.integers(0, 256, shape, dtype=np.uint8)
        pyr = em.forward(img, 3, filt)
        plane = em.inverse_plane(pyr)
        assert np.abs(plane - img).max() <= 1e-10
        assert np.array_equal(em.inverse(pyr), img)


@pytest.mark.parametrize("filt", ["haar", "daub4"])
def test_energy_preserved(filt):
    rng = np.random.default_rng(12)
    img = rng.integers(0, 256, (64, 64), dtype=np.uint8)
    pyr = em.forward(img, 3, filt)
    e_img = float((img.astype(np.float64) ** 2).sum())
    e_coef = float((pyr.coeffs**2).sum())
    assert abs(e_img - e_coef) <= 1e-6 * e_img


@pytest.mark.parametrize("filt", ["haar", "daub4"])
def test_constant_image_concentrates_in_ll(filt):
    img = np.full((32, 32), 77, dtype=np.uint8)
    pyr = em.forward(img, 3, filt)
    r, c, h, w = em.subband_bounds((32, 32), 3, dwt.Subband("LL", 3))
    ll = pyr.coeffs[r : r + h, c : c + w]
    details = pyr.coeffs.copy()
    details[r : r + h, c : c + w] = 0.0
    assert np.allclose(ll, 77.0 * 8.0, atol=1e-9)
    assert np.abs(details).max() <= 1e-9


def test_filter_taps():
    assert np.allclose(sum(em.HAAR.lowpass), np.sqrt(2.0))
    assert np.allclose(sum(em.DAUB4.lowpass), np.sqrt(2.0))
    assert abs(sum(em.DAUB4.highpass)) <= 1e-15
    for filt in (em.HAAR, em.DAUB4):
        assert np.allclose(np.dot(filt.lowpass, filt.lowpass), 1.0)
        assert np.allclose(np.dot(filt.highpass, filt.highpass), 1.0)


def test_get_filter():
    assert em.get_filter("haar") is em.HAAR
    assert em.get_filter(em.DAUB4) is em.DAUB4
    with pytest.raises(ParameterError, match="haar"):
        em.get_filter("sym5")


def test_subband_bounds_512():
    assert em.subband_bounds((512, 512), 3, dwt.Subband("HL", 3)) == (0, 64, 64, 64)
    assert em.subband_bounds((512, 512), 3, dwt.Subband("HH", 1)) == (256, 256, 256, 256)
    assert em.subband_bounds((512, 512), 3, dwt.Subband("LL", 3)) == (0, 0, 64, 64)
    assert em.subband_bounds((512, 512), 3, dwt.Subband("LH", 2)) == (128, 0, 128, 128)


def test_subband_parse_and_str():
    band = dwt.Subband.parse("hl3")
    assert (band.orientation, band.level) == ("HL", 3)
    assert str(band) == "HL3"
    for bad in ("XX1", "HL0", "HL", "3HL"):
        with pytest.raises(ParameterError):
            dwt.Subband.parse(bad)


def test_subband_ids_order():
    ids = [str(band) for band in em.subband_ids(2)]
    assert ids == ["LL2", "HL2", "LH2", "HH2", "HL1", "LH1", "HH1"]


def test_subband_view_is_writable_window():
    rng = np.random.default_rng(13)
    img = rng.integers(0, 256, (64, 64), dtype=np.uint8)
    pyr = em.forward(img, 2, "haar")
    view = em.subband_view(pyr, dwt.Subband.parse("HL2"))
    assert view.shape == (16, 16)
    view[:] = 0.0
    assert np.abs(pyr.coeffs[0:16, 16:32]).max() == 0.0


def test_geometry_validation():
    img = np.zeros((500, 500), dtype=np.uint8)
    with pytest.raises(ParameterError, match="divisible"):
        em.forward(img, 3)
    with pytest.raises(ParameterError):
        em.forward(np.zeros((64, 64), dtype=np.uint8), 0)
    with pytest.raises(ParameterError, match="coarsest"):
        em.subband_bounds((64, 64), 3, dwt.Subband("LL", 2))
    with pytest.raises(ParameterError):
        em.subband_bounds((64, 64), 3, dwt.Subband("HL", 4))
