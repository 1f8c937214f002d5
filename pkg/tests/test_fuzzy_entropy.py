import math

import numpy as np
import pytest

import entromark as em
from entromark.errors import DegenerateSubbandError, ParameterError
from entromark.fuzzy_entropy import DEFAULT_PARTITION, MORE_ALPHA, MORE_BETA


def test_mu_more_endpoints():
    assert em.mu_more(0.0) == 1.0 / (1.0 + math.exp(MORE_BETA))
    assert em.mu_more(1.0) == 1.0 / (1.0 + math.exp(-(MORE_ALPHA - MORE_BETA)))
    assert abs(em.mu_more(0.0) - 0.03573) < 1e-4
    assert abs(em.mu_more(1.0) - 0.98910) < 1e-4
    # sigmoid midpoint sits exactly at beta/alpha
    assert em.mu_more(MORE_BETA / MORE_ALPHA) == 0.5


def test_mu_more_monotone_and_vectorized():
    z = np.linspace(0.0, 1.0, 101)
    out = em.mu_more(z)
    assert out.shape == z.shape
    assert np.all(np.diff(out) > 0.0)


def test_mu_more_domain_check():
    for bad in (-0.01, 1.01):
        with pytest.raises(ParameterError):
            em.mu_more(bad)


def test_subband_stats_formulas():
    rng = np.random.default_rng(21)
    win = rng.normal(0.0, 30.0, (16, 16))
    st = em.subband_stats(win)
    mags = np.abs(win)
    assert st.t0 == float(mags.mean())
    assert st.t1 == st.t0 + float(mags.std()) / 16.0
    assert st.t2 == st.t0 + float(mags.std()) / 8.0
    assert st.t0 <= st.t1 <= st.t2


def test_subband_stats_degenerate():
    with pytest.raises(DegenerateSubbandError):
        em.subband_stats(np.zeros((8, 8)))


def test_partition_sums_to_one():
    x = np.linspace(0.0, 2.0, 401)
    mu = DEFAULT_PARTITION.memberships(x)
    assert mu.shape == (401, 5)
    assert np.allclose(mu.sum(axis=1), 1.0, atol=1e-12)
    assert np.all(mu >= 0.0)


def test_normalize_context_divisors():
    st = em.SubbandStats(10.0, 20.0, 40.0)
    ctx = np.full((3, 3), -10.0)
    nfc = em.normalize_context(ctx, st)
    # center / T0, edge neighbours / T1, corners / T2, magnitudes
    assert nfc.tolist() == [0.25, 0.5, 0.25, 0.5, 1.0, 0.5, 0.25, 0.5, 0.25]


def test_normalize_context_clamps_to_domain():
    st = em.SubbandStats(1.0, 1.0, 1.0)
    nfc = em.normalize_context(np.full((3, 3), 9.0), st)
    assert np.all(nfc == 2.0)


def test_uniform_context_entropy_values():
    # all nine members sit exactly on one grade peak -> single rule fires
    # at weight mu_more(1), defuzzified to that grade's output center
    full = em.mu_more(1.0)
    assert em.entropy([0.0] * 9) == 0.1 * full
    assert em.entropy([1.0] * 9) == 0.5 * full
    assert em.entropy([2.0] * 9) == 0.9 * full


def test_uniform_context_rule_activation():
    lam = em.rule_activation([0.5] * 9)
    # 0.5 is the Low peak: only rule 2 fires, at full support
    assert lam[1] == em.mu_more(1.0)
    assert lam[0] == lam[2] == lam[3] == lam[4] == 0.0
    # off-peak uniform context supports the two straddling grades
    lam = em.rule_activation([0.25] * 9)
    assert lam[0] > 0.0 and lam[1] > 0.0
    assert lam[2] == lam[3] == lam[4] == 0.0


def test_entropy_positive_on_random_contexts():
    rng = np.random.default_rng(22)
    for _ in range(200):
        assert em.entropy(rng.uniform(0.0, 2.0, 9)) > 0.0


def test_entropy_map_matches_scalar_path():
    rng = np.random.default_rng(23)
    win = rng.normal(0.0, 25.0, (12, 9))
    st = em.subband_stats(win)
    emap = em.entropy_map(win, st)
    assert emap.shape == win.shape
    padded = np.pad(np.abs(win), 1, mode="edge")
    for r in range(win.shape[0]):
        for c in range(win.shape[1]):
            ctx = em.normalize_context(padded[r : r + 3, c : c + 3], st)
            assert emap[r, c] == em.entropy(ctx)


def test_entropy_map_scale_invariant():
    rng = np.random.default_rng(24)
    win = rng.normal(0.0, 40.0, (16, 16))
    base = em.entropy_map(win)
    for c in (0.5, 3.0, 10.0):
        assert np.abs(em.entropy_map(win * c) - base).max() <= 1e-12


def test_entropy_map_rejects_degenerate():
    with pytest.raises(DegenerateSubbandError):
        em.entropy_map(np.zeros((8, 8)))
    with pytest.raises(ParameterError):
        em.entropy_map(np.ones(9))
