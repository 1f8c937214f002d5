"""Walk through the wavelet decomposition used by the embedder.

Builds a synthetic host, decomposes it three levels deep with both
filter banks, prints where each subband lives and how the energy is
distributed, and confirms the transform inverts to the exact image.
Writes the host and a viewable coefficient plane to demos/output/.
"""

import pathlib

import numpy as np

import entromark as em
from entromark import dwt

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

host = em.host_image(512, seed=1)
em.store_gray(host, OUT / "host.pgm")
print(f"host: 512x512, mean {host.mean():.1f}, range [{host.min()}, {host.max()}]")

for filt in ("haar", "daub4"):
    pyr = em.forward(host, levels=3, filt=filt)
    err = np.abs(em.inverse_plane(pyr) - host).max()
    print(f"\n{filt}: perfect reconstruction error {err:.2e}")
    print(f"{'subband':>8} {'origin':>12} {'size':>9} {'energy share':>13}")
    total = float((pyr.coeffs**2).sum())
    for band in em.subband_ids(3):
        r, c, h, w = em.subband_bounds(host.shape, 3, band)
        share = float((pyr.coeffs[r : r + h, c : c + w] ** 2).sum()) / total
        print(f"{str(band):>8} {f'({r},{c})':>12} {f'{h}x{w}':>9} {share:>12.1%}")

# map coefficient magnitudes to gray levels for a quick look
pyr = em.forward(host, levels=3, filt="haar")
view = np.log1p(np.abs(pyr.coeffs))
view = (view / view.max() * 255.0).round().astype(np.uint8)
em.store_gray(view, OUT / "pyramid_haar.pgm")
print(f"\nwrote {OUT / 'host.pgm'} and {OUT / 'pyramid_haar.pgm'}")
