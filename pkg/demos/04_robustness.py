"""Measure how the watermark survives compression and filtering.

Embeds the logo, runs the attack ladder (JPEG-style quantization at
falling quality, median filter, sharpen), and extracts after each
attack.  Also shows the negative control: extracting from the original
unmarked host finds nothing.  Attacked images go to demos/output/.
"""

import pathlib

import entromark as em

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

host = em.host_image(512, seed=1)
logo = em.logo_watermark()
result = em.embed(host, logo)
marked, key = result.image, result.key

attacks = [("none", "-", marked)]
for quality in (100, 90, 80, 70, 60, 50, 40, 30, 20):
    attacks.append(("jpeg", str(quality), em.jpeg_like(marked, quality)))
attacks.append(("median", "3", em.median_filter(marked, 3)))
attacks.append(("sharpen", "-", em.sharpen(marked)))

print(f"{'attack':<8} {'param':>5} {'psnr':>7} {'correlation':>12} {'error_rate':>11}")
for name, param, attacked in attacks:
    recovered = em.extract(attacked, key)
    quality = em.psnr(marked, attacked)
    quality_txt = f"{quality:7.2f}" if quality != float("inf") else "    inf"
    print(f"{name:<8} {param:>5} {quality_txt} "
          f"{em.correlation(logo, recovered):>12.6f} "
          f"{em.error_rate(logo, recovered):>11.6f}")

em.store_gray(attacks[6][2], OUT / "attacked_jpeg50.pgm")
em.store_gray(attacks[-2][2], OUT / "attacked_median3.pgm")

negative = em.extract(host, key)
print(f"\nnegative control (unmarked host): correlation "
      f"{em.correlation(logo, negative):.4f}, ones {int(negative.sum())}")
print(f"wrote attacked_jpeg50.pgm and attacked_median3.pgm in {OUT}")
