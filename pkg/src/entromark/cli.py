"""Command-line front end: embed, extract, attack, evaluate, bench.

Every subcommand is a thin adapter over the library API.  Exit codes
partition the error classes: 0 success, 2 bad parameters or arguments,
3 file and format problems, 4 degenerate subband input.  `--report`
switches output to machine-readable key=value lines.
"""

import argparse
import sys

from . import attacks, embedder, image_io, metrics
from .errors import DegenerateSubbandError, FormatError, ParameterError

__all__ = ["main"]

_DEFAULT_QUALITIES = "100,90,80,70,60,50,40,30,20"


def _cmd_embed(args) -> int:
    host = image_io.load_gray(args.host)
    wm = image_io.load_watermark(args.watermark)
    params = embedder.EmbedParams(
        subband=args.subband, levels=args.levels, tau=args.tau, filter=args.wavelet
    )
    result = embedder.embed(host, wm, params)
    image_io.store_gray(result.image, args.out)
    embedder.save_key(result.key, args.key)
    quality = metrics.psnr(host, result.image)
    key = result.key
    if args.report:
        print(f"psnr={quality!r}")
        print(f"p={key.n + key.t}")
        print(f"t={key.t}")
    else:
        print(
            f"embedded {key.n} bits in {key.subband}: "
            f"psnr {quality:.2f} dB, p={key.n + key.t}, t={key.t}"
        )
    return 0


def _cmd_extract(args) -> int:
    img = image_io.load_gray(args.image)
    key = embedder.load_key(args.key)
    wm = embedder.extract(img, key)
    image_io.store_watermark(wm, args.out)
    if args.report:
        print(f"n={key.n}")
        print(f"width={key.wm_width}")
        print(f"height={key.wm_height}")
    return 0


def _cmd_attack(args) -> int:
    img = image_io.load_gray(args.infile)
    if args.type == "jpeg":
        out = attacks.jpeg_like(img, args.quality)
    elif args.type == "median":
        out = attacks.median_filter(img, args.window)
    else:
        out = attacks.sharpen(img)
    image_io.store_gray(out, args.out)
    if args.report:
        print(f"type={args.type}")
        if args.type == "jpeg":
            print(f"quality={args.quality}")
        elif args.type == "median":
            print(f"window={args.window}")
    return 0


def _cmd_evaluate(args) -> int:
    if args.mode == "psnr":
        value = metrics.psnr(image_io.load_gray(args.a), image_io.load_gray(args.b))
    else:
        wm_a = image_io.load_watermark(args.a)
        wm_b = image_io.load_watermark(args.b)
        if args.mode == "correlation":
            value = metrics.correlation(wm_a, wm_b)
        else:
            value = metrics.error_rate(wm_a, wm_b)
    if args.report:
        print(f"{args.mode}={value!r}")
    else:
        print(repr(value))
    return 0


def _parse_qualities(text):
    try:
        qualities = [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise ParameterError(f"bad quality list {text!r}")
    if not qualities:
        raise ParameterError("quality list is empty")
    return qualities


def _cmd_bench(args) -> int:
    host = image_io.load_gray(args.host)
    wm = image_io.load_watermark(args.watermark)
    qualities = _parse_qualities(args.qualities)
    result = embedder.embed(host, wm, embedder.EmbedParams())
    marked, key = result.image, result.key

    rows = [("none", "-", marked)]
    for quality in qualities:
        rows.append(("jpeg", str(quality), attacks.jpeg_like(marked, quality)))
    rows.append(("median", "3", attacks.median_filter(marked, 3)))
    rows.append(("sharpen", "-", attacks.sharpen(marked)))

    table = []
    for name, param, attacked in rows:
        recovered = embedder.extract(attacked, key)
        table.append(
            (name, param, metrics.correlation(wm, recovered), metrics.error_rate(wm, recovered))
        )

    if args.report:
        for name, param, corr, ber in table:
            tag = name if param == "-" else f"{name}_{param}"
            print(f"{tag}_correlation={corr!r}")
            print(f"{tag}_error_rate={ber!r}")
    else:
        print(f"{'attack':<8} {'param':>5} {'correlation':>12} {'error_rate':>11}")
        for name, param, corr, ber in table:
            print(f"{name:<8} {param:>5} {corr:>12.6f} {ber:>11.6f}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entromark",
        description="Blind wavelet-domain image watermarking with entropy-guided "
        "coefficient selection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("embed", help="hide a watermark in a grayscale image")
    cmd.add_argument("--host", required=True, help="host image (PGM P5)")
    cmd.add_argument("--watermark", required=True, help="binary mark (PBM)")
    cmd.add_argument("--out", required=True, help="watermarked image path")
    cmd.add_argument("--key", required=True, help="extraction key path (JSON)")
    cmd.add_argument("--subband", default="HL3")
    cmd.add_argument("--levels", type=int, default=3)
    cmd.add_argument("--tau", type=int, default=16)
    cmd.add_argument("--wavelet", default="haar", choices=["haar", "daub4"])
    cmd.set_defaults(func=_cmd_embed)

    cmd = sub.add_parser("extract", help="recover a watermark using its key")
    cmd.add_argument("--image", required=True, help="watermarked image (PGM P5)")
    cmd.add_argument("--key", required=True, help="key written by embed")
    cmd.add_argument("--out", required=True, help="extracted mark path (PBM P4)")
    cmd.set_defaults(func=_cmd_extract)

    cmd = sub.add_parser("attack", help="degrade an image")
    cmd.add_argument("--in", dest="infile", required=True, metavar="IN")
    cmd.add_argument("--out", required=True)
    cmd.add_argument("--type", required=True, choices=["jpeg", "median", "sharpen"])
    cmd.add_argument("--quality", type=int, default=50)
    cmd.add_argument("--window", type=int, default=3)
    cmd.set_defaults(func=_cmd_attack)

    cmd = sub.add_parser("evaluate", help="compare two images or two marks")
    cmd.add_argument("--mode", required=True, choices=["psnr", "correlation", "ber"])
    cmd.add_argument("--a", required=True)
    cmd.add_argument("--b", required=True)
    cmd.set_defaults(func=_cmd_evaluate)

    cmd = sub.add_parser("bench", help="embed, attack, extract, tabulate")
    cmd.add_argument("--host", required=True)
    cmd.add_argument("--watermark", required=True)
    cmd.add_argument("--qualities", default=_DEFAULT_QUALITIES)
    cmd.set_defaults(func=_cmd_bench)

    for name, cmd in sub.choices.items():
        cmd.add_argument("--report", action="store_true",
                         help="print machine-readable key=value lines")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"entromark {args.command}: parameter error: {exc}", file=sys.stderr)
        return 2
    except (FormatError, OSError) as exc:
        print(f"entromark {args.command}: i/o error: {exc}", file=sys.stderr)
        return 3
    except DegenerateSubbandError as exc:
        print(f"entromark {args.command}: degenerate input: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
