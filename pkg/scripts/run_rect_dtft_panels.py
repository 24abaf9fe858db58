#!/usr/bin/env python3
"""Write magnitude/phase panels of the rectangular-window spectrum.

One CSV per variant (head-grid, uncorrected even, corrected even), sampled
densely across the principal band.  All three magnitudes trace the same
Dirichlet kernel; the phase columns differ: the head-grid variant carries a
steep linear ramp, the uncorrected even variant a shallow one, and the
corrected variant is purely 0 or pi.
"""

import argparse
import pathlib

import numpy as np

from sdftkit import SpectrumVariant, rect_dtft


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=20, help="record length")
    ap.add_argument("--fs", type=float, default=1.0, help="sample rate")
    ap.add_argument("--points", type=int, default=1001)
    ap.add_argument("--J", type=int, default=10000, help="alias terms per side")
    ap.add_argument("--outdir", type=pathlib.Path, default=pathlib.Path("panels"))
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    freqs = np.linspace(-args.fs / 2, args.fs / 2, args.points)
    for variant in SpectrumVariant:
        path = args.outdir / f"rect_{variant.value.replace('-', '_')}.csv"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("f,magnitude,phase\n")
            for f in freqs:
                z = rect_dtft(args.N, args.fs, float(f), variant, args.J)
                fh.write(f"{float(f)!r},{abs(z)!r},{float(np.angle(z))!r}\n")
        print(f"wrote {path} ({args.points} rows)")


if __name__ == "__main__":
    main()
