"""Batch command-line front end.

Subcommands: transform, convert, dtft, interp, gibbs, verify, matrix.
Signal CSV is ``index,real[,imag]`` (header optional); spectrum CSV is
``bin,real,imag,magnitude,phase`` with phase in radians in (-pi, pi].
Exit codes: 0 success, 1 verification failure, 2 I/O trouble, 3 bad
arguments.  All output is assembled in memory and written in one shot, so a
rejected run leaves no partial files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .grids import (
    ContractViolation,
    Convention,
    ConventionError,
    FrequencyGrid,
    Signal,
    Spectrum,
    time_grid,
)
from .interpolation import gibbs, gibbs_interpolant, interpolate, ordinary_route_control, square_wave
from .properties import (
    PropertyReport,
    conjugate_check,
    dc_identity,
    gamma_estimate,
    gamma_truncated_sum,
    imag_part_sum,
    real_part_sum,
    sample_tones,
    symmetry_check,
    table2_report,
)
from .transforms import FreqChoice, forward, inverse, matrix_for, odft_to_sdft, sdft
from .windows import SpectrumVariant, ToneParams, rect_dtft
from .interpolation import dfft

SCHEMA_VERSION = 1
DEFAULT_SEED = 12345

_CONVENTIONS = {c.value: c for c in Convention}
_VARIANTS = {v.value: v for v in SpectrumVariant}
_CHECKS = ("dc", "symmetry", "conjugate", "real-sum", "imag-sum", "table2", "gram", "interp")


class DataError(ValueError):
    """Malformed content in an input file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(3, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- file I/O

def _fmt(v: float) -> str:
    f = float(v)
    if f.is_integer() and abs(f) < 1e15:
        return str(int(f))
    return repr(f)


def _read_rows(path: str) -> list[list[float]]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = [line.strip() for line in fh]
    rows = [line.split(",") for line in raw if line]
    if not rows:
        raise DataError(f"{path}: no data")
    try:
        float(rows[0][0])
    except ValueError:
        rows = rows[1:]  # header
    if not rows:
        raise DataError(f"{path}: no data rows")
    width = len(rows[0])
    parsed = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DataError(f"{path}: row {i + 1} has {len(row)} fields, expected {width}")
        try:
            parsed.append([float(tok) for tok in row])
        except ValueError:
            raise DataError(f"{path}: unparseable value on row {i + 1}") from None
    return parsed


def _read_signal(path: str) -> np.ndarray:
    rows = _read_rows(path)
    width = len(rows[0])
    if width not in (2, 3):
        raise DataError(f"{path}: signal rows must be index,real[,imag]")
    data = np.asarray(rows, dtype=float)
    samples = data[:, 1].astype(complex)
    if width == 3:
        samples = samples + 1j * data[:, 2]
    return samples


def _read_spectrum(path: str) -> tuple[np.ndarray, np.ndarray]:
    rows = _read_rows(path)
    if len(rows[0]) not in (3, 5):
        raise DataError(f"{path}: spectrum rows must be bin,real,imag[,magnitude,phase]")
    data = np.asarray(rows, dtype=float)
    return data[:, 0], data[:, 1] + 1j * data[:, 2]


def _write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _signal_csv(times, samples) -> str:
    samples = np.asarray(samples)
    complex_out = bool(np.any(samples.imag != 0.0))
    lines = ["index,real,imag" if complex_out else "index,real"]
    for t, v in zip(times, samples):
        if complex_out:
            lines.append(f"{_fmt(t)},{_fmt(v.real)},{_fmt(v.imag)}")
        else:
            lines.append(f"{_fmt(t)},{_fmt(v.real)}")
    return "\n".join(lines) + "\n"


def _spectrum_rows(spectrum: Spectrum):
    for b, z in zip(spectrum.grid.values, spectrum.bins):
        yield float(b), float(z.real), float(z.imag), float(abs(z)), float(np.angle(z))


def _spectrum_csv(spectrum: Spectrum) -> str:
    lines = ["bin,real,imag,magnitude,phase"]
    for b, re, im, mag, ph in _spectrum_rows(spectrum):
        lines.append(f"{_fmt(b)},{_fmt(re)},{_fmt(im)},{_fmt(mag)},{_fmt(ph)}")
    return "\n".join(lines) + "\n"


def _json_clean(v):
    if isinstance(v, complex):
        return {"real": _json_clean(v.real), "imag": _json_clean(v.imag)}
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _spectrum_json(spectrum: Spectrum) -> str:
    rows = [
        {"bin": b, "real": re, "imag": im, "magnitude": mag, "phase": ph}
        for b, re, im, mag, ph in _spectrum_rows(spectrum)
    ]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "spectrum",
        "convention": spectrum.source_convention.value,
        "fs": spectrum.sample_rate,
        "n": spectrum.n,
        "rows": rows,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------- subcommands

def _grid_choice(name: str) -> FreqChoice:
    return FreqChoice.FAST_GRID if name == "fast" else FreqChoice.CENTERED_GRID


def _cmd_transform(args) -> int:
    conv = _CONVENTIONS[args.convention]
    if args.inverse:
        bin_values, bins = _read_spectrum(args.infile)
        v2 = np.rint(2 * bin_values).astype(np.int64)
        if np.max(np.abs(2 * bin_values - v2)) > 1e-9:
            raise DataError(f"{args.infile}: bin values must be integers or half-integers")
        if v2.size > 1 and np.any(np.diff(v2) != 2):
            raise DataError(f"{args.infile}: bin values must be unit spaced")
        fgrid = FrequencyGrid(v2.size, v2)
        spectrum = Spectrum(bins, fgrid, conv, args.fs)
        signal = inverse(spectrum)
        text = _signal_csv(signal.grid.values, signal.samples)
        _write_text(args.outfile, text)
        return 0
    samples = _read_signal(args.infile)
    signal = Signal(samples, time_grid(conv, samples.size), args.fs)
    spectrum = forward(signal, _grid_choice(args.grid))
    text = _spectrum_json(spectrum) if args.format == "json" else _spectrum_csv(spectrum)
    _write_text(args.outfile, text)
    return 0


def _cmd_convert(args) -> int:
    bin_values, bins = _read_spectrum(args.infile)
    n = bins.size
    if not np.array_equal(bin_values, np.arange(n, dtype=float)):
        raise ConventionError("convert expects a head-grid spectrum with bins 0..N-1")
    spectrum = Spectrum(bins, FrequencyGrid.ordinary(n), Convention.ORDINARY_HEAD, args.fs)
    out = odft_to_sdft(spectrum)
    text = _spectrum_json(out) if args.format == "json" else _spectrum_csv(out)
    _write_text(args.outfile, text)
    return 0


def _cmd_dtft(args) -> int:
    variant = _VARIANTS[args.variant]
    n, fs = args.N, args.fs
    fmin = -fs / 2 if args.fmin is None else args.fmin
    fmax = fs / 2 if args.fmax is None else args.fmax
    freqs = np.linspace(fmin, fmax, args.points)
    values = [rect_dtft(n, fs, float(f), variant, args.J) for f in freqs]
    if args.format == "json":
        rows = [{"f": float(f), "magnitude": abs(z), "phase": float(np.angle(z))}
                for f, z in zip(freqs, values)]
        doc = {"schema_version": SCHEMA_VERSION, "kind": "dtft", "variant": args.variant,
               "n": n, "fs": fs, "J": args.J, "rows": rows}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["f,magnitude,phase"]
        for f, z in zip(freqs, values):
            lines.append(f"{_fmt(f)},{_fmt(abs(z))},{_fmt(np.angle(z))}")
        text = "\n".join(lines) + "\n"
    _write_text(args.outfile, text)
    return 0


def _cmd_interp(args) -> int:
    samples = _read_signal(args.infile)
    n = samples.size
    signal = Signal(samples, time_grid(Convention.SYMMETRIC_ODD, n), args.fs)
    out = interpolate(signal, args.M)
    times = out.grid.values * (n / out.n)  # in original sample units
    _write_text(args.outfile, _signal_csv(times, out.samples))
    return 0


def _cmd_gibbs(args) -> int:
    report = gibbs(args.k, args.M)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "gibbs",
        "k": report.k,
        "M": report.m,
        "overshoot": report.overshoot,
        "undershoot": report.undershoot,
        "jump": report.jump,
    }
    print(json.dumps(doc, sort_keys=True))
    if args.outfile:
        dense = gibbs_interpolant(args.k, args.M)
        times = dense.grid.values / args.M
        _write_text(args.outfile, _signal_csv(times, dense.samples))
    return 0


def _cmd_matrix(args) -> int:
    conv = _CONVENTIONS[args.convention]
    mat = matrix_for(conv, _grid_choice(args.grid), args.N)
    lines = []
    for row in mat.entries:
        lines.append(",".join(f"{_fmt(z.real)},{_fmt(z.imag)}" for z in row))
    _write_text(args.outfile, "\n".join(lines) + "\n")
    print(f"gram deviation: {mat.gram_deviation():.6e}")
    return 0


# ------------------------------------------------------------ verification

def _off_bin_tones(rng, count, lo=0.03, hi=0.45) -> list[ToneParams]:
    tones = []
    for _ in range(count):
        amp = float(rng.uniform(0.5, 2.0))
        f0 = float(rng.uniform(lo, hi))
        phi = float(rng.uniform(0.3, 2.8)) * float(rng.choice([-1.0, 1.0]))
        tones.append(ToneParams(amp, f0, phi))
    return tones


def _verification_entries(seed: int) -> list[tuple[str, str, PropertyReport]]:
    entries: list[tuple[str, str, PropertyReport]] = []

    def rng_for(slot: int):
        return np.random.default_rng([seed, slot])

    # dc identity, every convention
    for slot, (conv, n) in enumerate([
        (Convention.ORDINARY_HEAD, 9), (Convention.SYMMETRIC_ODD, 9),
        (Convention.SYMMETRIC_EVEN_UNCORRECTED, 8), (Convention.SYMMETRIC_EVEN_CORRECTED, 8),
    ]):
        x = rng_for(10 + slot).standard_normal(n)
        entries.append(("dc", conv.value, dc_identity(Signal(x, time_grid(conv, n)))))

    # spectrum symmetry for even/odd real input
    for slot, (conv, n) in enumerate([
        (Convention.SYMMETRIC_ODD, 9), (Convention.SYMMETRIC_EVEN_CORRECTED, 8),
    ]):
        base = rng_for(20 + slot).standard_normal(n)
        even = (base + base[::-1]) / 2
        odd = (base - base[::-1]) / 2
        for rep in symmetry_check(Signal(even, time_grid(conv, n))):
            entries.append(("symmetry", conv.value, rep))
        for rep in symmetry_check(Signal(odd, time_grid(conv, n))):
            entries.append(("symmetry", conv.value, rep))

    # reversal/conjugation, with the head grid as negative control
    for slot, (conv, n) in enumerate([
        (Convention.SYMMETRIC_ODD, 9), (Convention.SYMMETRIC_EVEN_CORRECTED, 8),
        (Convention.ORDINARY_HEAD, 9),
    ]):
        x = rng_for(30 + slot).standard_normal(n)
        entries.append(("conjugate", conv.value, conjugate_check(Signal(x, time_grid(conv, n)))))

    # real-part summation plus its head-grid control
    n = 101
    tones = _off_bin_tones(rng_for(40), 3)
    grid = time_grid(Convention.SYMMETRIC_ODD, n)
    x = sample_tones(tones, grid.values)
    entries.append(("real-sum", "sdft-odd", real_part_sum(Signal(x, grid))))
    head = Signal(x, time_grid(Convention.ORDINARY_HEAD, n))
    entries.append(("real-sum", "odft", real_part_sum(head)))

    # imaginary-part summation and the two gamma routes
    tone = _off_bin_tones(rng_for(50), 1)[0]
    xi = sample_tones([tone], grid.values)
    for rep in imag_part_sum(Signal(xi, grid), [tone]):
        entries.append(("imag-sum", "sdft-odd", rep))
    g_c = gamma_estimate(tone.f0, n).gamma
    g_t = gamma_truncated_sum(tone.f0, n)
    entries.append(("imag-sum", "sdft-odd", PropertyReport(
        "gamma-cross-check", g_c, g_t, abs(g_c - g_t), 1e-6,
        abs(g_c - g_t) <= 1e-6, "constructive vs truncated-sum estimate")))

    # summation-identity table rows
    for rep in table2_report(_off_bin_tones(rng_for(60), 2), 101):
        entries.append(("table2", "sdft-odd", rep))
    for rep in table2_report(_off_bin_tones(rng_for(61), 2), 16):
        entries.append(("table2", "sdft-even-corrected", rep))

    # matrices: orthogonality and round trips
    for slot, (conv, n) in enumerate([
        (Convention.ORDINARY_HEAD, 8), (Convention.SYMMETRIC_ODD, 9),
        (Convention.SYMMETRIC_EVEN_UNCORRECTED, 8), (Convention.SYMMETRIC_EVEN_CORRECTED, 8),
    ]):
        for choice in (FreqChoice.FAST_GRID, FreqChoice.CENTERED_GRID):
            dev = matrix_for(conv, choice, n).gram_deviation()
            entries.append(("gram", conv.value, PropertyReport(
                f"gram-{choice.value}", dev, 0.0, dev, 1e-10,
                dev <= 1e-10, "max |M M^H - N I|")))
        rng = rng_for(70 + slot)
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        sig = Signal(x, time_grid(conv, n))
        rec = inverse(forward(sig))
        dev = float(np.max(np.abs(rec.samples - sig.samples)))
        tol = 1e-10 * float(np.max(np.abs(x)))
        entries.append(("gram", conv.value, PropertyReport(
            "round-trip", dev, 0.0, dev, tol, dev <= tol, "inverse(forward(x)) = x")))

    # interpolation: interpolant exactness, route equivalence, head-route control
    n = 9
    grid = time_grid(Convention.SYMMETRIC_ODD, n)
    x = rng_for(80).standard_normal(n)
    sig = Signal(x, grid)
    spec = sdft(sig, FreqChoice.FAST_GRID)
    vals = dfft(spec, grid.values)
    dev = float(np.max(np.abs(vals - sig.samples)))
    tol = 1e-12 * max(1.0, float(np.max(np.abs(x))))
    entries.append(("interp", "sdft-odd", PropertyReport(
        "interpolant-exactness", dev, 0.0, dev, tol, dev <= tol,
        "interpolant at integer grid times returns the samples")))
    out = interpolate(sig, 5)
    ideal = dfft(spec, out.grid.values * n / out.n)
    dev = float(np.max(np.abs(out.samples - ideal.real)))
    entries.append(("interp", "sdft-odd", PropertyReport(
        "route-equivalence", dev, 0.0, dev, 1e-10, dev <= 1e-10,
        "padding route equals strided interpolant evaluation")))
    entries.append(("interp", "odft", ordinary_route_control(square_wave(5), 5)))

    return entries


def _cmd_verify(args) -> int:
    entries = _verification_entries(args.seed)
    if args.check is not None:
        entries = [e for e in entries if e[0] == args.check]
    if args.convention is not None:
        entries = [e for e in entries if e[1] == args.convention]
    if not entries:
        print("error: no checks match the given filters", file=sys.stderr)
        return 3
    checks = []
    for check, conv, rep in entries:
        checks.append({
            "check": check,
            "convention": conv,
            "name": rep.name,
            "measured": _json_clean(rep.measured),
            "expected": _json_clean(rep.expected),
            "abs_error": _json_clean(rep.abs_error),
            "tolerance": rep.tolerance,
            "passed": rep.passed,
            "note": rep.note,
        })
    all_passed = all(c["passed"] for c in checks)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify",
        "seed": args.seed,
        "checks": checks,
        "all_passed": all_passed,
    }
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.outfile:
        _write_text(args.outfile, text)
        print(f"verify: {sum(c['passed'] for c in checks)}/{len(checks)} checks passed")
    else:
        print(text, end="")
    if not all_passed:
        for c in checks:
            if not c["passed"]:
                print(f"FAIL {c['check']}/{c['convention']}/{c['name']}: "
                      f"abs_error={c['abs_error']} tolerance={c['tolerance']}", file=sys.stderr)
        return 1
    return 0


# ------------------------------------------------------------------ parser

def _build_parser() -> _Parser:
    parser = _Parser(prog="sdft-kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    conv_names = sorted(_CONVENTIONS)

    p = sub.add_parser("transform", help="signal file -> spectrum file (or back with --inverse)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--convention", choices=conv_names, required=True)
    p.add_argument("--grid", choices=["fast", "centered"], default="fast")
    p.add_argument("--fs", type=float, default=1.0)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--inverse", action="store_true",
                   help="read a spectrum file and write the time-domain signal")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("convert", help="head-grid spectrum -> symmetric spectrum")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--to", choices=["sdft"], required=True)
    p.add_argument("--fs", type=float, default=1.0)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("dtft", help="rectangular-window spectrum samples for one variant")
    p.add_argument("--variant", choices=sorted(_VARIANTS), required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--fs", type=float, default=1.0)
    p.add_argument("--fmin", type=float, default=None)
    p.add_argument("--fmax", type=float, default=None)
    p.add_argument("--points", type=int, default=1001)
    p.add_argument("--J", type=int, default=10000)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_dtft)

    p = sub.add_parser("interp", help="interpolate an odd-length centered signal M-fold")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--fs", type=float, default=1.0)
    p.set_defaults(func=_cmd_interp)

    p = sub.add_parser("gibbs", help="square-wave overshoot experiment")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--M", type=int, default=11)
    p.add_argument("--out", dest="outfile", default=None,
                   help="also write the dense interpolant")
    p.set_defaults(func=_cmd_gibbs)

    p = sub.add_parser("verify", help="run the property suite (including negative controls)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--check", choices=_CHECKS, default=None)
    p.add_argument("--convention", choices=conv_names, default=None)
    p.add_argument("--out", dest="outfile", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("matrix", help="emit a transform matrix and its Gram deviation")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--convention", choices=conv_names, required=True)
    p.add_argument("--grid", choices=["fast", "centered"], default="fast")
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_matrix)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConventionError, ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
