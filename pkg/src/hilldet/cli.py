"""Command-line front end: ``hilldet {spectrum,sweep,wavefunction,asymptotics,verify}``.

Every run writes exactly one artifact (table, CSV or JSON) to stdout or
``--output``.  Warnings go to stderr.  Exit status is 0 on success, 1 on a
numerical failure and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import math
import sys
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .asymptotics import extract_g_sequence, fit_growth_rate, growth_csv
from .eigen import ConvergenceError
from .hill import assemble
from .oscillator import OscillatorParams, Regime, classify_dominance
from .series import generate_coefficients
from .spectrum import SpectrumError, compute_spectrum, convergence_sweep
from .wavefunction import ShootingError, TrustRadiusError, extract_wavefunction
from . import checks

__all__ = ["Mode", "OutputFormat", "RunConfig", "parse_args", "run", "main"]


class Mode(enum.Enum):
    SPECTRUM = "spectrum"
    SWEEP = "sweep"
    WAVEFUNCTION = "wavefunction"
    ASYMPTOTICS = "asymptotics"
    VERIFY = "verify"


class OutputFormat(enum.Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    mode: Mode
    params: OscillatorParams
    n: int = 35
    n_list: tuple = ()
    levels: int = 5
    level: int = 0
    grid: tuple | None = None
    energy: float = 3.0
    window: tuple = (1000, 4000)
    format: OutputFormat = OutputFormat.TABLE
    output_path: str | None = None
    dump_matrix: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _n_list(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("oscillator")
    g.add_argument("--beta", type=float, default=1.0, help="coupling of i*beta*x^3")
    g.add_argument("--c", type=float, default=1.0, help="coupling of c*x^2")
    g.add_argument("--delta", type=float, default=1.0, help="coupling of i*delta*x")
    g.add_argument("--s", type=float, default=2.0, help="Gaussian scale of the ansatz")
    o = common.add_argument_group("output")
    o.add_argument("--format", choices=[f.value for f in OutputFormat], default="table")
    o.add_argument("--output", metavar="PATH", help="write the artifact here instead of stdout")

    parser = _Parser(prog="hilldet", description="Hill-determinant solver for the PT-symmetric quartic oscillator")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="mode", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common], help="lowest levels at one truncation")
    p.add_argument("--n", type=int, default=35)
    p.add_argument("--levels", type=int, default=5)
    p.add_argument("--dump-matrix", metavar="PATH", help="also write the Hill matrix as CSV")

    p = sub.add_parser("sweep", parents=[common], help="convergence over several truncations")
    p.add_argument("--n-list", type=_n_list, required=True)
    p.add_argument("--levels", type=int, default=5)

    p = sub.add_parser("wavefunction", parents=[common], help="psi(x) of one level on a grid")
    p.add_argument("--n", type=int, default=35)
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--x-min", type=float, required=True)
    p.add_argument("--x-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)

    p = sub.add_parser("asymptotics", parents=[common], help="growth law of the Taylor coefficients")
    p.add_argument("--energy", type=float, default=3.0, help="trial energy (need not be a level)")
    p.add_argument("--n-lo", type=int, default=1000)
    p.add_argument("--n-hi", type=int, default=4000)

    sub.add_parser("verify", parents=[common], help="run the built-in consistency checks")
    return parser


def parse_args(argv) -> RunConfig:
    parser = _build_parser()
    ns = parser.parse_args(list(argv))
    mode = Mode(ns.mode)
    problems = []
    for name in ("beta", "c", "delta", "s"):
        if not math.isfinite(getattr(ns, name)):
            problems.append(f"--{name} must be finite")
    if math.isfinite(ns.s) and ns.s <= 0:
        problems.append("--s must be positive")

    kw = {}
    if mode in (Mode.SPECTRUM, Mode.WAVEFUNCTION):
        if ns.n < 2:
            problems.append("--n must be >= 2")
        kw["n"] = ns.n
    if mode is Mode.SPECTRUM:
        if not 1 <= ns.levels <= max(ns.n, 1):
            problems.append("--levels must be between 1 and --n")
        kw["levels"] = ns.levels
        kw["dump_matrix"] = ns.dump_matrix
    if mode is Mode.SWEEP:
        nl = ns.n_list
        if not nl:
            problems.append("--n-list is empty")
        elif any(b <= a for a, b in zip(nl, nl[1:])):
            problems.append("--n-list must be strictly increasing")
        elif nl[0] < 2:
            problems.append("--n-list entries must be >= 2")
        if ns.levels < 1 or (nl and ns.levels > nl[0]):
            problems.append("--levels must be between 1 and the smallest N")
        kw["n_list"] = nl
        kw["levels"] = ns.levels
    if mode is Mode.WAVEFUNCTION:
        if not 0 <= ns.level < max(ns.n, 1):
            problems.append("--level must satisfy 0 <= level < n")
        if not ns.x_min < ns.x_max:
            problems.append("--x-min must be below --x-max")
        if ns.points < 2:
            problems.append("--points must be >= 2")
        kw["level"] = ns.level
        kw["grid"] = (ns.x_min, ns.x_max, ns.points)
    if mode is Mode.ASYMPTOTICS:
        if ns.n_lo < 500:
            problems.append("--n-lo must be >= 500")
        if ns.n_hi - ns.n_lo < 200:
            problems.append("--n-hi must exceed --n-lo by at least 200")
        if not math.isfinite(ns.energy):
            problems.append("--energy must be finite")
        kw["energy"] = ns.energy
        kw["window"] = (ns.n_lo, ns.n_hi)
    if problems:
        parser.error("; ".join(problems))

    params = OscillatorParams(beta=ns.beta, c=ns.c, delta=ns.delta, s=ns.s)
    return RunConfig(
        mode=mode,
        params=params,
        format=OutputFormat(ns.format),
        output_path=ns.output,
        **kw,
    )


# --- formatting -------------------------------------------------------------


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _tab(x: float) -> str:
    return "nan" if not math.isfinite(x) else f"{x:.6f}"


def _cplx(z) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _csv(header, rows) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return out.getvalue()


@dataclass
class _Artifact:
    results: dict
    table: str = ""
    csv: str = ""
    diagnostics: list = field(default_factory=list)
    ok: bool = True


def _params_json(p: OscillatorParams) -> dict:
    return {"beta": float(p.beta), "c": float(p.c), "delta": float(p.delta), "s": float(p.s)}


# --- modes --------------------------------------------------------------------


def _level_label(z, flag) -> str:
    return _tab(z.real) if flag else f"{z.real:.6f}{z.imag:+.6f}i"


def _spectrum(cfg: RunConfig) -> _Artifact:
    sp = compute_spectrum(cfg.params, cfg.n, cfg.levels)
    diags = [
        f"level {i} is complex ({z.real:.6g}{z.imag:+.6g}i): PT symmetry broken or truncation artifact"
        for i, (z, f) in enumerate(zip(sp.levels, sp.reality_flags))
        if not f
    ]
    if cfg.dump_matrix:
        with open(cfg.dump_matrix, "w", encoding="utf-8", newline="") as fh:
            assemble(cfg.params, cfg.n).to_csv(fh)
    header = ["N"] + [f"E_{i}" for i in range(cfg.levels)]
    table = _table(header, [[cfg.n] + [_level_label(z, f) for z, f in zip(sp.levels, sp.reality_flags)]])
    rows = [[i, _num(z.real), _num(z.imag), int(f)] for i, (z, f) in enumerate(zip(sp.levels, sp.reality_flags))]
    results = {
        "n": cfg.n,
        "levels": [_cplx(z) for z in sp.levels],
        "reality_flags": [bool(f) for f in sp.reality_flags],
    }
    return _Artifact(results, table, _csv(["level", "re", "im", "real"], rows), diags)


def _sweep(cfg: RunConfig) -> _Artifact:
    rep = convergence_sweep(cfg.params, cfg.n_list, cfg.levels)
    diags = []
    for sp in rep.spectra:
        for i, (z, f) in enumerate(zip(sp.levels, sp.reality_flags)):
            if not f:
                diags.append(f"N={sp.n}: level {i} is complex ({z.real:.6g}{z.imag:+.6g}i)")
    header = ["N"] + [f"E_{i}" for i in range(cfg.levels)]
    trows = [[sp.n] + [_level_label(z, f) for z, f in zip(sp.levels, sp.reality_flags)] for sp in rep.spectra]
    crows = [
        [sp.n, i, _num(z.real), _num(z.imag)]
        for sp in rep.spectra
        for i, z in enumerate(sp.levels)
    ]
    results = {
        "n_values": list(rep.n_values),
        "energies": [[_cplx(z) for z in sp.levels] for sp in rep.spectra],
        "deltas": [[float(d) for d in row] for row in rep.deltas],
        "converged_digits": [int(d) for d in rep.converged_digits],
    }
    return _Artifact(results, _table(header, trows), _csv(["N", "level", "re", "im"], crows), diags)


def _wavefunction(cfg: RunConfig) -> _Artifact:
    wf = extract_wavefunction(cfg.params, cfg.n, cfg.level)
    x0, x1, npts = cfg.grid
    xs = np.linspace(x0, x1, npts)
    values = []
    refused = 0
    for x in xs:
        try:
            values.append(wf(float(x)))
        except TrustRadiusError:
            values.append(None)
            refused += 1
    diags = []
    if refused:
        diags.append(
            f"{refused} of {npts} grid points lie beyond the trust radius "
            f"{wf.trust_radius:.6g} and are reported as nan"
        )
    crow, trow, jgrid = [], [], []
    for x, v in zip(xs, values):
        if v is None:
            crow.append([_num(x), "nan", "nan", "nan"])
            trow.append([_tab(x), "nan", "nan", "nan"])
            jgrid.append({"x": float(x), "psi": None})
        else:
            crow.append([_num(x), _num(v.real), _num(v.imag), _num(abs(v))])
            trow.append([_tab(x), _tab(v.real), _tab(v.imag), _tab(abs(v))])
            jgrid.append({"x": float(x), "psi": _cplx(v)})
    header = ["x", "re_psi", "im_psi", "abs_psi"]
    results = {
        "n": cfg.n,
        "level": cfg.level,
        "energy": _cplx(wf.energy),
        "zeta": wf.zeta,
        "trust_radius": wf.trust_radius,
        "coefficients": [float(h) for h in wf.coefficients],
        "grid": jgrid,
    }
    return _Artifact(results, _table(header, trow), _csv(header, crow), diags)


def _asymptotics(cfg: RunConfig) -> _Artifact:
    lo, hi = cfg.window
    coeffs = generate_coefficients(cfg.params, cfg.energy, 1.0, 0.0, hi)
    y = extract_g_sequence(coeffs)
    diags = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        fit = fit_growth_rate(y, (lo, hi), cfg.params)
    diags += [str(w.message) for w in caught]
    dom = classify_dominance(cfg.params)
    results = {
        "energy": _cplx(cfg.energy),
        "window": [lo, hi],
        "regime": dom.regime.value,
        "threshold": dom.threshold,
        "dominant_p": sorted(dom.dominant_p),
        "fitted_gamma": fit.fitted_gamma,
        "fitted_subleading": fit.fitted_subleading,
        "fitted_constant": fit.fitted_constant,
        "residual_rms": fit.residual_rms,
        "predicted_gamma": None if math.isnan(fit.predicted_gamma) else fit.predicted_gamma,
    }
    rows = [
        ["regime", dom.regime.value],
        ["dominant_p", ",".join(map(str, sorted(dom.dominant_p)))],
        ["fitted_gamma", _tab(fit.fitted_gamma)],
        ["predicted_gamma", _tab(fit.predicted_gamma)],
        ["fitted_subleading", _tab(fit.fitted_subleading)],
        ["residual_rms", _tab(fit.residual_rms)],
    ]
    return _Artifact(results, _table(["quantity", "value"], rows), growth_csv(y, fit), diags)


def _verify(cfg: RunConfig) -> _Artifact:
    outcomes = checks.run_all()
    rows = [[o.name, "PASS" if o.passed else "FAIL", o.detail] for o in outcomes]
    results = {"checks": [{"name": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes]}
    art = _Artifact(results, _table(["check", "status", "detail"], rows), _csv(["check", "status", "detail"], rows))
    art.ok = all(o.passed for o in outcomes)
    return art


_DISPATCH = {
    Mode.SPECTRUM: _spectrum,
    Mode.SWEEP: _sweep,
    Mode.WAVEFUNCTION: _wavefunction,
    Mode.ASYMPTOTICS: _asymptotics,
    Mode.VERIFY: _verify,
}


def _render(cfg: RunConfig, art: _Artifact) -> str:
    if cfg.format is OutputFormat.TABLE:
        return art.table
    if cfg.format is OutputFormat.CSV:
        return art.csv
    doc = {
        "version": __version__,
        "mode": cfg.mode.value,
        "params": _params_json(cfg.params),
        "results": art.results,
        "diagnostics": art.diagnostics,
    }
    return json.dumps(doc, indent=2, allow_nan=False)


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    dom = classify_dominance(config.params)
    pre = []
    if config.mode is not Mode.VERIFY and dom.regime is not Regime.ABOVE_THRESHOLD:
        pre.append(
            f"s = {float(config.params.s):g} is not above |beta|/(4 sqrt 3) = {dom.threshold:.6g} "
            f"(regime {dom.regime.value}); the truncation is not backed by two-term dominance"
        )
    try:
        art = _DISPATCH[config.mode](config)
    except (SpectrumError, ConvergenceError, ShootingError, ValueError, np.linalg.LinAlgError) as exc:
        print(f"hilldet: numerical failure: {exc}", file=stderr)
        return 1
    art.diagnostics = pre + art.diagnostics
    for msg in art.diagnostics:
        print(f"hilldet: warning: {msg}", file=stderr)
    text = _render(config, art)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0 if art.ok else 1


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
