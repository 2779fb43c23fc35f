"""Command-line front end.

Subcommands map one-to-one onto the CSV products: potential profiles plus a
minima summary, surface grids, spectrum tables, the closed-form-vs-numeric
verification pipeline, and raw access to the Heun evaluator.  A JSON config
(--config, by path or by the bare name of a shipped recipe) supplies base
values; flags win over file values.  Exit codes: 0 success, 1 verification
failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from .errors import (
    ComplexAnisotropy,
    ComplexDiscriminant,
    DegenerateAnisotropy,
    NoRootInWindow,
    NotAnEigenvalue,
    SpectraError,
)
from .heun import HeunParams, eval_with_residual, is_polynomial
from .model import (
    MassPair,
    ModelParams,
    anisotropy_x,
    classify_minima,
    effective_potential,
)
from .output import write_csv
from .solver import RadialGrid, discretize, eigenfunction, nearest_eigenvalue
from .spectrum import (
    SpectrumLine,
    generic_spectrum,
    ground_state,
    heun_parameters,
    n1_spectrum,
    radial_wavefunction,
)

SPECTRUM_HEADER = [
    "m1", "m2", "m", "n", "branch", "energy", "frequency", "x",
    "x_real", "frequency_positive", "discriminant_real", "nondegenerate_x",
]
VERIFY_HEADER = [
    "m1", "m2", "m", "n", "branch", "energy", "frequency",
    "numeric_energy", "rel_error", "termination_degree",
    "wavefunction_residual", "parity_closed", "parity_numeric",
    "nodes", "status", "reason",
]
MINIMA_HEADER = ["m1", "m2", "m", "minima_count", "minima_rho"]
SURFACE_HEADER = ["rho", "z", "x", "y", "veff"]
HEUN_HEADER = ["z", "value", "method", "residual"]

ENERGY_MATCH_RTOL = 1e-4           # closed form vs Sturm spectrum
WAVEFUNCTION_RESIDUAL_RTOL = 1e-6  # 5-point stencil, relative to max |V f|
GENERIC_WINDOW_HALFWIDTH = 60.0    # default energy window in units hbar^2 omega^2 / M1

_CONFIG_KEYS = {
    "command", "label", "out", "hbar", "omega", "Omega", "masses", "m", "n",
    "window", "parallel", "rho_max", "rho_points", "z_max", "z_points",
    "grid_L", "grid_N", "levels", "alpha", "beta", "gamma", "delta", "eta", "z",
}


class ConfigError(Exception):
    """Bad config file or flag combination; maps to exit code 2."""


@dataclass
class RunConfig:
    """Fully resolved run settings (file values with flag overrides applied)."""

    command: str
    label: str
    out: Path
    hbar: float = 1.0
    omega: float = 1.0
    Omega: float = 1.0
    masses: tuple[MassPair, ...] = ()
    m_values: tuple[int, ...] = ()
    n: int = 0
    window: Optional[tuple[float, float]] = None
    parallel: int = 1
    rho_max: float = 6.0
    rho_points: int = 1201
    z_max: float = 2.0 * math.pi
    z_points: int = 61
    grid_L: Optional[float] = None
    grid_N: int = 6001
    levels: tuple[int, ...] = (0, 1)
    heun_params: Optional[HeunParams] = None
    z_list: tuple[float, ...] = ()

    def threads(self) -> int:
        env = os.environ.get("HELIX_SPECTRA_THREADS")
        if env is not None:
            try:
                v = int(env)
            except ValueError:
                raise ConfigError(f"HELIX_SPECTRA_THREADS must be an integer, got {env!r}")
            if v < 1:
                raise ConfigError("HELIX_SPECTRA_THREADS must be >= 1")
            return v
        if self.parallel < 1:
            raise ConfigError("--parallel must be >= 1")
        return self.parallel

    def meta(self) -> dict:
        d: dict[str, Any] = {
            "command": self.command,
            "label": self.label,
            "hbar": self.hbar,
            "omega": self.omega,
            "Omega": self.Omega,
            "masses": [[mp.m1, mp.m2] for mp in self.masses],
            "m": list(self.m_values),
        }
        if self.command == "spectrum":
            d["n"] = self.n
            if self.window is not None:
                d["window"] = list(self.window)
        if self.command == "potential":
            d.update(rho_max=self.rho_max, rho_points=self.rho_points)
        if self.command == "surface3d":
            d.update(
                rho_max=self.rho_max, rho_points=self.rho_points,
                z_max=self.z_max, z_points=self.z_points,
            )
        if self.command == "verify":
            d.update(
                levels=list(self.levels),
                grid_L=self.grid_L if self.grid_L is not None else 12.0,
                grid_N=self.grid_N,
            )
        if self.command == "heun" and self.heun_params is not None:
            p = self.heun_params
            d["heun"] = {
                "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma,
                "delta": p.delta, "eta": p.eta,
            }
            d["z"] = list(self.z_list)
        return d


def parse_mass_spec(text: str) -> list[tuple[float, float]]:
    """Parse "M1:M2[,M1:M2...]" into float pairs."""
    pairs = []
    for part in text.split(","):
        bits = part.split(":")
        if len(bits) != 2:
            raise ConfigError(f"bad mass pair {part!r}; expected M1:M2")
        try:
            pairs.append((float(bits[0]), float(bits[1])))
        except ValueError:
            raise ConfigError(f"bad mass pair {part!r}; expected numbers")
    return pairs


def parse_m_spec(text: str) -> list[int]:
    """Parse "0..4", "0,2,3" or "2" into an integer list."""
    text = text.strip()
    rng = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if rng:
        a, b = int(rng.group(1)), int(rng.group(2))
        if b < a:
            raise ConfigError(f"empty m range {text!r}")
        return list(range(a, b + 1))
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ConfigError(f"bad m list {text!r}")


def _read_config_source(spec: str) -> tuple[str, str]:
    """Return (json text, default label) for a path or shipped recipe name."""
    path = Path(spec)
    if path.exists():
        return path.read_text(), path.stem
    if re.fullmatch(r"[a-z0-9_\-]+", spec):
        ref = resources.files("helix_spectra").joinpath("recipes", spec + ".json")
        try:
            return ref.read_text(), spec
        except FileNotFoundError:
            pass
    raise ConfigError(f"no config file or shipped recipe named {spec!r}")


def shipped_recipes() -> list[str]:
    names = []
    for entry in resources.files("helix_spectra").joinpath("recipes").iterdir():
        if entry.name.endswith(".json"):
            names.append(entry.name[: -len(".json")])
    return sorted(names)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConfigError(message)


def _as_float(raw: Any, key: str) -> float:
    _require(isinstance(raw, (int, float)) and not isinstance(raw, bool), f"{key} must be a number")
    return float(raw)


def _as_int(raw: Any, key: str) -> int:
    _require(isinstance(raw, int) and not isinstance(raw, bool), f"{key} must be an integer")
    return int(raw)


def build_config(command: str, args: argparse.Namespace) -> RunConfig:
    """Merge config file (if any) with flags; flags win.  Validates everything."""
    base: dict[str, Any] = {}
    label = command
    if args.config:
        text, label = _read_config_source(args.config)
        try:
            base = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}")
        _require(isinstance(base, dict), "config root must be a JSON object")
        unknown = set(base) - _CONFIG_KEYS
        _require(not unknown, f"unknown config keys: {', '.join(sorted(unknown))}")
        if "command" in base:
            _require(
                base["command"] == command,
                f"config is for subcommand {base['command']!r}, not {command!r}",
            )
    if isinstance(base.get("label"), str) and base["label"]:
        label = base["label"]

    cfg = RunConfig(command=command, label=label, out=Path("."))

    out = args.out if args.out is not None else base.get("out")
    if out is not None:
        _require(isinstance(out, (str, Path)), "out must be a path string")
        cfg.out = Path(out)

    for key in ("hbar", "omega", "Omega"):
        flag = getattr(args, key)
        if flag is not None:
            setattr(cfg, key, float(flag))
        elif key in base:
            setattr(cfg, key, _as_float(base[key], key))

    raw_masses: list[tuple[float, float]] = []
    if args.masses is not None:
        raw_masses = parse_mass_spec(args.masses)
    elif "masses" in base:
        _require(
            isinstance(base["masses"], list) and base["masses"],
            "masses must be a nonempty list of [M1, M2] pairs",
        )
        for pair in base["masses"]:
            _require(
                isinstance(pair, list) and len(pair) == 2,
                f"bad masses entry {pair!r}; expected [M1, M2]",
            )
            raw_masses.append((_as_float(pair[0], "M1"), _as_float(pair[1], "M2")))
    elif command != "heun":
        raw_masses = [(1.0, 1.0)]
    try:
        cfg.masses = tuple(MassPair(a, b) for a, b in raw_masses)
    except ValueError as exc:
        raise ConfigError(str(exc))

    if args.m_spec is not None:
        cfg.m_values = tuple(parse_m_spec(args.m_spec))
    elif "m" in base:
        _require(isinstance(base["m"], list), "m must be a list of integers")
        cfg.m_values = tuple(_as_int(v, "m entry") for v in base["m"])
    else:
        # the m = 1 surface duplicates the m = 0 shape, so skip it by default
        cfg.m_values = (0, 2, 3, 4) if command == "surface3d" else (0, 1, 2, 3, 4)
    if command != "heun":
        _require(len(cfg.m_values) > 0, "m list must not be empty")

    if args.n is not None:
        cfg.n = args.n
    elif "n" in base:
        cfg.n = _as_int(base["n"], "n")
    _require(cfg.n >= 0, "n must be >= 0")

    if "window" in base:
        w = base["window"]
        _require(
            isinstance(w, list) and len(w) == 2,
            "window must be [lo, hi]",
        )
        cfg.window = (_as_float(w[0], "window lo"), _as_float(w[1], "window hi"))

    if args.parallel is not None:
        cfg.parallel = args.parallel
    elif "parallel" in base:
        cfg.parallel = _as_int(base["parallel"], "parallel")

    for key in ("rho_max", "z_max"):
        if key in base:
            v = _as_float(base[key], key)
            _require(v > 0, f"{key} must be positive")
            setattr(cfg, key, v)
    for key in ("rho_points", "z_points"):
        if key in base:
            v = _as_int(base[key], key)
            _require(v >= 1, f"{key} must be >= 1")
            setattr(cfg, key, v)

    if args.grid_L is not None:
        cfg.grid_L = args.grid_L
    elif "grid_L" in base:
        cfg.grid_L = _as_float(base["grid_L"], "grid_L")
    if cfg.grid_L is not None:
        _require(cfg.grid_L > 0, "grid_L must be positive")
    if args.grid_N is not None:
        cfg.grid_N = args.grid_N
    elif "grid_N" in base:
        cfg.grid_N = _as_int(base["grid_N"], "grid_N")
    _require(cfg.grid_N >= 3 and cfg.grid_N % 2 == 1, "grid_N must be odd and >= 3")

    if "levels" in base:
        _require(isinstance(base["levels"], list) and base["levels"], "levels must be a nonempty list")
        cfg.levels = tuple(_as_int(v, "levels entry") for v in base["levels"])
        _require(all(v in (0, 1) for v in cfg.levels), "levels entries must be 0 or 1")

    if command == "heun":
        missing = [k for k in ("alpha", "beta", "gamma", "delta", "eta") if k not in base]
        _require(not missing, f"heun config needs keys: {', '.join(missing)}")
        cfg.heun_params = HeunParams(
            alpha=_as_float(base["alpha"], "alpha"),
            beta=_as_float(base["beta"], "beta"),
            gamma=_as_float(base["gamma"], "gamma"),
            delta=_as_float(base["delta"], "delta"),
            eta=_as_float(base["eta"], "eta"),
        )
        _require(isinstance(base.get("z"), list) and base["z"], "heun config needs a nonempty z list")
        cfg.z_list = tuple(_as_float(v, "z entry") for v in base["z"])

    return cfg


def _mass_tag(value: float) -> str:
    return f"{value:g}".replace("-", "m").replace(".", "p")


def _pair_tag(mp: MassPair) -> str:
    return f"{_mass_tag(mp.m1)}_{_mass_tag(mp.m2)}"


def _map_cells(cfg: RunConfig, work, cells: list) -> list:
    """Evaluate work(cell) over cells, preserving input order."""
    threads = cfg.threads()
    if threads == 1 or len(cells) <= 1:
        return [work(c) for c in cells]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, cells))


def cmd_potential(cfg: RunConfig) -> int:
    grid = np.linspace(-cfg.rho_max, cfg.rho_max, cfg.rho_points)

    def profile(cell):
        mp, m = cell
        p = ModelParams(masses=mp, m=m, hbar=cfg.hbar, omega=cfg.omega, Omega=cfg.Omega)
        return effective_potential(p, grid)

    cells = [(mp, m) for mp in cfg.masses for m in cfg.m_values]
    values = dict(zip(cells, _map_cells(cfg, profile, cells)))

    meta = cfg.meta()
    minima_rows = []
    for mp in cfg.masses:
        header = ["rho"] + [f"veff_m{m}".replace("-", "m") for m in cfg.m_values]
        columns = [grid] + [values[(mp, m)] for m in cfg.m_values]
        rows = list(zip(*columns))
        write_csv(cfg.out / f"{cfg.label}_potential_{_pair_tag(mp)}.csv", header, rows, meta)
        for m in cfg.m_values:
            mins = classify_minima(np.column_stack([grid, values[(mp, m)]]))
            minima_rows.append([
                mp.m1, mp.m2, m, len(mins),
                ";".join(f"{r:.17g}" for r, _ in mins),
            ])
    write_csv(cfg.out / f"{cfg.label}_minima.csv", MINIMA_HEADER, minima_rows, meta)
    return 0


def cmd_surface3d(cfg: RunConfig) -> int:
    rho = np.linspace(-cfg.rho_max, cfg.rho_max, cfg.rho_points)
    z = np.linspace(0.0, cfg.z_max, cfg.z_points)
    meta = cfg.meta()

    def build(cell):
        mp, m = cell
        p = ModelParams(masses=mp, m=m, hbar=cfg.hbar, omega=cfg.omega, Omega=cfg.Omega)
        v = effective_potential(p, rho)
        rows = []
        for i, r in enumerate(rho):
            for zj in z:
                ang = cfg.omega * zj
                rows.append([r, zj, r * math.cos(ang), r * math.sin(ang), v[i]])
        return rows

    cells = [(mp, m) for mp in cfg.masses for m in cfg.m_values]
    for cell, rows in zip(cells, _map_cells(cfg, build, cells)):
        mp, m = cell
        name = f"{cfg.label}_surface_{_pair_tag(mp)}_m{_mass_tag(m)}.csv"
        write_csv(cfg.out / name, SURFACE_HEADER, rows, meta)
    return 0


def _invalid_row(mp: MassPair, m: int, n: int, x: Optional[float], **flags) -> list:
    return [
        mp.m1, mp.m2, m, n, None, None, None, x,
        flags.get("x_real"), flags.get("frequency_positive"),
        flags.get("discriminant_real"), flags.get("nondegenerate_x"),
    ]


def _line_row(mp: MassPair, line: SpectrumLine, x: float) -> list:
    return [
        mp.m1, mp.m2, line.m, line.n, line.branch, line.energy, line.frequency, x,
        True, line.frequency > 0, True, True,
    ]


def spectrum_rows(cfg: RunConfig, mp: MassPair, m: int) -> list[list]:
    """Rows for one (mass pair, m) cell; invalid states keep their flag trail."""
    n = cfg.n
    try:
        x = anisotropy_x(mp)
    except ComplexAnisotropy:
        return [_invalid_row(mp, m, n, None, x_real=False)]
    if n == 0:
        return [_line_row(mp, ground_state(mp, m, omega=cfg.omega, hbar=cfg.hbar), x)]
    if n == 1:
        try:
            lo, hi = n1_spectrum(mp, m, omega=cfg.omega, hbar=cfg.hbar)
        except DegenerateAnisotropy:
            return [_invalid_row(mp, m, n, x, x_real=True, nondegenerate_x=False)]
        except ComplexDiscriminant:
            return [_invalid_row(
                mp, m, n, x, x_real=True, nondegenerate_x=True, discriminant_real=False,
            )]
        return [_line_row(mp, lo, x), _line_row(mp, hi, x)]
    window = cfg.window
    if window is None:
        half = GENERIC_WINDOW_HALFWIDTH * cfg.hbar**2 * cfg.omega**2 / mp.m1
        window = (-half, half)
    p = ModelParams(masses=mp, m=m, hbar=cfg.hbar, omega=cfg.omega, Omega=cfg.Omega)
    try:
        lines = generic_spectrum(p, n, window)
    except NoRootInWindow:
        return []
    return [_line_row(mp, line, x) for line in lines]


def cmd_spectrum(cfg: RunConfig) -> int:
    cells = [(mp, m) for mp in cfg.masses for m in cfg.m_values]
    blocks = _map_cells(cfg, lambda cell: spectrum_rows(cfg, *cell), cells)
    rows = [row for block in blocks for row in block]
    write_csv(cfg.out / f"{cfg.label}_spectrum.csv", SPECTRUM_HEADER, rows, cfg.meta())
    return 0


def _closed_form_lines(mp: MassPair, m: int, n: int, cfg: RunConfig):
    """(lines, skip_reason): closed-form lines for the cell or why there are none."""
    if n == 0:
        return [ground_state(mp, m, omega=cfg.omega, hbar=cfg.hbar)], None
    try:
        return list(n1_spectrum(mp, m, omega=cfg.omega, hbar=cfg.hbar)), None
    except DegenerateAnisotropy:
        return [], "anisotropy parameter degenerate (x = 2)"
    except ComplexDiscriminant:
        return [], "state not allowed (negative discriminant)"


def _stencil_residual(p: ModelParams, rho: np.ndarray, E: float, f: np.ndarray) -> float:
    """Relative Schrodinger residual of sampled f via a 5-point second derivative."""
    h = float(rho[1] - rho[0])
    v = effective_potential(p, rho)
    f2 = (-f[4:] + 16.0 * f[3:-1] - 30.0 * f[2:-2] + 16.0 * f[1:-3] - f[:-4]) / (12.0 * h * h)
    mid = slice(2, -2)
    residual = -p.hbar**2 / (2.0 * p.masses.m1) * f2 + (v[mid] - E) * f[mid]
    scale = float(np.max(np.abs(v * f)))
    if not np.isfinite(scale) or scale == 0.0:
        return math.inf
    return float(np.max(np.abs(residual))) / scale


def _identify_parity(p: ModelParams, line) -> tuple[str, float]:
    """Which parity branch solves the radial equation at this line.

    Both branches are tried on a short symmetric grid; only the consistent
    one stays near round-off.  Kept short because the wrong-parity branch is
    non-terminating and grows exponentially with |rho|.
    """
    rho = np.linspace(-2.0, 2.0, 801)
    scores = {}
    for par in ("even", "odd"):
        try:
            sample = radial_wavefunction(p, line, par, rho)
            scores[par] = _stencil_residual(p, rho, line.energy, sample.values)
        except SpectraError:
            scores[par] = math.inf
    best = min(scores, key=scores.get)
    return best, scores[best]


def cmd_verify(cfg: RunConfig) -> int:
    L = cfg.grid_L if cfg.grid_L is not None else 12.0
    grid = RadialGrid(L=L, N=cfg.grid_N)
    rows = []
    checked = passed = failed = skipped = 0

    def emit(status, mp, m, n, branch, reason="", **vals):
        rows.append([
            mp.m1, mp.m2, m, n, branch,
            vals.get("energy"), vals.get("frequency"), vals.get("numeric_energy"),
            vals.get("rel_error"), vals.get("termination_degree"),
            vals.get("wavefunction_residual"), vals.get("parity_closed"),
            vals.get("parity_numeric"), vals.get("nodes"), status, reason,
        ])
        detail = " ".join(
            f"{k}={format(v, '.6g') if isinstance(v, float) else v}"
            for k, v in vals.items() if v is not None
        )
        tag = f"M1={mp.m1:g} M2={mp.m2:g} m={m} n={n}" + (f" {branch}" if branch else "")
        print(f"{status.upper():4s} {tag} {detail}" + (f" ({reason})" if reason else ""))

    for mp in cfg.masses:
        try:
            anisotropy_x(mp)
        except ComplexAnisotropy:
            for m in cfg.m_values:
                for n in cfg.levels:
                    skipped += 1
                    emit("skip", mp, m, n, None, reason="anisotropy parameter complex")
            continue
        for m in cfg.m_values:
            for n in cfg.levels:
                lines, reason = _closed_form_lines(mp, m, n, cfg)
                if not lines:
                    skipped += 1
                    emit("skip", mp, m, n, None, reason=reason)
                    continue
                for line in lines:
                    if line.frequency <= 0:
                        skipped += 1
                        emit(
                            "skip", mp, m, n, line.branch,
                            reason="constrained Omega <= 0",
                            energy=line.energy, frequency=line.frequency,
                        )
                        continue
                    checked += 1
                    p = ModelParams(
                        masses=mp, m=m, hbar=cfg.hbar, omega=cfg.omega, Omega=line.frequency,
                    )
                    op = discretize(p, grid)
                    e_num = nearest_eigenvalue(op, line.energy)
                    rel = abs(e_num - line.energy) / max(abs(line.energy), 1e-300)
                    degree = is_polynomial(heun_parameters(p, line.energy).params)
                    parity_closed, _ = _identify_parity(p, line)
                    sample = radial_wavefunction(p, line, parity_closed, grid.rho())
                    res = _stencil_residual(p, grid.rho(), line.energy, sample.values)
                    try:
                        pair = eigenfunction(op, e_num)
                        parity_num, nodes = pair.parity, pair.nodes
                    except NotAnEigenvalue:
                        parity_num, nodes = "none", None
                    ok = (
                        rel <= ENERGY_MATCH_RTOL
                        and degree == line.n
                        and res <= WAVEFUNCTION_RESIDUAL_RTOL
                        and parity_num == parity_closed
                    )
                    why = ""
                    if not ok:
                        bits = []
                        if rel > ENERGY_MATCH_RTOL:
                            bits.append("energy mismatch")
                        if degree != line.n:
                            bits.append("termination failure")
                        if res > WAVEFUNCTION_RESIDUAL_RTOL:
                            bits.append("wavefunction residual")
                        if parity_num != parity_closed:
                            bits.append("parity mismatch")
                        why = "; ".join(bits)
                    passed += ok
                    failed += not ok
                    emit(
                        "pass" if ok else "fail", mp, m, n, line.branch, reason=why,
                        energy=line.energy, frequency=line.frequency,
                        numeric_energy=e_num, rel_error=rel, termination_degree=degree,
                        wavefunction_residual=res, parity_closed=parity_closed,
                        parity_numeric=parity_num, nodes=nodes,
                    )

    write_csv(cfg.out / f"{cfg.label}_verify.csv", VERIFY_HEADER, rows, cfg.meta())
    print(f"{checked} checked, {passed} passed, {failed} failed, {skipped} skipped")
    return 1 if failed else 0


def cmd_heun(cfg: RunConfig) -> int:
    if any(z == 1.0 for z in cfg.z_list):
        raise ConfigError("z = 1 is a singular point of the equation")
    rows = []
    for z in cfg.z_list:
        value, method, residual = eval_with_residual(cfg.heun_params, z)
        rows.append([z, value, method, residual])
    write_csv(cfg.out / f"{cfg.label}_heun.csv", HEUN_HEADER, rows, cfg.meta())
    return 0


_COMMANDS = {
    "potential": cmd_potential,
    "surface3d": cmd_surface3d,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "heun": cmd_heun,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config path or shipped recipe name")
    common.add_argument("--out", help="output directory (default: current)")
    common.add_argument("--hbar", type=float)
    common.add_argument("--omega", type=float, help="twist rate of the surface")
    common.add_argument("--Omega", type=float, help="oscillator frequency")
    common.add_argument("--masses", help='mass pairs "M1:M2[,M1:M2...]"')
    common.add_argument("--m", dest="m_spec", help='angular numbers "0..4" or "0,2,3"')
    common.add_argument("--n", type=int, help="level index (0, 1 closed form; higher generic)")
    common.add_argument("--grid-L", dest="grid_L", type=float, help="numeric half-width")
    common.add_argument("--grid-N", dest="grid_N", type=int, help="numeric grid points (odd)")
    common.add_argument("--parallel", type=int, help="worker threads for independent cells")

    parser = argparse.ArgumentParser(
        prog="helix-spectra",
        description="Spectra and effective potentials on a twisted minimal surface.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("potential", parents=[common], help="radial potential profiles + minima summary")
    sub.add_parser("surface3d", parents=[common], help="surface grid dump for 3D plots")
    sub.add_parser("spectrum", parents=[common], help="quantized (E, Omega) tables")
    sub.add_parser("verify", parents=[common], help="cross-check closed forms against the numeric solver")
    sub.add_parser("heun", parents=[common], help="evaluate the series engine on a z list")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = build_config(args.subcommand, args)
        return _COMMANDS[args.subcommand](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpectraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
