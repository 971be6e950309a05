"""Command-line surface: spectrum tables, mode profiles, verification suites.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage or specification error (including degenerate-family requests, which
carry a fallback hint).  Output is CSV or JSON; complex numbers serialize as
[re, im] pairs, profile CSVs carry their metadata in '# key=value' header
lines and round-trip through read_profile_csv.
"""

from __future__ import annotations

import dataclasses
import json
import math
import sys

import click
import numpy as np

from . import modes, verify
from .errors import CurvedMaxwellError, DegenerateElimination
from .geometry import SpaceKind

SPACES = {"s3": SpaceKind.SPHERICAL, "elliptic": SpaceKind.ELLIPTIC,
          "h3": SpaceKind.HYPERBOLIC, "flat": SpaceKind.FLAT}


@dataclasses.dataclass
class RunConfig:
    residual_tol: float = 1e-9
    grid: int = 512
    format: str = "csv"
    out: str | None = None
    r_min: float | None = None
    r_max: float | None = None


def load_config(path: str | None) -> RunConfig:
    cfg = RunConfig()
    if not path:
        return cfg
    casts = {"residual_tol": float, "grid": int, "format": str,
             "out": str, "r_min": float, "r_max": float}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key in casts:
                setattr(cfg, key, casts[key](value.strip()))
    return cfg


def _merge(cfg: RunConfig, **flags) -> RunConfig:
    for key, value in flags.items():
        if value is not None:
            setattr(cfg, key, value)
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


# ---------------------------------------------------------------------------
# Profile serialization
# ---------------------------------------------------------------------------

def profile_header(solution: modes.ModeSolution, report: verify.ResidualReport,
                   grid: np.ndarray) -> dict:
    spec = solution.spec
    header = {
        "space": spec.space.value,
        "m": spec.m,
        "k": spec.k if not isinstance(spec.k, complex) else [spec.k.real, spec.k.imag],
        "omega": spec.omega,
        "branch": spec.branch.value,
        "convention": solution.convention,
        "grid": int(grid.size),
        "r_min": float(grid[0]),
        "r_max": float(grid[-1]),
        "residual_first_order": report.first_order,
        "residual_second_order": report.second_order,
    }
    if spec.n is not None:
        header["n"] = spec.n
    return header


def write_profile_csv(solution: modes.ModeSolution, grid: np.ndarray,
                      report: verify.ResidualReport) -> str:
    f, _ = solution.evaluate(grid)
    lines = ["# curved-maxwell-profile v1"]
    for key, value in profile_header(solution, report, grid).items():
        lines.append(f"# {key}={value!r}" if isinstance(value, str) else f"# {key}={value}")
    lines.append("r,f1_re,f1_im,f2_re,f2_im,f3_re,f3_im")
    for i, r in enumerate(grid):
        row = [f"{r:.17g}"]
        for comp in range(3):
            row.append(f"{f[comp, i].real:.17g}")
            row.append(f"{f[comp, i].imag:.17g}")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def write_profile_json(solution: modes.ModeSolution, grid: np.ndarray,
                       report: verify.ResidualReport) -> str:
    f, _ = solution.evaluate(grid)
    payload = dict(profile_header(solution, report, grid))
    payload["r"] = [float(v) for v in grid]
    for comp, name in enumerate(("f1", "f2", "f3")):
        payload[name] = [[float(v.real), float(v.imag)] for v in f[comp]]
    return json.dumps(payload, indent=1) + "\n"


def read_profile_csv(path: str) -> tuple[dict, np.ndarray, np.ndarray]:
    """Parse an emitted profile back into (header, r, f)."""
    header: dict = {}
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    try:
                        header[key.strip()] = json.loads(value.strip().replace("'", '"'))
                    except json.JSONDecodeError:
                        header[key.strip()] = value.strip().strip("'")
                continue
            if not line or line.startswith("r,"):
                continue
            rows.append([float(v) for v in line.split(",")])
    data = np.asarray(rows, dtype=float)
    r = data[:, 0]
    f = np.stack([data[:, 1 + 2 * c] + 1j * data[:, 2 + 2 * c] for c in range(3)])
    return header, r, f


def reconstruct_mode(header: dict) -> modes.ModeSolution:
    """Rebuild the closed-form mode a profile file describes."""
    space = SPACES[header["space"]]
    if space is SpaceKind.HYPERBOLIC:
        return modes.construct_h3_general(int(header["m"]), float(header["k"]),
                                          float(header["omega"]))
    return modes.construct_s3(int(header["m"]), int(header["k"]), int(header["n"]),
                              space=space)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@click.group()
def main() -> None:
    """Electromagnetic modes on constant-curvature backgrounds."""


@main.command()
@click.option("--space", type=click.Choice(sorted(SPACES)), default="s3")
@click.option("--m-max", type=int, default=2)
@click.option("--k-max", type=int, default=2)
@click.option("--n-max", type=int, default=2)
@click.option("--elliptic-filter", "apply_filter", is_flag=True,
              help="Keep only rows passing the parity filter.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "table"]), default="table")
@click.option("--out", type=click.Path(), default=None)
@click.option("--config", type=click.Path(exists=True), default=None)
def spectrum(space, m_max, k_max, n_max, apply_filter, fmt, out, config) -> None:
    """Enumerate the discrete frequency spectrum omega = 2n + |m| + |k|."""
    cfg = _merge(load_config(config), out=out)
    if space in ("h3", "flat"):
        raise click.UsageError(
            f"{space} has a continuous spectrum; use `profile --space {space}`"
            if space == "h3" else "flat space is geometry-only here; no mode table")
    entries = modes.spectrum_s3(m_max, k_max, n_max)
    rows = []
    for e in entries:
        ok = modes.elliptic_filter(e.m, e.k).accept
        if apply_filter and not ok:
            continue
        rows.append({"omega": e.omega, "m": e.m, "k": e.k, "n": e.n,
                     "family": e.family, "elliptic_ok": ok})
    if fmt == "json":
        _emit(json.dumps({"space": space, "rows": rows}, indent=1) + "\n", cfg.out)
    elif fmt == "csv":
        lines = ["omega,m,k,n,family,elliptic_ok"]
        lines += [f"{r['omega']},{r['m']},{r['k']},{r['n']},{r['family']},{r['elliptic_ok']}"
                  for r in rows]
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        lines = [f"{'omega':>6} {'m':>3} {'k':>3} {'n':>3} {'family':<14} elliptic"]
        lines += [f"{r['omega']:>6.1f} {r['m']:>3} {r['k']:>3} {r['n']:>3} "
                  f"{r['family']:<14} {'yes' if r['elliptic_ok'] else 'no'}" for r in rows]
        _emit("\n".join(lines) + "\n", cfg.out)


def _build_mode(space: str, m: int, k: float, n: int | None, omega: float | None):
    kind = SPACES[space]
    if kind is SpaceKind.FLAT:
        raise click.UsageError("flat space is geometry-only here; no mode profiles")
    if kind is SpaceKind.HYPERBOLIC:
        if omega is None:
            raise click.UsageError("h3 profiles need --omega (continuous spectrum)")
        return modes.construct_h3_general(int(m), float(k), float(omega))
    if n is None:
        raise click.UsageError("compact-chart profiles need --n")
    return modes.construct_s3(int(m), int(k), int(n), space=kind)


@main.command()
@click.option("--space", type=click.Choice(sorted(SPACES)), default="s3")
@click.option("--m", type=int, default=0)
@click.option("--k", type=float, default=0.0)
@click.option("--n", type=int, default=None)
@click.option("--omega", type=float, default=None)
@click.option("--grid", type=int, default=None)
@click.option("--r-min", type=float, default=None)
@click.option("--r-max", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)
@click.option("--out", type=click.Path(), default=None)
@click.option("--tol", type=float, default=None, help="Residual tolerance for exit status.")
@click.option("--config", type=click.Path(exists=True), default=None)
def profile(space, m, k, n, omega, grid, r_min, r_max, fmt, out, tol, config) -> None:
    """Emit one mode profile (r, f1, f2, f3) with residual metadata."""
    cfg = _merge(load_config(config), grid=grid, r_min=r_min, r_max=r_max,
                 format=fmt, out=out, residual_tol=tol)
    try:
        solution = _build_mode(space, m, k, n, omega)
    except DegenerateElimination as exc:
        click.echo(f"degenerate family: {exc}", err=True)
        sys.exit(2)
    except CurvedMaxwellError as exc:
        click.echo(str(exc), err=True)
        sys.exit(2)
    lo = cfg.r_min if cfg.r_min is not None else solution.r_window[0]
    hi = cfg.r_max if cfg.r_max is not None else solution.r_window[1]
    rgrid = np.linspace(lo, hi, cfg.grid)
    report = verify.residual_scan(solution, rgrid)
    writer = write_profile_json if cfg.format == "json" else write_profile_csv
    _emit(writer(solution, rgrid, report), cfg.out)
    if max(report.first_order, report.second_order) > cfg.residual_tol:
        click.echo(f"residual {max(report.first_order, report.second_order):.3e} "
                   f"exceeds tolerance {cfg.residual_tol:.1e}", err=True)
        sys.exit(1)


@main.command(name="verify")
@click.argument("suite", type=click.Choice([*sorted(verify.SUITES), "all"]))
@click.option("--out", type=click.Path(), default=None)
@click.option("--config", type=click.Path(exists=True), default=None)
def verify_cmd(suite, out, config) -> None:
    """Run a named verification suite; exit 0 iff every check passes."""
    cfg = _merge(load_config(config), out=out)
    names = list(verify.SUITES) if suite == "all" else [suite]
    report = verify.run_suites(names, parallel=(suite == "all"))
    _emit(json.dumps(report, indent=1) + "\n", cfg.out)
    if not report["passed"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
