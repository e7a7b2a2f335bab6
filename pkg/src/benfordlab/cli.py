"""Command-line front end.

Subcommands
    table1       first-digit frequency table for the squared-uniform run
    discrepancy  discrepancy trajectories with the rate-bound overlay
    bounds       exhaustive inequality checks (lemma4 | vdc | prop2 | prop3)
    charfn       characteristic-function cross-validation grid
    weyl         averaged exponential sums of a realization

Global flags --seed, --out-dir, --config, --threads (env BENFORD_THREADS
is the fallback for --threads).  Option precedence: built-in defaults,
then the JSON config file, then command-line flags.  All data files are
CSV with a header row, LF line endings and floats at 12 significant
digits; a manifest.json with content digests is written last.

Exit codes: 0 success, 1 usage, 2 numerical-check failure, 3 size or
convergence guard.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__, bounds, distributions, simulation
from .discrepancy import SamplePoints, _star_extreme_sorted
from .distributions import CharFnQuery, char_fn, char_fn_oracle
from .errors import (
    BenfordLabError,
    ConfigError,
    ConvergenceError,
    DomainError,
    SizeGuardError,
)
from .mantissa import LOG10_DIGIT_PROBS
from .schedules import Schedule, parse_schedule

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2
EXIT_GUARD = 3

GRID_CELL_GUARD = 10**7

# reference single-seed realization shipped for side-by-side display in
# digits.csv (column paper_realization)
PUBLISHED_REALIZATION = (
    0.308, 0.204, 0.096, 0.116, 0.084, 0.068, 0.060, 0.028, 0.036,
)

_FAMILY_ALIASES = {
    "geometric": distributions.GEOMETRIC,
    "powerlaw": distributions.POWERLAW,
    "power-law": distributions.POWERLAW,
    "uniform-disc": distributions.DISCRETE_UNIFORM,
    "discrete-uniform": distributions.DISCRETE_UNIFORM,
    "exponential": distributions.EXPONENTIAL,
    "frechet": distributions.FRECHET,
    "uniform-cont": distributions.CONTINUOUS_UNIFORM,
    "continuous-uniform": distributions.CONTINUOUS_UNIFORM,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if value is None:
        return ""
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    return f"{value:.12g}"


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _write_manifest(out_dir, command, merged, files, started, extras=None):
    manifest = {
        "command": command,
        "version": __version__,
        "master_seed": merged.get("seed"),
        "config": {k: v for k, v in sorted(merged.items())},
        "wall_clock_s": time.monotonic() - started,
        "files": [
            {"path": os.path.basename(f), "sha256": _sha256(f)} for f in files
        ],
    }
    if extras:
        manifest["extras"] = extras
    path = os.path.join(out_dir, "manifest.json")
    with open(path, "w", newline="\n") as fh:
        json.dump(manifest, fh, indent=2, default=str)
        fh.write("\n")


def _merge_options(args, command: str, defaults: dict) -> dict:
    """defaults < config-file section < explicit flags."""
    merged = dict(defaults)
    path = getattr(args, "config", None)
    if path:
        try:
            with open(path) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {path}: {exc}") from exc
        for key in ("seed", "out_dir", "threads"):
            if key in doc:
                merged[key] = doc[key]
        for key, value in doc.get(command, {}).items():
            if key not in merged:
                raise UsageError(f"unknown config key {command}.{key}")
            merged[key] = value
    for key in merged:
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
    if merged.get("threads") is None:
        env = os.environ.get("BENFORD_THREADS", "").strip()
        merged["threads"] = int(env) if env else 1
    merged["seed"] = int(merged["seed"])
    merged["threads"] = int(merged["threads"])
    return merged


def _parse_range(text: str) -> list[int]:
    """'1..50' or comma-separated integers."""
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


def _build_spec(merged: dict) -> distributions.DistributionSpec:
    family = _FAMILY_ALIASES.get(merged["family"])
    if family is None:
        raise UsageError(f"unknown family {merged['family']!r}")
    def sched(key, default):
        raw = merged.get(key)
        return parse_schedule(str(raw)) if raw is not None else default
    if family == distributions.GEOMETRIC:
        return distributions.geometric(sched("p", Schedule.constant(0.5)))
    if family == distributions.POWERLAW:
        return distributions.powerlaw(sched("eps", Schedule.constant(1.0)))
    if family == distributions.DISCRETE_UNIFORM:
        return distributions.discrete_uniform(
            sched("a", Schedule.constant(1.0)), sched("b", Schedule.polynomial(1.0, 1.0))
        )
    if family == distributions.EXPONENTIAL:
        return distributions.exponential(sched("lam", Schedule.constant(1.0)))
    if family == distributions.FRECHET:
        return distributions.frechet(sched("alpha", Schedule.constant(2.0)))
    return distributions.continuous_uniform(
        sched("a", Schedule.constant(1.0)), sched("b", Schedule.polynomial(1.0, 1.0))
    )


def _rate_params(merged: dict) -> bounds.RateParams:
    rn = merged.get("rn")
    return bounds.RateParams(
        beta=float(merged["beta"]),
        gamma=float(merged["gamma"]),
        delta=float(merged["delta"]),
        theta=float(merged["theta"]),
        c0=float(merged["c0"]),
        C0=float(merged["C0"]),
        c1=float(merged["c1"]),
        c2=float(merged["c2"]),
        r_schedule=parse_schedule(str(rn)) if rn is not None else None,
    )


# ---------------------------------------------------------------------------
# table1


def _cmd_table1(args) -> int:
    started = time.monotonic()
    merged = _merge_options(
        args,
        "table1",
        {"seed": 20260810, "out_dir": ".", "threads": None, "n": 1000, "d": 2.0,
         "replicates": 1},
    )
    out_dir = merged["out_dir"]
    os.makedirs(out_dir, exist_ok=True)
    spec = distributions.continuous_uniform(
        Schedule.constant(1.0), Schedule.polynomial(1.0, 1.0)
    )
    config = simulation.ExperimentConfig(
        spec=spec,
        d=Schedule.constant(float(merged["d"])),
        n_terms=int(merged["n"]),
        master_seed=merged["seed"],
        replicates=int(merged["replicates"]),
    )
    tables = [
        simulation.digit_frequencies(simulation.generate_powers(config, r))
        for r in range(config.replicates)
    ]
    freq = np.mean([t.frequencies for t in tables], axis=0)
    path = os.path.join(out_dir, "digits.csv")
    rows = [
        (k + 1, freq[k], LOG10_DIGIT_PROBS[k], PUBLISHED_REALIZATION[k],
         abs(freq[k] - LOG10_DIGIT_PROBS[k]))
        for k in range(9)
    ]
    _write_csv(path, ("digit", "frequency", "benford_exact", "paper_realization", "abs_error"), rows)
    _write_manifest(out_dir, "table1", merged, [path], started)
    return EXIT_OK


# ---------------------------------------------------------------------------
# discrepancy


def _auto_checkpoints(n_terms: int) -> tuple[int, ...]:
    if n_terms < 10:
        return (n_terms,)
    pts = np.unique(
        np.round(np.logspace(1, math.log10(n_terms), num=8)).astype(int)
    )
    pts = pts[(pts >= 2) & (pts <= n_terms)]
    if pts[-1] != n_terms:
        pts = np.append(pts, n_terms)
    return tuple(int(p) for p in pts)


def _cmd_discrepancy(args) -> int:
    started = time.monotonic()
    merged = _merge_options(
        args,
        "discrepancy",
        {"seed": 20260810, "out_dir": ".", "threads": None,
         "family": "uniform-cont", "p": None, "eps": None, "a": None, "b": None,
         "lam": None, "alpha": None, "d": "const:2", "n": 1000,
         "checkpoints": "auto", "replicates": 1,
         "beta": 1.0, "gamma": 1.0, "delta": 1.0, "theta": None,
         "c0": 1.0, "C0": 1.0, "c1": 1.0, "c2": 1.0, "rn": None},
    )
    out_dir = merged["out_dir"]
    os.makedirs(out_dir, exist_ok=True)
    spec = _build_spec(merged)
    d_schedule = parse_schedule(str(merged["d"]))
    if merged["theta"] is None:
        # d_n = c n^theta carries its own growth exponent
        merged["theta"] = (
            d_schedule.exponent if d_schedule.kind == "polynomial" else 0.0
        )
    params = _rate_params(merged)
    if params.beta - params.delta * params.theta <= 0:
        print(
            "warning: beta - delta*theta <= 0, the rate bound does not decay",
            file=sys.stderr,
        )
    n_terms = int(merged["n"])
    if merged["checkpoints"] == "auto":
        checkpoints = _auto_checkpoints(n_terms)
    else:
        checkpoints = tuple(_parse_range(str(merged["checkpoints"])))
    config = simulation.ExperimentConfig(
        spec=spec,
        d=d_schedule,
        n_terms=n_terms,
        master_seed=merged["seed"],
        replicates=int(merged["replicates"]),
        checkpoints=checkpoints,
        rate_params=params,
    )
    files = []
    extremes = []
    for r in range(config.replicates):
        trajectory = simulation.discrepancy_trajectory(config, r)
        path = os.path.join(out_dir, f"trajectory_rep{r:03d}.csv")
        _write_csv(
            path,
            ("checkpoint", "d_star", "d_extreme", "theorem1_rhs"),
            [
                (row.checkpoint, row.star, row.extreme,
                 row.bound if row.bound is not None else float("nan"))
                for row in trajectory.rows
            ],
        )
        files.append(path)
        extremes.append([row.extreme for row in trajectory.rows])
    ext = np.asarray(extremes)
    agg_path = os.path.join(out_dir, "aggregate.csv")
    _write_csv(
        agg_path,
        ("checkpoint", "mean", "median", "q05", "q95"),
        [
            (ck, ext[:, i].mean(), float(np.median(ext[:, i])),
             float(np.quantile(ext[:, i], 0.05)), float(np.quantile(ext[:, i], 0.95)))
            for i, ck in enumerate(config.checkpoints)
        ],
    )
    files.append(agg_path)
    _write_manifest(out_dir, "discrepancy", merged, files, started)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds


def _cmd_bounds(args) -> int:
    started = time.monotonic()
    merged = _merge_options(
        args,
        "bounds",
        {"seed": 20260810, "out_dir": ".", "threads": None,
         "check": "lemma4", "k": "1..5000", "h": "1..50",
         "n": "10,50,100,500,1000,2000", "family": "exponential",
         "p": None, "eps": None, "a": None, "b": None, "lam": None,
         "alpha": None, "tolerance": 1e-8},
    )
    out_dir = merged["out_dir"]
    os.makedirs(out_dir, exist_ok=True)
    check = merged["check"]
    hs = _parse_range(str(merged["h"]))
    rows = []
    header = ("n", "h", "lhs_modulus", "rhs_bound", "ok")

    if check == "lemma4":
        ks = _parse_range(str(merged["k"]))
        if len(ks) * len(hs) > GRID_CELL_GUARD:
            raise SizeGuardError("lemma4 grid exceeds the cell guard")
        header = ("k", "h", "lhs_modulus", "rhs_bound", "ok")
        k_max = max(ks)
        for h in hs:
            scan = bounds.partial_exponential_sum_scan(k_max, h)
            for k in ks:
                lhs = scan[k - 1]
                rhs = bounds.lemma_bound(k, h)
                rows.append((k, h, lhs, rhs, bool(lhs <= rhs)))
    elif check == "vdc":
        ns = _parse_range(str(merged["n"]))
        if len(ns) * len(hs) > GRID_CELL_GUARD:
            raise SizeGuardError("vdc grid exceeds the cell guard")
        n_max = max(ns)
        for h in hs:
            scan = bounds.partial_exponential_sum_scan(n_max, h)
            for n in ns:
                lhs = scan[n - 1] / n
                rhs = bounds.van_der_corput_bound(n, h)
                rows.append((n, h, lhs, rhs, bool(lhs <= rhs)))
    elif check == "prop2":
        ns = _parse_range(str(merged["n"]))
        if len(ns) * len(hs) > GRID_CELL_GUARD:
            raise SizeGuardError("prop2 grid exceeds the cell guard")
        params = bounds.RateParams(
            gamma=0.5, delta=1.0, beta=0.5, c1=8.0, c2=5.0,
            r_schedule=Schedule.polynomial(1.0, -0.5),
        )
        for n in ns:
            spec = distributions.discrete_uniform(1.0, float(n))
            for h in hs:
                lhs = abs(char_fn(spec, CharFnQuery(t=float(h), n=n,
                                                    tolerance=float(merged["tolerance"]))))
                rhs = bounds.prop_bound_form(h, n, params)
                rows.append((n, h, lhs, rhs, bool(lhs <= rhs)))
    elif check == "prop3":
        merged.setdefault("family", "exponential")
        spec = _build_spec(merged)
        if spec.is_discrete:
            raise UsageError("prop3 applies to continuous families")
        ns = _parse_range(str(merged["n"])) if merged["n"] else [1]
        if len(ns) * len(hs) > GRID_CELL_GUARD:
            raise SizeGuardError("prop3 grid exceeds the cell guard")
        report = distributions.check_prop3_hypotheses(spec, ns)
        for row in report.rows:
            # the sup-based constant understates two-sided boundary terms,
            # so the uniform family is judged against the rigorous one
            c1 = (
                row.c1_rigorous
                if spec.family == distributions.CONTINUOUS_UNIFORM
                else row.c1
            )
            for h in hs:
                lhs = h * abs(
                    char_fn(spec, CharFnQuery(t=float(h), n=row.n,
                                              tolerance=float(merged["tolerance"])))
                )
                rows.append((row.n, h, lhs, c1, bool(lhs <= c1 + 1e-6)))
    else:
        raise UsageError(f"unknown check {check!r}")

    path = os.path.join(out_dir, "bounds.csv")
    _write_csv(path, header, rows)
    violations = sum(1 for r in rows if not r[-1])
    _write_manifest(
        out_dir, "bounds", merged, [path], started,
        extras={"check": check, "rows": len(rows), "violations": violations},
    )
    return EXIT_OK if violations == 0 else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# charfn


def _cmd_charfn(args) -> int:
    started = time.monotonic()
    merged = _merge_options(
        args,
        "charfn",
        {"seed": 20260810, "out_dir": ".", "threads": None,
         "family": "uniform-cont", "p": None, "eps": None, "a": None,
         "b": None, "lam": None, "alpha": None,
         "n_grid": "2,10,100,1000", "t_grid": "0.1,0.5,1,2,5,10",
         "tolerance": 1e-6, "mc_draws": 10**6},
    )
    out_dir = merged["out_dir"]
    os.makedirs(out_dir, exist_ok=True)
    spec = _build_spec(merged)
    ns = _parse_range(str(merged["n_grid"]))
    ts = [float(v) for v in str(merged["t_grid"]).split(",")]
    tol = float(merged["tolerance"])
    draws = int(merged["mc_draws"])
    rng = np.random.default_rng(merged["seed"])
    rows = []
    any_bad = False
    for n in ns:
        for t in ts:
            try:
                query = CharFnQuery(t=t, n=n, tolerance=tol)
                value = char_fn(spec, query)
                oracle = char_fn_oracle(spec, query, rng=rng, mc_draws=draws)
                diff = abs(value - oracle.value)
                ok = diff <= 1.25 * tol and abs(
                    value - oracle.mc_value
                ) <= max(5.0 * oracle.mc_stderr, 2.0 * tol)
                rows.append(
                    (n, t, value.real, value.imag, abs(value), abs(oracle.value),
                     diff, bool(ok))
                )
            except (ConvergenceError, DomainError):
                rows.append(
                    (n, t, float("nan"), float("nan"), float("nan"),
                     float("nan"), float("nan"), False)
                )
            any_bad = any_bad or not rows[-1][-1]
    path = os.path.join(out_dir, "charfn.csv")
    _write_csv(
        path,
        ("n", "t", "re", "im", "modulus", "oracle_modulus", "abs_diff", "ok"),
        rows,
    )
    _write_manifest(out_dir, "charfn", merged, [path], started,
                    extras={"family": spec.family})
    return EXIT_CHECK_FAILED if any_bad else EXIT_OK


# ---------------------------------------------------------------------------
# weyl


def _cmd_weyl(args) -> int:
    started = time.monotonic()
    merged = _merge_options(
        args,
        "weyl",
        {"seed": 20260810, "out_dir": ".", "threads": None,
         "family": "uniform-cont", "p": None, "eps": None, "a": None,
         "b": None, "lam": None, "alpha": None, "d": "const:2",
         "n": 1000, "h_max": 50},
    )
    out_dir = merged["out_dir"]
    os.makedirs(out_dir, exist_ok=True)
    spec = _build_spec(merged)
    config = simulation.ExperimentConfig(
        spec=spec,
        d=parse_schedule(str(merged["d"])),
        n_terms=int(merged["n"]),
        master_seed=merged["seed"],
    )
    realization = simulation.generate_powers(config, 0)
    sp = SamplePoints.from_values(realization.log10_frac)
    h_max = int(merged["h_max"])
    sums = bounds.weyl_sum_grid(sp, np.arange(1, h_max + 1))
    rows = [(h + 1, z.real, z.imag, abs(z)) for h, z in enumerate(sums)]
    path = os.path.join(out_dir, "weyl.csv")
    _write_csv(path, ("h", "re", "im", "modulus"), rows)
    star, extreme = _star_extreme_sorted(sp.points)
    extras = {
        "erdos_turan_bound_at_h_max": bounds.erdos_turan_bound(sp, h_max),
        "d_star": star,
        "d_extreme": extreme,
    }
    _write_manifest(out_dir, "weyl", merged, [path], started, extras=extras)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_family_flags(sub):
    sub.add_argument("--family", type=str, default=None)
    for flag in ("p", "eps", "a", "b", "lam", "alpha"):
        sub.add_argument(f"--{flag}", type=str, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="benfordlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out-dir", dest="out_dir", type=str, default=None)
    common.add_argument("--config", type=str, default=None)
    common.add_argument("--threads", type=int, default=None)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", parents=[common])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=float, default=None)
    p.add_argument("--replicates", type=int, default=None)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("discrepancy", parents=[common])
    _add_family_flags(p)
    p.add_argument("--d", type=str, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--checkpoints", type=str, default=None)
    p.add_argument("--replicates", type=int, default=None)
    for flag in ("beta", "gamma", "delta", "theta", "c0", "C0", "c1", "c2"):
        p.add_argument(f"--{flag}", type=float, default=None)
    p.add_argument("--rn", type=str, default=None)
    p.set_defaults(func=_cmd_discrepancy)

    p = sub.add_parser("bounds", parents=[common])
    p.add_argument("--check", type=str, default=None,
                   choices=("lemma4", "vdc", "prop2", "prop3"))
    p.add_argument("--k", type=str, default=None)
    p.add_argument("--h", type=str, default=None)
    p.add_argument("--n", type=str, default=None)
    _add_family_flags(p)
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("charfn", parents=[common])
    _add_family_flags(p)
    p.add_argument("--n-grid", dest="n_grid", type=str, default=None)
    p.add_argument("--t-grid", dest="t_grid", type=str, default=None)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--mc-draws", dest="mc_draws", type=int, default=None)
    p.set_defaults(func=_cmd_charfn)

    p = sub.add_parser("weyl", parents=[common])
    _add_family_flags(p)
    p.add_argument("--d", type=str, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--h-max", dest="h_max", type=int, default=None)
    p.set_defaults(func=_cmd_weyl)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, DomainError) as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeGuardError, ConvergenceError) as exc:
        print(f"guard tripped: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except BenfordLabError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
