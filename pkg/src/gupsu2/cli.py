"""Command-line front end.

Subcommands: ``spectrum``, ``eigenfunction``, ``oracle``, ``harmonic``,
``dirac`` and ``verify``. Parameters come from long flags, then an optional
JSON config file, then built-in defaults, in that order of precedence.

Exit codes: 0 success, 1 verification failure, 2 usage or validation
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .eigenfunctions import eigenfunction, inner_product
from .algebra import apply_H, residual
from .models import (
    DiracGUP,
    HarmonicGUP,
    dirac_energy,
    dirac_g,
    dirac_upper_problem,
    harmonic_energy,
    harmonic_energy_algebraic,
    harmonic_energy_from_eigenvalue,
    harmonic_g,
)
from .oracle import MIN_POINTS, oracle_spectrum, relative_errors
from .su2 import closed_form_spectrum, energy

OUTPUT_DIR_ENV = "GUPSU2_OUTPUT_DIR"

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3

COMMANDS = ("spectrum", "eigenfunction", "verify", "oracle", "harmonic", "dirac")
SUITE_NAMES = ("all", "algebra", "su2", "eigenfunctions", "oracle", "models")

DEFAULTS = {
    "beta": 1.0,
    "g": 1.0,
    "N": 4096,
    "k": 5,
    "format": "json",
    "output": None,
    "n_max": 5,
    "n": 0,
    "m": 1.0,
    "omega": 1.0,
    "hbar": 1.0,
    "c": 1.0,
    "p_min": -5.0,
    "p_max": 5.0,
    "samples": 101,
    "method": "bisect",
    "suite": "all",
    "with_oracle": False,
}

# parameters each command reads; everything else in a config file is ignored
USES = {
    "spectrum": ("g", "beta", "n_max"),
    "eigenfunction": ("g", "beta", "n", "p_min", "p_max", "samples"),
    "oracle": ("g", "beta", "N", "k", "method"),
    "harmonic": ("m", "omega", "hbar", "beta", "n_max", "with_oracle", "N"),
    "dirac": ("m", "omega", "hbar", "c", "beta", "n_max", "with_oracle", "N"),
    "verify": ("suite",),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Emission:
    """Tabular result plus the parameters and residuals that go with it."""

    command: str
    params: dict
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    residuals: dict = field(default_factory=dict)


# -- number formatting


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
        return format(x, ".17g")
    return str(x)


def _json_value(x) -> str:
    """JSON text for ``x`` with floats at 17 significant digits."""
    if x is None or isinstance(x, (bool, np.bool_)):
        return json.dumps(None if x is None else bool(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return "null"
        s = format(x, ".17g")
        # keep floats recognizable as floats after parsing
        return s if any(ch in s for ch in ".en") else s + ".0"
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, dict):
        items = (f"{json.dumps(str(k))}: {_json_value(v)}" for k, v in x.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(x, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_json_value(v) for v in x) + "]"
    raise TypeError(f"cannot serialize {type(x).__name__}")


def render(result: Emission, fmt: str) -> str:
    """Serialize ``result`` as CSV (header row first) or as a JSON object."""
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(result.columns) + "\n")
        for row in result.rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        return buf.getvalue()
    if fmt == "json":
        lines = [dict(zip(result.columns, row)) for row in result.rows]
        doc = {"command": result.command, "params": result.params, "lines": lines, "residuals": result.residuals}
        return _json_value(doc) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def emit(result: Emission, fmt: str, path: str | os.PathLike | None) -> None:
    """Write ``result`` to ``path``, or to stdout when ``path`` is None.

    Raises ``OSError`` when the file cannot be written.
    """
    text = render(result, fmt)
    if path is None:
        sys.stdout.write(text)
        return
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with open(p, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# -- argument parsing


def _add(parser, *names):
    S = argparse.SUPPRESS
    spec = {
        "g": dict(type=float, help="coupling g (default 1)"),
        "beta": dict(type=float, help="minimal-length parameter beta (default 1)"),
        "n_max": dict(type=int, help="highest level n (default 5)"),
        "n": dict(type=int, help="level n (default 0)"),
        "N": dict(type=int, help="interior grid points (default 4096)"),
        "k": dict(type=int, help="number of levels (default 5)"),
        "method": dict(choices=("bisect", "stebz"), help="eigenvalue driver (default bisect)"),
        "m": dict(type=float, help="mass (default 1)"),
        "omega": dict(type=float, help="frequency (default 1)"),
        "hbar": dict(type=float, help="reduced Planck constant (default 1)"),
        "c": dict(type=float, help="speed of light (default 1)"),
        "p_min": dict(type=float, help="left end of momentum grid (default -5)"),
        "p_max": dict(type=float, help="right end of momentum grid (default 5)"),
        "samples": dict(type=int, help="momentum grid points (default 101)"),
        "suite": dict(choices=SUITE_NAMES, help="verification suite (default all)"),
        "with_oracle": dict(action="store_true", help="also solve with the finite-difference oracle"),
    }
    for name in names:
        flag = "--" + name.replace("_", "-")
        parser.add_argument(flag, dest=name, default=S, **spec[name])


def build_parser() -> argparse.ArgumentParser:
    S = argparse.SUPPRESS
    common = _Parser(add_help=False)
    common.add_argument("--config", default=S, help="JSON file of parameter defaults")
    common.add_argument("--format", dest="format", choices=("csv", "json"), default=S, help="output format (default json)")
    common.add_argument("--output", default=S, help=f"output file (default stdout, or ${OUTPUT_DIR_ENV}/<command>.<format>)")

    parser = _Parser(prog="gupsu2", description="Minimal-length oscillators via the su(2) potential algebra.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "spectrum": "closed-form levels of H(g)",
        "eigenfunction": "normalized eigenfunction sampled on a momentum grid",
        "oracle": "finite-difference levels compared with the closed form",
        "harmonic": "minimal-length harmonic oscillator levels",
        "dirac": "minimal-length Dirac oscillator levels",
        "verify": "run verification suites and print residual tables",
    }
    for cmd in COMMANDS:
        p = sub.add_parser(cmd, parents=[common], help=helps[cmd])
        _add(p, *USES[cmd])
    return parser


def _load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    out = {}
    for key, value in raw.items():
        name = key.replace("-", "_")
        if name not in DEFAULTS:
            raise UsageError(f"unknown config key {key!r}")
        out[name] = value
    return out


def resolve(argv: list[str] | None = None) -> tuple[str, dict]:
    """Parse ``argv`` into ``(command, params)`` with precedence flags > config > defaults."""
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    config = _load_config(ns.pop("config")) if "config" in ns else {}
    merged = {**DEFAULTS, **config, **ns}
    keep = set(USES[command]) | {"format", "output"}
    params = {k: v for k, v in merged.items() if k in keep}
    _validate(command, params)
    return command, params


def _validate(command: str, params: dict) -> None:
    def need(cond, msg):
        if not cond:
            raise UsageError(msg)

    types = {"n_max": int, "n": int, "N": int, "k": int, "samples": int}
    for key, kind in types.items():
        if key in params:
            need(isinstance(params[key], int) and not isinstance(params[key], bool), f"{key} must be an integer")
    for key in ("beta", "g", "m", "omega", "hbar", "c", "p_min", "p_max"):
        if key in params:
            v = params[key]
            need(isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v), f"{key} must be a finite number")
            params[key] = float(v)
    need(params.get("format") in ("csv", "json"), "format must be csv or json")
    if "beta" in params:
        need(params["beta"] > 0, "beta must be > 0")
    if "n_max" in params:
        need(params["n_max"] >= 0, "n_max must be >= 0")
    if "n" in params:
        need(params["n"] >= 0, "n must be >= 0")
    if "N" in params:
        need(params["N"] >= MIN_POINTS, f"N must be >= {MIN_POINTS}")
    if "k" in params:
        need(1 <= params["k"] <= params["N"], "k must be between 1 and N")
    if "samples" in params:
        need(params["samples"] >= 1, "samples must be >= 1")
    if command == "eigenfunction":
        need(params["g"] > 0, "g must be > 0")
        need(params["p_min"] <= params["p_max"], "p_min must not exceed p_max")
    if command == "oracle":
        need(params["g"] >= 0.5, "oracle requires g >= 1/2")
    for key in ("m", "omega", "hbar", "c"):
        if key in params:
            need(params[key] > 0, f"{key} must be > 0")


# -- commands


def _public(params: dict) -> dict:
    return {k: v for k, v in sorted(params.items()) if k not in ("output", "format")}


def run_spectrum(params: dict) -> Emission:
    res = closed_form_spectrum(params["g"], params["beta"], params["n_max"])
    return Emission("spectrum", _public(params), ["n", "E"], [list(line) for line in res.lines])


def run_eigenfunction(params: dict) -> Emission:
    n, g, beta = params["n"], params["g"], params["beta"]
    f = eigenfunction(n, g, beta)
    lam = energy(n, g, beta)
    p = np.linspace(params["p_min"], params["p_max"], params["samples"])
    rows = [[float(pi), float(vi)] for pi, vi in zip(p, f(p))]
    res = {
        "energy": float(lam),
        "s": f.s,
        "coeffs": [float(c) for c in f.coeffs],
        "norm_sq": inner_product(f, f),
        "eigen_residual": residual(apply_H(g, f) - lam * f, max(abs(lam), beta) * f.magnitude),
    }
    return Emission("eigenfunction", _public(params), ["p", "psi"], rows, res)


def run_oracle(params: dict) -> Emission:
    g, beta = params["g"], params["beta"]
    res = oracle_spectrum(g, beta, params["N"], params["k"], method=params["method"])
    errs = relative_errors(res)
    rows = [[n, float(energy(n, g, beta)), e, float(r)] for (n, e), r in zip(res.lines, errs)]
    resid = {"max_rel_error": float(np.max(errs)), "h": res.meta["h"], "singular_boundary": res.meta["singular_boundary"]}
    return Emission("oracle", _public(params), ["n", "closed_form", "oracle", "rel_error"], rows, resid)


def run_harmonic(params: dict) -> Emission:
    model = HarmonicGUP(params["m"], params["omega"], params["hbar"], params["beta"])
    g = harmonic_g(model)
    n_max = params["n_max"]
    columns = ["n", "E", "E_algebraic"]
    rows = [[n, harmonic_energy(n, model), harmonic_energy_algebraic(n, model)] for n in range(n_max + 1)]
    worst = max(abs(a - b) / abs(a) for _, a, b in rows)
    resid = {"g": g, "max_form_mismatch": worst}
    if params["with_oracle"]:
        k = n_max + 1
        lv = oracle_spectrum(g, model.beta, params["N"], k).levels
        columns.append("E_oracle")
        for row, lam in zip(rows, lv):
            row.append(harmonic_energy_from_eigenvalue(lam, model))
        resid["max_oracle_rel_error"] = max(abs(r[3] - r[1]) / abs(r[1]) for r in rows)
    return Emission("harmonic", _public(params), columns, rows, resid)


def run_dirac(params: dict) -> Emission:
    model = DiracGUP(params["m"], params["omega"], params["hbar"], params["c"], params["beta"])
    g = dirac_g(model)
    n_max = params["n_max"]
    columns = ["n", "lambda", "E_plus", "E_minus"]
    rows = [[n, float(energy(n, g, model.beta)), dirac_energy(n, model, +1), dirac_energy(n, model, -1)] for n in range(n_max + 1)]
    resid = {"g": g}
    if params["with_oracle"]:
        if g < 0.5:
            raise UsageError(f"oracle requires g >= 1/2, got g = {g}")
        prob = dirac_upper_problem(model)
        lv = oracle_spectrum(g, model.beta, params["N"], n_max + 1).levels
        columns.append("E_plus_oracle")
        for row, lam in zip(rows, lv):
            row.append(prob.energy(float(lam), +1))
        resid["max_oracle_rel_error"] = max(abs(r[4] - r[2]) / abs(r[2]) for r in rows)
    return Emission("dirac", _public(params), columns, rows, resid)


def run_verify(params: dict) -> tuple[Emission, list]:
    from .verify import run_suite

    checks = run_suite(params["suite"])
    rows = [[c.name, c.criterion if c.criterion else 0, c.value, c.tol, c.passed] for c in checks]
    em = Emission(
        "verify",
        _public(params),
        ["check", "criterion", "value", "tol", "passed"],
        rows,
        {"failed": sum(not c.passed for c in checks), "total": len(checks)},
    )
    return em, checks


RUNNERS = {
    "spectrum": run_spectrum,
    "eigenfunction": run_eigenfunction,
    "oracle": run_oracle,
    "harmonic": run_harmonic,
    "dirac": run_dirac,
}


def _target(command: str, params: dict) -> str | None:
    if params.get("output"):
        return params["output"]
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base:
        return os.path.join(base, f"{command}.{params['format']}")
    return None


def run(command: str, params: dict) -> int:
    """Execute one resolved command and return its exit status."""
    if command == "verify":
        em, checks = run_verify(params)
        for c in checks:
            print(c.line())
        failed = em.residuals["failed"]
        print(f"{em.residuals['total'] - failed}/{em.residuals['total']} checks passed")
        target = _target(command, params)
        if target is not None:
            emit(em, params["format"], target)
        return EXIT_VERIFY if failed else EXIT_OK
    emit(RUNNERS[command](params), params["format"], _target(command, params))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        command, params = resolve(argv)
        return run(command, params)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
