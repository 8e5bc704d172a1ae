"""Command-line surface: scenario files in, deterministic reports and CSV out.

Scenario files are JSON documents with the layout::

    {
      "modes": {
        "a": {"g_re": 0.01, "g_im": 0.0, "delta": 0.3, "n": 1},
        "b": {"g_re": 1.0,  "g_im": 0.0, "delta": 0.1, "n": 0},
        "c": {"g_re": 0.01, "g_im": 0.0, "delta": 0.5, "n": 1}
      },
      "gamma": {"g1": 0.0, "g2": 0.0, "g3": 0.0}
    }

``gamma`` may be omitted (defaults to zeros); unknown keys anywhere are
rejected; all numbers must be finite and photon numbers integral.

Exit codes: 0 success, 1 validation failure, 2 schema error, 3 domain error
(pole or degeneracy), 4 regime refusal (a command that needs the lossless
regime was given decay rates).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, TextIO

import numpy as np

from . import effective, model, oracle, perturb, suscept, validate
from .errors import (ConvergenceError, DegeneracyError, MissingOrderError,
                     NotHermitianError, NotResonantError, PoleError,
                     ScenarioError, StepError, TrackingError)
from .model import FieldMode, SystemConfig

_DOMAIN_ERRORS = (PoleError, DegeneracyError, NotResonantError, TrackingError,
                  ConvergenceError, MissingOrderError, StepError)

_MODE_KEYS = {"g_re", "g_im", "delta", "n"}
_GAMMA_KEYS = {"g1", "g2", "g3"}


def _require_finite_number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{where} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ScenarioError(f"{where} must be finite, got {value!r}")
    return float(value)


def _require_photon_number(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{where} must be an integer, got {value!r}")
    if value < 0:
        raise ScenarioError(f"{where} must be >= 0, got {value}")
    return value


def scenario_config(doc: Any) -> SystemConfig:
    """Validate a parsed scenario document and build the configuration."""
    if not isinstance(doc, dict):
        raise ScenarioError("scenario must be a JSON object")
    unknown = set(doc) - {"modes", "gamma"}
    if unknown:
        raise ScenarioError(f"unknown top-level keys: {sorted(unknown)}")
    if "modes" not in doc:
        raise ScenarioError("missing required key 'modes'")
    modes = doc["modes"]
    if not isinstance(modes, dict) or set(modes) != {"a", "b", "c"}:
        raise ScenarioError("'modes' must hold exactly the keys 'a', 'b', 'c'")
    built = {}
    for label in ("a", "b", "c"):
        entry = modes[label]
        if not isinstance(entry, dict):
            raise ScenarioError(f"modes.{label} must be an object")
        unknown = set(entry) - _MODE_KEYS
        if unknown:
            raise ScenarioError(f"modes.{label} has unknown keys: {sorted(unknown)}")
        missing = _MODE_KEYS - set(entry)
        if missing:
            raise ScenarioError(f"modes.{label} is missing keys: {sorted(missing)}")
        g = complex(_require_finite_number(entry["g_re"], f"modes.{label}.g_re"),
                    _require_finite_number(entry["g_im"], f"modes.{label}.g_im"))
        delta = _require_finite_number(entry["delta"], f"modes.{label}.delta")
        n = _require_photon_number(entry["n"], f"modes.{label}.n")
        built[label] = FieldMode(label, g, delta, n)
    gamma = (0.0, 0.0, 0.0)
    if "gamma" in doc:
        gdoc = doc["gamma"]
        if not isinstance(gdoc, dict):
            raise ScenarioError("'gamma' must be an object")
        unknown = set(gdoc) - _GAMMA_KEYS
        if unknown:
            raise ScenarioError(f"gamma has unknown keys: {sorted(unknown)}")
        vals = []
        for key in ("g1", "g2", "g3"):
            v = _require_finite_number(gdoc.get(key, 0.0), f"gamma.{key}")
            if v < 0:
                raise ScenarioError(f"gamma.{key} must be >= 0, got {v}")
            vals.append(v)
        gamma = tuple(vals)
    return SystemConfig(built["a"], built["b"], built["c"], gamma)


def load_scenario(path: str) -> SystemConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario is not valid JSON: {exc}") from exc
    return scenario_config(doc)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _require_lossless_scenario(config: SystemConfig) -> None:
    if not config.is_hermitian:
        raise NotHermitianError(
            "scenario has nonzero decay rates; this command reports the lossless "
            "effective evolution — use 'nkerr sweep' for the lossy susceptibilities")


def _cmd_coeffs(args, out: TextIO) -> int:
    config = load_scenario(args.scenario)
    _require_lossless_scenario(config)
    co = effective.coefficients(config)
    out.write(f"L={_fmt(co.linear)} S={_fmt(co.self_kerr)} K={_fmt(co.cross_kerr)}\n")
    d1, d2, d3 = config.detunings()
    if abs(d2) <= effective.RESONANCE_RTOL * max(1.0, abs(d1), abs(d3)):
        pure = effective.pure_cross_kerr(config)
        out.write(f"pure-kerr K={_fmt(pure)} (agrees with the general form)\n")
    return 0


def _cmd_sweep(args, out: TextIO) -> int:
    config = load_scenario(args.scenario)
    rows = suscept.sweep(config, args.axis, args.lo, args.hi, args.steps)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("axis,value,chi1_re,chi1_im,chi3s_re,chi3s_im,chi3c_re,chi3c_im,valid\n")
        for row in rows:
            if row.valid:
                p = row.point
                fields = [row.axis, _fmt(row.value),
                          _fmt(p.chi1.real), _fmt(p.chi1.imag),
                          _fmt(p.chi3_self.real), _fmt(p.chi3_self.imag),
                          _fmt(p.chi3_cross.real), _fmt(p.chi3_cross.imag), "1"]
            else:
                fields = [row.axis, _fmt(row.value), "", "", "", "", "", "", "0"]
            fh.write(",".join(fields) + "\n")
    out.write(f"wrote {len(rows)} rows to {args.out}\n")
    return 0


def _cmd_evolve(args, out: TextIO) -> int:
    config = load_scenario(args.scenario)
    _require_lossless_scenario(config)
    co = effective.coefficients(config)
    # the effective description presumes a cleanly gapped unperturbed spectrum
    perturb.dressed_basis(model.split(config).h0)
    n_a, n_c = config.mode_a.n, config.mode_c.n
    t = args.t
    eff_phase = -(co.linear * n_a + co.self_kerr * n_a**2 + co.cross_kerr * n_a * n_c) * t
    psi0 = np.zeros(4, dtype=complex)
    psi0[0] = 1.0
    psi_t = oracle.propagate(model.build_hamiltonian(config), psi0, t)
    overlap = complex(np.vdot(psi0, psi_t))
    oracle_phase = math.atan2(overlap.imag, overlap.real)
    diff = (oracle_phase - eff_phase + math.pi) % (2.0 * math.pi) - math.pi
    eps = max(model.perturbation_strengths(config))
    out.write(f"t={_fmt(t)}\n")
    out.write(f"effective_phase={_fmt(eff_phase)}\n")
    out.write(f"oracle_phase={_fmt(oracle_phase)}\n")
    out.write(f"difference={_fmt(diff)}\n")
    out.write(f"leakage_bound={_fmt(10.0 * eps**2)}\n")
    return 0


def _cmd_validate(args, out: TextIO) -> int:
    report, ok = validate.run_report(args.seed)
    out.write(report)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nkerr",
        description="Cross-Kerr response of a four-level atom in the N-configuration.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="report the effective L, S, K coefficients")
    p.add_argument("scenario", help="path to a scenario JSON file")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("sweep", help="sweep a detuning and write susceptibilities as CSV")
    p.add_argument("scenario")
    p.add_argument("--axis", required=True, choices=["da", "db", "dc"])
    p.add_argument("--lo", required=True, type=float)
    p.add_argument("--hi", required=True, type=float)
    p.add_argument("--steps", required=True, type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("evolve", help="compare effective phase with full propagation")
    p.add_argument("scenario")
    p.add_argument("--t", required=True, type=float)
    p.set_defaults(func=_cmd_evolve)

    p = sub.add_parser("validate", help="run the acceptance checks")
    p.add_argument("--seed", required=True, type=int)
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv: list[str] | None = None, stdout: TextIO | None = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2
    except NotHermitianError as exc:
        print(f"regime refusal: {exc}", file=sys.stderr)
        return 4
    except _DOMAIN_ERRORS as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
