"""Command-line front end.

    photonforces <command> --config <path> [--out <path>] [--format csv|json]
                 [--jobs N] [key=value ...]

Commands: polariton | cavity | force | sweep.  The config file is an INI
file with one section per command; `key=value` overrides on the command
line win over the file, and `section.key=value` targets another section
(used by `sweep` to override its base command).  Unknown keys and
out-of-range values are rejected with exit code 2; physics-infeasibility
errors exit 3; numerical-guard trips exit 4.

Grid rows may be evaluated in parallel (--jobs), but output assembly is
always in row order, so results are byte-identical regardless of
parallelism.
"""

import argparse
import configparser
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import cavity as cav
from . import forces as frc
from . import kinematics as kin
from .constants import CONSTANTS_VERSION, EV, HBAR
from .errors import ConfigError, FeasibilityError, NumericalGuardError, PhotonForcesError
from .table import ResultTable

_BASE_METADATA = {
    "constants_version": CONSTANTS_VERSION,
    "ldos_normalization": "rho = n * rho0, rho0 = 1/(pi*c)",
    "total_photon_number": "average of directional values, (n+ + n-)/2",
}

# Per-command key tables: name -> (parser, default); REQUIRED means no default.
_REQUIRED = object()

_POLARITON_KEYS = {
    "energy_ev": (float, 1.0),
    "n_min": (float, 1.0),
    "n_max": (float, 3.0),
    "n_points": (int, 201),
    "mass_kg": (float, 1.0),
    "length_m": (float, 1.0),
    "convention": (str, "minkowski"),
    "momentum_kgms": (float, None),
}

_STACK_KEYS = {
    "eps1": (float, 1.0),
    "eps2": (float, _REQUIRED),
    "eps3": (float, 1.0),
    "d2_m": (float, _REQUIRED),
}

_GRID_KEYS = {
    "omega_min_ev": (float, _REQUIRED),
    "omega_max_ev": (float, None),
    "omega_points": (int, 1),
}

_INPUT_KEYS = {
    "in1": (float, None),
    "in3": (float, None),
    "t_left_k": (float, None),
    "t_right_k": (float, None),
}

_CAVITY_KEYS = {**_STACK_KEYS, **_GRID_KEYS, **_INPUT_KEYS}

_FORCE_KEYS = {
    "mode": (str, "beam"),
    "n_index": (float, None),
    "area_m2": (float, 1.0),
    **_STACK_KEYS,
    **_GRID_KEYS,
    **_INPUT_KEYS,
}
# the AR mode needs no stack
_FORCE_KEYS["eps2"] = (float, None)
_FORCE_KEYS["d2_m"] = (float, None)

_SWEEP_KEYS = {
    "base": (str, _REQUIRED),
    "parameter": (str, _REQUIRED),
    "min": (float, _REQUIRED),
    "max": (float, _REQUIRED),
    "points": (int, _REQUIRED),
}

_KEY_TABLES = {
    "polariton": _POLARITON_KEYS,
    "cavity": _CAVITY_KEYS,
    "force": _FORCE_KEYS,
    "sweep": _SWEEP_KEYS,
}


def _parse_section(raw, command):
    """Validate a raw {key: str-or-value} mapping against the command's key
    table; returns the resolved parameter dict."""
    table = _KEY_TABLES[command]
    unknown = set(raw) - set(table)
    if unknown:
        raise ConfigError(
            f"unknown key(s) for {command}: {', '.join(sorted(unknown))}"
        )
    params = {}
    for key, (parse, default) in table.items():
        if key in raw:
            try:
                params[key] = parse(raw[key])
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for {key}: {raw[key]!r}") from exc
        elif default is _REQUIRED:
            raise ConfigError(f"missing required key for {command}: {key}")
        elif default is not None:
            params[key] = default
    return params


def load_config(path, command, overrides=()):
    """Read the INI config and apply key=value overrides.

    Returns the resolved params dict; for `sweep` it carries the base
    command's resolved params under 'base_params'.
    """
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    if not parser.has_section(command):
        raise ConfigError(f"config has no [{command}] section")
    sections = {name: dict(parser.items(name)) for name in parser.sections()}
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override must be key=value, got {item!r}")
        key, value = item.split("=", 1)
        if "." in key:
            section, key = key.split(".", 1)
        else:
            section = command
        key = key.strip()
        value = value.strip()
        if value:
            sections.setdefault(section, {})[key] = value
        else:
            # `key=` with no value unsets the file's entry
            sections.setdefault(section, {}).pop(key, None)
    params = _parse_section(sections[command], command)
    if command == "sweep":
        base = params["base"]
        if base not in ("polariton", "cavity", "force"):
            raise ConfigError(f"sweep base must be a non-sweep command, got {base!r}")
        if base not in sections:
            raise ConfigError(f"sweep base [{base}] section missing")
        params["base_params"] = _parse_section(sections[base], base)
        if params["parameter"] not in _KEY_TABLES[base]:
            raise ConfigError(
                f"sweep parameter {params['parameter']!r} unknown for {base}"
            )
    return params


def _map_rows(fn, items, jobs):
    if jobs <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _convention(params):
    name = params["convention"].lower()
    if name == "abraham":
        return kin.ABRAHAM
    if name == "minkowski":
        return kin.MINKOWSKI
    if name == "general":
        if "momentum_kgms" not in params:
            raise ConfigError("general convention requires momentum_kgms")
        return kin.general(params["momentum_kgms"])
    raise ConfigError(f"unknown convention {params['convention']!r}")


def run_polariton(params, jobs=1):
    conv = _convention(params)
    photon = kin.PhotonInput(omega=params["energy_ev"] * EV / HBAR)
    hw = photon.energy
    hk0 = HBAR * photon.k0
    if params["n_points"] < 1:
        raise ConfigError("n_points must be >= 1")
    grid = np.linspace(params["n_min"], params["n_max"], params["n_points"])

    def row(item):
        i, n = item
        block = kin.MediumBlock(n=float(n), M=params["mass_kg"], L=params["length_m"])
        try:
            sol = kin.solve_transmission(photon, block, conv)
        except FeasibilityError as exc:
            raise FeasibilityError(f"row {i} (n={n:g}): {exc}") from exc
        v_before, v_after = kin.cev_check(photon, block, sol)
        return [
            n,
            sol.E / hw,
            sol.E_f / hw,
            sol.E_d / hw,
            sol.p / hk0,
            sol.p_f / hk0,
            sol.p_d / hk0,
            sol.delta_m * kin.C**2 / hw,
            sol.V_r,
            (v_after - v_before) / v_before,
        ]

    table = ResultTable(
        columns=[
            "n", "E_over_hw", "Ef_over_hw", "Ed_over_hw",
            "p_over_hk0", "pf_over_hk0", "pd_over_hk0",
            "dmc2_over_hw", "V_r", "cev_residual",
        ],
        units=["-", "-", "-", "-", "-", "-", "-", "-", "m/s", "-"],
        metadata={**_BASE_METADATA, "command": "polariton", "config": dict(params)},
    )
    for r in _map_rows(row, list(enumerate(grid)), jobs):
        table.append(r)
    return table


def _omega_grid(params):
    w_min = params["omega_min_ev"] * EV / HBAR
    points = params["omega_points"]
    if points < 1:
        raise ConfigError("omega_points must be >= 1")
    if points == 1:
        return np.array([w_min])
    if params.get("omega_max_ev") is None:
        raise ConfigError("omega_max_ev required when omega_points > 1")
    w_max = params["omega_max_ev"] * EV / HBAR
    if w_max <= w_min:
        raise ConfigError("omega_max_ev must exceed omega_min_ev")
    return np.linspace(w_min, w_max, points)


def _occupation(params, omega, side):
    occ_key, temp_key = ("in1", "t_left_k") if side == "left" else ("in3", "t_right_k")
    occ = params.get(occ_key)
    temp = params.get(temp_key)
    if occ is not None and temp is not None:
        raise ConfigError(f"give either {occ_key} or {temp_key}, not both")
    if occ is not None:
        return occ
    if temp is not None:
        return cav.bose_einstein(omega, temp)
    return 0.0


def _stack(params):
    for key in ("eps2", "d2_m"):
        if params.get(key) is None:
            raise ConfigError(f"missing required key: {key}")
    return cav.LayerStack(params["eps1"], params["eps2"], params["eps3"], params["d2_m"])


def run_cavity(params, jobs=1):
    stack = _stack(params)
    grid = _omega_grid(params)

    def row(omega):
        in1 = _occupation(params, omega, "left")
        in3 = _occupation(params, omega, "right")
        numbers = cav.photon_numbers(stack, omega, in1, in3)
        cc = cav.composite(stack, omega)
        r1_sq = abs(cc.R1) ** 2
        t_sq = (stack.n3 / stack.n1) * abs(cc.T1 * cc.T2) ** 2
        return [
            omega * HBAR / EV,
            numbers.n1p, numbers.n1m,
            numbers.n2p, numbers.n2m,
            numbers.n3p, numbers.n3m,
            r1_sq, t_sq, r1_sq + t_sq - 1.0,
        ]

    table = ResultTable(
        columns=[
            "omega_ev", "n1p", "n1m", "n2p", "n2m", "n3p", "n3m",
            "R1_sq", "T1T2_sq_weighted", "identity_residual",
        ],
        units=["eV"] + ["-"] * 9,
        metadata={**_BASE_METADATA, "command": "cavity", "config": dict(params)},
    )
    for r in _map_rows(row, list(grid), jobs):
        table.append(r)
    return table


def _run_force_ar(params, jobs):
    n = params.get("n_index")
    if n is None:
        raise ConfigError("ar mode requires n_index")
    in1 = params.get("in1")
    if in1 is None or in1 <= 0:
        raise ConfigError("ar mode requires a positive in1 beam occupation")
    grid = _omega_grid(params)
    S = params["area_m2"]

    def row(omega):
        f1, f2, kappa = frc.ar_interface_forces(n, omega, in1, S)
        if n == 1.0:
            kappa = 0.5  # analytic limit; F1 = F2 = 0 leaves it 0/0
        return [omega * HBAR / EV, f1, f2, f1 + f2, kappa]

    table = ResultTable(
        columns=["omega_ev", "F1", "F2", "F1_plus_F2", "kappa"],
        units=["eV", "N/(rad/s)", "N/(rad/s)", "N/(rad/s)", "-"],
        metadata={
            **_BASE_METADATA,
            "command": "force",
            "config": dict(params),
            "kappa_paper_value": 1.0,
            "kappa_note": (
                "measured kappa = 1/2 under the average photon-number and "
                "two-direction LDOS conventions; fixed factor vs the asserted 1"
            ),
        },
    )
    for r in _map_rows(row, list(grid), jobs):
        table.append(r)
    return table


def run_force(params, jobs=1):
    mode = params["mode"]
    if mode == "ar":
        return _run_force_ar(params, jobs)
    if mode not in ("beam", "thermal"):
        raise ConfigError(f"unknown force mode {mode!r}")
    stack = _stack(params)
    grid = _omega_grid(params)
    S = params["area_m2"]
    eps_mismatch = stack.eps1 != stack.eps3
    if mode == "beam":
        if eps_mismatch:
            raise ConfigError("beam mode requires eps1 == eps3")
        if params.get("in1") is None or params["in1"] <= 0:
            raise ConfigError("beam mode requires a positive in1 occupation")
        if _occupation(params, grid[0], "right") != 0.0:
            raise ConfigError("beam mode requires zero right-side input")

    def row(omega):
        in1 = _occupation(params, omega, "left")
        in3 = _occupation(params, omega, "right")
        numbers = cav.photon_numbers(stack, omega, in1, in3)
        imp1, imp2 = frc.force_density_decomposition(stack, omega, numbers)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            net = frc.net_force_pressure(
                stack, omega, numbers, -1.0, stack.d2 + 1.0, S
            )
        net_imp = S * (imp1.total + imp2.total)
        out = [
            omega * HBAR / EV,
            S * imp1.zcf, S * imp1.tcf, S * imp1.ncf,
            S * imp2.zcf, S * imp2.tcf, S * imp2.ncf,
            net, net_imp,
        ]
        if mode == "beam":
            _, ratio = frc.total_force_beam(stack, omega, in1, S)
            out.append(ratio)
        return out

    columns = [
        "omega_ev",
        "zcf1", "tcf1", "ncf1", "zcf2", "tcf2", "ncf2",
        "net_pressure", "net_impulse",
    ]
    units = ["eV"] + ["N/(rad/s)"] * 8
    if mode == "beam":
        columns.append("F_over_F0")
        units.append("-")
    table = ResultTable(
        columns=columns,
        units=units,
        metadata={
            **_BASE_METADATA,
            "command": "force",
            "config": dict(params),
            "eps1_ne_eps3_warning": eps_mismatch,
        },
    )
    for r in _map_rows(row, list(grid), jobs):
        table.append(r)
    return table


def run_sweep(params, jobs=1):
    base = params["base"]
    key = params["parameter"]
    if params["points"] < 1:
        raise ConfigError("sweep points must be >= 1")
    values = np.linspace(params["min"], params["max"], params["points"])
    parse = _KEY_TABLES[base][key][0]
    runner = _RUNNERS[base]
    columns = units = None
    rows = []
    for value in values:
        base_params = dict(params["base_params"])
        base_params[key] = parse(value)
        sub = runner(base_params, jobs=jobs)
        if len(sub.rows) != 1:
            raise ConfigError(
                f"sweep base run produced {len(sub.rows)} rows; configure the "
                "base for a single row (e.g. omega_points = 1)"
            )
        if columns is None:
            columns, units = sub.columns, sub.units
        rows.append([float(value)] + sub.rows[0])
    table = ResultTable(
        columns=[key] + columns,
        units=["-"] + units,
        metadata={
            **_BASE_METADATA,
            "command": "sweep",
            "config": {k: v for k, v in params.items()},
        },
    )
    for r in rows:
        table.append(r)
    return table


_RUNNERS = {
    "polariton": run_polariton,
    "cavity": run_cavity,
    "force": run_force,
    "sweep": run_sweep,
}


def run_command(command, params, jobs=1):
    """Run a command from resolved params (as stored in output metadata)."""
    if command not in _RUNNERS:
        raise ConfigError(f"unknown command {command!r}")
    return _RUNNERS[command](params, jobs=jobs)


def rerun_from_json(text, jobs=1):
    """Re-execute the run recorded in an emitted JSON result's metadata."""
    table = ResultTable.from_json(text)
    md = table.metadata
    if "command" not in md or "config" not in md:
        raise ConfigError("JSON result carries no embedded command/config")
    return run_command(md["command"], md["config"], jobs=jobs)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="photonforces",
        description="Polariton kinematics and cavity electromagnetic forces.",
    )
    parser.add_argument("command", choices=["polariton", "cavity", "force", "sweep"])
    parser.add_argument("--config", required=True, help="INI config file path")
    parser.add_argument("--out", default=None, help="output file (default stdout)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--jobs", type=int, default=1, help="parallel row workers")
    parser.add_argument(
        "overrides", nargs="*", metavar="key=value",
        help="config overrides; section.key=value targets another section",
    )
    args = parser.parse_intermixed_args(argv)
    try:
        params = load_config(args.config, args.command, args.overrides)
        table = run_command(args.command, params, jobs=args.jobs)
        text = table.to_json() if args.format == "json" else table.to_csv()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except ConfigError as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 2
    except FeasibilityError as exc:
        print(f"error: feasibility: {exc}", file=sys.stderr)
        return 3
    except NumericalGuardError as exc:
        print(f"error: numerical-guard: {exc}", file=sys.stderr)
        return 4
    except (PhotonForcesError, ValueError) as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
