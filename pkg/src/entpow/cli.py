"""Command-line front end.

Subcommands: gate, schmidt, convex-sum, ep-analytic, aep-max, ep-numeric,
aep-numeric, sweep, probe-f4.  Results are JSON documents on stdout; errors
are one-line diagnostics on stderr with a nonzero exit code.  Angles accept
literal pi arithmetic (pi, pi/2, 3pi/4) as well as decimals.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from itertools import product
from math import pi

import numpy as np

from . import io as mio
from .analytic import (ControlledDiagonalSpec, TableISpec, ThreeQubitSr2Spec,
                       aep_is_maximal_3qubit, aep_is_maximal_nqubit,
                       ep_3qubit_details, ep_3qubit_sr2,
                       ep_controlled_diagonal_details, ep_nqubit_details,
                       ep_nqubit_sr2)
from .gates import (Unitary, ccp, ccz, cnot, controlled_diagonal,
                    cyclic_shift3, fredkin3, fredkin4, swap, table1_gate,
                    three_qubit_sr2_gate, toffoli)
from .phases import (PhaseMultiset, binding_adjacent_pair, max_convex_sum,
                     min_convex_sum, normalize_phases, origin_in_hull)
from .schmidt import Bipartition, cut, ep_bounds, schmidt_decompose
from .variational import (OptimizerConfig, fredkin4_conjecture_probe,
                          numeric_aep, numeric_aep_cut, numeric_ep,
                          numeric_ep_cut)

_ANGLE_RE = re.compile(r"([+-]?\d*\.?\d*)pi(?:/(\d*\.?\d+))?")


def parse_angle(text: str) -> float:
    """Parse an angle: decimals or pi arithmetic like pi, -pi/2, 3pi/4."""
    s = text.strip().lower().replace(" ", "")
    if "pi" in s:
        m = _ANGLE_RE.fullmatch(s)
        if not m:
            raise ValueError(f"cannot parse angle '{text}'")
        coef_str = m.group(1)
        if coef_str in ("", "+"):
            coef = 1.0
        elif coef_str == "-":
            coef = -1.0
        else:
            coef = float(coef_str)
        div = float(m.group(2)) if m.group(2) else 1.0
        return coef * pi / div
    return float(s)


def parse_angles(text: str) -> list[float]:
    return [parse_angle(tok) for tok in text.split(",") if tok.strip()]


def _parse_cut(text: str, n_parties: int) -> Bipartition:
    left = {int(tok) for tok in text.split(",") if tok.strip()}
    return cut(left, n_parties)


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _fmt(values) -> list[str]:
    return [format(float(v), ".12g") for v in values]


# -- gate construction --------------------------------------------------------

def _build_gate(args) -> Unitary:
    name = args.gate.replace("_", "-")
    if name == "toffoli":
        return toffoli(args.n or 3)
    if name == "ccp":
        if args.phi is None:
            raise ValueError("ccp requires --phi")
        return ccp(parse_angle(args.phi))
    if name == "ccz":
        return ccz()
    if name == "cnot":
        return cnot()
    if name == "swap":
        return swap()
    if name == "fredkin3":
        return fredkin3()
    if name == "fredkin4":
        return fredkin4()
    if name == "cyclic-shift3":
        return cyclic_shift3()
    if name == "three-qubit":
        spec = _three_qubit_spec(args)
        return three_qubit_sr2_gate(spec)
    if name == "table1":
        return table1_gate(_table1_spec(args))
    if name == "controlled":
        if args.phases is None:
            raise ValueError("controlled requires --phases")
        phases = normalize_phases(parse_angles(args.phases))
        spec = ControlledDiagonalSpec(phases, len(phases))
        return controlled_diagonal(spec, args.da, args.rank)
    raise ValueError(f"unknown gate '{args.gate}'")


def _three_qubit_spec(args) -> ThreeQubitSr2Spec:
    if args.theta is None or args.omega is None:
        raise ValueError("three-qubit requires --theta and --omega")
    theta = parse_angles(args.theta)
    omega = parse_angles(args.omega)
    return ThreeQubitSr2Spec(tuple(theta), tuple(omega))


def _table1_spec(args) -> TableISpec:
    if args.n is None or args.k is None:
        raise ValueError("table1 requires --n and --k")
    n = args.n
    k_raw = str(args.k)
    if k_raw == "n":
        k = n
    elif k_raw in ("n-1", "n1"):
        k = n - 1
    else:
        k = int(k_raw)
    kwargs = {}
    if args.phi is not None:
        kwargs["phi"] = parse_angle(args.phi)
    if args.theta is not None:
        kwargs["theta"] = parse_angle(args.theta)
    if args.beta is not None:
        vals = parse_angles(args.beta)
        fam = "n" if k == n else ("n-1" if k == n - 1 else str(k))
        if fam == "2":
            kwargs["betas"] = tuple(vals)
        else:
            kwargs["beta"] = vals[0]
    if args.alpha is not None:
        kwargs["alpha"] = parse_angle(args.alpha)
    return TableISpec(n=n, k=k, **kwargs)


def _input_gate(args) -> Unitary:
    if getattr(args, "file", None):
        return mio.load_matrix(args.file)
    if getattr(args, "gate", None):
        return _build_gate(args)
    raise ValueError("provide either --gate or --file")


def _config(args) -> OptimizerConfig:
    ancilla = args.ancilla
    if ancilla not in ("match", "none"):
        ancilla = int(ancilla)
    return OptimizerConfig(
        restarts=args.restarts, max_iters=args.iters, seed=args.seed,
        value_tol=args.value_tol, step_tol=args.step_tol, ancilla=ancilla)


def _add_gate_params(p: argparse.ArgumentParser, positional: bool = False):
    if positional:
        p.add_argument("gate", help="gate name")
    else:
        p.add_argument("--gate", help="gate name")
        p.add_argument("--file", help="matrix file path")
    p.add_argument("--n", type=int, help="qubit count")
    p.add_argument("--k", help="singular number (n, n-1, 2, 1, 0)")
    p.add_argument("--phi", help="angle")
    p.add_argument("--theta", help="angle or comma list")
    p.add_argument("--omega", help="comma list of angles")
    p.add_argument("--beta", help="angle or comma list")
    p.add_argument("--alpha", help="angle")
    p.add_argument("--phases", help="comma list of angles")
    p.add_argument("--da", type=int, default=2, help="control-side dimension")
    p.add_argument("--rank", type=int, default=1, help="rank of P1")


def _add_cfg_flags(p: argparse.ArgumentParser):
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--value-tol", type=float, default=1e-3)
    p.add_argument("--step-tol", type=float, default=1e-9)
    p.add_argument("--ancilla", default="match",
                   help='"match", "none", or an integer dimension')
    p.add_argument("--cut", help="comma list of left party indices")
    p.add_argument("--certificate-out", help="write the achieving state here")


def _result_doc(res, label: str) -> dict:
    doc = {
        "value_ebits": res.value,
        "method": res.method,
        "bipartition": res.bipartition.label() if res.bipartition else label,
        "bounds": list(res.bounds),
        "seed": res.seed,
        "restarts_used": res.restarts_used,
    }
    return doc


def _write_certificate(res, path: str) -> None:
    state = res.certificate_state
    doc = {
        "dims": list(state.dims),
        "entries": [[float(z.real), float(z.imag)] for z in state.amplitudes],
    }
    with open(path, "w", encoding="utf-8") as f:
        json.dump(doc, f)
        f.write("\n")


# -- subcommand handlers ------------------------------------------------------

def _cmd_gate(args) -> int:
    u = _build_gate(args)
    if args.out:
        mio.save_matrix(u, args.out)
    else:
        print(mio.dumps_matrix(u))
    return 0


def _cmd_schmidt(args) -> int:
    u = _input_gate(args)
    if not args.cut:
        raise ValueError("schmidt requires --cut")
    bip = _parse_cut(args.cut, u.n_parties)
    dec = schmidt_decompose(u, bip)
    lower, upper = ep_bounds(u, bip)
    _emit({
        "bipartition": bip.label(),
        "rank": dec.rank,
        "coefficients": _fmt(dec.coefficients),
        "bounds": [lower, upper],
    })
    return 0


def _cmd_convex_sum(args) -> int:
    angles = parse_angles(args.angles)
    phases = normalize_phases(angles)
    pair = binding_adjacent_pair(phases)
    _emit({
        "angles": list(phases.angles),
        "min": min_convex_sum(phases),
        "max": max_convex_sum(phases),
        "origin_in_hull": origin_in_hull(phases),
        "binding_pair": list(pair),
    })
    return 0


def _cmd_ep_analytic(args) -> int:
    fam = args.family
    if fam == "ccp":
        if args.phi is None:
            raise ValueError("ccp requires --phi")
        phi = parse_angle(args.phi)
        spec = ThreeQubitSr2Spec((0, 0, 0, 0), (0, 0, 0, phi))
        detail = ep_3qubit_details(spec)
    elif fam == "three-qubit":
        detail = ep_3qubit_details(_three_qubit_spec(args))
    elif fam == "table1":
        detail = ep_nqubit_details(_table1_spec(args))
    elif fam == "controlled":
        if args.phases is None:
            raise ValueError("controlled requires --phases")
        phases = normalize_phases(parse_angles(args.phases))
        detail = ep_controlled_diagonal_details(
            ControlledDiagonalSpec(phases, len(phases)))
    else:
        raise ValueError(f"unknown analytic family '{fam}'")
    detail["method"] = "analytic"
    detail["bounds"] = [detail["value_ebits"], detail["value_ebits"]]
    detail["bipartition"] = detail.pop("governing_label")
    _emit(detail)
    return 0


def _cmd_aep_max(args) -> int:
    if args.family == "three-qubit":
        spec = _three_qubit_spec(args)
        maximal = aep_is_maximal_3qubit(spec)
        value = ep_3qubit_sr2(spec)
    elif args.family == "table1":
        spec = _table1_spec(args)
        maximal = aep_is_maximal_nqubit(spec)
        value = ep_nqubit_sr2(spec)
    else:
        raise ValueError(f"unknown family '{args.family}'")
    _emit({
        "assisted_power_maximal": bool(maximal),
        "value_ebits": value,
        "method": "analytic",
    })
    return 0


def _cmd_ep_numeric(args) -> int:
    u = _input_gate(args)
    cfg = _config(args)
    if args.cut:
        res = numeric_ep_cut(u, _parse_cut(args.cut, u.n_parties), cfg)
    else:
        res = numeric_ep(u, cfg)
    doc = _result_doc(res, "all")
    if args.certificate_out:
        _write_certificate(res, args.certificate_out)
        doc["certificate_path"] = args.certificate_out
    _emit(doc)
    return 0


def _cmd_aep_numeric(args) -> int:
    u = _input_gate(args)
    cfg = _config(args)
    if args.cut:
        res = numeric_aep_cut(u, _parse_cut(args.cut, u.n_parties), cfg)
    else:
        res = numeric_aep(u, cfg)
    doc = _result_doc(res, "all")
    if args.certificate_out:
        _write_certificate(res, args.certificate_out)
        doc["certificate_path"] = args.certificate_out
    _emit(doc)
    return 0


def _cmd_probe_f4(args) -> int:
    cfg = _config(args)
    report = fredkin4_conjecture_probe(cfg)
    doc = {
        "cut": "AD:BC",
        "best_value_ebits": report.best.value,
        "seeded_value_ebits": report.seeded_value,
        "bound_interval": list(report.bound_interval),
        "exceeds_two_plus_tol": report.exceeds_two,
        "restarts": report.restarts,
        "seed": report.best.seed,
    }
    if args.certificate_out:
        _write_certificate(report.best, args.certificate_out)
        doc["certificate_path"] = args.certificate_out
    _emit(doc)
    return 0


# -- parameter sweeps ---------------------------------------------------------

_FAMILY_PARAMS = {
    "ccp": ("phi",),
    "kn": ("phi",),
    "kn1": ("phi", "theta"),
    "k2": None,  # beta2..betan, depends on n
    "k1": ("alpha",),
    "k0": ("alpha", "beta"),
}


def _family_params(family: str, n: int) -> tuple[str, ...]:
    if family == "k2":
        return tuple(f"beta{i}" for i in range(2, n + 1))
    params = _FAMILY_PARAMS.get(family)
    if params is None:
        raise ValueError(f"unknown sweep family '{family}'")
    return params


def _sweep_value(family: str, n: int, point: dict[str, float]) -> float:
    if family == "ccp":
        return ep_3qubit_sr2(
            ThreeQubitSr2Spec((0, 0, 0, 0), (0, 0, 0, point["phi"])))
    if family == "kn":
        return ep_nqubit_sr2(TableISpec(n=n, k=n, phi=point["phi"]))
    if family == "kn1":
        return ep_nqubit_sr2(TableISpec(n=n, k=n - 1, phi=point["phi"],
                                        theta=point["theta"]))
    if family == "k2":
        betas = tuple(point[f"beta{i}"] for i in range(2, n + 1))
        return ep_nqubit_sr2(TableISpec(n=n, k=2, betas=betas))
    if family == "k1":
        return ep_nqubit_sr2(TableISpec(n=n, k=1, alpha=point["alpha"]))
    if family == "k0":
        return ep_nqubit_sr2(TableISpec(n=n, k=0, alpha=point["alpha"],
                                        beta=point["beta"]))
    raise ValueError(f"unknown sweep family '{family}'")


def _sweep_gate(family: str, n: int, point: dict[str, float]) -> Unitary:
    if family == "ccp":
        return ccp(point["phi"])
    if family == "kn":
        return table1_gate(TableISpec(n=n, k=n, phi=point["phi"]))
    if family == "kn1":
        return table1_gate(TableISpec(n=n, k=n - 1, phi=point["phi"],
                                      theta=point["theta"]))
    if family == "k2":
        betas = tuple(point[f"beta{i}"] for i in range(2, n + 1))
        return table1_gate(TableISpec(n=n, k=2, betas=betas))
    if family == "k1":
        return table1_gate(TableISpec(n=n, k=1, alpha=point["alpha"]))
    return table1_gate(TableISpec(n=n, k=0, alpha=point["alpha"],
                                  beta=point["beta"]))


def run_sweep(family: str, n: int, grids: dict[str, tuple[float, float, int]],
              fixed: dict[str, float], numeric_cfg: OptimizerConfig | None = None,
              ) -> tuple[list[str], list[list[str]]]:
    """Evaluate the analytic value on a lexicographic parameter grid.

    Returns (header, rows) with numeric strings at 12 significant digits.
    Row order is the lexicographic product of the grids in the family's
    canonical parameter order.
    """
    params = _family_params(family, n)
    for name in grids:
        if name not in params:
            raise ValueError(f"parameter '{name}' not in family '{family}'")
        if grids[name][2] < 2:
            raise ValueError("each swept parameter needs at least 2 steps")
    for name in fixed:
        if name not in params:
            raise ValueError(f"parameter '{name}' not in family '{family}'")
    axes = []
    for name in params:
        if name in grids:
            start, stop, steps = grids[name]
            axes.append(np.linspace(start, stop, int(steps)))
        elif name in fixed:
            axes.append(np.array([fixed[name]]))
        else:
            raise ValueError(f"parameter '{name}' needs a grid or a fixed value")
    header = list(params) + ["value_ebits"]
    if numeric_cfg is not None:
        header.append("value_numeric_ebits")
    rows = []
    for combo in product(*axes):
        point = dict(zip(params, (float(c) for c in combo)))
        row = _fmt(point[p] for p in params)
        row.append(format(_sweep_value(family, n, point), ".12g"))
        if numeric_cfg is not None:
            gate = _sweep_gate(family, n, point)
            row.append(format(numeric_ep(gate, numeric_cfg).value, ".12g"))
        rows.append(row)
    return header, rows


def _cmd_sweep(args) -> int:
    grids: dict[str, tuple[float, float, int]] = {}
    for item in args.grid or []:
        name, _, spec = item.partition("=")
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid '{item}' must be name=start:stop:steps")
        grids[name] = (parse_angle(parts[0]), parse_angle(parts[1]),
                       int(parts[2]))
    fixed = {}
    for item in args.fix or []:
        name, _, val = item.partition("=")
        fixed[name] = parse_angle(val)
    cfg = _config(args) if args.numeric else None
    header, rows = run_sweep(args.family, args.n, grids, fixed, cfg)
    lines = [",".join(header)] + [",".join(r) for r in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entpow",
        description="Entangling power of multipartite unitary gates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gate", help="emit a gate matrix")
    _add_gate_params(p, positional=True)
    p.add_argument("--out", help="output file (stdout if omitted)")
    p.set_defaults(func=_cmd_gate)

    p = sub.add_parser("schmidt", help="operator Schmidt decomposition")
    _add_gate_params(p)
    p.add_argument("--cut", required=True,
                   help="comma list of left party indices")
    p.set_defaults(func=_cmd_schmidt)

    p = sub.add_parser("convex-sum", help="min/max convex sum of phases")
    p.add_argument("angles", help="comma list of angles")
    p.set_defaults(func=_cmd_convex_sum)

    p = sub.add_parser("ep-analytic", help="closed-form entangling power")
    p.add_argument("family", choices=["ccp", "three-qubit", "table1",
                                      "controlled"])
    _add_gate_params(p)
    p.set_defaults(func=_cmd_ep_analytic)

    p = sub.add_parser("aep-max",
                       help="is the assisted entangling power maximal?")
    p.add_argument("family", choices=["three-qubit", "table1"])
    _add_gate_params(p)
    p.set_defaults(func=_cmd_aep_max)

    p = sub.add_parser("ep-numeric", help="variational entangling power")
    _add_gate_params(p)
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_ep_numeric)

    p = sub.add_parser("aep-numeric",
                       help="variational assisted entangling power")
    _add_gate_params(p)
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_aep_numeric)

    p = sub.add_parser("sweep", help="parameter sweep to CSV")
    p.add_argument("--family", required=True,
                   choices=["ccp", "kn", "kn1", "k2", "k1", "k0"])
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--grid", action="append",
                   help="name=start:stop:steps (repeatable)")
    p.add_argument("--fix", action="append", help="name=value (repeatable)")
    p.add_argument("--numeric", action="store_true",
                   help="add a variational column")
    p.add_argument("--out", help="CSV path (stdout if omitted)")
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("probe-f4", help="four-qubit Fredkin conjecture probe")
    _add_cfg_flags(p)
    p.set_defaults(func=_cmd_probe_f4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
