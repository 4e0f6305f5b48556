"""The ``hopf`` command-line front end.

Every subcommand reads one JSON payload (``--in PATH`` or stdin), validates it
against the schema of the selected ``op`` and prints a JSON report with sorted
keys.  Exit status: 0 on success, 1 on invalid input (schema or domain
errors), 2 when a verification property fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict

import jsonschema
import numpy as np

from . import autgroup as ag
from . import flows as fl
from . import picard as pc
from . import polymap as pm
from . import realstruct as rs
from . import topology as tp
from . import verify as vf
from .contractions import Contraction, classify, is_biholomorphic_pair, structural_flags
from .errors import HopfError
from .schemas import COMMANDS, command_schema, op_schema

FLOW_T_WARN = 64


class InputError(Exception):
    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.details = details or []


# ---------------------------------------------------------------------------
# decoding helpers

def _cx(v) -> complex:
    return complex(v) if isinstance(v, (int, float)) else complex(v[0], v[1])


def _enc(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _points(rows, width=None) -> np.ndarray:
    pts = np.array([[_cx(v) for v in row] for row in rows], dtype=complex)
    if width is not None and pts.shape[1] != width:
        raise InputError("points must have %d coordinates" % width)
    return pts


def _enc_points(A) -> list:
    return [[_enc(v) for v in row] for row in np.atleast_2d(A)]


def _structure(f: Contraction, data: dict, tol: float) -> rs.RealStructureSpec:
    if "parity" in data:
        return rs.canonical_structure(f, data["parity"])
    return rs.make_structure(f, pm.PolyMap.from_json(data["lift"]), tol)


def _contraction(payload, key="contraction") -> Contraction:
    return Contraction.from_json(payload[key])


# ---------------------------------------------------------------------------
# handlers: (payload, options) -> report dict

def cmd_classify(op, p, o):
    if op == "classify":
        return classify(pm.PolyMap.from_json(p["map"]), bool(p.get("allow_tilde", False))).to_json()
    if op == "biholomorphic":
        return {"biholomorphic": is_biholomorphic_pair(_contraction(p, "f1"), _contraction(p, "f2"))}
    return structural_flags(_contraction(p))


def cmd_existence(op, p, o):
    f = _contraction(p)
    if op == "existence":
        return rs.existence(f)
    if op == "canonical":
        return rs.canonical_structure(f, p["parity"]).to_json()
    if op == "parity":
        n, parity = rs.parity_of_lift(f, pm.PolyMap.from_json(p["lift"]), o.tol)
        return {"deck_power": n, "parity": parity}
    fam = rs.list_antiholomorphic_family(f)
    if "params" in p:
        params = {}
        for k, v in p["params"].items():
            if k == "A":
                params[k] = np.array([[_cx(x) for x in row] for row in v])
            else:
                params[k] = _cx(v)
        fam["instance"] = rs.instantiate_family(f, params).to_json()
    return fam


def cmd_normalize(op, p, o):
    f = _contraction(p)
    phi = pm.PolyMap.from_json(p["lift"])
    spec, psi = rs.normalize(f, phi, o.tol)
    reduced = rs.reduce_lift(f, phi, spec.deck_power)
    target = rs.canonical_lift(f, spec.parity)
    resid = pm.max_coeff_diff(pm.compose(psi, pm.compose(target, pm.invert(psi))), reduced)
    return {
        "parity": spec.parity,
        "deck_power": spec.deck_power,
        "model": spec.model,
        "psi": psi.to_json(),
        "canonical_lift": target.to_json(),
        "residual": resid,
        "tolerance": o.tol,
    }


def cmd_flow(op, p, o):
    if op == "flow":
        f, t = _contraction(p), float(p["t"])
        out = {"map": fl.flow(f, t).to_json()}
        if abs(t) > FLOW_T_WARN:
            msg = "|t| > %d: coefficients may under- or overflow" % FLOW_T_WARN
            print("warning: " + msg, file=sys.stderr)
            out["warnings"] = [msg]
        return out
    if op == "square":
        g, swapped = fl.square_with_orientation(_contraction(p))
        return {"contraction": g.to_json(), "swapped_coordinates": swapped}
    if op == "generator":
        return {"vectors": _enc_points(fl.generator(_contraction(p), _points(p["points"], 2)))}
    if op == "evaluate":
        return {"points": _enc_points(pm.evaluate(pm.PolyMap.from_json(p["map"]), _points(p["points"], 2)))}
    if op == "compose":
        return {"map": pm.compose(pm.PolyMap.from_json(p["g"]), pm.PolyMap.from_json(p["h"])).to_json()}
    if op == "invert":
        return {"map": pm.invert(pm.PolyMap.from_json(p["map"])).to_json()}
    tol = float(p.get("tol", o.tol if o.tol_given else pm.EQ_TOL))
    m1, m2 = pm.PolyMap.from_json(p["m1"]), pm.PolyMap.from_json(p["m2"])
    return {"equal": pm.maps_equal(m1, m2, tol), "tolerance": tol}


def cmd_root(op, p, o):
    return {"map": fl.kth_root(_contraction(p), int(p["k"])).to_json()}


def cmd_chart(op, p, o):
    if op == "sigma":
        spec = tp.EtaSpec(int(p["eta"]["q"]), float(p["eta"]["B"]), float(p["eta"].get("C", -1.0)))
        return {"points": _enc_points(tp.sigma_project(spec, _points(p["points"], 2)))}
    if op == "model_involution":
        return {"points": _enc_points(tp.model_involution(p["model"], _points(p["points"], 3)))}
    f = _contraction(p)
    if op == "eta":
        return tp.eta_params(f).to_json()
    if op == "big_F":
        Z = _points(p["points"], 2)
        if len(p["t"]) != len(Z):
            raise InputError("t and points must have the same length")
        return {"points": _enc_points(tp.big_F(f, np.array(p["t"], dtype=float), Z))}
    if op == "big_F_inverse":
        t, Z = tp.big_F_inverse(f, _points(p["points"], 2))
        return {"t": [float(x) for x in t], "points": _enc_points(Z)}
    if op == "hopf_point":
        Y = _points(p["points"], 2)
        rep = tp.canonical_representative(f, Y)
        return {"representatives": _enc_points(rep), "times": [float(x) for x in tp.hopf_time(f, rep)]}
    s = _structure(f, p["structure"], o.tol)
    chart = tp.build_chart(f, s)
    out = chart.to_json()
    out["parity"] = s.parity
    if "points" in p:
        Y = _points(p["points"], 2)
        X = chart.forward(Y)
        out["images"] = _enc_points(X)
        out["equivariance_residual"] = float(
            tp.chart_distance(chart.forward(pm.evaluate(s.lift, Y)), tp.model_involution(chart.model, X)).max()
        )
    return out


def cmd_locus(op, p, o):
    f = _contraction(p)
    return tp.real_locus(f, _structure(f, p["structure"], o.tol))


def cmd_quotient(op, p, o):
    if op == "beta":
        return {"points": tp.beta(np.array(p["points"], dtype=float)).tolist()}
    f = _contraction(p)
    return tp.quotient_descriptor(f, _structure(f, p["structure"], o.tol))


def cmd_picard(op, p, o):
    if op == "involution":
        return {"zeta": _enc(pc.pic_involution(_cx(p["zeta"])))}
    if op == "group":
        return pc.pic_real_group(p["parity"])
    if op == "picard":
        return pc.real_structures_on_line_bundle(p["parity"], _cx(p["zeta"])).to_json()
    f = _contraction(p)
    s = _structure(f, p["structure"], o.tol)
    ok = pc.verify_bundle_involution(f, s, _cx(p["zeta"]), _cx(p["nu"]), samples=o.samples or 32, seed=o.seed)
    return {"involutive": ok, "parity": s.parity, "seed": o.seed}


def cmd_aut(op, p, o):
    if op == "spinc":
        A = np.array([[_cx(x) for x in row] for row in p["matrix"]])
        rho, U = ag.spinc_witness(A)
        out = {"circle_part": rho, "su2_part": _enc_points(U)}
        if "alpha" in p:
            out["circle_class"] = _enc(ag.spinc_circle(rho, _cx(p["alpha"])))
        return out
    f = _contraction(p)
    if op == "aut":
        return ag.real_automorphism_group(f, _structure(f, p["structure"], o.tol))
    g = pm.PolyMap.from_json(p["map"])
    if op == "canonical_rep":
        el = ag.canonical_rep(f, g)
        return {"map": el.underlying.to_json(), "shift": ag.coset_shift(f, g)}
    return {"member": ag.membership_even(f, g)}


HANDLERS = {
    "classify": cmd_classify,
    "existence": cmd_existence,
    "normalize": cmd_normalize,
    "flow": cmd_flow,
    "root": cmd_root,
    "chart": cmd_chart,
    "locus": cmd_locus,
    "quotient": cmd_quotient,
    "picard": cmd_picard,
    "aut": cmd_aut,
}


# ---------------------------------------------------------------------------
# driver

def _validate(command: str, payload: Any) -> str:
    if not isinstance(payload, dict):
        raise InputError("payload must be a JSON object", [{"path": "", "message": "not an object"}])
    spec = COMMANDS[command]
    op = payload.get("op", spec["default"])
    if op not in spec["ops"]:
        raise InputError(
            "unknown op %r for %s" % (op, command),
            [{"path": "/op", "message": "must be one of %s" % sorted(spec["ops"])}],
        )
    validator = jsonschema.Draft202012Validator(op_schema(command, op))
    errors = sorted(validator.iter_errors(payload), key=lambda e: list(e.absolute_path))
    if errors:
        details = [
            {"path": "/" + "/".join(str(x) for x in e.absolute_path), "message": e.message} for e in errors
        ]
        raise InputError("payload does not match the schema of %s/%s" % (command, op), details)
    return op


def _read_text(args) -> str:
    try:
        if args.input and args.input != "-":
            with open(args.input, encoding="utf-8") as fh:
                return fh.read()
        return sys.stdin.read()
    except OSError as e:
        raise InputError("cannot read input: %s" % e)


def _parse(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("cannot parse JSON input: %s" % e)


def _run_verify(args) -> tuple:
    suite = args.suite
    if suite is None and args.input:
        text = _read_text(args)
        if text.strip():
            payload = _parse(text)
            _validate("verify", payload)
            suite = payload.get("suite")
    suite = suite or "all"
    names = list(vf.SUITES) if suite == "all" else [suite]
    for n in names:
        if n not in vf.SUITES:
            raise InputError("unknown suite %r" % n, [{"path": "/suite", "message": "must be one of %s" % (["all"] + list(vf.SUITES))}])
    tol = args.tol if args.tol_given else None
    reports = [vf.run_suite(n, args.samples, args.seed, tol) for n in names]
    ok = all(r["pass"] for r in reports)
    report = {"suite": suite, "seed": args.seed, "pass": ok, "suites": reports}
    return report, (0 if ok else 2)


def _emit(report: Dict, args):
    text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
    print(text)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="PATH", help="JSON payload file, '-' for stdin (default: stdin; verify reads a payload only with --in)")
    common.add_argument("--tol", type=float, default=None, help="tolerance override")
    common.add_argument("--samples", type=int, default=None, help="sample count override")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--json-out", metavar="PATH", help="also write the report to PATH")
    common.add_argument("--print-schema", action="store_true", help="print the payload schema and exit")

    parser = argparse.ArgumentParser(prog="hopf", description="Real structures on primary Hopf surfaces")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common], help="%s operations" % name)
        if name == "verify":
            sp.add_argument("--suite", default=None, help="suite name or 'all' (%s)" % ", ".join(vf.SUITES))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.tol_given = args.tol is not None
    if args.tol is None:
        args.tol = rs.VERIFY_TOL
    if args.print_schema:
        print(json.dumps(command_schema(args.command), sort_keys=True, indent=2))
        return 0
    try:
        if args.command == "verify":
            report, code = _run_verify(args)
        else:
            payload = _parse(_read_text(args))
            op = _validate(args.command, payload)
            report = HANDLERS[args.command](op, payload, args)
            code = 0
    except InputError as e:
        _emit({"error": str(e), "details": e.details}, args)
        return 1
    except (HopfError, ValueError, KeyError, np.linalg.LinAlgError) as e:
        _emit({"error": str(e), "type": type(e).__name__}, args)
        return 1
    _emit(report, args)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
