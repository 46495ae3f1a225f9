"""Command-line front end.

Reads JSON state documents (a file path, or ``-`` for stdin) and writes one
JSON object to stdout. Exit codes: 0 success, 1 usage error, 2 domain error.
Floats are written with 17 significant digits so they round-trip exactly.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any

from .errors import InvalidValue, SpinMeansError
from .measure import end_to_end_experiment, estimate_means, simulate_shots
from .qcore import DensityMatrix2, MeanSpinVector, ProbabilityTriple, SigmaTriple, Spinor
from .represent import (
    density_from_means,
    means_from_density,
    means_from_probabilities,
    means_from_state,
    probabilities_from_means,
    state_from_means,
)
from .superpose import superpose

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2

FIELDS = {
    "means": ("sx", "sy", "sz"),
    "probabilities": ("p1", "p2", "p3"),
    "spinor": ("re_up", "im_up", "re_down", "im_down"),
    "density": ("r11", "r22", "re12", "im12"),
}


class UsageError(Exception):
    pass


# --- serialization ---------------------------------------------------------


def _encode(obj: Any, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f"{inner}{json.dumps(str(k))}: {_encode(v, indent + 1)}" for k, v in obj.items())
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[" + ", ".join(_encode(v, indent + 1) for v in obj) + "]"
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite float {obj!r}")
        return format(obj, ".17g")
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return _encode(obj, 0) + "\n"


# --- state documents -------------------------------------------------------


def parse_state_document(doc: Any) -> MeanSpinVector:
    """Validate a state document and return its mean spin vector."""
    if not isinstance(doc, dict):
        raise InvalidValue("state document must be a JSON object")
    kind = doc.get("kind")
    if kind not in FIELDS:
        raise InvalidValue(f"unknown state kind {kind!r}; expected one of {sorted(FIELDS)}")
    names = FIELDS[kind]
    extra = set(doc) - set(names) - {"kind"}
    if extra:
        raise InvalidValue(f"unexpected fields for kind {kind!r}: {sorted(extra)}")
    vals = []
    for name in names:
        if name not in doc:
            raise InvalidValue(f"missing field {name!r} for kind {kind!r}")
        v = doc[name]
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise InvalidValue(f"field {name!r} must be a number")
        vals.append(float(v))
    if kind == "means":
        return MeanSpinVector(*vals)
    if kind == "probabilities":
        return means_from_probabilities(ProbabilityTriple(*vals))
    if kind == "spinor":
        return means_from_state(Spinor(complex(vals[0], vals[1]), complex(vals[2], vals[3])))
    return means_from_density(DensityMatrix2(vals[0], vals[1], complex(vals[2], vals[3])))


def means_doc(m: MeanSpinVector) -> dict:
    return {"sx": m.sx, "sy": m.sy, "sz": m.sz}


def state_document(m: MeanSpinVector, kind: str) -> dict:
    if kind == "means":
        body = means_doc(m)
    elif kind == "probabilities":
        p = probabilities_from_means(m)
        body = {"p1": p.p1, "p2": p.p2, "p3": p.p3}
    elif kind == "spinor":
        s = state_from_means(m)
        body = {
            "re_up": s.up.real,
            "im_up": s.up.imag,
            "re_down": s.down.real,
            "im_down": s.down.imag,
        }
    elif kind == "density":
        rho = density_from_means(m)
        body = {"r11": rho.r11, "r22": rho.r22, "re12": rho.rho12.real, "im12": rho.rho12.imag}
    else:
        raise InvalidValue(f"unknown state kind {kind!r}")
    return {"kind": kind, **body}


def load_state(path: str) -> MeanSpinVector:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InvalidValue(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidValue(f"{path} is not valid JSON: {exc.msg}") from None
    return parse_state_document(doc)


# --- commands --------------------------------------------------------------


def cmd_convert(args) -> dict:
    return state_document(load_state(args.input), args.to)


def cmd_superpose(args) -> dict:
    a, b = load_state(args.state_a), load_state(args.state_b)
    sig = SigmaTriple(*args.sigma)
    res = superpose(a, b, sig, args.method)
    out = {
        "command": "superpose",
        "method": args.method,
        "a": means_doc(a),
        "b": means_doc(b),
        "sigma": list(sig.as_tuple()),
        "means_out": means_doc(res.means_out),
        "T": res.normalization_T,
    }
    if res.max_deviation is not None:
        out["max_deviation"] = res.max_deviation
    return out


def _records_doc(records) -> dict:
    return {r.axis.value: {"shots": r.shots, "ups": r.ups} for r in records}


def _estimate_doc(est) -> dict:
    return {
        "means": dict(zip(("sx", "sy", "sz"), est.means)),
        "stderr": dict(zip("xyz", est.stderr)),
    }


def cmd_simulate(args) -> dict:
    m = load_state(args.state)
    m.require_pure("prepared state")
    records = simulate_shots(m, args.shots, args.seed)
    est = estimate_means(records)
    return {
        "command": "simulate",
        "shots": args.shots,
        "seed": args.seed,
        "true_means": means_doc(m),
        "counts": _records_doc(records),
        **_estimate_doc(est),
    }


def cmd_experiment(args) -> dict:
    a, b = load_state(args.state_a), load_state(args.state_b)
    sig = SigmaTriple(*args.sigma)
    rep = end_to_end_experiment(a, b, sig, args.shots, args.seed)
    return {
        "command": "experiment",
        "shots": args.shots,
        "seed": args.seed,
        "sigma": list(sig.as_tuple()),
        "estimated_a": _estimate_doc(rep.estimate_a),
        "estimated_b": _estimate_doc(rep.estimate_b),
        "projected_a": means_doc(rep.projected_a),
        "projected_b": means_doc(rep.projected_b),
        "means_out": means_doc(rep.result.means_out),
        "T": rep.result.normalization_T,
        "reference_means": means_doc(rep.reference.means_out),
        "reference_T": rep.reference.normalization_T,
        "deviation": rep.deviation,
    }


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinmeans", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="convert a state document to another kind")
    p.add_argument("input", help="state document path, or - for stdin")
    p.add_argument("--to", required=True, choices=sorted(FIELDS))
    p.set_defaults(func=cmd_convert)

    def sigma_arg(p):
        p.add_argument(
            "--sigma", nargs=3, type=float, required=True, metavar=("S1", "S2", "S3"),
            help="coefficient triple (sig1, sig2, sig3)",
        )

    p = sub.add_parser("superpose", help="superpose two pure states")
    p.add_argument("state_a")
    p.add_argument("state_b")
    sigma_arg(p)
    p.add_argument("--method", choices=("closed", "oracle", "checked"), default="checked")
    p.set_defaults(func=cmd_superpose)

    p = sub.add_parser("simulate", help="simulate x/y/z spin measurements")
    p.add_argument("state")
    p.add_argument("--shots", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("experiment", help="measure two states and superpose the estimates")
    p.add_argument("state_a")
    p.add_argument("state_b")
    sigma_arg(p)
    p.add_argument("--shots", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stdout.write(dumps({"code": "UsageError", "message": str(exc)}))
        return EXIT_USAGE
    try:
        out = dumps(args.func(args))
    except SpinMeansError as exc:
        sys.stdout.write(dumps({"code": exc.code, "message": str(exc)}))
        return EXIT_DOMAIN
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
