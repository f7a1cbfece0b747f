"""Command-line front end: preimage, origami, quotients, classify, verify."""
from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
import time
from fractions import Fraction
from typing import Any, Callable

from . import forms
from .divpoly import (
    AffinePoint, CurveError, CurveSpec, origami_octic, origami_quartic,
    origami_quartic_by_elimination, origami_quartic_closed, preimage_poly_x, preimage_poly_xy,
    verify_coefficient_reductions, verify_s_identity,
)
from .elimination import discriminant
from .exactnum import factor_rational
from .polyring import MultiPoly, render, var
from .quotients import (
    beta_map, inverse_direction_check, quotient_polys, verify_isomorphism,
)
from .report import IdentityReport
from .resolvent.galois import (
    classify_octic, cubic_galois, factor_search_evidence, frobenius_report,
    irreducibility_evidence, quartic_galois,
)
from .resolvent.origami import (
    origami_r, verify_d1_d2_formulas, verify_discriminant_formula, verify_general_h_formula,
    verify_h_factorization, verify_k_closed_form, verify_q_minus_u, verify_resolvent_formulas,
)
from .resolvent.perm import cycle_type_set, normalizer_in_S8, quaternion_regular
from .resolvent.quartic import Quartic, degree12_resolvent, p1_p2, two_set_resolvent

WRAP = 100
_RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


class ValidationError(ValueError):
    pass


def rational_arg(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")
    return Fraction(text.replace(" ", ""))


def _qstr(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Job:
    """Collects outputs and identity results for one command."""

    def __init__(self, command: str, inputs: dict[str, Any], effort: int):
        self.command = command
        self.inputs = inputs
        self.effort = effort
        self.outputs: dict[str, Any] = {}
        self.reports: list[IdentityReport] = []

    def poly(self, key: str, p: MultiPoly) -> None:
        self.outputs[key] = p

    def const(self, key: str, q) -> None:
        self.outputs[key] = {"value": _qstr(q), "factored": factor_rational(q, self.effort)}

    def check(self, rep: IdentityReport) -> None:
        self.reports.append(rep)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def identities(self) -> list[dict[str, Any]]:
        out = []
        for rep in self.reports:
            for name, node in rep.flatten():
                if node.children:
                    continue
                d: dict[str, Any] = {"name": name, "status": node.status}
                if node.residual is not None:
                    d["residual"] = str(node.residual)
                if node.notes:
                    d["notes"] = list(node.notes)
                out.append(d)
        return out


def _jsonable(v):
    if isinstance(v, MultiPoly):
        return str(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, Fraction):
        return _qstr(v)
    return v


def to_json(job: Job, elapsed_ms: int) -> dict[str, Any]:
    return {
        "command": job.command,
        "inputs": _jsonable(job.inputs),
        "outputs": _jsonable(job.outputs),
        "identities": job.identities(),
        "timing_ms": elapsed_ms,
    }


def _text_value(v, indent: str) -> list[str]:
    if isinstance(v, MultiPoly):
        lines = render(v, width=WRAP).split("\n")
        return [lines[0]] + [indent + "  " + ln for ln in lines[1:]]
    if isinstance(v, dict) and set(v) == {"value", "factored"}:
        return [f"{v['value']}  [{v['factored']}]"]
    if isinstance(v, dict):
        out = [""]
        for k, x in v.items():
            sub = _text_value(x, indent + "  ")
            out.append(f"{indent}  {k}: {sub[0]}")
            out.extend(sub[1:])
        return out
    if isinstance(v, (list, tuple)):
        return [", ".join(str(_jsonable(x)) for x in v) or "none"]
    return [str(_jsonable(v))]


def to_text(job: Job, elapsed_ms: int) -> str:
    lines = [f"command: {job.command}"]
    if job.inputs:
        lines.append("inputs: " + ", ".join(f"{k}={_jsonable(v)}" for k, v in job.inputs.items()))
    for k, v in job.outputs.items():
        sub = _text_value(v, "")
        lines.append(f"{k}: {sub[0]}")
        lines.extend(sub[1:])
    if job.reports:
        lines.append("identities:")
        for d in job.identities():
            lines.append(f"  [{d['status'].upper()}] {d['name']}")
            for note in d.get("notes", []):
                lines.append(f"      note: {note}")
            if "residual" in d:
                res = d["residual"]
                lines.append(f"      residual: {res if len(res) <= WRAP else res[:WRAP] + ' ...'}")
    lines.append(f"time: {elapsed_ms} ms")
    return "\n".join(lines)


# commands ------------------------------------------------------------------

def _curve_point(args) -> tuple[CurveSpec, AffinePoint]:
    try:
        curve = CurveSpec.numeric(args.a, args.b)
        P = AffinePoint.numeric(args.z, args.w)
        P.check_on(curve)
    except CurveError as exc:
        raise ValidationError(str(exc)) from exc
    return curve, P


def cmd_preimage(args, job: Job) -> None:
    curve, P = _curve_point(args)
    if args.n < 2:
        raise ValidationError("n must be at least 2")
    fx = preimage_poly_x(args.n, curve, P)
    job.poly("f_x", fx)
    job.outputs["galois_cubic"] = cubic_galois(args.a, args.b).value
    job.const("disc_f_x", discriminant(fx, "x").constant_value())
    if args.n == 2:
        if not P.w:
            raise ValidationError("2-torsion point (w = 0): the construction divides by w^4")
        job.poly("f_xy", preimage_poly_xy(2, curve, P))
        fy = origami_quartic(curve, P, check=False)
        job.poly("f_y", fy)
        job.const("disc_f_y", discriminant(fy, "y").constant_value())
        job.outputs["galois_f_x"] = quartic_galois(fx, "x").group
        job.outputs["galois_f_y"] = quartic_galois(fy, "y").group
        job.check(IdentityReport.compare(
            "f_y by elimination equals the closed quartic",
            origami_quartic_by_elimination(curve, P), origami_quartic_closed(curve, P)))
    else:
        ev = irreducibility_evidence(fx)
        job.outputs["f_x_irreducible"] = ev.proved


def _hol_cycle_types():
    return cycle_type_set(normalizer_in_S8(quaternion_regular()))


def cmd_origami(args, job: Job) -> None:
    curve, P = _curve_point(args)
    if not P.w:
        raise ValidationError("2-torsion point (w = 0): the construction divides by w^4")
    job.poly("f_P", origami_octic(curve, P, 1))
    job.poly("f_-P", origami_octic(curve, P, -1))
    r = origami_r(curve, P)
    pair = p1_p2(r)
    job.poly("k", two_set_resolvent(r))
    job.poly("p1", pair.p1)
    job.poly("p2", pair.p2)
    h = degree12_resolvent(r)
    job.poly("h", h)
    h_ev = factor_search_evidence(h)
    job.outputs["h_irreducible"] = {"proved": h_ev.proved, "primes": len(h_ev.primes_used)}
    cls = classify_octic(r)
    job.outputs["classification"] = cls.to_dict()
    for key in ("D", "d1", "d2"):
        val = getattr(cls, key)
        if val is None:
            val = {"D": lambda: discriminant(r.octic("x"), "x").constant_value(),
                   "d1": lambda: pair.d1.constant_value(),
                   "d2": lambda: pair.d2.constant_value()}[key]()
        job.const(key, val)
    rep = frobenius_report(r.octic("x"), args.primes)
    hol = _hol_cycle_types()
    job.outputs["frobenius"] = {
        "primes": len(rep.rows),
        "aggregate": rep.to_dict()["aggregate"],
        "outside_hol_q8": [" ".join(map(str, m)) for m in sorted(rep.outside(hol))],
    }
    job.check(IdentityReport.compare(
        "f_y by elimination equals the closed quartic",
        origami_quartic_by_elimination(curve, P), origami_quartic_closed(curve, P)))
    job.check(verify_s_identity(curve, P))
    job.check(verify_discriminant_formula(curve, P))
    job.check(verify_d1_d2_formulas(curve, P))
    job.check(verify_h_factorization(curve, P))


def cmd_quotients(args, job: Job) -> None:
    curve, P = _curve_point(args)
    if not args.b:
        raise ValidationError("isomorphism formula divides by 9b, so b = 0 is not supported")
    qs = quotient_polys(curve, P)
    galois = {}
    for key, p in qs.as_dict().items():
        job.poly(key, p)
        if key != "T4":
            galois[key] = quartic_galois(p).group
    beta = beta_map(curve, P)
    job.poly("beta_numerator", beta.numerator)
    job.const("beta_denominator", beta.denominator.constant_value())
    job.outputs["galois"] = galois
    job.check(verify_isomorphism(curve, P).report())
    job.check(inverse_direction_check(curve, P))
    if P.w:
        job.check(IdentityReport.compare(
            "h3 equals the origami quartic", qs.h3,
            origami_quartic(curve, P, check=False).substitute("y", var("x"))))


def cmd_classify(args, job: Job) -> None:
    r = Quartic(args.c3, args.c2, args.c1, args.c0)
    job.poly("octic", r.octic("x"))
    pair = p1_p2(r)
    job.poly("k", two_set_resolvent(r))
    job.poly("p1", pair.p1)
    job.poly("p2", pair.p2)
    job.poly("h", degree12_resolvent(r))
    job.const("D", discriminant(r.octic("x"), "x").constant_value())
    job.const("d1", pair.d1.constant_value())
    job.const("d2", pair.d2.constant_value())
    job.outputs["classification"] = classify_octic(r).to_dict()
    job.check(verify_h_factorization(quartic=r))


VERIFY_CHECKS: list[tuple[str, Callable[[], IdentityReport]]] = [
    ("s identity", verify_s_identity),
    ("coefficient reductions", verify_coefficient_reductions),
    ("two-set resolvent", verify_k_closed_form),
    ("octic discriminant", verify_discriminant_formula),
    ("q - u", verify_q_minus_u),
    ("d1 and d2", verify_d1_d2_formulas),
    ("h factorization", verify_h_factorization),
    ("closed degree-12 formula", verify_general_h_formula),
    ("root enumeration", verify_resolvent_formulas),
    ("isomorphism", lambda: verify_isomorphism().report()),
]


def cmd_verify(args, job: Job) -> None:
    for _, fn in VERIFY_CHECKS:
        job.check(fn())


COMMANDS = {
    "preimage": cmd_preimage,
    "origami": cmd_origami,
    "quotients": cmd_quotients,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="q8origami",
        description="Exact computations for quaternion-origami octics over elliptic curves.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--effort", type=int, default=200000,
                        help="iteration budget for factoring displayed constants")
    parser.add_argument("--inject-fault", metavar="NAME", default=None, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def curve_args(p):
        for name in ("a", "b", "z", "w"):
            p.add_argument(f"--{name}", type=rational_arg, required=True)

    p = sub.add_parser("preimage", help="[n]^-1 P polynomials and Galois certificates")
    curve_args(p)
    p.add_argument("--n", type=int, default=2)
    p = sub.add_parser("origami", help="origami octics, resolvents and classification")
    curve_args(p)
    p.add_argument("--primes", type=int, default=200)
    p = sub.add_parser("quotients", help="S4-quotient quartics and the isomorphism check")
    curve_args(p)
    p = sub.add_parser("classify", help="classify r(x^2) for a monic quartic r")
    for name in ("c3", "c2", "c1", "c0"):
        p.add_argument(f"--{name}", type=rational_arg, required=True)
    sub.add_parser("verify", help="run every symbolic identity check")
    return parser


def _inputs(args) -> dict[str, Any]:
    skip = {"command", "format", "effort", "inject_fault"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    job = Job(args.command, _inputs(args), args.effort)
    if args.inject_fault and args.inject_fault not in forms.NAMES:
        print(f"error: unknown form {args.inject_fault!r}", file=sys.stderr)
        return 2
    fault = forms.perturbed(args.inject_fault) if args.inject_fault else contextlib.nullcontext()
    start = time.perf_counter()
    try:
        with fault:
            COMMANDS[args.command](args, job)
    except (ValidationError, CurveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = int((time.perf_counter() - start) * 1000)
    if args.format == "json":
        print(json.dumps(to_json(job, elapsed), indent=2))
    else:
        print(to_text(job, elapsed))
    return 0 if job.passed else 1


if __name__ == "__main__":
    sys.exit(main())
