"""Command-line surface.

Every operation is reachable as `<group> <subcommand>`; results are printed
as key/value text or, with --json, as one canonical JSON document per
invocation (sorted keys, compact separators, every exact value carried as a
string).  Exit codes: 0 success, 2 input error, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import duality, gamma, padic, supernatural, tate
from .errors import DomainError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3


class InputError(Exception):
    """Malformed command-line input (maps to exit code 2)."""


@dataclass
class CommandResult:
    command: str
    inputs: dict
    result: dict | None
    status: str = "ok"
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "status": self.status,
            "diagnostics": self.diagnostics,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = []
        if self.status != "ok":
            lines.append(f"status: {self.status}")
            lines.extend(f"error: {d}" for d in self.diagnostics)
            return "\n".join(lines)
        for key, value in (self.result or {}).items():
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value)
            lines.append(f"{key}: {value}")
        return "\n".join(lines)


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed {what}: {text!r}") from None


def _parse_q(ns, flag: str = "q") -> padic.PAdicInt:
    """Build the p-adic operand from --p/--prec and an integer or a digit
    list like `[0,1,0,0]` (or `0,1,0,0`)."""
    raw = getattr(ns, flag)
    if raw is None:
        raise InputError(f"--{flag} is required")
    text = raw.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    if "," in text:
        try:
            digits = tuple(int(s) for s in text.split(","))
        except ValueError:
            raise InputError(f"malformed digit list for --{flag}: {raw!r}") from None
        if ns.prec is not None and ns.prec != len(digits):
            raise InputError(
                f"--prec {ns.prec} does not match digit list length {len(digits)}"
            )
        return padic.PAdicInt(ns.p, digits)
    try:
        value = int(text)
    except ValueError:
        raise InputError(f"--{flag} must be an integer or digit list, got {raw!r}") from None
    if ns.prec is None:
        raise InputError(f"--prec is required when --{flag} is an integer")
    return padic.padic_from_integer(value, ns.p, ns.prec)


def _residue(x: padic.PAdicInt) -> str:
    return str(x)


def _cmd_padic_canon(ns):
    q = _parse_q(ns)
    seq = padic.canonical_sequence(q)
    return {
        "p": q.p,
        "precision": q.precision,
        "q": _residue(q),
        "entries": list(seq.entries),
    }


def _cmd_padic_arith(ns):
    x = _parse_q(ns, "x")
    y = _parse_q(ns, "y") if ns.y is not None else None
    out = padic.arithmetic(ns.op, x, y)
    return {
        "op": ns.op,
        "result": _residue(out),
        "digits": list(out.digits),
    }


def _cmd_gamma_gens(ns):
    q = _parse_q(ns)
    return {"generators": [str(g) for g in gamma.gamma_generators(q)]}


def _cmd_gamma_group(ns):
    q = _parse_q(ns)
    return {"generator": str(gamma.gamma_group(q).generator)}


def _cmd_gamma_prufer_check(ns):
    q = _parse_q(ns)
    report = gamma.prufer_relations_check(q)
    return {
        "p_gamma1_zero": report.p_gamma1_zero,
        "relations": [
            {"n": r.n, "holds": r.holds, "discrepancy": r.discrepancy}
            for r in report.relations
        ],
        "levels": list(report.levels),
        "unbounded_order": report.unbounded_order,
        "all_hold": report.all_hold,
    }


def _cmd_gamma_contains_one(ns):
    q = _parse_q(ns)
    report = gamma.contains_one_report(q)
    return {"contains_one": report.contains_one, "content": report.content}


def _cmd_gamma_density(ns):
    q = _parse_q(ns)
    target = _parse_fraction(ns.target, "--target")
    epsilon = _parse_fraction(ns.epsilon, "--epsilon")
    w = gamma.density_witness(q, target, epsilon)
    return {"witness": str(w.witness), "distance": str(w.distance)}


def _cmd_gamma_limit(ns):
    q = _parse_q(ns)
    limit = gamma.supernatural_limit(q)
    return {
        "sn": supernatural.format_supernatural(limit.sn),
        "scale": limit.scale,
        "stabilized": limit.stabilized,
    }


def _cmd_uhf_k0(ns):
    desc = supernatural.parse_descriptor(ns.desc)
    return {
        "descriptor": supernatural.format_descriptor(desc),
        "k0": supernatural.format_supernatural(supernatural.k0_of(desc)),
    }


def _cmd_uhf_stable_iso(ns):
    n = supernatural.parse_supernatural(ns.n)
    n2 = supernatural.parse_supernatural(ns.n2)
    decision = supernatural.stably_isomorphic(n, n2)
    doc = {"equal": decision.equal}
    if decision.witness is not None:
        doc["witness"] = {"r": decision.witness[0], "s": decision.witness[1]}
    return doc


def _cmd_uhf_from_tate(ns):
    q = _parse_q(ns)
    out = supernatural.uhf_from_tate(q)
    doc = {
        "descriptor": supernatural.format_descriptor(out.descriptor),
        "k0": supernatural.format_supernatural(out.k0),
        "scale": out.scale,
    }
    if out.label is not None:
        doc["label"] = out.label
    return doc


def _cmd_tate_coeffs(ns):
    q = _parse_q(ns)
    coeffs = tate.tate_coefficients(q)
    return {
        "a4": _residue(coeffs.a4),
        "a6": _residue(coeffs.a6),
        "a4_digits": list(coeffs.a4.digits),
        "a6_digits": list(coeffs.a6.digits),
        "terms_used": coeffs.terms_used,
        "q_valuation": coeffs.q_valuation,
    }


def _cmd_dual_pair(ns):
    z = _parse_q(ns, "z")
    g = gamma.parse_prufer(ns.gamma, ns.p)
    value = duality.pair(z, g)
    return {"z": _residue(z), "gamma": str(g), "value": str(value)}


def _cmd_dual_check(ns):
    report = duality.perfectness_check(ns.p, ns.level)
    return {
        "p": report.p,
        "level": report.level,
        "modulus": report.modulus,
        "left_nondegenerate": report.left_nondegenerate,
        "right_nondegenerate": report.right_nondegenerate,
        "bilinear": report.bilinear,
        "perfect": report.perfect,
        "counterexamples": [str(c) for c in report.counterexamples],
    }


def _padic_flags(parser, q_flag=True):
    parser.add_argument("--p", type=int, required=True, help="prime")
    parser.add_argument("--prec", type=int, default=None, help="precision N")
    if q_flag:
        parser.add_argument("--q", help="integer or digit list [c0,c1,...]")


def build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="tatedual",
        description="Exact p-adic / Tate-curve / UHF-duality computations.",
    )
    groups = root.add_subparsers(dest="group", required=True)

    def sub(group, name, handler, configure):
        p = group.add_parser(name)
        configure(p)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(handler=handler)
        return p

    g_padic = groups.add_parser("padic").add_subparsers(dest="sub", required=True)
    sub(g_padic, "canon", _cmd_padic_canon, _padic_flags)

    def arith_flags(p):
        p.add_argument("--op", required=True, choices=["add", "neg", "mul", "invert"])
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--prec", type=int, default=None)
        p.add_argument("--x", required=True, help="integer or digit list")
        p.add_argument("--y", default=None, help="second operand where needed")

    sub(g_padic, "arith", _cmd_padic_arith, arith_flags)

    g_gamma = groups.add_parser("gamma").add_subparsers(dest="sub", required=True)
    sub(g_gamma, "gens", _cmd_gamma_gens, _padic_flags)
    sub(g_gamma, "group", _cmd_gamma_group, _padic_flags)
    sub(g_gamma, "prufer-check", _cmd_gamma_prufer_check, _padic_flags)
    sub(g_gamma, "contains-one", _cmd_gamma_contains_one, _padic_flags)

    def density_flags(p):
        _padic_flags(p)
        p.add_argument("--target", required=True, help="rational a/b")
        p.add_argument("--epsilon", required=True, help="positive rational a/b")

    sub(g_gamma, "density", _cmd_gamma_density, density_flags)
    sub(g_gamma, "limit", _cmd_gamma_limit, _padic_flags)

    g_uhf = groups.add_parser("uhf").add_subparsers(dest="sub", required=True)
    sub(
        g_uhf, "k0", _cmd_uhf_k0,
        lambda p: p.add_argument("--desc", required=True,
                                 help="descriptor, e.g. 'sizes=2,4,8' or 'sizes=;tail=2'"),
    )

    def iso_flags(p):
        p.add_argument("--n", required=True, help="supernatural, e.g. 2^inf*3^2")
        p.add_argument("--n2", required=True)

    sub(g_uhf, "stable-iso", _cmd_uhf_stable_iso, iso_flags)
    sub(g_uhf, "from-tate", _cmd_uhf_from_tate, _padic_flags)

    g_tate = groups.add_parser("tate").add_subparsers(dest="sub", required=True)
    sub(g_tate, "coeffs", _cmd_tate_coeffs, _padic_flags)

    g_dual = groups.add_parser("dual").add_subparsers(dest="sub", required=True)

    def pair_flags(p):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--prec", type=int, default=None)
        p.add_argument("--z", required=True, help="integer or digit list")
        p.add_argument("--gamma", required=True, help="torsion element a/p^n")

    sub(g_dual, "pair", _cmd_dual_pair, pair_flags)

    def check_flags(p):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--level", type=int, required=True)

    sub(g_dual, "check", _cmd_dual_check, check_flags)
    return root


def _echo_inputs(ns) -> dict:
    skip = {"group", "sub", "handler", "json"}
    return {
        k: v for k, v in sorted(vars(ns).items()) if k not in skip and v is not None
    }


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        code = exc.code if isinstance(exc.code, int) else EXIT_INPUT
        return code
    command = f"{ns.group} {ns.sub}"
    outcome = CommandResult(command=command, inputs=_echo_inputs(ns), result=None)
    code = EXIT_OK
    try:
        outcome.result = ns.handler(ns)
    except InputError as exc:
        outcome.status = "error"
        outcome.diagnostics.append(str(exc))
        code = EXIT_INPUT
    except DomainError as exc:
        outcome.status = "error"
        outcome.diagnostics.append(str(exc))
        code = EXIT_DOMAIN
    if ns.json:
        # one document per invocation, always on stdout
        print(outcome.to_json())
    else:
        stream = sys.stdout if code == EXIT_OK else sys.stderr
        print(outcome.to_text(), file=stream)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
