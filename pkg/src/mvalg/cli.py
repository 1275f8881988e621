"""Command-line interface.

Every command reads JSON wire formats (see formats) and writes a JSON report
to stdout; ``--format text`` switches to a terse human summary with no
stability guarantee.  Exit codes: 0 success, 1 a verification suite found a
violation, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import AlgebraError, FiniteMV, is_boolean
from .coproducts import (
    coproduct_finite,
    coproduct_rational,
    is_separable,
    is_subterminal_epic,
    separability_witness,
)
from .formats import (
    FormatError,
    algebra_to_json,
    element_to_json,
    fraction_to_str,
    hom_to_json,
    parse_algebra,
    parse_element,
    parse_env,
    parse_space_json,
    space_to_json,
)
from .lgroups import SimplicialGroup, gamma, xi
from .pierce import (
    boolean_skeleton,
    decompose,
    is_simple,
    spectrum,
    spectrum_space,
    support,
    vanishing_locus,
)
from .rationals import RationalAlgebra
from .terms import TermError, eval_term, order_rank, parse_term
from .topology import TopologyError, pi0
from .verify import CRITERIA, run_criterion

USER_ERRORS = (FormatError, AlgebraError, TermError, TopologyError, json.JSONDecodeError)


def _load(text: str | None, flag: str):
    if text is None:
        raise FormatError(f"missing required {flag}")
    return json.loads(text)


def _finite(args) -> FiniteMV:
    alg = parse_algebra(_load(args.alg[0] if args.alg else None, "--alg"))
    if not isinstance(alg, FiniteMV):
        raise FormatError("this command needs a finite algebra ({\"finite\": [...]})")
    return alg


def cmd_eval(args) -> dict:
    algebra = _finite(args)
    if args.term is None:
        raise FormatError("missing required --term")
    term = parse_term(args.term)
    env = parse_env(algebra, _load(args.env, "--env")) if args.env else {}
    value = eval_term(term, env, algebra)
    return {"algebra": algebra_to_json(algebra), "value": element_to_json(value)}


def cmd_decompose(args) -> dict:
    algebra = _finite(args)
    dec = decompose(algebra)
    return {
        "algebra": algebra_to_json(algebra),
        "indecomposable": dec.is_indecomposable,
        "factors": [algebra_to_json(f) for f in dec.factors],
        "projections": [hom_to_json(p) for p in dec.projections],
    }


def cmd_pierce(args) -> dict:
    algebra = _finite(args)
    skel = boolean_skeleton(algebra)
    return {
        "algebra": algebra_to_json(algebra),
        "atoms": skel.atom_count,
        "size": skel.size,
        "elements": [element_to_json(b) for b in sorted(skel.elements())],
    }


def cmd_coproduct(args) -> dict:
    if not args.alg or len(args.alg) != 2:
        raise FormatError("coproduct needs --alg twice (the two summands)")
    a = parse_algebra(json.loads(args.alg[0]))
    b = parse_algebra(json.loads(args.alg[1]))
    if isinstance(a, FiniteMV) and isinstance(b, FiniteMV):
        cop = coproduct_finite(a, b)
        out = {
            "summands": [algebra_to_json(a), algebra_to_json(b)],
            "algebra": algebra_to_json(cop.algebra),
            "in0": hom_to_json(cop.in0),
            "in1": hom_to_json(cop.in1),
        }
        if cop.codiagonal is not None:
            out["codiagonal"] = hom_to_json(cop.codiagonal)
        return out
    if isinstance(a, RationalAlgebra) and isinstance(b, RationalAlgebra):
        return {
            "summands": [algebra_to_json(a), algebra_to_json(b)],
            "algebra": algebra_to_json(coproduct_rational(a, b)),
        }
    raise FormatError("coproduct needs two finite or two rational algebras")


def cmd_separable(args) -> dict:
    algebra = parse_algebra(_load(args.alg[0] if args.alg else None, "--alg"))
    if isinstance(algebra, SimplicialGroup):
        raise FormatError("separable expects a finite, rational, or product algebra")
    result = is_separable(algebra)
    out = {
        "algebra": algebra_to_json(algebra),
        "separable": result.separable,
        "factors": [algebra_to_json(f) for f in result.factors],
    }
    if isinstance(algebra, FiniteMV):
        cert = separability_witness(algebra)
        out["witness"] = element_to_json(cert.witness) if cert.witness is not None else None
        out["witness_agrees"] = cert.separable == result.separable
    return out


def cmd_subterminal(args) -> dict:
    algebra = parse_algebra(_load(args.alg[0] if args.alg else None, "--alg"))
    if not isinstance(algebra, (FiniteMV, RationalAlgebra)):
        raise FormatError("subterminal expects a finite or rational algebra")
    return {"algebra": algebra_to_json(algebra), "subterminal": is_subterminal_epic(algebra)}


def cmd_spec(args) -> dict:
    algebra = _finite(args)
    out = {
        "algebra": algebra_to_json(algebra),
        "points": [p.index for p in spectrum(algebra)],
        "space": space_to_json(spectrum_space(algebra)),
        "simple": is_simple(algebra),
    }
    if args.elem:
        x = parse_element(algebra, _load(args.elem, "--elem"))
        out["element"] = element_to_json(x)
        out["vanishing_locus"] = sorted(p.index for p in vanishing_locus(algebra, [x]))
        out["support"] = sorted(p.index for p in support(algebra, x))
        out["boolean"] = is_boolean(algebra, x)
    return out


def cmd_rank(args) -> dict:
    algebra = parse_algebra(_load(args.alg[0] if args.alg else None, "--alg"))
    if isinstance(algebra, SimplicialGroup):
        raise FormatError("rank expects a finite, rational, or product algebra")
    raw = _load(args.elem, "--elem")
    if isinstance(algebra, FiniteMV):
        elem = parse_element(algebra, raw)
    else:
        from .formats import parse_fraction

        coords = raw if isinstance(raw, list) else [raw]
        elem = tuple(parse_fraction(c) for c in coords)
        if isinstance(algebra, RationalAlgebra) and len(coords) == 1:
            elem = elem[0]
    r = order_rank(algebra, elem)
    return {
        "algebra": algebra_to_json(algebra),
        "element": [fraction_to_str(c) for c in (elem if isinstance(elem, tuple) else (elem,))],
        "rank": r.rank,
        "factors": list(r.chain_orders),
        "subalgebra_size": r.subalgebra.size,
    }


def cmd_pi0(args) -> dict:
    space = parse_space_json(_load(args.space, "--space"))
    result = pi0(space)
    return {
        "space": space_to_json(space),
        "classes": result.class_count,
        "class_of": list(result.class_of),
        "quotient": space_to_json(result.space),
    }


def cmd_gamma(args) -> dict:
    algebra = parse_algebra(_load(args.alg[0] if args.alg else None, "--alg"))
    if isinstance(algebra, SimplicialGroup):
        finite = gamma(algebra)
        return {
            "group": algebra_to_json(algebra),
            "algebra": algebra_to_json(finite),
            "round_trip": xi(finite) == algebra,
        }
    if isinstance(algebra, FiniteMV):
        group = xi(algebra)
        return {
            "algebra": algebra_to_json(algebra),
            "group": algebra_to_json(group),
            "round_trip": gamma(group) == algebra,
        }
    raise FormatError("gamma expects a simplicial group or a finite algebra")


def cmd_verify(args) -> tuple[int, dict]:
    names = list(CRITERIA) if args.all or not args.criteria else args.criteria
    for name in names:
        if name not in CRITERIA:
            raise FormatError(f"unknown criterion {name!r}; known: {', '.join(CRITERIA)}")
    reports = [run_criterion(name, size=args.max_size, seed=args.seed) for name in names]
    payload = {
        "seed": args.seed,
        "max_size": args.max_size,
        "criteria": [
            {
                "name": r.name,
                "passed": r.passed,
                "summary": r.summary,
                "stats": r.stats,
            }
            for r in reports
        ],
        "all_passed": all(r.passed for r in reports),
    }
    if args.format == "text":
        for r in reports:
            print(r.line())
        print("all passed" if payload["all_passed"] else "violations found")
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return (0 if payload["all_passed"] else 1), payload


def _emit(args, payload: dict) -> None:
    if args.format == "text":
        for key, value in sorted(payload.items()):
            print(f"{key}: {value}")
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mvalg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **flags):
        p = sub.add_parser(name)
        if flags.get("alg"):
            p.add_argument("--alg", action="append", help="algebra JSON (repeatable where two are needed)")
        if flags.get("elem"):
            p.add_argument("--elem", help="element JSON")
        if flags.get("env"):
            p.add_argument("--env", help="environment JSON")
        if flags.get("term"):
            p.add_argument("--term", help="term string")
        if flags.get("space"):
            p.add_argument("--space", help="finite space JSON")
        p.add_argument("--format", choices=["json", "text"], default="json")
        return p

    add("eval", alg=True, term=True, env=True)
    add("decompose", alg=True)
    add("pierce", alg=True)
    add("coproduct", alg=True)
    add("separable", alg=True)
    add("subterminal", alg=True)
    add("spec", alg=True, elem=True)
    add("rank", alg=True, elem=True)
    add("pi0", space=True)
    add("gamma", alg=True)
    v = add("verify")
    v.add_argument("criteria", nargs="*", help="criterion names (default: all)")
    v.add_argument("--all", action="store_true", help="run every criterion")
    v.add_argument("--max-size", type=int, default=None, help="override the primary sweep bound")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")
    return parser


HANDLERS = {
    "eval": cmd_eval,
    "decompose": cmd_decompose,
    "pierce": cmd_pierce,
    "coproduct": cmd_coproduct,
    "separable": cmd_separable,
    "subterminal": cmd_subterminal,
    "spec": cmd_spec,
    "rank": cmd_rank,
    "pi0": cmd_pi0,
    "gamma": cmd_gamma,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            code, _ = cmd_verify(args)
            return code
        payload = HANDLERS[args.command](args)
    except USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
