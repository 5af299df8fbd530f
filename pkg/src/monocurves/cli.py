"""Command-line interface with deterministic text and JSON output."""

from __future__ import annotations

import argparse
import json
import sys

from .derivations import derivation_rank
from .families import (bresinsky_generators, bresinsky_sequence, family_sweep,
                       sweep_to_text, verify_bresinsky)
from .groebner import (ComputationLimitExceeded, buchberger, homogenize_basis,
                       reduce_basis)
from .orders import MonomialOrder
from .resolution import free_resolution, minimalize
from .semigroup import NumericalSemigroup
from .toric import defining_ideal, minimal_generators, monomial_curve

SCHEMA = "monocurves/1"

DEFAULT_MAX_VARS = 6
DEFAULT_MAX_CONDUCTOR = 10_000
DEFAULT_MAX_GB = 5000


class _Parser(argparse.ArgumentParser):
    # exit 1 on anything malformed; exit 2 is reserved for guard violations
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _guard(ok: bool, what: str):
    if not ok:
        raise ComputationLimitExceeded(what)


def _check_guards(gens, args):
    _guard(len(gens) <= args.max_vars,
           f"{len(gens)} variables exceed the bound {args.max_vars}")
    if len(gens) > 1:
        # conductor is bounded by n0 * np; cheap to test before any table is built
        _guard(min(gens) * max(gens) <= args.max_conductor,
               f"conductor bound {min(gens) * max(gens)} exceeds {args.max_conductor}")


def _semigroup(gens, args) -> NumericalSemigroup:
    if any(g < 1 for g in gens):
        raise ValueError("generators must be positive integers")
    _check_guards(gens, args)
    return NumericalSemigroup(gens)


def _curve(gens, args):
    semigroup = _semigroup(gens, args)
    return monomial_curve(semigroup.minimal_generators)


def _order_for(args, curve) -> MonomialOrder:
    n = len(curve.variables)
    perm = None
    if args.perm:
        perm = tuple(int(x) for x in args.perm.split(","))
    kind = args.order
    if kind == "lex":
        return MonomialOrder.lex(n, perm)
    if kind == "grlex":
        return MonomialOrder.grlex(n, perm)
    if kind == "grevlex":
        return MonomialOrder.grevlex(n, perm)
    if kind == "weighted":
        return MonomialOrder.weighted(curve.weights, perm)
    raise ValueError(f"unknown order {kind!r}")


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


# ---- commands: each returns (payload dict, text lines) ---------------------

def _cmd_semigroup(args):
    s = _semigroup(args.generators, args)
    inv = s.basic_invariants()
    payload = {
        "generators": list(s.minimal_generators),
        "m": inv.multiplicity, "e": inv.embedding_dimension,
        "F": inv.frobenius, "c": inv.conductor, "genus": inv.genus,
        "symmetric": s.is_symmetric(), "gaps": sorted(s.gaps()),
    }
    text = [
        f"semigroup <{', '.join(map(str, s.minimal_generators))}>",
        f"multiplicity {inv.multiplicity}, embedding dimension {inv.embedding_dimension}",
        f"frobenius {inv.frobenius}, conductor {inv.conductor}, genus {inv.genus}",
        f"symmetric: {'yes' if payload['symmetric'] else 'no'}",
        "gaps: " + (" ".join(map(str, payload["gaps"])) or "none"),
    ]
    return payload, text


def _cmd_ideal(args):
    curve = _curve(args.generators, args)
    pres = defining_ideal(curve, max_basis=args.max_gb)
    mini = minimal_generators(pres)
    payload = {
        "generators": list(curve.exponents),
        "variables": list(curve.variables),
        "weights": list(curve.weights),
        "minimal_generators": [str(g) for g in mini.generators],
        "beta1": mini.beta1,
    }
    text = [f"defining ideal of the curve t -> {tuple(curve.exponents)}",
            f"beta1 = {mini.beta1}"]
    text += [f"  {g}" for g in mini.generators]
    return payload, text


def _cmd_groebner(args):
    curve = _curve(args.generators, args)
    pres = defining_ideal(curve, max_basis=args.max_gb)
    order = _order_for(args, curve)
    if order != pres.order:
        gb = reduce_basis(buchberger(pres.generators, order, max_basis=args.max_gb))
    else:
        gb = pres.groebner_basis()
    payload = {
        "generators": list(curve.exponents),
        "order": {"kind": order.kind, "perm": list(order.perm),
                  "weights": list(order.weights) if order.weights else None},
        "basis": [str(g) for g in gb.generators],
        "size": len(gb.generators),
    }
    text = [f"reduced Groebner basis ({order.kind}), {len(gb.generators)} elements"]
    text += [f"  {g}" for g in gb.generators]
    return payload, text


def _cmd_resolution(args):
    curve = _curve(args.generators, args)
    pres = defining_ideal(curve, max_basis=args.max_gb)
    res = free_resolution(pres, max_basis=args.max_gb)
    if not args.non_minimal:
        res = minimalize(res)
    payload = res.to_json_dict()
    payload["generators"] = list(curve.exponents)
    return payload, res.to_text().splitlines()


def _cmd_betti(args):
    curve = _curve(args.generators, args)
    pres = defining_ideal(curve, max_basis=args.max_gb)
    res = minimalize(free_resolution(pres, max_basis=args.max_gb))
    payload = {"generators": list(curve.exponents), "betti": res.betti}
    return payload, [f"betti numbers: {res.betti}"]


def _cmd_bresinsky(args):
    inst = bresinsky_sequence(args.q2)
    _check_guards(inst.n, args)
    payload = {
        "q2": inst.q2, "q1": inst.q1, "d1": inst.d1, "n": list(inst.n),
        "generators": [str(g) for g in bresinsky_generators(inst)],
    }
    text = [f"bresinsky q2={inst.q2}: n = {inst.n}",
            f"|S| = {len(payload['generators'])}"]
    text += [f"  {g}" for g in payload["generators"]]
    if args.verify:
        report = verify_bresinsky(inst, max_basis=args.max_gb)
        payload.update({
            "beta": list(report.betti),
            "gb": report.is_gb,
            "generates": report.generates,
        })
        text.append(f"beta = {list(report.betti)} (expected {list(report.expected_betti)})")
        text.append(f"groebner basis: {report.is_gb}, generates: {report.generates}")
    return payload, text


def _cmd_concat_sweep(args):
    params = [(a, d, b, args.p)
              for a in _parse_range(args.a)
              for d in _parse_range(args.d)
              for b in _parse_range(args.b)]
    for a, d, b, _ in params:
        _check_guards((a, b + d), args)
    rows = family_sweep("concatenation", params, max_basis=args.max_gb)
    payload = {"rows": rows}
    return payload, sweep_to_text(rows).splitlines()


def _cmd_derivations(args):
    s = _semigroup(args.generators, args)
    data = derivation_rank(s)
    payload = {
        "generators": list(s.minimal_generators),
        "delta_prime": sorted(data.delta_prime),
        "mu": data.mu,
        "generator_exponents": sorted(data.generator_exponents),
    }
    text = [f"delta' = {payload['delta_prime']}",
            f"mu(Der) = {data.mu}",
            f"derivation exponents: {payload['generator_exponents']}"]
    return payload, text


def _cmd_homogenize(args):
    curve = _curve(args.generators, args)
    pres = defining_ideal(curve, max_basis=args.max_gb)
    order = MonomialOrder.grevlex(len(curve.variables))
    gb = reduce_basis(buchberger(pres.generators, order, max_basis=args.max_gb))
    hom = homogenize_basis(gb, args.homvar)
    payload = {
        "generators": list(curve.exponents),
        "homvar": args.homvar,
        "basis": [str(g) for g in hom],
    }
    text = [f"homogenized Groebner basis (grevlex, homvar {args.homvar})"]
    text += [f"  {g}" for g in hom]
    return payload, text


_COMMANDS = {
    "semigroup": _cmd_semigroup,
    "ideal": _cmd_ideal,
    "groebner": _cmd_groebner,
    "resolution": _cmd_resolution,
    "betti": _cmd_betti,
    "bresinsky": _cmd_bresinsky,
    "concat-sweep": _cmd_concat_sweep,
    "derivations": _cmd_derivations,
    "homogenize": _cmd_homogenize,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monocurves",
                     description="numerical semigroups, monomial curves, "
                                 "Groebner bases and free resolutions")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, gens=True):
        if gens:
            p.add_argument("generators", nargs="+", type=int,
                           help="semigroup generators")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
        p.add_argument("--max-conductor", type=int, default=DEFAULT_MAX_CONDUCTOR)
        p.add_argument("--max-gb", type=int, default=DEFAULT_MAX_GB)
        p.add_argument("--seed", type=int, default=0,
                       help="sampling seed (sampling commands only)")

    common(sub.add_parser("semigroup", help="invariants, gaps, symmetry"))
    common(sub.add_parser("ideal", help="minimal generators of the defining ideal"))

    p = sub.add_parser("groebner", help="reduced Groebner basis of the defining ideal")
    common(p)
    p.add_argument("--order", choices=("lex", "grlex", "grevlex", "weighted"),
                   default="weighted")
    p.add_argument("--perm", help="comma-separated variable priority, e.g. 2,1,0,3")

    p = sub.add_parser("resolution", help="graded free resolution")
    common(p)
    p.add_argument("--non-minimal", action="store_true",
                   help="emit the raw Schreyer resolution")

    common(sub.add_parser("betti", help="Betti numbers of the defining ideal"))

    p = sub.add_parser("bresinsky", help="Bresinsky instance and verification")
    common(p, gens=False)
    p.add_argument("--q2", type=int, required=True)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("concat-sweep",
                       help="sweep concatenation semigroups over a grid")
    common(p, gens=False)
    p.add_argument("--a", required=True, help="value or range lo:hi")
    p.add_argument("--d", required=True, help="value or range lo:hi")
    p.add_argument("--b", required=True, help="value or range lo:hi")
    p.add_argument("--p", type=int, default=3)

    common(sub.add_parser("derivations", help="Kraft data of the derivation module"))

    p = sub.add_parser("homogenize", help="homogenized Groebner basis (projective closure)")
    common(p)
    p.add_argument("--homvar", default="h")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        payload, text = _COMMANDS[args.command](args)
    except ComputationLimitExceeded as exc:
        print(f"error: computation exceeds configured bounds ({exc})",
              file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = {"schema": SCHEMA, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text))
    return 0


if __name__ == "__main__":
    sys.exit(main())
