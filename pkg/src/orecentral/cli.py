"""Command-line front-end.

Exit codes: 0 on success, 1 on domain errors (non-commuting inputs, s = 0,
scalar inputs, exhausted budgets), 2 on usage, parse and config errors.
"""

import argparse
import json
import sys

from . import annihilator, centralizer
from .basepoly import NEG_INF
from .errors import ConfigError, OreError, ParseError
from .ore import chi, commutator, ore_mul, validate_pseudo_degree
from .parsing import load_algebra, parse_operator


def _fmt_degree(d):
    return "-inf" if d == NEG_INF else str(d)


def _table(header, rows):
    widths = [max(len(str(r[k])) for r in [header, *rows]) for k in range(len(header))]
    lines = []
    for r in [header, *rows]:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _emit(args, record, text):
    if args.machine:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _operand(args, name):
    expr = getattr(args, name)
    if expr is None:
        raise ParseError(f"missing operand -{name}", 0)
    return parse_operator(expr, args.alg)


def cmd_mul(args):
    P, Q = _operand(args, "P"), _operand(args, "Q")
    R = ore_mul(P, Q)
    _emit(args, {"command": "mul", "result": str(R)}, str(R))


def cmd_commutator(args):
    P, Q = _operand(args, "P"), _operand(args, "Q")
    R = commutator(P, Q)
    _emit(args, {"command": "commutator", "result": str(R)}, str(R))


def cmd_chi(args):
    if args.P is None and args.a is not None:
        args.P = args.a
    d = _fmt_degree(chi(_operand(args, "P")))
    _emit(args, {"command": "chi", "result": d}, d)


def _element_rows(elements):
    return [(_fmt_degree(chi(b)), str(b)) for b in elements]


def cmd_centralizer(args):
    a = _operand(args, "a")
    sl = centralizer.centralizer_slice(a, args.max_degree, args.coeff_bound)
    record = {
        "command": "centralizer",
        "a": str(a),
        "max_degree": sl.n,
        "coeff_bound": sl.coeff_bound,
        "stable": sl.stable,
        "dimension": sl.dimension,
        "basis": [str(b) for b in sl.basis],
        "degrees": sl.degrees(),
    }
    text = (
        f"centralizer slice of {a}: max x-degree {sl.n}, coefficient bound "
        f"{sl.coeff_bound}, dimension {sl.dimension}"
        + ("" if sl.stable else " (coefficient bound did not stabilize)")
        + "\n"
        + _table(("chi", "element"), _element_rows(sl.basis))
    )
    _emit(args, record, text)


def cmd_basis(args):
    a = _operand(args, "a")
    B = centralizer.greedy_basis(a, args.max_degree, args.coeff_bound)
    ell = max(B.residue_counts().values())
    divides = centralizer.check_rank_divides(B)
    record = {
        "command": "basis",
        "a": str(a),
        "m": B.m,
        "max_degree": B.max_degree,
        "coeff_bound": B.coeff_bound,
        "elements": [str(b) for b in B.elements],
        "degrees": list(B.degrees),
        "rank": len(B),
        "max_per_residue": ell,
        "rank_divides_m": divides,
    }
    text = "\n".join(
        [
            f"K[a]-module basis of C(a) for a = {a} (m = {B.m}, max x-degree {B.max_degree}): rank {len(B)}",
            _table(("chi", "element"), _element_rows(B.elements)),
            f"max elements per residue class mod m: {ell}",
            f"rank divides m: {'yes' if divides else 'no'}",
        ]
    )
    _emit(args, record, text)


def cmd_check_d(args):
    a = _operand(args, "a")
    rep = centralizer.check_condition_D(a, args.ell, args.max_degree, args.coeff_bound)
    status = "pass" if rep.passed else "FAIL"
    record = {
        "command": "check-d",
        "a": str(a),
        "ell": rep.ell,
        "max_degree": rep.max_degree,
        "coeff_bound": rep.coeff_bound,
        "stable": rep.stable,
        "dims": {str(n): d for n, d in rep.dims.items()},
        "violations": rep.violations,
        "passed": rep.passed,
    }
    rows = [(n, d, "ok" if d <= rep.ell else "violation") for n, d in rep.dims.items()]
    text = (
        f"condition D({rep.ell}) for C(a), a = {a}, degrees 0..{rep.max_degree} "
        f"(coefficient bound {rep.coeff_bound}): {status}\n"
        + _table(("degree", "dim", "status"), rows)
    )
    _emit(args, record, text)


def cmd_check_commutative(args):
    a = _operand(args, "a")
    rep = centralizer.check_commutative(a, args.max_degree, args.coeff_bound)
    record = {
        "command": "check-commutative",
        "a": str(a),
        "max_degree": rep.max_degree,
        "coeff_bound": rep.coeff_bound,
        "stable": rep.stable,
        "slice_dimension": len(rep.basis),
        "noncommuting": [list(p) for p in rep.noncommuting],
        "passed": rep.passed,
    }
    lines = [
        f"slice of C(a), a = {a}, degrees 0..{rep.max_degree} (coefficient bound "
        f"{rep.coeff_bound}, dimension {len(rep.basis)}): "
        + ("commutative" if rep.passed else "NOT commutative")
    ]
    for b, c in rep.noncommuting:
        lines.append(f"  [{b}, {c}] != 0")
    _emit(args, record, "\n".join(lines))


def cmd_annihilate(args):
    P, Q = _operand(args, "P"), _operand(args, "Q")
    if args.s_bound is not None or args.t_bound is not None:
        if args.s_bound is None or args.t_bound is None:
            raise ParseError("--s-bound and --t-bound must be given together", 0)
        f = annihilator.annihilating_polynomial(P, Q, args.s_bound, args.t_bound)
        if f is None:
            raise OreError(
                f"no annihilating polynomial with deg_s <= {args.s_bound}, deg_t <= {args.t_bound}"
            )
    else:
        f = annihilator.annihilating_polynomial_auto(P, Q, args.max_doublings)
    _emit(args, {"command": "annihilate", "P": str(P), "Q": str(Q), "result": str(f)}, str(f))


def cmd_validate_axioms(args):
    rep = validate_pseudo_degree(args.alg, args.trials, args.max_degree, args.seed)
    record = {
        "command": "validate-axioms",
        "algebra": str(args.alg),
        "trials": rep.trials,
        "failures": rep.failures,
        "multiplicative_certified": rep.multiplicative_certified,
        "notes": rep.notes,
        "counterexamples": [list(c) for c in rep.counterexamples],
        "passed": rep.passed,
    }
    lines = [
        f"pseudo-degree axioms for {args.alg}: {rep.trials} random pairs",
        _table(("axiom", "failures"), list(rep.failures.items())),
        "multiplicativity: "
        + ("certified" if rep.multiplicative_certified else "NOT certified"),
    ]
    lines += [f"note: {n}" for n in rep.notes]
    for axiom, a, b, detail in rep.counterexamples[:3]:
        lines.append(f"counterexample ({axiom}): a = {a}; b = {b}; {detail}")
    _emit(args, record, "\n".join(lines))


COMMANDS = {
    "mul": (cmd_mul, "product P*Q", "PQ"),
    "commutator": (cmd_commutator, "commutator PQ - QP", "PQ"),
    "chi": (cmd_chi, "x-degree of P", "Pa"),
    "centralizer": (cmd_centralizer, "K-basis of a centralizer slice", "a"),
    "basis": (cmd_basis, "greedy K[a]-module basis of the centralizer", "a"),
    "check-d": (cmd_check_d, "check condition D(ell) up to a degree", "a"),
    "check-commutative": (cmd_check_commutative, "check a centralizer slice commutes", "a"),
    "annihilate": (cmd_annihilate, "annihilating polynomial f(s, t) of commuting P, Q", "PQ"),
    "validate-axioms": (cmd_validate_axioms, "randomized pseudo-degree axiom check", ""),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orecentral", description="Centralizers and annihilating polynomials in Ore extensions K[y][x; sigma, delta]."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text, operands) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--algebra", required=True, help="config file path or preset (weyl, qpower, degenerate)")
        p.add_argument("--machine", action="store_true", help="print one JSON record")
        for op in operands:
            p.add_argument(f"-{op}", metavar="EXPR")
        if name in ("centralizer", "basis", "check-d", "check-commutative"):
            p.add_argument("--max-degree", type=int, default=4)
            p.add_argument("--coeff-bound", type=int, default=None)
        if name == "check-d":
            p.add_argument("--ell", type=int, default=1)
        if name == "annihilate":
            p.add_argument("--max-doublings", type=int, default=annihilator.DEFAULT_MAX_DOUBLINGS)
            p.add_argument("--s-bound", type=int, default=None)
            p.add_argument("--t-bound", type=int, default=None)
        if name == "validate-axioms":
            p.add_argument("--trials", type=int, default=500)
            p.add_argument("--max-degree", type=int, default=4)
            p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.alg = load_algebra(args.algebra)
        args.func(args)
    except (ParseError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
