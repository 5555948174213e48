"""Command line front end.

Exit codes: 0 success, 2 usage or parse error, 3 mathematical precondition
violated, 4 enumeration or search cap exceeded. Weights with negative
entries go after ``--`` (``liecalc bwb A1 -- -2``) or use ``--weight=-1,1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bwb, opcalc, svariety, weyl
from .rootsystem import RootSystem, RootSystemError, build, parse_type

EXIT_USAGE = 2
EXIT_MATH = 3
EXIT_CAP = 4

TABLE_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 7)]
    + [("C", n) for n in range(2, 7)]
    + [("D", n) for n in range(3, 7)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)
FAMILY_FORMULA = {"A": "2l", "B": "2(2l-1)", "C": "2(2l-1)", "D": "2(2l-3)"}


class UsageError(Exception):
    pass


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}") from None


def parse_gens(text: str) -> list[tuple[int, ...]]:
    return [parse_weight(part) for part in text.split(";") if part.strip()]


def _system(text: str) -> RootSystem:
    try:
        return build(parse_type(text))
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None


def _weight_arg(args) -> tuple[int, ...]:
    text = args.weight_opt if args.weight_opt is not None else args.weight
    if text is None:
        raise UsageError("a weight is required")
    return parse_weight(text)


def _word(w: weyl.WeylElement) -> list[int]:
    return [i + 1 for i in w.word]


def cmd_bwb(args) -> tuple[dict, str]:
    rs = _system(args.type)
    res = bwb.line_bundle_cohomology(rs, _weight_arg(args))
    data = res.to_json(rs)
    if res.vanishes:
        text = "all cohomology vanishes (lambda + rho is singular)"
    else:
        text = "\n".join([
            f"degree: {data['degree']}",
            f"mu: {data['mu']}",
            f"dim V(mu): {data['dim']}",
            f"witness: {res.w.word_str()}",
        ])
    return data, text


def cmd_xcoh(args) -> tuple[dict, str]:
    rs = _system(args.type)
    if args.degree is None:
        hist = weyl.poincare_coefficients(rs)
        data = {"histogram": hist, "order": sum(hist)}
        return data, f"|W(i)| for i = 0..{len(hist) - 1}: {hist}\n|W| = {sum(hist)}"
    rep = bwb.x_cohomology(rs, args.degree, args.weyl_cap)
    data = rep.to_json()
    lines = [f"degree {rep.degree}: multiplicity {rep.multiplicity}"]
    for w, e in rep.classes:
        lines.append(f"  {w.word_str():<20} e-weight {list(e)}")
    return data, "\n".join(lines)


def cmd_svariety(args) -> tuple[dict, str]:
    rs = _system(args.type)
    gens = parse_gens(args.gens)
    monoid = svariety.gamma_lattice(rs, gens)
    verdict = svariety.check_eq11(rs, gens, args.hilbert_cap)
    xs = svariety.dual_basis(monoid)
    data = {**monoid.to_json(), **verdict.to_json(), "dual_basis": [[str(c) for c in x] for x in xs]}
    status = {True: "holds", False: "fails", None: "inconclusive"}[verdict.holds]
    lines = [
        f"Gamma = Z Gamma ∩ Lambda^+: {status}",
        f"witness: {list(verdict.witness) if verdict.witness is not None else '-'}",
        f"Hilbert basis: {[list(h) for h in verdict.hilbert_basis]}",
        f"rank of Z Gamma: {monoid.rank}",
        f"Lambda / Z Gamma = {monoid.quotient_description()}",
        f"Q_Gamma = {monoid.q_description()}",
        f"dual basis x_j: {data['dual_basis']}",
    ]
    if verdict.holds is None:
        raise CapError(data, "\n".join(lines))
    return data, "\n".join(lines)


class CapError(Exception):
    def __init__(self, data, text):
        super().__init__(text)
        self.data = data
        self.text = text


def _twist_element(rs: RootSystem, spec: str) -> weyl.WeylElement:
    if spec.lower() == "w0":
        return weyl.longest_element(rs)
    word = [i - 1 for i in parse_weight(spec)] if spec.strip() else []
    return weyl.element(rs, word)


def cmd_peta(args) -> tuple[dict, str]:
    rs = _system(args.type)
    eta = _weight_arg(args)
    p = opcalc.p_eta(rs, eta)
    if args.twist:
        p = opcalc.fw_on_poly(rs, _twist_element(rs, args.twist), p)
    if args.psi:
        p = opcalc.psi_gamma(p, svariety.gamma_lattice(rs, parse_gens(args.psi)))
    data = {"polynomial": str(p), "degree": p.degree, "k": opcalc.k_value(rs, eta), "terms": p.to_json()}
    return data, str(p)


def cmd_kvalue(args) -> tuple[dict, str]:
    rs = _system(args.type)
    k = opcalc.k_value(rs, _weight_arg(args))
    return {"k": k}, str(k)


def cmd_minorbit(args) -> tuple[dict, str]:
    if args.table or not args.type:
        reports = [opcalc.min_orbit_report(f, n) for f, n in TABLE_TYPES]
        rows = []
        for r in reports:
            d = r.to_json()
            d["table_formula"] = FAMILY_FORMULA.get(r.family, str(r.k))
            rows.append(d)
        lines = [f"{'type':<6}{'k':>4}{'h':>4}{'2(h-1)':>8}  {'formula':<10}surjectivity"]
        for d in rows:
            lines.append(
                f"{d['type']:<6}{d['k']:>4}{d['coxeter_h']:>4}{d['two_h_minus_2']:>8}  "
                f"{d['table_formula']:<10}{d['surjectivity']}"
            )
        return {"table": rows}, "\n".join(lines)
    try:
        comps = parse_type(args.type)
        if len(comps) != 1:
            raise RootSystemError("minorbit needs a simple type")
        rep = opcalc.min_orbit_report(*comps[0])
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None
    d = rep.to_json()
    text = "\n".join(f"{k}: {v}" for k, v in d.items())
    return d, text


def cmd_weyl(args) -> tuple[dict, str]:
    rs = _system(args.type)
    hist = weyl.poincare_coefficients(rs)
    data = {
        "order": rs.weyl_order,
        "degrees": list(rs.degrees),
        "exponents": list(rs.exponents),
        "poincare": hist,
        "longest_word": _word(weyl.longest_element(rs)),
    }
    lines = [
        f"|W| = {rs.weyl_order}",
        f"degrees: {list(rs.degrees)}",
        f"Poincare coefficients: {hist}",
        f"w0 = {weyl.longest_element(rs).word_str()}",
    ]
    if args.enumerate:
        elems = weyl.enumerate_group(rs, args.weyl_cap)
        data["elements"] = [_word(w) for w in elems]
        lines.extend(f"  {len(w.word)}  {w.word_str()}" for w in elems)
    return data, "\n".join(lines)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table")
    common.add_argument("--weyl-cap", type=int, default=weyl.DEFAULT_CAP)
    common.add_argument("--hilbert-cap", type=int, default=svariety.DEFAULT_HILBERT_CAP)

    p = argparse.ArgumentParser(prog="liecalc", description="Exact Lie-theoretic computations on G/U.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_weight(sp):
        sp.add_argument("type")
        sp.add_argument("weight", nargs="?")
        sp.add_argument("--weight", dest="weight_opt")
        return sp

    sp = with_weight(sub.add_parser("bwb", parents=[common], help="line bundle cohomology on G/B"))
    sp.set_defaults(func=cmd_bwb)

    sp = sub.add_parser("xcoh", parents=[common], help="cohomology of O on G/U")
    sp.add_argument("type")
    sp.add_argument("--degree", type=int)
    sp.set_defaults(func=cmd_xcoh)

    sp = sub.add_parser("svariety", parents=[common], help="lattice data of a monoid of dominant weights")
    sp.add_argument("type")
    sp.add_argument("--gens", required=True, help='e.g. "1,1;2,0"')
    sp.set_defaults(func=cmd_svariety)

    sp = with_weight(sub.add_parser("peta", parents=[common], help="the invariant polynomial P_eta"))
    sp.add_argument("--twist", help='"w0" or a comma-separated word of simple indices')
    sp.add_argument("--psi", help="generators of Gamma; push the result to C[y]")
    sp.set_defaults(func=cmd_peta)

    sp = with_weight(sub.add_parser("kvalue", parents=[common], help="<lambda, 2 rho^vee>"))
    sp.set_defaults(func=cmd_kvalue)

    sp = sub.add_parser("minorbit", parents=[common], help="minimal orbit order report")
    sp.add_argument("type", nargs="?")
    sp.add_argument("--table", action="store_true")
    sp.set_defaults(func=cmd_minorbit)

    sp = sub.add_parser("weyl", parents=[common], help="Weyl group data")
    sp.add_argument("type")
    sp.add_argument("--enumerate", action="store_true")
    sp.set_defaults(func=cmd_weyl)
    return p


def _emit(args, data, text, stream) -> None:
    if args.format == "json":
        print(json.dumps(data, default=str), file=stream)
    else:
        print(text, file=stream)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        data, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapError as exc:
        _emit(args, exc.data, exc.text, sys.stdout)
        return EXIT_CAP
    except (weyl.WeylCapExceeded, opcalc.CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RootSystemError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    _emit(args, data, text, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
