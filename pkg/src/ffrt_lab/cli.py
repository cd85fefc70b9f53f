"""Command-line entry point: ``ffrt-lab <verb> ...``.

Reports go to stdout as JSON (canonical key order, rationals as
``"num/den"`` strings) or as plain ``key: value`` text; diagnostics go to
stderr.  Exit codes: 0 success, 2 bad input, 3 an UNKNOWN verdict under
``--strict``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import decision, elliptic, frobcalc, picard, qdiv, rootlattice
from .dsl import parse_divisor, parse_weights
from .errors import FFRTError

SCHEMA_VERSION = "1"

log = logging.getLogger("ffrt_lab")


def rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def type_json(t) -> dict:
    return {"rho": t.rho, "flags": [list(f) for f in t.flags], "dhat": t.dhat}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _weights(args):
    """Weights from ``--weights`` or from the divisor's denominators."""
    if getattr(args, "weights", None):
        return picard.Weights(parse_weights(args.weights))
    if getattr(args, "divisor", None):
        return picard.weights_of(parse_divisor(args.divisor))
    raise FFRTError("give a divisor or --weights")


def _weights_divisor(r: tuple) -> qdiv.RationalDivisor:
    W = picard.Weights(r)
    return qdiv.RationalDivisor([qdiv.Term(pt, 1, ri) for pt, ri in zip(W.points, W.r)])


def cmd_analyze(args) -> dict:
    if args.divisor:
        D = parse_divisor(args.divisor)
    elif args.weights:
        D = _weights_divisor(parse_weights(args.weights))
    else:
        raise FFRTError("analyze needs a divisor or --weights")
    if args.genus >= 1:
        rep = decision.analyze(None, args.p, args.e_max, weights=picard.weights_of(D), genus=args.genus)
    else:
        rep = decision.analyze(D, args.p, args.e_max, lam=args.lam)
    fpure = {"yes": True, "no": False}.get(rep.fpure)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "divisor": qdiv.render(D),
            "weights": list(rep.weights.r),
            "p": args.p,
            "e": args.e_max,
            "genus": args.genus,
        },
        "delta": rat(rep.delta),
        "singularity": rep.singularity,
        "fpure": fpure,
        "verdict": {
            "status": rep.verdict.status,
            "citation": rep.verdict.citation,
            "notes": rep.verdict.notes,
        },
        "frobenius": [
            {
                "e": s.e,
                "type": type_json(s.type),
                "slope": rat(s.slope),
                "splitting_P1": list(s.splitting_P1.degrees),
            }
            for s in rep.frobenius
        ],
        "notes": rep.notes,
        "citations": rep.citations,
    }


def cmd_hilbert(args) -> dict:
    D = parse_divisor(args.divisor)
    out = {
        "schema_version": SCHEMA_VERSION,
        "input": {"divisor": qdiv.render(D), "N": args.N},
        "degree": rat(qdiv.degree(D)),
        "hilbert": qdiv.hilbert_series_window(D, args.N),
        "citations": [],
    }
    if args.p is not None:
        q = args.p**args.e
        out["input"].update(p=args.p, e=args.e)
        out["graded_pieces"] = {
            str(i): decision.graded_piece_dims(D, args.p, args.e, i, args.N) for i in range(q)
        }
    return out


def _parse_gamma(text: str, W: picard.Weights) -> picard.PicElement:
    # "l1,l2,...;d"
    if ";" in text:
        ls, d = text.split(";", 1)
    else:
        ls, d = "", text
    l = [int(x) for x in ls.split(",") if x.strip()]
    if not l and W.n:
        l = [0] * W.n
    return picard.normalize(l, int(d or 0), W)


def cmd_pushforward(args) -> dict:
    W = _weights(args)
    g = _parse_gamma(args.gamma, W) if args.gamma else picard.zero(W)
    t = frobcalc.type_of_pushforward(g, args.p, args.e)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"weights": list(W.r), "p": args.p, "e": args.e, "gamma": {"l": list(g.l), "d": g.d}},
        "delta": rat(picard.delta(W)),
        "type": type_json(t),
        "orb_degree": rat(frobcalc.orb_degree(t)),
        "c1_formula": rat(frobcalc.c1_pushforward(picard.deg_pic(g), 1, args.p, args.e, W)),
        "slope": rat(frobcalc.slope(t)),
        "splitting_P1": list(frobcalc.frob_split_P1(picard.pushforward_to_P1(g), args.p, args.e).degrees),
        "positive_cone": rootlattice.in_hat_positive_cone(t),
        "citations": ["crawley-boevey-positive-roots"],
    }


def cmd_roots(args) -> dict:
    W = picard.Weights(parse_weights(args.weights))
    finite = rootlattice.is_finite_type(W)
    out = {
        "schema_version": SCHEMA_VERSION,
        "input": {"weights": list(W.r)},
        "delta": rat(picard.delta(W)),
        "finite_type": finite,
        "vertex_count": rootlattice.star_graph(W).size,
        "citations": [],
    }
    if finite:
        letter, rank = rootlattice.ade_type(W)
        out["ade_type"] = f"{letter}{rank}"
        out["rmax"] = rootlattice.rmax(W)
        roots = rootlattice.enumerate_positive_roots(W)
        out["positive_root_count"] = len(roots)
        if args.enumerate:
            out["positive_roots"] = [list(v.coords) for v in roots]
    if args.classify:
        coords = [int(x) for x in args.classify.split(",")]
        v = rootlattice.LatticeVector(W.r, tuple(coords))
        out["classify"] = {"vector": coords, "class": rootlattice.classify_root(v)}
    return out


def cmd_elliptic(args) -> dict:
    W = picard.Weights(parse_weights(args.weights))
    E = elliptic.cover_model(W, args.p, args.lam)
    ordy = elliptic.is_ordinary(E)
    census = elliptic.summand_census_delta0(W, args.p, args.e, args.lam)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"weights": list(W.r), "p": args.p, "e": args.e, "lambda": args.lam},
        "curve": f"y^2 = {E.f_str()}",
        "automorphism": E.automorphism,
        "m": E.m,
        "point_count": elliptic.point_count(E, 1),
        "trace": ordy.trace,
        "hasse_invariant": ordy.hasse,
        "mode": census.mode,
        "fsplit": decision.fsplit_delta0(W, args.p, args.lam),
        "summands": [{"rank": rk, "multiplicity": mu, "label": lab} for rk, mu, lab in census.summands],
        "total_rank": census.total_rank,
        "det_class": None if census.det_class is None else {
            "l": list(census.det_class.l), "d": census.det_class.d,
        },
        "citations": ["delta-zero-elliptic-cover"],
    }


def cmd_fedder(args) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"f": args.polynomial, "p": args.p},
        "fpure": decision.fedder_is_fpure(args.polynomial, args.p),
        "citations": ["fedder"],
    }


def cmd_decompose(args) -> dict:
    W = _weights(args)
    v = frobcalc.indecomposability_verdict(W, args.p, args.e)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"weights": list(W.r), "p": args.p, "e": args.e},
        "delta": rat(picard.delta(W)),
        "verdict": v.kind,
        "certificate": [{"root": type_json(t), "multiplicity": mult} for t, mult in v.certificate],
        "notes": v.notes,
        "citations": [v.citation] if v.citation else [],
    }


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ffrt-lab", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--strict", action="store_true", help="exit 3 on UNKNOWN verdicts")

    sp = sub.add_parser("analyze", help="full FFRT report for a divisor")
    sp.add_argument("divisor", nargs="?")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--e-max", type=int, default=2)
    sp.add_argument("--weights")
    sp.add_argument("--genus", type=int, default=0)
    sp.add_argument("--lambda", dest="lam", type=int)
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("hilbert", help="Hilbert function window and graded pieces of R^(1/q)")
    sp.add_argument("divisor")
    sp.add_argument("-N", type=int, default=20)
    sp.add_argument("-p", type=int)
    sp.add_argument("-e", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("pushforward", help="type of F^e_* O(gamma) on the weighted projective line")
    sp.add_argument("divisor", nargs="?")
    sp.add_argument("--weights")
    sp.add_argument("--gamma", help="line bundle as 'l1,...,ln;d'")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-e", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_pushforward)

    sp = sub.add_parser("roots", help="root system of the star graph")
    sp.add_argument("--weights", required=True)
    sp.add_argument("--enumerate", action="store_true")
    sp.add_argument("--classify", help="flat coordinates 'rho,c11,...'")
    common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("elliptic", help="delta = 0 elliptic cover and summand census")
    sp.add_argument("--weights", required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-e", type=int, default=1)
    sp.add_argument("--lambda", dest="lam", type=int)
    common(sp)
    sp.set_defaults(func=cmd_elliptic)

    sp = sub.add_parser("fedder", help="Fedder's F-purity test for a polynomial in x, y, z")
    sp.add_argument("polynomial")
    sp.add_argument("-p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_fedder)

    sp = sub.add_parser("decompose", help="indecomposability of F^e_* O")
    sp.add_argument("divisor", nargs="?")
    sp.add_argument("--weights")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-e", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_decompose)
    return ap


def _text(obj, prefix="") -> list:
    lines = []
    for k in sorted(obj):
        v = obj[k]
        if isinstance(v, dict):
            lines.extend(_text(v, f"{prefix}{k}."))
        else:
            lines.append(f"{prefix}{k}: {json.dumps(v, sort_keys=True)}")
    return lines


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        report = args.func(args)
    except FFRTError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(dumps(report))
    else:
        print("\n".join(_text(report)))
    status = report.get("verdict", {})
    if args.strict and isinstance(status, dict) and status.get("status") == decision.UNKNOWN:
        print("verdict is UNKNOWN", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
