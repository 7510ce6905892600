"""Command-line front end: compute, enumerate, and verify.

All heavy lifting lives in the library modules; this file only parses
arguments, renders results deterministically, and maps verification
outcomes to exit codes (0 iff the report passes).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import AlgebraElement, AlgebraId
from .bell import (
    VerificationReport,
    bell,
    bell_enum,
    bell_tilde,
    verify_binomial_identity,
    verify_closed_form,
    verify_closed_terms,
    verify_equal_colors,
    verify_factorization,
    verify_hopf_axioms,
    verify_routes,
    verify_stirling,
    verify_zassenhaus_terms,
)
from .operators import as_multiplication, zassenhaus_term
from .partitions import (
    anchored_set_partitions,
    composition_type,
    count_by_composition_type,
    count_by_partition_type,
    partition_type,
)
from .series import Truncation

_ALGEBRAS = {"sym2": AlgebraId.SYM2, "ncsf2": AlgebraId.NCSF2, "wsym2": AlgebraId.WSYM2}


def _render_element(e: AlgebraElement, fmt: str) -> str:
    if fmt == "latex":
        return e.latex()
    if fmt == "json":
        return json.dumps(e.to_json(), sort_keys=True)
    return e.text()


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_common(parser):
    parser.add_argument("--format", choices=("text", "latex", "json"), default="text")
    parser.add_argument("--out", metavar="PATH", help="write output to a file")


def _cmd_bell(args) -> int:
    alg = _ALGEBRAS[args.alg]
    if args.tilde:
        element = bell_tilde(alg, args.r, args.n, args.k)
        _emit(_render_element(element, args.format), args.out)
        return 0
    if args.route == "enum":
        element = bell_enum(alg, args.r, args.n, args.k)
        _emit(_render_element(element, args.format), args.out)
        return 0
    element = bell(alg, args.r, args.n, args.k)
    if args.route == "operator":
        _emit(_render_element(element, args.format), args.out)
        return 0
    other = bell_enum(alg, args.r, args.n, args.k)
    match = element == other
    lines = [
        _render_element(element, args.format),
        f"routes match: {str(match).lower()}",
    ]
    _emit("\n".join(lines), args.out)
    return 0 if match else 1


def _cmd_enumerate(args) -> int:
    family = anchored_set_partitions(args.r, args.n, args.k)
    if args.count_only:
        _emit(str(len(family)), args.out)
        return 0
    if args.shapes:
        if args.shapes == "ordered":
            shapes = sorted({composition_type(sp) for sp in family})
            rows = [
                (repr(s), count_by_composition_type(args.r, args.n, args.k, s))
                for s in shapes
            ]
        else:
            shapes = sorted({partition_type(sp) for sp in family})
            rows = [
                (repr(s), count_by_partition_type(args.r, args.n, args.k, s))
                for s in shapes
            ]
        if args.format == "json":
            _emit(json.dumps([{"shape": s, "count": c} for s, c in rows]), args.out)
        else:
            _emit("\n".join(f"{s}  {c}" for s, c in rows), args.out)
        return 0
    if args.format == "json":
        _emit(json.dumps([sp.to_json() for sp in family], sort_keys=True), args.out)
    else:
        _emit("\n".join(repr(sp) for sp in family) if family else "(empty)", args.out)
    return 0


def _cmd_zterm(args) -> int:
    poly = zassenhaus_term(args.n, args.k)
    if args.alg is None:
        if args.format == "json":
            _emit(json.dumps(poly.to_json(), sort_keys=True), args.out)
        else:
            _emit(poly.text(), args.out)
        return 0
    alg = _ALGEBRAS[args.alg]
    element = as_multiplication(alg, poly, args.bound)
    if element is None:
        _emit("not a multiplication operator", args.out)
        return 1
    _emit(_render_element(element, args.format), args.out)
    return 0


def _default_jobs() -> int:
    env = os.environ.get("BELLHOPF_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _cmd_verify(args) -> int:
    trunc = Truncation(args.nx, args.ny, args.nt)
    name = args.identity
    if name == "factorization":
        reports = [
            verify_factorization(_ALGEBRAS[a], trunc, z_source=args.z_source)
            for a in ([args.alg] if args.alg else ["sym2", "ncsf2", "wsym2"])
        ]
    elif name == "closed-form":
        reports = [verify_closed_form(trunc)]
    elif name == "binomial":
        reports = [
            verify_binomial_identity(args.rmax, args.nmax, args.kmax, jobs=args.jobs)
        ]
    elif name == "equal-colors":
        reports = [
            verify_equal_colors(_ALGEBRAS[a], trunc)
            for a in ([args.alg] if args.alg else ["sym2", "ncsf2"])
        ]
    elif name == "stirling":
        reports = [verify_stirling(args.nmax)]
    elif name == "zassenhaus":
        reports = [verify_zassenhaus_terms(args.nmax, args.weight)]
    elif name == "closed-terms":
        reports = [verify_closed_terms(args.nmax)]
    elif name == "routes":
        reports = [verify_routes(args.nmax)]
    elif name == "hopf-axioms":
        reports = [
            verify_hopf_axioms(_ALGEBRAS[a], args.weight, args.samples, args.seed)
            for a in ([args.alg] if args.alg else ["sym2", "ncsf2", "wsym2"])
        ]
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown identity {name!r}")
    payload = json.dumps([r.to_json() for r in reports], sort_keys=True)
    if args.format == "text":
        _emit("\n".join(r.summary() for r in reports), args.out)
    else:
        _emit(payload, args.out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellhopf",
        description="r-Bell elements in three level-2 combinatorial Hopf algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bell = sub.add_parser("bell", help="compute an r-Bell or companion element")
    p_bell.add_argument("--alg", choices=sorted(_ALGEBRAS), required=True)
    p_bell.add_argument("-r", type=int, default=0)
    p_bell.add_argument("-n", type=int, required=True)
    p_bell.add_argument("-k", type=int, required=True)
    p_bell.add_argument("--tilde", action="store_true",
                        help="compute the companion family a1^r b1^k . D^n")
    p_bell.add_argument("--route", choices=("operator", "enum", "both"),
                        default="operator")
    _add_common(p_bell)
    p_bell.set_defaults(func=_cmd_bell)

    p_enum = sub.add_parser("enumerate", help="list or count anchored set partitions")
    p_enum.add_argument("-r", type=int, default=0)
    p_enum.add_argument("-n", type=int, required=True)
    p_enum.add_argument("-k", type=int, required=True)
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--shapes", choices=("ordered", "unordered"),
                        help="print shape-count tables instead of partitions")
    _add_common(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_zterm = sub.add_parser("zterm", help="a factorization correction term")
    p_zterm.add_argument("n", type=int)
    p_zterm.add_argument("k", type=int)
    p_zterm.add_argument("--alg", choices=sorted(_ALGEBRAS),
                         help="reduce to a multiplication element in this algebra")
    p_zterm.add_argument("--bound", type=int, default=6,
                         help="weight bound for the multiplication certificate")
    _add_common(p_zterm)
    p_zterm.set_defaults(func=_cmd_zterm)

    p_verify = sub.add_parser("verify", help="run an identity check (exit 0 iff pass)")
    p_verify.add_argument(
        "identity",
        choices=(
            "factorization", "closed-form", "binomial", "equal-colors",
            "stirling", "zassenhaus", "closed-terms", "routes", "hopf-axioms",
        ),
    )
    p_verify.add_argument("--alg", choices=sorted(_ALGEBRAS))
    p_verify.add_argument("--nx", type=int, default=4)
    p_verify.add_argument("--ny", type=int, default=2)
    p_verify.add_argument("--nt", type=int, default=3)
    p_verify.add_argument("--rmax", type=int, default=3)
    p_verify.add_argument("--nmax", type=int, default=5)
    p_verify.add_argument("--kmax", type=int, default=4)
    p_verify.add_argument("--weight", type=int, default=5,
                          help="basis-key weight cap for sweeps")
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=_default_jobs(),
                          help="worker processes for sweeps (env BELLHOPF_JOBS)")
    p_verify.add_argument("--z-source", choices=("closed", "solved"), default="closed",
                          help="correction-term family for the factorization check")
    p_verify.add_argument("--format", choices=("text", "json"), default="json")
    p_verify.add_argument("--out", metavar="PATH")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
