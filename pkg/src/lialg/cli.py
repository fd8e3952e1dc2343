"""Command-line front end.

Usage:
    lialg verify algebra.txt
    lialg rigidity catalog:g --param n=2 --param t=1
    lialg cohomology catalog:heisenberg --degree 2 --method both
    lialg catalog emit n9 > n9.txt

An input is either a path to an algebra file or ``catalog:<name>`` with
``--param key=value`` options.  File format::

    # comment
    rank 2
    weight 1 0
    weight 0 1
    weight 1 1
    bracket [1,0] [0,1] 1

Exit codes: 0 success / rigid, 1 verify found problems, 2 error,
10 non-rigid.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import catalog, lattice
from .algebra import GradedNilpotentAlgebra
from .complex import cohomology_report
from .criteria import criterion_report, decide, format_cochain, witness_with_origin
from .errors import (DuplicateBracket, DuplicateWeight, LialgError, NonRational, ParseError,
                     UnknownWeight)
from .extension import adjoint_module, extend
from .invariant import (assemble, default_threads, invariant_report, invariant_representatives,
                        nilradical_and_module)
from .lattice import WeightSystem

EXIT_OK = 0
EXIT_DIRTY = 1
EXIT_ERROR = 2
EXIT_NONRIGID = 10

_WEIGHT_RE = re.compile(r"\[([^\]]*)\]")


# -- file format ---------------------------------------------------------------


def _parse_tuple(text: str, rank: Optional[int], lineno: int) -> Tuple[int, ...]:
    try:
        coords = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"weight coordinates must be integers: {text!r}", lineno) from None
    if any(c < 0 for c in coords):
        raise ParseError(f"negative coordinate in {coords}", lineno)
    if rank is not None and len(coords) != rank:
        raise ParseError(f"weight {coords} does not have {rank} coordinates", lineno)
    if not any(coords):
        raise ParseError("the zero weight cannot be declared", lineno)
    return coords


def _parse_rational(text: str, lineno: int) -> Fraction:
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise NonRational(f"coefficient {text!r} is not an integer or p/q", lineno)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise NonRational(f"coefficient {text!r} has a zero denominator", lineno) from None


def parse(text: str, name: str = "") -> GradedNilpotentAlgebra:
    """Parse the algebra file format; the result is not validated."""
    rank: Optional[int] = None
    weights: Dict[Tuple[int, ...], int] = {}
    raw_brackets: List[Tuple[str, str, str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "rank":
            if rank is not None:
                raise ParseError("rank declared twice", lineno)
            try:
                rank = int(rest)
            except ValueError:
                raise ParseError(f"bad rank {rest!r}", lineno) from None
            if rank < 1:
                raise ParseError("rank must be positive", lineno)
        elif head == "weight":
            w = _parse_tuple(rest, None, lineno)
            if w in weights:
                raise DuplicateWeight(f"weight {list(w)} declared twice (first on line {weights[w]})", lineno)
            weights[w] = lineno
        elif head == "bracket":
            parts = _WEIGHT_RE.findall(rest)
            tail = _WEIGHT_RE.sub(" ", rest).split()
            if len(parts) != 2 or len(tail) != 1:
                raise ParseError("expected: bracket [a,...] [b,...] coefficient", lineno)
            raw_brackets.append((parts[0], parts[1], tail[0], lineno))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if rank is None:
        raise ParseError("missing rank declaration")
    for w, lineno in weights.items():
        if len(w) != rank:
            raise ParseError(f"weight {list(w)} does not have {rank} coordinates", lineno)
    constants: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Fraction] = {}
    seen: Dict[frozenset, int] = {}
    for left, right, coef, lineno in raw_brackets:
        a = _parse_tuple(left, rank, lineno)
        b = _parse_tuple(right, rank, lineno)
        if a == b:
            raise ParseError(f"self-bracket of {list(a)} must vanish", lineno)
        value = _parse_rational(coef, lineno)
        if value == 0:
            raise ParseError("zero coefficients are implicit; omit the line", lineno)
        for w in (a, b, lattice.add(a, b)):
            if w not in weights:
                raise UnknownWeight(f"weight {list(w)} is not declared", lineno)
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateBracket(f"bracket of {list(a)}, {list(b)} already given on line {seen[key]}", lineno)
        seen[key] = lineno
        constants[(a, b)] = value
    return GradedNilpotentAlgebra(WeightSystem(rank, weights), constants, name=name)


def emit(A: GradedNilpotentAlgebra) -> str:
    """The file form of ``A``; ``parse(emit(A))`` has the same constants."""

    def br(w):
        return "[" + ",".join(str(c) for c in w) + "]"

    lines = []
    if A.name:
        lines.append(f"# {A.name}")
    if A.provenance:
        lines.append(f"# {A.provenance}")
    lines.append(f"rank {A.rank}")
    for w in A.W:
        lines.append("weight " + " ".join(str(c) for c in w))
    for a, b, v in A.nonzero_pairs():
        lines.append(f"bracket {br(a)} {br(b)} {v}")
    return "\n".join(lines) + "\n"


# -- input resolution ------------------------------------------------------------


def _params(items: List[str]) -> Dict[str, str]:
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise LialgError(f"--param expects key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def load(source: str, params: List[str]) -> GradedNilpotentAlgebra:
    if source.startswith("catalog:"):
        return catalog.build(source[len("catalog:"):], **_params(params))
    if params:
        raise LialgError("--param only applies to catalog inputs")
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LialgError(f"cannot read {source}: {exc.strerror}") from None
    return parse(text, name=path.stem)


def _require_clean(A: GradedNilpotentAlgebra) -> None:
    report = A.validate()
    if not report.ok:
        raise LialgError("input fails validation:\n  " + "\n  ".join(report.lines()))
    ok, diag = A.check_maximal_rank()
    if not ok:
        raise LialgError("input is not of maximal rank:\n  " + "\n  ".join(diag))


# -- commands --------------------------------------------------------------------


def cmd_verify(A, args) -> Tuple[int, dict, List[str]]:
    report = A.validate()
    rank_ok, diag = A.check_maximal_rank()
    payload = {
        "name": A.name, "rank": A.rank, "dim": A.dim,
        "validation": report.to_dict(),
        "maximal_rank": rank_ok, "maximal_rank_diagnostics": diag,
        "nilindex": A.nilindex(),
    }
    lines = [f"{A.name or 'algebra'}: rank {A.rank}, dim {A.dim}, nilindex {A.nilindex()}"]
    lines += report.lines() or ["Jacobi identity holds; all bracket targets are weights"]
    lines += diag or ["maximal rank: yes"]
    clean = report.ok and rank_ok
    return (EXIT_OK if clean else EXIT_DIRTY), payload, lines


def cmd_criteria(A, args):
    _require_clean(A)
    report = criterion_report(A)
    return EXIT_OK, report.to_dict(), report.lines()


def cmd_rigidity(A, args):
    _require_clean(A)
    verdict = decide(A, confirm=args.confirm, threads=args.threads)
    lines = [verdict.headline()]
    if verdict.h_inv is not None:
        lines.append("invariant h^0, h^1, h^2 = " + ", ".join(str(h) for h in verdict.h_inv))
    return (EXIT_OK if verdict.rigid else EXIT_NONRIGID), verdict.to_dict(), lines


def cmd_cohomology(A, args):
    _require_clean(A)
    k = args.degree
    if k < 0:
        raise LialgError("--degree must be non-negative")
    payload: dict = {"degree": k, "method": args.method}
    lines = []
    graded = brute = None
    if args.method in ("graded", "both"):
        _, N, M = nilradical_and_module(A)
        inv = invariant_report(N, M, k, threads=args.threads)
        h = [inv.h(j) for j in range(k + 1)]
        graded = [assemble(A.rank, h, n) for n in range(k + 1)]
        payload["graded"] = {"h_inv": h, "dim_H": graded, "invariant": inv.to_dict()}
        lines.append("invariant subcomplex of the nilradical:")
        lines += ["  " + line for line in inv.lines()]
        lines.append("graded:      " + "  ".join(f"H^{n}={d}" for n, d in enumerate(graded)))
    if args.method in ("bruteforce", "both"):
        L = extend(A)
        rep = cohomology_report(L, adjoint_module(L), k)
        brute = [rep.h(n) for n in range(k + 1)]
        payload["bruteforce"] = rep.to_dict()
        lines.append("full cochain complex of R_T:")
        lines += ["  " + line for line in rep.lines()]
        lines.append("bruteforce:  " + "  ".join(f"H^{n}={d}" for n, d in enumerate(brute)))
    if graded is not None and brute is not None:
        agree = graded == brute
        payload["agree"] = agree
        lines.append("methods agree" if agree else "METHODS DISAGREE")
        if not agree:
            return EXIT_ERROR, payload, lines
    return EXIT_OK, payload, lines


def cmd_witness(A, args):
    _require_clean(A)
    report = criterion_report(A)
    witnesses = []
    lines = []
    for match in report.matches:
        f, origin = witness_with_origin(A, match)
        witnesses.append({"case": match[0], "weights": [list(w) for w in match[1]],
                          "origin": origin, "cochain": format_cochain(A, f)})
        lines.append(f"{match[0]} at " + ", ".join(lattice.fmt(w) for w in match[1]) + f" ({origin}):")
        lines += ["  " + s for s in format_cochain(A, f)]
    if not witnesses:
        _, N, M = nilradical_and_module(A)
        inv = invariant_report(N, M, 2, blocks=False)
        if inv.h(2):
            for f in invariant_representatives(N, M, 2):
                witnesses.append({"case": None, "weights": [], "origin": "computed",
                                  "cochain": format_cochain(A, f)})
                lines.append("computed representative:")
                lines += ["  " + s for s in format_cochain(A, f)]
        else:
            lines.append("no non-trivial invariant 2-cocycle: H^2(N, R_T)^T = 0")
    return EXIT_OK, {"witnesses": witnesses}, lines


COMMANDS = {
    "verify": cmd_verify,
    "criteria": cmd_criteria,
    "rigidity": cmd_rigidity,
    "cohomology": cmd_cohomology,
    "witness": cmd_witness,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lialg",
        description="Rigidity of maximal solvable extensions of graded nilpotent Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="algebra file, or catalog:<name>")
        p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                       help="catalog parameter (repeatable)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--threads", type=int, default=None,
                       help="worker threads for per-weight blocks (default: $LIALG_THREADS or 1)")

    common(sub.add_parser("verify", help="Jacobi and maximal-rank checks"))
    common(sub.add_parser("criteria", help="all sufficient tests and the central-configuration scan"))
    p = sub.add_parser("rigidity", help="decide whether R_T is cohomologically rigid")
    common(p)
    p.add_argument("--confirm", action="store_true", help="also compute H^2 when a test decides")
    p = sub.add_parser("cohomology", help="dimensions of H^k(R_T, R_T)")
    common(p)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--method", choices=("graded", "bruteforce", "both"), default="graded")
    common(sub.add_parser("witness", help="explicit non-trivial 2-cocycles"))

    p = sub.add_parser("catalog", help="list or emit catalog algebras")
    csub = p.add_subparsers(dest="action", required=True)
    csub.add_parser("list")
    e = csub.add_parser("emit")
    e.add_argument("name")
    e.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    return parser


def _print(payload: dict, lines: List[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        print("\n".join(lines))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "catalog":
            if args.action == "list":
                for entry in catalog.ENTRIES.values():
                    params = ", ".join(f"{k}={d}" for k, (_, d) in entry.parameters.items())
                    print(f"{entry.name:<12} {entry.description}" + (f"  [{params}]" if params else ""))
            else:
                sys.stdout.write(emit(catalog.build(args.name, **_params(args.param))))
            return EXIT_OK
        if args.threads is None:
            args.threads = default_threads()
        A = load(args.input, args.param)
        code, payload, lines = COMMANDS[args.command](A, args)
        payload.setdefault("input", args.input)
        payload["exit_code"] = code
        _print(payload, lines, args.format)
        return code
    except LialgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
