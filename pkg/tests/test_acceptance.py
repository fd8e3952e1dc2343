"""Acceptance suite: thirteen end-to-end criteria, one PASS/FAIL line each.

Run with pytest (the lines are collected into the terminal summary) or
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from generators import random_rank_two  # noqa: E402

from lialg import catalog  # noqa: E402
from lialg.complex import cohomology_report, verify_complex  # noqa: E402
from lialg.criteria import (  # noqa: E402
    CASE_LONG_PAIR, CASE_PAIR, CASE_TRIPLE, central_configuration_scan, diff_bracket_check,
    rank_two_gap_check, short_rank_two_check, two_step_check, weight_condition_report,
    witness_cocycle,
)
from lialg.errors import LialgError  # noqa: E402
from lialg.extension import adjoint_module, extend, nilradical_restriction  # noqa: E402
from lialg.invariant import assemble, classify_invariant, invariant_report  # noqa: E402

RESULTS: list = []


def _record(number: int, title: str, ok: bool, detail: str = "") -> str:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}"
    if detail:
        line += f" -- {detail}"
    RESULTS.append(line)
    print(line)
    return line


def _catalog_instances():
    out = [catalog.heisenberg()]
    out += [catalog.abelian(n) for n in range(1, 5)]
    out += [catalog.model_filiform(n) for n in range(4, 9)]
    out += [catalog.model_nilpotent(b) for b in ((2, 2), (2, 3), (3, 4), (2, 3, 4))]
    out += [catalog.g_family(n, t) for n in (1, 2, 3) for t in (1, -1, Fraction(1, 2))]
    out += [catalog.n9(), catalog.n10(), catalog.n7(), catalog.n12()]
    return out


_CACHE: dict = {}


def _brute_h(A, k_max=2):
    key = (A.name, tuple(sorted(A.constants.items())), k_max)
    if key not in _CACHE:
        L = extend(A)
        _CACHE[key] = cohomology_report(L, adjoint_module(L), k_max)
    return _CACHE[key]


def _inv(A, j_max=2):
    L = extend(A)
    N, M = nilradical_restriction(L)
    return invariant_report(N, M, j_max, blocks=False)


def _hs(A, n=2):
    rep = _inv(A, n)
    return assemble(A.rank, [rep.h(j) for j in range(n + 1)], n)


# ---------------------------------------------------------------- criteria

def check_1():
    bad = []
    for A in _catalog_instances():
        L = extend(A)
        rho = adjoint_module(L)
        for k in (1, 2, 3):
            if not verify_complex(L, rho, k):
                bad.append(f"{A.name} k={k}")
    return not bad, "d o d != 0 for " + ", ".join(bad) if bad else "all catalog instances, k = 1..3"


def check_2():
    bad, n = [], 0
    for A in _catalog_instances():
        if A.dim + A.rank > 14:
            continue
        n += 1
        brute, hs = _brute_h(A).h(2), _hs(A)
        if brute != hs:
            bad.append(f"{A.name}: brute {brute} vs assembled {hs}")
    return not bad, "; ".join(bad) if bad else f"{n} algebras agree"


def check_3():
    bad = []
    for A in _catalog_instances():
        rep = _inv(A, 1)
        if rep.h(0) or rep.h(1):
            bad.append(f"{A.name}: h0={rep.h(0)} h1={rep.h(1)}")
    return not bad, "; ".join(bad) if bad else "h0 = h1 = 0 throughout"


def check_4():
    bad = []
    for A in [catalog.heisenberg()] + [catalog.abelian(n) for n in range(1, 5)]:
        if not two_step_check(A) or _brute_h(A).h(2) != 0:
            bad.append(A.name)
    return not bad, "failed: " + ", ".join(bad) if bad else "heisenberg, abelian 1..4"


def check_5():
    bad, built, skipped = [], [], []
    for n in (1, 2, 3):
        for t in (0, 1, -1, Fraction(1, 2)):
            try:
                A = catalog.g_family(n, t)
            except LialgError:
                skipped.append(f"({n},{t})")
                continue
            built.append((n, t))
            if not rank_two_gap_check(A) or _brute_h(A).h(2) != 0:
                bad.append(A.name)
    generic = all((n, 1) in built for n in (1, 2, 3))
    ok = not bad and generic
    detail = f"{len(built)} built, skipped {' '.join(skipped) or 'none'}"
    if bad:
        detail += "; failed: " + ", ".join(bad)
    return ok, detail


def check_6():
    bad = []
    algebras = [catalog.model_filiform(n) for n in range(5, 9)]
    algebras += [catalog.model_nilpotent((2, 3)), catalog.model_nilpotent((2, 2))]
    for A in algebras:
        _, overall = weight_condition_report(A)
        if not overall or _brute_h(A).h(2) != 0:
            bad.append(A.name)
    return not bad, "failed: " + ", ".join(bad) if bad else f"{len(algebras)} algebras"


def check_7():
    A = catalog.model_nilpotent((2, 2))
    rep = _brute_h(A, 3)
    hs = [rep.h(p) for p in range(4)]
    return A.dim + A.rank == 8 and not any(hs), f"dim R_T = {A.dim + A.rank}, H^0..3 = {hs}"


_EXPECTED_CASE = {"n9": CASE_PAIR, "n10": CASE_LONG_PAIR, "n7": CASE_TRIPLE}


def _scan_examples():
    return [catalog.n9(), catalog.n10(), catalog.n7()]


def check_8():
    bad, notes = [], []
    for A in _scan_examples():
        report = central_configuration_scan(A)
        expected = _EXPECTED_CASE[A.name]
        if report.cases != {expected} or report.lower_bound < 1:
            bad.append(f"{A.name}: cases {sorted(report.cases)}")
            continue
        L = extend(A)
        N, M = nilradical_restriction(L)
        for match in report.matches:
            f = witness_cocycle(A, match)
            cocycle, coboundary = classify_invariant(N, M, f)
            if not cocycle or coboundary:
                bad.append(f"{A.name}: witness cocycle={cocycle} coboundary={coboundary}")
        if _hs(A) < 1:
            bad.append(f"{A.name}: computed H^2 = 0")
        notes.append(f"{A.name}:{expected}")
    return not bad, "; ".join(bad) if bad else ", ".join(notes)


def check_9():
    bad, notes = [], []
    for A in _scan_examples():
        report = central_configuration_scan(A)
        dim = _hs(A)
        bound = report.m + report.n + report.p
        notes.append(f"{A.name} {dim} >= {bound}")
        if dim < bound:
            bad.append(A.name)
    return not bad, ", ".join(notes)


def check_10():
    A = catalog.n12()
    scan = central_configuration_scan(A)
    flags = {
        "two-step": two_step_check(A),
        "short rank two": short_rank_two_check(A),
        "rank-two gap": rank_two_gap_check(A),
        "weight condition": weight_condition_report(A)[1],
    }
    dim = _hs(A)
    ok = not scan.matches and not any(flags.values()) and dim >= 1
    fired = [k for k, v in flags.items() if v]
    return ok, f"scan matches {len(scan.matches)}, tests fired {fired or 'none'}, dim H^2 = {dim}"


def check_11():
    A = catalog.g_family(1, 1)
    s = A.nilindex() - 1
    rep = _inv(A, s)
    return rep.h(s) == 0, f"nilindex {A.nilindex()}, h^{s}_inv = {rep.h(s)}"


def check_12():
    bad = []
    for n in (1, 2, 3):
        ok, failures = diff_bracket_check(catalog.g_family(n, 1))
        if not ok:
            bad.append(f"g({n},1): {failures}")
    return not bad, "; ".join(bad) if bad else "g(1..3, 1)"


SWEEP_SIZE = 200
SWEEP_SEED = 20240613


def sweep_algebras(size=SWEEP_SIZE, seed=SWEEP_SEED):
    rng = random.Random(seed)
    seen, out = set(), []
    while len(out) < size:
        A = random_rank_two(rng)
        key = (tuple(A.W), tuple(sorted(A.constants.items())))
        if key not in seen:
            seen.add(key)
            out.append(A)
    return out


def check_13():
    algebras = sweep_algebras()
    if any(A.nilindex() > 5 or A.rank != 2 for A in algebras):
        return False, "generator produced an out-of-range algebra"
    fired, bad = 0, []
    for A in algebras:
        if short_rank_two_check(A):
            fired += 1
            dim = _brute_h(A).h(2)
            if dim != 0:
                bad.append(f"{sorted(A.constants.items())}: dim H^2 = {dim}")
    detail = f"{len(algebras)} distinct algebras, test fired on {fired}"
    if bad:
        detail += f"; counterexamples: {bad[:3]}"
    return not bad, detail


CRITERIA = [
    (1, "cochain differentials square to zero", check_1),
    (2, "brute-force H^2 equals the torus-invariant assembly", check_2),
    (3, "h^0 and h^1 of the invariant complex vanish", check_3),
    (4, "two-step algebras are rigid", check_4),
    (5, "g(n,t) passes the rank-two gap test and is rigid", check_5),
    (6, "model algebras pass the weight condition and are rigid", check_6),
    (7, "model_nilpotent((2,2)) has H^0..H^3 = 0", check_7),
    (8, "n9 / n10 / n7 match exactly their central configuration", check_8),
    (9, "computed H^2 dominates the configuration count", check_9),
    (10, "n12 is non-rigid with every test silent", check_10),
    (11, "top invariant degree vanishes for g(1,1)", check_11),
    (12, "differentials of brackets agree on g(n,1)", check_12),
    (13, "short rank-two test is sound on a random sweep", check_13),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, detail = check()
    _record(number, title, ok, detail)
    assert ok, detail


def main() -> int:
    start = time.perf_counter()
    failures = 0
    for number, title, check in CRITERIA:
        ok, detail = check()
        _record(number, title, ok, detail)
        failures += not ok
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria pass in {time.perf_counter() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
