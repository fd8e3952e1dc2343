import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import random_rank_two

from lialg import catalog, linalg
from lialg.complex import cohomology_report
from lialg.criteria import central_configuration_scan, witness_cocycle
from lialg.errors import EmptyCohomology, NotMaximalRank
from lialg.extension import adjoint_module, extend
from lialg.invariant import (
    GradedCochainBasis, GradingError, RigidityVerdict, assemble, classify_invariant,
    default_threads, hochschild_serre_dim, invariant_cohomology_dim, invariant_report,
    invariant_representatives, invariant_subcomplex, nilradical_and_module, rigidity,
)
from lialg.algebra import GradedNilpotentAlgebra


def _nm(A):
    _, N, M = nilradical_and_module(A)
    return N, M


def test_heisenberg_invariant_cochains():
    N, M = _nm(catalog.heisenberg())
    # degree 0: torus elements; degree 1: e_mu -> e_mu; degree 2: {a1, a2} -> e_{a1+a2}
    assert [len(GradedCochainBasis(N, M, j)) for j in range(4)] == [2, 3, 1, 0]
    [(S, nu)] = GradedCochainBasis(N, M, 2).entries
    assert {N.labels[s] for s in S} == {(1, 0), (0, 1)}
    assert M.weight_tags[nu] == (1, 1)


def test_heisenberg_invariant_cohomology_vanishes():
    N, M = _nm(catalog.heisenberg())
    assert [invariant_cohomology_dim(N, M, j) for j in range(3)] == [0, 0, 0]


def test_n7_invariant_h2():
    N, M = _nm(catalog.n7())
    assert invariant_cohomology_dim(N, M, 2) >= 1


def test_assemble_examples():
    assert assemble(2, [0, 0, 0], 2) == 0
    assert assemble(2, [0, 0, 3], 2) == 3
    # C(3, 2) * 1 + C(3, 1) * 2 + C(3, 0) * 5
    assert assemble(3, [1, 2, 5], 2) == 3 + 6 + 5


@pytest.mark.parametrize("builder", [catalog.heisenberg, catalog.n7, catalog.n9,
                                     lambda: catalog.g_family(1, 1), lambda: catalog.model_filiform(6)])
def test_assembly_matches_brute_force(builder):
    A = builder()
    L = extend(A)
    brute = cohomology_report(L, adjoint_module(L), 2)
    N, M = _nm(A)
    for n in range(3):
        assert hochschild_serre_dim(N, A.rank, M, n) == brute.h(n)


def test_blocks_partition_cochains_and_bound_cohomology():
    N, M = _nm(catalog.n9())
    rep = invariant_report(N, M, 2)
    for j in range(3):
        assert sum(dims[j].dim_c for dims in rep.blocks.values()) == rep.degrees[j].dim_c
        assert rep.graded_h(j) >= rep.h(j)
    # the per-weight blocks overcount in degree 0: the true h^0 vanishes
    assert rep.h(0) == 0 and rep.graded_h(0) == 2


def test_threads_do_not_change_results():
    N, M = _nm(catalog.n10())
    one = invariant_report(N, M, 2, threads=1).to_dict()
    four = invariant_report(N, M, 2, threads=4).to_dict()
    assert one == four


def test_default_threads(monkeypatch):
    monkeypatch.setenv("LIALG_THREADS", "3")
    assert default_threads() == 3
    monkeypatch.delenv("LIALG_THREADS")
    assert default_threads() >= 1


def test_invariant_subcomplex_is_a_complex():
    N, M = _nm(catalog.n12())
    bases, (d_lo, d_hi) = invariant_subcomplex(N, M, 2)
    assert [b.degree for b in bases] == [1, 2, 3]
    assert linalg.is_zero(linalg.matmul(d_hi, d_lo))


def test_representatives_and_classification():
    N, M = _nm(catalog.n7())
    reps = invariant_representatives(N, M, 2)
    assert len(reps) == invariant_cohomology_dim(N, M, 2)
    for f in reps:
        assert classify_invariant(N, M, f) == (True, False)


def test_coboundaries_classify_as_trivial():
    N, M = _nm(catalog.n9())
    bases, (d_lo, _) = invariant_subcomplex(N, M, 2)
    for col in list(linalg.transpose(d_lo).values())[:5]:
        f = {bases[1].entries[i]: v for i, v in col.items()}
        assert classify_invariant(N, M, f) == (True, True)


def test_non_invariant_key_is_rejected():
    N, M = _nm(catalog.heisenberg())
    with pytest.raises(GradingError):
        classify_invariant(N, M, {((0, 1), 0): 1})


def test_empty_representatives():
    N, M = _nm(catalog.heisenberg())
    with pytest.raises(EmptyCohomology):
        invariant_representatives(N, M, 2)


def test_witness_of_n9_is_a_class():
    A = catalog.n9()
    N, M = _nm(A)
    [match] = central_configuration_scan(A).matches
    assert classify_invariant(N, M, witness_cocycle(A, match)) == (True, False)


def test_rigidity_verdicts():
    rigid = rigidity(catalog.g_family(1, 1))
    assert rigid.rigid and rigid.source == "computed" and rigid.dim_h2 == 0
    assert rigid.headline() == "RIGID (computed), dim H^2 = 0"
    for builder in (catalog.n9, catalog.n12):
        v = rigidity(builder())
        assert not v.rigid and v.dim_h2 >= 1 and v.witnesses
    d = rigidity(catalog.n9()).to_dict()
    assert d["dim_H2"] == 1 and d["h_inv"] == [0, 0, 1] and d["witnesses"]


def test_rigidity_requires_maximal_rank():
    A = GradedNilpotentAlgebra.from_brackets(2, [(1, 0), (0, 1), (1, 1), (2, 1)],
                                             [((1, 0), (0, 1), 1)])
    with pytest.raises(NotMaximalRank):
        rigidity(A)


def test_verdict_headline_with_bound():
    v = RigidityVerdict(rigid=False, source="criterion", criterion="x", lower_bound=2)
    assert v.headline() == "NON-RIGID (x), dim H^2 >= 2"


@given(st.integers(0, 10**9))
def test_generated_assembly_matches_brute_force(seed):
    A = random_rank_two(random.Random(seed))
    L = extend(A)
    brute = cohomology_report(L, adjoint_module(L), 2).h(2)
    assert rigidity(A, witnesses=False).dim_h2 == brute


@given(st.integers(0, 10**9))
def test_generated_blocks_bound_cohomology(seed):
    N, M = _nm(random_rank_two(random.Random(seed)))
    rep = invariant_report(N, M, 2)
    for j in range(3):
        assert sum(dims[j].dim_c for dims in rep.blocks.values()) == rep.degrees[j].dim_c
        assert rep.graded_h(j) >= rep.h(j) >= 0
