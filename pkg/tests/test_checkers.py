import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfsym import checkers as ck
from hopfsym.catalog import super_trivext
from hopfsym.constructions import (
    cyclic_group_hopf,
    dual_numbers_over_h4,
    ground_algebra,
    product_kxk,
    regrade,
    regular_comodule,
    smash_product,
    sweedler_h4,
    trivial_comodule,
    trivial_extension,
    upper_triangular,
)
from hopfsym.corep import NotSovereignError
from hopfsym.exactlin import QQ, Field, rank
from hopfsym.structure import distinguished_pair, integrals, RIGHT

import oracles
from helpers import as_int_lists

H4 = sweedler_h4()
ALPHA = distinguished_pair(H4).alpha
REMARK_LAMBDA = QQ.array([0, 0, 1, 0])  # lambda(x) = 1, zero elsewhere


def kc2_graded():
    H = cyclic_group_hopf(2)
    return H, regular_comodule(H)


# -- constraint spaces ----------------------------------------------------------


def test_colinear_space_over_k_is_everything():
    A = trivial_comodule(upper_triangular())
    assert len(ck.colinear_space(A)) == 3


def test_colinear_space_h4_regular():
    space = ck.colinear_space(regular_comodule(H4))
    assert len(space) == 1
    assert oracles.proportional(space[0], REMARK_LAMBDA)


def test_colinear_space_graded_vanishes_off_degree_e():
    C2 = cyclic_group_hopf(2)
    R = regrade(upper_triangular(), C2, ["e", "g", "e"])
    space = ck.colinear_space(R)
    assert len(space) == 2
    assert all(v[1] == 0 for v in space)


def test_symmetric_space_examples():
    A = regular_comodule(H4)
    assert ck.satisfies(QQ, ck.symmetric_constraints(A, ALPHA), REMARK_LAMBDA)
    H, K = kc2_graded()
    assert ck.symmetric_space(K, QQ.array([1, -1])) == []
    # H = k, u = eps: trace-like functionals on upper triangular matrices kill E12
    T = ck.symmetric_space(trivial_comodule(upper_triangular()), [1])
    assert len(T) == 2 and all(v[1] == 0 for v in T)


def test_symmetric_space_needs_sovereign_character():
    with pytest.raises(NotSovereignError):
        ck.symmetric_space(regular_comodule(H4), H4.counit)


# -- gram and stabilizer ------------------------------------------------------------


def test_gram_examples_kc2():
    H = cyclic_group_hopf(2)
    g = ck.gram(H.alg, [1, 1])
    assert g.gram.tolist() == [[1, 1], [1, 1]] and not g.nondegenerate
    g = ck.gram(H.alg, [0, 1])
    assert g.gram.tolist() == [[0, 1], [1, 0]] and g.nondegenerate


def test_gram_h4_remark_functional_matches_oracle():
    G = ck.gram(H4.alg, REMARK_LAMBDA)
    assert G.nondegenerate
    ref = oracles.gram(oracles.h4_mult(), [0, 0, 1, 0])
    assert G.gram.tolist() == ref
    assert oracles.rank(ref) == 4


def test_left_radical():
    g = ck.gram(cyclic_group_hopf(2).alg, [1, 1])
    rad = g.left_radical()
    assert len(rad) == 1 and list(rad[0]) == [-1, 1]


def test_stabilizer_examples():
    assert ck.largest_stable_subspace_in_kernel(H4.alg, REMARK_LAMBDA, (ck.RIGHT_ACTION,)) == []
    everything = ck.largest_stable_subspace_in_kernel(H4.alg, QQ.zeros(4))
    assert len(everything) == 4
    # every trace-like functional on H4 kills the two-sided ideal <x, cx>
    traces = ck.symmetric_space(trivial_comodule(H4.alg), [1])
    assert traces
    for lam in traces + [QQ.reduce(sum(traces))]:
        stab = ck.largest_stable_subspace_in_kernel(H4.alg, lam, (ck.RIGHT_ACTION, ck.LEFT_ACTION))
        M = np.array([list(v) for v in stab], dtype=object)
        for b in (2, 3):
            aug = np.array([list(v) for v in stab] + [list(QQ.basis_vector(4, b))], dtype=object)
            assert rank(QQ, aug) == rank(QQ, M)


def test_hstar_structure_requires_coaction():
    with pytest.raises(ck.PreconditionError):
        ck.largest_stable_subspace_in_kernel(H4.alg, REMARK_LAMBDA, (ck.HSTAR_ACTION,))


# -- decide ------------------------------------------------------------------------


def test_decide_empty_space():
    rep = ck.decide(H4.alg, [])
    assert rep.verdict == ck.NO_CERTIFIED and rep.witness is None


def test_h4_alpha_symmetric_witness():
    rep = ck.check_symmetric(regular_comodule(H4), ALPHA)
    assert rep.verdict == ck.YES
    assert list(rep.witness) == [0, 0, 1, 0]
    assert any("B1, B2, B3" in d for d in rep.diagnostics)


def test_kc2_verdicts():
    H, A = kc2_graded()
    assert ck.check_symmetric(A, H.counit).yes
    rep = ck.check_symmetric(A, QQ.array([1, -1]))
    assert rep.verdict == ck.NO_CERTIFIED


@pytest.mark.parametrize("H", [cyclic_group_hopf(2), cyclic_group_hopf(3), H4], ids=["kC2", "kC3", "H4"])
def test_hopf_algebras_frobenius_in_MH(H):
    rep = ck.check_frobenius_in_MH(regular_comodule(H))
    assert rep.yes
    assert "left-sided mirror condition agrees" in rep.diagnostics


def test_drinfeld_double_regular_is_frobenius():
    from hopfsym.constructions import drinfeld_double

    D = drinfeld_double(H4)
    rep = ck.check_frobenius_in_MH(regular_comodule(D))
    assert rep.yes and ck.gram(D.alg, rep.witness).nondegenerate


def test_ground_is_frobenius_over_any_h():
    assert ck.check_frobenius_in_MH(trivial_comodule(ground_algebra(), H4)).yes


def test_graded_trivial_extension_example():
    A = super_trivext(upper_triangular(), QQ)
    assert ck.check_plain(A.alg, ck.FROBENIUS).yes
    assert ck.check_frobenius_in_MH(A).verdict == ck.NO_CERTIFIED


def test_plain_examples():
    assert ck.check_plain(H4.alg, ck.SYMMETRIC).verdict == ck.NO_CERTIFIED
    E = trivial_extension(dual_numbers_over_h4(QQ, H4), ALPHA).comodule
    assert ck.check_plain(E.alg, ck.SYMMETRIC).verdict == ck.NO_CERTIFIED
    for n in (1, 2, 3, 5):
        rep = ck.check_plain(cyclic_group_hopf(n).alg, ck.SYMMETRIC)
        assert rep.yes
    with pytest.raises(ValueError):
        ck.check_plain(H4.alg, "cute")


def test_no_probabilistic_when_grid_is_too_large():
    rep = ck.check_plain(upper_triangular(), ck.FROBENIUS, budget=1)
    assert rep.verdict == ck.NO_PROBABILISTIC
    assert "failure bound n*trials/(2S+1)" in rep.confidence_note
    assert ck.check_plain(upper_triangular(), ck.FROBENIUS).verdict == ck.NO_CERTIFIED


def test_small_field_behaviour():
    F3 = Field(3)
    rep = ck.check_plain(upper_triangular(F3), ck.FROBENIUS)
    assert rep.verdict == ck.NO_CERTIFIED
    assert any("small-field warning" in d for d in rep.diagnostics)
    rep = ck.check_plain(upper_triangular(F3), ck.FROBENIUS, budget=5)
    assert rep.verdict == ck.NO_PROBABILISTIC
    assert any("small-field warning" in d for d in rep.diagnostics)


def test_seed_determinism():
    A = smash_product(regular_comodule(H4)).comodule
    a = ck.check_frobenius_in_MH(A, seed=7).as_dict()
    b = ck.check_frobenius_in_MH(A, seed=7).as_dict()
    assert a == b
    for seed in range(4):
        assert ck.check_frobenius_in_MH(A, seed=seed).verdict == ck.YES


# -- soundness against brute force over F_3 -----------------------------------------

F3 = Field(3)
SMALL_ALGEBRAS = {
    "R": upper_triangular(F3),
    "kxk": product_kxk(F3),
    "H4": sweedler_h4(F3).alg,
    "kC3": cyclic_group_hopf(3, F3).alg,
}


@given(st.sampled_from(sorted(SMALL_ALGEBRAS)), st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), min_size=1, max_size=3), st.integers(0, 5))
def test_decide_agrees_with_exhaustion(name, raw, seed):
    alg = SMALL_ALGEBRAS[name]
    n = alg.dim
    space = [F3.array(v[:n]) for v in raw]
    rep = ck.decide(alg, space, seed=seed)
    truth = oracles.brute_force_nondegenerate_exists(as_int_lists(alg.mult), [[int(x) for x in v] for v in space], 3)
    assert rep.verdict != ck.NO_PROBABILISTIC
    assert rep.yes == truth
    if rep.yes:
        assert ck.gram(alg, rep.witness).nondegenerate
        assert next(x for x in rep.witness if x != 0) == 1


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_yes_witnesses_satisfy_constraints(coeffs):
    # any nondegenerate functional in the colinear space of H4 must pass the Frobenius check
    A = regular_comodule(H4)
    lam = QQ.reduce(coeffs[0] * REMARK_LAMBDA)
    if coeffs[0] == 0:
        assert not ck.gram(A, lam).nondegenerate
    else:
        assert ck.gram(A, lam).nondegenerate
        assert ck.form_identity_failures(A, ALPHA, lam) == []


def test_form_identities_reject_wrong_functional():
    A = regular_comodule(H4)
    assert ck.form_identity_failures(A, ALPHA, QQ.array([1, 0, 0, 0]))


# -- transfers ----------------------------------------------------------------------


def test_transfer_from_ground():
    A = trivial_comodule(ground_algebra(), H4)
    tr = ck.transfer_witness_to_smash(A, [1])
    assert np.array_equal(tr.functional, integrals(H4, RIGHT).generator)
    assert tr.colinear and tr.nondegenerate and tr.symmetric
    back = ck.transfer_witness_from_smash(A, tr.functional)
    assert back.functional.shape == (1,) and back.functional[0] != 0


def test_transfer_h4_regular_to_16_dim_smash():
    A = regular_comodule(H4)
    tr = ck.transfer_witness_to_smash(A, REMARK_LAMBDA)
    assert tr.functional.shape == (16,)
    assert tr.colinear and tr.nondegenerate and tr.symmetric


def test_transfer_graded_frobenius():
    C2 = cyclic_group_hopf(2)
    A = regular_comodule(C2)
    rep = ck.check_frobenius_in_MH(A)
    tr = ck.transfer_witness_to_smash(A, rep.witness)
    assert tr.colinear and tr.nondegenerate


def test_round_trip_lands_in_symmetric_space():
    X = dual_numbers_over_h4(QQ, H4)
    # k[X]/(X^2) has no nonzero colinear functional, so both sides are no
    assert ck.colinear_space(X) == []
    assert ck.check_symmetric(smash_product(X).comodule, distinguished_pair(H4).g).verdict == ck.NO_CERTIFIED
    for A in (regular_comodule(H4), trivial_extension(X, ALPHA).comodule):
        rep = ck.check_symmetric(A, ALPHA)
        sm = smash_product(A)
        tr = ck.transfer_witness_to_smash(A, rep.witness, sm)
        assert ck.satisfies(QQ, ck.symmetric_constraints(sm.comodule, distinguished_pair(H4).g), tr.functional)
        back = ck.transfer_witness_from_smash(A, tr.functional, sm)
        assert ck.satisfies(QQ, ck.symmetric_constraints(A, ALPHA), back.functional)


def test_zero_functional_pulls_back_flagged():
    A = regular_comodule(H4)
    back = ck.transfer_witness_from_smash(A, QQ.zeros(16))
    assert not back.nondegenerate and "degenerate functional" in back.notes


def test_transfer_preconditions():
    with pytest.raises(ck.PreconditionError):
        ck.transfer_witness_to_smash(regular_comodule(H4), [1, 0, 0, 0])
    A = regular_comodule(H4)
    with pytest.raises(ck.PreconditionError):
        ck.transfer_witness_from_smash(A, QQ.basis_vector(16, 0))


# -- crosscheck and coinvariants ---------------------------------------------------


def test_hopf_symmetric_crosscheck():
    c = ck.hopf_symmetric_crosscheck(H4)
    assert not c and not c.unimodular and c.s2_inner == ck.YES
    assert c.plain.verdict == ck.NO_CERTIFIED
    for n in (2, 3):
        c = ck.hopf_symmetric_crosscheck(cyclic_group_hopf(n))
        assert c and c.plain.yes


def test_s2_inner_witness_for_h4():
    rep = ck.s2_inner_report(H4)
    assert rep.yes and list(rep.witness) == [0, 1, 0, 0]


def test_coinvariants_transfer():
    C2 = cyclic_group_hopf(2)
    R = regrade(upper_triangular(), C2, ["e", "g", "e"])
    E = trivial_extension(R, C2.counit).comodule
    rep = ck.check_coinvariants_transfer(E)
    assert rep.ok and rep.coinvariants_frobenius == ck.YES and rep.coinvariants_symmetric == ck.YES
    rep = ck.check_coinvariants_transfer(regular_comodule(C2))
    assert rep.ok and rep.coinvariant_dim == 1 and rep.coinvariants_symmetric == ck.YES
    rep = ck.check_coinvariants_transfer(super_trivext(upper_triangular(), QQ))
    assert rep.frobenius_in_MH == ck.NO_CERTIFIED and rep.coinvariants_frobenius is None
    assert rep.notes
    with pytest.raises(ck.PreconditionError):
        ck.check_coinvariants_transfer(regular_comodule(H4))
