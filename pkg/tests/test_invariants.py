import random
from fractions import Fraction

import pytest

from perfcone import cones as cn
from perfcone import matrices as mx
from perfcone.invariants import (
    dense_strand_cohomology,
    hilbert_free,
    koszul_check,
    molien,
    sp_invariant_dim,
)
from perfcone.stabilizers import GroupAction, invariant_dim_degree1, stabilizer_action


def brute_molien_permutations(perms, max_deg):
    """Oracle: count monomials fixed on average, via explicit orbit counting.

    For a permutation action the Molien coefficient in degree d is the number
    of orbits of monomials of degree d, counted by Burnside's lemma with
    exact cycle-index arithmetic done the slow way: average the number of
    monomials fixed by each permutation.
    """
    import itertools

    n = len(perms[0])
    out = []
    for d in range(max_deg + 1):
        total = Fraction(0)
        monos = list(itertools.combinations_with_replacement(range(n), d))
        for p in perms:
            fixed = 0
            for mono in monos:
                image = tuple(sorted(p[i] for i in mono))
                if image == mono:
                    fixed += 1
            total += fixed
        val = total / len(perms)
        assert val.denominator == 1
        out.append(int(val))
    return tuple(out)


def test_molien_trivial_group():
    action = stabilizer_action(cn.catalog_cone("1"))
    assert action.order == 1
    assert molien(action, 6).coeffs == (1, 1, 1, 1, 1, 1, 1)


def test_molien_trivial_group_higher_dim_is_free_on_degree_ones():
    from fractions import Fraction

    ident = tuple(tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3))
    action = GroupAction(dim=3, elements=(ident,), order=1, perms=((0, 1, 2),), orbits=((0,), (1,), (2,)))
    assert molien(action, 6).coeffs == hilbert_free([1, 1, 1], 6).coeffs


def test_molien_s3_brute_force_oracle():
    action = stabilizer_action(cn.catalog_cone("K3"))
    s = molien(action, 6)
    assert s.coeffs == (1, 1, 2, 3, 4, 5, 7)
    assert s.coeffs == brute_molien_permutations(action.perms, 6)
    assert s.coeffs == hilbert_free([1, 2, 3], 6).coeffs


def test_molien_s4_low_degrees():
    action = stabilizer_action(cn.catalog_cone("C4"))
    assert molien(action, 3).coeffs == (1, 1, 2, 3)


def test_molien_full_symmetric_catalog_cones_match_hilbert_free():
    for name, k in (("1+1", 2), ("K3", 3), ("C4", 4), ("NS", 5), ("1+1+1+1+1", 5)):
        action = stabilizer_action(cn.catalog_cone(name))
        if action.order != [1, 1, 2, 6, 24, 120][k]:
            continue
        assert molien(action, 6).coeffs == hilbert_free(list(range(1, k + 1)), 6).coeffs


def test_molien_coefficient_one_equals_invariant_dim():
    for e in cn.catalog(5):
        if e.cone is None:
            continue
        action = stabilizer_action(e.cone)
        assert molien(action, 1)[1] == invariant_dim_degree1(e.cone), e.name


def test_molien_conjugation_invariance():
    rng = random.Random(23)
    c = cn.catalog_cone("K3+1")
    base = molien(stabilizer_action(c), 6)
    u = mx.identity(3)
    for _ in range(5):
        a, b = rng.sample(range(3), 2)
        shear = [list(row) for row in mx.identity(3)]
        shear[a][b] = rng.randint(-2, 2)
        u = mx.matmul(u, tuple(map(tuple, shear)))
    r = mx.transpose(mx.invert_unimodular(u))
    moved = cn.Cone(3, [mx.mat_vec(r, g) for g in c.generators])
    assert molien(stabilizer_action(moved), 6).coeffs == base.coeffs


def test_hilbert_free_examples():
    assert hilbert_free([1, 2, 3], 6).coeffs == (1, 1, 2, 3, 4, 5, 7)
    assert hilbert_free([], 4).coeffs == (1, 0, 0, 0, 0)
    lam = hilbert_free([2, 6, 10], 12)
    assert tuple(lam[k] for k in range(0, 13, 2)) == (1, 1, 1, 2, 2, 3, 4)


def test_sp_invariant_dim():
    assert sp_invariant_dim(1, 1) == 1
    assert sp_invariant_dim(2, 1) == 3
    assert sp_invariant_dim(7, 0) == 1
    assert sp_invariant_dim(2, 3) == 10  # Sym^3 of a 3-dim space


def test_koszul_sigma1_trivial():
    rep = koszul_check(cn.catalog_cone("1"), 6)
    assert rep.w_rank == 0
    assert rep.passed
    assert rep.bottom_row == (1, 1, 1, 1, 1, 1, 1)


def test_koszul_sigma_1_plus_1_bottom_row():
    rep = koszul_check(cn.catalog_cone("1+1"), 6)
    assert rep.passed
    assert rep.bottom_row == (1, 2, 3, 4, 5, 6, 7)


def test_koszul_k3_full_dimensional():
    rep = koszul_check(cn.catalog_cone("K3"), 6)
    assert rep.w_rank == 0
    assert rep.passed
    assert rep.bottom_row == tuple(sp_invariant_dim(2, k) for k in range(7))


def test_koszul_standard_rank3():
    rep = koszul_check(cn.catalog_cone("1+1+1"), 8)
    assert rep.passed
    # bottom row : dim Sym^k(Q^3)
    assert rep.bottom_row == tuple((k + 1) * (k + 2) // 2 for k in range(9))


def test_koszul_matches_dense_oracle_small_cones():
    for name in ("1+1", "1+1+1", "K3+1"):
        c = cn.catalog_cone(name)
        rep = koszul_check(c, 4)
        for n in range(5):
            dense = dense_strand_cohomology(c, n)
            assert rep.strand_cohomology[n] == dense, (name, n)


def test_koszul_depth_capped():
    with pytest.raises(ValueError):
        koszul_check(cn.catalog_cone("1+1"), 9)
