import math
import random

import pytest

from perfcone import cones as cn
from perfcone import matrices as mx
from perfcone.stabilizers import invariant_dim_degree1, stabilizer_action, sym2_action


def test_k3_stabilizer_is_s3_on_generators():
    action = stabilizer_action(cn.catalog_cone("K3"))
    assert action.order == 6
    assert sorted(action.perms) == sorted(
        [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    )
    assert action.orbits == ((0, 1, 2),)


def test_c4_stabilizer_order_24():
    action = stabilizer_action(cn.catalog_cone("C4"))
    assert action.order == 24
    assert action.orbits == ((0, 1, 2, 3),)


def test_ns_stabilizer_order_120():
    action = stabilizer_action(cn.catalog_cone("NS"))
    assert action.order == 120
    assert action.orbits == ((0, 1, 2, 3, 4),)


@pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
def test_standard_cone_stabilizer_full_symmetric(i):
    action = stabilizer_action(cn.Cone(i, mx.identity(i)))
    assert action.order == math.factorial(i)


def test_codim5_invariant_dims_in_catalog_order():
    names = [e.name for e in cn.catalog(6) if e.dim == 5]
    assert names == ["K4-1", "K3+1+1", "C4+1", "C5", "1+1+1+1+1", "NS"]
    dims = [invariant_dim_degree1(cn.catalog_cone(n)) for n in names]
    assert dims == [2, 2, 2, 1, 1, 1]


def test_stabilizer_requires_full_rank():
    c = cn.Cone(3, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(ValueError):
        stabilizer_action(c)


def test_group_order_divides_permutation_bound():
    for name in ("K3", "C4", "K4-1"):
        c = cn.catalog_cone(name)
        action = stabilizer_action(c)
        assert math.factorial(c.n_generators) % action.order == 0


def test_conjugated_cone_has_same_group_order():
    rng = random.Random(11)
    c = cn.catalog_cone("C4")
    base = stabilizer_action(c)
    for _ in range(3):
        # random unimodular conjugation
        u = mx.identity(3)
        for _ in range(4):
            a, b = rng.sample(range(3), 2)
            shear = [list(row) for row in mx.identity(3)]
            shear[a][b] = rng.randint(-2, 2)
            u = mx.matmul(u, tuple(map(tuple, shear)))
        r = mx.transpose(mx.invert_unimodular(u))
        moved = cn.Cone(3, [mx.mat_vec(r, g) for g in c.generators])
        action = stabilizer_action(moved)
        assert action.order == base.order
        assert sorted(len(o) for o in action.orbits) == sorted(len(o) for o in base.orbits)


def test_sym2_action_identity():
    assert sym2_action(mx.identity(3), 3) == mx.identity(6)


def test_sym2_action_swap():
    # x1 <-> x2 swaps T1, T2 and fixes P12
    m = sym2_action(((0, 1), (1, 0)), 2)
    # basis order: T1, T2, P12
    assert m == ((0, 1, 0), (1, 0, 0), (0, 0, 1))


def test_sym2_action_shear_matches_symbolic_expansion():
    # point map (x1, x2) -> (x1, x1 - x2): M(P_ij) = sum M_ia M_jb P_ab
    m = ((1, 0), (1, -1))
    got = sym2_action(m, 2)
    # symbolic oracle: treat P_ij ~ y_i y_j, expand images of y_j y_k
    # T1 = y1^2-ish: image (y1)^2 -> T1
    # T2: image (y1 - y2)^2 = y1^2 - 2 y1 y2 + y2^2 -> T1 + T2 - P12
    # P12: image 2*y1(y1 - y2) -> 2T1 - P12
    assert mx.transpose(got) == (
        (1, 0, 0),  # image of T1 in (T1, T2, P12) coordinates
        (1, 1, -1),  # image of T2
        (2, 0, -1),  # image of P12
    )


def test_sym2_action_contravariant():
    # classes transform by pullback, so composition reverses
    rng = random.Random(5)
    for _ in range(5):
        a = tuple(tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3))
        b = tuple(tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3))
        left = sym2_action(mx.matmul(a, b), 3)
        right = mx.matmul(sym2_action(b, 3), sym2_action(a, 3))
        assert left == right
