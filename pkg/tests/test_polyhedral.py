from perfcone import polyhedral as ph
from perfcone import cones as cn


def test_simplicial_facet_count_equals_ray_count():
    for name in ("K3", "C4", "NS"):
        c = cn.catalog_cone(name)
        coords = c.sym2_matrix()
        fs = ph.facets(coords, len(coords[0]))
        assert len(fs) == len(coords)


def test_single_ray_has_one_facet():
    fs = ph.facets([(2, 3)], 2)
    assert len(fs) == 1
    assert fs[0][1] == frozenset()


def test_in_cone_2d():
    rays = [(1, 0), (1, 2)]
    assert ph.in_cone(rays, (2, 2), 2)
    assert ph.in_cone(rays, (0, 0), 2)
    assert not ph.in_cone(rays, (0, 1), 2)
    assert not ph.in_cone(rays, (-1, 0), 2)


def test_in_cone_lower_dimensional():
    rays = [(1, 0, 0), (0, 1, 0)]
    assert ph.in_cone(rays, (2, 3, 0), 3)
    assert not ph.in_cone(rays, (2, 3, 1), 3)
    assert not ph.in_cone(rays, (-1, 0, 0), 3)


def test_extremal_ray_indices():
    rays = [(1, 0), (1, 1), (0, 1)]
    assert ph.extremal_ray_indices(rays, 2) == (0, 2)


def test_face_ray_sets_of_simplex():
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    faces = ph.face_ray_sets(rays, 3)
    assert sorted(len(f) for f in faces) == [1, 1, 1, 2, 2, 2]
