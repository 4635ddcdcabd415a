"""Desk-scale Voronoi reduction: shortest vectors, perfect domains, the
neighbor walk, arithmetic equivalence and face classification for g <= 4.

Everything is exact: shortest vectors come from a rational Cholesky recursion
with no floating-point pruning, neighbors from an exact line search on the
pencil Q + rho*R, and equivalence from backtracking over minimal vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Sequence

from . import polyhedral
from .cones import Cone, cone_dim, cones_equivalent, reduce_to_span, sym2_coordinates, sym2_pairs
from .matrices import IntVector, det, rank, sign_canonical, vec_dot


@dataclass(frozen=True)
class QuadraticForm:
    """Positive-definite integral quadratic form, as a symmetric matrix."""

    g: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != self.g or any(len(r) != self.g for r in self.matrix):
            raise ValueError("matrix size does not match rank")
        for i in range(self.g):
            for j in range(self.g):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError("matrix is not symmetric")
        if not _is_positive_definite(self.matrix):
            raise ValueError("form is not positive definite")

    def value(self, x: Sequence[int]):
        return sum(self.matrix[i][j] * x[i] * x[j] for i in range(self.g) for j in range(self.g))

    def pairing(self, x: Sequence[int], y: Sequence[int]):
        return sum(self.matrix[i][j] * x[i] * y[j] for i in range(self.g) for j in range(self.g))


@dataclass(frozen=True)
class PerfectForm:
    """A perfect form with its cached minimum and minimal vectors (up to sign)."""

    form: QuadraticForm
    minimum: int
    min_vectors: tuple[IntVector, ...]

    def domain_rays(self) -> tuple[IntVector, ...]:
        return self.min_vectors


def _is_positive_definite(matrix) -> bool:
    n = len(matrix)
    scale = 1
    for row in matrix:
        for x in row:
            f = Fraction(x)
            scale = scale * f.denominator // gcd(scale, f.denominator)
    m = [[int(Fraction(x) * scale) for x in row] for row in matrix]
    for k in range(1, n + 1):
        if det(tuple(tuple(m[i][j] for j in range(k)) for i in range(k))) <= 0:
            return False
    return True


def _cholesky(matrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Q(x) = sum_i d_i (x_i + sum_{j>i} l_ij x_j)^2, exact."""
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    l = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            l[i][j] = a[i][j] / d[i]
        for r in range(i + 1, n):
            for s in range(r, n):
                a[r][s] -= a[i][r] * a[i][s] / d[i]
                a[s][r] = a[r][s]
    return d, l


def _short_vectors(matrix, bound: Fraction) -> list[tuple[Fraction, IntVector]]:
    """All x != 0 (up to sign) with Q(x) <= bound, with exact values."""
    n = len(matrix)
    d, l = _cholesky(matrix)
    results: list[tuple[Fraction, IntVector]] = []
    x = [0] * n

    def rec(i: int, remaining: Fraction):
        if i < 0:
            if any(x):
                v = tuple(x)
                if sign_canonical(v) == v:
                    results.append((bound - remaining, v))
            return
        center = sum(l[i][j] * x[j] for j in range(i + 1, n))

        def contribution(xi: int) -> Fraction:
            return d[i] * (xi + center) ** 2

        # the admissible x_i form a contiguous interval around -center, so
        # scan outward from the two integers bracketing it
        base = floor(-center)
        xi = base
        while contribution(xi) <= remaining:
            x[i] = xi
            rec(i - 1, remaining - contribution(xi))
            xi -= 1
        xi = base + 1
        while contribution(xi) <= remaining:
            x[i] = xi
            rec(i - 1, remaining - contribution(xi))
            xi += 1
        x[i] = 0

    rec(n - 1, bound)
    return results


def _rational_min(matrix) -> tuple[Fraction, tuple[IntVector, ...]]:
    """Exact minimum and all minimal vectors up to sign of a posdef form."""
    n = len(matrix)
    bound = min(Fraction(matrix[i][i]) for i in range(n))
    shorts = _short_vectors(matrix, bound)
    best = min(v for v, _ in shorts)
    vectors = tuple(sorted(vec for val, vec in shorts if val == best))
    return best, vectors


def min_vectors(q: QuadraticForm) -> tuple[int, tuple[IntVector, ...]]:
    """Minimum of the form over nonzero lattice vectors, with all minimizers
    up to sign."""
    mu, vecs = _rational_min(q.matrix)
    assert mu.denominator == 1
    return int(mu), vecs


def perfect_form(matrix) -> PerfectForm:
    """Normalize to a primitive integral matrix and cache the minimum data."""
    scale = 1
    for row in matrix:
        for x in row:
            f = Fraction(x)
            scale = scale * f.denominator // gcd(scale, f.denominator)
    m = [[int(Fraction(x) * scale) for x in row] for row in matrix]
    content = 0
    for row in m:
        for x in row:
            content = gcd(content, abs(x))
    m = tuple(tuple(x // content for x in row) for row in m)
    q = QuadraticForm(len(m), m)
    mu, vecs = min_vectors(q)
    return PerfectForm(form=q, minimum=mu, min_vectors=vecs)


def domain(p: PerfectForm) -> Cone:
    """The cone spanned by the rank-1 forms of the minimal vectors.

    Full-dimensional exactly when the form is perfect; non-perfect input is
    rejected.
    """
    c = Cone(p.form.g, p.min_vectors)
    g = p.form.g
    if cone_dim(c) != g * (g + 1) // 2:
        raise ValueError("form is not perfect: its domain is not full-dimensional")
    return c


@dataclass(frozen=True)
class Facet:
    """A facet of a perfect domain: inward normal (in the dual coordinates of
    `sym2_pairs`) and the indices of the rays lying on it."""

    normal: IntVector
    rays: frozenset[int]


def facets(c: Cone) -> tuple[Facet, ...]:
    coords = c.sym2_matrix()
    return tuple(
        Facet(normal=n, rays=s) for n, s in polyhedral.facets(coords, len(coords[0]))
    )


def _normal_form_matrix(normal: IntVector, g: int):
    """Symmetric matrix R with sign(R(xi)) = sign(normal . sym2(xi))."""
    pairs = sym2_pairs(g)
    r = [[0] * g for _ in range(g)]
    for c, (i, j) in zip(normal, pairs):
        if i == j:
            r[i][i] = 2 * c
        else:
            r[i][j] = c
            r[j][i] = c
    return tuple(tuple(row) for row in r)


def _form_value(matrix, x) -> Fraction:
    n = len(matrix)
    return sum(matrix[i][j] * x[i] * x[j] for i in range(n) for j in range(n))


def neighbor(p: PerfectForm, facet: Facet) -> PerfectForm:
    """The contiguous perfect form across the facet.

    Exact line search on the pencil Q + rho*R for the inward normal R: rho is
    tightened until a vector outside the facet reaches the minimum exactly.
    A bisection bracket handles losses of positive definiteness; whenever a
    vector drops strictly below the minimum, the exact crossing value
    (mu - Q(v)) / R(v) replaces rho.  Failure to validate the facet data
    signals a non-facet input.
    """
    g = p.form.g
    facet_rays = [p.min_vectors[i] for i in sorted(facet.rays)]
    others = [v for i, v in enumerate(p.min_vectors) if i not in facet.rays]
    if rank(facet_rays) != g:
        raise ValueError("facet lies on the boundary of the rational closure")
    r = _normal_form_matrix(facet.normal, g)
    if any(_form_value(r, v) != 0 for v in facet_rays) or any(
        _form_value(r, v) <= 0 for v in others
    ):
        raise ValueError("normal does not cut out a facet of the domain")

    mu = p.minimum
    facet_set = set(facet_rays)
    rho = Fraction(1)
    good = Fraction(0)  # largest rho known to keep exactly the facet vectors
    bad = None  # smallest rho known to lie beyond the neighbor
    for _ in range(100000):
        q_rho = [
            [Fraction(p.form.matrix[i][j]) + rho * r[i][j] for j in range(g)]
            for i in range(g)
        ]
        if _is_positive_definite(q_rho):
            mur, vecs = _rational_min(q_rho)
            if mur == mu:
                if any(v not in facet_set for v in vecs):
                    return perfect_form(q_rho)
                good = rho
                rho = (good + bad) / 2 if bad is not None else 2 * rho
                continue
            assert mur < mu
            candidates = [
                Fraction(mu - p.form.value(v), _form_value(r, v))
                for v in vecs
                if _form_value(r, v) < 0
            ]
            assert candidates
            bad = rho
            rho = min(candidates)
            assert good < rho <= bad
        else:
            bad = rho
            rho = (good + bad) / 2
    raise AssertionError("neighbor line search did not terminate")


def equivalent_forms(p1: PerfectForm, p2: PerfectForm) -> bool:
    """Arithmetic equivalence: some U in GL(g,Z) with U^T Q2 U = Q1.

    Searched by assigning an independent subset of minimal vectors of Q1 to
    signed minimal vectors of Q2 with matching pairings.
    """
    # rescale both to primitive integral matrices before comparing
    p1 = perfect_form(p1.form.matrix)
    p2 = perfect_form(p2.form.matrix)
    q1, q2 = p1.form, p2.form
    if q1.g != q2.g or p1.minimum != p2.minimum:
        return False
    if len(p1.min_vectors) != len(p2.min_vectors):
        return False
    g = q1.g
    basis: list[IntVector] = []
    for v in p1.min_vectors:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
        if len(basis) == g:
            break
    targets = [v for v in p2.min_vectors] + [tuple(-x for x in v) for v in p2.min_vectors]

    basis_gram = [[q1.pairing(a, b) for b in basis] for a in basis]

    def extend(assigned: list[IntVector]) -> bool:
        k = len(assigned)
        if k == g:
            u = _transition(basis, assigned)
            if u is None:
                return False
            # U maps basis -> assigned; the gram match on a basis makes the
            # forms equal, so only integrality and unimodularity remain
            return det(u) in (1, -1)
        for w in targets:
            if q2.value(w) != p1.minimum:
                continue
            if any(q2.pairing(w, assigned[t]) != basis_gram[k][t] for t in range(k)):
                continue
            if q2.pairing(w, w) != basis_gram[k][k]:
                continue
            if extend(assigned + [w]):
                return True
        return False

    return extend([])


def _transition(basis: Sequence[IntVector], images: Sequence[IntVector]):
    """Integer matrix U with U*basis_j = images_j, or None."""
    from .matrices import solve_rational, transpose

    g = len(basis[0])
    rows = []
    for t in range(g):
        sol = solve_rational(tuple(basis), tuple(im[t] for im in images))
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        rows.append(tuple(int(x) for x in sol))
    return tuple(rows)


def first_perfect_form(g: int) -> PerfectForm:
    """The classical starting point of the walk: x_i^2 terms plus all cross
    terms (the root lattice A_g)."""
    if g == 1:
        return perfect_form(((1,),))
    m = tuple(tuple(2 if i == j else 1 for j in range(g)) for i in range(g))
    return perfect_form(m)


def enumerate_perfect(g: int) -> tuple[PerfectForm, ...]:
    """Complete neighbor walk up to arithmetic equivalence."""
    if g > 4:
        raise ValueError("perfect-form enumeration is out of desk-scale scope for g > 4")
    start = first_perfect_form(g)
    classes = [start]
    queue = [start]
    while queue:
        p = queue.pop(0)
        c = domain(p)
        for facet in facets(c):
            rays = [p.min_vectors[i] for i in sorted(facet.rays)]
            if rank(rays) != g:
                continue  # boundary facet: no contiguous domain
            q = neighbor(p, facet)
            if not any(equivalent_forms(q, known) for known in classes):
                classes.append(q)
                queue.append(q)
    return tuple(classes)


def domain_automorphism_perms(p: PerfectForm) -> tuple[tuple[int, ...], ...]:
    """Permutations of the minimal-vector rays induced by Aut(Q) in GL(g,Z).

    Found by assigning an independent subset of minimal vectors to signed
    minimal vectors with matching Gram pairings; each resulting U preserves
    the form, hence permutes the rays.
    """
    q = p.form
    g = q.g
    vectors = p.min_vectors
    basis: list[IntVector] = []
    for v in vectors:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
        if len(basis) == g:
            break
    gram = [[q.pairing(a, b) for b in basis] for a in basis]
    targets = list(vectors) + [tuple(-x for x in v) for v in vectors]
    index = {v: i for i, v in enumerate(vectors)}
    perms = set()

    def extend(assigned: list[IntVector]):
        k = len(assigned)
        if k == g:
            u = _transition(basis, assigned)
            if u is None:
                return
            images = [sign_canonical(tuple(sum(u[t][s] * v[s] for s in range(g)) for t in range(g))) for v in vectors]
            if any(w not in index for w in images):
                return
            perms.add(tuple(index[w] for w in images))
            return
        for w in targets:
            if any(q.pairing(w, assigned[t]) != gram[k][t] for t in range(k)):
                continue
            if q.value(w) != gram[k][k]:
                continue
            extend(assigned + [w])

    extend([])
    return tuple(sorted(perms))


def classify_faces(g: int, max_dim: int = 6) -> tuple[Cone, ...]:
    """GL(g,Z)-inequivalent faces of the perfect domains, up to max_dim.

    Face subsets are first collapsed to orbit representatives under the
    domain's own automorphism group, then fused across domains by invariants
    plus an explicit equivalence search.  Results are reduced to their spans
    (ambient rank equals cone rank), so catalog representatives can be
    matched directly with `cones_equivalent`.
    """
    if g > 4:
        raise ValueError("face classification is out of desk-scale scope for g > 4")
    if max_dim > 6:
        raise ValueError("face classification is validated only to dimension 6")
    found: list[Cone] = []
    buckets: dict = {}
    for p in enumerate_perfect(g):
        c = domain(p)
        coords = c.sym2_matrix()
        ray_sets = list(polyhedral.face_ray_sets(coords, len(coords[0])))
        ray_sets.append(frozenset(range(len(coords))))  # the domain itself
        perms = domain_automorphism_perms(p)
        seen: set[frozenset] = set()
        reps = []
        for rays in ray_sets:
            if rays in seen:
                continue
            orbit = {frozenset(perm[i] for i in rays) for perm in perms}
            seen |= orbit
            reps.append(rays)
        for rays in reps:
            sub = Cone(g, [c.generators[i] for i in sorted(rays)])
            if cone_dim(sub) > max_dim:
                continue
            red = reduce_to_span(sub)
            key = _face_key(red)
            group = buckets.setdefault(key, [])
            if not any(cones_equivalent(red, other) is not None for other in group):
                group.append(red)
                found.append(red)
    found.sort(key=lambda c: (cone_dim(c), c.ambient, c.n_generators, c.generators))
    return tuple(found)


def _face_key(red: Cone):
    from .cones import _equivalence_invariants

    return _equivalence_invariants(red)


def render_forms(forms: Sequence[PerfectForm]) -> str:
    """Discovered forms in the cone-catalog text format, for diffing."""
    from .cones import CatalogEntry, cone_rank, is_basic, is_matroidal, is_simplicial, render_catalog

    entries = []
    for k, p in enumerate(forms):
        c = domain(p).with_name(f"perfect-{p.form.g}-{k + 1}")
        entries.append(
            CatalogEntry(
                name=c.name,
                dim=cone_dim(c),
                rank=cone_rank(c),
                cone=c,
                matroidal=is_matroidal(c),
                simplicial=is_simplicial(c),
                basic=is_basic(c),
            )
        )
    return render_catalog(entries)
