"""Cones of rank-1 quadratic forms, their invariants, and the shipped catalog.

A cone is an ordered list of primitive integer vectors xi in Z^i, each
standing for the rank-1 symmetric form xi*xi^T.  The catalog ships one
representative per GL(i,Z)-orbit for every orbit of dimension up to 6 that
contributes to degree <= 12 of the assembled tables; the handful of
dimension-6 orbits whose generators are not pinned down anywhere are kept as
placeholder entries carrying their numerical data only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from . import polyhedral
from .matrices import (
    IntMatrix,
    IntVector,
    det,
    f2_kernel,
    hnf,
    identity,
    invert_unimodular,
    kernel_basis,
    lattice_index,
    matmul,
    rank,
    saturate,
    sign_canonical,
    solve_rational,
    transpose,
    vec_content,
)


def sym2_pairs(i: int) -> tuple[tuple[int, int], ...]:
    """Index pairs (r, s), r <= s, ordering the coordinates of Sym^2(Z^i)."""
    return tuple((r, s) for r in range(i) for s in range(r, i))


def sym2_coordinates(v: IntVector) -> IntVector:
    """Coordinates of the rank-1 form v*v^T on the symmetric-matrix basis.

    The lattice Sym^2(Z^i) of integer symmetric matrices has basis E_rr and
    E_rs + E_sr (r < s); the form v*v^T has coordinate v_r * v_s on the basis
    element indexed by (r, s).
    """
    return tuple(v[r] * v[s] for r, s in sym2_pairs(len(v)))


class Cone:
    """An ordered set of primitive rank-1 form generators in Z^ambient."""

    __slots__ = ("ambient", "generators", "name")

    def __init__(self, ambient: int, generators: Sequence[Sequence[int]], name: Optional[str] = None):
        if ambient < 1:
            raise ValueError("ambient rank must be >= 1")
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != ambient:
                raise ValueError("generator length does not match ambient rank")
            if all(x == 0 for x in g):
                raise ValueError("zero generator")
            if vec_content(g) != 1:
                raise ValueError(f"generator {g} is not primitive")
            gens.append(sign_canonical(g))
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generators")
        if not gens:
            raise ValueError("a cone needs at least one generator")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "name", name)

    def __setattr__(self, *a):
        raise AttributeError("Cone is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Cone)
            and self.ambient == other.ambient
            and frozenset(self.generators) == frozenset(other.generators)
        )

    def __hash__(self):
        return hash((self.ambient, frozenset(self.generators)))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Cone{label}(Z^{self.ambient}, {len(self.generators)} generators)"

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def sym2_matrix(self) -> IntMatrix:
        """Rows are the Sym^2 coordinates of the generators."""
        return tuple(sym2_coordinates(g) for g in self.generators)

    def with_name(self, name: str) -> "Cone":
        return Cone(self.ambient, self.generators, name)


def cone_dim(c: Cone) -> int:
    """Dimension of the span of the rank-1 forms inside Sym^2(R^i)."""
    return rank(c.sym2_matrix())


def cone_rank(c: Cone) -> int:
    """Rank of a generic element: dimension of the span of the generators."""
    return rank(c.generators)


def is_simplicial(c: Cone) -> bool:
    """Generators linearly independent as forms."""
    return cone_dim(c) == c.n_generators


def is_basic(c: Cone) -> bool:
    """Generators extendable to a Z-basis of Sym^2(Z^i).

    Interpreted for non-full-dimensional cones as: independent forms whose
    Z-span is saturated in the lattice of integer symmetric matrices.
    """
    return is_simplicial(c) and lattice_index(c.sym2_matrix()) == 1


def is_matroidal(c: Cone) -> bool:
    """Whether the generators are the rank-1 forms of a unimodular matrix.

    Test: the generators must span a saturated sublattice of Z^i; rewritten
    in a basis of that sublattice they form a full-row-rank matrix which,
    after pivoting on a determinant +-1 column subset, must be totally
    unimodular.
    """
    gens = c.generators
    if lattice_index(gens) != 1:
        return False
    basis = saturate(gens)
    r = len(basis)
    coords = []
    for g in gens:
        sol = solve_rational(transpose(basis), g)
        assert sol is not None and all(x.denominator == 1 for x in sol)
        coords.append(tuple(int(x) for x in sol))
    a = transpose(coords)  # r x n, columns are the generators
    n = len(gens)
    for sel in itertools.combinations(range(n), r):
        sub = tuple(tuple(a[i][j] for j in sel) for i in range(r))
        if det(sub) in (1, -1):
            pivot = invert_unimodular(sub)
            t = matmul(pivot, a)
            return _totally_unimodular(t)
    return False


def _totally_unimodular(a: IntMatrix) -> bool:
    rows, cols = len(a), len(a[0])
    for k in range(1, min(rows, cols) + 1):
        for rsel in itertools.combinations(range(rows), k):
            for csel in itertools.combinations(range(cols), k):
                if det(tuple(tuple(a[i][j] for j in csel) for i in rsel)) not in (-1, 0, 1):
                    return False
    return True


def orth_lattice(c: Cone) -> tuple[IntVector, ...]:
    """Basis of W: integral functionals on Sym^2(Z^i) vanishing on the cone.

    Functionals are written in the coordinates dual to the symmetric-matrix
    basis, ordered as in `sym2_pairs`.
    """
    return kernel_basis(c.sym2_matrix(), cols=len(sym2_pairs(c.ambient)))


def extremal_rays(c: Cone) -> tuple[int, ...]:
    """Indices of generators that are extremal rays of the cone."""
    coords = c.sym2_matrix()
    return polyhedral.extremal_ray_indices(coords, len(coords[0]))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if not (1 <= a <= self.vertices and 1 <= b <= self.vertices) or a == b:
                raise ValueError(f"bad edge ({a}, {b})")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"duplicate edge ({a}, {b})")
            seen.add(key)

    def is_connected(self) -> bool:
        if self.vertices == 0:
            return False
        adj = {v: set() for v in range(1, self.vertices + 1)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {1}
        stack = [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertices


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((k, k % n + 1) for k in range(1, n + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((k, k + 1) for k in range(1, n)))


def graphical_cone(g: Graph, plus_ones: int = 0, name: Optional[str] = None) -> Cone:
    """Cone with generators (x_a - x_b)^2 over the edges, last vertex set to 0.

    `plus_ones` appends that many standard generators x^2 in fresh
    coordinates; the result has rank (vertices - 1) + plus_ones.
    """
    if not g.is_connected():
        raise ValueError("graphical cones require a connected graph")
    k = g.vertices - 1
    ambient = k + plus_ones
    if ambient < 1:
        raise ValueError("empty ambient space")
    gens = []
    for a, b in g.edges:
        v = [0] * ambient
        if a <= k:
            v[a - 1] += 1
        if b <= k:
            v[b - 1] -= 1
        gens.append(tuple(v))
    for j in range(plus_ones):
        v = [0] * ambient
        v[k + j] = 1
        gens.append(tuple(v))
    return Cone(ambient, gens, name)


def reduce_to_span(c: Cone) -> Cone:
    """Rewrite the cone in a basis of the saturation of its generator span.

    The result has ambient rank equal to the cone rank and is GL-equivalent
    data: two cones in Z^g are GL(g,Z)-equivalent exactly when their
    reductions are equivalent in the smaller group.
    """
    basis = saturate(c.generators)
    if len(basis) == c.ambient:
        return c
    coords = []
    for g in c.generators:
        sol = solve_rational(transpose(basis), g)
        assert sol is not None and all(x.denominator == 1 for x in sol)
        coords.append(tuple(int(x) for x in sol))
    return Cone(len(basis), coords, c.name)


def complete_to_unimodular(rows: Sequence[IntVector]) -> IntMatrix:
    """Extend a saturated basis (as rows) to a square unimodular matrix."""
    r = len(rows)
    n = len(rows[0])
    if r == n:
        m = tuple(tuple(v) for v in rows)
        if det(m) not in (1, -1):
            raise ValueError("rows are not a saturated basis")
        return m
    h, u = hnf(transpose(rows))  # h = u * rows^T, pivots in first r rows
    top = tuple(tuple(h[i][j] for j in range(r)) for i in range(r))
    if det(top) not in (1, -1):
        raise ValueError("rows do not span a saturated lattice")
    uinv = invert_unimodular(u)
    # rows^T = uinv * h, so  rows = h^T * uinv^T; build the completion by
    # extending h^T to [h^T ; (0 | I)] and multiplying by uinv^T
    ext = [list(hrow) for hrow in transpose(h)]
    for k in range(n - r):
        ext.append([0] * r + [1 if j == k else 0 for j in range(n - r)])
    full = matmul(tuple(tuple(row) for row in ext), transpose(uinv))
    if det(full) not in (1, -1):
        raise ValueError("completion failed")
    return full


# ---------------------------------------------------------------------------
# GL(i,Z)-equivalence search
# ---------------------------------------------------------------------------


def _assignment_search(
    src: Sequence[IntVector], dst: Sequence[IntVector], ambient: int
) -> Iterator[tuple[IntMatrix, tuple[int, ...]]]:
    """Yield (R, perm) with R in GL(ambient, Z) and R*src[j] = +-dst[perm[j]].

    Both vector families must span the ambient space.  Candidates are pruned
    by forcing the images of vectors that are linearly dependent on the part
    already assigned.
    """
    n = len(src)
    if len(dst) != n:
        return
    if rank(src) != ambient or rank(dst) != ambient:
        raise ValueError("assignment search requires full-rank vector families")

    # order the source so that a maximal independent subset comes first
    order = []
    chosen: list[IntVector] = []
    for j, v in enumerate(src):
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            order.append(j)
    order += [j for j in range(n) if j not in order]
    dst_lookup = {sign_canonical(w): k for k, w in enumerate(dst)}

    perm = [-1] * n
    used = [False] * n
    indep_pairs: list[tuple[IntVector, IntVector]] = []

    def extend(pos: int) -> Iterator[tuple[IntMatrix, tuple[int, ...]]]:
        if pos == n:
            vmat = transpose([v for v, _ in indep_pairs])
            wmat = transpose([w for _, w in indep_pairs])
            r_matrix = _solve_linear_map(vmat, wmat)
            if r_matrix is None or det(r_matrix) not in (1, -1):
                return
            yield r_matrix, tuple(perm)
            return
        j = src_order[pos]
        v = src[j]
        coeffs = solve_rational(transpose([p[0] for p in indep_pairs]), v) if indep_pairs else None
        if coeffs is not None:
            forced = [Fraction(0)] * ambient
            for a, (_, w) in zip(coeffs, indep_pairs):
                for t in range(ambient):
                    forced[t] += a * w[t]
            if any(x.denominator != 1 for x in forced):
                return
            fvec = tuple(int(x) for x in forced)
            key = sign_canonical(fvec)
            k = dst_lookup.get(key)
            if k is None or used[k]:
                return
            perm[j] = k
            used[k] = True
            yield from extend(pos + 1)
            used[k] = False
            perm[j] = -1
            return
        first = not indep_pairs
        for k in range(n):
            if used[k]:
                continue
            signs = (1,) if first else (1, -1)
            for s in signs:
                w = tuple(s * x for x in dst[k])
                perm[j] = k
                used[k] = True
                indep_pairs.append((v, w))
                yield from extend(pos + 1)
                indep_pairs.pop()
                used[k] = False
                perm[j] = -1

    src_order = order
    yield from extend(0)


def _solve_linear_map(vmat, wmat) -> Optional[IntMatrix]:
    """Integer matrix R with R * vmat = wmat (columns are vectors), or None."""
    vrows = transpose(vmat)  # rows are the source vectors
    rows = []
    for t in range(len(vmat)):
        sol = solve_rational(vrows, tuple(wmat[t]))
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        rows.append(tuple(int(x) for x in sol))
    return tuple(rows)


def cone_symmetries(c: Cone) -> Iterator[tuple[IntMatrix, tuple[int, ...]]]:
    """(R, perm) pairs with R in GL(i,Z) permuting the generators up to sign."""
    yield from _assignment_search(c.generators, c.generators, c.ambient)


def _equivalence_invariants(c: Cone):
    red = reduce_to_span(c)
    minors = sorted(abs(x) for x in _max_rank_minors(red))
    residues = sorted(_f2_relation_weights(red))
    return (
        cone_rank(c),
        cone_dim(c),
        c.n_generators,
        lattice_index(c.generators),
        tuple(minors),
        tuple(residues),
    )


def _max_rank_minors(c: Cone) -> tuple[int, ...]:
    """Maximal minors of the generator-vector matrix of a reduced cone."""
    a = transpose(c.generators)
    r = cone_rank(c)
    if len(a) != r:
        raise ValueError("expects a cone reduced to its span")
    out = []
    for sel in itertools.combinations(range(c.n_generators), r):
        out.append(det(tuple(tuple(a[i][j] for j in sel) for i in range(r))))
    return tuple(out)


def _f2_relation_weights(c: Cone) -> list[int]:
    """Weights of the F2-relations among the generators (a GL invariant)."""
    masks = [vector_bitmask(g) for g in c.generators]
    return sorted(bin(v).count("1") for v in f2_kernel(masks))


def vector_bitmask(v: IntVector) -> int:
    """Mod-2 residue of an integer vector, packed as a bitmask."""
    mask = 0
    for t, x in enumerate(v):
        if x % 2:
            mask |= 1 << t
    return mask


def cones_equivalent(c1: Cone, c2: Cone) -> Optional[IntMatrix]:
    """A matrix Q in GL(i,Z) whose action maps c1 onto c2, or None.

    The action on forms is M -> Q^-T M Q^-1; Q exists exactly when some
    R in GL(i,Z) maps the generator vectors of c1 onto those of c2 up to
    sign, and then Q = (R^T)^-1.
    """
    if c1.ambient != c2.ambient:
        return None
    if _equivalence_invariants(c1) != _equivalence_invariants(c2):
        return None
    r1, r2 = reduce_to_span(c1), reduce_to_span(c2)
    for r_matrix, _perm in _assignment_search(r1.generators, r2.generators, r1.ambient):
        if r1.ambient == c1.ambient:
            full = r_matrix
        else:
            m1 = complete_to_unimodular(saturate(c1.generators))
            m2 = complete_to_unimodular(saturate(c2.generators))
            k = c1.ambient - r1.ambient
            block = [list(row) + [0] * k for row in r_matrix]
            for t in range(k):
                block.append([0] * r1.ambient + [1 if j == t else 0 for j in range(k)])
            full = matmul(
                matmul(transpose(m2), tuple(tuple(row) for row in block)),
                invert_unimodular(transpose(m1)),
            )
        return transpose(invert_unimodular(full))
    return None


# ---------------------------------------------------------------------------
# The shipped catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """One GL-orbit of cones, with generators when known.

    Placeholder entries (no generators) carry the numerical data needed by
    the assemblers: dimension, rank, flags and a prefix of the invariant
    series of the stabilizer action (degree 0 is always 1 for a connected
    stratum).
    """

    name: str
    dim: int
    rank: int
    cone: Optional[Cone] = None
    matroidal: Optional[bool] = None
    simplicial: Optional[bool] = None
    basic: Optional[bool] = None
    multiplicity: int = 1
    invariant_series_prefix: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.dim < self.rank:
            raise ValueError("cone dimension is at least its rank")
        if self.cone is None and self.invariant_series_prefix is None:
            raise ValueError("placeholder entries need an invariant series prefix")


def _standard(i: int, name: str) -> Cone:
    return Cone(i, identity(i), name)


def _named_cones() -> dict[str, Cone]:
    cones = {
        "1": _standard(1, "1"),
        "1+1": _standard(2, "1+1"),
        "K3": Cone(2, [(1, 0), (0, 1), (1, -1)], "K3"),
        "1+1+1": _standard(3, "1+1+1"),
        "1+1+1+1": _standard(4, "1+1+1+1"),
        "K3+1": Cone(3, [(1, 0, 0), (0, 1, 0), (1, -1, 0), (0, 0, 1)], "K3+1"),
        "C4": Cone(3, [(1, 0, 0), (0, 1, 0), (1, 0, -1), (0, 1, -1)], "C4"),
        "K4-1": Cone(
            3,
            [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, -1), (0, 1, -1)],
            "K4-1",
        ),
        "K3+1+1": Cone(
            4,
            [(1, 0, 0, 0), (0, 1, 0, 0), (1, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
            "K3+1+1",
        ),
        "C4+1": Cone(
            4,
            [(1, 0, 0, 0), (0, 1, 0, 0), (1, 0, -1, 0), (0, 1, -1, 0), (0, 0, 0, 1)],
            "C4+1",
        ),
        "C5": Cone(
            4,
            [(1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 0, 1, -1)],
            "C5",
        ),
        "1+1+1+1+1": _standard(5, "1+1+1+1+1"),
        "NS": Cone(
            5,
            [
                (1, 0, 0, 0, 0),
                (0, 1, 0, 0, 0),
                (0, 0, 1, 0, 0),
                (0, 0, 0, 1, 0),
                (1, 1, 1, 1, -2),
            ],
            "NS",
        ),
        "K4": graphical_cone(complete_graph(4), 0, "K4"),
        "C6": graphical_cone(cycle_graph(6), 0, "C6"),
        "C5+1": graphical_cone(cycle_graph(5), 1, "C5+1"),
        "C4+1+1": graphical_cone(cycle_graph(4), 2, "C4+1+1"),
        "C3+1+1+1": graphical_cone(cycle_graph(3), 3, "C3+1+1+1"),
        "1+1+1+1+1+1": _standard(6, "1+1+1+1+1+1"),
    }
    return cones


def _entry(cone: Cone, matroidal: bool) -> CatalogEntry:
    return CatalogEntry(
        name=cone.name,
        dim=cone_dim(cone),
        rank=cone_rank(cone),
        cone=cone,
        matroidal=matroidal,
        simplicial=is_simplicial(cone),
        basic=is_basic(cone),
    )


def _placeholder(name: str, rank_: int, matroidal: bool) -> CatalogEntry:
    # every cone of dimension < 10 is simplicial and basic: the singular and
    # non-simplicial loci both start in codimension 10
    return CatalogEntry(
        name=name,
        dim=6,
        rank=rank_,
        cone=None,
        matroidal=matroidal,
        simplicial=True,
        basic=True,
        invariant_series_prefix=(1,),
    )


@lru_cache(maxsize=None)
def catalog(max_dim: int = 6) -> tuple[CatalogEntry, ...]:
    """Orbit representatives of all cones of dimension <= max_dim."""
    if max_dim > 6:
        raise ValueError("catalog incomplete beyond dimension 6")
    named = _named_cones()
    entries = [
        _entry(named["1"], True),
        _entry(named["1+1"], True),
        _entry(named["K3"], True),
        _entry(named["1+1+1"], True),
        _entry(named["1+1+1+1"], True),
        _entry(named["K3+1"], True),
        _entry(named["C4"], True),
        _entry(named["K4-1"], True),
        _entry(named["K3+1+1"], True),
        _entry(named["C4+1"], True),
        _entry(named["C5"], True),
        _entry(named["1+1+1+1+1"], True),
        _entry(named["NS"], False),
        _entry(named["K4"], True),
        _placeholder("6d-g4-a", 4, True),
        _placeholder("6d-g4-b", 4, True),
        _placeholder("6d-g4-c", 4, True),
        _placeholder("6d-g4-d", 4, True),
        _entry(named["C6"], True),
        _entry(named["C5+1"], True),
        _entry(named["C4+1+1"], True),
        _entry(named["C3+1+1+1"], True),
        _placeholder("6d-g5-x", 5, False),
        _entry(named["1+1+1+1+1+1"], True),
        _placeholder("6d-g6-x", 6, False),
        _placeholder("6d-g6-y", 6, False),
    ]
    return tuple(e for e in entries if e.dim <= max_dim)


def catalog_entry(name: str) -> CatalogEntry:
    for e in catalog(6):
        if e.name == name:
            return e
    raise KeyError(f"unknown catalog cone {name!r}")


def catalog_cone(name: str) -> Cone:
    e = catalog_entry(name)
    if e.cone is None:
        raise KeyError(f"catalog entry {name!r} is a placeholder without generators")
    return e.cone


# ---------------------------------------------------------------------------
# Serialization: human-readable catalog text format
# ---------------------------------------------------------------------------


def _flag_str(v: Optional[bool]) -> str:
    return {True: "yes", False: "no", None: "unknown"}[v]


def _flag_parse(s: str) -> Optional[bool]:
    return {"yes": True, "no": False, "unknown": None}[s]


def render_catalog(entries: Sequence[CatalogEntry]) -> str:
    blocks = []
    for e in entries:
        lines = [f"[{'cone' if e.cone is not None else 'placeholder'}]"]
        lines.append(f"name = {e.name}")
        if e.cone is not None:
            lines.append(f"ambient = {e.cone.ambient}")
        lines.append(f"dim = {e.dim}")
        lines.append(f"rank = {e.rank}")
        lines.append(f"multiplicity = {e.multiplicity}")
        lines.append(f"matroidal = {_flag_str(e.matroidal)}")
        lines.append(f"simplicial = {_flag_str(e.simplicial)}")
        lines.append(f"basic = {_flag_str(e.basic)}")
        if e.invariant_series_prefix is not None:
            lines.append(
                "invariant-series = " + ", ".join(str(x) for x in e.invariant_series_prefix)
            )
        if e.cone is not None:
            lines.append("generators:")
            for g in e.cone.generators:
                lines.append("  (" + ", ".join(str(x) for x in g) + ")")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_catalog(text: str) -> tuple[CatalogEntry, ...]:
    entries = []
    block: dict = {}
    gens: list[tuple[int, ...]] = []
    kind = None
    in_gens = False

    def flush():
        nonlocal block, gens, kind, in_gens
        if kind is None:
            return
        cone = None
        if kind == "cone":
            cone = Cone(int(block["ambient"]), gens, block["name"])
        prefix = None
        if "invariant-series" in block:
            prefix = tuple(int(x) for x in block["invariant-series"].split(","))
        entries.append(
            CatalogEntry(
                name=block["name"],
                dim=int(block["dim"]),
                rank=int(block["rank"]),
                cone=cone,
                matroidal=_flag_parse(block["matroidal"]),
                simplicial=_flag_parse(block["simplicial"]),
                basic=_flag_parse(block["basic"]),
                multiplicity=int(block.get("multiplicity", "1")),
                invariant_series_prefix=prefix,
            )
        )
        block, gens, kind, in_gens = {}, [], None, False

    for raw in text.splitlines():
        line = raw.rstrip()
        if not line.strip():
            continue
        if line.startswith("["):
            flush()
            kind = line.strip("[]")
            if kind not in ("cone", "placeholder"):
                raise ValueError(f"unknown block type {kind!r}")
            continue
        if line.strip() == "generators:":
            in_gens = True
            continue
        if in_gens and line.startswith("  ("):
            gens.append(tuple(int(x) for x in line.strip().strip("()").split(",")))
            continue
        in_gens = False
        key, _, value = line.partition("=")
        block[key.strip()] = value.strip()
    flush()
    return tuple(entries)
