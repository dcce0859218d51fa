"""Brute-force ground truth over small finite fields.

Enumerates the Grassmannian of r-planes in F^n for a small odd prime field,
classifies points into Borel orbits by their rank profiles (dimensions of
intersections with the standard flags), and evaluates the Hecke convolution
action by direct counting.  This certifies the symbolic three-case action
numerically: the counted coefficients must equal q, q-1 or 1 as predicted.

The double coset B s_i B factors as X_i+ s_i B with the root subgroup
X_i+ = {I + c E_{i,i+1}}, so for a B-invariant characteristic function xi:

    (T_i * xi)(x) = sum over c in F of xi(s_i u(c)^{-1} x),

a sum of #F membership tests.  Membership in a Borel orbit is decided by
rank-profile equality, never by enumerating the Borel group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import Graph, Shape, enumerate_graphs, rank_matrix
from .hecke import Basis, ModuleVector, apply_generator, classify, generators

ENUMERATION_BUDGET = 10**5


def _check_field(size: int):
    if size == 2:
        raise ValueError("field size 2 is excluded (characteristic must be odd)")
    if size < 2 or any(size % d == 0 for d in range(2, int(size**0.5) + 1)):
        raise ValueError(f"field size must be an odd prime, got {size}")


def gaussian_binomial(n: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^n."""
    if not 0 <= r <= n:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def rref(rows, p: int):
    """Reduced row echelon form mod p; returns (canonical rows, rank)."""
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        pivot = next((k for k in range(rank, nrows) if mat[k][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for k in range(nrows):
            if k != rank and mat[k][col] % p:
                f = mat[k][col]
                mat[k] = [(a - f * b) % p for a, b in zip(mat[k], mat[rank])]
        rank += 1
    return tuple(tuple(row) for row in mat), rank


def _rank(rows, p: int) -> int:
    return rref(rows, p)[1] if rows else 0


def enumerate_grassmannian(shape: Shape, field_size: int) -> list:
    """All r-planes in F^n, each as its unique r x n RREF basis matrix.

    Enumerates by pivot-column choice and free entries; free entries sit to
    the right of their row's pivot, outside pivot columns.
    """
    _check_field(field_size)
    n, r = shape.n, shape.r
    total = gaussian_binomial(n, r, field_size)
    if total > ENUMERATION_BUDGET:
        raise ValueError(f"Grassmannian has {total} points, over the budget")
    out = []
    for pivots in itertools.combinations(range(n), r):
        free = [
            (row, col)
            for row in range(r)
            for col in range(pivots[row] + 1, n)
            if col not in pivots
        ]
        for values in itertools.product(range(field_size), repeat=len(free)):
            mat = [[0] * n for _ in range(r)]
            for row, piv in enumerate(pivots):
                mat[row][piv] = 1
            for (row, col), v in zip(free, values):
                mat[row][col] = v
            out.append(tuple(tuple(row) for row in mat))
    assert len(out) == total
    return out


def rank_profile(w, shape: Shape, field_size: int) -> tuple:
    """(p+1) x (q+1) table of dim(W cap (F_i+ + F_j-)) for the standard flags.

    F_i+ + F_j- is a coordinate subspace, so the intersection dimension is
    r minus the rank of W restricted to the complementary coordinates.
    """
    p, q, r = shape.p, shape.q, shape.r
    rows = []
    for i in range(p + 1):
        row = []
        for j in range(q + 1):
            comp = list(range(i, p)) + list(range(p + j, p + q))
            if not comp or r == 0:
                row.append(r)
                continue
            restricted = [[v[c] for c in comp] for v in w]
            row.append(r - _rank(restricted, field_size))
        rows.append(tuple(row))
    return tuple(rows)


def graph_subspace(g: Graph, field_size: int) -> tuple:
    """The base point of the orbit: span of e_i + e_{p+j} per edge, e_i per
    + mark, e_{p+j} per - mark, in RREF."""
    n = g.shape.n
    rows = []
    for i, j in sorted(g.edges):
        v = [0] * n
        v[i - 1] = 1
        v[g.shape.p + j - 1] = 1
        rows.append(v)
    for i in sorted(g.marked_plus):
        v = [0] * n
        v[i - 1] = 1
        rows.append(v)
    for j in sorted(g.marked_minus):
        v = [0] * n
        v[g.shape.p + j - 1] = 1
        rows.append(v)
    if not rows:
        return ()
    canon, rank = rref(rows, field_size)
    assert rank == g.shape.r
    return canon


@dataclass(frozen=True)
class OrbitClassification:
    """All Grassmannian points grouped into Borel orbits."""

    shape: Shape
    field_size: int
    graphs: tuple  # enumeration order
    sizes: tuple  # orbit point counts, aligned with graphs
    orbit_of: dict  # RREF basis -> orbit index
    points: tuple  # points[k] = tuple of subspaces in orbit k

    def representative(self, k: int):
        return self.points[k][0]


@lru_cache(maxsize=None)
def classify_orbits(shape: Shape, field_size: int) -> OrbitClassification:
    """Group all subspaces by rank profile and match them to orbit graphs.

    Any profile without a matching graph (or vice versa) is a hard failure:
    it would falsify the rank-matrix classification.
    """
    graphs = enumerate_graphs(shape)
    profile_to_index = {rank_matrix(g).entries: k for k, g in enumerate(graphs)}
    buckets = [[] for _ in graphs]
    orbit_of = {}
    for w in enumerate_grassmannian(shape, field_size):
        prof = rank_profile(w, shape, field_size)
        if prof not in profile_to_index:
            raise AssertionError(f"subspace with unmatched rank profile: {w}")
        k = profile_to_index[prof]
        buckets[k].append(w)
        orbit_of[w] = k
    if any(not bucket for bucket in buckets):
        raise AssertionError("some orbit graph received no Grassmannian points")
    return OrbitClassification(
        shape,
        field_size,
        graphs,
        tuple(len(b) for b in buckets),
        orbit_of,
        tuple(tuple(b) for b in buckets),
    )


def _act_matrix(shape: Shape, side: str, i: int, c: int, field_size: int):
    """The n x n matrix g = s_i u(c)^{-1} with u(c) = I + c E_{a,a+1}."""
    n = shape.n
    a = i - 1 if side == "+" else shape.p + i - 1
    g = [[1 if x == y else 0 for y in range(n)] for x in range(n)]
    g[a][a + 1] = (-c) % field_size  # u(c)^{-1} = u(-c)
    g[a], g[a + 1] = g[a + 1], g[a]  # left-multiply by s_i
    return g


def _transform(w, g, p: int):
    """Image of the subspace under v -> g v, re-canonicalized."""
    if not w:
        return ()
    n = len(g)
    rows = [
        [sum(row[k] * g[x][k] for k in range(n)) % p for x in range(n)]
        for row in w
    ]
    return rref(rows, p)[0]


def convolution_action(
    shape: Shape, field_size: int, side: str, i: int, g: Graph
) -> ModuleVector:
    """T_i * xi_g computed by counting, as an integer-coefficient vector.

    Evaluates the convolved function at a representative of every orbit and
    asserts (a) constancy on sampled points of each orbit and (b) total mass
    q * #orbit(g), which pins the support exactly.
    """
    cls = classify_orbits(shape, field_size)
    basis = Basis(shape)
    source = basis.index[g]

    def value_at(x) -> int:
        count = 0
        for c in range(field_size):
            mat = _act_matrix(shape, side, i, c, field_size)
            y = _transform(x, mat, field_size)
            if cls.orbit_of.get(y, -1) == source:
                count += 1
        return count

    coords = {}
    for k in range(len(basis)):
        samples = cls.points[k][:3]
        vals = {value_at(x) for x in samples}
        if len(vals) != 1:
            raise AssertionError(f"convolution not constant on orbit {k}")
        v = vals.pop()
        if v:
            coords[k] = v

    mass = sum(v * cls.sizes[k] for k, v in coords.items())
    if mass != field_size * cls.sizes[source]:
        raise AssertionError("convolution mass balance failed")
    return ModuleVector(shape, coords)


@dataclass(frozen=True)
class CertificationRecord:
    field_size: int
    side: str
    index: int
    orbit: int
    case: str
    expected: dict  # orbit index -> coefficient
    observed: dict


@dataclass(frozen=True)
class CertificationReport:
    shape: Shape
    records: tuple

    @property
    def mismatches(self):
        return [rec for rec in self.records if rec.expected != rec.observed]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "shape": {"p": self.shape.p, "q": self.shape.q, "r": self.shape.r},
            "ok": self.ok,
            "records": [
                {
                    "field": rec.field_size,
                    "generator": f"{rec.side}{rec.index}",
                    "orbit": rec.orbit,
                    "case": rec.case,
                    "expected": {str(k): v for k, v in sorted(rec.expected.items())},
                    "observed": {str(k): v for k, v in sorted(rec.observed.items())},
                }
                for rec in self.records
            ],
        }


def certify_theorem(shape: Shape, field_sizes) -> CertificationReport:
    """Compare symbolic coefficients (q, q-1, 1 in the three cases) against
    counted convolution coefficients, for every orbit, generator and field."""
    basis = Basis(shape)
    records = []
    for field_size in field_sizes:
        _check_field(field_size)
        for side, i in generators(shape):
            for idx, g in enumerate(basis.graphs):
                case = classify(g, side, i)
                symbolic = apply_generator(
                    side, i, ModuleVector.basis_vector(shape, idx)
                )
                expected = {k: v(field_size) for k, v in symbolic.coords.items()}
                observed = convolution_action(shape, field_size, side, i, g)
                records.append(
                    CertificationRecord(
                        field_size,
                        side,
                        i,
                        idx,
                        case.value,
                        expected,
                        {k: v(0) for k, v in observed.coords.items()},
                    )
                )
    return CertificationReport(shape, tuple(records))
