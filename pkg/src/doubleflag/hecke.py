"""Hecke algebra module structure on the orbit space.

Each simple reflection s_i (on the + or - side) interacts with an orbit in
one of three ways, read off from the degrees of the vertices i, i+1:

* Case I:   s_i fixes the orbit; T_i acts by q.
* Case II:  degree ascent, or two incident edges that cross;
            T_i xi = (q-1) xi + q xi'.
* Case III: degree descent, or two incident edges that do not cross;
            T_i xi = xi'.

Here xi' is the basis vector of the reflected orbit.  Extending linearly
over integer polynomials in q gives the module structure; specializing at
q = 1 gives the permutation representation of the Weyl group S_p x S_q.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    Graph,
    Shape,
    admissible_triples,
    enumerate_graphs,
    identity_perm,
    transposition,
    weyl_act,
)
from .polynomial import ONE, Q, ZERO, IntPoly


class GeneratorCase(enum.Enum):
    CASE_I = "I"
    CASE_II = "II"
    CASE_III = "III"


@lru_cache(maxsize=None)
class Basis:
    """Orbit basis in canonical enumeration order, with index lookup."""

    def __init__(self, shape: Shape):
        self.shape = shape
        self.graphs = enumerate_graphs(shape)
        self.index = {g: i for i, g in enumerate(self.graphs)}

    def __len__(self):
        return len(self.graphs)


def generators(shape: Shape) -> list:
    """All simple reflections of S_p x S_q as (side, i) labels."""
    return [("+", i) for i in range(1, shape.p)] + [
        ("-", j) for j in range(1, shape.q)
    ]


def _check_generator(shape: Shape, side: str, i: int):
    bound = shape.p if side == "+" else shape.q if side == "-" else None
    if bound is None:
        raise ValueError(f"side must be '+' or '-', got {side!r}")
    if not 1 <= i <= bound - 1:
        raise ValueError(f"generator index {i} out of range on side {side}")


def reflect(g: Graph, side: str, i: int) -> Graph:
    """The graph s_i . g obtained by swapping vertices i, i+1 on one side."""
    _check_generator(g.shape, side, i)
    if side == "+":
        return weyl_act((transposition(g.shape.p, i), identity_perm(g.shape.q)), g)
    return weyl_act((identity_perm(g.shape.p), transposition(g.shape.q, i)), g)


def classify(g: Graph, side: str, i: int) -> GeneratorCase:
    """Which of the three cases the generator (side, i) is in at the orbit g."""
    _check_generator(g.shape, side, i)
    d, d2 = g.degree(side, i), g.degree(side, i + 1)
    if d == d2 and d in (0, 2):
        return GeneratorCase.CASE_I
    if d < d2:
        return GeneratorCase.CASE_II
    if d > d2:
        return GeneratorCase.CASE_III
    # Both are edge endpoints; compare the opposite endpoints.
    if side == "+":
        ends = {a: b for a, b in g.edges}
    else:
        ends = {b: a for a, b in g.edges}
    crossing = ends[i] > ends[i + 1]
    return GeneratorCase.CASE_II if crossing else GeneratorCase.CASE_III


@dataclass
class ModuleVector:
    """Finite IntPoly-linear combination of orbit basis vectors, keyed by
    the orbit's index in the enumeration order.  Zero coordinates are
    never stored."""

    shape: Shape
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coords = {k: IntPoly.coerce(v) for k, v in self.coords.items() if IntPoly.coerce(v)}

    @staticmethod
    def basis_vector(shape: Shape, index: int) -> "ModuleVector":
        return ModuleVector(shape, {index: ONE})

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, ZERO) + v
        return ModuleVector(self.shape, out)

    def scale(self, c) -> "ModuleVector":
        c = IntPoly.coerce(c)
        return ModuleVector(self.shape, {k: c * v for k, v in self.coords.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scale(-1)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleVector)
            and self.shape == other.shape
            and self.coords == other.coords
        )

    def is_zero(self) -> bool:
        return not self.coords

    def specialize(self, value: int) -> dict:
        """Evaluate every coordinate at an integer, dropping zeros."""
        out = {k: v(value) for k, v in self.coords.items()}
        return {k: v for k, v in out.items() if v}


def apply_generator(side: str, i: int, v: ModuleVector) -> ModuleVector:
    """T_i * v, extended linearly from the three-case rule on basis vectors."""
    basis = Basis(v.shape)
    out = ModuleVector(v.shape)
    for idx, coeff in v.coords.items():
        g = basis.graphs[idx]
        case = classify(g, side, i)
        if case is GeneratorCase.CASE_I:
            term = ModuleVector(v.shape, {idx: Q})
        else:
            jdx = basis.index[reflect(g, side, i)]
            if case is GeneratorCase.CASE_II:
                term = ModuleVector(v.shape, {idx: Q - 1, jdx: Q})
            else:
                term = ModuleVector(v.shape, {jdx: ONE})
        out = out + term.scale(coeff)
    return out


@dataclass(frozen=True)
class OperatorMatrix:
    shape: Shape
    side: str
    index: int
    entries: tuple  # entries[row][col], IntPoly

    def specialize(self, value: int) -> tuple:
        return tuple(tuple(e(value) for e in row) for row in self.entries)


def operator_matrix(shape: Shape, side: str, i: int) -> OperatorMatrix:
    """Dense matrix of T_i over the orbit basis, columns = images of basis
    vectors."""
    _check_generator(shape, side, i)
    basis = Basis(shape)
    n = len(basis)
    cols = [apply_generator(side, i, ModuleVector.basis_vector(shape, c)) for c in range(n)]
    entries = tuple(
        tuple(cols[c].coords.get(r, ZERO) for c in range(n)) for r in range(n)
    )
    return OperatorMatrix(shape, side, i, entries)


@dataclass(frozen=True)
class RelationCheck:
    name: str
    ok: bool


def _compose(ops, vec):
    """Apply generators right-to-left; ops is a list of (side, i)."""
    for side, i in reversed(ops):
        vec = apply_generator(side, i, vec)
    return vec


def verify_relations(shape: Shape) -> list:
    """Check the defining Hecke relations as exact polynomial identities.

    Quadratic (T+1)(T-q) = 0 for every generator; commutation for distinct
    non-adjacent (or opposite-side) pairs; braid for adjacent same-side
    pairs.  Checked on every basis vector; failures are reported, not
    raised.
    """
    gens = generators(shape)
    n = len(Basis(shape))
    report = []

    for side, i in gens:
        ok = True
        for c in range(n):
            v = ModuleVector.basis_vector(shape, c)
            tv = apply_generator(side, i, v)
            ttv = apply_generator(side, i, tv)
            # (T+1)(T-q) v = T^2 v + (1-q) T v - q v
            residue = ttv + tv.scale(1 - Q) + v.scale(-Q)
            if not residue.is_zero():
                ok = False
                break
        report.append(RelationCheck(f"quadratic {side}{i}", ok))

    for (s1, i1), (s2, i2) in itertools.combinations(gens, 2):
        adjacent = s1 == s2 and abs(i1 - i2) == 1
        ok = True
        for c in range(n):
            v = ModuleVector.basis_vector(shape, c)
            if adjacent:
                lhs = _compose([(s1, i1), (s2, i2), (s1, i1)], v)
                rhs = _compose([(s2, i2), (s1, i1), (s2, i2)], v)
                name = f"braid {s1}{i1},{s2}{i2}"
            else:
                lhs = _compose([(s1, i1), (s2, i2)], v)
                rhs = _compose([(s2, i2), (s1, i1)], v)
                name = f"commute {s1}{i1},{s2}{i2}"
            if lhs != rhs:
                ok = False
                break
        report.append(RelationCheck(name, ok))

    return report


@dataclass(frozen=True)
class WeylBlock:
    triple: tuple  # (k, s, t)
    orbit_size: int
    stabilizer_order: int


def _expected_orbit_size(shape: Shape, triple) -> int:
    k, s, t = triple
    sp, tp = shape.p - k - s, shape.q - k - t
    mp = math.factorial(shape.p) // (
        math.factorial(k) * math.factorial(s) * math.factorial(sp)
    )
    mq = math.factorial(shape.q) // (
        math.factorial(k) * math.factorial(t) * math.factorial(tp)
    )
    return mp * mq * math.factorial(k)


def _expected_stabilizer_order(shape: Shape, triple) -> int:
    k, s, t = triple
    sp, tp = shape.p - k - s, shape.q - k - t
    return (
        math.factorial(k)
        * math.factorial(s)
        * math.factorial(sp)
        * math.factorial(t)
        * math.factorial(tp)
    )


def q1_action_is_permutation(shape: Shape) -> bool:
    """At q = 1 every generator acts as the vertex-relabelling permutation."""
    basis = Basis(shape)
    for side, i in generators(shape):
        for idx, g in enumerate(basis.graphs):
            image = apply_generator(side, i, ModuleVector.basis_vector(shape, idx))
            expected = {basis.index[reflect(g, side, i)]: 1}
            if image.specialize(1) != expected:
                return False
    return True


def weyl_decompose(shape: Shape) -> list:
    """Decompose the q = 1 permutation representation of S_p x S_q.

    The basis splits into one Weyl-group orbit per admissible (k, s, t);
    each orbit size equals the index of the stabilizer subgroup
    (diagonal S_k) x S_s x S_s' x S_t x S_t'.  All of this is verified, the
    stabilizer order by brute force over the whole group.
    """
    if not q1_action_is_permutation(shape):
        raise AssertionError("q=1 specialization is not the permutation action")

    basis = Basis(shape)
    gens = generators(shape)
    seen = set()
    blocks = {}
    for start in range(len(basis)):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            idx = frontier.pop()
            g = basis.graphs[idx]
            for side, i in gens:
                jdx = basis.index[reflect(g, side, i)]
                if jdx not in orbit:
                    orbit.add(jdx)
                    frontier.append(jdx)
        seen |= orbit

        triples = {basis.graphs[idx].triple() for idx in orbit}
        if len(triples) != 1:
            raise AssertionError("a Weyl orbit mixes several (k,s,t) types")
        triple = triples.pop()
        if triple in blocks:
            raise AssertionError(f"two Weyl orbits share the type {triple}")
        if len(orbit) != _expected_orbit_size(shape, triple):
            raise AssertionError(f"orbit size mismatch for type {triple}")

        base = basis.graphs[min(orbit)]
        stab = sum(
            1
            for w1 in itertools.permutations(range(1, shape.p + 1))
            for w2 in itertools.permutations(range(1, shape.q + 1))
            if weyl_act((w1, w2), base) == base
        )
        if stab != _expected_stabilizer_order(shape, triple):
            raise AssertionError(f"stabilizer order mismatch for type {triple}")
        blocks[triple] = WeylBlock(triple, len(orbit), stab)

    if set(blocks) != set(admissible_triples(shape)):
        raise AssertionError("Weyl orbits do not match the admissible triples")
    return [blocks[t] for t in sorted(blocks)]
