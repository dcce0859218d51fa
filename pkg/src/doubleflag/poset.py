"""Closure order of K-orbits.

The closure of an orbit contains another iff the rank matrix of the smaller
orbit dominates (is entrywise >=) that of the bigger one.  The Hasse diagram
is obtained by transitive reduction, and every cover raises the dimension by
exactly one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Graph, Shape, enumerate_graphs, invariants, rank_matrix


def closure_leq(a: Graph, b: Graph) -> bool:
    """True iff closure(O_a) is contained in closure(O_b)."""
    if a.shape != b.shape:
        raise ValueError("graphs must have the same shape")
    return rank_matrix(a).dominates(rank_matrix(b))


@dataclass(frozen=True)
class OrbitPoset:
    shape: Shape
    orbits: tuple  # Graphs in enumeration order
    dims: tuple
    leq: tuple  # leq[a] = bitmask of b with a <= b
    covers: tuple  # (lower, upper) index pairs

    def is_leq(self, a: int, b: int) -> bool:
        return bool(self.leq[a] >> b & 1)

    @property
    def top(self) -> int:
        """Index of the unique maximal orbit (the dense one)."""
        tops = [a for a in range(len(self.orbits)) if self.leq[a] == 1 << a]
        if len(tops) != 1:
            raise AssertionError(f"expected a unique maximal orbit, found {len(tops)}")
        return tops[0]


def build_poset(shape: Shape) -> OrbitPoset:
    """Full closure order, Hasse covers and dimensions for one shape.

    Fails loudly if a cover violates the dim+1 grading or if the maximal
    orbit is not unique; either would falsify the implementation.
    """
    orbits = enumerate_graphs(shape)
    n = len(orbits)
    profiles = [rank_matrix(g).entries for g in orbits]
    if len(set(profiles)) != n:
        raise AssertionError("rank matrices must separate orbits")
    dims = tuple(invariants(g).dim for g in orbits)

    # leq[a] holds b as a bit iff profile[a] >= profile[b] entrywise.
    leq = []
    flat = [tuple(x for row in pr for x in row) for pr in profiles]
    for a in range(n):
        mask = 0
        fa = flat[a]
        for b in range(n):
            if all(x >= y for x, y in zip(fa, flat[b])):
                mask |= 1 << b
        leq.append(mask)

    # Transitive reduction: b covers a iff a < b and nothing fits between.
    above = [leq[a] & ~(1 << a) for a in range(n)]
    below = [0] * n
    for a in range(n):
        m = above[a]
        while m:
            b = (m & -m).bit_length() - 1
            below[b] |= 1 << a
            m &= m - 1
    covers = []
    for a in range(n):
        m = above[a]
        while m:
            b = (m & -m).bit_length() - 1
            if (above[a] & below[b]) == 0:
                covers.append((a, b))
            m &= m - 1
    covers.sort()

    for a, b in covers:
        if dims[b] != dims[a] + 1:
            raise AssertionError(
                f"cover {a} -> {b} violates the grading: dims {dims[a]}, {dims[b]}"
            )
    poset = OrbitPoset(shape, orbits, dims, tuple(leq), tuple(covers))
    poset.top  # uniqueness check
    return poset


def to_dot(poset: OrbitPoset) -> str:
    """DOT rendering: one node per orbit labelled with its JSON record and
    dimension, same-dimension nodes on one rank, covers drawn upward."""
    lines = ["digraph orbits {", "  rankdir=BT;", "  node [shape=box];"]
    for idx, g in enumerate(poset.orbits):
        label = json.dumps(g.to_json(), sort_keys=True).replace('"', '\\"')
        lines.append(f'  n{idx} [label="{label}\\ndim {poset.dims[idx]}"];')
    for d in sorted(set(poset.dims)):
        group = " ".join(f"n{i};" for i, dd in enumerate(poset.dims) if dd == d)
        lines.append(f"  {{ rank=same; {group} }}")
    for a, b in poset.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
