"""Right angles in F_q^n: predicate, witness search, layer construction, bounds.

A triple of pairwise distinct points x, y, z forms a right angle with vertex
x when the arms y - x and z - x are orthogonal, i.e. <z - x, y - x> = 0.
Everything here is a pure function on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from . import errors
from .gf import (
    Element,
    FieldSpec,
    arith_tables,
    default_field,
    fe_add,
    fe_sub,
    inner_product,
    validate_element,
)

Point = tuple[Element, ...]


@dataclass(frozen=True)
class PointSet:
    """An ordered, duplicate-free list of points sharing one field and dimension."""

    field: FieldSpec
    n: int
    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class TripleWitness:
    """An evaluated triple: ``value`` = <arm2 - vertex, arm1 - vertex>.

    Indices are 0-based positions in the originating PointSet; a right-angle
    witness has value 0.
    """

    vertex_index: int
    arm1_index: int
    arm2_index: int
    value: Element


@dataclass(frozen=True)
class BoundsReport:
    """One row of the bounds table for dimension n over GF(q).

    ``lower`` is the layer-construction size C(n, q-1); ``upper`` is the
    closed-form bound C(n+q, q-1) + 3 (None for even q, where it does not
    apply); ``exact`` carries a known value of the true maximum when one is
    available, qualified by ``status`` ("exact" or "lower_bound").
    """

    n: int
    q: int
    lower: int
    upper: int | None
    exact: int | None = None
    status: str | None = None


def point_set(field: FieldSpec, n: int, points) -> PointSet:
    """Validated PointSet; rejects dimension mixups and duplicates."""
    pts = []
    seen = set()
    for pt in points:
        pt = tuple(pt)
        if len(pt) != n:
            raise errors.DimensionMismatch(f"point {pt!r} does not have {n} coordinates")
        for c in pt:
            validate_element(c, field)
        if pt in seen:
            raise errors.DuplicatePoint(f"duplicate point {pt!r}")
        seen.add(pt)
        pts.append(pt)
    return PointSet(field=field, n=n, points=tuple(pts))


def point_from_ints(F: FieldSpec, coords) -> Point:
    """Point from integer encodings (for k = 1 these are plain residues)."""
    return tuple(F.element_at(int(c)) for c in coords)


def point_set_from_ints(F: FieldSpec, n: int, rows) -> PointSet:
    return point_set(F, n, (point_from_ints(F, row) for row in rows))


def space_points(F: FieldSpec, n: int) -> tuple[Point, ...]:
    """All q^n points of F^n in lexicographic (encoding) order; zero first."""
    if n < 1:
        raise errors.BadDimension(f"dimension must be >= 1, got {n}")
    elems = tuple(F.elements())
    return tuple(product(elems, repeat=n))


def triple_value(x: Point, y: Point, z: Point, F: FieldSpec) -> Element:
    """<z - x, y - x>: zero means the arms from vertex x are orthogonal."""
    if not len(x) == len(y) == len(z):
        raise errors.DimensionMismatch(
            f"dimensions {len(x)}, {len(y)}, {len(z)} differ"
        )
    arm1 = tuple(fe_sub(b, a, F) for a, b in zip(x, y))
    arm2 = tuple(fe_sub(b, a, F) for a, b in zip(x, z))
    return inner_product(arm2, arm1, F)


def is_right_angle(x: Point, y: Point, z: Point, F: FieldSpec) -> bool:
    """True iff x, y, z are pairwise distinct and <z-x, y-x> = 0.

    Symmetric in the arms y and z; x is the vertex.
    """
    if x == y or x == z or y == z:
        return False
    return triple_value(x, y, z, F) == F.zero


def _encoded_coords(A: PointSet) -> list[tuple[int, ...]]:
    F = A.field
    return [tuple(F.element_index(c) for c in pt) for pt in A.points]


def _gram(A: PointSet) -> list[list[int]]:
    """m x m table of encoded inner products <p_i, p_j>."""
    t = arith_tables(A.field)
    add, mul = t.add, t.mul
    enc = _encoded_coords(A)
    m = len(enc)
    g = [[0] * m for _ in range(m)]
    for i in range(m):
        u = enc[i]
        for j in range(i, m):
            v = enc[j]
            acc = 0
            for a, b in zip(u, v):
                acc = add[acc][mul[a][b]]
            g[i][j] = acc
            g[j][i] = acc
    return g


def _angle_value_from_gram(g, add, sub, vx: int, a1: int, a2: int) -> int:
    # <z-x, y-x> = <z,y> - <z,x> - <x,y> + <x,x> by bilinearity
    val = sub[g[a2][a1]][g[a2][vx]]
    val = sub[val][g[vx][a1]]
    return add[val][g[vx][vx]]


def find_right_angle(A: PointSet) -> TripleWitness | None:
    """First right angle in A, or None if the set is right-angle-free.

    Enumerates every vertex index against every unordered arm pair, in
    lexicographic order (vertex, smaller arm, larger arm), so the reported
    witness is reproducible.  m * C(m-1, 2) checks.
    """
    m = len(A.points)
    if m < 3:
        return None
    t = arith_tables(A.field)
    g = _gram(A)
    add, sub = t.add, t.sub
    for vx in range(m):
        for a1 in range(m):
            if a1 == vx:
                continue
            for a2 in range(a1 + 1, m):
                if a2 == vx:
                    continue
                if _angle_value_from_gram(g, add, sub, vx, a1, a2) == 0:
                    return TripleWitness(vertex_index=vx, arm1_index=a1,
                                         arm2_index=a2, value=A.field.zero)
    return None


def construction_layer(n: int, q: int, field: FieldSpec | None = None) -> PointSet:
    """All C(n, q-1) zero-one vectors of Hamming weight q-1 in F_q^n.

    Returned in lexicographic order.  The layer is NOT asserted to be
    right-angle-free; run find_right_angle on the result to get a verdict.
    """
    F = field if field is not None else default_field(q)
    if F.q != q:
        raise ValueError(f"field has order {F.q}, expected {q}")
    if n < q - 1:
        raise errors.BadDimension(f"need n >= q-1 = {q - 1}, got n = {n}")
    zero, one = F.zero, F.one
    pts = []
    for support in combinations(range(n), q - 1):
        coords = [zero] * n
        for i in support:
            coords[i] = one
        pts.append(tuple(coords))
    pts.sort(key=lambda pt: tuple(F.element_index(c) for c in pt))
    return PointSet(field=F, n=n, points=tuple(pts))


def upper_bound(n: int, q: int) -> int:
    """C(n+q, q-1) + 3, the closed-form ceiling for odd q."""
    if q % 2 == 0:
        raise errors.EvenCharacteristic(f"upper bound requires odd q, got {q}")
    return math.comb(n + q, q - 1) + 3


def lower_bound_size(n: int, q: int) -> int:
    """C(n, q-1), the size of the weight-(q-1) layer construction."""
    if n < q - 1:
        raise errors.BadDimension(f"need n >= q-1 = {q - 1}, got n = {n}")
    return math.comb(n, q - 1)


def translate(A: PointSet, v: Point) -> PointSet:
    """{a + v : a in A}, order preserved."""
    if len(v) != A.n:
        raise errors.DimensionMismatch(f"translation vector has {len(v)} coordinates, set has {A.n}")
    F = A.field
    moved = tuple(
        tuple(fe_add(c, w, F) for c, w in zip(pt, v)) for pt in A.points
    )
    return PointSet(field=F, n=A.n, points=moved)


def bounds_table(n_max: int, q: int,
                 exact: dict[int, tuple[int, str]] | None = None) -> list[BoundsReport]:
    """Rows n = 1..n_max of construction size vs closed-form upper bound.

    ``exact`` maps a dimension to (value, status) from prior search runs.
    For even q the upper column is None (the bound needs odd characteristic).
    """
    if n_max < 1:
        raise errors.BadDimension(f"n_max must be >= 1, got {n_max}")
    odd = q % 2 == 1
    rows = []
    for n in range(1, n_max + 1):
        known = (exact or {}).get(n)
        rows.append(BoundsReport(
            n=n,
            q=q,
            lower=math.comb(n, q - 1),
            upper=upper_bound(n, q) if odd else None,
            exact=known[0] if known else None,
            status=known[1] if known else None,
        ))
    return rows
