"""Exact matrices and 3-tensors over GF(q), rank, and slice certificates.

Two families of objects live here.

*Agreement forms.*  For a coefficient vector (c_a), all entries nonzero, the
agreement matrix has entry sum_a c_a * [delta_a(y) == delta_a(z)] evaluated at
(y, z) = (a_j, a_k): total tau on the diagonal and tau - c_j - c_k off it.
Its rank over the field is computed by exact Gaussian elimination and is
checked against the floor m - 2.  The agreement tensor gates the same form by
delta_a(x), giving a three-variable table on A^3.

*Slice certificates.*  The angle-indicator tensor evaluates, on A^3, to 0
exactly at cells (x, y, z) with y != z where the arms y - x and z - x are
orthogonal, and 1 everywhere else (via the (q-1)-power of the arm inner
product, so q must be odd).  ``decompose_angle_tensor`` writes it explicitly
as a short sum of rank-one slices; ``check_decomposition`` re-evaluates the
sum pointwise, so a stored decomposition is a portable, machine-checkable
upper-bound certificate on the slice rank.

Dense tensors are capped at TENSOR_SIZE_CAP points to bound memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import errors
from .geometry import PointSet
from .gf import Element, FieldSpec, arith_tables, fe_add, fe_mul, fe_pow, fe_sub

TENSOR_SIZE_CAP = 64


@dataclass(frozen=True)
class CoefficientVector:
    """Nonzero coefficients c_a indexed like a point set, plus their sum tau."""

    c: tuple[Element, ...]
    tau: Element

    def __len__(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class MatrixFq:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[tuple[Element, ...], ...]


@dataclass(frozen=True)
class Tensor3:
    """Dense m x m x m table of field values indexed by a point set."""

    index_set: PointSet
    values: tuple[tuple[tuple[Element, ...], ...], ...]

    @property
    def size(self) -> int:
        return len(self.index_set.points)


@dataclass(frozen=True)
class Slice:
    """A rank-one summand uni(pivot) * bi(other two variables).

    ``axis`` names the pivot variable: "X" means uni(x) * bi(y, z), "Y" means
    uni(y) * bi(x, z), "Z" means uni(z) * bi(x, y).  Both tables must be
    nonzero somewhere (a zero function is not rank one).
    """

    axis: str
    uni: tuple[Element, ...]
    bi: tuple[tuple[Element, ...], ...]


@dataclass(frozen=True)
class SliceDecomposition:
    """A list of slices whose pointwise sum should equal a target tensor."""

    slices: tuple[Slice, ...]
    target_size: int

    def __len__(self) -> int:
        return len(self.slices)


class RankCheck(NamedTuple):
    rank: int
    holds: bool


class TensorDisagreement(NamedTuple):
    cell: tuple[int, int, int]
    left: Element
    right: Element


class DecompositionMismatch(NamedTuple):
    cell: tuple[int, int, int]
    evaluated: Element
    expected: Element


def coefficient_vector(values: Sequence[Element], F: FieldSpec) -> CoefficientVector:
    """Validated coefficient vector; every entry must be nonzero."""
    vals = tuple(values)
    zero = F.zero
    for i, v in enumerate(vals):
        if v == zero:
            raise errors.ZeroCoefficient(f"coefficient {i} is zero")
    tau = zero
    for v in vals:
        tau = fe_add(tau, v, F)
    return CoefficientVector(c=vals, tau=tau)


def mat_rank(M: MatrixFq) -> int:
    """Rank over the field by exact Gaussian elimination; M is not mutated."""
    F = M.field
    t = arith_tables(F)
    sub, mul, inv = t.sub, t.mul, t.inv
    a = [[F.element_index(e) for e in row] for row in M.entries]
    rows, cols = M.rows, M.cols
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, rows):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pinv = inv[a[rank][col]]
        prow = a[rank]
        if pinv != 1:
            mrow = mul[pinv]
            a[rank] = prow = [mrow[x] for x in prow]
        for r in range(rank + 1, rows):
            f = a[r][col]
            if f:
                mrow = mul[f]
                arow = a[r]
                a[r] = [sub[x][mrow[y]] for x, y in zip(arow, prow)]
        rank += 1
        if rank == rows:
            break
    return rank


def _require_odd(F: FieldSpec) -> None:
    if F.p == 2:
        raise errors.EvenCharacteristic("this construction needs odd characteristic")


def agreement_matrix(C: CoefficientVector, F: FieldSpec) -> MatrixFq:
    """m x m matrix with diagonal tau and off-diagonal tau - c_j - c_k.

    Entry (j, k) is the weighted count of coefficients whose index agrees
    with both of j, k or with neither.  Odd characteristic only.
    """
    _require_odd(F)
    return _pairwise_matrix(C, F, diagonal_drops_own=False)


def avoidance_matrix(C: CoefficientVector, F: FieldSpec) -> MatrixFq:
    """Variant usable in any characteristic: entry (j, k) counts coefficients
    avoided by both arguments, so the diagonal is tau - c_j and off-diagonal
    entries are tau - c_j - c_k.  Its rank is measured, never asserted.
    """
    return _pairwise_matrix(C, F, diagonal_drops_own=True)


def _pairwise_matrix(C: CoefficientVector, F: FieldSpec, diagonal_drops_own: bool) -> MatrixFq:
    zero = F.zero
    for i, v in enumerate(C.c):
        if v == zero:
            raise errors.ZeroCoefficient(f"coefficient {i} is zero")
    m = len(C.c)
    tau = C.tau
    rows = []
    for j in range(m):
        tj = fe_sub(tau, C.c[j], F)
        row = []
        for k in range(m):
            if j == k:
                row.append(tj if diagonal_drops_own else tau)
            else:
                row.append(fe_sub(tj, C.c[k], F))
        rows.append(tuple(row))
    return MatrixFq(field=F, rows=m, cols=m, entries=tuple(rows))


def agreement_rank_check(C: CoefficientVector, F: FieldSpec) -> RankCheck:
    """Rank of the agreement matrix and whether it clears the floor m - 2."""
    rank = mat_rank(agreement_matrix(C, F))
    return RankCheck(rank=rank, holds=rank >= len(C.c) - 2)


def _check_tensor_size(m: int, max_size: int) -> None:
    if m > max_size:
        raise errors.TooLarge(f"{m} points exceeds the dense-tensor cap {max_size}")


def agreement_tensor(A: PointSet, C: CoefficientVector,
                     max_size: int = TENSOR_SIZE_CAP) -> Tensor3:
    """Three-variable agreement form on A^3.

    Cell (x, y, z) holds c_x when y and z both equal x or both differ from x,
    and 0 otherwise (exactly one arm equal to the vertex).
    """
    m = len(A.points)
    if len(C.c) != m:
        raise errors.SizeMismatch(f"{len(C.c)} coefficients for {m} points")
    _check_tensor_size(m, max_size)
    zero = A.field.zero
    values = []
    for ix in range(m):
        cx = C.c[ix]
        plane = []
        for iy in range(m):
            y_hits = iy == ix
            plane.append(tuple(
                cx if (iz == ix) == y_hits else zero for iz in range(m)
            ))
        values.append(tuple(plane))
    return Tensor3(index_set=A, values=tuple(values))


def angle_indicator_tensor(A: PointSet, max_size: int = TENSOR_SIZE_CAP) -> Tensor3:
    """The (q-1)-power orthogonality test on A^3, for odd q.

    Cell (x, y, z) is 1 when y = z, and <z-x, y-x>^(q-1) otherwise, which is
    0 precisely when the arms from x are orthogonal (including the degenerate
    x = y or x = z cells) and 1 for every other triple.
    """
    F = A.field
    _require_odd(F)
    m = len(A.points)
    _check_tensor_size(m, max_size)
    t = arith_tables(F)
    add, sub, powq = t.add, t.sub, t.pow_q_minus_1
    from .geometry import _angle_value_from_gram, _gram

    g = _gram(A)
    one, zero = F.one, F.zero
    values = []
    for ix in range(m):
        plane = []
        for iy in range(m):
            row = []
            for iz in range(m):
                if iy == iz:
                    row.append(one)
                else:
                    v = _angle_value_from_gram(g, add, sub, ix, iy, iz)
                    row.append(one if powq[v] == 1 else zero)
            plane.append(tuple(row))
        values.append(tuple(plane))
    return Tensor3(index_set=A, values=tuple(values))


def diagonal_tensor(A: PointSet, C: CoefficientVector,
                    max_size: int = TENSOR_SIZE_CAP) -> Tensor3:
    """c_a at (a, a, a), zero elsewhere; a fixture for the certificate checker."""
    m = len(A.points)
    if len(C.c) != m:
        raise errors.SizeMismatch(f"{len(C.c)} coefficients for {m} points")
    _check_tensor_size(m, max_size)
    zero = A.field.zero
    values = []
    for ix in range(m):
        plane = []
        for iy in range(m):
            plane.append(tuple(
                C.c[ix] if ix == iy == iz else zero for iz in range(m)
            ))
        values.append(tuple(plane))
    return Tensor3(index_set=A, values=tuple(values))


def first_disagreement(S: Tensor3, T: Tensor3) -> TensorDisagreement | None:
    """None if the tensors agree pointwise, else the first differing cell."""
    if S.index_set != T.index_set:
        raise errors.IndexSetMismatch("tensors are indexed by different point sets")
    m = S.size
    for ix in range(m):
        for iy in range(m):
            rs, rt = S.values[ix][iy], T.values[ix][iy]
            if rs != rt:
                for iz in range(m):
                    if rs[iz] != rt[iz]:
                        return TensorDisagreement(cell=(ix, iy, iz),
                                                  left=rs[iz], right=rt[iz])
    return None


def slice_count_bound(n: int, q: int) -> int:
    """C(n+q, q-1) + 1: monomial slices plus the diagonal slice, odd q."""
    if q % 2 == 0:
        raise errors.EvenCharacteristic(f"slice bound requires odd q, got {q}")
    return math.comb(n + q, q - 1) + 1


def exponent_patterns(n: int, q: int):
    """All (i, j, k_1..k_n) with i + j + sum(k) = q - 1, in a fixed order.

    These index the monomials of the (q-1)-power expansion; there are
    exactly C(n+q, q-1) of them.
    """
    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for combo in compositions(q - 1, n + 2):
        yield combo[0], combo[1], combo[2:]


def decompose_angle_tensor(A: PointSet,
                           max_size: int = TENSOR_SIZE_CAP) -> SliceDecomposition:
    """Explicit slice decomposition of angle_indicator_tensor(A).

    Writes the tensor as one diagonal slice (uni(x) = 1, bi(y, z) = [y = z])
    plus one X-pivot slice per monomial of the multinomial expansion of

        (dot(y, z) + sqsum(x) - sum_t x_t (y_t + z_t)) ** (q - 1),

    where the exponent pattern (i, j, k_1..k_n) contributes the univariate
    factor  coef * sqsum(x)^j * prod_t x_t^{k_t}  with coef the multinomial
    coefficient times (-1)^sum(k) reduced into the field, and the bivariate
    factor  [y != z] * dot(y, z)^i * prod_t (y_t + z_t)^{k_t}.

    Slices whose coefficient vanishes mod p, or whose factor tables are
    identically zero on A, are dropped; both only shrink the certificate.
    Total slices <= C(n+q, q-1) + 1.
    """
    F = A.field
    _require_odd(F)
    m = len(A.points)
    _check_tensor_size(m, max_size)
    n = A.n
    q = F.q
    one, zero = F.one, F.zero
    pts = A.points

    sqsums = [
        _fold_add((fe_mul(c, c, F) for c in pt), F) for pt in pts
    ]
    dots = [
        [_fold_add((fe_mul(a, b, F) for a, b in zip(u, v)), F) for v in pts]
        for u in pts
    ]

    diag_bi = tuple(
        tuple(one if iy == iz else zero for iz in range(m)) for iy in range(m)
    )
    slices = [Slice(axis="X", uni=(one,) * m, bi=diag_bi)]

    fact = math.factorial
    for i, j, ks in exponent_patterns(n, q):
        coef = fact(q - 1) // (fact(i) * fact(j) * math.prod(fact(k) for k in ks))
        if sum(ks) % 2:
            coef = -coef
        coef_elt = F.scalar(coef)
        if coef_elt == zero:
            continue

        uni = []
        for ip, pt in enumerate(pts):
            val = fe_mul(coef_elt, fe_pow(sqsums[ip], j, F), F)
            for t, k in enumerate(ks):
                if k:
                    val = fe_mul(val, fe_pow(pt[t], k, F), F)
            uni.append(val)
        if not any(v != zero for v in uni):
            continue

        bi_rows = []
        bi_nonzero = False
        for iy, py in enumerate(pts):
            row = []
            for iz, pz in enumerate(pts):
                if iy == iz:
                    row.append(zero)
                    continue
                val = fe_pow(dots[iy][iz], i, F)
                for t, k in enumerate(ks):
                    if k:
                        val = fe_mul(val, fe_pow(fe_add(py[t], pz[t], F), k, F), F)
                if val != zero:
                    bi_nonzero = True
                row.append(val)
            bi_rows.append(tuple(row))
        if not bi_nonzero:
            continue

        slices.append(Slice(axis="X", uni=tuple(uni), bi=tuple(bi_rows)))

    return SliceDecomposition(slices=tuple(slices), target_size=m)


def _fold_add(items, F: FieldSpec) -> Element:
    acc = F.zero
    for x in items:
        acc = fe_add(acc, x, F)
    return acc


def decomposition_value(D: SliceDecomposition, ix: int, iy: int, iz: int,
                        F: FieldSpec) -> Element:
    """Pointwise evaluation sum over slices of uni(pivot) * bi(others)."""
    acc = F.zero
    for s in D.slices:
        if s.axis == "X":
            term = fe_mul(s.uni[ix], s.bi[iy][iz], F)
        elif s.axis == "Y":
            term = fe_mul(s.uni[iy], s.bi[ix][iz], F)
        elif s.axis == "Z":
            term = fe_mul(s.uni[iz], s.bi[ix][iy], F)
        else:
            raise ValueError(f"unknown slice axis {s.axis!r}")
        acc = fe_add(acc, term, F)
    return acc


def check_decomposition(D: SliceDecomposition, T: Tensor3) -> DecompositionMismatch | None:
    """None iff the slice sum reproduces T at every cell; else the first mismatch.

    This is the certificate semantics: a decomposition that checks out proves
    the slice rank of T is at most len(D.slices).
    """
    m = T.size
    if D.target_size != m:
        raise errors.IndexSetMismatch(
            f"decomposition targets size {D.target_size}, tensor has {m}"
        )
    F = T.index_set.field
    t = arith_tables(F)
    add, mul = t.add, t.mul
    eidx = F.element_index
    elems = tuple(F.elements())

    enc_slices = []
    for s in D.slices:
        if s.axis not in ("X", "Y", "Z"):
            raise ValueError(f"unknown slice axis {s.axis!r}")
        if len(s.uni) != m or len(s.bi) != m or any(len(r) != m for r in s.bi):
            raise errors.IndexSetMismatch("slice tables do not match the tensor size")
        enc_slices.append((
            s.axis,
            [eidx(v) for v in s.uni],
            [[eidx(v) for v in row] for row in s.bi],
        ))

    for ix in range(m):
        for iy in range(m):
            row = T.values[ix][iy]
            for iz in range(m):
                acc = 0
                for axis, uni, bi in enc_slices:
                    if axis == "X":
                        acc = add[acc][mul[uni[ix]][bi[iy][iz]]]
                    elif axis == "Y":
                        acc = add[acc][mul[uni[iy]][bi[ix][iz]]]
                    else:
                        acc = add[acc][mul[uni[iz]][bi[ix][iy]]]
                if elems[acc] != row[iz]:
                    return DecompositionMismatch(cell=(ix, iy, iz),
                                                 evaluated=elems[acc],
                                                 expected=row[iz])
    return None
