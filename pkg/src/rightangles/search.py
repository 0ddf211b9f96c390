"""Exact and heuristic maximum right-angle-free subsets of F_q^n.

Three solvers share one candidate model: points are indexed in lexicographic
(encoding) order, a partial set is a sorted index list, and a new point is
admissible only if it closes no right angle with any chosen pair, tested with
the triple's vertex at each of the three points.

``exhaustive_max`` enumerates subsets outright and is the ground-truth oracle
for tiny spaces (q^n <= 12).  ``branch_and_bound_max`` does depth-first
extension with the translation symmetry "the zero vector is in the set" and
the bound |chosen| + |candidates| <= best.  ``greedy_lower`` is a seeded
randomized insertion heuristic for quick lower-bound witnesses.

Every returned witness is re-verified with find_right_angle before the
result is handed back.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import errors
from .geometry import (
    PointSet,
    _angle_value_from_gram,
    find_right_angle,
    space_points,
)
from .gf import FieldSpec, arith_tables, default_field

EXHAUSTIVE_CAP = 12

CHECKPOINT_VERSION = 1


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a solver run; all None means run to completion."""

    max_nodes: int | None = None
    max_seconds: float | None = None
    threads: int = 1


@dataclass(frozen=True)
class SearchCheckpoint:
    """Resumable state of a branch-and-bound run.

    ``completed_prefixes`` lists the fully explored top-level branches, each
    identified by the index list of its forced inclusions (currently the
    single second-point index; the zero vector is always point 0).
    """

    version: int
    n: int
    q: int
    completed_prefixes: tuple[tuple[int, ...], ...]
    best_indices: tuple[int, ...]
    best_size: int
    nodes: int


@dataclass(frozen=True)
class SearchResult:
    n: int
    q: int
    best: PointSet
    size: int
    status: str  # "exact" | "lower_bound"
    nodes: int
    elapsed: float
    config: dict
    checkpoint: SearchCheckpoint | None = None


class _Budget:
    """Mutable run-state for node/time limits."""

    def __init__(self, budget: SearchBudget | None, start_nodes: int = 0):
        b = budget or SearchBudget()
        self.max_nodes = b.max_nodes
        self.deadline = (
            time.monotonic() + b.max_seconds if b.max_seconds is not None else None
        )
        self.nodes = start_nodes
        self.stopped = False

    def tick(self) -> bool:
        """Count one node; True while the run may continue."""
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.stopped = True
        elif self.deadline is not None and time.monotonic() > self.deadline:
            self.stopped = True
        return not self.stopped


def _resolve_field(q: int, fld: FieldSpec | None) -> FieldSpec:
    F = fld if fld is not None else default_field(q)
    if F.q != q:
        raise ValueError(f"field has order {F.q}, expected {q}")
    return F


def _space_gram(F: FieldSpec, n: int):
    """Point list plus an encoded Gram lookup.

    Below ~1024 points the full N x N table is materialized; above that,
    inner products are computed on demand from encoded coordinates.
    """
    pts = space_points(F, n)
    t = arith_tables(F)
    add, mul = t.add, t.mul
    enc = [tuple(F.element_index(c) for c in p) for p in pts]
    N = len(pts)
    if N <= 1024:
        g = [[0] * N for _ in range(N)]
        for i in range(N):
            u = enc[i]
            for j in range(i, N):
                acc = 0
                for a, b in zip(u, enc[j]):
                    acc = add[acc][mul[a][b]]
                g[i][j] = acc
                g[j][i] = acc

        def gram(i: int, j: int) -> int:
            return g[i][j]
    else:
        def gram(i: int, j: int) -> int:
            acc = 0
            for a, b in zip(enc[i], enc[j]):
                acc = add[acc][mul[a][b]]
            return acc

    return pts, gram


def _make_triple_free(gram, add, sub):
    """Predicate: indices (a, b, c) pairwise distinct close no right angle."""

    def triple_free(a: int, b: int, c: int) -> bool:
        gab = gram(a, b)
        gac = gram(a, c)
        gbc = gram(b, c)
        # vertex a: <c-a, b-a>
        if add[sub[sub[gbc][gac]][gab]][gram(a, a)] == 0:
            return False
        # vertex b: <c-b, a-b>
        if add[sub[sub[gac][gbc]][gab]][gram(b, b)] == 0:
            return False
        # vertex c: <b-c, a-c>
        if add[sub[sub[gab][gbc]][gac]][gram(c, c)] == 0:
            return False
        return True

    return triple_free


def _verify_and_build(F: FieldSpec, n: int, pts, indices: Iterable[int]) -> PointSet:
    chosen = PointSet(field=F, n=n, points=tuple(pts[i] for i in sorted(indices)))
    witness = find_right_angle(chosen)
    if witness is not None:
        raise RuntimeError(f"solver produced a set with a right angle: {witness}")
    return chosen


def _subset_free(indices, triple_free) -> bool:
    idx = list(indices)
    for a, b, c in combinations(idx, 3):
        if not triple_free(a, b, c):
            return False
    return True


def exhaustive_max(n: int, q: int, budget: SearchBudget | None = None,
                   fld: FieldSpec | None = None) -> SearchResult:
    """Ground-truth maximum by subset enumeration, size-descending.

    Only for q^n <= 12 (2^(q^n) subsets).  The first free subset found at a
    given size is a maximum, so the scan stops there.
    """
    F = _resolve_field(q, fld)
    N = F.q ** n
    if N > EXHAUSTIVE_CAP:
        raise errors.TooLarge(f"q^n = {N} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
    start = time.monotonic()
    pts, gram = _space_gram(F, n)
    t = arith_tables(F)
    triple_free = _make_triple_free(gram, t.add, t.sub)
    state = _Budget(budget)

    best = [0]  # a single point is always free
    status = "exact"
    done = False
    for size in range(N, 1, -1):
        for subset in combinations(range(N), size):
            if not state.tick():
                status = "lower_bound"
                done = True
                break
            if _subset_free(subset, triple_free):
                best = list(subset)
                done = True
                break
        if done:
            break

    result_set = _verify_and_build(F, n, pts, best)
    return SearchResult(
        n=n, q=q, best=result_set, size=len(best), status=status,
        nodes=state.nodes, elapsed=time.monotonic() - start,
        config={"method": "exhaustive", "budget": _budget_echo(budget)},
    )


def _budget_echo(budget: SearchBudget | None) -> dict:
    b = budget or SearchBudget()
    return {"max_nodes": b.max_nodes, "max_seconds": b.max_seconds,
            "threads": b.threads}


def _orbit_minimal(F: FieldSpec, enc) -> list[bool]:
    """Flag points that are minimal in their orbit under coordinate
    permutation and nonzero scaling (the symmetries fixing the zero vector).

    The orbit minimum of a point is obtained by scaling with the best factor
    and sorting the coordinates ascending, so membership is a direct check.
    """
    mul = arith_tables(F).mul
    q = F.q
    flags = []
    for e in enc:
        canonical = min(
            tuple(sorted(mul[lam][c] for c in e)) for lam in range(1, q)
        )
        flags.append(tuple(e) == canonical)
    return flags


def branch_and_bound_max(n: int, q: int, budget: SearchBudget | None = None,
                         fld: FieldSpec | None = None,
                         orbit_reduce: bool = False,
                         resume: SearchCheckpoint | None = None) -> SearchResult:
    """Depth-first maximum search with translation symmetry and pruning.

    The zero vector is fixed as the first member (any free set has a
    translate containing it), candidates are filtered against every chosen
    pair in all three vertex roles, and a branch is cut when
    |chosen| + |candidates| <= best.  Inclusion is explored before exclusion
    and the point order is lexicographic, so runs are reproducible.

    ``orbit_reduce`` additionally restricts the second point to
    lexicographically minimal representatives under coordinate permutation
    and nonzero scaling; it changes which witness is found but not the size.

    On budget exhaustion the best set so far is returned with status
    "lower_bound" and a checkpoint describing the finished top-level
    branches, which a later call may ``resume`` from.
    """
    F = _resolve_field(q, fld)
    start = time.monotonic()
    pts, gram = _space_gram(F, n)
    N = len(pts)
    t = arith_tables(F)
    triple_free = _make_triple_free(gram, t.add, t.sub)

    if resume is not None:
        if resume.version != CHECKPOINT_VERSION:
            raise ValueError(f"unsupported checkpoint version {resume.version}")
        if (resume.n, resume.q) != (n, q):
            raise ValueError("checkpoint was produced for a different instance")
        best = list(resume.best_indices)
        done_prefixes = {p for p in resume.completed_prefixes}
        start_nodes = resume.nodes
    else:
        best = [0]
        done_prefixes = set()
        start_nodes = 0

    state = _Budget(budget, start_nodes=start_nodes)

    def extend(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if state.stopped or not state.tick():
            return
        if len(chosen) + len(candidates) <= len(best):
            return
        for pos, v in enumerate(candidates):
            if state.stopped:
                return
            if len(chosen) + len(candidates) - pos <= len(best):
                return  # remaining candidates cannot beat the incumbent
            filtered = []
            for w in candidates[pos + 1:]:
                ok = True
                for u in chosen:
                    if not triple_free(u, v, w):
                        ok = False
                        break
                if ok:
                    filtered.append(w)
            chosen.append(v)
            extend(chosen, filtered)
            chosen.pop()

    if orbit_reduce:
        enc = [tuple(F.element_index(c) for c in p) for p in pts]
        second_ok = _orbit_minimal(F, enc)
    else:
        second_ok = [True] * N

    # Top level: sets containing only the zero vector, then one subtree per
    # choice of minimal second point.
    if not state.stopped:
        state.tick()
    for v in range(1, N):
        if state.stopped:
            break
        if (v,) in done_prefixes:
            continue
        if not second_ok[v]:
            continue
        if 1 + (N - v) <= len(best):
            # even taking every later point cannot beat the incumbent; the
            # remaining prefixes are finished by this bound
            done_prefixes.update((w,) for w in range(v, N) if second_ok[w])
            break
        filtered = [w for w in range(v + 1, N) if triple_free(0, v, w)]
        extend([0, v], filtered)
        if not state.stopped:
            done_prefixes.add((v,))

    status = "lower_bound" if state.stopped else "exact"
    result_set = _verify_and_build(F, n, pts, best)
    checkpoint = SearchCheckpoint(
        version=CHECKPOINT_VERSION, n=n, q=q,
        completed_prefixes=tuple(sorted(done_prefixes)),
        best_indices=tuple(sorted(best)),
        best_size=len(best), nodes=state.nodes,
    )
    return SearchResult(
        n=n, q=q, best=result_set, size=len(best), status=status,
        nodes=state.nodes, elapsed=time.monotonic() - start,
        config={"method": "branch_and_bound", "orbit_reduce": orbit_reduce,
                "budget": _budget_echo(budget), "resumed": resume is not None},
        checkpoint=checkpoint,
    )


def greedy_lower(n: int, q: int, seed: int = 0, restarts: int = 1,
                 fld: FieldSpec | None = None) -> SearchResult:
    """Best-of-restarts randomized greedy insertion; always a lower bound.

    Each restart shuffles the point order with the shared seeded generator
    and inserts every point that closes no right angle with the pairs already
    chosen.  Deterministic for a fixed seed.
    """
    import random

    F = _resolve_field(q, fld)
    start = time.monotonic()
    pts, gram = _space_gram(F, n)
    N = len(pts)
    t = arith_tables(F)
    triple_free = _make_triple_free(gram, t.add, t.sub)
    rng = random.Random(seed)

    best: list[int] = [0]
    nodes = 0
    for _ in range(max(1, restarts)):
        order = list(range(N))
        rng.shuffle(order)
        chosen: list[int] = []
        for v in order:
            nodes += 1
            ok = True
            for a, b in combinations(chosen, 2):
                if not triple_free(a, b, v):
                    ok = False
                    break
            if ok:
                chosen.append(v)
        if len(chosen) > len(best):
            best = chosen
    result_set = _verify_and_build(F, n, pts, best)
    return SearchResult(
        n=n, q=q, best=result_set, size=len(best), status="lower_bound",
        nodes=nodes, elapsed=time.monotonic() - start,
        config={"method": "greedy", "seed": seed, "restarts": restarts},
    )
