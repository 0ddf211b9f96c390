"""Arithmetic for the finite field GF(p^k) and vectors over it.

Elements are canonical little-endian coefficient tuples in the polynomial
basis: ``(c0, c1, ..., c_{k-1})`` represents ``c0 + c1*t + ...`` with every
coefficient already reduced into ``[0, p)``.  Equality is tuple equality.
For prime fields (k = 1) this degenerates to single-residue tuples and the
arithmetic takes a fast integer path.

All operations are pure functions on immutable values; a :class:`FieldSpec`
is hashable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import errors

# A field element: little-endian coefficient tuple of length k.
Element = tuple[int, ...]

# Default irreducible moduli (little-endian, monic) keyed by field order.
# Re-validated by make_field every time, so a wrong entry fails loudly.
DEFAULT_MODULI: dict[int, tuple[int, int, tuple[int, ...]]] = {
    2: (2, 1, (0, 1)),
    3: (3, 1, (0, 1)),
    4: (2, 2, (1, 1, 1)),      # t^2 + t + 1
    5: (5, 1, (0, 1)),
    7: (7, 1, (0, 1)),
    8: (2, 3, (1, 1, 0, 1)),   # t^3 + t + 1
    9: (3, 2, (1, 0, 1)),      # t^2 + 1
    11: (11, 1, (0, 1)),
    13: (13, 1, (0, 1)),
    25: (5, 2, (2, 0, 1)),     # t^2 + 2
    27: (3, 3, (1, 2, 0, 1)),  # t^3 + 2t + 1
    49: (7, 2, (1, 0, 1)),     # t^2 + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_divmod(num: Sequence[int], den: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of little-endian polynomials over F_p; den must be monic."""
    num = list(num)
    dn = len(den) - 1
    while len(num) > dn and num and num[-1] == 0:
        num.pop()
    quot = [0] * max(len(num) - dn, 0)
    while len(num) - 1 >= dn and any(num):
        shift = len(num) - 1 - dn
        factor = num[-1] % p
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        while num and num[-1] == 0:
            num.pop()
    return quot, num


def _has_small_factor(modulus: Sequence[int], p: int, k: int) -> bool:
    """Trial-divide by every monic polynomial of degree 1..k//2."""
    from itertools import product as iproduct

    for deg in range(1, k // 2 + 1):
        for low in iproduct(range(p), repeat=deg):
            candidate = list(low) + [1]
            _, rem = _poly_divmod(modulus, candidate, p)
            if not any(rem):
                return True
    return False


@dataclass(frozen=True)
class FieldSpec:
    """A validated description of GF(p^k); construct through :func:`make_field`."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def zero(self) -> Element:
        return (0,) * self.k

    @property
    def one(self) -> Element:
        return (1,) + (0,) * (self.k - 1)

    def element_at(self, index: int) -> Element:
        """The element with integer encoding ``index`` (little-endian base-p digits)."""
        if not 0 <= index < self.q:
            raise ValueError(f"element index {index} out of range for q={self.q}")
        digits = []
        for _ in range(self.k):
            digits.append(index % self.p)
            index //= self.p
        return tuple(digits)

    def element_index(self, a: Element) -> int:
        """Integer encoding of a canonical element (inverse of :meth:`element_at`)."""
        idx = 0
        for c in reversed(a):
            idx = idx * self.p + c
        return idx

    def elements(self) -> Iterator[Element]:
        """All q elements in encoding order (zero first)."""
        for i in range(self.q):
            yield self.element_at(i)

    def scalar(self, value: int) -> Element:
        """Embed an integer into the prime subfield."""
        return (value % self.p,) + (0,) * (self.k - 1)


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build and validate GF(p^k) = F_p[t]/(modulus).

    ``modulus`` is a little-endian coefficient list of length k+1; entries are
    reduced mod p before validation.  When omitted, k = 1 uses the polynomial
    t and k >= 2 falls back to the built-in table for q = p^k.

    Raises NotPrime, ZeroDegree, NotMonic or Reducible on invalid input.
    """
    if not _is_prime(p):
        raise errors.NotPrime(f"p = {p} is not prime")
    if k < 1:
        raise errors.ZeroDegree(f"extension degree must be >= 1, got {k}")

    if modulus is None:
        if k == 1:
            modulus = (0, 1)
        else:
            q = p ** k
            if q not in DEFAULT_MODULI or DEFAULT_MODULI[q][0] != p:
                raise ValueError(f"no default modulus for q = {q}; pass one explicitly")
            modulus = DEFAULT_MODULI[q][2]

    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != k + 1:
        raise errors.NotMonic(
            f"modulus must have k+1 = {k + 1} coefficients, got {len(mod)}"
        )
    if mod[-1] != 1:
        raise errors.NotMonic("modulus must be monic")
    if k == 1 and mod != (0, 1):
        raise ValueError("for k = 1 the modulus must be the polynomial t")
    # Degree 2 and 3 reductions must contain a linear factor, so the root
    # check below covers k <= 3; higher degrees need factors up to k//2.
    if k >= 2 and _has_small_factor(mod, p, k):
        raise errors.Reducible(f"modulus {mod} factors over F_{p}")
    return FieldSpec(p=p, k=k, modulus=mod)


def default_field(q: int) -> FieldSpec:
    """GF(q) with the built-in modulus table; any prime q works without an entry."""
    if q in DEFAULT_MODULI:
        p, k, mod = DEFAULT_MODULI[q]
        return make_field(p, k, mod)
    if _is_prime(q):
        return make_field(q, 1)
    raise ValueError(f"no default modulus known for q = {q}")


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q as p^k with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"q = {q} is not a prime power")
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q  # q itself is prime
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return p, k


def validate_element(a: Element, F: FieldSpec) -> None:
    """Raise ValueError unless ``a`` is a canonical element of F."""
    if not isinstance(a, tuple) or len(a) != F.k:
        raise ValueError(f"element {a!r} does not have {F.k} coefficients")
    if any(not isinstance(c, int) or not 0 <= c < F.p for c in a):
        raise ValueError(f"element {a!r} has coefficients outside [0, {F.p})")


# ---------------------------------------------------------------------------
# element arithmetic


def fe_add(a: Element, b: Element, F: FieldSpec) -> Element:
    """a + b."""
    if F.k == 1:
        return ((a[0] + b[0]) % F.p,)
    return tuple((x + y) % F.p for x, y in zip(a, b))


def fe_neg(a: Element, F: FieldSpec) -> Element:
    """-a."""
    return tuple((-x) % F.p for x in a)


def fe_sub(a: Element, b: Element, F: FieldSpec) -> Element:
    """a - b."""
    if F.k == 1:
        return ((a[0] - b[0]) % F.p,)
    return tuple((x - y) % F.p for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _power_basis_reductions(F: FieldSpec) -> list[tuple[int, ...]]:
    """t^(k+i) mod modulus for i = 0..k-2, as little-endian length-k tuples."""
    p, k = F.p, F.k
    # t^k = -(low-order part of modulus)
    cur = [(-c) % p for c in F.modulus[:k]]
    out = [tuple(cur)]
    for _ in range(k - 2):
        # multiply by t: shift up, then reduce the overflowing t^k term
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            base = out[0]
            cur = [(c + top * r) % p for c, r in zip(cur, base)]
        out.append(tuple(cur))
    return out


def fe_mul(a: Element, b: Element, F: FieldSpec) -> Element:
    """a * b, schoolbook product reduced by the field modulus."""
    p, k = F.p, F.k
    if k == 1:
        return ((a[0] * b[0]) % p,)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    low = [c % p for c in prod[:k]]
    reductions = _power_basis_reductions(F)
    for i in range(k - 1):
        hi = prod[k + i] % p
        if hi:
            red = reductions[i]
            low = [(c + hi * r) % p for c, r in zip(low, red)]
    return tuple(low)


def fe_pow(a: Element, e: int, F: FieldSpec) -> Element:
    """a ** e by square-and-multiply, with the convention 0^0 = 1."""
    if e < 0:
        raise ValueError("negative exponent; invert first")
    result = F.one
    base = a
    while e:
        if e & 1:
            result = fe_mul(result, base, F)
        base = fe_mul(base, base, F)
        e >>= 1
    return result


def fe_inv(a: Element, F: FieldSpec) -> Element:
    """Multiplicative inverse, a^(q-2); raises DivisionByZero at 0."""
    if a == F.zero:
        raise errors.DivisionByZero("0 has no multiplicative inverse")
    return fe_pow(a, F.q - 2, F)


def inner_product(u: Sequence[Element], v: Sequence[Element], F: FieldSpec) -> Element:
    """Standard dot product sum(u_i * v_i) over F."""
    if len(u) != len(v):
        raise errors.DimensionMismatch(f"dimensions {len(u)} vs {len(v)}")
    acc = F.zero
    for x, y in zip(u, v):
        acc = fe_add(acc, fe_mul(x, y, F), F)
    return acc


# ---------------------------------------------------------------------------
# integer-encoded operation tables for hot loops (rank elimination, Gram
# matrices, dense tensors); indices follow FieldSpec.element_index


@dataclass(frozen=True)
class ArithTables:
    add: tuple[tuple[int, ...], ...]
    sub: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int | None, ...]
    pow_q_minus_1: tuple[int, ...]


@lru_cache(maxsize=None)
def arith_tables(F: FieldSpec) -> ArithTables:
    """q x q lookup tables over element encodings; cached per field."""
    elems = list(F.elements())
    q = F.q
    idx = {e: i for i, e in enumerate(elems)}
    add = tuple(
        tuple(idx[fe_add(elems[i], elems[j], F)] for j in range(q)) for i in range(q)
    )
    sub = tuple(
        tuple(idx[fe_sub(elems[i], elems[j], F)] for j in range(q)) for i in range(q)
    )
    mul = tuple(
        tuple(idx[fe_mul(elems[i], elems[j], F)] for j in range(q)) for i in range(q)
    )
    neg = tuple(idx[fe_neg(e, F)] for e in elems)
    inv: list[int | None] = [None]
    for e in elems[1:]:
        inv.append(idx[fe_inv(e, F)])
    powq = tuple(idx[fe_pow(e, q - 1, F)] for e in elems)
    return ArithTables(add=add, sub=sub, mul=mul, neg=neg, inv=tuple(inv),
                       pow_q_minus_1=powq)
