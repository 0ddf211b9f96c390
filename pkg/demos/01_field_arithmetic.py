#!/usr/bin/env python3
"""Tour of the exact field layer: building GF(p^k), element arithmetic,
and the standard inner product on coordinate vectors.

Elements are little-endian coefficient tuples; for prime fields they are
1-tuples holding the residue.  Every operation is exact.
"""

from rightangles import (
    default_field,
    errors,
    fe_add,
    fe_inv,
    fe_mul,
    fe_pow,
    inner_product,
    make_field,
)

print("== prime field F_3 ==")
F3 = make_field(3)
print("elements:", list(F3.elements()))
print("2 * 2 =", fe_mul((2,), (2,), F3), " inv(2) =", fe_inv((2,), F3))

print()
print("== extension field F_9 = F_3[t]/(t^2 + 1) ==")
F9 = make_field(3, 2, (1, 0, 1))
t = (0, 1)
print("t * t =", fe_mul(t, t, F9), " (t^2 = -1 = 2)")
print("(1 + 2t)(2 + t) =", fe_mul((1, 2), (2, 1), F9))
print("inv(t) =", fe_inv(t, F9), " check:", fe_mul(t, fe_inv(t, F9), F9))

print()
print("the validator rejects bad moduli loudly:")
for p, k, mod in [(4, 1, (0, 1)), (3, 2, (2, 0, 1))]:
    try:
        make_field(p, k, mod)
    except errors.Error as e:
        print(f"  make_field({p}, {k}, {mod}) -> {type(e).__name__}: {e}")

print()
print("== multiplicative group order: a^(q-1) = 1 for a != 0 ==")
for q in (3, 9, 27):
    F = default_field(q)
    ok = all(fe_pow(a, q - 1, F) == F.one for a in F.elements() if a != F.zero)
    print(f"  q = {q:2d}: {'holds for all' if ok else 'VIOLATED'}"
          f" {q - 1} nonzero elements")

print()
print("== inner products over F_3^2 ==")
u = ((1,), (0,))
v = ((0,), (1,))
w = ((2,), (2,))
print("(1,0).(0,1) =", inner_product(u, v, F3))
print("(2,2).(2,2) =", inner_product(w, w, F3), " (4 + 4 = 8 = 2 mod 3)")
print("bilinearity:",
      inner_product(tuple(fe_add(a, b, F3) for a, b in zip(u, w)), v, F3),
      "==",
      fe_add(inner_product(u, v, F3), inner_product(w, v, F3), F3))
