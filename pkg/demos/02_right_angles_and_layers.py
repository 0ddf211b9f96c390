#!/usr/bin/env python3
"""Right angles in F_q^n and the weight-(q-1) zero-one layer.

A triple x, y, z of distinct points forms a right angle with vertex x when
<z - x, y - x> = 0.  The layer of all 0/1 vectors with exactly q-1 ones has
size C(n, q-1); whether it actually avoids right angles is an empirical
question, answered here by the verifier for a range of dimensions.
"""

from rightangles import (
    construction_layer,
    default_field,
    find_right_angle,
    is_right_angle,
    lower_bound_size,
    point_from_ints,
    triple_value,
)
from rightangles.serial import point_to_json, witness_to_json

F3 = default_field(3)

print("== the predicate ==")
x = point_from_ints(F3, [0, 0])
y = point_from_ints(F3, [1, 0])
z = point_from_ints(F3, [0, 1])
print("corner (0,0)-(1,0)-(0,1):", is_right_angle(x, y, z, F3))

x5 = point_from_ints(F3, [1, 1, 0, 0, 0])
y5 = point_from_ints(F3, [0, 0, 1, 1, 0])
z5 = point_from_ints(F3, [0, 0, 0, 1, 1])
print("weight-2 triple in F_3^5: value =", triple_value(x5, y5, z5, F3),
      "-> right angle:", is_right_angle(x5, y5, z5, F3))

print()
print("== layer verdicts over F_3 (weight-2 zero-one vectors) ==")
print(f"{'n':>3} {'size C(n,2)':>12} verdict")
for n in range(2, 9):
    layer = construction_layer(n, 3)
    w = find_right_angle(layer)
    assert len(layer.points) == lower_bound_size(n, 3)
    if w is None:
        verdict = "right-angle-free"
    else:
        d = witness_to_json(w, layer)
        verdict = f"right angle at vertex {d['vertex']} arms {d['arm1']}/{d['arm2']}"
    print(f"{n:>3} {len(layer.points):>12} {verdict}")

print()
print("so the layer is free only up to n = 3 here; from n = 4 on the")
print("verifier exhibits explicit right angles inside it.  C(n, q-1) is")
print("therefore reported as the layer size, while trusted lower bounds for")
print("the maximum come from verified search witnesses (see demo 04).")

print()
print("== a verified layer, inlined ==")
layer3 = construction_layer(3, 3)
for pt in layer3.points:
    print("  ", point_to_json(pt, F3))
print("find_right_angle:", find_right_angle(layer3))
