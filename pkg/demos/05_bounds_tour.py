#!/usr/bin/env python3
"""Evaluate every closed-form bound and scan them for mutual consistency.

The scan reports lower > upper conflicts instead of failing: one printed
lower-bound formula (the even-k multiplanar bound, implemented verbatim)
genuinely exceeds the exact value at small n, and surfacing that is the
scan's job.
"""

from bookcross import (
    asymptotic_bounds,
    block_cyclic_bound,
    consistency_scan,
    exact_crossing_number,
    general_lower,
    multiplanar_lower_even,
    nonembeddable_width,
    riskin_value,
    turan_lower,
    zarankiewicz,
)

print("Z(6,6) =", zarankiewicz(6, 6))
print("1-page value of K_{3,6}:", riskin_value(3, 6))
print("clique-partition bound turan_lower(3, 5, 4) =", turan_lower(3, 5, 4))

print("\nexact k-page crossing numbers of K_{k+1,n}:")
for k in range(2, 7):
    row = [exact_crossing_number(k, n) for n in range(1, 16)]
    print(f"  k={k}: {row}")

print("\nsandwich bounds for K_{17,n} at k=16:")
for n in [100, 1000]:
    lo, hi = asymptotic_bounds(16, n)
    print(f"  n={n}: {float(lo):.1f} < value <= {float(hi):.1f}")

print("\nnon-embeddable width (no k-page embedding at or beyond this n):")
for k in [1, 4, 9, 16]:
    print(f"  k={k}: n >= {nonembeddable_width(k)}")

print("\nblock-cyclic upper bound vs general lower bound for K_{12,12}:")
for k in [2, 4, 6]:
    glb = general_lower(k, 12, 12)
    print(
        f"  k={k}: lower {float(glb.value):.1f} (valid={glb.valid}), "
        f"upper {block_cyclic_bound(k, 12, 12)}"
    )

print("\nconsistency scan, k=4, n <= 30:")
report = consistency_scan([4], range(1, 31))
for v in report.violations:
    print(
        f"  n={v.n}: {v.lower_source} = {v.lower_value} exceeds "
        f"{v.upper_source} = {v.upper_value}"
    )
print(
    "(the verbatim even-k formula value 12 at n=12 exceeds the exact value 6;\n"
    " it is reported, never silently corrected)"
)
print("\nmultiplanar_lower_even(4, 24) =", multiplanar_lower_even(4, 24), "(fine at larger n)")
