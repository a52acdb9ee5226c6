# Closed-form decisions on Z against a vectorized bounded search

import time

import numpy as np

from phir import PhiEmpty, PhiOmega, PhiPower, PhiZero, Z, Zn, is_phi_r_ideal, make_product, principal

R = Z()
phis = [PhiEmpty(), PhiZero(), PhiPower(2), PhiOmega()]
ds = np.arange(0, 41)

rows = []
for phi in phis:
    for d in ds:
        if d == 1:
            continue
        I = principal(R, int(d))
        t0 = time.perf_counter()
        closed = is_phi_r_ideal(R, I, phi, method="closed")
        t1 = time.perf_counter()
        searched = is_phi_r_ideal(R, I, phi, bound=300, method="search")
        t2 = time.perf_counter()
        rows.append((phi.name, int(d), closed.failed == searched.failed, t1 - t0, t2 - t1))

agree = np.array([r[2] for r in rows])
closed_t = np.array([r[3] for r in rows])
search_t = np.array([r[4] for r in rows])
print(f"{len(rows)} (phi, <d>) pairs, agreement {agree.mean():.0%}")
print(f"mean time closed {closed_t.mean() * 1e3:.2f} ms, search {search_t.mean() * 1e3:.2f} ms")

print("\nwhich <d> are phi-r ideals of Z")
for phi in phis:
    held = [d for name, d, *_ in rows if name == phi.name and is_phi_r_ideal(R, principal(R, d), phi).ok]
    print(f"  {phi.name:<6} {held}")

# in Z x Z/4 the Z component must be 0 or Z, while any ideal of Z/4 works
P = make_product([R, Zn(4)])
print(f"\nphi-r generators (d, c) of {P}, d < 8")
for phi in phis:
    held = [(d, c) for d in range(8) for c in range(4) 
            if principal(P, (d, c)).is_proper and is_phi_r_ideal(P, principal(P, (d, c)), phi).ok]
    print(f"  {phi.name:<6} {held}")

v = is_phi_r_ideal(R, principal(R, 6), PhiZero(), bound=300, method="search")
print("\nsearch witness for <6>, phi = zero:", v)
