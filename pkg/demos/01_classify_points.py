"""
Classifying single parameter pairs
==================================

The alternated iteration z -> z^2 + c1 (even steps) / z -> z^2 + c2 (odd
steps) produces a filled set whose connectivity falls into exactly one of
three classes, decided by the two critical orbits of the composed quartic
map w -> (w^2 + c1)^2 + c2:

* both orbits bounded         -> connected
* both orbits escape          -> totally disconnected (a Cantor dust)
* exactly one orbit escapes   -> disconnected but not totally disconnected
"""

from altjulia import MapParams, classify, critical_points, orbit_fate

# --- a connected pair: both critical orbits settle onto attracting cycles
p = MapParams(-0.4 + 0.2j, -0.4)
result = classify(p)
print(f"c1={p.c1}  c2={p.c2}")
print(f"  class          : {result.connectivity.label}")
print(f"  orbit of 0     : {result.fate_zero}")
print(f"  orbit of crit  : {result.fate_crit}")

# --- a merely disconnected pair: the orbit of 0 locks onto a 3-cycle while
#     the second critical orbit escapes, so infinitely many components remain
p = MapParams(-1.05j, 0.71 - 0.07j)
result = classify(p)
print(f"\nc1={p.c1}  c2={p.c2}")
print(f"  class          : {result.connectivity.label}")
print(f"  orbit of 0     : {result.fate_zero}")
print(f"  orbit of crit  : {result.fate_crit}")

# --- a totally disconnected pair: both orbits blow past the escape radius
p = MapParams(1, 1)
result = classify(p)
print(f"\nc1={p.c1}  c2={p.c2}")
print(f"  class          : {result.connectivity.label}")
print(f"  orbit of 0     : {result.fate_zero}")
print(f"  orbit of crit  : {result.fate_crit}")

# --- the evidence behind a verdict is reproducible piece by piece: the
#     classifier's fates equal standalone orbit analyses of 0 and sqrt(-c1)
p = MapParams(-0.4 + 0.2j, -0.4)
zero, crit = critical_points(p.c1)
print(f"\ncritical points of c1={p.c1}: {zero} and ±{crit}")
print(f"  orbit_fate(0)    = {orbit_fate(zero, p)}")
print(f"  orbit_fate(crit) = {orbit_fate(crit, p)}")
