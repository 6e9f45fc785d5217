"""
Pairs with a common factor
==========================

When b = gcd(s, t) >= 2 there are finitely many d-distinct cores only if
b <= d. The answer is a rescaling of the coprime answer for (s/b, t/b) with
d // b.
"""

from corehook.errors import InfiniteFamilyError
from corehook.maxhook import generalized_ideal, max_hook_general, witness_core
from corehook.oracle import oracle_max_hook

for s, t, d in [(14, 20, 2), (14, 20, 3), (4, 6, 2), (6, 9, 4), (3, 9, 3)]:
    r = max_hook_general(s, t, d)
    base = f" from H={r.reduced.H} of ({r.reduced.s},{r.reduced.t})" if r.reduced else ""
    print(f"({s},{t}) d={d}: H={r.H} [{r.case_tag}]{base}; brute force {oracle_max_hook(s, t, d).H_true}")

# Too small a d gives infinitely many cores
try:
    max_hook_general(4, 6, 1)
except InfiniteFamilyError as exc:
    print("(4,6) d=1:", exc)

# The witness for (14, 20, 2) is the scaled down-set of 19 in <7, 10>
beta, parts = witness_core(14, 20, 2)
print("witness beta:", sorted(beta, reverse=True), "partition:", parts)
print("<41>_2 in <7,10>:", sorted(generalized_ideal(41, 7, 10, 2).members, reverse=True))
