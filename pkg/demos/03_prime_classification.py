"""Bad, good, very good, and pretty good primes.

The pretty-good condition is the exact dividing line for smoothness of all
scheme-theoretic centralizers in the corresponding reductive group: the
report's pretty_good bit is that verdict.
"""

from rootprimes import (
    bad_primes,
    failing_prime_bound,
    preset,
    pretty_good,
    pretty_good_bruteforce,
    primes_upto,
    report,
    very_good,
)

# The classical examples: GL2 vs SL2 vs PGL2 at p = 2.
for name in ("GL(2)", "SC(A1)", "AD(A1)"):
    r = report(preset(name), 2)
    print(f"{name:8s} p=2: bad={r.bad} very_good={r.very_good} pretty_good={r.pretty_good} "
          f"center_smooth={r.center_smooth}")
print()

# Bad primes come from highest-root coefficients.
for name in ("SC(A5)", "SC(B4)", "SC(F4)", "SC(E8)"):
    print(f"bad primes of {name}:", sorted(bad_primes(preset(name))) or "none")
print()

# Only finitely many primes can fail; the bound is explicit.
for name in ("SC(A1)", "GL(4)", "SC(E8)", "Sum(SC(A3), SC(G2))"):
    d = preset(name)
    bound = failing_prime_bound(d).bound
    failing = [p for p in primes_upto(bound) if not pretty_good(d, p)]
    print(f"{name:20s} bound={bound}  not pretty good: {failing or 'none'}")
print()

# The fast criterion agrees with the subset-quantified definition.
d = preset("Sum(SC(A2), GL(2))")
for p in (2, 3, 5):
    fast = pretty_good(d, p)
    brute = pretty_good_bruteforce(d, p)
    print(f"SC(A2)+GL(2) at p={p}: fast={fast} brute-force={brute} agree={fast == brute}")
print()

# Very good differs from pretty good exactly through the lattice glue.
print("2 very good for GL(2)?", very_good(preset("GL(2)"), 2),
      "| 2 pretty good for GL(2)?", pretty_good(preset("GL(2)"), 2))
