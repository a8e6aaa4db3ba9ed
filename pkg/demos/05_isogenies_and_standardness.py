"""Isogenies of root data and the standardness classifier.

Pretty-goodness transfers along isogenies whose cokernel is prime to p, and
it is exactly the essentially-standard condition, so one bit answers every
flavor of the question.
"""

from rootprimes import (
    IntMatrix,
    adjoint_to_simply_connected,
    check_gluing,
    classify,
    cokernel,
    decompose,
    preset,
    separable_at,
    smoothness_verdict,
    transfer_pretty_good,
)

# The Cartan matrix maps the adjoint lattice into the simply connected one;
# its cokernel is the fundamental group Z/(n+1) for type A_n.
for n in (1, 2, 3, 4):
    iso = adjoint_to_simply_connected("A", n)
    print(f"A{n}: cokernel {cokernel(iso)},  separable at 2: {separable_at(iso, 2)}")
print()

# When the cokernel order is prime to p, the pretty-good bits must agree.
iso = adjoint_to_simply_connected("A", 3)
for p in (2, 3, 5):
    src, tgt, applies = transfer_pretty_good(iso, p)
    print(f"A3 transfer at p={p}: applies={applies} source={src} target={tgt}")
print()

# The decomposition splits components into type-A blocks (p | n+1) and
# very-good blocks, and checks whether the central torus can absorb the glue.
for name, p in (("GL(3)", 3), ("Sum(SC(A2), SC(C2))", 3), ("SC(G2)", 5)):
    print(f"decompose {name} at {p}:", decompose(preset(name), p).to_dict())
print()

# The gluing matrix criterion: surjectivity onto a product of cyclic p-groups
# via elementary divisors, cross-checked against the mod-p rank.
check = check_gluing(IntMatrix.from_rows([[1, 0, 2], [0, 3, 1]]), (1, 2), 3)
print("gluing check:", check.to_dict())
print()

# The classifier: essentially standard == characteristic zero or pretty good.
for name, p in (("GL(5)", 2), ("SC(A1)", 2), ("SC(A1)", 0), ("AD(E6)", 5)):
    print(f"{name:8s} char {p}: {classify(preset(name), p)}  ->  {smoothness_verdict(preset(name), p)}")
