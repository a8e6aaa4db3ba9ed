"""Root data: presets, axioms, duality, components, weight lattices.

A root datum couples a rank-r character lattice X and its dual Y with
matching finite sets of roots and coroots.  Presets cover the simply
connected and adjoint realizations of every Cartan type, GL(n), tori, and
direct sums; anything else enters as raw JSON.
"""

from rootprimes import (
    RootDatum,
    cartan_type,
    components,
    dual,
    preset,
    same_datum,
    simple_system,
    validate,
    weight_lattice_quotients,
)

sl2 = preset("SC(A1)")
print("SC(A1) roots / coroots:", sl2.roots, sl2.coroots)
print("axioms:", "ok" if not validate(sl2) else validate(sl2))

# The dual datum swaps the two sides; SL2 and PGL2 are dual to each other.
print("dual(SC(A1)) is AD(A1):", same_datum(dual(sl2), preset("AD(A1)")))
print()

# A datum that breaks an axiom reports every violation by name.
broken = RootDatum(rank=1, roots=((1,),), coroots=((1,),))
print("violations of a fake datum:", validate(broken))
print()

# Component recognition identifies Cartan types from the pairing matrix.
datum = preset("Sum(GL(3), SC(G2), Torus(2))")
print("components of GL(3) + G2 + torus:", cartan_type(datum))
for comp in components(datum):
    print(f"  {comp.series}{comp.rank}: {len(comp.root_indices)} roots,"
          f" base at indices {comp.simple_indices}")
print()

# E8 from reflection closure: 240 roots, 8 simple ones.
e8 = preset("SC(E8)")
print("E8:", e8.num_roots, "roots,", len(simple_system(e8)), "simple")
print()

# The fundamental group Lambda / Z.roots of each simply connected type.
for name in ("SC(A3)", "SC(B3)", "SC(D4)", "SC(E7)", "SC(G2)"):
    d = preset(name)
    print(f"fundamental group of {name}:", weight_lattice_quotients(d, range(d.num_roots)))
