"""Machine-checkable certificates for the smoothness verdict at a prime.

Four kinds:

* ``pretty-good-proof``: the finite criterion's data (bad primes and the two
  quotients X/Z.roots, Y/Z.coroots, all p-torsion-free).
* ``center-torsion``: X/Z.roots with p-torsion; the center itself is the
  witness.
* ``bad-prime-subsystem``: a crossed-node subsystem whose root-lattice
  quotient carries p-torsion cyclic of order the p-part of the crossed
  coefficient.
* ``coxeter-torsion``: a Weyl element s of a type-A part with p-torsion in
  X/(s-1)X, on the datum itself or on its dual.

Every certificate embeds the full datum so it verifies standalone:
:func:`verify_certificate` re-runs the named check from the payload alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ClassificationGapError
from .intlin import FinAbGroup, IntMatrix, is_prime, p_torsion_free, quotient_group
from .primes import bad_primes, report, x_mod_root_lattice, y_mod_coroot_lattice
from .rootdatum import RootDatum, components, dual, ensure_valid
from .subsystems import (
    WeylElement,
    _coxeter_for_components,
    cross_out_for_prime,
    cross_out_node,
    highest_roots,
)

PRETTY_GOOD_PROOF = "pretty-good-proof"
CENTER_TORSION = "center-torsion"
BAD_PRIME_SUBSYSTEM = "bad-prime-subsystem"
COXETER_TORSION = "coxeter-torsion"

KINDS = (PRETTY_GOOD_PROOF, CENTER_TORSION, BAD_PRIME_SUBSYSTEM, COXETER_TORSION)


@dataclass(frozen=True)
class Certificate:
    kind: str
    datum: RootDatum
    p: int
    payload: dict

    def to_dict(self) -> dict:
        return {"kind": self.kind, "datum": self.datum.to_dict(), "p": self.p, "payload": self.payload}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(
            kind=str(data["kind"]),
            datum=RootDatum.from_dict(data["datum"]),
            p=int(data["p"]),
            payload=dict(data["payload"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def _root_lattice_quotient(datum: RootDatum, subset_indices) -> FinAbGroup:
    """Z.roots / Z.subset for a subset of root indices."""
    from .rootdatum import root_lattice

    anchor = root_lattice(datum)
    rows = []
    for i in subset_indices:
        c = anchor.coords(datum.roots[i])
        if c is None:
            raise ValueError("subset root outside the root lattice")
        rows.append(c)
    return quotient_group(anchor.rank, IntMatrix.from_rows(rows, cols=anchor.rank))


def _failing_type_a_positions(datum: RootDatum, p: int) -> list[int]:
    return [
        ci
        for ci, comp in enumerate(components(datum))
        if comp.series == "A" and (comp.rank + 1) % p == 0
    ]


def _coxeter_witness(datum: RootDatum, p: int):
    """(weyl element, X/(s-1)X) for the p-failing type-A part, or None."""
    failing = _failing_type_a_positions(datum, p)
    if not failing:
        return None
    s = _coxeter_for_components(datum, failing)
    image_rows = (s.matrix - IntMatrix.identity(datum.rank)).transpose()
    group = quotient_group(datum.rank, image_rows)
    if p_torsion_free(group, p):
        return None
    return s, group


def build_certificate(datum: RootDatum, p: int) -> Certificate:
    """Construct a certificate for (datum, p).

    Branch order: pretty-good proof; center torsion; crossed-node subsystem
    at a bad prime; Coxeter torsion on the p-failing type-A part of the datum
    or of its dual.  A valid datum always hits a branch; falling through
    raises ClassificationGapError.
    """
    ensure_valid(datum)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rep = report(datum, p)

    if rep.pretty_good:
        payload = {
            "bad_primes": sorted(bad_primes(datum)),
            "x_mod_root_lattice": x_mod_root_lattice(datum).to_dict(),
            "y_mod_coroot_lattice": y_mod_coroot_lattice(datum).to_dict(),
        }
        return Certificate(PRETTY_GOOD_PROOF, datum, p, payload)

    if not rep.center_smooth:
        payload = {"x_mod_root_lattice": x_mod_root_lattice(datum).to_dict()}
        return Certificate(CENTER_TORSION, datum, p, payload)

    if rep.bad:
        found = cross_out_for_prime(datum, p)
        if found is None:
            raise ClassificationGapError("bad prime without a divisible coefficient")
        subset, component, node, coefficient = found
        quotient = _root_lattice_quotient(datum, subset.sorted_indices)
        payload = {
            "component": component,
            "node": node,
            "crossed_coefficient": coefficient,
            "subsystem": list(subset.sorted_indices),
            "root_lattice_quotient": quotient.to_dict(),
        }
        return Certificate(BAD_PRIME_SUBSYSTEM, datum, p, payload)

    for side, side_datum in (("primary", datum), ("dual", dual(datum))):
        witness = _coxeter_witness(side_datum, p)
        if witness is not None:
            s, group = witness
            payload = {
                "side": side,
                "weyl_matrix": s.matrix.to_rows(),
                "character_quotient": group.to_dict(),
            }
            return Certificate(COXETER_TORSION, datum, p, payload)

    raise ClassificationGapError(
        f"no certificate branch applies to p={p}; this contradicts the smoothness dichotomy"
    )


def verify_certificate(cert: Certificate) -> bool:
    """Re-run the named check from the embedded datum and payload."""
    try:
        datum = ensure_valid(cert.datum)
    except ValueError:
        return False
    p = cert.p
    if not is_prime(p):
        return False
    payload = cert.payload

    if cert.kind == PRETTY_GOOD_PROOF:
        x_q = x_mod_root_lattice(datum)
        y_q = y_mod_coroot_lattice(datum)
        return (
            sorted(bad_primes(datum)) == list(payload["bad_primes"])
            and p not in bad_primes(datum)
            and FinAbGroup.from_dict(payload["x_mod_root_lattice"]) == x_q
            and FinAbGroup.from_dict(payload["y_mod_coroot_lattice"]) == y_q
            and p_torsion_free(x_q, p)
            and p_torsion_free(y_q, p)
        )

    if cert.kind == CENTER_TORSION:
        x_q = x_mod_root_lattice(datum)
        return FinAbGroup.from_dict(payload["x_mod_root_lattice"]) == x_q and not p_torsion_free(
            x_q, p
        )

    if cert.kind == BAD_PRIME_SUBSYSTEM:
        component = int(payload["component"])
        node = int(payload["node"])
        coefficient = int(payload["crossed_coefficient"])
        comps = components(datum)
        if not 0 <= component < len(comps):
            return False
        coeffs = highest_roots(datum)[component].coefficients
        if not 0 <= node < len(coeffs) or coeffs[node] != coefficient or coefficient % p:
            return False
        subset = cross_out_node(datum, component, node)
        if list(subset.sorted_indices) != list(payload["subsystem"]):
            return False
        quotient = _root_lattice_quotient(datum, subset.sorted_indices)
        if FinAbGroup.from_dict(payload["root_lattice_quotient"]) != quotient:
            return False
        # the p-torsion must be cyclic of order the p-part of the coefficient
        p_part = 1
        m = coefficient
        while m % p == 0:
            m //= p
            p_part *= p
        return quotient.p_part(p) == (p_part,)

    if cert.kind == COXETER_TORSION:
        side = payload.get("side", "primary")
        side_datum = datum if side == "primary" else dual(datum)
        matrix = IntMatrix.from_rows(payload["weyl_matrix"], cols=side_datum.rank)
        if matrix.rows != side_datum.rank:
            return False
        w = WeylElement(matrix)
        if not matrix.is_unimodular() or not w.permutes_roots(side_datum):
            return False
        image_rows = (matrix - IntMatrix.identity(side_datum.rank)).transpose()
        group = quotient_group(side_datum.rank, image_rows)
        if FinAbGroup.from_dict(payload["character_quotient"]) != group:
            return False
        return not p_torsion_free(group, p)

    return False
