"""Garside recognition for divisibility monoids.

A divisibility monoid is Garside exactly when every two generators have a
common right multiple.  In that case Δ = ∨ Δ(x) over the generators (which
also equals the join of the generators) is the minimal Garside element and
its divisors form a Boolean lattice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .delta import local_delta
from .element import Element, Monoid
from .errors import NotGarside, VerificationFailure
from .lattice import DivisorLattice, export_hasse, is_hypercube


@dataclass
class GarsideReport:
    monoid: Monoid
    is_garside: bool
    witness: tuple[Element, Element] | None = None
    delta: Element | None = None
    simple_lattice: DivisorLattice | None = None
    hypercube: bool | None = None

    def to_dict(self) -> dict:
        out = {"is_garside": self.is_garside}
        if self.witness is not None:
            out["witness"] = [str(e) for e in self.witness]
        if self.delta is not None:
            out["delta"] = str(self.delta)
            out["simple_elements"] = len(self.simple_lattice)
            out["hypercube"] = self.hypercube
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def hasse_dot(self) -> str | None:
        return None if self.simple_lattice is None else export_hasse(self.simple_lattice, "dot")


def _first_missing_lcm(M: Monoid):
    for x in range(M.rank):
        for y in range(x + 1, M.rank):
            if M._right_lcm((x,), (y,)) is None:
                return (x,), (y,)
    return None


def is_garside(M: Monoid) -> GarsideReport:
    missing = _first_missing_lcm(M)
    if missing is not None:
        return GarsideReport(M, False, witness=(M.wrap(missing[0]), M.wrap(missing[1])))

    fmt = M.presentation.format_word
    deltas = []
    for x in range(M.rank):
        out = local_delta(M, (x,))
        if not out.exists:
            raise VerificationFailure(f"generator {fmt((x,))} has no local delta although all lcms exist")
        deltas.append(out.delta.word)
    delta = M._join_all(deltas)
    atoms_join = M._join_all((x,) for x in range(M.rank))
    if delta is None or delta != atoms_join:
        raise VerificationFailure("join of local deltas differs from join of generators")
    lattice = DivisorLattice(M, delta)
    cube = bool(is_hypercube(lattice))
    if not cube:
        raise VerificationFailure(f"simple elements below {fmt(delta)} do not form a hypercube")
    return GarsideReport(M, True, delta=M.wrap(delta), simple_lattice=lattice, hypercube=cube)


def minimal_garside_element(M: Monoid) -> Element:
    report = is_garside(M)
    if not report.is_garside:
        a, b = report.witness
        raise NotGarside(f"{a} and {b} have no common right multiple")
    return report.delta


@dataclass
class DivisorProperties:
    left_divisors: list[Element]
    right_divisors: list[Element]
    coincide: bool
    generates: bool

    def to_dict(self) -> dict:
        return {
            "left_divisors": [str(e) for e in self.left_divisors],
            "right_divisors": [str(e) for e in self.right_divisors],
            "coincide": self.coincide,
            "contains_generators": self.generates,
        }


def garside_divisor_properties(M: Monoid, delta: Element | None = None) -> DivisorProperties:
    """Check that the left and right divisors of Δ coincide and include every generator."""
    if delta is None:
        delta = minimal_garside_element(M)
    left = M.left_divisors(delta)
    right = M.right_divisors(delta)
    coincide = set(left) == set(right)
    generates = all(g in set(left) for g in M.generators)
    if not (coincide and generates):
        raise VerificationFailure(f"{delta} is not a Garside element")
    return DivisorProperties(left, right, coincide, generates)
