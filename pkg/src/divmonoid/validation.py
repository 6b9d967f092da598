"""Decide whether a quadratic presentation defines a divisibility monoid.

Checks, in order: base cancellativity of the length-2 classes (left, then
right), the class conditions K-iii and K-ii, then K-i (distributive divisor
lattices of length-3 words).  Condition (iv) holds by construction since the
monoid *is* the quotient of the free monoid by the congruence the relations
generate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .element import ClassBudget, Monoid
from .errors import BudgetExceeded
from .lattice import DivisorLattice, is_distributive
from .presentation import Presentation

CONDITIONS = ("base-cancel-left", "base-cancel-right", "K-iii", "K-ii", "K-i")


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: tuple
    message: str

    def to_dict(self):
        return {"condition": self.condition, "witness": list(self.witness), "message": self.message}


@dataclass
class ValidationReport:
    presentation: Presentation
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "accepted" if self.accepted else "rejected"

    def first(self, condition: str) -> Violation | None:
        return next((v for v in self.violations if v.condition == condition), None)

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation.to_dict(),
            "verdict": self.verdict,
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.presentation}: {self.verdict}"]
        for v in self.violations:
            lines.append(f"  [{v.condition}] {v.message}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _base_cancellativity(P: Presentation, fmt) -> list[Violation]:
    out = []
    for cls in P.pair_classes().nontrivial():
        for side, cond in ((0, "base-cancel-left"), (1, "base-cancel-right")):
            seen = {}
            for w in cls:
                other = seen.get(w[side])
                if other is not None:
                    shared = "first" if side == 0 else "second"
                    out.append(
                        Violation(
                            cond,
                            (fmt(other), fmt(w)),
                            f"{fmt(other)} = {fmt(w)} share their {shared} letter but differ",
                        )
                    )
                else:
                    seen[w[side]] = w
    out.sort(key=lambda v: CONDITIONS.index(v.condition))
    return out


def _condition_iii(P: Presentation, fmt) -> list[Violation]:
    # xy=x'y', xz=x'z', y≠z force x=x': two distinct classes may not both
    # contain words starting with x and with x' (x≠x').
    out = []
    first_seen: dict[tuple[int, int], tuple] = {}
    for cls in P.pair_classes().nontrivial():
        by_first = {w[0]: w for w in cls}
        letters = sorted(by_first)
        for i, x in enumerate(letters):
            for x2 in letters[i + 1 :]:
                prev = first_seen.get((x, x2))
                if prev is None:
                    first_seen[(x, x2)] = (by_first[x], by_first[x2])
                    continue
                (xy, x2y2), xz, x2z2 = prev, by_first[x], by_first[x2]
                out.append(
                    Violation(
                        "K-iii",
                        (fmt(xy), fmt(x2y2), fmt(xz), fmt(x2z2)),
                        f"{fmt(xy)} = {fmt(x2y2)} and {fmt(xz)} = {fmt(x2z2)} "
                        f"with {fmt(xy[1:])} ≠ {fmt(xz[1:])} would force "
                        f"{fmt((x,))} = {fmt((x2,))}",
                    )
                )
    return out


def _condition_ii(M: Monoid, fmt, stop_early: bool) -> list[Violation]:
    # left-cancel a letter from length-3 equalities, and right-cancel one
    out = []
    n = M.rank
    seen = set()
    for w in product(range(n), repeat=3):
        nf = M._normal(w)
        if nf in seen:
            continue
        seen.add(nf)
        members = sorted(M._members(nf))
        for side in (0, 2):
            groups: dict[int, tuple] = {}
            for u in members:
                rest = u[1:] if side == 0 else u[:2]
                first = groups.setdefault(u[side], u)
                first_rest = first[1:] if side == 0 else first[:2]
                if M._normal(rest) != M._normal(first_rest):
                    out.append(
                        Violation(
                            "K-ii",
                            (fmt(first), fmt(u)),
                            f"{fmt(first)} = {fmt(u)} but cancelling the common "
                            f"{'first' if side == 0 else 'last'} letter leaves "
                            f"{fmt(first_rest)} ≠ {fmt(rest)}",
                        )
                    )
                    if stop_early:
                        return out
                    break
    return out


def _condition_i(M: Monoid, fmt, stop_early: bool) -> list[Violation]:
    out = []
    seen = set()
    for w in product(range(M.rank), repeat=3):
        nf = M._normal(w)
        if nf in seen:
            continue
        seen.add(nf)
        lattice = DivisorLattice(M, nf)
        check = is_distributive(lattice)
        if not check:
            wit = check.witness
            if len(wit) == 3 and wit[2] in ("meet", "join"):
                what = f"{wit[0]} and {wit[1]} have no {wit[2]}, so it is not a lattice"
            else:
                what = f"distributivity fails at ({wit[0]}, {wit[1]}, {wit[2]})"
            out.append(
                Violation("K-i", (fmt(w),), f"the poset of left divisors of {fmt(w)} is not distributive: {what}")
            )
            if stop_early:
                return out
    return out


def validate_divisibility(
    P: Presentation,
    budget: ClassBudget | None = None,
    *,
    stop_early: bool = False,
    monoid: Monoid | None = None,
) -> ValidationReport:
    """Run all checks and collect violations.

    With ``stop_early`` the first failing condition ends the run (the census
    uses this); otherwise every condition is checked and all witnesses kept,
    one per offending length-3 class for (i) and (ii).
    """
    report = ValidationReport(P)
    fmt = P.format_word
    M = monoid if monoid is not None else Monoid(P, budget)

    report.violations += _base_cancellativity(P, fmt)
    if report.violations and stop_early:
        return report
    report.violations += _condition_iii(P, fmt)
    if report.violations and stop_early:
        return report
    try:
        report.violations += _condition_ii(M, fmt, stop_early)
        if report.violations and stop_early:
            return report
        report.violations += _condition_i(M, fmt, stop_early)
    except BudgetExceeded as exc:
        report.violations.append(Violation("K-i", (), f"word problem overflow: {exc}"))
    report.notes.append("condition (iv) holds by construction: the monoid is the quotient by the generated congruence")
    report.notes.append("length-1 classes are singletons, so the generators are exactly the irreducible elements")
    return report
