"""Local deltas, quasi-centrality and the quasi-center.

The local delta Δ(a) is the right lcm of all residues b\\a.  It is computed
by iterating  U_0 = {a},  U_i = {c\\b : c ∈ Σ ∪ {1}, b ∈ U_{i-1}}  until the
set stops growing; if some residue on the way does not exist, Δ(a) does
not exist either and the missing pair is kept as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .element import Element, ElementLike, Monoid
from .errors import VerificationFailure
from .presentation import Word


@dataclass
class UpsilonTrace:
    stages: list[frozenset]  # of canonical words
    failure: tuple[Word, Word] | None = None  # (c, b) with c\b missing

    @property
    def fixpoint(self) -> frozenset | None:
        return None if self.failure is not None else self.stages[-1]


@dataclass
class LocalDeltaOutcome:
    element: Element
    trace: UpsilonTrace
    delta: Element | None = None

    @property
    def exists(self) -> bool:
        return self.delta is not None

    def to_dict(self) -> dict:
        M = self.element.monoid
        fmt = M.presentation.format_word
        out = {
            "element": str(self.element),
            "exists": self.exists,
            "delta": str(self.delta) if self.delta is not None else None,
            "stages": [sorted((fmt(w) for w in stage), key=lambda s: (s != "1", len(s), s)) for stage in self.trace.stages],
        }
        if self.trace.failure is not None:
            c, b = self.trace.failure
            out["failure"] = {"c": fmt(c), "b": fmt(b), "message": f"{fmt(c)} ∨ {fmt(b)} does not exist"}
        return out


def _sorted(words):
    return sorted(words, key=lambda w: (len(w), w))


def upsilon_iteration(M: Monoid, a: ElementLike) -> UpsilonTrace:
    a = M._coerce(a)
    sigma1 = [()] + [(x,) for x in range(M.rank)]
    stages = [frozenset((a,))]
    while True:
        nxt = set()
        for c in sigma1:
            for b in _sorted(stages[-1]):
                r = M._residue(c, b)
                if r is None:
                    return UpsilonTrace(stages, (c, b))
                nxt.add(r)
        nxt = frozenset(nxt)
        if nxt == stages[-1]:
            return UpsilonTrace(stages)
        if not stages[-1] <= nxt:
            raise VerificationFailure("residue stages are not increasing")
        stages.append(nxt)


def local_delta(M: Monoid, a: ElementLike) -> LocalDeltaOutcome:
    elem = M.element(a)
    trace = upsilon_iteration(M, elem)
    if trace.failure is not None:
        return LocalDeltaOutcome(elem, trace)
    d = M._join_all(_sorted(trace.fixpoint))
    if d is None:
        raise VerificationFailure(f"residue fixpoint of {elem} has no right lcm")
    return LocalDeltaOutcome(elem, trace, M.wrap(d))


def quasi_central_permutation(M: Monoid, a: ElementLike) -> dict[int, int] | None:
    """Map x ↦ x' with x·a = a·x' for every generator, if it is a bijection."""
    a = M._coerce(a)
    perm = {}
    for x in range(M.rank):
        xa = M._mul((x,), a)
        if not M._left_divides(a, xa):
            return None
        perm[x] = M._left_quotient(a, xa)[0]
    if len(set(perm.values())) != M.rank:
        return None
    return perm


def is_quasi_central(M: Monoid, a: ElementLike) -> tuple[bool, dict | None]:
    """Whether aΣ = Σa; the witness maps generator names x to x' with x a = a x'."""
    perm = quasi_central_permutation(M, a)
    if perm is None:
        return False, None
    g = M.presentation.generators
    return True, {g[x]: g[y] for x, y in perm.items()}


@dataclass
class QuasiCenter:
    monoid: Monoid
    deltas: dict[int, LocalDeltaOutcome]
    generators: list[Element] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def to_dict(self) -> dict:
        g = self.monoid.presentation.generators
        return {
            "rank": self.rank,
            "structure": f"N^{self.rank}" if self.rank != 1 else "N",
            "generators": [str(e) for e in self.generators],
            "local_deltas": {g[x]: out.to_dict() for x, out in self.deltas.items()},
        }


def quasi_center(M: Monoid) -> QuasiCenter:
    """Distinct local deltas of the generators, with the free-abelian relations verified."""
    deltas = {x: local_delta(M, (x,)) for x in range(M.rank)}
    gens = sorted({out.delta.word for out in deltas.values() if out.exists}, key=lambda w: (len(w), w))
    fmt = M.presentation.format_word
    for i, g in enumerate(gens):
        if quasi_central_permutation(M, g) is None:
            raise VerificationFailure(f"local delta {fmt(g)} is not quasi-central")
        for h in gens[i + 1 :]:
            if M._left_gcd(g, h) != ():
                raise VerificationFailure(f"distinct local deltas {fmt(g)}, {fmt(h)} share a left divisor")
            if M._mul(g, h) != M._mul(h, g):
                raise VerificationFailure(f"local deltas {fmt(g)}, {fmt(h)} do not commute")
            if M._residue(g, h) != h or M._residue(h, g) != g:
                raise VerificationFailure(f"residue of local deltas {fmt(g)}, {fmt(h)} is wrong")
    return QuasiCenter(M, deltas, [M.wrap(g) for g in gens])
