"""Randomised and exhaustive checks of the lcm/residue calculus and local-delta theory.

The sample pool is every element of length <= ``exhaustive_length`` plus
``random_samples`` random products of length <= ``random_max_length``.
Pairs and triples are drawn from the pool: all combinations over the
generators and 1, then seeded random ones.  Tuples whose total length
exceeds ``max_total_length`` are skipped when drawing, since lcms of long
words blow up the class enumeration; the cap is part of the plan, not a
filter on failures.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from .delta import local_delta, quasi_center, quasi_central_permutation
from .element import Monoid
from .lattice import DivisorLattice, height, is_distributive


@dataclass
class SamplingPlan:
    exhaustive_length: int = 4
    random_samples: int = 200
    random_max_length: int = 8
    random_pairs: int = 150
    random_triples: int = 100
    max_total_length: int = 12
    lattice_samples: int = 40
    seed: int = 0


@dataclass
class PropertyReport:
    presentation: str
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation,
            "checked": dict(sorted(self.checked.items())),
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.presentation}: {'ok' if self.ok else f'{len(self.violations)} violations'}"]
        for name, n in sorted(self.checked.items()):
            bad = sum(1 for v in self.violations if v["property"] == name)
            lines.append(f"  {name:<28} {n:>6} cases  {bad} violations")
        for v in self.violations[:20]:
            lines.append(f"  ! {v['property']}: {v['detail']}")
        return "\n".join(lines)


class _Checker:
    def __init__(self, M: Monoid, plan: SamplingPlan):
        self.M = M
        self.plan = plan
        self.fmt = M.presentation.format_word
        self.report = PropertyReport(str(M.presentation))
        self.rng = random.Random(plan.seed)
        self._delta_cache: dict = {}

    def tally(self, name, ok, *args, detail=""):
        self.report.checked[name] = self.report.checked.get(name, 0) + 1
        if not ok:
            shown = ", ".join("none" if a is None else self.fmt(a) for a in args)
            self.report.violations.append({"property": name, "detail": f"({shown}) {detail}".strip()})

    # -- shorthand over canonical words; None means "does not exist" -----

    def mul(self, *ws):
        if any(w is None for w in ws):
            return None
        return self.M._mul(*ws)

    def lcm(self, a, b):
        if a is None or b is None:
            return None
        return self.M._right_lcm(a, b)

    def res(self, a, b):
        if a is None or b is None:
            return None
        return self.M._residue(a, b)

    def delta(self, a):
        if a not in self._delta_cache:
            out = local_delta(self.M, a)
            self._delta_cache[a] = out.delta.word if out.exists else None
        return self._delta_cache[a]

    def qc(self, a):
        return quasi_central_permutation(self.M, a) is not None

    # -- pool ------------------------------------------------------------

    def pool(self):
        M, p = self.M, self.plan
        small = []
        for n in range(p.exhaustive_length + 1):
            small += [e.word for e in M.elements_of_length(n)]
        rand = []
        for _ in range(p.random_samples):
            n = self.rng.randint(1, p.random_max_length)
            rand.append(M._normal(tuple(self.rng.randrange(M.rank) for _ in range(n))))
        return small, rand

    def draw(self, pool, k, count):
        out = []
        tries = 0
        while len(out) < count and tries < 50 * count:
            tries += 1
            t = tuple(self.rng.choice(pool) for _ in range(k))
            if sum(len(w) for w in t) <= self.plan.max_total_length:
                out.append(t)
        return out

    # -- checks ----------------------------------------------------------

    def calculus(self, triples):
        for a, b, c in triples:
            lhs = self.lcm(self.mul(a, b), self.mul(a, c))
            rhs = self.mul(a, self.lcm(b, c))
            self.tally("lcm-left-distributive", lhs == rhs, a, b, c, detail="(ab)∨(ac) vs a(b∨c)")

            lhs = self.res(c, self.mul(a, b))
            rhs = self.mul(self.res(c, a), self.res(self.res(a, c), b))
            self.tally("residue-of-product", lhs == rhs, a, b, c, detail="c\\(ab) vs (c\\a)((a\\c)\\b)")

            lhs = self.res(self.mul(a, b), c)
            rhs = self.res(b, self.res(a, c))
            self.tally("residue-by-product", lhs == rhs, a, b, c, detail="(ab)\\c vs b\\(a\\c)")

            j = self.lcm(a, b)
            lhs = self.res(j, c)
            mid = self.res(self.res(a, b), self.res(a, c))
            rhs = self.res(self.res(b, a), self.res(b, c))
            self.tally("residue-by-lcm", lhs == mid == rhs, a, b, c, detail="(a∨b)\\c three ways")

            lhs = self.res(c, j)
            rhs = self.lcm(self.res(c, a), self.res(c, b))
            self.tally("residue-of-lcm", lhs == rhs, a, b, c, detail="c\\(a∨b) vs (c\\a)∨(c\\b)")

            ab = self.M._left_gcd(a, b)
            self.tally(
                "gcd-associative",
                self.M._left_gcd(ab, c) == self.M._left_gcd(a, self.M._left_gcd(b, c)),
                a,
                b,
                c,
            )

    def pairs(self, pairs):
        M = self.M
        for a, b in pairs:
            j = self.lcm(a, b)
            if j is not None:
                ok = self.mul(a, self.res(a, b)) == j == self.mul(b, self.res(b, a))
                self.tally("lcm-residue-identity", ok, a, b)
                r = self.res(b, a)
                self.tally("residue-length-bound", len(r) <= len(a), a, b, detail="|b\\a| <= |a|")
            else:
                self.tally("lcm-residue-identity", self.res(a, b) is None and self.res(b, a) is None, a, b)
            self.tally("lcm-symmetric", j == self.lcm(b, a), a, b)
            for name, div in (("left", M._left_divides), ("right", M._right_divides)):
                if div(a, b) and div(b, a):
                    self.tally(f"antisymmetry-{name}", a == b, a, b)
            g = M._left_gcd(a, b)
            self.tally("gcd-commutative", g == M._left_gcd(b, a), a, b)
            self.tally("gcd-idempotent", M._left_gcd(a, a) == a, a)
            da, db = self.delta(a), self.delta(b)
            if da is not None and db is not None:
                jd = self.lcm(da, db)
                ok = j is not None and jd is not None and self.delta(j) == jd
                self.tally("delta-of-lcm", ok, a, b, detail="Δ(a∨b) = Δ(a)∨Δ(b)")

    def singles(self, elements):
        M = self.M
        self.tally("conicity", M.elements_of_length(0) == [M.identity], ())
        for a in elements:
            d = self.delta(a)
            is_qc = self.qc(a)
            self.tally("quasi-central-iff-fixed", is_qc == (d == a), a, detail="qc(a) <=> Δ(a)=a")
            if d is not None:
                self.tally("delta-quasi-central", self.qc(d), a)
                self.tally("delta-idempotent", self.delta(d) == d, a)
                self.tally("delta-above", M._left_divides(a, d), a, detail="a left-divides Δ(a)")

    def lattices(self, elements):
        for a in elements:
            L = DivisorLattice(self.M, a)
            self.tally("divisor-lattice-distributive", bool(is_distributive(L)), a)
            self.tally("divisor-lattice-height", height(L) == len(a), a)

    def quasi_central_family(self, small):
        """Divisors of quasi-central elements and the free-abelian structure."""
        M = self.M
        qc = quasi_center(M)
        gens = [g.word for g in qc.generators]
        deltas = {x: out.delta.word for x, out in qc.deltas.items() if out.exists}
        for x, y in combinations_with_replacement(sorted(deltas), 2):
            dx, dy = deltas[x], deltas[y]
            self.tally("minimality-dichotomy", dx == dy or M._left_gcd(dx, dy) == (), (x,), (y,))
        for i, g in enumerate(gens):
            for h in gens[i + 1 :]:
                ok = M._left_gcd(g, h) == () and self.res(g, h) == h and self.mul(g, h) == self.mul(h, g)
                self.tally("free-abelian-relations", ok, g, h)
        # products of generator powers, total degree <= 3, are pairwise distinct
        seen = {}
        qcs = []
        for exps in product(range(4), repeat=len(gens)):
            if sum(exps) > 3:
                continue
            w = self.mul(*[g for g, e in zip(gens, exps) for _ in range(e)]) if any(exps) else ()
            qcs.append(w)
            self.tally("free-abelian-unique-exponents", seen.setdefault(w, exps) == exps, w)
        for b in qcs:
            if not b:
                continue
            self.tally("product-quasi-central", self.qc(b), b)
            for a in small:
                if len(a) > len(b):
                    continue
                d, l, r = M.divides(a, b), M._left_divides(a, b), M._right_divides(a, b)
                self.tally("divides-two-sided", d == l == r, a, b)
                if d:
                    da = self.delta(a)
                    self.tally("delta-divides-quasi-central", da is not None and M._left_divides(da, b), a, b)
            for c in M._left_divisors(b):
                rest = M._left_quotient(c, b)
                self.tally("straight-factorisation", self.qc(c) == self.qc(rest), c, rest)


def check_properties(M: Monoid, plan: SamplingPlan | None = None) -> PropertyReport:
    """Run every property over the sampling plan; assumes M is a divisibility monoid."""
    plan = plan or SamplingPlan()
    ch = _Checker(M, plan)
    small, rand = ch.pool()
    pool = small + rand
    sigma1 = [()] + [(x,) for x in range(M.rank)]

    ch.singles(small + rand)
    lat = small + ch.rng.sample(rand, min(plan.lattice_samples, len(rand)))
    ch.lattices(lat)

    base_pairs = [(a, b) for a in small for b in small if len(a) + len(b) <= 4]
    ch.pairs(base_pairs + ch.draw(pool, 2, plan.random_pairs))

    base_triples = list(product(sigma1, repeat=3))
    ch.calculus(base_triples + ch.draw(pool, 3, plan.random_triples))

    ch.quasi_central_family([w for w in small if len(w) <= 3])
    return ch.report
