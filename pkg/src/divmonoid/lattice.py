"""Finite lattices: divisor lattices ↓(a), lattice/distributivity/hypercube tests, Hasse export."""

from __future__ import annotations

import json
from collections import deque
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import LatticeError
from .element import ElementLike, Monoid


class Check(NamedTuple):
    """Boolean verdict with an optional witness; truthy iff ``holds``."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


class FiniteLattice:
    """A finite bounded poset given by its covering relation.

    ``covers`` are pairs ``(u, v)`` meaning v covers u, or triples
    ``(u, v, label)``.  The order is the reflexive-transitive closure.
    Construction checks ids, acyclicity, and a unique bottom and top;
    whether meets and joins exist is left to :func:`is_lattice`.
    """

    def __init__(self, elements: Sequence[Hashable], covers: Iterable[Sequence]):
        self.elements = list(elements)
        if not self.elements:
            raise LatticeError("empty lattice")
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise LatticeError("duplicate element ids")
        n = len(self.elements)
        self.up: list[list[int]] = [[] for _ in range(n)]
        self.labels: dict[tuple[int, int], str] = {}
        self.cover_pairs: list[tuple[int, int]] = []
        for cov in covers:
            u, v = cov[0], cov[1]
            if u not in self.index or v not in self.index:
                raise LatticeError(f"cover {u!r} -> {v!r} mentions an unknown element")
            i, j = self.index[u], self.index[v]
            if i == j:
                raise LatticeError(f"self-loop at {u!r}")
            if (i, j) in self.labels or j in self.up[i]:
                continue
            self.up[i].append(j)
            self.cover_pairs.append((i, j))
            if len(cov) > 2 and cov[2] is not None:
                self.labels[(i, j)] = str(cov[2])
        self._order = self._topological_order()
        self.leq = self._closure()
        bottoms = [i for i in range(n) if all(self.leq[i][j] for j in range(n))]
        tops = [i for i in range(n) if all(self.leq[j][i] for j in range(n))]
        if len(bottoms) != 1:
            raise LatticeError("no unique bottom element")
        if len(tops) != 1:
            raise LatticeError("no unique top element")
        self.bottom, self.top = bottoms[0], tops[0]
        self._meet = None
        self._join = None

    def __len__(self):
        return len(self.elements)

    def _topological_order(self) -> list[int]:
        n = len(self.elements)
        indeg = [0] * n
        for i in range(n):
            for j in self.up[i]:
                indeg[j] += 1
        queue = deque(i for i in range(n) if indeg[i] == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in self.up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != n:
            raise LatticeError("cover relation has a cycle")
        return order

    def _closure(self) -> list[list[bool]]:
        n = len(self.elements)
        above = [set() for _ in range(n)]
        for i in reversed(self._order):
            s = {i}
            for j in self.up[i]:
                s |= above[j]
            above[i] = s
        return [[j in above[i] for j in range(n)] for i in range(n)]

    # -- meet/join tables; None marks a missing bound --------------------

    def _bound(self, i, j, lower):
        n = len(self.elements)
        leq = self.leq
        if lower:
            common = [k for k in range(n) if leq[k][i] and leq[k][j]]
            best = [k for k in common if all(leq[c][k] for c in common)]
        else:
            common = [k for k in range(n) if leq[i][k] and leq[j][k]]
            best = [k for k in common if all(leq[k][c] for c in common)]
        return best[0] if len(best) == 1 else None

    def _tables(self):
        if self._meet is None:
            n = len(self.elements)
            meet = [[None] * n for _ in range(n)]
            join = [[None] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    meet[i][j] = meet[j][i] = self._bound(i, j, True)
                    join[i][j] = join[j][i] = self._bound(i, j, False)
            self._meet, self._join = meet, join
        return self._meet, self._join

    def meet(self, u, v):
        meet, _ = self._tables()
        k = meet[self.index[u]][self.index[v]]
        return None if k is None else self.elements[k]

    def join(self, u, v):
        _, join = self._tables()
        k = join[self.index[u]][self.index[v]]
        return None if k is None else self.elements[k]

    def atoms(self) -> list:
        return [self.elements[j] for j in self.up[self.bottom]]

    # -- serialization ---------------------------------------------------

    def node_name(self, e) -> str:
        return str(e)

    def _sorted_indices(self) -> list[int]:
        return list(range(len(self.elements)))

    def to_dict(self) -> dict:
        order = self._sorted_indices()
        name = [self.node_name(e) for e in self.elements]
        rank = {i: r for r, i in enumerate(order)}
        covers = []
        for i, j in sorted(self.cover_pairs, key=lambda p: (rank[p[0]], rank[p[1]])):
            entry = [name[i], name[j]]
            if (i, j) in self.labels:
                entry.append(self.labels[(i, j)])
            covers.append(entry)
        return {"elements": [name[i] for i in order], "covers": covers}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteLattice":
        if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
            raise LatticeError("lattice JSON needs 'elements' and 'covers'")
        return cls([str(e) for e in data["elements"]], [tuple(str(x) for x in c) for c in data["covers"]])

    @classmethod
    def from_json(cls, text: str) -> "FiniteLattice":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LatticeError(f"invalid JSON: {exc.msg}") from None
        return cls.from_dict(data)


class DivisorLattice(FiniteLattice):
    """↓(a) ordered by left divisibility, covers labelled by generators.

    Elements are :class:`~divmonoid.element.Element` values sorted by
    (length, canonical word).
    """

    def __init__(self, monoid: Monoid, a: ElementLike):
        self.monoid = monoid
        top = monoid.element(a)
        self.top_element = top
        divisors = monoid.left_divisors(top)
        by_length: dict[int, list] = {}
        for d in divisors:
            by_length.setdefault(len(d), []).append(d)
        covers = []
        # homogeneous relations: a cover always adds exactly one generator
        for d in divisors:
            for e in by_length.get(len(d) + 1, ()):
                if monoid._left_divides(d.word, e.word):
                    g = monoid._left_quotient(d.word, e.word)
                    covers.append((d, e, monoid.presentation.generators[g[0]]))
        super().__init__(divisors, covers)

    def node_name(self, e) -> str:
        return str(e)


def divisor_lattice(monoid: Monoid, a: ElementLike) -> DivisorLattice:
    return DivisorLattice(monoid, a)


def is_lattice(L: FiniteLattice) -> Check:
    """All pairwise meets and joins exist; witness is a failing pair."""
    meet, join = L._tables()
    n = len(L)
    for i in range(n):
        for j in range(i + 1, n):
            if meet[i][j] is None or join[i][j] is None:
                kind = "meet" if meet[i][j] is None else "join"
                return Check(False, (L.elements[i], L.elements[j], kind))
    return Check(True)


def is_distributive(L: FiniteLattice) -> Check:
    """x∧(y∨z) = (x∧y)∨(x∧z) for every triple; witness is a failing triple.

    Not a lattice counts as not distributive (witness from is_lattice).
    """
    ok = is_lattice(L)
    if not ok:
        return ok
    meet, join = L._tables()
    n = len(L)
    for x in range(n):
        mx = meet[x]
        for y in range(n):
            for z in range(y + 1, n):
                if mx[join[y][z]] != join[mx[y]][mx[z]]:
                    return Check(False, (L.elements[x], L.elements[y], L.elements[z]))
    return Check(True)


def is_hypercube(L: FiniteLattice) -> Check:
    """L is isomorphic to the Boolean lattice on its atoms.

    Checks that e ↦ {atoms below e} is a bijection onto all subsets of the
    atom set and that e ≤ f iff the atom set of e is contained in that of f.
    """
    atoms = L.up[L.bottom]
    k = len(atoms)
    n = len(L)
    if n != 2**k:
        return Check(False, ("size", n, 2**k))
    code = []
    for i in range(n):
        code.append(frozenset(a for a in atoms if L.leq[a][i]))
    if len(set(code)) != n:
        return Check(False, ("not injective",))
    for i in range(n):
        for j in range(n):
            if L.leq[i][j] != (code[i] <= code[j]):
                return Check(False, ("order", L.elements[i], L.elements[j]))
    return Check(True)


def height(L: FiniteLattice) -> int:
    """Length of the longest chain from bottom to top."""
    longest = [0] * len(L)
    for i in L._order:
        for j in L.up[i]:
            longest[j] = max(longest[j], longest[i] + 1)
    return longest[L.top]


def export_hasse(L: FiniteLattice, fmt: str = "dot") -> str:
    """Render the Hasse diagram as Graphviz DOT or lattice JSON."""
    data = L.to_dict()
    if fmt == "json":
        return json.dumps(data, indent=2)
    if fmt != "dot":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for e in data["elements"]:
        lines.append(f'  "{e}";')
    for c in data["covers"]:
        attr = f' [label="{c[2]}"]' if len(c) > 2 else ""
        lines.append(f'  "{c[0]}" -> "{c[1]}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
