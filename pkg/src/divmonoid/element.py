"""Word problem and divisibility calculus for quadratic presentations.

Relations preserve length, so every congruence class is finite; the word
problem is solved by enumerating the class and taking its lexicographically
least member (under the declared generator order) as the canonical word.

All calculus lives on :class:`Monoid`, which also owns the memo tables.
Public methods accept an :class:`Element` of the same monoid, a word tuple,
or a space separated string, and return :class:`Element` values.  The
``_``-prefixed counterparts work on raw canonical word tuples and are what
the heavier algorithms (validation, census) call in their inner loops.

Caches are plain dicts: a Monoid is meant to be confined to one thread.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

from .errors import (
    BudgetExceeded,
    ForeignElementError,
    MultipleMinimalMultiples,
    NoUniqueMaximum,
    NotADivisor,
)
from .presentation import Presentation, Word


@dataclass(frozen=True)
class ClassBudget:
    max_class_size: int = 100_000
    # longest word the enumeration will touch; None means unbounded
    max_search_length: int | None = None

    def __post_init__(self):
        if self.max_class_size <= 0:
            raise ValueError("max_class_size must be positive")
        if self.max_search_length is not None and self.max_search_length <= 0:
            raise ValueError("max_search_length must be positive")


@dataclass(frozen=True, eq=False)
class Element:
    """A congruence class, held as its canonical word."""

    monoid: "Monoid"
    word: Word

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.monoid is other.monoid and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __len__(self):
        return len(self.word)

    def __mul__(self, other):
        return self.monoid.multiply(self, other)

    def __str__(self):
        return self.monoid.presentation.format_word(self.word)

    def __repr__(self):
        return f"Element({str(self)!r})"

    @property
    def is_identity(self) -> bool:
        return not self.word


ElementLike = Union[Element, Word, str]


class Monoid:
    """The monoid presented by a quadratic presentation, with memoised calculus.

    ``greedy=True`` switches the word problem from class enumeration to a
    letter-by-letter procedure that only consults the lcms of pairs of
    generators (read off the length-2 classes) and cancellation.  It gives
    the same canonical words but is only sound for divisibility monoids, so
    turn it on for validated presentations only; the constructor refuses
    presentations that fail base cancellativity or condition (iii).
    """

    def __init__(
        self,
        presentation: Presentation,
        budget: ClassBudget | None = None,
        *,
        greedy: bool = False,
    ):
        self.presentation = presentation
        self.budget = budget or ClassBudget()
        self.rank = presentation.rank
        classes = presentation.pair_classes()
        # (a, b) -> other length-2 words congruent to ab
        self._moves = {}
        for cls in classes.classes:
            for w in cls:
                alts = tuple(v for v in cls if v != w)
                if alts:
                    self._moves[w] = alts
        self.greedy = greedy
        if greedy:
            self._atom_residue = self._atom_residues(classes)
        self._nf: dict[Word, Word] = {}
        self._class: dict[Word, frozenset] = {}
        self._down: dict[Word, dict] = {}
        self._lcm: dict[tuple[Word, Word], Word | None] = {}

    def __repr__(self):
        return f"Monoid({self.presentation})"

    @staticmethod
    def _atom_residues(classes) -> dict:
        # x\y for generators: x·(x\y) = y·(y\x) is the unique length-2 class
        # holding a word starting with x and one starting with y
        table = {}
        for cls in classes.nontrivial():
            firsts = {}
            for w in cls:
                if w[0] in firsts:
                    raise ValueError("greedy word problem needs base cancellativity")
                firsts[w[0]] = w[1]
            for x, xr in firsts.items():
                for y in firsts:
                    if y == x:
                        continue
                    if (x, y) in table:
                        raise ValueError("greedy word problem needs condition (iii)")
                    table[(x, y)] = xr
        return table

    # -- coercion -------------------------------------------------------

    def _coerce(self, x: ElementLike) -> Word:
        if isinstance(x, Element):
            if x.monoid is not self:
                raise ForeignElementError("element belongs to a different monoid")
            return x.word
        if isinstance(x, str):
            word = self.presentation.word(x)
        else:
            word = tuple(x)
            if any(not (0 <= i < self.rank) for i in word):
                raise ValueError(f"word {word} has letters outside the alphabet")
        return self._normal(word)

    def element(self, x: ElementLike) -> Element:
        return Element(self, self._coerce(x))

    def wrap(self, canonical: Word) -> Element:
        return Element(self, canonical)

    @property
    def identity(self) -> Element:
        return Element(self, ())

    @property
    def generators(self) -> list[Element]:
        return [Element(self, (i,)) for i in range(self.rank)]

    def format(self, x: ElementLike) -> str:
        return self.presentation.format_word(self._coerce(x))

    # -- word problem ---------------------------------------------------

    def _enumerate(self, word: Word) -> frozenset:
        limit = self.budget.max_class_size
        if self.budget.max_search_length is not None and len(word) > self.budget.max_search_length:
            raise BudgetExceeded(
                f"word of length {len(word)} exceeds max search length {self.budget.max_search_length}"
            )
        moves = self._moves
        seen = {word}
        stack = [word]
        while stack:
            w = stack.pop()
            for i in range(len(w) - 1):
                alts = moves.get(w[i : i + 2])
                if not alts:
                    continue
                head, tail = w[:i], w[i + 2 :]
                for alt in alts:
                    v = head + alt + tail
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            if len(seen) > limit:
                raise BudgetExceeded(f"congruence class exceeds {limit} words")
        return frozenset(seen)

    def _atom_quotient(self, x: int, w: Word) -> Word | None:
        """Word q with x·q = w, or None when x does not left-divide w (greedy mode)."""
        res = self._atom_residue
        cur = x
        out = []
        for i, letter in enumerate(w):
            if letter == cur:
                return tuple(out) + w[i + 1 :]
            nxt = res.get((letter, cur))
            if nxt is None:
                return None
            out.append(res[(cur, letter)])
            cur = nxt
        return None

    def _greedy_normal(self, word: Word) -> Word:
        out = []
        w = word
        while w:
            for x in range(self.rank):
                q = self._atom_quotient(x, w)
                if q is not None:
                    out.append(x)
                    w = q
                    break
        return tuple(out)

    def _normal(self, word: Word) -> Word:
        word = tuple(word)
        nf = self._nf.get(word)
        if nf is not None:
            return nf
        if len(word) < 2:
            self._nf[word] = word
            return word
        if self.greedy:
            nf = self._greedy_normal(word)
            self._nf[word] = nf
            return nf
        members = self._enumerate(word)
        nf = min(members)
        for w in members:
            self._nf[w] = nf
        self._class[nf] = members
        return nf

    def _members(self, canonical: Word) -> frozenset:
        members = self._class.get(canonical)
        if members is None:
            if len(canonical) < 2:
                return frozenset((canonical,))
            members = self._enumerate(canonical)
            self._class[canonical] = members
        return members

    def congruence_class(self, w: ElementLike) -> frozenset:
        """All words congruent to ``w`` (always by enumeration)."""
        return self._members(self._coerce(w))

    def normal_form(self, w: ElementLike) -> Element:
        return Element(self, self._coerce(w))

    def equal(self, u: ElementLike, v: ElementLike) -> bool:
        return self._coerce(u) == self._coerce(v)

    def multiply(self, *factors: ElementLike) -> Element:
        return Element(self, self._mul(*(self._coerce(f) for f in factors)))

    def _mul(self, *words: Word) -> Word:
        return self._normal(sum(words, ()))

    # -- divisibility ---------------------------------------------------

    def _divisor_map(self, a: Word) -> dict:
        """Map each left divisor d of a to the set of canonical q with d·q = a."""
        got = self._down.get(a)
        if got is not None:
            return got
        down: dict[Word, set] = {}
        if self.greedy:
            down[()] = {a}
            frontier = {(): a}
            while frontier:
                nxt = {}
                for d, q in frontier.items():
                    for x in range(self.rank):
                        r = self._atom_quotient(x, q)
                        if r is None:
                            continue
                        child = self._normal(d + (x,))
                        if child not in nxt:
                            nxt[child] = self._normal(r)
                for child, r in nxt.items():
                    down[child] = {r}
                frontier = nxt
        else:
            n = len(a)
            for w in self._members(a):
                for k in range(n + 1):
                    down.setdefault(self._normal(w[:k]), set()).add(self._normal(w[k:]))
        self._down[a] = down
        return down

    def _left_divides(self, b: Word, a: Word) -> bool:
        if len(b) > len(a):
            return False
        if self.greedy:
            cur = a
            for x in b:
                cur = self._atom_quotient(x, cur)
                if cur is None:
                    return False
            return True
        return b in self._divisor_map(a)

    def _right_divides(self, b: Word, a: Word) -> bool:
        if len(b) > len(a):
            return False
        return any(b in qs for d, qs in self._divisor_map(a).items() if len(d) == len(a) - len(b))

    def left_divides(self, b: ElementLike, a: ElementLike) -> bool:
        """True when ``a = b d`` for some ``d``."""
        return self._left_divides(self._coerce(b), self._coerce(a))

    def right_divides(self, b: ElementLike, a: ElementLike) -> bool:
        """True when ``a = d b`` for some ``d``."""
        return self._right_divides(self._coerce(b), self._coerce(a))

    def divides(self, b: ElementLike, a: ElementLike) -> bool:
        """True when ``a = c b d`` for some ``c, d``."""
        b, a = self._coerce(b), self._coerce(a)
        if len(b) > len(a):
            return False
        return any(self._left_divides(b, q) for qs in self._divisor_map(a).values() for q in qs)

    def _left_quotient(self, b: Word, a: Word) -> Word:
        if self.greedy and len(b) <= len(a):
            cur = a
            for x in b:
                cur = self._atom_quotient(x, cur)
                if cur is None:
                    break
            else:
                return self._normal(cur)
        elif len(b) <= len(a):
            qs = self._divisor_map(a).get(b)
            if qs:
                # min keeps the answer deterministic off validated input
                return min(qs)
        raise NotADivisor(
            f"{self.presentation.format_word(b)} does not left-divide {self.presentation.format_word(a)}"
        )

    def left_quotient(self, b: ElementLike, a: ElementLike) -> Element:
        """The unique ``d`` with ``b d = a``."""
        return Element(self, self._left_quotient(self._coerce(b), self._coerce(a)))

    def _right_quotient(self, a: Word, b: Word) -> Word:
        if len(b) <= len(a):
            hits = [d for d, qs in self._divisor_map(a).items() if len(d) == len(a) - len(b) and b in qs]
            if hits:
                return min(hits)
        raise NotADivisor(
            f"{self.presentation.format_word(b)} does not right-divide {self.presentation.format_word(a)}"
        )

    def right_quotient(self, a: ElementLike, b: ElementLike) -> Element:
        """The unique ``d`` with ``d b = a``."""
        return Element(self, self._right_quotient(self._coerce(a), self._coerce(b)))

    def _left_divisors(self, a: Word) -> set:
        return set(self._divisor_map(a))

    def _right_divisors(self, a: Word) -> set:
        return {q for qs in self._divisor_map(a).values() for q in qs}

    def left_divisors(self, a: ElementLike) -> list[Element]:
        """The set ↓(a), sorted by (length, canonical word)."""
        words = self._left_divisors(self._coerce(a))
        return [Element(self, w) for w in sorted(words, key=lambda w: (len(w), w))]

    def right_divisors(self, a: ElementLike) -> list[Element]:
        words = self._right_divisors(self._coerce(a))
        return [Element(self, w) for w in sorted(words, key=lambda w: (len(w), w))]

    # -- gcd / lcm / residue -------------------------------------------

    def _left_gcd(self, a: Word, b: Word) -> Word:
        if len(b) < len(a):
            a, b = b, a
        common = [d for d in self._left_divisors(a) if self._left_divides(d, b)]
        top = max(len(d) for d in common)
        best = [d for d in common if len(d) == top]
        if len(best) != 1 or not all(self._left_divides(d, best[0]) for d in common):
            fmt = self.presentation.format_word
            raise NoUniqueMaximum(f"common left divisors of {fmt(a)} and {fmt(b)} have no greatest element")
        return best[0]

    def left_gcd(self, a: ElementLike, b: ElementLike) -> Element:
        return Element(self, self._left_gcd(self._coerce(a), self._coerce(b)))

    def _right_lcm(self, a: Word, b: Word) -> Word | None:
        key = (a, b) if a <= b else (b, a)
        if key in self._lcm:
            return self._lcm[key]
        result = self._search_lcm(a, b)
        self._lcm[key] = result
        return result

    def _search_lcm(self, a: Word, b: Word) -> Word | None:
        # Walk the right multiples of the longer element stratum by stratum;
        # a right lcm has length at most |a| + |b| on validated presentations.
        if len(a) < len(b):
            a, b = b, a
        layer = {a}
        for _ in range(len(b) + 1):
            hits = sorted(r for r in layer if self._left_divides(b, r))
            if len(hits) > 1:
                fmt = self.presentation.format_word
                raise MultipleMinimalMultiples(
                    f"{fmt(a)} and {fmt(b)} have incomparable minimal common multiples "
                    + ", ".join(fmt(h) for h in hits)
                )
            if hits:
                return hits[0]
            layer = {self._normal(r + (x,)) for r in layer for x in range(self.rank)}
        return None

    def right_lcm(self, a: ElementLike, b: ElementLike) -> Element | None:
        """Least common right multiple ``a ∨ b``, or None when none exists."""
        w = self._right_lcm(self._coerce(a), self._coerce(b))
        return None if w is None else Element(self, w)

    def _residue(self, a: Word, b: Word) -> Word | None:
        m = self._right_lcm(a, b)
        if m is None:
            return None
        return self._left_quotient(a, m)

    def residue(self, a: ElementLike, b: ElementLike) -> Element | None:
        """``a \\ b``: the element c with ``a ∨ b = a c``; None if the lcm is missing."""
        w = self._residue(self._coerce(a), self._coerce(b))
        return None if w is None else Element(self, w)

    def _join_all(self, words: Iterable[Word]) -> Word | None:
        acc: Word | None = ()
        for w in words:
            acc = self._right_lcm(acc, w)
            if acc is None:
                return None
        return acc

    def join_all(self, elements: Iterable[ElementLike]) -> Element | None:
        """Right lcm of a finite family (identity for the empty family)."""
        w = self._join_all(self._coerce(e) for e in elements)
        return None if w is None else Element(self, w)

    def meet_all(self, elements: Iterable[ElementLike]) -> Element:
        words = [self._coerce(e) for e in elements]
        return Element(self, reduce(self._left_gcd, words))

    # -- enumeration ----------------------------------------------------

    def elements_of_length(self, n: int) -> list[Element]:
        """All elements of length ``n``, sorted by canonical word."""
        layer = {()}
        for _ in range(n):
            layer = {self._normal(w + (x,)) for w in layer for x in range(self.rank)}
        return [Element(self, w) for w in sorted(layer)]
