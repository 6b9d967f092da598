"""Homogeneous quadratic monoid presentations.

A presentation is an ordered alphabet plus relations ``ab = cd`` between
words of length two.  Words are tuples of generator indices; the
lexicographic order on those tuples is the order used for canonical words
everywhere else in the package.

Text format::

    # comment
    generators: x y z
    relations:
      x x = y z
      y y = z x

The JSON form is ``{"generators": [...], "relations": [[["x","x"],["y","z"]], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import PresentationError

Word = tuple  # tuple[int, ...]
Pair = tuple  # tuple[int, int]


def _normalize_relations(relations: Iterable[tuple[Pair, Pair]]) -> tuple:
    out = set()
    for u, v in relations:
        u, v = tuple(u), tuple(v)
        if len(u) != 2 or len(v) != 2:
            raise PresentationError(f"relation {u}={v} is not quadratic")
        if u == v:
            continue
        out.add((u, v) if u < v else (v, u))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Presentation:
    """Generators (in declaration order) and normalized length-2 relations.

    Each relation is stored with its lexicographically smaller side first;
    trivial and duplicate relations are dropped.
    """

    generators: tuple[str, ...]
    relations: tuple[tuple[Pair, Pair], ...] = ()
    _classes: "PairClasses | None" = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError("duplicate generator name")
        for g in gens:
            if not g or any(ch.isspace() for ch in g) or g in ("=", "1"):
                raise PresentationError(f"invalid generator name {g!r}")
        rels = _normalize_relations(self.relations)
        n = len(gens)
        for u, v in rels:
            if any(not (0 <= i < n) for i in u + v):
                raise PresentationError(f"relation {u}={v} uses an unknown generator index")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @classmethod
    def from_names(cls, generators: Sequence[str], relations: Iterable[tuple[str, str]]):
        """Build from relation strings such as ``("x x", "y z")``."""
        gens = tuple(generators)
        index = {g: i for i, g in enumerate(gens)}
        rels = []
        for left, right in relations:
            sides = []
            for side in (left, right):
                names = side.split() if isinstance(side, str) else list(side)
                try:
                    sides.append(tuple(index[s] for s in names))
                except KeyError as exc:
                    raise PresentationError(f"unknown generator {exc.args[0]!r}") from None
            rels.append(tuple(sides))
        return cls(gens, rels)

    def pair_classes(self) -> "PairClasses":
        if self._classes is None:
            object.__setattr__(self, "_classes", pair_classes(self))
        return self._classes

    def word(self, text: str | Sequence[str]) -> Word:
        """Parse a space separated word; ``"1"`` or ``""`` is the empty word."""
        names = text.split() if isinstance(text, str) else list(text)
        if names == ["1"]:
            return ()
        index = {g: i for i, g in enumerate(self.generators)}
        try:
            return tuple(index[s] for s in names)
        except KeyError as exc:
            raise PresentationError(f"unknown generator {exc.args[0]!r}") from None

    def format_word(self, word: Word) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[i] for i in word)

    def relabel(self, perm: Sequence[int]) -> "Presentation":
        """Send generator ``i`` to position ``perm[i]`` (names travel along)."""
        names = [None] * self.rank
        for i, j in enumerate(perm):
            names[j] = self.generators[i]
        rels = [(tuple(perm[a] for a in u), tuple(perm[a] for a in v)) for u, v in self.relations]
        return Presentation(tuple(names), rels)

    def opposite(self) -> "Presentation":
        """Presentation of the opposite monoid (all words reversed)."""
        return Presentation(self.generators, [(u[::-1], v[::-1]) for u, v in self.relations])

    # -- serialization -------------------------------------------------

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators), "relations:"]
        for u, v in self.relations:
            lines.append(f"  {self.format_word(u)} = {self.format_word(v)}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        g = self.generators
        return {
            "generators": list(g),
            "relations": [[[g[i] for i in u], [g[i] for i in v]] for u, v in self.relations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        rels = ", ".join(
            f"{''.join(self.generators[i] for i in u)}={''.join(self.generators[i] for i in v)}"
            for u, v in self.relations
        )
        return f"<{','.join(self.generators)} : {rels}>"


def parse_presentation(text: str) -> Presentation:
    """Parse the text format (or its JSON equivalent) into a Presentation."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)

    generators = None
    index: dict[str, int] = {}
    relations = []
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        stripped = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("generators:"):
            if generators is not None:
                raise PresentationError("generators declared twice", lineno, col)
            generators = stripped[len("generators:"):].split()
            seen = set()
            for g in generators:
                if g in seen:
                    raise PresentationError(f"duplicate generator {g!r}", lineno, col)
                seen.add(g)
            index = {g: i for i, g in enumerate(generators)}
            continue
        if stripped == "relations:" or stripped.startswith("relations:"):
            if generators is None:
                raise PresentationError("relations before generators", lineno, col)
            in_relations = True
            rest = stripped[len("relations:"):].strip()
            if not rest:
                continue
            stripped = rest
        if not in_relations:
            raise PresentationError(f"unexpected text {stripped!r}", lineno, col)
        if stripped.count("=") != 1:
            raise PresentationError("relation must contain exactly one '='", lineno, col)
        left, right = stripped.split("=")
        sides = []
        for side, offset in ((left, 0), (right, line.index("=") + 1)):
            names = side.split()
            if len(names) != 2:
                raise PresentationError(
                    f"relation side {side.strip()!r} has length {len(names)}, expected 2",
                    lineno,
                    col if offset == 0 else offset + 1,
                )
            for name in names:
                if name not in index:
                    raise PresentationError(
                        f"unknown generator {name!r}", lineno, line.find(name, offset) + 1
                    )
            sides.append(tuple(index[s] for s in names))
        relations.append(tuple(sides))
    if generators is None:
        raise PresentationError("missing 'generators:' line")
    return Presentation(tuple(generators), relations)


def _parse_json(text: str) -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "generators" not in data:
        raise PresentationError("JSON presentation needs a 'generators' list")
    gens = data["generators"]
    rels = data.get("relations", [])
    for rel in rels:
        if len(rel) != 2 or any(len(side) != 2 for side in rel):
            raise PresentationError(f"relation {rel!r} is not quadratic")
    if len(set(gens)) != len(gens):
        raise PresentationError("duplicate generator name")
    return Presentation.from_names(gens, [tuple(r) for r in rels])


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


# -- length-2 congruence classes -------------------------------------------


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class PairClasses:
    """Partition of all length-2 words into congruence classes.

    ``classes`` is sorted, each class sorted; ``index`` maps every word to
    the position of its class.
    """

    rank: int
    classes: tuple[tuple[Pair, ...], ...]
    index: dict = field(compare=False, repr=False, hash=False)

    def class_of(self, pair: Pair) -> tuple[Pair, ...]:
        return self.classes[self.index[tuple(pair)]]

    def nontrivial(self) -> tuple[tuple[Pair, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)

    def equivalent(self, u: Pair, v: Pair) -> bool:
        return self.index[tuple(u)] == self.index[tuple(v)]


def pair_classes(presentation: Presentation) -> PairClasses:
    """Close the relations over the n*n length-2 words (union-find)."""
    n = presentation.rank
    words = list(product(range(n), repeat=2))
    uf = _UnionFind(words)
    for u, v in presentation.relations:
        uf.union(u, v)
    groups: dict[Pair, list] = {}
    for w in words:
        groups.setdefault(uf.find(w), []).append(w)
    classes = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    index = {w: i for i, c in enumerate(classes) for w in c}
    return PairClasses(n, classes, index)
