"""Enumerate quadratic presentations of a given rank up to isomorphism and classify them.

A presentation is determined by its partition of the length-2 words into
congruence classes, so candidates are generated as partitions directly:
words are placed one at a time (in index order) either into an existing
class or a new one.  Two necessary conditions for divisibility prune the
search:

* every class is a partial matching (no two words share a first letter, no
  two share a second letter);
* for two distinct first letters x, x' at most one class contains words
  starting with both.

Isomorphisms permute generators, so each partition is kept only when its
encoding (sorted tuple of the sorted non-singleton classes) is the least
one in its orbit under the symmetric group.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations, product

from .delta import quasi_center
from .element import ClassBudget, Monoid
from .errors import BudgetExceeded, MonoidError
from .garside import is_garside
from .presentation import Presentation
from .validation import validate_divisibility

Encoding = tuple  # tuple of classes, each a sorted tuple of (a, b) pairs


def default_names(rank: int) -> tuple[str, ...]:
    if rank <= 4:
        return tuple("xyzt"[:rank])
    return tuple(f"s{i}" for i in range(1, rank + 1))


def encode(P: Presentation) -> Encoding:
    return tuple(P.pair_classes().nontrivial())


def _apply(enc: Encoding, perm) -> Encoding:
    return tuple(sorted(tuple(sorted((perm[a], perm[b]) for a, b in cls)) for cls in enc))


def canonical_encoding(enc: Encoding, rank: int) -> tuple[Encoding, tuple[int, ...]]:
    """Least relabelled encoding and the permutation reaching it."""
    best, best_perm = None, None
    for perm in permutations(range(rank)):
        cand = _apply(enc, perm)
        if best is None or cand < best:
            best, best_perm = cand, perm
    return best, best_perm


def from_encoding(enc: Encoding, rank: int, names=None) -> Presentation:
    rels = [(cls[0], w) for cls in enc for w in cls[1:]]
    return Presentation(tuple(names) if names else default_names(rank), rels)


@dataclass(frozen=True)
class CanonicalPresentation:
    presentation: Presentation
    encoding: Encoding


def canonical_form(P: Presentation) -> CanonicalPresentation:
    """Relabel generators so that the class encoding is lexicographically least."""
    enc, perm = canonical_encoding(encode(P), P.rank)
    return CanonicalPresentation(P.relabel(perm), enc)


def is_canonical(enc: Encoding, perms) -> bool:
    for perm in perms:
        if _apply(enc, perm) < enc:
            return False
    return True


def _partitions(rank: int):
    """Yield encodings of all pruned partitions of the length-2 words (labelled)."""
    words = list(product(range(rank), repeat=2))
    classes: list[list] = []  # [firsts, seconds, members]
    used_pairs: set = set()

    def rec(i):
        if i == len(words):
            yield tuple(sorted(tuple(c[2]) for c in classes if len(c[2]) > 1))
            return
        a, b = words[i]
        for c in classes:
            if a in c[0] or b in c[1]:
                continue
            new = [(f, a) if f < a else (a, f) for f in c[0]]
            if any(p in used_pairs for p in new):
                continue
            c[0].add(a)
            c[1].add(b)
            c[2].append((a, b))
            used_pairs.update(new)
            yield from rec(i + 1)
            used_pairs.difference_update(new)
            c[2].pop()
            c[1].discard(b)
            c[0].discard(a)
        classes.append([{a}, {b}, [(a, b)]])
        yield from rec(i + 1)
        classes.pop()

    yield from rec(0)


def enumerate_presentations(rank: int, deadline: float | None = None):
    """Yield one CanonicalPresentation per isomorphism class of pruned candidates."""
    if rank < 0:
        raise ValueError("rank must be non-negative")
    perms = [p for p in permutations(range(rank)) if list(p) != list(range(rank))]
    count = 0
    for enc in _partitions(rank):
        count += 1
        if deadline is not None and count % 4096 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("census time budget exhausted during enumeration")
        if is_canonical(enc, perms):
            yield CanonicalPresentation(from_encoding(enc, rank), enc)


@dataclass
class CensusEntry:
    presentation: str
    encoding: list
    divisibility: bool
    failed_condition: str | None = None
    garside: bool | None = None
    garside_witness: list | None = None
    delta: str | None = None
    simple_lattice_size: int | None = None
    hypercube: bool | None = None
    quasi_center_rank: int | None = None
    quasi_center_generators: list | None = None
    opposite_in_same_class: bool | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def classify(P: Presentation, budget: ClassBudget | None = None, *, encoding=None) -> CensusEntry:
    """Validate, then (for divisibility monoids) run Garside and quasi-center analyses."""
    if encoding is None:
        encoding = canonical_form(P).encoding
    entry = CensusEntry(str(P), [[list(w) for w in cls] for cls in encoding], divisibility=False)
    M = Monoid(P, budget)
    try:
        report = validate_divisibility(P, stop_early=True, monoid=M)
        if not report.accepted:
            entry.failed_condition = report.violations[0].condition
            return entry
        entry.divisibility = True
        M = Monoid(P, budget, greedy=True)
        g = is_garside(M)
        entry.garside = g.is_garside
        if g.is_garside:
            entry.delta = str(g.delta)
            entry.simple_lattice_size = len(g.simple_lattice)
            entry.hypercube = g.hypercube
        else:
            entry.garside_witness = [str(e) for e in g.witness]
        qc = quasi_center(M)
        entry.quasi_center_rank = qc.rank
        entry.quasi_center_generators = [str(e) for e in qc.generators]
        opp, _ = canonical_encoding(encode(P.opposite()), P.rank)
        entry.opposite_in_same_class = opp == encoding
    except MonoidError as exc:
        entry.error = f"{type(exc).__name__}: {exc}"
    return entry


def _classify_job(args):
    enc, rank, max_class = args
    return classify(from_encoding(enc, rank), ClassBudget(max_class), encoding=enc)


@dataclass
class CensusReport:
    rank: int
    examined: int
    divisibility: int
    garside_divisibility: int
    entries: list[CensusEntry] = field(default_factory=list)
    seconds: float = 0.0

    def counts(self) -> dict:
        return {
            "rank": self.rank,
            "isomorphism_classes_examined": self.examined,
            "divisibility": self.divisibility,
            "garside_divisibility": self.garside_divisibility,
        }

    def garside_entries(self) -> list[CensusEntry]:
        return [e for e in self.entries if e.garside]

    def divisibility_entries(self) -> list[CensusEntry]:
        return [e for e in self.entries if e.divisibility]

    def to_dict(self, include_rejected: bool = False) -> dict:
        entries = self.entries if include_rejected else self.divisibility_entries()
        return {
            "counts": self.counts(),
            "notes": [
                "garside_divisibility is the count stated in the literature for ranks 2-4",
                "divisibility counts are computed here and have no published reference value",
            ],
            "entries": [e.to_dict() for e in entries],
        }

    def to_json(self, include_rejected: bool = False) -> str:
        return json.dumps(self.to_dict(include_rejected), indent=2)

    def to_text(self) -> str:
        lines = [
            f"rank: {self.rank}",
            f"isomorphism_classes_examined: {self.examined}",
            f"divisibility: {self.divisibility}",
            f"garside_divisibility: {self.garside_divisibility}",
            "",
            f"{'presentation':<48} {'garside':<8} {'|simple|':>8} {'qc-rank':>7}  quasi-center",
        ]
        for e in self.divisibility_entries():
            lines.append(
                f"{e.presentation:<48} {'yes' if e.garside else 'no':<8} "
                f"{e.simple_lattice_size if e.simple_lattice_size is not None else '-':>8} "
                f"{e.quasi_center_rank if e.quasi_center_rank is not None else '-':>7}  "
                f"{', '.join(e.quasi_center_generators or []) or '1'}"
                + ("" if e.error is None else f"  ERROR {e.error}")
            )
        return "\n".join(lines) + "\n"


def census(
    rank: int,
    *,
    workers: int | None = None,
    budget: ClassBudget | None = None,
    time_budget: float | None = 600.0,
) -> CensusReport:
    """Enumerate and classify all rank-``rank`` candidates; deterministic output order."""
    start = time.monotonic()
    deadline = None if time_budget is None else start + time_budget
    budget = budget or ClassBudget()
    candidates = [c.encoding for c in enumerate_presentations(rank, deadline)]
    candidates.sort()
    workers = workers if workers is not None else (os.cpu_count() or 1)
    jobs = [(enc, rank, budget.max_class_size) for enc in candidates]
    entries = []
    if workers <= 1 or len(jobs) < 64:
        for job in jobs:
            entries.append(_classify_job(job))
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("census time budget exhausted during classification")
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for entry in pool.map(_classify_job, jobs, chunksize=64):
                entries.append(entry)
                if deadline is not None and time.monotonic() > deadline:
                    pool.shutdown(cancel_futures=True)
                    raise BudgetExceeded("census time budget exhausted during classification")
    return CensusReport(
        rank=rank,
        examined=len(entries),
        divisibility=sum(e.divisibility for e in entries),
        garside_divisibility=sum(bool(e.garside) for e in entries),
        entries=entries,
        seconds=time.monotonic() - start,
    )
