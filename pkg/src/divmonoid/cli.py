"""Command line interface.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage, IO,
parse or budget error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import census
from .delta import is_quasi_central, local_delta, quasi_center
from .element import ClassBudget, Monoid
from .errors import BudgetExceeded, LatticeError, MonoidError, PresentationError
from .garside import garside_divisor_properties, is_garside
from .lattice import DivisorLattice, FiniteLattice, export_hasse, height, is_distributive, is_hypercube, is_lattice
from .presentation import Presentation, load_presentation, parse_presentation
from .properties import SamplingPlan, check_properties
from .validation import validate_divisibility

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _budget(args) -> ClassBudget:
    return ClassBudget(max_class_size=args.budget_class)


def _presentation(args) -> Presentation:
    if (args.file is None) == (args.expr is None):
        raise UsageError("give exactly one of a presentation file or --expr")
    if args.expr is not None:
        return parse_presentation(args.expr.replace("\\n", "\n").replace(";", "\n"))
    return load_presentation(args.file)


def _monoid(args) -> Monoid:
    """Validated monoid (greedy word problem) unless --unchecked."""
    P = _presentation(args)
    if getattr(args, "unchecked", False):
        return Monoid(P, _budget(args))
    report = validate_divisibility(P, _budget(args))
    if not report.accepted:
        first = report.violations[0]
        raise UsageError(f"not a divisibility monoid ([{first.condition}] {first.message}); use --unchecked to force")
    return Monoid(P, _budget(args), greedy=True)


def _opt(M, e):
    return "none" if e is None else str(e)


# -- subcommands -------------------------------------------------------------


def cmd_validate(args) -> int:
    P = _presentation(args)
    report = validate_divisibility(P, _budget(args))
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK if report.accepted else EXIT_NEGATIVE


def cmd_calc(args) -> int:
    M = _monoid(args)
    op = args.command
    words = [M.element(w) for w in args.words]
    arity = {"nf": 1, "divisors": 1, "lattice": 1, "eq": 2, "lcm": 2, "gcd": 2, "residue": 2}
    need = arity.get(op)
    if need is not None and len(words) != need:
        raise UsageError(f"{op} takes {need} element(s), got {len(words)}")
    verdict = EXIT_OK
    if op == "nf":
        result = str(words[0])
        data = {"nf": result}
    elif op == "eq":
        same = words[0] == words[1]
        result, data = str(same).lower(), {"equal": same}
        verdict = EXIT_OK if same else EXIT_NEGATIVE
    elif op == "mul":
        result = str(M.multiply(*words)) if words else "1"
        data = {"product": result}
    elif op == "lcm":
        result = _opt(M, M.right_lcm(*words))
        data = {"lcm": None if result == "none" else result}
    elif op == "gcd":
        result = str(M.left_gcd(*words))
        data = {"gcd": result}
    elif op == "residue":
        result = _opt(M, M.residue(*words))
        data = {"residue": None if result == "none" else result}
    elif op == "divisors":
        divs = [str(e) for e in M.left_divisors(words[0])]
        result, data = "\n".join(divs), {"divisors": divs}
    elif op == "lattice":
        L = DivisorLattice(M, words[0])
        if args.dot:
            print(export_hasse(L, "dot"), end="")
            return EXIT_OK
        lat, dist, cube = is_lattice(L), is_distributive(L), is_hypercube(L)
        data = L.to_dict()
        data.update(
            {"height": height(L), "is_lattice": lat.holds, "is_distributive": dist.holds, "is_hypercube": cube.holds}
        )
        result = (
            f"elements: {len(L)}\ncovers: {len(L.cover_pairs)}\nheight: {height(L)}\n"
            f"lattice: {str(lat.holds).lower()}\ndistributive: {str(dist.holds).lower()}\n"
            f"hypercube: {str(cube.holds).lower()}"
        )
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(op)
    _emit(args, data, result)
    return verdict


def cmd_delta(args) -> int:
    M = _monoid(args)
    targets = [M.element(args.element)] if args.element else M.generators
    outs = [local_delta(M, t) for t in targets]
    data = {str(o.element): o.to_dict() for o in outs}
    lines = []
    for o in outs:
        d = o.to_dict()
        stages = " ⊂ ".join("{" + ", ".join(s) + "}" for s in d["stages"])
        if o.exists:
            lines.append(f"Δ({o.element}) = {o.delta}    stages: {stages}")
        else:
            f = d["failure"]
            lines.append(f"Δ({o.element}) does not exist: {f['message']}    stages: {stages}")
        if args.element:
            ok, perm = is_quasi_central(M, o.element)
            lines.append(f"quasi-central({o.element}): {str(ok).lower()}")
            data[str(o.element)]["quasi_central"] = ok
            data[str(o.element)]["permutation"] = perm
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_quasicenter(args) -> int:
    M = _monoid(args)
    qc = quasi_center(M)
    data = qc.to_dict()
    text = [f"rank: {qc.rank}", "generators: " + (", ".join(str(g) for g in qc.generators) or "(none)")]
    g = M.presentation.generators
    for x, out in qc.deltas.items():
        text.append(f"  Δ({g[x]}) = {out.delta}" if out.exists else f"  Δ({g[x]}) does not exist")
    _emit(args, data, "\n".join(text))
    return EXIT_OK


def cmd_garside(args) -> int:
    M = _monoid(args)
    report = is_garside(M)
    if args.dot:
        if not report.is_garside:
            print(f"not Garside: {report.witness[0]} and {report.witness[1]} have no common multiple", file=sys.stderr)
            return EXIT_NEGATIVE
        print(report.hasse_dot(), end="")
        return EXIT_OK
    data = report.to_dict()
    if report.is_garside:
        props = garside_divisor_properties(M, report.delta)
        data["divisors_coincide"] = props.coincide
        text = (
            f"garside: true\ndelta: {report.delta}\nsimple elements: {len(report.simple_lattice)}\n"
            f"hypercube: {str(report.hypercube).lower()}\nleft and right divisors coincide: {str(props.coincide).lower()}"
        )
    else:
        a, b = report.witness
        text = f"garside: false\nwitness: {a} and {b} have no common right multiple"
    _emit(args, data, text)
    return EXIT_OK if report.is_garside else EXIT_NEGATIVE


def cmd_census(args) -> int:
    if args.rank < 1:
        raise UsageError("rank must be at least 1")
    report = census(
        args.rank,
        workers=args.workers,
        budget=_budget(args),
        time_budget=args.budget_time,
    )
    if args.dump:
        _dump(report, args.dump)
    if args.json:
        print(report.to_json(include_rejected=args.all))
    else:
        print(report.to_text(), end="")
    return EXIT_OK


def _dump(report, directory):
    from .census import from_encoding

    os.makedirs(directory, exist_ok=True)
    for i, entry in enumerate(report.divisibility_entries()):
        enc = tuple(tuple(tuple(w) for w in cls) for cls in entry.encoding)
        P = from_encoding(enc, report.rank)
        stem = os.path.join(directory, f"rank{report.rank}_{i:03d}")
        with open(stem + ".pres", "w", encoding="utf-8") as fh:
            fh.write(P.to_text())
        if entry.garside:
            g = is_garside(Monoid(P, greedy=True))
            with open(stem + ".dot", "w", encoding="utf-8") as fh:
                fh.write(g.hasse_dot())


def cmd_hypercube(args) -> int:
    with open(args.lattice, encoding="utf-8") as fh:
        L = FiniteLattice.from_json(fh.read())
    lat = is_lattice(L)
    dist = is_distributive(L) if lat else lat
    cube = is_hypercube(L) if lat else lat
    data = {
        "elements": len(L),
        "atoms": len(L.atoms()),
        "is_lattice": lat.holds,
        "is_distributive": dist.holds,
        "is_hypercube": cube.holds,
        "height": height(L),
    }
    _emit(args, data, str(cube.holds).lower())
    return EXIT_OK if cube else EXIT_NEGATIVE


def cmd_check(args) -> int:
    M = _monoid(args)
    plan = SamplingPlan(seed=args.seed, random_samples=args.samples)
    report = check_properties(M, plan)
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--budget-class", type=int, default=100_000, metavar="N", help="max congruence class size")
    common.add_argument("--seed", type=int, default=0)

    pres = argparse.ArgumentParser(add_help=False)
    pres.add_argument("file", nargs="?", help="presentation file (text or JSON)")
    pres.add_argument("-e", "--expr", help="inline presentation; ';' separates lines")
    pres.add_argument("--unchecked", action="store_true", help="skip validation (enumeration word problem)")

    parser = argparse.ArgumentParser(prog="divmonoid", description="Divisibility and Garside monoid toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common, pres], help="decide the divisibility property")
    p.set_defaults(func=cmd_validate)

    for name, helptext in (
        ("nf", "canonical word"),
        ("eq", "equality of two words"),
        ("mul", "product"),
        ("lcm", "right lcm"),
        ("gcd", "left gcd"),
        ("residue", "a\\b"),
        ("divisors", "left divisors"),
        ("lattice", "divisor lattice of an element"),
    ):
        p = sub.add_parser(name, parents=[common, pres], help=helptext)
        p.add_argument("words", nargs="*", help='elements as quoted words, e.g. "x y z" or 1')
        p.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
        p.set_defaults(func=cmd_calc)

    p = sub.add_parser("delta", parents=[common, pres], help="local deltas with residue stages")
    p.add_argument("--element", help="element (default: every generator)")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("quasicenter", parents=[common, pres], help="minimal generating set of the quasi-center")
    p.set_defaults(func=cmd_quasicenter)

    p = sub.add_parser("garside", parents=[common, pres], help="Garside test and simple-element lattice")
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram of the simple elements")
    p.set_defaults(func=cmd_garside)

    p = sub.add_parser("census", parents=[common], help="enumerate monoids of a rank up to isomorphism")
    p.add_argument("rank", type=int)
    p.add_argument("--workers", type=int, default=None, help="classification processes (default: all cores)")
    p.add_argument("--budget-time", type=float, default=600.0, metavar="SECONDS")
    p.add_argument("--dump", metavar="DIR", help="write each entry's presentation and simple-lattice DOT")
    p.add_argument("--all", action="store_true", help="include rejected candidates in JSON")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("hypercube", parents=[common], help="test a lattice JSON file for the hypercube property")
    p.add_argument("lattice")
    p.set_defaults(func=cmd_hypercube)

    p = sub.add_parser("check", parents=[common, pres], help="sampled property suite")
    p.add_argument("--samples", type=int, default=200, help="random products in the pool")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if getattr(args, "words", None) is not None and args.expr is not None and args.file is not None:
        # with --expr the optional file slot swallows the first word
        args.words, args.file = [args.file, *args.words], None
    try:
        return args.func(args)
    except (UsageError, PresentationError, LatticeError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except MonoidError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
