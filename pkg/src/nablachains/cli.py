"""Command-line interface.

Subcommands: count, sequence, recurrence, enumerate, apply, verify.
Counts are emitted as decimal strings in JSON so arbitrary precision
survives any downstream consumer.  Exit codes: 0 success, 1 domain or
computation failure, 2 usage/parse failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys

from . import __version__
from .classify import TrivialityClass, classify_word, enumerate_nontrivial
from .counting import (
    DEFAULT_ENUMERATION_CAP,
    brute_force_count,
    count_sequence,
    count_total,
    enumerate_words,
)
from .errors import EnumerationCapError, NotComposableError
from .forms import (
    ComponentVector,
    DifferentialForm,
    apply_word,
    domain_level,
    exterior_derivative,
    is_zero_operator,
    nabla,
    subsets,
)
from .graph import build_adjacency
from .polynomial import Polynomial, parse_polynomial
from .recurrence import (
    characteristic_polynomial,
    minimal_recurrence,
    recurrence_from_polynomial,
    reference_recurrences,
    verify_recurrence,
)
from .words import CompositionWord

MAX_COUNTING_N = 64
DEFAULT_MAX_SYMBOLIC_N = 12

ENUM_CAP_ENV = "NABLACHAINS_ENUM_CAP"
SYMBOLIC_N_ENV = "NABLACHAINS_MAX_SYMBOLIC_N"


class CliError(Exception):
    """Domain/computation failure; maps to exit code 1."""


def _enum_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUMERATION_CAP


def _max_symbolic_n() -> int:
    raw = os.environ.get(SYMBOLIC_N_ENV)
    return int(raw) if raw else DEFAULT_MAX_SYMBOLIC_N


def _check_counting_n(n: int) -> None:
    if not 3 <= n <= MAX_COUNTING_N:
        raise CliError(f"n must be in 3..{MAX_COUNTING_N}")


def _check_symbolic_n(n: int) -> None:
    cap = _max_symbolic_n()
    if not 3 <= n <= cap:
        raise CliError(f"n must be in 3..{cap} for symbolic computation")


def _word_entry(w: CompositionWord) -> dict:
    entry = {
        "applied": list(w.indices),
        "composition": w.composition_notation(),
        "class": classify_word(w).value,
    }
    named = w.named_notation()
    if named is not None:
        entry["named"] = named
    return entry


# subcommand implementations


def cmd_count(args) -> int:
    _check_counting_n(args.n)
    if args.k < 0:
        raise CliError("k must be >= 0")
    value = count_total(args.n, args.k)
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k, "count": str(value)}))
    else:
        print(value)
    return 0


def cmd_sequence(args) -> int:
    _check_counting_n(args.n)
    if args.k_max < 1:
        raise CliError("k-max must be >= 1")
    seq = count_sequence(args.n, args.k_max)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "k_max": args.k_max,
                    "values": [str(v) for v in seq.values],
                }
            )
        )
    elif args.format == "csv":
        print("k,f_k")
        for k, v in enumerate(seq.values, start=1):
            print(f"{k},{v}")
    else:
        print(",".join(str(v) for v in seq.values))
    return 0


def cmd_recurrence(args) -> int:
    _check_counting_n(args.n)
    n = args.n
    seq = count_sequence(n, 2 * n + 8)
    rec = minimal_recurrence(seq)
    charpoly = characteristic_polynomial(build_adjacency(n))
    payload = {
        "n": n,
        "order": rec.order,
        "coefficients": [str(c) for c in rec.coefficients],
        "valid_from": rec.valid_from,
        "relation": rec.relation_string(),
        "characteristic_polynomial": str(charpoly),
        "characteristic_coefficients": [str(c) for c in charpoly.coefficients],
    }
    reference = reference_recurrences()
    if n in reference:
        payload["matches_reference_table"] = rec == reference[n]
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(rec.relation_string())
        print(f"characteristic polynomial: {charpoly}")
        if "matches_reference_table" in payload:
            print(f"matches_reference_table: {str(payload['matches_reference_table']).lower()}")
    return 0


def cmd_enumerate(args) -> int:
    _check_counting_n(args.n)
    if args.length < 1:
        raise CliError("length must be >= 1")
    try:
        words = enumerate_words(args.n, args.length, cap=_enum_cap())
    except EnumerationCapError as exc:
        raise CliError(str(exc)) from exc
    if args.nontrivial:
        words = [w for w in words if classify_word(w) is TrivialityClass.NONTRIVIAL]
    entries = [_word_entry(w) for w in words]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "length": args.length,
                    "nontrivial_only": bool(args.nontrivial),
                    "count": str(len(entries)),
                    "words": entries,
                }
            )
        )
    elif args.format == "csv":
        print("applied,composition,class")
        for e in entries:
            applied = " ".join(str(i) for i in e["applied"])
            print(f"{applied},{e['composition']},{e['class']}")
    else:
        for e in entries:
            print(f"{tuple(e['applied'])}  {e['composition']}  [{e['class']}]")
    return 0


def _parse_word(text: str, n: int) -> CompositionWord:
    try:
        indices = tuple(int(part) for part in text.split(","))
        return CompositionWord(n, indices)
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from exc


def _parse_vector(text: str, n: int, level: int) -> ComponentVector:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise UsageError("input vector must be bracketed, e.g. [x1*x2, 0, x3]")
    parts = [p.strip() for p in text[1:-1].split(",")]
    expected = math.comb(n, level)
    if len(parts) != expected:
        raise CliError(
            f"word starting with that operator needs {expected} input components "
            f"at level {level}, got {len(parts)}"
        )
    try:
        entries = tuple(parse_polynomial(p, n) for p in parts)
    except ValueError as exc:
        raise UsageError(f"bad polynomial: {exc}") from exc
    return ComponentVector(n, level, entries)


def cmd_apply(args) -> int:
    _check_symbolic_n(args.n)
    word = _parse_word(args.word, args.n)
    bad = word.first_invalid_pair()
    if bad is not None:
        raise CliError(f"pair {bad} is not composable in dimension n={args.n}")
    level = domain_level(word.indices[0], args.n)
    vector = _parse_vector(args.input, args.n, level)
    result = apply_word(word, vector)
    components = [str(p) for p in result.entries]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "word": list(word.indices),
                    "level": result.level,
                    "components": components,
                }
            )
        )
    else:
        print("[" + ", ".join(components) + "]")
    return 0


# verification checks


def _check_counting() -> list[tuple[str, bool, str]]:
    checks = []
    ok, detail = True, ""
    for n in range(3, 7):
        for k in range(1, 11):
            fast, slow = count_total(n, k), brute_force_count(n, k)
            if fast != slow:
                ok, detail = False, f"n={n} k={k}: matrix {fast} != brute force {slow}"
                break
        if not ok:
            break
    checks.append(("oracle equality n=3..6, k=1..10", ok, detail))

    fib = [1, 1]
    while len(fib) < 40:
        fib.append(fib[-1] + fib[-2])
    ok, detail = True, ""
    for k in range(1, 31):
        if count_total(3, k) != fib[k + 2]:
            ok, detail = False, f"k={k}: f(k) != Fib(k+3)"
            break
    checks.append(("n=3 counts are shifted Fibonacci, k=1..30", ok, detail))
    return checks


def _check_recurrence() -> list[tuple[str, bool, str]]:
    from .recurrence import _fit_order

    checks = []

    ok, detail = True, ""
    for n in range(3, 11):
        rec = minimal_recurrence(count_sequence(n, 2 * n + 8))
        long_seq = count_sequence(n, 60)
        if not verify_recurrence(rec, long_seq):
            ok, detail = False, f"n={n}: derived recurrence fails on longer sequence"
            break
        if rec.order > 1 and _fit_order(count_sequence(n, 2 * n + 8).values, rec.order - 1):
            ok, detail = False, f"n={n}: a shorter recurrence also fits"
            break
    checks.append(
        ("derived minimal recurrences annihilate and are minimal n=3..10", ok, detail)
    )

    ok, detail = True, ""
    for n in range(3, 13):
        rec = recurrence_from_polynomial(characteristic_polynomial(build_adjacency(n)))
        seq = count_sequence(n, n + 20)
        if not verify_recurrence(rec, seq):
            ok, detail = False, f"n={n}: characteristic recurrence fails"
            break
    checks.append(("characteristic recurrence annihilates counts n=3..12", ok, detail))

    reference = reference_recurrences()
    mismatches = []
    for n, expected in reference.items():
        got = minimal_recurrence(count_sequence(n, 2 * n + 8))
        if got != expected:
            mismatches.append(n)
    ok = not mismatches
    detail = (
        ""
        if ok
        else f"{8 - len(mismatches)}/8 rows match; derived minimal recurrences "
        f"disagree with the reference table at n={mismatches}"
    )
    checks.append(("minimal recurrences match reference table n=3..10", ok, detail))
    return checks


def _random_form(rng: random.Random, n: int, degree: int) -> DifferentialForm:
    comps = {}
    for s in subsets(n, degree):
        terms = {}
        for _ in range(3):
            exps = tuple(rng.randrange(0, 3) for _ in range(n))
            terms[exps] = rng.randrange(-5, 6)
        comps[s] = Polynomial(n, terms)
    return DifferentialForm(n, degree, comps)


def _check_calculus() -> list[tuple[str, bool, str]]:
    checks = []
    rng = random.Random(20260823)

    ok, detail = True, ""
    for n in range(3, 7):
        for degree in range(0, n + 1):
            for _ in range(10):
                form = _random_form(rng, n, degree)
                if not exterior_derivative(exterior_derivative(form)).is_zero():
                    ok, detail = False, f"d^2 != 0 at n={n} degree={degree}"
                    break
    checks.append(("d^2 == 0 on random polynomial forms", ok, detail))

    # classical identities for n=3 on a generic input
    n = 3
    f = Polynomial(
        n, {(2, 0, 0): 3, (1, 1, 0): -2, (0, 1, 2): 7, (0, 0, 1): 1}
    )
    grad = nabla(1, ComponentVector(n, 0, (f,)))
    expected_grad = ComponentVector(n, 1, tuple(f.diff(i) for i in (1, 2, 3)))
    ok = grad == expected_grad
    detail = "" if ok else "first-operator output disagrees with componentwise gradient"
    checks.append(("grad identity (n=3)", ok, detail))

    fs = tuple(
        Polynomial(n, {(1, 1, 0): 2, (0, 0, 2): idx + 1, (1, 0, 1): -idx})
        for idx in range(3)
    )
    vec = ComponentVector(n, 1, fs)
    curl = nabla(2, vec)
    expected_curl = ComponentVector(
        n,
        1,
        (
            fs[2].diff(2) - fs[1].diff(3),
            fs[0].diff(3) - fs[2].diff(1),
            fs[1].diff(1) - fs[0].diff(2),
        ),
    )
    ok = curl == expected_curl
    detail = "" if ok else "second-operator output disagrees with the curl formula"
    checks.append(("curl identity (n=3)", ok, detail))

    div = nabla(3, vec)
    expected_div = ComponentVector(
        n, 0, (fs[0].diff(1) + fs[1].diff(2) + fs[2].diff(3),)
    )
    ok = div == expected_div
    detail = "" if ok else "third-operator output disagrees with the divergence formula"
    checks.append(("div identity (n=3)", ok, detail))

    ok, detail = True, ""
    for n in (3, 4):
        for length in (2, 3):
            for w in enumerate_words(n, length):
                symbolic_zero = is_zero_operator(w, n)
                combinatorial_zero = classify_word(w) is TrivialityClass.ZERO
                if symbolic_zero != combinatorial_zero:
                    ok, detail = False, f"mismatch at n={n}, word {w.indices}"
                    break
    checks.append(("triviality concordance (n=3..4, length<=3)", ok, detail))
    return checks


def cmd_verify(args) -> int:
    scope = args.scope
    checks: list[tuple[str, bool, str]] = []
    if scope in ("counting", "all"):
        checks += _check_counting()
    if scope in ("recurrence", "all"):
        checks += _check_recurrence()
    if scope in ("calculus", "all"):
        checks += _check_calculus()
    passed = all(ok for _, ok, _ in checks)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "scope": scope,
                    "passed": passed,
                    "checks": [
                        {"name": name, "passed": ok, **({"detail": d} if d else {})}
                        for name, ok, d in checks
                    ],
                }
            )
        )
    else:
        for name, ok, detail in checks:
            line = f"{'PASS' if ok else 'FAIL'}  {name}"
            if detail:
                line += f"  ({detail})"
            print(line)
    return 0 if passed else 1


class UsageError(Exception):
    """Bad flags or unparseable input; maps to exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nablachains",
        description="Count, classify and symbolically verify chains of the "
        "differential operations on R^n.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default, choices=("plain", "json", "csv")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("count", help="number of meaningful chains of order k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_format(p, "plain", ("plain", "json"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sequence", help="counts for k = 1..k_max")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", dest="k_max", type=int, required=True)
    add_format(p, "plain")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("recurrence", help="minimal recurrence for the counts")
    p.add_argument("--n", type=int, required=True)
    add_format(p, "json", ("plain", "json"))
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("enumerate", help="list meaningful chains")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--nontrivial", action="store_true")
    add_format(p, "json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("apply", help="apply an operator chain to polynomial input")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True, help="comma-separated indices, first applied first")
    p.add_argument("--input", required=True, help="bracketed polynomial components")
    add_format(p, "json", ("plain", "json"))
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="run the built-in cross-check suites")
    p.add_argument("--scope", choices=("counting", "recurrence", "calculus", "all"), default="all")
    add_format(p, "plain", ("plain", "json"))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CliError, NotComposableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
