"""Symbolic exterior calculus with polynomial coefficients.

Differential forms on R^n are stored on the lexicographic wedge basis
dx_S, S an ascending subset of {1..n}.  Forms of degree i and n-i are
identified with vectors of C(n, min(i, n-i)) polynomial components; the
high-degree identification carries the permutation sign that sorts
(S, complement(S)) into (1..n).  That sign choice is what makes the n=3
operators come out as the classical grad, curl and div, and it is pinned
by tests rather than assumed.

The operator chain machinery (nabla, apply_word) and the exact
zero-operator decision procedure live here too.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping

from .errors import LevelMismatchError
from .graph import DimLike, as_dim
from .polynomial import Polynomial
from .words import CompositionWord, WordLike, as_word

Subset = tuple[int, ...]


def subsets(n: int, size: int) -> list[Subset]:
    """Ascending subsets of {1..n} of the given size, in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), size))


def _perm_sign(seq: tuple[int, ...]) -> int:
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv % 2 else 1


def complement_sign(s: Subset, n: int) -> tuple[Subset, int]:
    """Complement T of S in {1..n} and the sign of the permutation (S, T)."""
    t = tuple(x for x in range(1, n + 1) if x not in s)
    return t, _perm_sign(s + t)


@dataclass(frozen=True)
class DifferentialForm:
    """Polynomial differential form; components keyed by ascending subsets.

    Absent keys are zero.  Zero components are dropped at construction.
    """

    n: int
    degree: int
    components: Mapping[Subset, Polynomial]

    def __post_init__(self):
        as_dim(self.n)
        if not 0 <= self.degree <= self.n:
            raise ValueError(f"degree {self.degree} out of range 0..{self.n}")
        canon: dict[Subset, Polynomial] = {}
        for key, poly in self.components.items():
            key = tuple(key)
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise ValueError(f"bad basis subset {key} for degree {self.degree}")
            if key and not (1 <= key[0] and key[-1] <= self.n):
                raise ValueError(f"subset {key} not within 1..{self.n}")
            if poly.n_vars != self.n:
                raise ValueError("component polynomial has wrong variable count")
            if not poly.is_zero():
                canon[key] = poly
        object.__setattr__(self, "components", canon)

    def is_zero(self) -> bool:
        return not self.components

    def coefficient(self, s: Subset) -> Polynomial:
        return self.components.get(tuple(s), Polynomial.zero(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return (
            self.n == other.n
            and self.degree == other.degree
            and dict(self.components) == dict(other.components)
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for s in subsets(self.n, self.degree):
            poly = self.components.get(s)
            if poly is None:
                continue
            if s:
                basis = "^".join(f"dx{i}" for i in s)
                parts.append(f"({poly}) {basis}")
            else:
                parts.append(f"({poly})")
        return " + ".join(parts)


@dataclass(frozen=True)
class ComponentVector:
    """Element of the coefficient space at a level: C(n, level) polynomials
    in lexicographic slot order."""

    n: int
    level: int
    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        as_dim(self.n)
        m = self.n // 2
        if not 0 <= self.level <= m:
            raise ValueError(f"level {self.level} out of range 0..{m}")
        expected = math.comb(self.n, self.level)
        if len(self.entries) != expected:
            raise ValueError(
                f"level {self.level} in dimension {self.n} needs {expected} entries, "
                f"got {len(self.entries)}"
            )
        for p in self.entries:
            if p.n_vars != self.n:
                raise ValueError("entry polynomial has wrong variable count")

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries)

    @classmethod
    def zero(cls, n: int, level: int) -> "ComponentVector":
        return cls(n, level, tuple(Polynomial.zero(n) for _ in range(math.comb(n, level))))

    def map(self, fn) -> "ComponentVector":
        return ComponentVector(self.n, self.level, tuple(fn(p) for p in self.entries))

    def __add__(self, other: "ComponentVector") -> "ComponentVector":
        if (self.n, self.level) != (other.n, other.level):
            raise ValueError("component vectors of different shape")
        return ComponentVector(
            self.n, self.level, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def scale(self, c) -> "ComponentVector":
        return self.map(lambda p: p.scale(c))


def exterior_derivative(form: DifferentialForm) -> DifferentialForm:
    """d on polynomial forms; returns the zero top form when degree == n."""
    n = form.n
    if form.degree == n:
        return DifferentialForm(n, n, {})
    out: dict[Subset, Polynomial] = {}
    for s, g in form.components.items():
        for t in range(1, n + 1):
            if t in s:
                continue
            dg = g.diff(t)
            if dg.is_zero():
                continue
            before = sum(1 for x in s if x < t)
            sign = -1 if before % 2 else 1
            key = tuple(sorted(s + (t,)))
            contrib = dg.scale(sign)
            out[key] = out.get(key, Polynomial.zero(n)) + contrib
    return DifferentialForm(n, form.degree + 1, out)


def iso_to_components(form: DifferentialForm) -> ComponentVector:
    """Push a form down to its coefficient vector.

    Degree <= m reads coefficients off in lexicographic order; higher degree
    uses the signed-complement pairing.
    """
    n, m = form.n, form.n // 2
    if form.degree <= m:
        level = form.degree
        entries = tuple(form.coefficient(s) for s in subsets(n, level))
    else:
        level = n - form.degree
        entries = []
        for s in subsets(n, level):
            t, sign = complement_sign(s, n)
            entries.append(form.coefficient(t).scale(sign))
        entries = tuple(entries)
    return ComponentVector(n, level, entries)


def iso_from_components(v: ComponentVector, target_degree: int) -> DifferentialForm:
    """Lift a coefficient vector to a form of the requested degree.

    target_degree must be v.level (low side) or n - v.level (high side).
    """
    n, m = v.n, v.n // 2
    if target_degree <= m:
        if target_degree != v.level:
            raise ValueError(
                f"target degree {target_degree} incompatible with level {v.level}"
            )
        comps = dict(zip(subsets(n, v.level), v.entries))
    else:
        if target_degree != n - v.level:
            raise ValueError(
                f"target degree {target_degree} incompatible with level {v.level}"
            )
        comps = {}
        for s, p in zip(subsets(n, v.level), v.entries):
            t, sign = complement_sign(s, n)
            comps[t] = p.scale(sign)
    return DifferentialForm(n, target_degree, comps)


def domain_level(i: int, n: int) -> int:
    """Level of the coefficient space nabla_i consumes."""
    return min(i - 1, n - i + 1)


def codomain_level(i: int, n: int) -> int:
    """Level of the coefficient space nabla_i produces."""
    return min(i, n - i)


def nabla(i: int, v: ComponentVector) -> ComponentVector:
    """The operator nabla_i: lift, exterior-differentiate, push down."""
    n = v.n
    if not 1 <= i <= n:
        raise ValueError(f"operator index {i} out of range 1..{n}")
    expected = domain_level(i, n)
    if v.level != expected:
        raise LevelMismatchError(expected, v.level)
    form = iso_from_components(v, i - 1)
    return iso_to_components(exterior_derivative(form))


def apply_word(w: WordLike, v: ComponentVector) -> ComponentVector:
    """Fold nabla over the word in application order."""
    word = as_word(w, v.n)
    word.require_meaningful()
    for i in word.indices:
        v = nabla(i, v)
    return v


def _degree_bounded_exponents(n: int, max_degree: int):
    """All exponent tuples of length n with total degree <= max_degree."""

    def rec(slots: int, budget: int):
        if slots == 0:
            yield ()
            return
        for e in range(budget + 1):
            for rest in rec(slots - 1, budget - e):
                yield (e,) + rest

    return rec(n, max_degree)


def is_zero_operator(w: WordLike, n: DimLike) -> bool:
    """Decide exactly whether the composed operator annihilates everything.

    The composition is linear with constant coefficients and differential
    order at most len(w), so vanishing on every single-slot monomial input of
    total degree <= len(w) is equivalent to being the zero operator.
    """
    n = as_dim(n)
    word = as_word(w, n)
    word.require_meaningful()
    level = domain_level(word.indices[0], n)
    slots = math.comb(n, level)
    for slot in range(slots):
        for exps in _degree_bounded_exponents(n, len(word)):
            entries = [Polynomial.zero(n)] * slots
            entries[slot] = Polynomial.monomial(n, exps)
            probe = ComponentVector(n, level, tuple(entries))
            if not apply_word(word, probe).is_zero():
                return False
    return True
