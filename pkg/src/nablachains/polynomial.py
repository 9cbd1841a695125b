"""Sparse multivariate polynomials over exact rationals.

Variables are x1..xn; internally a term is an exponent tuple of length
n_vars mapped to a nonzero Fraction.  Canonical form (no zero coefficients)
makes structural equality decide polynomial equality, which is all the
zero-operator decision procedure needs.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


class Polynomial:
    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms: Mapping[Exponents, Scalar] | None = None):
        if n_vars < 1:
            raise ValueError("need at least one variable")
        self.n_vars = n_vars
        canon: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != n_vars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for {n_vars} variables")
                c = Fraction(coeff)
                if c:
                    canon[exps] = canon.get(exps, Fraction(0)) + c
                    if not canon[exps]:
                        del canon[exps]
        self.terms = canon

    # construction helpers

    @classmethod
    def zero(cls, n_vars: int) -> "Polynomial":
        return cls(n_vars)

    @classmethod
    def constant(cls, n_vars: int, c: Scalar) -> "Polynomial":
        return cls(n_vars, {(0,) * n_vars: c})

    @classmethod
    def monomial(cls, n_vars: int, exps: Iterable[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(n_vars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, n_vars: int, i: int) -> "Polynomial":
        """x_i, 1-based."""
        if not 1 <= i <= n_vars:
            raise ValueError(f"variable index {i} out of range 1..{n_vars}")
        exps = [0] * n_vars
        exps[i - 1] = 1
        return cls(n_vars, {tuple(exps): 1})

    # ring operations

    def _check(self, other: "Polynomial") -> None:
        if self.n_vars != other.n_vars:
            raise ValueError("polynomials over different variable sets")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(self.n_vars, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n_vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.n_vars, terms)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.n_vars, {e: c * v for e, v in self.terms.items()})

    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to x_i (1-based), exact power rule."""
        if not 1 <= i <= self.n_vars:
            raise ValueError(f"variable index {i} out of range 1..{self.n_vars}")
        terms: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            p = e[i - 1]
            if p == 0:
                continue
            ne = e[: i - 1] + (p - 1,) + e[i:]
            terms[ne] = terms.get(ne, Fraction(0)) + c * p
        return Polynomial(self.n_vars, terms)

    # predicates and comparison

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is reported as -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n_vars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # rendering

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
        parts: list[str] = []
        for e in ordered:
            c = self.terms[e]
            factors = [
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}"
                for i, p in enumerate(e)
                if p > 0
            ]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.n_vars}, {self})"


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*^]))"
)


def parse_polynomial(text: str, n_vars: int) -> Polynomial:
    """Parse syntax like ``3/2*x1^2*x3 - x2 + 4``."""
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        tokens.append(m.group(m.lastgroup))
        pos = m.end()

    result = Polynomial.zero(n_vars)
    idx = 0

    def parse_factor(sign_allowed: bool = False) -> Polynomial:
        nonlocal idx
        if idx >= len(tokens):
            raise ValueError("unexpected end of polynomial")
        tok = tokens[idx]
        if tok == "-" and sign_allowed:
            idx += 1
            return -parse_factor()
        if tok == "+" and sign_allowed:
            idx += 1
            return parse_factor()
        if re.fullmatch(r"\d+(?:/\d+)?", tok):
            idx += 1
            return Polynomial.constant(n_vars, Fraction(tok))
        if re.fullmatch(r"x\d+", tok):
            i = int(tok[1:])
            if not 1 <= i <= n_vars:
                raise ValueError(f"variable {tok} out of range for n={n_vars}")
            idx += 1
            power = 1
            if idx < len(tokens) and tokens[idx] == "^":
                idx += 1
                if idx >= len(tokens) or not tokens[idx].isdigit():
                    raise ValueError("expected integer exponent after '^'")
                power = int(tokens[idx])
                idx += 1
            exps = [0] * n_vars
            exps[i - 1] = power
            return Polynomial.monomial(n_vars, exps)
        raise ValueError(f"unexpected token {tok!r}")

    def parse_term() -> Polynomial:
        nonlocal idx
        p = parse_factor(sign_allowed=True)
        while idx < len(tokens) and tokens[idx] == "*":
            idx += 1
            p = p * parse_factor()
        return p

    if not tokens:
        raise ValueError("empty polynomial")
    result = parse_term()
    while idx < len(tokens):
        op = tokens[idx]
        if op not in "+-":
            raise ValueError(f"expected '+' or '-', got {op!r}")
        idx += 1
        term = parse_term()
        result = result + term if op == "+" else result - term
    return result
