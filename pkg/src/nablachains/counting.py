"""Exact counts of meaningful operator chains.

f_i(k) counts length-k meaningful words whose first-applied operator is
nabla_i; f(k) is the total over all starting operators.  The fast path
iterates the adjacency matrix against the all-ones vector; brute_force_count
is a deliberately independent depth-first oracle used to cross-check it.
All arithmetic is on Python ints, so counts are exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EnumerationCapError
from .graph import DimLike, as_dim, build_adjacency, successors
from .words import CompositionWord

DEFAULT_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class CountVector:
    """Per-starting-operator counts f_i(k) for a fixed (n, k)."""

    n: int
    k: int
    per_start: tuple[int, ...]

    def total(self) -> int:
        return sum(self.per_start)


@dataclass(frozen=True)
class CountSequence:
    """Totals f(1), ..., f(k_max); values[k-1] is f(k)."""

    n: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def f(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise IndexError(f"k={k} outside computed range 1..{len(self.values)}")
        return self.values[k - 1]


def _mat_vec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(aij * vj for aij, vj in zip(row, v)) for row in a]


def count_per_start(n: DimLike, k: int) -> CountVector:
    """f_i(k) for i = 1..n, via k-1 matrix-vector products from all-ones."""
    n = as_dim(n)
    if k < 1:
        raise ValueError(f"order k must be >= 1, got {k}")
    a = build_adjacency(n)
    v = [1] * n
    for _ in range(k - 1):
        v = _mat_vec(a, v)
    return CountVector(n, k, tuple(v))


def count_total(n: DimLike, k: int) -> int:
    """f(k); f(0) = 1 by the empty-chain convention."""
    n = as_dim(n)
    if k < 0:
        raise ValueError(f"order k must be >= 0, got {k}")
    if k == 0:
        return 1
    return count_per_start(n, k).total()


def count_sequence(n: DimLike, k_max: int) -> CountSequence:
    """f(1)..f(k_max) in one pass (one matrix-vector product per step)."""
    n = as_dim(n)
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    a = build_adjacency(n)
    v = [1] * n
    values = [sum(v)]
    for _ in range(k_max - 1):
        v = _mat_vec(a, v)
        values.append(sum(v))
    return CountSequence(n, tuple(values))


def enumerate_words(
    n: DimLike, k: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[CompositionWord]:
    """All meaningful length-k words in lexicographic order of the index tuple."""
    n = as_dim(n)
    if k < 1:
        raise ValueError(f"length k must be >= 1, got {k}")
    total = count_total(n, k)
    if total > cap:
        raise EnumerationCapError(total, cap)
    succ = {i: successors(i, n) for i in range(1, n + 1)}
    out: list[CompositionWord] = []
    stack: list[int] = []

    def extend(i: int) -> None:
        stack.append(i)
        if len(stack) == k:
            out.append(CompositionWord(n, tuple(stack)))
        else:
            for j in succ[i]:
                extend(j)
        stack.pop()

    for i in range(1, n + 1):
        extend(i)
    return out


def brute_force_count(n: DimLike, k: int) -> int:
    """Count meaningful length-k words by plain depth-first search.

    Independent of the matrix iteration on purpose; no memoization.
    """
    n = as_dim(n)
    if k < 0:
        raise ValueError(f"order k must be >= 0, got {k}")
    if k == 0:
        return 1
    succ = {i: successors(i, n) for i in range(1, n + 1)}

    def walk(i: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        return sum(walk(j, remaining - 1) for j in succ[i])

    return sum(walk(i, k - 1) for i in range(1, n + 1))
