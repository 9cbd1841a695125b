"""Triviality classification of operator chains and the alternating
non-trivial families.

A composable pair (k then j) is the zero operator exactly when j = k + 1
(a d-squared step); it survives when k + j = n + 1; anything else is not
a function at all.  One zero step annihilates a whole chain, so the words
that remain non-trivial are precisely the alternating chains k, j, k, ...
with k + j = n + 1; from length 3 on this forces 2k, 2j != n, while at
length 2 only the d-squared exclusion 2k != n applies.
"""

from __future__ import annotations

import enum

from .graph import DimLike, as_dim
from .words import CompositionWord, WordLike, as_word


class TrivialityClass(enum.Enum):
    ZERO = "zero"
    NONTRIVIAL = "non-trivial"
    UNDEFINED = "undefined"


def classify_pair(k: int, j: int, n: DimLike) -> TrivialityClass:
    """Classify the second-order composition: nabla_j applied after nabla_k."""
    n = as_dim(n)
    for idx in (k, j):
        if not 1 <= idx <= n:
            raise ValueError(f"operator index {idx} out of range 1..{n}")
    if j == k + 1:
        return TrivialityClass.ZERO
    if k + j == n + 1:
        return TrivialityClass.NONTRIVIAL
    return TrivialityClass.UNDEFINED


def classify_word(w: WordLike, n: DimLike | None = None) -> TrivialityClass:
    """Classify a chain; single operators are non-trivial by convention."""
    if n is None:
        if not isinstance(w, CompositionWord):
            raise ValueError("n is required when w is a bare index sequence")
        word = w
    else:
        word = as_word(w, n)
    saw_zero = False
    for a, b in zip(word.indices, word.indices[1:]):
        cls = classify_pair(a, b, word.n)
        if cls is TrivialityClass.UNDEFINED:
            return TrivialityClass.UNDEFINED
        if cls is TrivialityClass.ZERO:
            saw_zero = True
    return TrivialityClass.ZERO if saw_zero else TrivialityClass.NONTRIVIAL


def _admissible_starts(n: int) -> list[int]:
    # exclude 2k = n and 2j = n (j = n+1-k), i.e. k = n/2 and k = n/2 + 1
    return [k for k in range(1, n + 1) if 2 * k != n and 2 * (n + 1 - k) != n]


def enumerate_nontrivial(n: DimLike, length: int) -> list[CompositionWord]:
    """All non-trivial chains of the given length, ordered by starting index.

    Non-trivial chains are the alternating words (k, n+1-k, k, ...).  At
    length exactly 2 every pair with k + j = n + 1 that is not a d-squared
    step survives; from length 3 on, a chain through the even-n boundary pair
    (n/2 + 1, n/2) necessarily picks up a d-squared step, so both 2k != n and
    2j != n must hold.  Length-1 words are all non-trivial.
    """
    n = as_dim(n)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if length == 1:
        return [CompositionWord(n, (k,)) for k in range(1, n + 1)]
    if length == 2:
        starts = [k for k in range(1, n + 1) if 2 * k != n]
    else:
        starts = _admissible_starts(n)
    out = []
    for k in starts:
        j = n + 1 - k
        indices = tuple(k if t % 2 == 0 else j for t in range(length))
        out.append(CompositionWord(n, indices))
    return out


def count_nontrivial(n: DimLike, length: int) -> int:
    """Number of non-trivial chains of the given length (>= 2)."""
    n = as_dim(n)
    if length < 2:
        raise ValueError(f"length must be >= 2, got {length}")
    if n % 2:
        return n
    return n - 1 if length == 2 else n - 2
