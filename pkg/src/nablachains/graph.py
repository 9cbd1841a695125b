"""Composability relation between the operators nabla_1..nabla_n on R^n.

nabla_j can be applied after nabla_i exactly when j = i + 1 or i + j = n + 1.
This module materializes that relation as an adjacency matrix; everything else
in the package (counting, classification, the symbolic engine) is driven by it.

Indices are 1-based throughout the public surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Dimension:
    """Space dimension n (n >= 3) together with m = floor(n/2)."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"dimension must be >= 3, got {self.n}")

    @property
    def m(self) -> int:
        return self.n // 2


DimLike = Union[int, Dimension]


def as_dim(n: DimLike) -> int:
    """Validate and unwrap a dimension argument."""
    if isinstance(n, Dimension):
        return n.n
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    return int(n)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"operator index {i} out of range 1..{n}")


def is_composable(i: int, j: int, n: DimLike) -> bool:
    """True iff nabla_j may be applied after nabla_i in dimension n."""
    n = as_dim(n)
    _check_index(i, n)
    _check_index(j, n)
    return j == i + 1 or i + j == n + 1


def build_adjacency(n: DimLike) -> list[list[int]]:
    """The n x n 0/1 matrix with entry (i, j) = is_composable(i, j, n).

    Rows/columns are returned 0-based (entry [i-1][j-1] for operators i, j).
    """
    n = as_dim(n)
    return [
        [1 if (j == i + 1 or i + j == n + 1) else 0 for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def successors(i: int, n: DimLike) -> list[int]:
    """Ascending list of all j composable after i."""
    n = as_dim(n)
    _check_index(i, n)
    return [j for j in range(1, n + 1) if j == i + 1 or i + j == n + 1]
