"""Composition words: finite chains of operator indices in application order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import NotComposableError
from .graph import DimLike, as_dim, is_composable

# Operator names for n = 3, keyed by index.
_NAMED_N3 = {1: "grad", 2: "curl", 3: "div"}


@dataclass(frozen=True)
class CompositionWord:
    """A nonempty chain (i_1, ..., i_k); i_1 is applied first."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        as_dim(self.n)
        if not self.indices:
            raise ValueError("composition word must be nonempty")
        for i in self.indices:
            if not 1 <= i <= self.n:
                raise ValueError(f"operator index {i} out of range 1..{self.n}")

    def __len__(self) -> int:
        return len(self.indices)

    def first_invalid_pair(self) -> Optional[tuple[int, int]]:
        """First consecutive pair that is not composable, or None."""
        for a, b in zip(self.indices, self.indices[1:]):
            if not is_composable(a, b, self.n):
                return (a, b)
        return None

    def is_meaningful(self) -> bool:
        return self.first_invalid_pair() is None

    def require_meaningful(self) -> None:
        bad = self.first_invalid_pair()
        if bad is not None:
            raise NotComposableError(bad[0], bad[1], self.n)

    def composition_notation(self) -> str:
        """Render with the last-applied operator leftmost."""
        return " ∘ ".join(f"∇_{i}" for i in reversed(self.indices))

    def named_notation(self) -> Optional[str]:
        """grad/curl/div rendering, available only for n = 3."""
        if self.n != 3:
            return None
        return " ∘ ".join(_NAMED_N3[i] for i in reversed(self.indices))


WordLike = Union[CompositionWord, Sequence[int]]


def as_word(w: WordLike, n: DimLike) -> CompositionWord:
    n = as_dim(n)
    if isinstance(w, CompositionWord):
        if w.n != n:
            raise ValueError(f"word is for n={w.n}, expected n={n}")
        return w
    return CompositionWord(n, tuple(w))
