"""Chain indices and their lexicographic order.

A chain index (l, k) addresses position k of chain l.  Indices are ordered
lexicographically: (p, q) < (l, k) iff p < l, or p = l and q < k, so the
immediate predecessor of (l, k) for k > 1 is (l, k - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True, order=True)
class ChainIndex:
    chain: int
    position: int

    def __post_init__(self):
        if self.chain < 1 or self.position < 1:
            raise ValueError("chain and position are 1-based positive integers")

    def immediate_predecessor(self) -> Optional["ChainIndex"]:
        if self.position == 1:
            return None
        return ChainIndex(self.chain, self.position - 1)

    def __repr__(self) -> str:
        return f"({self.chain},{self.position})"


def lex_compare(a: ChainIndex, b: ChainIndex) -> int:
    """-1, 0, or 1 as a is lexicographically below, equal to, or above b."""
    if a < b:
        return -1
    if a == b:
        return 0
    return 1


def immediate_predecessor(a: ChainIndex) -> Optional[ChainIndex]:
    """(l, k-1) when k > 1, else None."""
    return a.immediate_predecessor()
