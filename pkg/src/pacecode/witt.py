"""
The ternary Golay code and the small Witt design S(5,6,12).

The design is not hardcoded: a 6-subset of the twelve columns of the Golay
generator (I|P) is a block when its column submatrix has rank 5 and an
information set when it is invertible. No other rank occurs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from pacecode.errors import PreconditionError, StructuralError
from pacecode.gf3 import LinearCode, as_gf3, identity, mat_rank

POINTS = tuple(range(1, 13))

GOLAY_P = as_gf3(
    [
        [0, 1, 1, 1, 1, 1],
        [1, 0, 1, 1, 2, 2],
        [1, 1, 0, 2, 1, 2],
        [1, 1, 2, 0, 2, 1],
        [1, 2, 1, 2, 0, 1],
        [1, 2, 2, 1, 1, 0],
    ]
)

# The eleven values i(a, b) listed for S(5,6,12); i(b, a) = i(a, b) gives the rest.
PRINTED_INTERSECTION_NUMBERS = {
    (5, 0): 1,
    (4, 0): 4,
    (3, 0): 12,
    (2, 0): 30,
    (1, 0): 66,
    (1, 1): 36,
    (2, 1): 18,
    (3, 1): 8,
    (4, 1): 3,
    (2, 2): 10,
    (3, 2): 5,
}

Block = tuple[int, ...]


def golay_generator() -> np.ndarray:
    """The 6 x 12 generator matrix (I | P) of the ternary Golay code."""
    return np.hstack([identity(6), GOLAY_P])


def golay_code() -> LinearCode:
    return LinearCode(golay_generator())


def classify_six_sets(gen: np.ndarray | None = None) -> tuple[list[Block], list[Block]]:
    """Split all 924 six-subsets of the columns into blocks and information sets.

    Both lists are lexicographically ordered tuples of 1-based column labels.
    """
    gen = golay_generator() if gen is None else as_gf3(gen)
    blocks, info_sets = [], []
    for s in combinations(POINTS, 6):
        r = mat_rank(gen[:, [x - 1 for x in s]])
        if r == 6:
            info_sets.append(s)
        elif r == 5:
            blocks.append(s)
        else:
            raise StructuralError(f"six-set {s} has rank {r}")
    return blocks, info_sets


def _mask(s: Iterable[int]) -> int:
    m = 0
    for x in s:
        m |= 1 << (x - 1)
    return m


@dataclass(frozen=True)
class WittDesign:
    """The 132 blocks of S(5,6,12) in lexicographic order."""

    blocks: tuple[Block, ...]

    @cached_property
    def complement(self) -> dict[Block, Block]:
        bset = set(self.blocks)
        out = {}
        for b in self.blocks:
            c = tuple(x for x in POINTS if x not in b)
            if c not in bset:
                raise StructuralError(f"complement of block {b} is not a block")
            out[b] = c
        return out

    @cached_property
    def masks(self) -> np.ndarray:
        return np.array([_mask(b) for b in self.blocks], dtype=np.int64)

    @cached_property
    def incidence(self) -> np.ndarray:
        """132 x 12 0/1 matrix, row per block."""
        m = np.zeros((len(self.blocks), 12), dtype=np.int8)
        for r, b in enumerate(self.blocks):
            m[r, [x - 1 for x in b]] = 1
        return m

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self._index

    @cached_property
    def _index(self) -> dict[Block, int]:
        return {b: i for i, b in enumerate(self.blocks)}

    def index(self, s: Iterable[int]) -> int:
        return self._index[tuple(sorted(s))]

    def blocks_avoiding(self, *points: int) -> list[Block]:
        return [b for b in self.blocks if not set(points) & set(b)]

    def steiner_violations(self, t: int = 5) -> list[tuple[tuple[int, ...], int]]:
        """Every t-subset whose number of containing blocks is not exactly one."""
        bad = []
        for s in combinations(POINTS, t):
            m = _mask(s)
            cnt = int(np.count_nonzero(self.masks & m == m))
            if cnt != 1:
                bad.append((s, cnt))
        return bad


@lru_cache(maxsize=None)
def witt_design() -> WittDesign:
    blocks, _ = classify_six_sets()
    design = WittDesign(tuple(blocks))
    bad = design.steiner_violations()
    if bad:
        raise StructuralError(f"{len(bad)} five-sets violate the Steiner property, e.g. {bad[0]}")
    design.complement  # noqa: B018 - validates complement closure
    return design


def _check_disjoint_sets(A: Iterable[int], B: Iterable[int], limit: int | None) -> tuple[set, set]:
    A, B = set(A), set(B)
    if A & B:
        raise PreconditionError(f"sets must be disjoint: {sorted(A & B)} in both")
    if not (A | B) <= set(POINTS):
        raise PreconditionError("points must lie in 1..12")
    if limit is not None and len(A) + len(B) > limit:
        raise PreconditionError(f"|A| + |B| must be at most {limit}")
    return A, B


def intersection_count(design: WittDesign, A: Iterable[int], B: Iterable[int]) -> int:
    """Number of blocks containing A and disjoint from B (|A| + |B| <= 5)."""
    A, B = _check_disjoint_sets(A, B, limit=5)
    a, b = _mask(A), _mask(B)
    m = design.masks
    return int(np.count_nonzero((m & a == a) & (m & b == 0)))


def intersection_table(design: WittDesign) -> dict[tuple[int, int], int]:
    """i(a, b) for every a + b <= 5, checked over every placement of A and B."""
    m = design.masks
    table = {}
    for a in range(6):
        for b in range(6 - a):
            counts = set()
            for A in combinations(POINTS, a):
                rest = [x for x in POINTS if x not in A]
                am = _mask(A)
                hits_a = m[m & am == am]
                for B in combinations(rest, b):
                    counts.add(int(np.count_nonzero(hits_a & _mask(B) == 0)))
            if len(counts) != 1:
                raise StructuralError(f"i({a},{b}) depends on placement: {sorted(counts)}")
            table[(a, b)] = counts.pop()
    for (a, b), val in table.items():
        if table[(b, a)] != val:
            raise StructuralError(f"i({a},{b}) = {val} but i({b},{a}) = {table[(b, a)]}")
    return table


def table_from_recurrence(column: dict[int, int]) -> dict[tuple[int, int], int]:
    """Fill i(a, b) from the values i(a, 0) via i(a,b) = i(a,b-1) - i(a+1,b-1)."""
    table = {(a, 0): column[a] for a in range(6)}
    for b in range(1, 6):
        for a in range(6 - b):
            table[(a, b)] = table[(a, b - 1)] - table[(a + 1, b - 1)]
    return table


# --- export ----------------------------------------------------------------


def blocks_to_json(blocks: Iterable[Block]) -> str:
    return json.dumps([list(b) for b in blocks])


def blocks_to_text(blocks: Iterable[Block]) -> str:
    return "".join(" ".join(map(str, b)) + "\n" for b in blocks)
