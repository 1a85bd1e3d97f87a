"""
Codes C_{A,B}(blocks, GF(3)) built from a block family.

Rows are the points outside A and B, columns the blocks disjoint from A;
the column of block X is the characteristic vector of X minus B.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from pacecode.errors import PreconditionError, StructuralError
from pacecode.gf3 import LinearCode, as_gf3
from pacecode.witt import POINTS, Block, WittDesign


@dataclass(frozen=True, eq=False)
class DesignCodeMatrix:
    matrix: np.ndarray
    row_index: tuple[int, ...]
    col_index: tuple[Block, ...]

    @property
    def code(self) -> LinearCode:
        return LinearCode(self.matrix)


def build_design_code(
    blocks: WittDesign | Iterable[Sequence[int]],
    A: Iterable[int] = (),
    B: Iterable[int] = (),
    points: Sequence[int] | None = None,
) -> DesignCodeMatrix:
    """Generator matrix of C_{A,B} for an arbitrary block family.

    ``points`` is the ground set; it defaults to 1..12 for the Witt design
    and to the union of the blocks otherwise.
    """
    if isinstance(blocks, WittDesign):
        fam = [tuple(b) for b in blocks.blocks]
        points = POINTS if points is None else points
    else:
        fam = sorted(tuple(sorted(b)) for b in blocks)
        if points is None:
            points = sorted({x for b in fam for x in b})
    A, B = set(A), set(B)
    ground = set(points)
    if A & B:
        raise PreconditionError(f"A and B must be disjoint: {sorted(A & B)} in both")
    if not (A | B) <= ground:
        raise PreconditionError("A and B must be subsets of the ground set")
    rows = tuple(sorted(ground - A - B))
    cols = tuple(b for b in fam if not A.intersection(b))
    m = np.zeros((len(rows), len(cols)), dtype=np.int8)
    pos = {x: i for i, x in enumerate(rows)}
    for j, X in enumerate(cols):
        for x in X:
            if x in pos:
                m[pos[x], j] = 1
    return DesignCodeMatrix(m, rows, cols)


def equivalence_map_prop5(m12_matrix, manifest: Sequence[Block]) -> np.ndarray:
    """Carry the M12-form Pace generator onto the C_{{11},{12}} design code.

    Columns whose block X contains 11 are negated and re-indexed by the
    complement of X (which contains 12); then columns are sorted by their
    new block label. The result is expected to coincide with
    ``build_design_code(design, A={11}, B={12})``.
    """
    G = as_gf3(m12_matrix)
    if G.shape != (10, len(manifest)):
        raise StructuralError(f"matrix shape {G.shape} does not match a manifest of {len(manifest)} blocks")
    if any(12 in X for X in manifest):
        raise StructuralError("manifest blocks must avoid the point 12")
    relabeled = []
    for j, X in enumerate(manifest):
        col = G[:, j]
        if 11 in X:
            label = tuple(x for x in POINTS if x not in X)
            col = as_gf3(-col.astype(np.int64))
        else:
            label = tuple(X)
        relabeled.append((label, col))
    relabeled.sort(key=lambda t: t[0])
    return np.stack([c for _, c in relabeled], axis=1)


def c11_invariance_check(design: WittDesign, workers: int = 1) -> bool:
    """Every ordered pair of distinct singletons ({a}, {b}) gives the same weight enumerator."""
    return len(c11_weight_enumerators(design, workers)) == 1


def c11_weight_enumerators(design: WittDesign, workers: int = 1) -> dict[tuple, list[tuple[int, int]]]:
    """Group the 132 ordered singleton pairs by weight enumerator."""
    seen: dict[tuple, list[tuple[int, int]]] = {}
    for a, b in permutations(POINTS, 2):
        dist = build_design_code(design, {a}, {b}).code.weight_distribution(workers)
        key = tuple(sorted((w, c) for w, c in dist.items() if c))
        seen.setdefault(key, []).append((a, b))
    return seen
