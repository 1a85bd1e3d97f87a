"""
Dense linear algebra over GF(3).

Matrices and vectors are numpy integer arrays with entries in {0, 1, 2};
every function reduces its inputs mod 3, so -1 may be passed for 2.
Functions never modify their arguments.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

import numpy as np

from pacecode.errors import DimensionError, EnumerationTooLarge, PreconditionError

MAX_ENUM_DIM = 20
# Number of information digits expanded in one enumeration chunk (3**10 rows).
_CHUNK_DIGITS = 10

# 2 is its own inverse mod 3, as is 1.
_INV = (0, 1, 2)


def as_gf3(a) -> np.ndarray:
    """Return a fresh int8 array holding ``a`` reduced mod 3."""
    return np.mod(np.asarray(a, dtype=np.int64), 3).astype(np.int8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int8)


def row_echelon(m, reduced: bool = True) -> tuple[np.ndarray, list[int]]:
    """Gaussian elimination mod 3.

    Pivots are taken in the leftmost available column, using the topmost
    eligible row, and each pivot is scaled to 1. With ``reduced=True`` the
    result is the unique reduced row-echelon form of the row space.

    Returns:
        (R, pivots): the echelon matrix (same shape as ``m``, zero rows at
        the bottom) and the list of pivot column indices.
    """
    R = as_gf3(m)
    if R.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {R.shape}")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        if R[r, c] != 1:
            R[r] = (R[r] * _INV[R[r, c]]) % 3
        lo = 0 if reduced else r + 1
        others = np.flatnonzero(R[lo:, c]) + lo
        others = others[others != r]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, c], R[r])) % 3
        pivots.append(c)
        r += 1
    return R, pivots


def rref(m) -> np.ndarray:
    return row_echelon(m, reduced=True)[0]


def mat_rank(m) -> int:
    """Rank of ``m`` over GF(3). An empty matrix has rank 0."""
    a = np.asarray(m)
    if a.size == 0:
        return 0
    return len(row_echelon(a, reduced=False)[1])


def inner_product(u, v) -> int:
    u, v = as_gf3(u), as_gf3(v)
    if u.shape != v.shape or u.ndim != 1:
        raise DimensionError(f"cannot take inner product of shapes {u.shape} and {v.shape}")
    return int(np.dot(u.astype(np.int64), v.astype(np.int64)) % 3)


def matmul(a, b) -> np.ndarray:
    a, b = as_gf3(a), as_gf3(b)
    if a.shape[-1] != b.shape[0]:
        raise DimensionError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return (a.astype(np.int64) @ b.astype(np.int64) % 3).astype(np.int8)


def row_space_equal(a, b) -> bool:
    """True iff ``a`` and ``b`` span the same subspace of GF(3)^n."""
    a, b = as_gf3(a), as_gf3(b)
    if a.shape[1] != b.shape[1]:
        raise DimensionError(f"column counts differ: {a.shape[1]} != {b.shape[1]}")
    ra, rb = row_echelon(a)[0], row_echelon(b)[0]
    ka, kb = int(np.any(ra, axis=1).sum()), int(np.any(rb, axis=1).sum())
    return ka == kb and np.array_equal(ra[:ka], rb[:kb])


def information_vectors(k: int) -> np.ndarray:
    """All 3**k vectors of GF(3)^k in base-3 counter order, digit 1 fastest."""
    idx = np.arange(3**k, dtype=np.int64)
    return ((idx[:, None] // 3 ** np.arange(k, dtype=np.int64)) % 3).astype(np.int8)


def _chunk_products(info: np.ndarray, gen: np.ndarray) -> np.ndarray:
    # float32 matmul is exact here: every dot product is at most 4 * MAX_ENUM_DIM.
    prod = info.astype(np.float32) @ gen.astype(np.float32)
    return np.mod(prod.astype(np.int16), 3).astype(np.int8)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear code over GF(3) given by a generator matrix (rows may be dependent)."""

    generator: np.ndarray = field(repr=False)

    def __post_init__(self):
        g = as_gf3(self.generator)
        if g.ndim != 2:
            raise DimensionError(f"generator must be 2-d, got shape {g.shape}")
        g.setflags(write=False)
        object.__setattr__(self, "generator", g)

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @cached_property
    def k(self) -> int:
        return mat_rank(self.generator)

    @cached_property
    def basis(self) -> np.ndarray:
        """Reduced row-echelon basis, k x n."""
        return row_echelon(self.generator)[0][: self.k]

    def codeword_chunks(self) -> Iterator[np.ndarray]:
        """Yield all 3**k codewords, in information-vector counter order.

        Codewords are produced from the echelon basis, so each one appears
        exactly once even when the generator has dependent rows.
        """
        k = self.k
        if k > MAX_ENUM_DIM:
            raise EnumerationTooLarge(f"enumeration too large: k={k} exceeds guard {MAX_ENUM_DIM}")
        low = min(k, _CHUNK_DIGITS)
        G = self.basis
        base = _chunk_products(information_vectors(low), G[:low])
        high = G[low:]
        if high.shape[0] == 0:
            yield base
            return
        for digits in information_vectors(k - low):
            offset = _chunk_products(digits[None, :], high)[0]
            yield (base + offset) % 3

    def weight_distribution(self, workers: int = 1) -> dict[int, int]:
        """Exhaustive weight distribution as ``{weight: count}`` for weights 0..n.

        ``workers`` > 1 spreads the chunks over a thread pool; the result is a
        plain sum and does not depend on the split.
        """
        n = self.n

        def count(chunk: np.ndarray) -> np.ndarray:
            return np.bincount(np.count_nonzero(chunk, axis=1), minlength=n + 1)

        chunks = self.codeword_chunks()
        if workers <= 1:
            total = sum((count(c) for c in chunks), np.zeros(n + 1, dtype=np.int64))
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                total = sum(pool.map(count, chunks), np.zeros(n + 1, dtype=np.int64))
        return {w: int(total[w]) for w in range(n + 1)}

    def min_distance(self, workers: int = 1) -> int:
        if self.k == 0:
            raise PreconditionError("minimum distance is undefined for the zero code")
        dist = self.weight_distribution(workers)
        return min(w for w, c in dist.items() if w > 0 and c > 0)

    def is_self_orthogonal(self) -> bool:
        g = self.generator.astype(np.int64)
        return not np.any((g @ g.T) % 3)


def weight_distribution(code: LinearCode, workers: int = 1) -> dict[int, int]:
    return code.weight_distribution(workers)


def min_distance(code: LinearCode, workers: int = 1) -> int:
    return code.min_distance(workers)


def is_self_orthogonal(code: LinearCode) -> bool:
    return code.is_self_orthogonal()


def nonzero_weights(dist: dict[int, int]) -> list[int]:
    return [w for w, c in dist.items() if c]


# --- serialization -----------------------------------------------------------


def format_matrix(m) -> str:
    """Text form: ``rows cols`` header, then one space-separated line per row."""
    a = as_gf3(m)
    lines = [f"{a.shape[0]} {a.shape[1]}"]
    lines.extend(" ".join(str(int(x)) for x in row) for row in a)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty matrix text")
    try:
        rows, cols = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    body = [ln.split() for ln in lines[1 : rows + 1]]
    if len(body) != rows or any(len(r) != cols for r in body):
        raise DimensionError(f"matrix body does not match header {rows}x{cols}")
    vals = [[int(x) for x in r] for r in body]
    if any(x not in (0, 1, 2) for r in vals for x in r):
        raise ValueError("matrix entries must be 0, 1 or 2")
    return np.array(vals, dtype=np.int8).reshape(rows, cols)


def matrix_to_json(m) -> str:
    a = as_gf3(m)
    return json.dumps({"rows": a.shape[0], "cols": a.shape[1], "entries": a.tolist()})


def matrix_from_json(text: str) -> np.ndarray:
    obj = json.loads(text)
    rows, cols = obj["rows"], obj["cols"]
    a = np.array(obj["entries"], dtype=np.int64).reshape(rows, cols)
    if np.any((a < 0) | (a > 2)):
        raise ValueError("matrix entries must be 0, 1 or 2")
    return a.astype(np.int8)
