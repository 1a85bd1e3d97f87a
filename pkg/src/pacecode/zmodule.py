"""
The 10-dimensional M12-module Z = I / <Delta> over GF(3).

I is the augmentation ideal of GF(3)^12 (coordinate sum zero) and Delta the
all-ones vector, which lies in I because 12 is divisible by 3. Z has basis
z_1..z_10, the images of u_i = v_i - v_12, and z_11 = -(z_1 + ... + z_10).
A vector sum a_i v_i of I therefore maps to coordinates a_i - a_11, i <= 10.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from pacecode.errors import DimensionError, PreconditionError, StructuralError
from pacecode.gf3 import as_gf3
from pacecode.perm import Permutation, PermGroup
from pacecode.witt import POINTS, Block, WittDesign, witt_design

Z_DIM = 10


def reduce_to_z(coeffs) -> np.ndarray:
    """Map an element of the augmentation ideal (12 coefficients) into Z.

    Also accepts a stack of vectors with shape (..., 12).
    """
    a = as_gf3(coeffs)
    if a.shape[-1] != 12:
        raise DimensionError(f"expected 12 coefficients, got shape {a.shape}")
    if np.any(a.sum(axis=-1, dtype=np.int64) % 3):
        raise PreconditionError("vector is not in the augmentation ideal (coefficient sum != 0 mod 3)")
    return as_gf3(a[..., :10].astype(np.int64) - a[..., 10:11])


def lift_from_z(z) -> np.ndarray:
    """A preimage in the augmentation ideal: a_i = z_i, a_11 = 0, a_12 balances."""
    z = as_gf3(z)
    out = np.zeros(z.shape[:-1] + (12,), dtype=np.int64)
    out[..., :10] = z
    out[..., 11] = -z.sum(axis=-1, dtype=np.int64)
    return as_gf3(out)


def indicator(s: Iterable[int]) -> np.ndarray:
    v = np.zeros(12, dtype=np.int8)
    v[[x - 1 for x in s]] = 1
    return v


def induced_matrix(p: Permutation) -> np.ndarray:
    """Matrix of ``p`` acting on Z, column j = image of z_j."""
    m = np.zeros((Z_DIM, Z_DIM), dtype=np.int8)
    for j in range(1, Z_DIM + 1):
        img = np.zeros(12, dtype=np.int64)
        img[p(j) - 1] += 1
        img[p(12) - 1] -= 1
        m[:, j - 1] = reduce_to_z(img)
    return m


def induced_matrices(group: PermGroup) -> np.ndarray:
    """Induced matrices of every group element, shape (order, 10, 10), in element order."""
    E = group.elements.astype(np.int64)
    n = E.shape[0]
    rows = np.arange(n)
    out = np.zeros((n, Z_DIM, Z_DIM), dtype=np.int64)
    for j in range(Z_DIM):
        img = np.zeros((n, 12), dtype=np.int64)
        img[rows, E[:, j]] += 1
        img[rows, E[:, 11]] -= 1
        out[:, :, j] = img[:, :10] - img[:, 10:11]
    return as_gf3(out)


def normalize_projective(z) -> np.ndarray:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    z = as_gf3(z)
    nz = np.flatnonzero(z)
    if nz.size == 0:
        raise PreconditionError("the zero vector is not a projective point")
    return z if z[nz[0]] == 1 else as_gf3(2 * z.astype(np.int64))


def block_z_vector(X: Iterable[int], design: WittDesign | None = None) -> np.ndarray:
    """z_X for a block X."""
    design = witt_design() if design is None else design
    X = tuple(sorted(X))
    if X not in design:
        raise PreconditionError(f"{X} is not a block of S(5,6,12)")
    return reduce_to_z(indicator(X))


@dataclass(frozen=True, eq=False)
class PaceGenerator:
    """The 10 x 66 generator with columns z_X for the blocks X avoiding 12."""

    matrix: np.ndarray
    manifest: tuple[Block, ...]

    def column_of(self, X: Sequence[int]) -> int:
        return self.manifest.index(tuple(sorted(X)))


@lru_cache(maxsize=None)
def pace_generator_m12() -> PaceGenerator:
    design = witt_design()
    manifest = tuple(design.blocks_avoiding(12))
    cols = [block_z_vector(X, design) for X in manifest]
    m = np.stack(cols, axis=1)
    m.setflags(write=False)
    return PaceGenerator(m, manifest)


def column_action(p: Permutation, manifest: Sequence[Block]) -> list[tuple[int, int]]:
    """Where ``p`` sends each column: list of (target column, sign).

    The image block p(X) is used as is when it avoids 12 (sign +1); otherwise
    its complement indexes the column and z_{p(X)} = -z_complement (sign -1).
    """
    index = {b: i for i, b in enumerate(manifest)}
    out = []
    for X in manifest:
        Y = tuple(sorted(p.image_set(X)))
        if 12 in Y:
            Y = tuple(x for x in POINTS if x not in Y)
            sign = -1
        else:
            sign = 1
        if Y not in index:
            raise StructuralError(f"image of {X} under {p} is not in the manifest")
        out.append((index[Y], sign))
    return out


def verify_monomial_invariance(
    gen_matrix=None, p: Permutation | None = None, manifest: Sequence[Block] | None = None
) -> bool:
    """Check that ``p`` permutes the columns of the Pace generator up to sign.

    Returns True iff induced_matrix(p) @ G equals G with its columns moved
    and negated by ``column_action``, and that column map is a bijection.
    A permutation that does not preserve the blocks raises StructuralError.
    """
    if gen_matrix is None or manifest is None:
        pg = pace_generator_m12()
        gen_matrix = pg.matrix if gen_matrix is None else gen_matrix
        manifest = pg.manifest if manifest is None else manifest
    p = Permutation.identity() if p is None else p
    G = as_gf3(gen_matrix).astype(np.int64)
    acted = (induced_matrix(p).astype(np.int64) @ G) % 3
    action = column_action(p, manifest)
    if len({t for t, _ in action}) != len(action):
        return False
    expected = np.stack([(s * G[:, t]) % 3 for t, s in action], axis=1)
    return bool(np.array_equal(acted, expected))


def projective_point_stabilizer_orders(group: PermGroup, gen: PaceGenerator | None = None) -> list[int]:
    """For each column's projective point, the number of elements fixing it up to scalar."""
    gen = pace_generator_m12() if gen is None else gen
    mats = induced_matrices(group).astype(np.float32)
    G = gen.matrix.astype(np.int64)
    # float32 products of 0..2 entries over 10 terms are exact.
    images = np.mod((mats @ G.astype(np.float32)).astype(np.int64), 3)
    plus = np.all(images == G[None, :, :], axis=1)
    minus = np.all(images == (-G % 3)[None, :, :], axis=1)
    return [int(c) for c in (plus | minus).sum(axis=0)]
