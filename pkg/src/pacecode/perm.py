"""
Permutations of {1, ..., 12} and fully enumerated permutation groups.

Composition applies the right factor first: ``(a * b)(x) == a(b(x))``.
Points are 1-based everywhere in the public interface. Groups store their
elements as an ``(order, 12)`` array of 0-based images, which makes orbit
and stabilizer scans plain array operations.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from pacecode.errors import PreconditionError

DEGREE = 12
_POINTS = range(1, DEGREE + 1)
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..12}; ``images[i-1]`` is the image of point ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(_POINTS):
            raise ValueError(f"not a permutation of 1..{DEGREE}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls) -> Permutation:
        return cls(tuple(_POINTS))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(_POINTS)
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"cycles are not disjoint: {cyc}")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse cycle notation such as ``"(2,3,5,6,4)(8,9,11,12,10)"``."""
        text = text.strip()
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            if body.strip():
                cycles.append([int(t) for t in body.split(",")])
        return cls.from_cycles(cycles)

    @classmethod
    def from_array(cls, row: np.ndarray) -> Permutation:
        return cls(tuple(int(x) + 1 for x in row))

    def as_array(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int8) - 1

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * DEGREE
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    def image_set(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(self(x) for x in s)

    def cycles(self) -> list[tuple[int, ...]]:
        out, seen = [], set()
        for start in _POINTS:
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation ``x -> a(b(x))``."""
    return Permutation(tuple(a.images[y - 1] for y in b.images))


def _keys(elems: np.ndarray) -> np.ndarray:
    # Base-12 encoding of an image row (or tuple); 12**12 < 2**63.
    w = DEGREE ** np.arange(elems.shape[-1], dtype=np.int64)
    return elems.astype(np.int64) @ w


def _masks(images: np.ndarray) -> np.ndarray:
    """Bitmask of each row's point set (0-based points -> bits)."""
    return np.bitwise_or.reduce(np.left_shift(1, images.astype(np.int64)), axis=-1)


def set_mask(s: Iterable[int]) -> int:
    m = 0
    for x in s:
        m |= 1 << (x - 1)
    return m


def mask_to_set(m: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(DEGREE) if m >> i & 1)


def _check_points(s: Iterable[int]) -> list[int]:
    pts = sorted(set(int(x) for x in s))
    if any(x < 1 or x > DEGREE for x in pts):
        raise PreconditionError(f"points must lie in 1..{DEGREE}: {pts}")
    return pts


class PermGroup:
    """The group generated by ``generators``, with every element enumerated."""

    def __init__(self, generators: Sequence[Permutation]):
        if not generators:
            raise PreconditionError("need at least one generator")
        self.generators = tuple(generators)
        self.elements = _closure([g.as_array() for g in self.generators])
        self.elements.setflags(write=False)

    @property
    def order(self) -> int:
        return self.elements.shape[0]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return (Permutation.from_array(row) for row in self.elements)

    @cached_property
    def _key_set(self) -> np.ndarray:
        return np.sort(_keys(self.elements))

    def __contains__(self, p: Permutation) -> bool:
        key = _keys(p.as_array()[None, :])[0]
        i = np.searchsorted(self._key_set, key)
        return bool(i < self.order and self._key_set[i] == key)

    def set_images(self, s: Iterable[int]) -> np.ndarray:
        """Bitmask of the image of ``s`` under every element, in element order."""
        pts = _check_points(s)
        if not pts:
            return np.zeros(self.order, dtype=np.int64)
        return _masks(self.elements[:, np.array(pts) - 1])

    def set_stabilizer(self, s: Iterable[int]) -> np.ndarray:
        """Boolean selector of the elements mapping ``s`` onto itself."""
        pts = _check_points(s)
        return self.set_images(pts) == set_mask(pts)

    def set_stabilizer_order(self, s: Iterable[int]) -> int:
        return int(self.set_stabilizer(s).sum())

    def orbit_of_set(self, s: Iterable[int]) -> list[tuple[int, ...]]:
        """Distinct images of ``s``, as sorted tuples in lexicographic order."""
        masks = np.unique(self.set_images(s))
        return sorted(mask_to_set(int(m)) for m in masks)

    def tuple_images(self, t: Sequence[int]) -> np.ndarray:
        """Images of the ordered tuple ``t`` under every element, 1-based."""
        idx = np.array(t, dtype=np.int64) - 1
        return self.elements[:, idx].astype(np.int64) + 1

    def is_sharply_k_transitive(self, k: int) -> bool:
        if not 1 <= k <= DEGREE:
            raise PreconditionError(f"k must lie in 1..{DEGREE}, got {k}")
        if self.order != math.perm(DEGREE, k):
            return False
        ref = list(range(1, k + 1))
        imgs = self.tuple_images(ref)
        fixers = int(np.all(imgs == np.array(ref), axis=1).sum())
        if fixers != 1:
            return False
        # Regular on ordered k-tuples: the orbit of ref must be all of them.
        return len(np.unique(_keys(imgs - 1))) == math.perm(DEGREE, k)


def _closure(gens: list[np.ndarray]) -> np.ndarray:
    """Breadth-first closure under right multiplication by the generators."""
    ident = np.arange(DEGREE, dtype=np.int8)[None, :]
    seen = _keys(ident)
    elems = [ident]
    frontier = ident
    while frontier.shape[0]:
        # row e composed with g: x -> e(g(x)), i.e. e[:, g]
        cand = np.concatenate([frontier[:, g] for g in gens])
        keys = _keys(cand)
        keys, first = np.unique(keys, return_index=True)
        fresh = ~np.isin(keys, seen)
        frontier = cand[first[fresh]]
        seen = np.union1d(seen, keys[fresh])
        elems.append(frontier)
    return np.concatenate(elems)


def generate_group(gens: Sequence[Permutation]) -> PermGroup:
    return PermGroup(gens)


# Generators of M12 acting on the columns of the ternary Golay matrix (I|P).
H1 = Permutation.parse("(2,3,5,6,4)(8,9,11,12,10)")
H2 = Permutation.parse("(2,3)(4,5)(8,9)(10,11)")
H3 = Permutation.parse("(3,5,4,6)(9,11,10,12)")
H4 = Permutation.parse("(1,2)(5,6)(7,8)(11,12)")
G = Permutation.parse("(5,12)(6,11)(7,8)(9,10)")

M12_GENERATORS = {"h1": H1, "h2": H2, "h3": H3, "h4": H4, "g": G}


@lru_cache(maxsize=None)
def m12() -> PermGroup:
    return PermGroup([H1, H2, H3, H4, G])


@lru_cache(maxsize=None)
def information_set_stabilizer() -> PermGroup:
    """The subgroup generated by h1..h4, which fixes {1,...,6} setwise."""
    return PermGroup([H1, H2, H3, H4])
