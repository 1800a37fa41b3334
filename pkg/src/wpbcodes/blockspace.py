"""The weighted poset block space: labelings, weights, distances, balls.

A space is (P, pi, w) over GF(q): poset P on {1..s}, block sizes
pi = (k_1..k_s) partitioning the n coordinates, and a coordinate weight w.
The weight of a vector u is

    sum over maximal blocks of the ideal generated by supp(u)
        of the max coordinate weight in that block,
    plus max_weight for every non-maximal block of the ideal.

Vectors are tuples of ints in the public API.  Exhaustive scans go through
a numpy batch engine: the full space is enumerated in odometer order (last
coordinate fastest) in chunks, and batch_weights evaluates the formula on
whole (N, n) arrays at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import LengthMismatch, OutOfRange, SpaceTooLarge
from .field import Field
from .poset import Poset
from .weights import WeightFn, hamming_weight

DEFAULT_MAX_SPACE = 1 << 24
_CHUNK = 1 << 14

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Labeling:
    """Block sizes k_1..k_s; block i occupies coordinates offset_i..offset_i+k_i-1."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) < 1:
            raise ValueError("labeling needs at least one block")
        if any(k < 1 for k in self.sizes):
            raise ValueError(f"block sizes must be >= 1, got {self.sizes}")
        object.__setattr__(self, "sizes", tuple(int(k) for k in self.sizes))

    @property
    def s(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for k in self.sizes:
            out.append(acc)
            acc += k
        return tuple(out)

    def block_slice(self, i: int) -> slice:
        """Coordinate slice of block i (1-based)."""
        if not 1 <= i <= self.s:
            raise OutOfRange(f"block {i} outside 1..{self.s}")
        start = self.offsets[i - 1]
        return slice(start, start + self.sizes[i - 1])


class BlockSpace:
    """(GF(q)^n, d_{w,(P,pi)}) for a poset P, labeling pi and weight w."""

    def __init__(self, poset: Poset, labeling: Labeling, field: Field, weight: WeightFn):
        if poset.s != labeling.s:
            raise ValueError(
                f"poset has {poset.s} elements but labeling has {labeling.s} blocks"
            )
        if weight.field != field:
            raise ValueError("weight is defined over a different field")
        self.poset = poset
        self.labeling = labeling
        self.field = field
        self.weight = weight
        self.n = labeling.n
        self.s = labeling.s
        self.q = field.q
        self.size: int = field.q**self.n

        # batch-engine tables
        self._wt = np.asarray(weight.table, dtype=np.int64)
        self._offsets = np.asarray(labeling.offsets, dtype=np.intp)
        leq = poset.matrix()
        # (supp @ down)[v, j] > 0  iff  exists i in supp(v) with j <=_P i
        self._down = leq.T.astype(np.int64)
        # (ideal @ up_strict)[v, j] > 0  iff  exists j' in ideal(v) with j <_P j'
        self._up_strict = (leq & ~np.eye(poset.s, dtype=bool)).T.astype(np.int64)
        self._radix = self.q ** np.arange(self.n - 1, -1, -1, dtype=np.int64)

    # vector plumbing --------------------------------------------------------

    def _coerce(self, u: Sequence[int]) -> Vector:
        v = tuple(int(x) for x in u)
        if len(v) != self.n:
            raise LengthMismatch(f"vector has length {len(v)}, ambient n={self.n}")
        if any(not 0 <= x < self.q for x in v):
            raise ValueError(f"coordinates must lie in 0..{self.q - 1}")
        return v

    def zero(self) -> Vector:
        return (0,) * self.n

    def add(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        a, b = self._coerce(u), self._coerce(v)
        return tuple(self.field.add(x, y) for x, y in zip(a, b))

    def sub(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        a, b = self._coerce(u), self._coerce(v)
        return tuple(self.field.sub(x, y) for x, y in zip(a, b))

    def neg(self, u: Sequence[int]) -> Vector:
        return tuple(self.field.neg(x) for x in self._coerce(u))

    def block(self, u: Sequence[int], i: int) -> Vector:
        return self._coerce(u)[self.labeling.block_slice(i)]

    # the metric -------------------------------------------------------------

    def block_support(self, u: Sequence[int]) -> frozenset[int]:
        """Indices of nonzero blocks (1-based)."""
        v = self._coerce(u)
        return frozenset(
            i for i in range(1, self.s + 1) if any(v[self.labeling.block_slice(i)])
        )

    def block_max_weight(self, u: Sequence[int], i: int) -> int:
        """Max coordinate weight within block i."""
        return max(self.weight(x) for x in self.block(u, i))

    def wpb_weight(self, u: Sequence[int]) -> int:
        """The weighted poset block weight of u (direct formula evaluation)."""
        v = self._coerce(u)
        supp = self.block_support(v)
        if not supp:
            return 0
        ideal = self.poset.ideal(supp)
        maximal = self.poset.maximal_elements(ideal)
        top = sum(self.block_max_weight(v, i) for i in maximal)
        return top + self.weight.max_weight * (len(ideal) - len(maximal))

    def wpb_distance(self, u: Sequence[int], v: Sequence[int]) -> int:
        return self.wpb_weight(self.sub(u, v))

    # siblings ---------------------------------------------------------------

    def with_weight(self, weight: WeightFn) -> BlockSpace:
        """Same poset/labeling/field under a different coordinate weight."""
        return BlockSpace(self.poset, self.labeling, self.field, weight)

    def hamming_sibling(self) -> BlockSpace:
        return self.with_weight(hamming_weight(self.field))

    # batch engine -----------------------------------------------------------

    def batch_weights(self, arr: np.ndarray) -> np.ndarray:
        """Weights of the rows of an (N, n) uint8 array."""
        wt = self._wt[arr]
        blockmax = np.maximum.reduceat(wt, self._offsets, axis=1)
        supp = (blockmax > 0).astype(np.int64)
        ideal = (supp @ self._down) > 0
        maximal = ideal & ~(((ideal.astype(np.int64)) @ self._up_strict) > 0)
        mw = self.weight.max_weight
        return (blockmax * maximal).sum(axis=1) + mw * (
            ideal.sum(axis=1) - maximal.sum(axis=1)
        )

    def batch_sub(self, arr: np.ndarray, v: Sequence[int]) -> np.ndarray:
        row = np.asarray(self._coerce(v), dtype=np.uint8)
        return self.field.sub_table[arr, row[None, :]]

    def vector_rank(self, u: Sequence[int]) -> int:
        """Position of u in odometer enumeration order."""
        return int(np.dot(np.asarray(self._coerce(u), dtype=np.int64), self._radix))

    def unrank(self, r: int) -> Vector:
        return tuple(int(r // self._radix[i] % self.q) for i in range(self.n))

    def iter_chunks(
        self, max_space: int = DEFAULT_MAX_SPACE, chunk: int = _CHUNK
    ) -> Iterator[tuple[int, np.ndarray]]:
        """Yield (start_rank, (B, n) uint8 array) covering F_q^n in odometer order."""
        if self.size > max_space:
            raise SpaceTooLarge(
                f"q^n = {self.size} exceeds the enumeration cap {max_space}"
            )
        for start in range(0, self.size, chunk):
            idx = np.arange(start, min(start + chunk, self.size), dtype=np.int64)
            yield start, ((idx[:, None] // self._radix[None, :]) % self.q).astype(np.uint8)

    def all_vectors(self, max_space: int = DEFAULT_MAX_SPACE) -> np.ndarray:
        """The whole space as one (q^n, n) array; respects the cap."""
        if self.size > max_space:
            raise SpaceTooLarge(
                f"q^n = {self.size} exceeds the enumeration cap {max_space}"
            )
        idx = np.arange(self.size, dtype=np.int64)
        return ((idx[:, None] // self._radix[None, :]) % self.q).astype(np.uint8)

    # balls ------------------------------------------------------------------

    def ball(
        self,
        center: Sequence[int],
        radius: int,
        max_space: int = DEFAULT_MAX_SPACE,
    ) -> list[Vector]:
        """All v with d(center, v) <= radius, in odometer order."""
        if radius < 0:
            raise ValueError("radius must be >= 0")
        c = self._coerce(center)
        out: list[Vector] = []
        for _, arr in self.iter_chunks(max_space):
            d = self.batch_weights(self.batch_sub(arr, c))
            for row in arr[d <= radius]:
                out.append(tuple(int(x) for x in row))
        return out

    def ball_size(
        self,
        center: Sequence[int],
        radius: int,
        max_space: int = DEFAULT_MAX_SPACE,
    ) -> int:
        if radius < 0:
            raise ValueError("radius must be >= 0")
        c = self._coerce(center)
        total = 0
        for _, arr in self.iter_chunks(max_space):
            d = self.batch_weights(self.batch_sub(arr, c))
            total += int((d <= radius).sum())
        return total

    def __repr__(self) -> str:
        return (
            f"BlockSpace(q={self.q}, sizes={self.labeling.sizes}, "
            f"weight={self.weight.name}, covers={self.poset.cover_pairs()})"
        )


def parse_vector(text: str) -> Vector:
    """Comma-separated integers -> vector tuple."""
    parts = [p.strip() for p in text.split(",") if p.strip() != ""]
    return tuple(int(p) for p in parts)


def format_vector(u: Iterable[int]) -> str:
    return ",".join(str(int(x)) for x in u)
