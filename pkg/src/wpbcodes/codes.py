"""Codes inside a block space and their exact parameters.

A code is either linear (generator rows, row-reduced at construction,
rank deficiency accepted silently) or explicit (a deduplicated word set).
All parameters are computed by exhaustive enumeration:

- min_distance: minimum nonzero codeword weight for linear codes
  (translation invariance), minimum pairwise distance for explicit ones;
- covering_radius: full scan of F_q^n, max over vectors of the distance
  to the code;
- packing_radius: (min over vectors of the second-smallest distance to
  the code) - 1, which equals the largest radius with pairwise disjoint
  balls around codewords;
- coset_table: minimum-weight leader per coset of a linear code, with
  ties broken by enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .blockspace import DEFAULT_MAX_SPACE, BlockSpace, Vector
from .errors import NotAChain, NotLinear, SpaceTooLarge, TooFewWords
from .weights import WeightFn

_BIG = np.iinfo(np.int64).max


def _row_reduce(space: BlockSpace, rows: Sequence[Sequence[int]]) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    f = space.field
    mat = [list(space._coerce(r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(space.n):
        if r == len(mat):
            break
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = f.inv(mat[r][c])
        mat[r] = [f.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                coef = mat[i][c]
                mat[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


@dataclass(frozen=True)
class CosetTable:
    """One minimum-weight leader per coset, indexed by Code.coset_index."""

    leaders: tuple[Vector, ...]
    weights: tuple[int, ...]
    max_weight: int


class Code:
    """A linear or explicit code in a BlockSpace; immutable after construction."""

    def __init__(self, space: BlockSpace, *, generators=None, words=None):
        self.space = space
        if (generators is None) == (words is None):
            raise ValueError("exactly one of generators/words must be given")
        if generators is not None:
            self.kind = "linear"
            self.generators, self.pivots = _row_reduce(space, generators)
            self.dimension = len(self.generators)
            self.size: int = space.q**self.dimension
            self.words = None
        else:
            self.kind = "explicit"
            dedup = sorted({space._coerce(w) for w in words})
            if not dedup:
                raise ValueError("an explicit code needs at least one word")
            self.words = tuple(dedup)
            self.generators = None
            self.pivots = None
            self.dimension = None
            self.size = len(dedup)
        self._cw: np.ndarray | None = None
        self._memo: dict = {}

    @classmethod
    def linear(cls, space: BlockSpace, rows: Sequence[Sequence[int]]) -> "Code":
        return cls(space, generators=rows)

    @classmethod
    def explicit(cls, space: BlockSpace, words: Sequence[Sequence[int]]) -> "Code":
        return cls(space, words=words)

    @property
    def is_linear(self) -> bool:
        return self.kind == "linear"

    # enumeration ------------------------------------------------------------

    def codeword_array(self, max_space: int = DEFAULT_MAX_SPACE) -> np.ndarray:
        """(|C|, n) uint8 array in deterministic order.

        Linear codes enumerate messages in odometer order (first generator
        coefficient most significant); explicit codes are sorted.
        """
        if self._cw is not None:
            return self._cw
        if self.kind == "explicit":
            self._cw = np.asarray(self.words, dtype=np.uint8).reshape(self.size, self.space.n)
            return self._cw
        if self.size > max_space:
            raise SpaceTooLarge(f"q^k = {self.size} exceeds the enumeration cap {max_space}")
        f = self.space.field
        arr = np.zeros((1, self.space.n), dtype=np.uint8)
        for g in self.generators:
            row = np.asarray(g, dtype=np.uint8)
            mults = f.mul_table[np.arange(self.space.q, dtype=np.intp)[:, None], row[None, :]]
            arr = f.add_table[arr[:, None, :], mults[None, :, :]].reshape(-1, self.space.n)
        self._cw = arr
        return arr

    def codewords(self, max_space: int = DEFAULT_MAX_SPACE) -> list[Vector]:
        return [tuple(int(x) for x in row) for row in self.codeword_array(max_space)]

    # distances --------------------------------------------------------------

    def min_distance(self, max_space: int = DEFAULT_MAX_SPACE) -> int:
        """Minimum distance over distinct codeword pairs."""
        if "min_distance" in self._memo:
            return self._memo["min_distance"]
        if self.size < 2:
            raise TooFewWords("min distance needs at least two distinct words")
        arr = self.codeword_array(max_space)
        if self.is_linear:
            d = int(self.space.batch_weights(arr[1:]).min())
        else:
            f = self.space.field
            d = None
            for i in range(len(arr) - 1):
                diffs = f.sub_table[arr[i + 1 :], arr[i][None, :]]
                m = int(self.space.batch_weights(diffs).min())
                d = m if d is None else min(d, m)
        self._memo["min_distance"] = d
        return d

    def _chunk_dists(self, arr: np.ndarray, cw: np.ndarray):
        f = self.space.field
        for c in cw:
            yield self.space.batch_weights(f.sub_table[arr, c[None, :]])

    def covering_radius(self, max_space: int = DEFAULT_MAX_SPACE) -> int:
        """max over F_q^n of the distance to the code, by full scan."""
        if "covering_radius" in self._memo:
            return self._memo["covering_radius"]
        cw = self.codeword_array(max_space)
        rho = 0
        for _, arr in self.space.iter_chunks(max_space):
            best = np.full(len(arr), _BIG, dtype=np.int64)
            for d in self._chunk_dists(arr, cw):
                np.minimum(best, d, out=best)
            rho = max(rho, int(best.max()))
        self._memo["covering_radius"] = rho
        return rho

    def packing_radius(self, max_space: int = DEFAULT_MAX_SPACE) -> int:
        """Largest radius with pairwise disjoint balls around codewords."""
        if "packing_radius" in self._memo:
            return self._memo["packing_radius"]
        if self.size < 2:
            raise TooFewWords("packing radius needs at least two distinct words")
        cw = self.codeword_array(max_space)
        second_best = _BIG
        for _, arr in self.space.iter_chunks(max_space):
            d1 = np.full(len(arr), _BIG, dtype=np.int64)
            d2 = np.full(len(arr), _BIG, dtype=np.int64)
            for d in self._chunk_dists(arr, cw):
                closer = d < d1
                d2 = np.where(closer, d1, np.minimum(d2, d))
                d1 = np.where(closer, d, d1)
            second_best = min(second_best, int(d2.min()))
        rho = second_best - 1
        self._memo["packing_radius"] = rho
        return rho

    def is_r_perfect(self, r: int, max_space: int = DEFAULT_MAX_SPACE) -> bool:
        """True iff radius-r balls around codewords tile the space."""
        if r < 0:
            raise ValueError("radius must be >= 0")
        cw = self.codeword_array(max_space)
        for _, arr in self.space.iter_chunks(max_space):
            count = np.zeros(len(arr), dtype=np.int64)
            for d in self._chunk_dists(arr, cw):
                count += d <= r
            if not (count == 1).all():
                return False
        return True

    def is_perfect(self, max_space: int = DEFAULT_MAX_SPACE) -> bool:
        return self.is_r_perfect(self.packing_radius(max_space), max_space)

    # cosets -----------------------------------------------------------------

    def coset_index(self, v: Sequence[int]) -> int:
        """Index of the coset of v: rank of the canonical form's free coordinates."""
        if not self.is_linear:
            raise NotLinear("cosets are defined for linear codes only")
        vec = np.asarray(self.space._coerce(v), dtype=np.uint8)[None, :]
        return int(self._coset_keys(vec)[0])

    def _coset_keys(self, arr: np.ndarray) -> np.ndarray:
        f = self.space.field
        canon = arr
        for g, p in zip(self.generators, self.pivots):
            row = np.asarray(g, dtype=np.uint8)
            coef = canon[:, p]
            canon = f.sub_table[canon, f.mul_table[coef[:, None], row[None, :]]]
        free = [c for c in range(self.space.n) if c not in self.pivots]
        if not free:
            return np.zeros(len(arr), dtype=np.int64)
        radix = self.space.q ** np.arange(len(free) - 1, -1, -1, dtype=np.int64)
        return canon[:, free].astype(np.int64) @ radix

    def coset_table(self, max_space: int = DEFAULT_MAX_SPACE) -> CosetTable:
        """Minimum-weight leader per coset; leader = first minimum in odometer order."""
        if "coset_table" in self._memo:
            return self._memo["coset_table"]
        if not self.is_linear:
            raise NotLinear("cosets are defined for linear codes only")
        n_cosets = self.space.q ** (self.space.n - self.dimension)
        best_w = np.full(n_cosets, _BIG, dtype=np.int64)
        for _, arr in self.space.iter_chunks(max_space):
            keys = self._coset_keys(arr)
            np.minimum.at(best_w, keys, self.space.batch_weights(arr))
        best_rank = np.full(n_cosets, _BIG, dtype=np.int64)
        for start, arr in self.space.iter_chunks(max_space):
            keys = self._coset_keys(arr)
            w = self.space.batch_weights(arr)
            hit = w == best_w[keys]
            ranks = start + np.nonzero(hit)[0]
            np.minimum.at(best_rank, keys[hit], ranks)
        leaders = tuple(self.space.unrank(int(r)) for r in best_rank)
        table = CosetTable(
            leaders=leaders,
            weights=tuple(int(w) for w in best_w),
            max_weight=int(best_w.max()),
        )
        self._memo["coset_table"] = table
        return table

    # projections ------------------------------------------------------------

    def project(self, i: int, max_space: int = DEFAULT_MAX_SPACE) -> set[Vector]:
        """Values of block i over all codewords."""
        sl = self.space.labeling.block_slice(i)
        arr = self.codeword_array(max_space)
        return {tuple(int(x) for x in row) for row in arr[:, sl]}

    def trailing_full_index(self, max_space: int = DEFAULT_MAX_SPACE) -> int:
        """s if C_s is not all of F_q^{k_s}; otherwise the least l such that the
        joint projection onto blocks l+1..s is the full product space."""
        if not self.space.poset.is_chain():
            raise NotAChain("trailing_full_index requires a chain poset")
        s = self.space.s
        sizes = self.space.labeling.sizes
        offsets = self.space.labeling.offsets
        if len(self.project(s, max_space)) != self.space.q ** sizes[s - 1]:
            return s
        arr = self.codeword_array(max_space)
        for l in range(s):
            off = offsets[l]
            tail = {bytes(row) for row in arr[:, off:]}
            if len(tail) == self.space.q ** (self.space.n - off):
                return l
        return s  # unreachable: l = s-1 always succeeds once C_s is full

    # alternative weights ----------------------------------------------------

    def with_weight(self, weight: WeightFn) -> "Code":
        """The same word set viewed in the sibling space under another weight."""
        sibling = self.space.with_weight(weight)
        if self.is_linear:
            return Code.linear(sibling, self.generators)
        return Code.explicit(sibling, self.words)

    def max_poset_weight(self, weight: WeightFn, max_space: int = DEFAULT_MAX_SPACE) -> int:
        """Max codeword weight under the given coordinate weight."""
        sibling = self.space.with_weight(weight)
        arr = self.codeword_array(max_space)
        return int(sibling.batch_weights(arr).max())

    def __repr__(self) -> str:
        if self.is_linear:
            return f"Code(linear, k={self.dimension}, {self.space!r})"
        return f"Code(explicit, {self.size} words, {self.space!r})"
