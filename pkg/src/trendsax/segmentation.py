"""Index partitions feeding piecewise aggregation.

A segmentation splits the first ``n_effective`` indices of a series into
``m`` blocks of exactly ``w = n_effective / m`` indices each.  Block means
stay plain averages of ``w`` points no matter how the indices are laid
out, so any exact partition keeps the word distance a lower bound of the
raw Euclidean distance.  Four layouts are supported; for a series of 16
points and 4 blocks they look like this:

    classic     {0,1,2,3}   {4,5,6,7}   {8,9,10,11}   {12,13,14,15}
    overlap     {0,1,2,4}   {3,5,6,8}   {7,9,10,12}   {11,13,14,15}
    intertwine  {0,2,4,6}   {1,3,5,7}   {8,10,12,14}  {9,11,13,15}
    split       {0,1,4,5}   {2,3,6,7}   {8,9,12,13}   {10,11,14,15}

``classic`` uses contiguous runs.  ``overlap`` swaps the two indices on
either side of each interior block boundary, so every block reaches one
point into each neighbour.  ``intertwine`` alternates single indices
between paired blocks, and ``split`` alternates runs of two; both work on
consecutive block pairs and therefore mix values over a span of ``2w``
points, capturing local trend that contiguous averaging erases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = ["SCHEMES", "POLICIES", "Segmentation", "segment"]

SCHEMES = ("classic", "overlap", "intertwine", "split")
POLICIES = ("strict", "truncate")


@dataclass(frozen=True, eq=False)
class Segmentation:
    """An exact partition of ``{0, ..., n_effective - 1}`` into equal blocks.

    ``blocks`` is an ``(m, w)`` integer array; each row holds the sorted
    source indices averaged into one coefficient.  Rows are canonicalized
    to ascending order on construction and the partition property is
    enforced, so a constructed instance is always safe to feed to the
    aggregation and distance routines.
    """

    scheme: str
    n_effective: int
    m: int
    blocks: np.ndarray

    def __post_init__(self) -> None:
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}; expected one of {SCHEMES}")
        if self.m < 1 or self.n_effective < 1 or self.n_effective % self.m:
            raise ValueError(
                f"n_effective={self.n_effective} is not a positive multiple of m={self.m}"
            )
        blocks = np.sort(np.asarray(self.blocks, dtype=np.int64), axis=1)
        w = self.n_effective // self.m
        if blocks.shape != (self.m, w):
            raise ValueError(f"blocks must have shape {(self.m, w)}, got {blocks.shape}")
        if not np.array_equal(np.sort(blocks, axis=None), np.arange(self.n_effective)):
            raise ValueError("blocks do not partition the index range exactly")
        blocks.flags.writeable = False
        object.__setattr__(self, "blocks", blocks)

    @property
    def w(self) -> int:
        """Indices per block."""
        return self.n_effective // self.m


def _classic(n_effective: int, m: int) -> np.ndarray:
    return np.arange(n_effective, dtype=np.int64).reshape(m, -1)


def _boundary_swap(blocks: np.ndarray) -> np.ndarray:
    """Swap the last index of each block with the first index of the next.

    Self-inverse: applying it twice restores the input.
    """
    out = blocks.copy()
    tail = out[:-1, -1].copy()
    out[:-1, -1] = out[1:, 0]
    out[1:, 0] = tail
    return out


def _overlap(n_effective: int, m: int, w: int) -> np.ndarray:
    blocks = _classic(n_effective, m)
    if w == 1 or m == 1:
        # single-index blocks have nothing to trade with their neighbours
        return blocks
    return _boundary_swap(blocks)


def _intertwine(n_effective: int, m: int, w: int) -> np.ndarray:
    blocks = np.empty((m, w), dtype=np.int64)
    for pair in range(m // 2):
        base = 2 * pair * w
        blocks[2 * pair] = base + np.arange(0, 2 * w, 2)
        blocks[2 * pair + 1] = base + np.arange(1, 2 * w, 2)
    if m % 2:
        blocks[-1] = np.arange((m - 1) * w, m * w)
    return blocks


def _split_pair(base: int, w: int) -> tuple[list[int], list[int]]:
    """Distribute a span of 2w indices over two blocks in alternating runs of two."""
    runs = [(base + 2 * r, base + 2 * r + 1) for r in range(w)]
    first: list[int] = []
    second: list[int] = []
    if w % 2:
        # odd block length: the last run is shared, one index to each block
        *alternating, shared = runs
    else:
        alternating, shared = runs, None
    for r, run in enumerate(alternating):
        (first if r % 2 == 0 else second).extend(run)
    if shared is not None:
        first.append(shared[0])
        second.append(shared[1])
    return first, second


def _split(n_effective: int, m: int, w: int) -> np.ndarray:
    blocks = np.empty((m, w), dtype=np.int64)
    for pair in range(m // 2):
        first, second = _split_pair(2 * pair * w, w)
        blocks[2 * pair] = first
        blocks[2 * pair + 1] = second
    if m % 2:
        blocks[-1] = np.arange((m - 1) * w, m * w)
    return blocks


@lru_cache(maxsize=256)
def _build(scheme: str, n: int, m: int, policy: str) -> Segmentation:
    if policy == "strict":
        if n % m:
            raise ValueError(f"series length {n} is not divisible by m={m} under strict policy")
        w = n // m
    else:
        w = n // m
    n_effective = m * w
    if scheme == "classic":
        blocks = _classic(n_effective, m)
    elif scheme == "overlap":
        blocks = _overlap(n_effective, m, w)
    elif scheme == "intertwine":
        blocks = _intertwine(n_effective, m, w)
    else:
        blocks = _split(n_effective, m, w)
    return Segmentation(scheme, n_effective, m, blocks)


def segment(scheme: str, n: int, m: int, policy: str = "truncate") -> Segmentation:
    """Build the index partition for ``scheme`` over a series of length ``n``.

    Parameters
    ----------
    scheme : one of ``SCHEMES``
    n : length of the source series
    m : number of blocks
    policy : "strict" requires ``m`` to divide ``n``; "truncate" uses
        ``w = n // m`` blocks and drops the trailing ``n - m*w`` indices.

    Returns
    -------
    Segmentation covering the first ``m * w`` indices.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    if policy not in POLICIES:
        raise ValueError(f"unknown divisibility policy {policy!r}; expected one of {POLICIES}")
    n = int(n)
    m = int(m)
    if m < 1:
        raise ValueError("m must be at least 1")
    if m > n:
        raise ValueError(f"m={m} exceeds series length {n}")
    return _build(scheme, n, m, policy)
