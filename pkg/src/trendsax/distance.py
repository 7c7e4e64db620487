"""Distances: Euclidean on raw series, lookup-table distance on words, bound audit.

The word distance is sqrt(n/m) * sqrt(sum of squared pair-table entries)
over aligned symbols.  For words produced by any exact-partition
segmentation of z-normalized series it never exceeds the Euclidean
distance between the raw series, so pruning with it cannot cause false
dismissals.  ``verify_lower_bound`` packages that check as a library
operation for auditing a configuration on concrete data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from trendsax.core import AlphabetTable, SaxWord, make_alphabet_table, paa, symbolize
from trendsax.segmentation import segment

__all__ = ["LOWER_BOUND_TOLERANCE", "LowerBoundReport", "euclidean", "mindist", "verify_lower_bound"]

# absorbs floating-point accumulation; the bound is exact in real arithmetic
LOWER_BOUND_TOLERANCE = 1e-9


def euclidean(s, t) -> float:
    """Euclidean distance between two equal-length series."""
    x = np.asarray(s, dtype=np.float64)
    y = np.asarray(t, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"series must be one-dimensional and equal length, got {x.shape} and {y.shape}")
    d = x - y
    return float(np.sqrt((d * d).sum()))


def _dist_sq_matrix(a: np.ndarray, b: np.ndarray, sq_pair: np.ndarray) -> np.ndarray:
    """Squared word distances (without the n/m factor) between symbol rows.

    ``a`` is (A, m) and ``b`` is (B, m); returns (A, B).  Accumulates one
    symbol position at a time so the summation order is fixed regardless
    of batch shape.
    """
    out = np.zeros((a.shape[0], b.shape[0]), dtype=np.float64)
    for k in range(a.shape[1]):
        out += sq_pair[np.ix_(a[:, k], b[:, k])]
    return out


def _check_compatible(s: SaxWord, t: SaxWord, table: AlphabetTable) -> None:
    if s.m != t.m:
        raise ValueError(f"word lengths differ: {s.m} vs {t.m}")
    if s.alphabet_size != t.alphabet_size or s.alphabet_size != table.alphabet_size:
        raise ValueError(
            f"alphabet sizes differ: words {s.alphabet_size}/{t.alphabet_size}, "
            f"table {table.alphabet_size}"
        )
    if s.source_length != t.source_length:
        raise ValueError(f"source lengths differ: {s.source_length} vs {t.source_length}")


def mindist(s: SaxWord, t: SaxWord, table: AlphabetTable) -> float:
    """Lower-bounding distance between two words over the same alphabet.

    Symmetric and non-negative; zero whenever every aligned symbol pair is
    equal or adjacent.
    """
    _check_compatible(s, t, table)
    sq = table.pair_dist**2
    d2 = _dist_sq_matrix(s.symbols[None, :], t.symbols[None, :], sq)[0, 0]
    return math.sqrt(s.source_length / s.m) * math.sqrt(d2)


@dataclass(frozen=True)
class LowerBoundReport:
    """Outcome of one lower-bound audit on a concrete pair."""

    mindist: float
    euclidean: float
    holds: bool
    slack: float


def verify_lower_bound(
    s,
    t,
    scheme: str,
    m: int,
    alphabet_size: int,
    policy: str = "truncate",
) -> LowerBoundReport:
    """Check the word distance against the raw Euclidean distance for one pair.

    Intended for z-normalized equal-length inputs; both series go through
    the same segmentation and alphabet.  ``holds`` reports whether
    ``mindist <= euclidean + 1e-9``; ``slack`` is the remaining gap.
    """
    x = np.asarray(s, dtype=np.float64)
    y = np.asarray(t, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"series must be one-dimensional and equal length, got {x.shape} and {y.shape}")
    seg = segment(scheme, x.size, m, policy)
    table = make_alphabet_table(alphabet_size)
    word_s = symbolize(paa(x, seg), table)
    word_t = symbolize(paa(y, seg), table)
    md = mindist(word_s, word_t, table)
    ed = euclidean(x, y)
    return LowerBoundReport(
        mindist=md,
        euclidean=ed,
        holds=md <= ed + LOWER_BOUND_TOLERANCE,
        slack=ed - md,
    )
