"""Information measures behind the yes/no annotation economics.

Everything here is in bits (base-2 logarithms) with the usual convention
0*log2(0) = 0 at probability boundaries.  The central object is the
comparison between the entropy of a single yes/no answer about one class
and the per-bit entropy of a full class label, which yields a threshold
on the top predicted probability above which a one-bit query is the more
efficient purchase.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = [
    "binary_entropy",
    "full_entropy",
    "average_bits_full",
    "one_bit_efficiency_condition",
    "threshold_objective",
    "threshold_rhs",
    "efficiency_threshold",
    "entropy_ratio",
    "argmax_query_class",
]


def _as_probability_vector(values) -> np.ndarray:
    p = np.asarray(values, dtype=float)
    if p.ndim != 1 or p.size < 2:
        raise ValueError("probability vector needs at least two entries")
    if np.any(p < 0.0) or np.any(p > 1.0):
        raise ValueError("probability vector entries must lie in [0, 1]")
    total = float(p.sum())
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"probability vector must sum to 1, got {total!r}")
    return p


def binary_entropy(p: float) -> float:
    """Entropy in bits of a yes/no answer that comes up yes with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def full_entropy(values) -> float:
    """Shannon entropy in bits of a distribution over classes."""
    p = _as_probability_vector(values)
    nz = p[p > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def average_bits_full(num_classes: int) -> float:
    """Bits of information carried by one accurate label among ``num_classes``."""
    if num_classes < 2:
        raise ValueError(f"need at least 2 classes, got {num_classes}")
    return math.log2(num_classes)


def one_bit_efficiency_condition(values, c: int, num_classes: int | None = None) -> bool:
    """True when a yes/no query about class ``c`` yields at least as much
    entropy per bit as a full label does.

    The comparison is binary_entropy(p_c) against full_entropy(p) / log2(C).
    """
    p = _as_probability_vector(values)
    if num_classes is not None and num_classes != p.size:
        raise ValueError(f"num_classes={num_classes} does not match vector length {p.size}")
    if not 0 <= c < p.size:
        raise ValueError(f"class index {c} out of range for {p.size} classes")
    return binary_entropy(float(p[c])) >= full_entropy(p) / math.log2(p.size)


def threshold_objective(p: float) -> float:
    """binary_entropy(p) / (1 - p), the left side of the efficiency condition.

    Nondecreasing on (0, 1); equals exactly 2 at p = 1/2.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"objective defined on (0, 1), got {p!r}")
    return -p / (1.0 - p) * math.log2(p) - math.log2(1.0 - p)


def threshold_rhs(num_classes: int) -> float:
    """log2(C-1) / (log2(C) - 1), the right side of the efficiency condition.

    Defined as 0 for C = 2, where every positive top probability qualifies.
    """
    if num_classes < 2:
        raise ValueError(f"need at least 2 classes, got {num_classes}")
    if num_classes == 2:
        return 0.0
    return math.log2(num_classes - 1) / (math.log2(num_classes) - 1.0)


def efficiency_threshold(num_classes: int, tol: float = 1e-6) -> float:
    """Smallest top-class probability at which a yes/no query matches the
    per-bit information of a full label.

    Found by bisection on (1e-9, 0.5]; the objective is nondecreasing so the
    root is unique, and it never exceeds 1/2.
    """
    if num_classes < 2:
        raise ValueError(f"need at least 2 classes, got {num_classes}")
    if num_classes == 2:
        return 0.0
    target = threshold_rhs(num_classes)
    lo, hi = 1e-9, 0.5
    # objective(lo) ~ 0 < target <= 2 = objective(hi), so the root is bracketed
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if threshold_objective(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def entropy_ratio(values, c: int) -> float:
    """binary_entropy(p_c) divided by full_entropy(p).

    Bounded by 1 (grouping property of entropy) and approaches 1 as p_c
    approaches 1.  Undefined for a zero-entropy distribution.
    """
    p = _as_probability_vector(values)
    if not 0 <= c < p.size:
        raise ValueError(f"class index {c} out of range for {p.size} classes")
    denom = full_entropy(p)
    if denom == 0.0:
        raise ValueError("entropy ratio undefined for a zero-entropy distribution")
    return binary_entropy(float(p[c])) / denom


def argmax_query_class(values) -> int:
    """Class index to ask about: the top predicted class.

    This index also maximizes binary_entropy(p_c) over c, so the yes/no
    question about it is the most informative one.  Ties break to the
    lowest index.
    """
    p = _as_probability_vector(values)
    return int(np.argmax(p))
