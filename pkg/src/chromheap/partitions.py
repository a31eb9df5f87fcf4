"""Partitions, compositions and word enumeration helpers."""

from __future__ import annotations

from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def partitions(d: int, max_part: int | None = None) -> tuple:
    """All partitions of d with parts at most max_part, as decreasing tuples."""
    if d < 0:
        return ()
    if d == 0:
        return ((),)
    if max_part is None or max_part > d:
        max_part = d
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_with_length(d: int, k: int):
    """Partitions of d into exactly k positive parts."""
    return tuple(lam for lam in partitions(d) if len(lam) == k)


def conjugate(lam) -> tuple:
    """Conjugate partition (transpose of the diagram)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def z_factor(lam) -> int:
    """z_lambda = prod_i i^{m_i} m_i! over part multiplicities m_i."""
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part**m * factorial(m)
    return out


def dominates(lam, mu) -> bool:
    """True when lam dominates mu (partial sums of lam are at least mu's)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def revlex_sorted(parts) -> list:
    """Partitions of equal size in decreasing reverse-lexicographic order.

    On partitions of the same number this coincides with decreasing tuple
    order, e.g. (3,1) before (2,2) before (2,1,1).
    """
    return sorted(parts, reverse=True)


def compositions(d: int) -> tuple:
    """All compositions of d (tuples of positive parts, order matters)."""
    if d == 0:
        return ((),)
    out = []
    for first in range(1, d + 1):
        for rest in compositions(d - first):
            out.append((first,) + rest)
    return tuple(out)


def subset_to_composition(d: int, subset) -> tuple:
    """Composition of d whose partial sums are the subset of [d-1]."""
    cuts = sorted(subset)
    if cuts and (cuts[0] < 1 or cuts[-1] > d - 1):
        raise ValueError("subset must lie in [d-1]")
    prev = 0
    parts = []
    for c in cuts + [d]:
        parts.append(c - prev)
        prev = c
    return tuple(parts)


def composition_to_subset(alpha) -> frozenset:
    """Partial sums of alpha, omitting the final total."""
    out = []
    s = 0
    for part in alpha[:-1]:
        s += part
        out.append(s)
    return frozenset(out)


def multiset_permutations(mu):
    """All words using letter a exactly mu[a-1] times, in lexicographic order.

    Letters are 1-based; zero multiplicities are allowed and skipped.
    """
    counts = list(mu)
    total = sum(counts)
    word = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for a in range(len(counts)):
            if counts[a] > 0:
                counts[a] -= 1
                word.append(a + 1)
                yield from rec()
                word.pop()
                counts[a] += 1

    yield from rec()


def word_type(w, n: int) -> tuple:
    """Multiplicity vector of a word over the alphabet [n]."""
    mu = [0] * n
    for a in w:
        mu[a - 1] += 1
    return tuple(mu)
