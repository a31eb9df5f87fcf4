"""Heaps of unit blocks over a unit interval order, and local flips.

A heap of type mu is an acyclic orientation of the graph whose vertices
are mu[a-1] copies of each interval a, with copies of a and b adjacent
exactly when a == b or a, b are incomparable; edges between copies of
the same interval always point toward the earlier copy. Words of type
mu correspond to heaps by dropping blocks onto the interval model in
reading order, and the words of a heap are its linear extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .partitions import multiset_permutations, word_type
from .posets import UnitIntervalOrder


# ---------------------------------------------------------------------------
# word statistics


def descent_positions(order: UnitIntervalOrder, w) -> frozenset:
    """Positions i (1-based) with w_i above w_{i+1} in the order."""
    return frozenset(
        i + 1 for i in range(len(w) - 1) if order.less(w[i + 1], w[i])
    )


def inversion_count(order: UnitIntervalOrder, w) -> int:
    """Pairs i < j with w_i, w_j incomparable and w_i > w_j."""
    count = 0
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j] and not order.comparable(w[i], w[j]):
                count += 1
    return count


def ltr_maxima_positions(order: UnitIntervalOrder, w) -> tuple:
    """Positions i such that w_i lies above every earlier letter.

    Position 1 always qualifies (the trivial maximum).
    """
    out = []
    for i in range(len(w)):
        if all(order.less(w[j], w[i]) for j in range(i)):
            out.append(i + 1)
    return tuple(out)


def has_nontrivial_ltr_maximum(order: UnitIntervalOrder, w) -> bool:
    return any(p > 1 for p in ltr_maxima_positions(order, w))


def is_descent_free(order: UnitIntervalOrder, w) -> bool:
    return not any(order.less(w[i + 1], w[i]) for i in range(len(w) - 1))


# ---------------------------------------------------------------------------
# heaps


class Heap:
    """Immutable heap; block ids are 0..d-1, each with a column."""

    __slots__ = ("order", "cols", "orient", "__dict__")

    def __init__(self, order: UnitIntervalOrder, cols, orient):
        self.order = order
        self.cols = tuple(cols)
        self.orient = frozenset(orient)

    @classmethod
    def from_word(cls, order: UnitIntervalOrder, word) -> "Heap":
        """Drop the letters of the word in reading order."""
        word = tuple(word)
        if not word:
            raise ValueError("empty word")
        for a in word:
            if not 1 <= a <= order.n:
                raise ValueError(f"letter {a} outside the alphabet")
        cols = word
        orient = set()
        for j in range(len(word)):
            for i in range(j):
                if cols[i] == cols[j] or order.adjacent(cols[i], cols[j]):
                    orient.add((i, j))
        return cls(order, cols, orient)

    @classmethod
    def from_levels(cls, order: UnitIntervalOrder, levels) -> "Heap":
        """Build from a diagram given as {column: iterable of levels}.

        Raises ValueError when the diagram is not gravity-stable, i.e.
        when the recomputed levels disagree with the given ones.
        """
        blocks = []
        for a in sorted(levels):
            for lv in sorted(levels[a]):
                blocks.append((a, lv))
        cols = tuple(a for a, _ in blocks)
        lvls = tuple(lv for _, lv in blocks)
        orient = set()
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if cols[i] == cols[j] or order.adjacent(cols[i], cols[j]):
                    if lvls[i] == lvls[j]:
                        raise ValueError("adjacent blocks share a level")
                    if lvls[i] < lvls[j]:
                        orient.add((i, j))
                    else:
                        orient.add((j, i))
        heap = cls(order, cols, orient)
        if heap.levels != lvls:
            raise ValueError("diagram is not gravity-stable")
        return heap

    @property
    def size(self) -> int:
        return len(self.cols)

    @cached_property
    def mu(self) -> tuple:
        return word_type(self.cols, self.order.n)

    @cached_property
    def _lower(self) -> tuple:
        """For each block, the adjacent blocks directly below it."""
        lower = [[] for _ in self.cols]
        for lo, hi in self.orient:
            lower[hi].append(lo)
        return tuple(tuple(sorted(v)) for v in lower)

    @cached_property
    def _upper(self) -> tuple:
        upper = [[] for _ in self.cols]
        for lo, hi in self.orient:
            upper[lo].append(hi)
        return tuple(tuple(sorted(v)) for v in upper)

    @cached_property
    def levels(self) -> tuple:
        """Rank of each block: one more than the longest downward path."""
        memo = [0] * self.size
        def rank(b):
            if memo[b] == 0:
                memo[b] = 1 + max((rank(u) for u in self._lower[b]), default=0)
            return memo[b]
        for b in range(self.size):
            rank(b)
        return tuple(memo)

    @cached_property
    def rank(self) -> int:
        return max(self.levels)

    @cached_property
    def sinks(self) -> tuple:
        return tuple(b for b in range(self.size) if not self._lower[b])

    @property
    def sink_count(self) -> int:
        return len(self.sinks)

    @cached_property
    def _descendants(self) -> tuple:
        """Bitmask of blocks strictly below each block."""
        memo = [None] * self.size
        def desc(b):
            if memo[b] is None:
                mask = 0
                for u in self._lower[b]:
                    mask |= (1 << u) | desc(u)
                memo[b] = mask
            return memo[b]
        for b in range(self.size):
            desc(b)
        return tuple(memo)

    @cached_property
    def covers(self) -> tuple:
        """For each block, the blocks it covers in the heap order."""
        out = []
        for b in range(self.size):
            below = self._lower[b]
            cb = []
            for u in below:
                others = 0
                for v in below:
                    if v != u:
                        others |= (1 << v) | self._descendants[v]
                if not (others >> u) & 1:
                    cb.append(u)
            out.append(tuple(cb))
        return tuple(out)

    @cached_property
    def covered_by(self) -> tuple:
        out = [[] for _ in self.cols]
        for b in range(self.size):
            for u in self.covers[b]:
                out[u].append(b)
        return tuple(tuple(v) for v in out)

    @cached_property
    def canonical_word(self) -> tuple:
        """The unique descent-free word of the heap.

        Remove, at each step, the minimal block whose column is least;
        the columns of the minimal blocks always form a chain.
        """
        remaining = set(range(self.size))
        pending = [len(self._lower[b]) for b in range(self.size)]
        out = []
        for _ in range(self.size):
            b = min(
                (x for x in remaining if pending[x] == 0),
                key=lambda x: self.cols[x],
            )
            out.append(self.cols[b])
            remaining.remove(b)
            for v in self._upper[b]:
                pending[v] -= 1
        return tuple(out)

    def words(self) -> list:
        """All words of the heap (column readings of linear extensions)."""
        pending = [len(self._lower[b]) for b in range(self.size)]
        remaining = set(range(self.size))
        word = []
        out = []

        def rec():
            if not remaining:
                out.append(tuple(word))
                return
            for b in sorted(remaining):
                if pending[b] == 0:
                    remaining.remove(b)
                    for v in self._upper[b]:
                        pending[v] -= 1
                    word.append(self.cols[b])
                    rec()
                    word.pop()
                    for v in self._upper[b]:
                        pending[v] += 1
                    remaining.add(b)

        rec()
        return out

    @cached_property
    def ascents(self) -> int:
        """Oriented adjacencies whose lower block sits in a larger column."""
        return sum(1 for lo, hi in self.orient if self.cols[lo] > self.cols[hi])

    def block(self, a: int, i: int) -> int:
        """Id of the i-th lowest block (1-based) in column a."""
        col = sorted(
            (b for b in range(self.size) if self.cols[b] == a),
            key=lambda b: self.levels[b],
        )
        if not 1 <= i <= len(col):
            raise ValueError(f"column {a} has no block {i}")
        return col[i - 1]

    def block_label(self, b: int) -> tuple:
        """(column, position from the bottom) of a block id."""
        a = self.cols[b]
        col = sorted(
            (x for x in range(self.size) if self.cols[x] == a),
            key=lambda x: self.levels[x],
        )
        return (a, col.index(b) + 1)

    def flippable_triples(self) -> list:
        """Triples (p, q, r) with q covering both p and r, or covered by
        both, normalized so that the column of p is smaller."""
        out = []
        for q in range(self.size):
            for group in (self.covers[q], self.covered_by[q]):
                for x in range(len(group)):
                    for y in range(x + 1, len(group)):
                        p, r = group[x], group[y]
                        if self.order.adjacent(self.cols[p], self.cols[r]):
                            continue
                        if self.cols[p] > self.cols[r]:
                            p, r = r, p
                        out.append((p, q, r))
        out.sort(key=lambda t: (self.cols[t[0]], self.cols[t[1]], self.cols[t[2]], t))
        return out

    def flip(self, triple) -> "Heap":
        """Reverse the orientation on the two edges of a flippable triple."""
        p, q, r = triple
        if triple not in self.flippable_triples() and (r, q, p) not in self.flippable_triples():
            raise ValueError(f"{triple} is not flippable")
        orient = set(self.orient)
        for u, v in ((p, q), (q, r)):
            if (u, v) in orient:
                orient.remove((u, v))
                orient.add((v, u))
            else:
                orient.remove((v, u))
                orient.add((u, v))
        return Heap(self.order, self.cols, orient)

    @cached_property
    def components(self) -> tuple:
        """Connected components of the adjacency graph on blocks."""
        seen = set()
        comps = []
        adj = [[] for _ in self.cols]
        for lo, hi in self.orient:
            adj[lo].append(hi)
            adj[hi].append(lo)
        for b in range(self.size):
            if b in seen:
                continue
            stack, comp = [b], []
            seen.add(b)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def component_type(self, comp) -> str:
        """Classify a rank <= 2 connected component as S, N, M or W."""
        ranks = [self.levels[b] for b in comp]
        if max(ranks) > 2:
            raise ValueError("component has a block of rank above 2")
        n1 = sum(1 for r in ranks if r == 1)
        n2 = sum(1 for r in ranks if r == 2)
        if n2 == 0:
            if n1 == 1:
                return "S"
            raise ValueError("disconnected rank-1 blocks cannot share a component")
        if n1 == n2:
            return "N"
        if n1 == n2 + 1:
            return "M"
        if n1 == n2 - 1:
            return "W"
        raise ValueError(f"impossible rank profile n1={n1}, n2={n2}")

    def forbidden_paths(self) -> list:
        """Block sets forming a forbidden path (see module docstring of
        the hook-coefficient routines for the role this plays).

        A forbidden path is a set of blocks, one per column a_1 < ... < a_k,
        whose columns induce a path in the incomparability graph, with
        rank(block in a_1) = 1 and rank(block in a_j) = k - j + 1 for
        j >= 2, such that the first three blocks form a flippable triple.
        """
        order = self.order
        by_col = {}
        for b in range(self.size):
            by_col.setdefault(self.cols[b], {})[self.levels[b]] = b
        columns = sorted(by_col)
        flips = set(self.flippable_triples())
        flips |= {(r, q, p) for p, q, r in flips}
        out = []

        def is_path(cols_):
            for x in range(len(cols_)):
                for y in range(x + 1, len(cols_)):
                    adj = order.adjacent(cols_[x], cols_[y])
                    if y - x == 1 and not adj:
                        return False
                    if y - x > 1 and adj:
                        return False
            return True

        def extend(path_cols):
            k = len(path_cols)
            if k >= 3:
                blocks = []
                ok = True
                for j, a in enumerate(path_cols, start=1):
                    want = 1 if j == 1 else k - j + 1
                    b = by_col[a].get(want)
                    if b is None:
                        ok = False
                        break
                    blocks.append(b)
                if ok and (blocks[0], blocks[1], blocks[2]) in flips:
                    out.append(tuple(blocks))
            for a in columns:
                if a > path_cols[-1] and is_path(path_cols + [a]):
                    extend(path_cols + [a])

        for a in columns:
            extend([a])
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Heap)
            and self.order == other.order
            and self.canonical_word == other.canonical_word
        )

    def __hash__(self):
        return hash((self.order.m, self.canonical_word))

    def __repr__(self):
        return f"Heap({self.order.text()!r}, word={''.join(map(str, self.canonical_word))})"


# ---------------------------------------------------------------------------
# enumeration and equivalence classes


def enumerate_heaps(order: UnitIntervalOrder, mu) -> tuple:
    """All heaps of the given type, sorted by canonical word."""
    return _enumerate_heaps(order, tuple(mu))


@lru_cache(maxsize=512)
def _enumerate_heaps(order, mu):
    words = sorted(_descent_free_words_of_type(order, mu))
    return tuple(Heap.from_word(order, w) for w in words)


def _descent_free_words_of_type(order, mu):
    """Canonical heap words of type mu, generated by pruned search."""
    counts = list(mu)
    if len(counts) != order.n:
        raise ValueError("type vector length must equal n")
    total = sum(counts)
    word = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for a in range(1, order.n + 1):
            if counts[a - 1] > 0 and (not word or not order.less(a, word[-1])):
                counts[a - 1] -= 1
                word.append(a)
                yield from rec()
                word.pop()
                counts[a - 1] += 1

    yield from rec()


@dataclass(frozen=True)
class HeapClass:
    """A flip-equivalence class of heaps."""

    heaps: tuple

    @property
    def representative(self) -> tuple:
        """Least canonical word among the member heaps."""
        return min(h.canonical_word for h in self.heaps)

    @property
    def ascents(self) -> int:
        return self.heaps[0].ascents

    def __len__(self):
        return len(self.heaps)


def flip_closure(heap: Heap) -> list:
    """All heaps reachable from this one by local flips."""
    seen = {heap.canonical_word: heap}
    frontier = [heap]
    while frontier:
        h = frontier.pop()
        for t in h.flippable_triples():
            h2 = h.flip(t)
            key = h2.canonical_word
            if key not in seen:
                seen[key] = h2
                frontier.append(h2)
    return [seen[k] for k in sorted(seen)]


def enumerate_classes(order: UnitIntervalOrder, mu, method: str = "flips") -> list:
    """Flip-equivalence classes of heaps of the given type.

    method='flips' closes each heap under local flips; method='words'
    reads off components of the word graph instead. The two agree and
    are cross-checked in the test suite.
    """
    if method == "flips":
        classes = []
        done = set()
        for h in enumerate_heaps(order, mu):
            if h.canonical_word in done:
                continue
            members = flip_closure(h)
            done.update(m.canonical_word for m in members)
            classes.append(HeapClass(tuple(members)))
    elif method == "words":
        classes = []
        for comp in gamma_components(order, mu, barred=True):
            members = sorted(w for w in comp if is_descent_free(order, w))
            classes.append(
                HeapClass(tuple(Heap.from_word(order, w) for w in members))
            )
    else:
        raise ValueError(f"unknown method {method!r}")
    classes.sort(key=lambda c: c.representative)
    return classes


# ---------------------------------------------------------------------------
# the word graph


def gamma_neighbors(order: UnitIntervalOrder, w, barred: bool = True) -> list:
    """Words adjacent to w in the word graph, with edge labels.

    Unbarred edges swap an adjacent comparable pair; barred edges apply
    the three-letter moves bac <-> acb and bca <-> cab for a < b < c with
    a, b incomparable, b, c incomparable and a below c.
    """
    w = tuple(w)
    out = []
    for i in range(len(w) - 1):
        if order.comparable(w[i], w[i + 1]):
            v = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
            out.append((v, i + 1))
    if barred:
        for i in range(len(w) - 2):
            trip = w[i : i + 3]
            if len(set(trip)) < 3:
                continue
            a, b, c = sorted(trip)
            if order.less(a, b) or order.less(b, c) or not order.less(a, c):
                continue
            moves = {
                (b, a, c): (a, c, b),
                (a, c, b): (b, a, c),
                (b, c, a): (c, a, b),
                (c, a, b): (b, c, a),
            }
            image = moves.get(trip)
            if image is not None:
                out.append((w[:i] + image + w[i + 3 :], (i + 2, "bar")))
    return out


def gamma_components(order: UnitIntervalOrder, mu, barred: bool = True) -> list:
    """Connected components of the word graph on words of type mu."""
    words = set(multiset_permutations(mu))
    comps = []
    seen = set()
    for start in sorted(words):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        seen.add(start)
        while frontier:
            w = frontier.pop()
            for v, _ in gamma_neighbors(order, w, barred=barred):
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    frontier.append(v)
        comps.append(frozenset(comp))
    return comps
