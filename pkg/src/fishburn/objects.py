"""Core object classes: matchings, inversion tables, posets, triangular matrices.

A matching of {1, ..., 2n} is a partition into n pairs; drawn as arcs, the
smaller endpoint of each pair is its opener and the larger its closer.  Arcs
are kept sorted by closer, which is the canonical order used by every
arc-indexed statistic ("the last arc" is the arc whose closer is 2n).

All types are immutable value objects; every operation here is a pure
function, so objects can be shared and evaluated in parallel freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEndpoint,
    EndpointOutOfRange,
    EntryOutOfRange,
    InvalidMatrix,
    NegativeEntry,
    NotAPartialOrder,
    NotAPerfectMatching,
    NotAPermutation,
    NotUpperTriangular,
    ZeroRowOrColumn,
)

Arc = tuple[int, int]


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matching:
    """Perfect matching of {1, ..., 2n}, arcs stored sorted by closer.

    >>> Matching.from_pairs([[1, 3], [2, 7], [4, 6], [5, 8]]).arcs
    ((1, 3), (4, 6), (2, 7), (5, 8))
    """

    arcs: tuple[Arc, ...]

    @property
    def n(self) -> int:
        return len(self.arcs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "Matching":
        """Validate and canonicalize raw integer pairs into a Matching.

        Raises DuplicateEndpoint, EndpointOutOfRange or NotAPerfectMatching.
        """
        arcs = []
        for pair in pairs:
            seq = tuple(pair)
            if len(seq) != 2 or not all(isinstance(x, int) for x in seq):
                raise NotAPerfectMatching(f"not an integer pair: {pair!r}")
            a, b = seq
            if a == b:
                raise DuplicateEndpoint(f"endpoint {a} used twice in one arc")
            arcs.append((min(a, b), max(a, b)))
        top = 2 * len(arcs)
        seen = set()
        for a, b in arcs:
            for x in (a, b):
                if not 1 <= x <= top:
                    raise EndpointOutOfRange(f"endpoint {x} outside [1, {top}]")
                if x in seen:
                    raise DuplicateEndpoint(f"endpoint {x} used twice")
                seen.add(x)
        arcs.sort(key=lambda arc: arc[1])
        return cls(tuple(arcs))

    @cached_property
    def openers(self) -> tuple[int, ...]:
        """Openers in increasing order."""
        return tuple(sorted(o for o, _ in self.arcs))

    @cached_property
    def closers(self) -> tuple[int, ...]:
        """Closers in increasing order (same as arc order)."""
        return tuple(c for _, c in self.arcs)

    @cached_property
    def partner(self) -> dict[int, int]:
        """Endpoint -> other endpoint of the same arc."""
        d = {}
        for o, c in self.arcs:
            d[o] = c
            d[c] = o
        return d

def validate_matching(raw_pairs: Iterable[Sequence[int]]) -> Matching:
    """Alias of :meth:`Matching.from_pairs` for symmetry with other validators."""
    return Matching.from_pairs(raw_pairs)


@dataclass(frozen=True)
class NestCrossRecord:
    """Counts of nestings/crossings and their neighbor variants.

    A nesting is an arc pair (i, l), (j, k) with i < j < k < l; it is a
    left-nesting when j = i + 1 and a right-nesting when l = k + 1.  A
    crossing is a pair (i, k), (j, l) with i < j < k < l, with left/right
    variants defined the same way on adjacent openers/closers.
    """

    ne: int
    cr: int
    lne: int
    rne: int
    lcr: int
    rcr: int


def arc_statistics(m: Matching) -> NestCrossRecord:
    """Classify all arc pairs of ``m`` and count (neighbor) nestings/crossings.

    >>> arc_statistics(Matching.from_pairs([(1, 3), (2, 7), (4, 6), (5, 8)]))
    NestCrossRecord(ne=1, cr=3, lne=0, rne=1, lcr=2, rcr=1)
    """
    ne = cr = lne = rne = lcr = rcr = 0
    by_opener = sorted(m.arcs)
    for (o1, c1), (o2, c2) in itertools.combinations(by_opener, 2):
        if o2 < c2 < c1:          # o1 < o2 < c2 < c1
            ne += 1
            lne += o2 == o1 + 1
            rne += c1 == c2 + 1
        elif o2 < c1 < c2:        # o1 < o2 < c1 < c2
            cr += 1
            lcr += o2 == o1 + 1
            rcr += c2 == c1 + 1
    return NestCrossRecord(ne, cr, lne, rne, lcr, rcr)


def count_gap_nestings(m: Matching, gap: int) -> int:
    """Number of nesting arc pairs whose openers are at most ``gap`` apart.

    gap=1 counts exactly the left-nestings; gap >= 2n counts all nestings.
    """
    if gap < 1:
        raise ValueError("gap must be >= 1")
    count = 0
    for (o1, c1), (o2, c2) in itertools.combinations(sorted(m.arcs), 2):
        if o2 < c2 < c1 and o2 - o1 <= gap:
            count += 1
    return count


def first_left_nesting(m: Matching) -> tuple[Arc, Arc] | None:
    """First arc pair forming a left-nesting, as ((i, l), (i+1, k)), or None."""
    p = m.partner
    for o in m.openers:
        if o + 1 in p and p[o + 1] > o + 1 and p[o] > p[o + 1]:
            return ((o, p[o]), (o + 1, p[o + 1]))
    return None


def first_left_crossing(m: Matching) -> tuple[Arc, Arc] | None:
    """First arc pair forming a left-crossing, or None."""
    p = m.partner
    for o in m.openers:
        if o + 1 in p and p[o + 1] > o + 1 and o + 1 < p[o] < p[o + 1]:
            return ((o, p[o]), (o + 1, p[o + 1]))
    return None


# cheap membership tests used by the class filters; each avoids the
# full pair scan where an adjacent-endpoint scan suffices

def has_left_nesting(m: Matching) -> bool:
    return first_left_nesting(m) is not None

def has_left_crossing(m: Matching) -> bool:
    return first_left_crossing(m) is not None

def has_right_nesting(m: Matching) -> bool:
    p = m.partner
    return any(c + 1 in p and p[c + 1] < c + 1 and p[c + 1] < p[c]
               for c in m.closers)

def has_right_crossing(m: Matching) -> bool:
    p = m.partner
    return any(c + 1 in p and p[c + 1] < c + 1 and p[c] < p[c + 1] < c
               for c in m.closers)

def has_nesting(m: Matching) -> bool:
    return arc_statistics(m).ne > 0

def has_crossing(m: Matching) -> bool:
    return arc_statistics(m).cr > 0


# ---------------------------------------------------------------------------
# Inversion tables and permutations (plain int tuples)
# ---------------------------------------------------------------------------

def validate_table(entries: Iterable[int]) -> tuple[int, ...]:
    """Validate an inversion table: 0 <= a_i <= i - 1 for every i.

    >>> validate_table([0, 1, 0, 1])
    (0, 1, 0, 1)
    """
    w = tuple(entries)
    for i, a in enumerate(w, start=1):
        if not isinstance(a, int) or not 0 <= a <= i - 1:
            raise EntryOutOfRange(f"entry a_{i} = {a!r} outside [0, {i - 1}]")
    return w


def validate_permutation(values: Iterable[int]) -> tuple[int, ...]:
    """Validate a permutation of 1..n in one-line notation."""
    pi = tuple(values)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise NotAPermutation(f"not a rearrangement of 1..{len(pi)}: {pi!r}")
    return pi


def is_descent_correcting(w: Sequence[int]) -> bool:
    """Every descent position i (a_i > a_{i+1}) has a later entry equal to i."""
    n = len(w)
    for i in range(1, n):                       # 1-based position i
        if w[i - 1] > w[i]:
            if not any(w[l] == i for l in range(i, n)):
                return False
    return True


def is_ascent_correcting(w: Sequence[int]) -> bool:
    """Every ascent position i with a_{i+1} != i+1 has a later entry equal to i.

    For valid inversion tables a_{i+1} <= i, so the exclusion clause never
    fires and the rule is simply "every ascent gets corrected".
    """
    n = len(w)
    for i in range(1, n):
        if w[i - 1] < w[i] and w[i] != i + 1:
            if not any(w[l] == i for l in range(i, n)):
                return False
    return True


def sequence_predicates(w: Sequence[int]) -> dict[str, bool]:
    return {
        "descent_correcting": is_descent_correcting(w),
        "ascent_correcting": is_ascent_correcting(w),
    }


# ---------------------------------------------------------------------------
# Posets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poset:
    """Strict partial order on {1, ..., n}, stored as its full relation.

    ``less`` holds every ordered pair (i, j) with i below j, transitively
    closed.  Storing the closure makes every predicate O(1) per pair; the
    cover relation is a derived view.
    """

    n: int
    less: frozenset[tuple[int, int]]

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Poset":
        """Build a poset from any generating relations (closure is computed).

        Raises NotAPartialOrder on reflexive pairs or cycles.
        """
        below = [0] * (n + 1)                   # below[j]: bitmask of i <_P j
        for pair in pairs:
            i, j = pair
            if i == j:
                raise NotAPartialOrder(f"reflexive pair ({i}, {j})")
            if not (1 <= i <= n and 1 <= j <= n):
                raise NotAPartialOrder(f"element outside [1, {n}] in ({i}, {j})")
            below[j] |= 1 << (i - 1)
        # closure by iterating to a fixed point; n is tiny
        changed = True
        while changed:
            changed = False
            for j in range(1, n + 1):
                mask = below[j]
                acc = mask
                k = mask
                while k:
                    low = k & -k
                    acc |= below[low.bit_length()]
                    k ^= low
                if acc != below[j]:
                    below[j] = acc
                    changed = True
        for j in range(1, n + 1):
            if below[j] >> (j - 1) & 1:
                raise NotAPartialOrder(f"cycle through element {j}")
        rel = frozenset(
            (i, j)
            for j in range(1, n + 1)
            for i in range(1, n + 1)
            if below[j] >> (i - 1) & 1
        )
        return cls(n, rel)

    @cached_property
    def pre_masks(self) -> tuple[int, ...]:
        """Predecessor bitmask per element; bit i-1 set iff i is below."""
        masks = [0] * self.n
        for i, j in self.less:
            masks[j - 1] |= 1 << (i - 1)
        return tuple(masks)

    @cached_property
    def suc_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for i, j in self.less:
            masks[i - 1] |= 1 << (j - 1)
        return tuple(masks)

    def pre_set(self, j: int) -> set[int]:
        """Elements strictly below j."""
        return {i for i in range(1, self.n + 1) if self.pre_masks[j - 1] >> (i - 1) & 1}

    def suc_set(self, j: int) -> set[int]:
        """Elements strictly above j."""
        return {i for i in range(1, self.n + 1) if self.suc_masks[j - 1] >> (i - 1) & 1}

    def pre(self, j: int) -> int:
        return self.pre_masks[j - 1].bit_count()

    def suc(self, j: int) -> int:
        return self.suc_masks[j - 1].bit_count()

    @cached_property
    def pre_vector(self) -> tuple[int, ...]:
        """(pre(1), ..., pre(n))."""
        return tuple(mask.bit_count() for mask in self.pre_masks)

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover relation (i, j): i below j with nothing strictly between."""
        out = []
        for i, j in sorted(self.less):
            between = self.suc_masks[i - 1] & self.pre_masks[j - 1]
            if not between:
                out.append((i, j))
        return tuple(out)


def is_natural(p: Poset) -> bool:
    """Labels respect integer order: i below j implies i < j."""
    return all(i < j for i, j in p.less)


def is_factorial(p: Poset) -> bool:
    """Every predecessor set is an initial segment {1, ..., pre(k)}.

    Equivalent to: naturally labeled and i < j below k implies i below k.
    """
    return all(mask == (1 << mask.bit_count()) - 1 for mask in p.pre_masks)


def is_dually_factorial(p: Poset) -> bool:
    """i > j above k implies i above k (the mirrored closure condition)."""
    for k, j in p.less:                          # j above k
        need = ((1 << p.n) - 1) ^ ((1 << j) - 1)  # integers > j
        if need & ~p.suc_masks[k - 1]:
            return False
    return True


def is_two_plus_two_free(p: Poset) -> bool:
    """No induced subposet of two disjoint 2-chains (brute force over pairs)."""
    rel = p.less
    pairs = sorted(rel)
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        if len({a, b, c, d}) < 4:
            continue
        if _incomparable(p, a, c) and _incomparable(p, a, d) \
                and _incomparable(p, b, c) and _incomparable(p, b, d):
            return False
    return True


def is_two_plus_two_free_by_inclusion(p: Poset) -> bool:
    """Equivalent criterion: predecessor sets linearly ordered by inclusion."""
    masks = sorted(set(p.pre_masks), key=lambda m: m.bit_count())
    return all(a & ~b == 0 for a, b in zip(masks, masks[1:]))


def is_three_plus_one_free(p: Poset) -> bool:
    """No induced 3-chain plus one element incomparable to all of it."""
    chains = [
        (x, y, z)
        for x, y in sorted(p.less)
        for z in sorted(p.suc_set(y))
    ]
    for x, y, z in chains:
        for w in range(1, p.n + 1):
            if w in (x, y, z):
                continue
            if _incomparable(p, w, x) and _incomparable(p, w, y) \
                    and _incomparable(p, w, z):
                return False
    return True


def _incomparable(p: Poset, a: int, b: int) -> bool:
    return (a, b) not in p.less and (b, a) not in p.less


def condition_one(p: Poset) -> bool:
    """For every i in [n-1]: pre(i) <= pre(i+1) or suc(i) > suc(i+1)."""
    return all(
        p.pre(i) <= p.pre(i + 1) or p.suc(i) > p.suc(i + 1)
        for i in range(1, p.n)
    )


def condition_one_var(p: Poset) -> bool:
    """For i in [n-1], k: i above k with i+1 not above k forces pre(l) = i somewhere."""
    pre_values = set(p.pre_vector)
    for i in range(1, p.n):
        below_i = p.pre_masks[i - 1]
        below_next = p.pre_masks[i]
        if below_i & ~below_next and i not in pre_values:
            return False
    return True


def rne_poset(p: Poset) -> int:
    """Count of x with pre(x) > pre(x+1) and equal successor sets.

    These are exactly the violations of the rule in :func:`condition_one`.
    """
    return sum(
        1
        for x in range(1, p.n)
        if p.pre(x) > p.pre(x + 1) and p.suc_masks[x - 1] == p.suc_masks[x]
    )


def poset_predicates(p: Poset) -> dict[str, object]:
    """All structural predicates of a poset in one record."""
    return {
        "natural": is_natural(p),
        "factorial": is_factorial(p),
        "dually_factorial": is_dually_factorial(p),
        "two_plus_two_free": is_two_plus_two_free(p),
        "three_plus_one_free": is_three_plus_one_free(p),
        "condition_one": condition_one(p),
        "condition_one_var": condition_one_var(p),
        "rne_poset": rne_poset(p),
    }


# ---------------------------------------------------------------------------
# Upper triangular matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangularMatrix:
    """Upper triangular nonnegative integer matrix, no zero row or column.

    The total of the entries is the size n of the matchings it encodes.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "TriangularMatrix":
        """Validate raw rows; raises InvalidMatrix, NegativeEntry,
        NotUpperTriangular or ZeroRowOrColumn."""
        t = tuple(tuple(row) for row in rows)
        k = len(t)
        if any(len(row) != k for row in t):
            raise InvalidMatrix(f"rows do not form a {k}x{k} square")
        for i, row in enumerate(t):
            for j, v in enumerate(row):
                if not isinstance(v, int):
                    raise InvalidMatrix(f"entry ({i + 1},{j + 1}) = {v!r} not an integer")
                if v < 0:
                    raise NegativeEntry(f"entry ({i + 1},{j + 1}) = {v}")
                if v and j < i:
                    raise NotUpperTriangular(f"nonzero entry ({i + 1},{j + 1}) below diagonal")
        for i, row in enumerate(t):
            if k and not any(row):
                raise ZeroRowOrColumn(f"row {i + 1} is all zeros")
        for j in range(k):
            if not any(t[i][j] for i in range(k)):
                raise ZeroRowOrColumn(f"column {j + 1} is all zeros")
        return cls(t)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.rows) for j in range(self.k))


def validate_matrix(rows: Iterable[Sequence[int]]) -> TriangularMatrix:
    """Alias of :meth:`TriangularMatrix.from_rows`."""
    return TriangularMatrix.from_rows(rows)


def is_zero_one(t: TriangularMatrix) -> bool:
    """True when every entry is 0 or 1."""
    return all(v <= 1 for row in t.rows for v in row)
