"""Independent brute-force oracles and frozen reference values.

Nothing here reuses the library's pair classification, interval logic or
counting code; the oracles work on raw arc tuples so that agreement with
the package is evidence.
"""

import itertools

# first values of the counting sequences the classes must follow
FISHBURN = [1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]
ODD_DOUBLE_FACTORIAL = [1, 1, 3, 15, 105, 945, 10395, 135135]   # (2n-1)!!
NATURAL_POSET_COUNTS = [1, 1, 2, 7, 40, 357, 4824, 96428]


def naive_matchings(n):
    """All perfect matchings of [2n] as frozensets of (min, max) pairs."""
    points = list(range(1, 2 * n + 1))

    def rec(free):
        if not free:
            yield ()
            return
        first = free[0]
        for i in range(1, len(free)):
            rest = free[1:i] + free[i + 1:]
            for sub in rec(rest):
                yield ((first, free[i]),) + sub

    for arcs in rec(points):
        yield frozenset(arcs)


def classify_pair(a, b):
    """'nest', 'cross' or 'align' for two disjoint arcs."""
    (o1, c1), (o2, c2) = sorted([a, b])
    if o1 < o2 < c2 < c1:
        return "nest"
    if o1 < o2 < c1 < c2:
        return "cross"
    return "align"


def naive_counts(arcs):
    """Nesting/crossing record computed pair by pair from raw arcs."""
    ne = cr = lne = rne = lcr = rcr = 0
    for a, b in itertools.combinations(sorted(arcs), 2):
        (o1, c1), (o2, c2) = sorted([a, b])
        kind = classify_pair(a, b)
        if kind == "nest":
            ne += 1
            lne += o2 == o1 + 1
            rne += c1 == c2 + 1
        elif kind == "cross":
            cr += 1
            lcr += o2 == o1 + 1
            rcr += c2 == c1 + 1
    return {"ne": ne, "cr": cr, "lne": lne, "rne": rne, "lcr": lcr, "rcr": rcr}


def naive_interval_matrix(arcs):
    """The interval-decomposition matrix computed by position scanning."""
    n = len(arcs)
    if n == 0:
        return ()
    openers = {min(a) for a in arcs}
    block_of = {}
    o_idx = c_idx = -1
    prev = None
    for pos in range(1, 2 * n + 1):
        is_opener = pos in openers
        if is_opener != prev:
            if is_opener:
                o_idx += 1
            else:
                c_idx += 1
            prev = is_opener
        block_of[pos] = o_idx if is_opener else c_idx
    k = o_idx + 1
    t = [[0] * k for _ in range(k)]
    for arc in arcs:
        o, c = min(arc), max(arc)
        t[block_of[o]][block_of[c]] += 1
    return tuple(tuple(row) for row in t)


def naive_natural_posets_by_filter(n):
    """Naturally labeled posets via transitive filtering of all up-relations.

    Exponential in C(n, 2); only usable for n <= 4, which is exactly what
    makes it a fair cross-check of the incremental generator.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for bits in itertools.product([0, 1], repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if all((a, d) in rel for (a, b) in rel for (c, d) in rel if b == c):
            out.append(frozenset(rel))
    return out


def naive_dually_factorial(n, less):
    """Direct quantifier scan of: i > j above k implies i above k."""
    for i in range(1, n + 1):
        for j in range(1, i):
            for k in range(1, n + 1):
                if (k, j) in less and (k, i) not in less:
                    return False
    return True


def naive_has_three_plus_one(n, less):
    """Scan all 4-element subsets for an induced 3-chain plus isolated point."""
    def related(a, b):
        return (a, b) in less or (b, a) in less

    for quad in itertools.combinations(range(1, n + 1), 4):
        for w in quad:
            rest = [x for x in quad if x != w]
            if any(related(w, x) for x in rest):
                continue
            for chain in itertools.permutations(rest):
                if (chain[0], chain[1]) in less and (chain[1], chain[2]) in less:
                    return True
    return False


# the four preimages of [[1,1],[0,1]] under the interval map, by class
PREIMAGE_FAMILY = {
    frozenset({(1, 3), (2, 5), (4, 6)}),   # no neighbor nesting
    frozenset({(1, 3), (2, 6), (4, 5)}),   # no left-nesting, no right-crossing
    frozenset({(1, 5), (2, 3), (4, 6)}),
    frozenset({(1, 6), (2, 3), (4, 5)}),   # no neighbor crossing
}

# the six matchings on [6] with no left-nesting
NO_LEFT_NESTING_N3 = {
    frozenset({(1, 2), (3, 4), (5, 6)}),
    frozenset({(1, 2), (3, 5), (4, 6)}),
    frozenset({(1, 3), (2, 4), (5, 6)}),
    frozenset({(1, 3), (2, 5), (4, 6)}),
    frozenset({(1, 3), (4, 5), (2, 6)}),
    frozenset({(1, 4), (2, 5), (3, 6)}),
}

# all of T_3
T3_ROWS = {
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0), (0, 2)),
    ((2, 0), (0, 1)),
    ((1, 1), (0, 1)),
    ((3,),),
}
