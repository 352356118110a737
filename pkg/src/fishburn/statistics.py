"""Statistics on factorial posets, permutations, matchings and tables.

Every statistic returns a nonnegative integer.  The vocabulary below is
closed and shared with the distribution and verification machinery so
tuples of statistics can be requested by name.

``comp`` is defined uniformly through the direct-sum decomposition of each
object kind; it is computed by a greedy left-to-right cut: cut after a
prefix that is closed under the relevant structure (poset: all earlier
elements below all later ones; permutation: prefix is {1..k}; matching:
prefix endpoints are {1..2k}).
"""

from __future__ import annotations

from typing import Sequence

from .bijections import permutation_to_table
from .errors import NotFactorial, UnknownStatistic
from .objects import Matching, Poset, arc_statistics, is_factorial, rne_poset


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

def count_pattern_p(pi: Sequence[int]) -> int:
    """Occurrences of the vincular pattern: adjacent letters a_i < a_{i+1}
    with a_i - 1 appearing somewhere after position i+1.

    >>> count_pattern_p((3, 5, 1, 4, 2, 6))
    1
    """
    n = len(pi)
    position = {v: idx for idx, v in enumerate(pi)}
    count = 0
    for i in range(n - 1):
        if pi[i] < pi[i + 1] and pi[i] - 1 >= 1:
            if position[pi[i] - 1] > i + 1:
                count += 1
    return count


def perm_stats(pi: Sequence[int]) -> dict[str, int]:
    """All permutation statistics.

    dent counts the distinct entries of the inversion table; last is the
    position of n minus one; comp is the direct-sum component count.
    """
    n = len(pi)
    asc = sum(1 for i in range(n - 1) if pi[i] < pi[i + 1])
    des = n - 1 - asc if n else 0
    inv = sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if pi[i] > pi[j]
    )
    lmin = lmax = 0
    lo, hi = n + 1, 0
    for v in pi:
        if v < lo:
            lmin += 1
            lo = v
        if v > hi:
            lmax += 1
            hi = v
    rmin = rmax = 0
    lo, hi = n + 1, 0
    for v in reversed(pi):
        if v < lo:
            rmin += 1
            lo = v
        if v > hi:
            rmax += 1
            hi = v
    comp = 0
    running_max = 0
    for k, v in enumerate(pi, start=1):
        running_max = max(running_max, v)
        if running_max == k:
            comp += 1
    table = permutation_to_table(pi)
    return {
        "comp": comp,
        "asc": asc,
        "des": des,
        "inv": inv,
        "lmin": lmin,
        "lmax": lmax,
        "rmin": rmin,
        "rmax": rmax,
        "dent": len(set(table)),
        "last": pi.index(n) if n else 0,
        "p": count_pattern_p(pi),
    }


# ---------------------------------------------------------------------------
# Factorial posets
# ---------------------------------------------------------------------------

def poset_stats(p: Poset) -> dict[str, int]:
    """Statistics of a factorial poset; raises NotFactorial otherwise.

    lev counts distinct predecessor sets; ip counts incomparable pairs;
    pre_n is the predecessor count of the top label n.
    """
    if not is_factorial(p):
        raise NotFactorial(f"poset on [{p.n}] is not factorial")
    n = p.n
    comp = 0
    for k in range(1, n + 1):
        head = (1 << k) - 1
        if all(p.pre_masks[j - 1] & head == head for j in range(k + 1, n + 1)):
            comp += 1
    return {
        "comp": comp,
        "min": sum(1 for mask in p.pre_masks if mask == 0),
        "pre_n": p.pre(n) if n else 0,
        "lev": len(set(p.pre_masks)),
        "ip": n * (n - 1) // 2 - len(p.less),
        "rne_poset": rne_poset(p),
    }


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

def matching_stats(m: Matching) -> dict[str, int]:
    """All matching statistics, including the nesting/crossing record.

    min is the smallest closer minus one; last counts closers before the
    opener of the last arc; inter counts maximal opener intervals; emb
    counts pairs of a closer lying strictly inside another arc.
    """
    n = m.n
    comp = 0
    running_max = 0
    for idx, (o, c) in enumerate(sorted(m.arcs), start=1):
        running_max = max(running_max, c)
        if running_max == 2 * idx:
            comp += 1
    openers = m.openers
    inter = sum(
        1
        for idx, o in enumerate(openers)
        if idx == 0 or openers[idx - 1] != o - 1
    )
    closers = m.closers
    last_opener = m.arcs[-1][0] if n else 0
    last = sum(1 for c in closers if c < last_opener)
    emb = sum(
        1
        for c in closers
        for o2, c2 in m.arcs
        if o2 < c < c2
    )
    record = arc_statistics(m)
    return {
        "comp": comp,
        "min": closers[0] - 1 if n else 0,
        "last": last,
        "inter": inter,
        "emb": emb,
        "ne": record.ne,
        "cr": record.cr,
        "lne": record.lne,
        "rne": record.rne,
        "lcr": record.lcr,
        "rcr": record.rcr,
    }


# ---------------------------------------------------------------------------
# Inversion tables
# ---------------------------------------------------------------------------

def table_stats(w: Sequence[int]) -> dict[str, int]:
    return {"dent": len(set(w)) if w else 0}


# object-class name -> stat function; vocabulary is the union of the keys
STAT_FUNCTIONS = {
    "matchings": matching_stats,
    "permutations": perm_stats,
    "factorial_posets": poset_stats,
    "natural_posets": poset_stats,
    "inversion_tables": table_stats,
}

VOCABULARY = {
    "matchings": (
        "comp", "min", "last", "inter", "emb",
        "ne", "cr", "lne", "rne", "lcr", "rcr",
    ),
    "permutations": (
        "comp", "asc", "des", "inv", "lmin", "lmax", "rmin", "rmax",
        "dent", "last", "p",
    ),
    "factorial_posets": ("comp", "min", "pre_n", "lev", "ip", "rne_poset"),
    "natural_posets": ("comp", "min", "pre_n", "lev", "ip", "rne_poset"),
    "inversion_tables": ("dent",),
}


def stats_for(class_name: str, obj, names: Sequence[str] | None = None) -> dict[str, int]:
    """Named statistics of one object; names default to the full vocabulary."""
    if class_name not in STAT_FUNCTIONS:
        raise UnknownStatistic(f"no statistics defined for class {class_name!r}")
    record = STAT_FUNCTIONS[class_name](obj)
    if names is None:
        return record
    out = {}
    for name in names:
        if name not in record:
            raise UnknownStatistic(f"{name!r} is not a {class_name} statistic")
        out[name] = record[name]
    return out
