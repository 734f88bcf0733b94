"""Interval powerset determinization of sorted Wheeler NFAs.

Every set of states reachable by one string is contiguous in the Wheeler
order, so the reachable subsets form intervals over the input ranks, the
intervals form a prefix/suffix family, and there are at most 2n-1-sigma of
them.  Sorting the subsets by (min rank, max rank) yields the Wheeler order
of the output DFA.
"""

from collections import deque

from .automaton import Automaton
from .errors import IntervalViolation, NotWheeler
from .order import WheelerOrder, verify_wheeler_order


class DeterminizeResult:
    """Output automaton, its order, and the interval family that was reached."""

    __slots__ = ("automaton", "order", "family")

    def __init__(self, automaton, order, family):
        self.automaton = automaton
        self.order = order
        self.family = family


def determinize_full(a, order):
    """Powerset construction keyed on member sets, with interval bookkeeping.

    Requires `order` to pass verify_wheeler_order (raises NotWheeler
    otherwise).  Raises IntervalViolation if a reached subset is not
    rank-contiguous, which would mean the given order is not actually a
    Wheeler order.
    """
    if not verify_wheeler_order(a, order):
        raise NotWheeler("input order failed verification")
    rank = order.rank

    def interval_of(members):
        ranks = sorted(rank[q] for q in members)
        lo, hi = ranks[0], ranks[-1]
        if hi - lo + 1 != len(ranks):
            raise IntervalViolation(f"subset spans ranks {lo}..{hi} with gaps")
        return lo, hi

    start = frozenset({a.source})
    intervals = {start: interval_of(start)}
    transitions = {}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for c in a.alphabet:
            nxt = set()
            for q in cur:
                nxt.update(a.successors(q, c))
            if not nxt:
                continue
            nxt = frozenset(nxt)
            transitions[(cur, c)] = nxt
            if nxt not in intervals:
                intervals[nxt] = interval_of(nxt)
                queue.append(nxt)

    def sort_key(members):
        lo, hi = intervals[members]
        return lo, hi, tuple(sorted(rank[q] for q in members))

    subsets = sorted(intervals, key=sort_key)
    seen_endpoints = set(intervals[s] for s in subsets)
    assert len(seen_endpoints) == len(subsets), "distinct subsets share endpoints"
    ids = {s: i for i, s in enumerate(subsets)}

    out = Automaton(
        len(subsets),
        a.alphabet,
        ids[start],
        [ids[s] for s in subsets if s & a.accepting],
        [(ids[src], ids[dst], c) for (src, c), dst in transitions.items()],
    )
    out_order = WheelerOrder(range(len(subsets)))
    family = sorted(set(intervals.values()))
    return DeterminizeResult(out, out_order, family)


def determinize(a, order):
    """Equivalent WDFA of a sorted WNFA, with its (unique) Wheeler order."""
    res = determinize_full(a, order)
    return res.automaton, res.order


def check_prefix_suffix_family(family, n):
    """True iff `family` is a prefix/suffix interval family of size <= 2n-1.

    Intervals are (lo, hi) pairs, inclusive, over positions 0..n-1.  Every
    nested pair must share its low or its high endpoint.
    """
    ivs = set()
    for lo, hi in family:
        if not (0 <= lo <= hi < n):
            return False
        ivs.add((lo, hi))
    if len(ivs) > 2 * n - 1:
        return False
    ivs = sorted(ivs)
    for i, (lo1, hi1) in enumerate(ivs):
        for lo2, hi2 in ivs[i + 1 :]:
            if lo2 > hi1:
                break
            # containment either way must be in prefix or suffix position
            if lo1 <= lo2 and hi2 <= hi1 and not (lo1 == lo2 or hi1 == hi2):
                return False
            if lo2 <= lo1 and hi1 <= hi2 and not (lo1 == lo2 or hi1 == hi2):
                return False
    return True


def tight_interval_family(n):
    """The extremal family: the full interval plus all proper prefixes and
    suffixes.  Exactly 2n-1 intervals."""
    if n < 1:
        raise ValueError("n must be >= 1")
    family = [(0, n - 1)]
    family.extend((0, j) for j in range(n - 1))
    family.extend((i, n - 1) for i in range(1, n))
    return family
