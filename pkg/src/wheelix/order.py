"""Wheeler node orders: the linear-time verifier and a brute-force oracle."""

from itertools import permutations

from .automaton import SENTINEL, Automaton, check_input_consistency
from .errors import FormatError, NotInputConsistent, TooLarge

BRUTE_FORCE_LIMIT = 10


class WheelerOrder:
    """A permutation of states: position i holds the state of rank i."""

    __slots__ = ("states", "rank")

    def __init__(self, states):
        self.states = tuple(states)
        self.rank = {q: i for i, q in enumerate(self.states)}
        if len(self.rank) != len(self.states):
            raise ValueError("order repeats a state")

    def __len__(self):
        return len(self.states)

    def __eq__(self, other):
        return isinstance(other, WheelerOrder) and self.states == other.states

    def __hash__(self):
        return hash(self.states)

    def __repr__(self):
        return f"WheelerOrder({list(self.states)})"


def verify_wheeler_order(a, order):
    """True iff `order` satisfies both Wheeler properties on automaton `a`.

    Bucket-sorts the edges as (label, source rank, destination rank) triples,
    then checks in one scan that destinations never decrease and strictly
    increase whenever the label changes.  O(|V|+|E|); keys use ranks so the
    cost is independent of how ids were assigned.

    Non-input-consistent automata cannot satisfy the label rule, so they get
    False (not an error).  A non-permutation `order` is a contract violation.
    """
    if set(order.states) != set(range(a.n_states)):
        raise ValueError("order is not a permutation of the states")
    try:
        check_input_consistency(a)
    except NotInputConsistent:
        return False
    rank = order.rank
    if rank[a.source] != 0:
        return False

    n = a.n_states
    n_letters = len(a.alphabet) + 1
    # three stable counting-sort passes: by destination, source, then label
    triples = [(a.symbol_id[c], rank[u], rank[v]) for u, v, c in a.edges]
    for key in (2, 1, 0):
        buckets = [[] for _ in range(n_letters if key == 0 else n)]
        for t in triples:
            buckets[t[key]].append(t)
        triples = [t for b in buckets for t in b]

    prev_label = prev_dest = None
    for label, _, dest in triples:
        if prev_label is not None:
            if label == prev_label:
                if dest < prev_dest:
                    return False
            elif dest <= prev_dest:
                return False
        prev_label, prev_dest = label, dest
    return True


def brute_force_wheeler_order(a):
    """Exhaustive oracle: some order passing verify_wheeler_order, or None.

    Any passing order puts the source first and groups states by incoming
    label in symbol order, so only permutations within label blocks need to
    be tried.  Limited to n <= 10 states.
    """
    if a.n_states > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force limited to {BRUTE_FORCE_LIMIT} states")
    try:
        label = check_input_consistency(a)
    except NotInputConsistent:
        return None
    blocks = [[a.source]]
    for c in a.alphabet:
        block = sorted(q for q in range(a.n_states) if q != a.source and label[q] == c)
        if block:
            blocks.append(block)

    def search(i, prefix):
        if i == len(blocks):
            order = WheelerOrder(prefix)
            return order if verify_wheeler_order(a, order) else None
        for perm in permutations(blocks[i]):
            found = search(i + 1, prefix + list(perm))
            if found is not None:
                return found
        return None

    return search(0, [])


def relabel_by_order(a, order):
    """Copy of `a` with state ids replaced by ranks.

    On a WDFA the Wheeler order is unique, so this is a canonical form:
    two sorted WDFAs are isomorphic iff their relabeled copies serialize
    identically.
    """
    rank = order.rank
    return Automaton(
        a.n_states,
        a.alphabet,
        rank[a.source],
        [rank[q] for q in a.accepting],
        [(rank[u], rank[v], c) for u, v, c in a.edges],
    )


def parse_order(text):
    """Read the one-line order file format: `order <id> <id> ...`."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(SENTINEL):
            continue
        parts = line.split()
        if parts[0] != "order":
            raise FormatError(f"expected 'order' line, got {parts[0]!r}", line=lineno)
        try:
            return WheelerOrder(int(t) for t in parts[1:])
        except ValueError as exc:
            raise FormatError(str(exc), line=lineno) from None
    raise FormatError("missing 'order' line")


def serialize_order(order):
    return "order" + "".join(f" {q}" for q in order.states) + "\n"
