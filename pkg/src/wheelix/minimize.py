"""State equivalence, Wheeler DFA minimization, and language comparison.

Myhill-Nerode equivalence is computed with Hopcroft partition refinement,
treating missing transitions as moves into an implicit rejecting sink.
Minimizing a sorted Wheeler DFA then reduces to one scan of the order:
merge every maximal run of order-adjacent states that are equivalent and
share an incoming label.
"""

from collections import deque

from .automaton import Automaton, check_input_consistency
from .errors import NotDeterministic, NotWheeler
from .order import WheelerOrder, verify_wheeler_order


class StatePartition:
    """Equivalence classes over states; the class id is its smallest member."""

    __slots__ = ("class_of",)

    def __init__(self, class_of):
        self.class_of = tuple(class_of)

    def same(self, u, v):
        return self.class_of[u] == self.class_of[v]

    def classes(self):
        groups = {}
        for q, c in enumerate(self.class_of):
            groups.setdefault(c, []).append(q)
        return sorted(groups.values())

    def __len__(self):
        return len(set(self.class_of))


def _require_dfa(a):
    for u in range(a.n_states):
        for dests in a.out_map(u).values():
            if len(dests) > 1:
                raise NotDeterministic(f"state {u} has equally-labeled successors")


def state_equivalence(a):
    """Coarsest partition stable under the accepting split and every letter.

    Hopcroft's algorithm over the automaton completed with an implicit
    rejecting sink, so states with incomplete transitions compare correctly.
    O(n log n).
    """
    _require_dfa(a)
    n = a.n_states
    sink = n
    inv = {}
    for u, v, c in a.edges:
        inv.setdefault((c, v), []).append(u)
    for u in range(n):
        out = a.out_map(u)
        for c in a.alphabet:
            if c not in out:
                inv.setdefault((c, sink), []).append(u)
    for c in a.alphabet:
        inv.setdefault((c, sink), []).append(sink)

    final = frozenset(a.accepting)
    nonfinal = frozenset(set(range(n + 1)) - final)
    partition = {b for b in (final, nonfinal) if b}
    block_of = {}
    for block in partition:
        for q in block:
            block_of[q] = block
    work = {min(partition, key=len)} if len(partition) > 1 else set()

    while work:
        splitter = work.pop()
        for c in a.alphabet:
            touched = {}
            for q in splitter:
                for p in inv.get((c, q), ()):
                    blk = block_of[p]
                    touched.setdefault(id(blk), (blk, set()))[1].add(p)
            for blk, overlap in touched.values():
                if len(overlap) == len(blk):
                    continue
                part1 = frozenset(overlap)
                part2 = blk - part1
                partition.remove(blk)
                partition.add(part1)
                partition.add(part2)
                for q in part1:
                    block_of[q] = part1
                for q in part2:
                    block_of[q] = part2
                if blk in work:
                    work.remove(blk)
                    work.add(part1)
                    work.add(part2)
                else:
                    work.add(min(part1, part2, key=len))

    class_of = [0] * n
    for block in partition:
        rep = min(q for q in block if q != sink) if block - {sink} else None
        for q in block:
            if q != sink:
                class_of[q] = rep
    return StatePartition(class_of)


def _coreachable(a):
    """States from which some accepting state can be reached."""
    back = [[] for _ in range(a.n_states)]
    for u, v, _ in a.edges:
        back[v].append(u)
    alive = set(a.accepting)
    queue = deque(alive)
    while queue:
        v = queue.popleft()
        for u in back[v]:
            if u not in alive:
                alive.add(u)
                queue.append(u)
    return alive


def hopcroft_minimize(a):
    """Canonical minimal partial DFA: trim dead states, then quotient by
    equivalence.  The source survives even when the language is empty."""
    _require_dfa(a)
    alive = _coreachable(a)
    alive.add(a.source)
    if len(alive) < a.n_states:
        keep = sorted(alive)
        remap = {q: i for i, q in enumerate(keep)}
        a = Automaton(
            len(keep),
            a.alphabet,
            remap[a.source],
            [remap[q] for q in a.accepting if q in alive],
            [
                (remap[u], remap[v], c)
                for u, v, c in a.edges
                if u in alive and v in alive
            ],
        )
    part = state_equivalence(a)
    reps = sorted(set(part.class_of))
    new_id = {rep: i for i, rep in enumerate(reps)}
    # keep the source's class at id 0 for a stable canonical result
    src_class = new_id[part.class_of[a.source]]
    if src_class != 0:
        flip = {src_class: 0, 0: src_class}
        new_id = {rep: flip.get(i, i) for rep, i in new_id.items()}
    g = [new_id[c] for c in part.class_of]
    edges = {(g[u], g[v], c) for u, v, c in a.edges}
    return Automaton(
        len(reps),
        a.alphabet,
        g[a.source],
        {g[q] for q in a.accepting},
        sorted(edges),
    )


def wheeler_minimize(a, order):
    """Smallest WDFA for the language of a sorted WDFA, with its order.

    Scans the states in rank order and merges every maximal run that is
    pairwise equivalent with one shared incoming label; the quotient keeps
    the induced order.  Idempotent and language-preserving.
    """
    if not verify_wheeler_order(a, order):
        raise NotWheeler("order failed verification")
    part = state_equivalence(a)
    label = check_input_consistency(a)

    group = {}
    n_groups = 0
    prev = None
    for q in order.states:
        if (
            prev is not None
            and part.same(prev, q)
            and label[prev] == label[q]
        ):
            group[q] = group[prev]
        else:
            group[q] = n_groups
            n_groups += 1
        prev = q

    edges = {(group[u], group[v], c) for u, v, c in a.edges}
    out = Automaton(
        n_groups,
        a.alphabet,
        group[a.source],
        {group[q] for q in a.accepting},
        sorted(edges),
    )
    out_order = WheelerOrder(range(n_groups))
    return out, out_order


def is_minimum_wdfa(a, order):
    """True iff no order-adjacent pair is equivalent with equal incoming label."""
    if not verify_wheeler_order(a, order):
        raise NotWheeler("order failed verification")
    part = state_equivalence(a)
    label = check_input_consistency(a)
    for prev, cur in zip(order.states, order.states[1:]):
        if part.same(prev, cur) and label[prev] == label[cur]:
            return False
    return True


def language_equivalent(a, b):
    """True iff two DFAs accept the same language.

    Product reachability over state pairs, with None standing in for the
    implicit rejecting sink of either side.
    """
    _require_dfa(a)
    _require_dfa(b)
    letters = sorted(set(a.alphabet) | set(b.alphabet))

    def accepts(side, q):
        return q is not None and q in side.accepting

    start = (a.source, b.source)
    seen = {start}
    queue = deque([start])
    while queue:
        qa, qb = queue.popleft()
        if accepts(a, qa) != accepts(b, qb):
            return False
        for c in letters:
            na = a.succ1(qa, c) if qa is not None and c in a.symbol_id else None
            nb = b.succ1(qb, c) if qb is not None and c in b.symbol_id else None
            if na is None and nb is None:
                continue
            pair = (na, nb)
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True
