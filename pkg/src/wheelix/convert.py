"""Minimum Wheeler DFA equivalent to an arbitrary acyclic DFA.

The converter minimizes the input classically, then replays the online
sorting pass, but instead of failing on the two sorting conflicts it repairs
them by splitting states into equivalent copies:

- an equally-labeled foreign edge inside a new state's predecessor range
  splits the new state into one copy per uninterrupted predecessor run;
- two foreign same-letter sources around a run that feed one already-placed
  state split that state into a left and a right copy, and the new state is
  inserted between them.

Splitting copies the outgoing edges, distributes the incoming edges, and
inherits acceptance, so the language never changes, no edge is ever deleted,
and no two order-adjacent states are ever equivalent with the same incoming
label.  The result is therefore the (unique) minimum WDFA, in
O(n + m log m) time for output size m — which can be exponential in n, so a
state budget guards the growth.
"""

from collections import deque
import itertools

from .automaton import Automaton, SENTINEL, topological_order
from .errors import InternalError, OutputLimitExceeded
from .minimize import hopcroft_minimize
from .dynseq import DynSeq
from .order import WheelerOrder, verify_wheeler_order

_ids = itertools.count()


class _Ev:
    """One evolving state: an original state or one of its split copies."""

    __slots__ = (
        "uid",
        "letter",
        "letter_id",
        "accepting",
        "cls",
        "out_placed",
        "out_pending",
        "in_srcs",
    )

    def __init__(self, letter, letter_id, accepting, cls):
        self.uid = next(_ids)
        self.letter = letter
        self.letter_id = letter_id
        self.accepting = accepting
        self.cls = cls
        self.out_placed = {}  # symbol -> placed _Ev
        self.out_pending = {}  # symbol -> original state id
        self.in_srcs = []  # placed _Ev sources, all labeled self.letter

    def __repr__(self):
        return f"<ev{self.uid} {self.letter}>"


def min_wdfa_from_acyclic_dfa(a, max_states=None, debug=False):
    """(minimum WDFA, its Wheeler order) for the language of an acyclic DFA.

    Raises CyclicError on cyclic input and OutputLimitExceeded once more
    than `max_states` output states exist.
    """
    topological_order(a)  # acyclicity gate
    a1 = hopcroft_minimize(a)
    topo = topological_order(a1)
    sym_id = a1.symbol_id
    n_letters = len(a1.alphabet) + 1

    seq = DynSeq(n_letters)
    states_per_letter = [0] * n_letters
    in_pending = {}  # original id -> [(placed _Ev source, symbol), ...]

    def budget_check():
        if max_states is not None and len(seq) > max_states:
            raise OutputLimitExceeded(f"more than {max_states} output states")

    def register_pending(ev, skip_orig=None):
        for sym, orig in ev.out_pending.items():
            if orig != skip_orig:
                in_pending.setdefault(orig, []).append((ev, sym))

    def place(ev, pos):
        seq.insert(pos, ev)
        states_per_letter[ev.letter_id] += 1
        budget_check()
        for src in ev.in_srcs:
            seq.add_symbol(src, ev.letter_id)
            src.out_placed[ev.letter] = ev
            del src.out_pending[ev.letter]
        register_pending(ev)

    def split_placed(z, lo_pos, hi_pos, current_w, pending_copies):
        """Split placed state z around the predecessor span [lo_pos, hi_pos].

        z keeps its slot and its incoming edges from sources left of the
        span; the new right copy lands immediately after z and takes the
        incoming edges from sources right of the span.  Outgoing edges
        (placed and pending) are duplicated onto the copy.
        """
        z2 = _Ev(z.letter, z.letter_id, z.accepting, z.cls)
        z2.out_placed = dict(z.out_placed)
        z2.out_pending = dict(z.out_pending)
        left, right = [], []
        for src in z.in_srcs:
            p = seq.position(src)
            if p < lo_pos:
                left.append(src)
            elif p > hi_pos:
                right.append(src)
            else:
                raise InternalError("splitter source inside an uninterrupted run")
        z.in_srcs = left
        z2.in_srcs = right
        for src in right:
            src.out_placed[z.letter] = z2
        for dest in z.out_placed.values():
            dest.in_srcs.append(z2)
        seq.insert_copy(seq.position(z) + 1, z2, z)
        states_per_letter[z.letter_id] += 1
        budget_check()
        # edges into the state being processed right now go to its pending
        # copies directly; everything else queues as usual
        register_pending(z2, skip_orig=current_w)
        for cp in pending_copies:
            if z in cp.in_srcs and cp.letter in z2.out_pending:
                cp.in_srcs.append(z2)

    # the minimized source seeds the order
    src_ev = _Ev(SENTINEL, 0, a1.source in a1.accepting, a1.source)
    src_ev.out_pending = {c: vs[0] for c, vs in a1.out_map(a1.source).items()}
    place(src_ev, 0)

    for w in topo:
        if w == a1.source:
            continue
        arrivals = in_pending.pop(w)
        groups = {}
        for src, sym in arrivals:
            groups.setdefault(sym, []).append(src)
        templates = {c: vs[0] for c, vs in a1.out_map(w).items()}

        pending_copies = []
        for sym in sorted(groups, key=sym_id.get):
            cp = _Ev(sym, sym_id[sym], w in a1.accepting, w)
            cp.out_pending = dict(templates)
            cp.in_srcs = groups[sym]
            pending_copies.append(cp)

        for sym in sorted(groups, key=sym_id.get):
            lid = sym_id[sym]
            work = deque(cp for cp in pending_copies if cp.letter == sym)
            while work:
                cp = work.popleft()
                placed_pos = sorted((seq.position(s), s) for s in cp.in_srcs)
                lo_pos, hi_pos = placed_pos[0][0], placed_pos[-1][0]

                interrupters = seq.count_range(lid, lo_pos, hi_pos)
                if interrupters:
                    # foreign same-letter sources break the span into runs;
                    # one equivalent copy per run
                    base = seq.count_prefix(lid, lo_pos)
                    cuts = [
                        seq.position(seq.select(lid, base + j))
                        for j in range(1, interrupters + 1)
                    ]
                    runs = []
                    cut_i = 0
                    for p, s in placed_pos:
                        while cut_i < len(cuts) and cuts[cut_i] < p:
                            cut_i += 1
                        if runs and runs[-1][0] == cut_i:
                            runs[-1][1].append(s)
                        else:
                            runs.append((cut_i, [s]))
                    new_copies = []
                    for _, run_srcs in runs:
                        sub = _Ev(sym, lid, cp.accepting, cp.cls)
                        sub.out_pending = dict(cp.out_pending)
                        sub.in_srcs = run_srcs
                        new_copies.append(sub)
                    i = pending_copies.index(cp)
                    pending_copies[i : i + 1] = new_copies
                    work.extendleft(reversed(new_copies))
                    continue

                wl = seq.nearest_before(lid, lo_pos)
                wr = seq.nearest_after(lid, hi_pos)
                if (
                    wl is not None
                    and wr is not None
                    and wl.out_placed[sym] is wr.out_placed[sym]
                ):
                    split_placed(wl.out_placed[sym], lo_pos, hi_pos, w, pending_copies)
                    work.appendleft(cp)
                    continue

                if wl is None:
                    ins = sum(states_per_letter[:lid])
                else:
                    ins = seq.position(wl.out_placed[sym]) + 1
                place(cp, ins)
                pending_copies.remove(cp)

        if debug:
            _check_incremental_invariants(seq, sym_id)

    if in_pending:
        raise InternalError("unprocessed incoming edges remain")
    return _assemble(seq, a1)


def _check_incremental_invariants(seq, sym_id):
    """Debug mode: placed states stay locally sorted and never leave two
    adjacent equivalent states with one incoming label."""
    evs = seq.states()
    pos = {ev: i for i, ev in enumerate(evs)}
    for prev, cur in zip(evs, evs[1:]):
        assert prev.letter_id <= cur.letter_id, "letter blocks out of order"
        assert not (
            prev.cls == cur.cls and prev.letter == cur.letter
        ), "mergeable adjacent pair"
    triples = sorted(
        (ev.letter_id, pos[src], pos[ev])
        for ev in evs
        for src in ev.in_srcs
    )
    for (l1, _, d1), (l2, _, d2) in zip(triples, triples[1:]):
        if l1 == l2:
            assert d1 <= d2, "same-label destinations decrease"
        else:
            assert d1 < d2, "label blocks interleave"
    seq.check_synchronized(set(seq._node))


def _assemble(seq, a1):
    evs = seq.states()
    ids = {ev: i for i, ev in enumerate(evs)}
    edges = []
    for ev in evs:
        if ev.out_pending:
            raise InternalError("pending edge survived conversion")
        for sym, dest in sorted(ev.out_placed.items(), key=lambda kv: kv[0]):
            edges.append((ids[ev], ids[dest], sym))
    out = Automaton(
        len(evs),
        a1.alphabet,
        ids[evs[0]],
        [ids[ev] for ev in evs if ev.accepting],
        edges,
    )
    order = WheelerOrder(range(len(evs)))
    if not verify_wheeler_order(out, order):
        raise InternalError("converted automaton failed order verification")
    return out, order
