"""Prefix-sorting of Wheeler DFAs.

`sort_online` streams the states of an acyclic DFA in topological order and
maintains the co-lexicographic order with logarithmic delay per edge,
failing fast when the graph cannot be Wheeler.  `sort_offline` sorts any DFA
(cycles allowed) by the label strings of a BFS spanning tree and then checks
the result, since on a sortable DFA any path from the source decides the
order of two states.
"""

from collections import deque
import heapq

from .dynseq import DynSeq
from .errors import NotDeterministic, NotInputConsistent, SortFailed
from .order import WheelerOrder, verify_wheeler_order


def _incoming_labels(a):
    """Per-state incoming label as symbol ids, or SortFailed on a conflict."""
    label = [0] * a.n_states  # 0 = sentinel id of the source
    for u, v, c in a.edges:
        cid = a.symbol_id[c]
        if label[v] and label[v] != cid:
            raise SortFailed("input-consistency", f"state {v}")
        label[v] = cid
    return label


def _require_dfa(a):
    for u in range(a.n_states):
        for dests in a.out_map(u).values():
            if len(dests) > 1:
                raise NotDeterministic(f"state {u} has equally-labeled successors")


class _Reservations:
    """Debug bookkeeping: reserved predecessor ranges, one pool per letter.

    Ranges for a fixed letter must stay pairwise disjoint at every step; the
    online algorithm guarantees it, this class asserts it.
    """

    def __init__(self, seq):
        self.seq = seq
        self.by_letter = {}

    def reserve(self, letter, lo_state, hi_state):
        pos = self.seq.position
        lo, hi = pos(lo_state), pos(hi_state)
        for a_state, b_state in self.by_letter.get(letter, ()):
            a_pos, b_pos = pos(a_state), pos(b_state)
            assert hi < a_pos or b_pos < lo, "reserved ranges overlap"
        self.by_letter.setdefault(letter, []).append((lo_state, hi_state))

    def is_reserved(self, letter, state):
        pos = self.seq.position
        p = pos(state)
        return any(
            pos(lo) < p < pos(hi) for lo, hi in self.by_letter.get(letter, ())
        )


def sort_online(a, debug=False):
    """Wheeler order of an acyclic DFA, built one state at a time.

    States are consumed in topological order (ties popped by ascending id).
    For each new state u with incoming label b and predecessor positions
    spanning [v_min, v_max]:

    - fail if the span already emits a b (an equally-labeled foreign edge
      inside the predecessor range: no insertion point can exist);
    - fail if a predecessor sits strictly inside the predecessor span of an
      earlier b-state (its reserved range), detected by checking that the
      nearest b-emitting slots on both sides feed the same b-state;
    - otherwise append b to every predecessor's slot and insert u right
      after the b-successor of the last b-emitting slot before v_min (or at
      the start of the b-block).

    Cost is O(log |V|) per edge.  Raises SortFailed with kind
    "input-consistency" / "type1" / "type2" / "cycle"; raises
    NotDeterministic if the input is not a DFA at all.
    """
    _require_dfa(a)
    label = _incoming_labels(a)
    n_letters = len(a.alphabet) + 1
    seq = DynSeq(n_letters)
    states_per_letter = [0] * n_letters
    reservations = _Reservations(seq) if debug else None

    succ_by_id = [
        {a.symbol_id[c]: vs[0] for c, vs in a.out_map(u).items()}
        for u in range(a.n_states)
    ]

    in_deg = list(a._in_deg)
    ready = [a.source]
    processed = 0
    while ready:
        u = heapq.heappop(ready)
        b = label[u]
        if u == a.source:
            seq.insert(0, u)
        else:
            preds = [p for p, _ in a.in_edges(u)]
            ppos = [seq.position(p) for p in preds]
            lo, hi = min(ppos), max(ppos)
            if seq.count_range(b, lo, hi) > 0:
                raise SortFailed("type1", f"state {u}")
            for p, pp in zip(preds, ppos):
                left = seq.nearest_before(b, pp)
                right = seq.nearest_after(b, pp)
                if (
                    left is not None
                    and right is not None
                    and succ_by_id[left][b] == succ_by_id[right][b]
                ):
                    raise SortFailed("type2", f"state {u} via predecessor {p}")
            if debug:
                assert reservations.is_reserved(b, preds[ppos.index(lo)]) is False
            for p in preds:
                seq.add_symbol(p, b)
            before = seq.nearest_before(b, lo)
            if before is None:
                ins = sum(states_per_letter[:b])
            else:
                ins = seq.position(succ_by_id[before][b]) + 1
            seq.insert(ins, u)
            if debug:
                reservations.reserve(b, preds[ppos.index(lo)], preds[ppos.index(hi)])
                seq.check_synchronized(set(seq._node))
        states_per_letter[b] += 1
        processed += 1
        for dests in a.out_map(u).values():
            v = dests[0]
            in_deg[v] -= 1
            if in_deg[v] == 0:
                heapq.heappush(ready, v)

    if processed != a.n_states:
        raise SortFailed("cycle")
    return WheelerOrder(seq.states())


def sort_offline(a):
    """Wheeler order of a DFA (cycles allowed), or SortFailed.

    Builds a BFS spanning tree rooted at the source and sorts the states by
    the co-lexicographic order of their tree path strings, computed with
    rank doubling over binary-lifted ancestors (O(n log n)).  A final
    linear-time verification accepts or rejects the candidate, which is
    sound because a sortable DFA orders any two states identically along
    every pair of paths from the source.
    """
    _require_dfa(a)
    try:
        _incoming_labels(a)
    except SortFailed:
        raise SortFailed("input-consistency") from None

    n = a.n_states
    parent = [-1] * n
    via = [0] * n  # symbol id of the tree edge into each state
    depth = [0] * n
    seen = [False] * n
    seen[a.source] = True
    queue = deque([a.source])
    while queue:
        u = queue.popleft()
        for c in sorted(a.out_map(u), key=a.symbol_id.get):
            v = a.out_map(u)[c][0]
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                via[v] = a.symbol_id[c]
                depth[v] = depth[u] + 1
                queue.append(v)

    # rank by the last 2^k labels of the root-to-state string, reversed;
    # the source contributes the minimal sentinel, absent ancestors pad lower
    rank = list(via)
    jump = parent
    span = 1
    max_depth = max(depth)
    while span <= max_depth:
        keys = [
            (rank[v], rank[jump[v]] if jump[v] >= 0 else -1) for v in range(n)
        ]
        by_key = sorted(range(n), key=keys.__getitem__)
        rank = [0] * n
        r = 0
        for i, v in enumerate(by_key):
            if i and keys[v] != keys[by_key[i - 1]]:
                r += 1
            rank[v] = r
        jump = [jump[jump[v]] if jump[v] >= 0 else -1 for v in range(n)]
        span *= 2

    if sorted(rank) != list(range(n)):
        # distinct states of a DFA spell distinct tree paths
        raise SortFailed("not-wheeler", "tie in path ranks")
    states = [0] * n
    for v, r in enumerate(rank):
        states[r] = v
    order = WheelerOrder(states)
    if not verify_wheeler_order(a, order):
        raise SortFailed("not-wheeler")
    return order
