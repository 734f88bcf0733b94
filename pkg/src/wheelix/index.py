"""Immutable path-query index over a sorted Wheeler DFA.

The index keeps the outgoing labels concatenated in rank order, per-letter
block starts over the incoming labels (the C-array of a BWT index), and a
rank-enabled bitvector of accepting ranks.  One backward step maps a rank
range through one letter; membership, substring closure, and suffix closure
are all walks of such steps.
"""

from bisect import bisect_left
from collections import deque

from .automaton import SENTINEL, check_input_consistency
from .errors import FormatError, NotDeterministic, NotWheeler, UnknownSymbol
from .order import verify_wheeler_order

_WORD = 64


class Bitvector:
    """Static bitvector with O(1) rank via per-word prefix samples."""

    __slots__ = ("n", "words", "samples")

    def __init__(self, bits):
        bits = list(bits)
        self.n = len(bits)
        self.words = []
        for i in range(0, self.n, _WORD):
            w = 0
            for j, b in enumerate(bits[i : i + _WORD]):
                if b:
                    w |= 1 << j
            self.words.append(w)
        self.samples = [0]
        for w in self.words:
            self.samples.append(self.samples[-1] + bin(w).count("1"))

    def rank1(self, i):
        """Number of set bits in positions [0, i)."""
        if i <= 0:
            return 0
        i = min(i, self.n)
        q, r = divmod(i, _WORD)
        cnt = self.samples[q]
        if r:
            cnt += bin(self.words[q] & ((1 << r) - 1)).count("1")
        return cnt

    def any_in(self, lo, hi):
        """True iff some bit in [lo, hi] (inclusive) is set."""
        return self.rank1(hi + 1) > self.rank1(lo)

    def __getitem__(self, i):
        return (self.words[i // _WORD] >> (i % _WORD)) & 1


class RankRange:
    """Inclusive rank interval; `lo > hi` encodes the empty range."""

    __slots__ = ("lo", "hi")

    EMPTY = None  # filled in below

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi

    @property
    def is_empty(self):
        return self.lo > self.hi

    def __eq__(self, other):
        if not isinstance(other, RankRange):
            return NotImplemented
        if self.is_empty and other.is_empty:
            return True
        return (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self):
        return hash((-1, -1)) if self.is_empty else hash((self.lo, self.hi))

    def __repr__(self):
        return "RankRange(EMPTY)" if self.is_empty else f"RankRange({self.lo},{self.hi})"


RankRange.EMPTY = RankRange(0, -1)

MEMBERSHIP = "membership"
SUBSTRING_CLOSURE = "substring_closure"
SUFFIX_CLOSURE = "suffix_closure"
MODES = (MEMBERSHIP, SUBSTRING_CLOSURE, SUFFIX_CLOSURE)


class WheelerIndex:
    """Rank/select view of a pruned, sorted WDFA.

    Fields: `out_labels[r]` is the sorted label list leaving rank r;
    `block_start[c]` is the first rank whose incoming label is c (cumulative,
    so letters without states point at the next block); `accepting_bits`
    supports constant-time rank.  Only states that can reach an accepting
    state are kept, so a non-empty range is meaningful in closure queries.
    """

    __slots__ = (
        "n_states",
        "alphabet",
        "out_labels",
        "block_start",
        "accepting_bits",
        "_prefix_counts",
    )

    def __init__(self, n_states, alphabet, out_labels, block_start, accepting):
        self.n_states = n_states
        self.alphabet = tuple(alphabet)
        self.out_labels = tuple(tuple(ls) for ls in out_labels)
        self.block_start = dict(block_start)
        self.accepting_bits = Bitvector(
            1 if q in accepting else 0 for q in range(n_states)
        )
        counts = {c: [0] * (n_states + 1) for c in self.alphabet}
        for r, labels in enumerate(self.out_labels):
            for c in counts:
                counts[c][r + 1] = counts[c][r]
            for c in labels:
                counts[c][r + 1] += 1
        self._prefix_counts = counts

    def full_range(self):
        return RankRange(0, self.n_states - 1) if self.n_states else RankRange.EMPTY

    def source_range(self):
        """Singleton range of the source: the effect of reading the sentinel."""
        return RankRange(0, 0) if self.n_states else RankRange.EMPTY


def build_index(a, order):
    """Index a sorted WDFA after pruning states that cannot accept.

    Pruning keeps the relative order, which still satisfies the Wheeler
    properties and preserves the language.  An automaton whose language is
    empty yields a zero-state index on which every query range is EMPTY.
    """
    for u in range(a.n_states):
        for dests in a.out_map(u).values():
            if len(dests) > 1:
                raise NotDeterministic(f"state {u} has equally-labeled successors")
    if not verify_wheeler_order(a, order):
        raise NotWheeler("order failed verification")
    label = check_input_consistency(a)

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

    kept = [q for q in order.states if q in alive]
    new_rank = {q: r for r, q in enumerate(kept)}
    out_labels = [
        sorted(
            (c for c, vs in a.out_map(q).items() if vs[0] in alive),
            key=a.symbol_id.get,
        )
        for q in kept
    ]
    block_start = {}
    running = 0
    per_letter = {c: 0 for c in a.alphabet}
    for q in kept:
        if label[q] != SENTINEL:
            per_letter[label[q]] += 1
    block_start[SENTINEL] = 0
    running = sum(1 for q in kept if label[q] == SENTINEL)
    for c in a.alphabet:
        block_start[c] = running
        running += per_letter[c]
    accepting = {new_rank[q] for q in a.accepting if q in alive}
    return WheelerIndex(len(kept), a.alphabet, out_labels, block_start, accepting)


def follow(ix, rng, symbol):
    """Ranks reachable by one `symbol` edge from the ranks in `rng`.

    The image of a contiguous range is contiguous: it starts at the symbol's
    block start plus the number of symbol-labeled edges leaving smaller
    ranks, and its width is the number of symbol-labeled edges leaving the
    range.
    """
    if symbol not in ix._prefix_counts:
        raise UnknownSymbol(f"symbol {symbol!r} not in alphabet")
    if rng.is_empty:
        return RankRange.EMPTY
    counts = ix._prefix_counts[symbol]
    lo = ix.block_start[symbol] + counts[rng.lo]
    hi = ix.block_start[symbol] + counts[rng.hi + 1] - 1
    return RankRange(lo, hi) if lo <= hi else RankRange.EMPTY


def query(ix, word, mode):
    """Decide a word against the indexed language.

    membership: walk from the source range; accept on a non-empty final
    range containing an accepting rank.  substring_closure: walk from the
    full range; accept on non-empty.  suffix_closure: walk from the full
    range; accept when the final range contains an accepting rank.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    rng = ix.source_range() if mode == MEMBERSHIP else ix.full_range()
    for c in word:
        rng = follow(ix, rng, c)
        if rng.is_empty:
            return False
    if mode == SUBSTRING_CLOSURE:
        return not rng.is_empty
    return not rng.is_empty and ix.accepting_bits.any_in(rng.lo, rng.hi)


def serialize_index(ix):
    """Text form: labels with '|' slot boundaries (symbols comma-joined),
    per-letter block starts, and the accepting bitstring."""
    labels = "|".join(",".join(ls) for ls in ix.out_labels)
    starts = " ".join(
        f"{c}:{ix.block_start[c]}" for c in (SENTINEL,) + ix.alphabet
    )
    bits = "".join(str(ix.accepting_bits[i]) for i in range(ix.n_states))
    return (
        "index v1\n"
        f"alphabet{''.join(' ' + c for c in ix.alphabet)}\n"
        f"labels {labels}\n"
        f"starts {starts}\n"
        f"accepting {bits}\n"
    )


def parse_index(text):
    lines = {}
    order = ["index", "alphabet", "labels", "starts", "accepting"]
    stage = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line or line.startswith(SENTINEL + " "):
            continue
        key = line.split(maxsplit=1)[0]
        if stage >= len(order) or key != order[stage]:
            raise FormatError(f"unexpected line {key!r}", line=lineno)
        lines[key] = (line.split(maxsplit=1)[1:] or [""])[0]
        stage += 1
    if stage < len(order):
        raise FormatError(f"missing {order[stage]!r} line")
    if lines["index"] != "v1":
        raise FormatError("unsupported index version")
    alphabet = tuple(lines["alphabet"].split())
    bits = lines["accepting"]
    n = len(bits)
    if lines["labels"]:
        slots = lines["labels"].split("|")
    else:
        slots = []
    if len(slots) < n:
        slots += [""] * (n - len(slots))
    if len(slots) != n:
        raise FormatError("label slots do not match accepting bits")
    out_labels = [s.split(",") if s else [] for s in slots]
    block_start = {}
    for tok in lines["starts"].split():
        c, _, r = tok.rpartition(":")
        block_start[c] = int(r)
    accepting = {i for i, b in enumerate(bits) if b == "1"}
    return WheelerIndex(n, alphabet, out_labels, block_start, accepting)
