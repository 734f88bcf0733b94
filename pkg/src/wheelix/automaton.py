"""Automaton data model, `.wnfa` text format, validation, and reference semantics.

States are dense integers 0..n-1.  The alphabet is an ordered list of
whitespace-free tokens; the order given is the symbol order used everywhere
else in the package.  `#` is reserved as the virtual incoming label of the
source and may not appear in an alphabet.
"""

from collections import deque
import heapq

from .errors import (
    CyclicError,
    FormatError,
    InvalidAutomaton,
    NotInputConsistent,
    UnknownSymbol,
)

SENTINEL = "#"


class Automaton:
    """Edge-labeled multigraph with a single source and an accepting set.

    Immutable after construction: all derived adjacency is precomputed and
    no method mutates.  Construction validates every structural invariant:

    - exactly one state (the source) has in-degree 0,
    - every state is the source or reachable from it,
    - no duplicate (from, to, label) triple,
    - every edge label belongs to the alphabet,
    - `#` is not an alphabet symbol.
    """

    __slots__ = (
        "n_states",
        "alphabet",
        "source",
        "accepting",
        "edges",
        "symbol_id",
        "_succ",
        "_pred",
        "_in_deg",
    )

    def __init__(self, n_states, alphabet, source, accepting, edges):
        alphabet = tuple(alphabet)
        accepting = frozenset(accepting)
        edges = tuple(tuple(e) for e in edges)

        if n_states < 1:
            raise InvalidAutomaton("automaton needs at least one state")
        seen = set()
        for tok in alphabet:
            if not tok or any(ch.isspace() for ch in tok):
                raise InvalidAutomaton(f"bad alphabet token {tok!r}")
            if tok == SENTINEL:
                raise InvalidAutomaton("'#' is reserved and cannot be in the alphabet")
            if tok in seen:
                raise InvalidAutomaton(f"duplicate alphabet token {tok!r}")
            seen.add(tok)
        if not 0 <= source < n_states:
            raise InvalidAutomaton(f"source {source} out of range")
        for q in accepting:
            if not 0 <= q < n_states:
                raise InvalidAutomaton(f"accepting state {q} out of range")

        symbol_id = {c: i + 1 for i, c in enumerate(alphabet)}
        succ = [{} for _ in range(n_states)]
        pred = [[] for _ in range(n_states)]
        in_deg = [0] * n_states
        edge_set = set()
        for u, v, c in edges:
            if not (0 <= u < n_states and 0 <= v < n_states):
                raise InvalidAutomaton(f"edge ({u},{v},{c!r}) out of range")
            if c not in symbol_id:
                raise InvalidAutomaton(f"unknown label {c!r} on edge ({u},{v})")
            if (u, v, c) in edge_set:
                raise InvalidAutomaton(f"duplicate edge ({u},{v},{c!r})")
            edge_set.add((u, v, c))
            succ[u].setdefault(c, []).append(v)
            pred[v].append((u, c))
            in_deg[v] += 1

        if in_deg[source] != 0:
            raise InvalidAutomaton(f"source {source} has incoming edges")
        for q in range(n_states):
            if q != source and in_deg[q] == 0:
                raise InvalidAutomaton(
                    f"multiple sources: states {source} and {q} both have in-degree 0"
                )

        reached = {source}
        frontier = deque([source])
        while frontier:
            u = frontier.popleft()
            for dests in succ[u].values():
                for v in dests:
                    if v not in reached:
                        reached.add(v)
                        frontier.append(v)
        if len(reached) != n_states:
            missing = min(set(range(n_states)) - reached)
            raise InvalidAutomaton(f"unreachable state {missing}")

        self.n_states = n_states
        self.alphabet = alphabet
        self.source = source
        self.accepting = accepting
        self.edges = edges
        self.symbol_id = symbol_id
        self._succ = [{c: tuple(sorted(vs)) for c, vs in d.items()} for d in succ]
        self._pred = [tuple(p) for p in pred]
        self._in_deg = tuple(in_deg)

    def successors(self, u, c):
        """All c-successors of u (empty tuple when the transition is missing)."""
        return self._succ[u].get(c, ())

    def succ1(self, u, c):
        """The unique c-successor of u, or None.  Only meaningful on DFAs."""
        vs = self._succ[u].get(c)
        return vs[0] if vs else None

    def out_map(self, u):
        """label -> tuple of successors for state u."""
        return self._succ[u]

    def in_edges(self, v):
        """Tuple of (source, label) pairs entering v."""
        return self._pred[v]

    def in_degree(self, v):
        return self._in_deg[v]

    def __repr__(self):
        return (
            f"Automaton(n={self.n_states}, sigma={len(self.alphabet)}, "
            f"edges={len(self.edges)}, accepting={len(self.accepting)})"
        )


def parse_automaton(text):
    """Parse `.wnfa` text into a validated Automaton.

    Grammar (line-based, UTF-8, '#'-prefixed comment lines ignored)::

        wnfa v1
        alphabet <tok> <tok> ...
        states <n>
        source <id>
        accepting <id> <id> ...
        edge <from> <to> <label>     (any number, any order)
    """
    header = ["wnfa", "alphabet", "states", "source", "accepting"]
    fields = {}
    edges = []
    stage = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(SENTINEL):
            continue
        parts = line.split()
        key = parts[0]
        if stage < len(header):
            want = header[stage]
            if key != want:
                raise FormatError(f"expected {want!r} line, got {key!r}", line=lineno)
            fields[want] = (parts[1:], lineno)
            stage += 1
            continue
        if key != "edge":
            raise FormatError(f"expected 'edge' line, got {key!r}", line=lineno)
        if len(parts) != 4:
            raise FormatError("edge line needs <from> <to> <label>", line=lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError("edge endpoints must be integers", line=lineno) from None
        edges.append((u, v, parts[3]))

    if stage < len(header):
        raise FormatError(f"missing {header[stage]!r} line")

    version, lineno = fields["wnfa"]
    if version != ["v1"]:
        raise FormatError("unsupported format version", line=lineno)
    alphabet, _ = fields["alphabet"]
    toks, lineno = fields["states"]
    if len(toks) != 1 or not toks[0].isdigit():
        raise FormatError("states line needs one integer", line=lineno)
    n_states = int(toks[0])
    toks, lineno = fields["source"]
    if len(toks) != 1:
        raise FormatError("source line needs one id", line=lineno)
    try:
        source = int(toks[0])
    except ValueError:
        raise FormatError("source id must be an integer", line=lineno) from None
    toks, lineno = fields["accepting"]
    try:
        accepting = [int(t) for t in toks]
    except ValueError:
        raise FormatError("accepting ids must be integers", line=lineno) from None

    return Automaton(n_states, alphabet, source, accepting, edges)


def serialize_automaton(a):
    """Canonical `.wnfa` text: source renumbered to 0, edges sorted.

    Remaining states keep their relative id order.  parse(serialize(a)) is
    isomorphic to a, and serializing twice is a fixed point.
    """
    remap = {a.source: 0}
    for q in range(a.n_states):
        if q != a.source:
            remap[q] = len(remap)
    rank = a.symbol_id
    lines = [
        "wnfa v1",
        "alphabet" + "".join(" " + c for c in a.alphabet),
        f"states {a.n_states}",
        "source 0",
        "accepting" + "".join(f" {q}" for q in sorted(remap[q] for q in a.accepting)),
    ]
    mapped = sorted(
        ((remap[u], remap[v], c) for u, v, c in a.edges),
        key=lambda e: (e[0], e[1], rank[e[2]]),
    )
    lines.extend(f"edge {u} {v} {c}" for u, v, c in mapped)
    return "\n".join(lines) + "\n"


def check_input_consistency(a):
    """Map each state to its unique incoming label ('#' for the source).

    Raises NotInputConsistent as soon as one state is found with two distinct
    incoming labels, which already rules out any Wheeler order.
    """
    label = {a.source: SENTINEL}
    for u, v, c in a.edges:
        prev = label.get(v)
        if prev is None:
            label[v] = c
        elif prev != c:
            raise NotInputConsistent(v, prev, c)
    return label


def nondeterminism_degree(a):
    """Smallest d such that no state has more than d equally-labeled out-edges."""
    d = 1 if a.n_states else 0
    for u in range(a.n_states):
        for dests in a.out_map(u).values():
            if len(dests) > d:
                d = len(dests)
    return d


def topological_order(a):
    """States in an order where every edge goes forward, source first.

    Ties are popped in ascending state id so diagnostics are deterministic.
    Raises CyclicError when a directed cycle exists.
    """
    in_deg = list(a._in_deg)
    ready = [a.source]
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for dests in a.out_map(u).values():
            for v in dests:
                in_deg[v] -= 1
                if in_deg[v] == 0:
                    heapq.heappush(ready, v)
    if len(order) != a.n_states:
        raise CyclicError("cycle found")
    return order


def naive_accepts(a, word):
    """Subset-simulation membership test: the test oracle for the language.

    `word` is any iterable of symbols (a str works for single-char alphabets).
    """
    current = {a.source}
    for c in word:
        if c not in a.symbol_id:
            raise UnknownSymbol(f"symbol {c!r} not in alphabet")
        nxt = set()
        for u in current:
            nxt.update(a.successors(u, c))
        current = nxt
        if not current:
            return False
    return any(q in a.accepting for q in current)


def gen_worst_case(m):
    """Acyclic DFA whose words are c/d, then m letters from {a,b}, then e/f.

    Two parallel branches hang off the source: one guarded by c and closed by
    an accepting e-sink, one guarded by d and closed by an accepting f-sink.
    Each branch has m levels of {a-state, b-state} pairs with complete
    bipartite edges between consecutive levels.  Exactly 4m+5 states.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    edges = []
    source = 0
    nxt = 1

    def branch(guard, closer):
        nonlocal nxt
        head = nxt
        nxt += 1
        edges.append((source, head, guard))
        level = [head]
        for _ in range(m):
            astate, bstate = nxt, nxt + 1
            nxt += 2
            for u in level:
                edges.append((u, astate, "a"))
                edges.append((u, bstate, "b"))
            level = [astate, bstate]
        sink = nxt
        nxt += 1
        for u in level:
            edges.append((u, sink, closer))
        return sink

    e_sink = branch("c", "e")
    f_sink = branch("d", "f")
    return Automaton(nxt, ["a", "b", "c", "d", "e", "f"], source, [e_sink, f_sink], edges)


def trie_from_strings(words):
    """Tree-shaped DFA accepting exactly the given set of words.

    Symbols of every word must avoid '#'.  The empty word makes the source
    accepting.  Trees are always prefix-sortable, so the result is a WDFA.
    """
    words = [tuple(w) for w in words]
    if not words:
        raise ValueError("need at least one word")
    symbols = sorted({c for w in words for c in w})
    if SENTINEL in symbols:
        raise InvalidAutomaton("'#' cannot appear in trie words")
    children = [{}]
    accepting = set()
    for w in words:
        node = 0
        for c in w:
            nxt = children[node].get(c)
            if nxt is None:
                nxt = len(children)
                children.append({})
                children[node][c] = nxt
            node = nxt
        accepting.add(node)
    edges = [
        (u, v, c) for u, kids in enumerate(children) for c, v in sorted(kids.items())
    ]
    return Automaton(len(children), symbols, 0, accepting, edges)
