"""Seeded random automaton generators for corpora and the CLI.

Every function takes a `random.Random` so corpora are reproducible; nothing
here touches ambient entropy.
"""

from .automaton import Automaton, trie_from_strings
from .order import WheelerOrder

ALPHABET_POOL = "abcdefghijklmnopqrstuvwxyz"


def _letters(sigma):
    if sigma > len(ALPHABET_POOL):
        raise ValueError("sigma too large")
    return list(ALPHABET_POOL[:sigma])


def _single_state(rng, letters):
    return Automaton(1, letters, 0, [0] if rng.random() < 0.5 else [], [])


def random_dfa(rng, n_states, sigma):
    """Random acyclic DFA: uniform topological layering, then random edges
    respecting input-consistency and determinism.

    Non-source states get uniform layers and incoming labels; edges run from
    lower layers to higher ones, at most one out-edge per (state, letter),
    and every non-source state receives at least one edge.
    """
    letters = _letters(sigma)
    if n_states == 1:
        return _single_state(rng, letters)
    n_layers = rng.randint(1, n_states - 1)
    layer = [0] + sorted(rng.randint(1, n_layers) for _ in range(n_states - 1))
    label = [None] + [rng.choice(letters) for _ in range(n_states - 1)]
    edges = set()
    out_used = [set() for _ in range(n_states)]

    def candidates(v):
        return [
            u
            for u in range(n_states)
            if layer[u] < layer[v] and label[v] not in out_used[u]
        ]

    for v in range(1, n_states):
        pool = candidates(v)
        while not pool:
            label[v] = rng.choice(letters)
            pool = candidates(v)
        u = rng.choice(pool)
        edges.add((u, v, label[v]))
        out_used[u].add(label[v])

    for _ in range(rng.randint(0, 2 * n_states)):
        v = rng.randint(1, n_states - 1)
        pool = candidates(v)
        if pool:
            u = rng.choice(pool)
            edges.add((u, v, label[v]))
            out_used[u].add(label[v])

    accepting = [q for q in range(n_states) if rng.random() < 0.4] or [n_states - 1]
    return Automaton(n_states, letters, 0, accepting, sorted(edges))


def random_input_consistent_dfa(rng, n_states, sigma, cyclic=True):
    """Random input-consistent DFA; cycles allowed unless `cyclic` is False.

    Each state's first incoming edge comes from a lower id, so everything
    stays reachable.
    """
    letters = _letters(sigma)
    if n_states == 1:
        return _single_state(rng, letters)
    label = [None] + [rng.choice(letters) for _ in range(n_states - 1)]
    edges = set()
    out_used = [set() for _ in range(n_states)]

    for v in range(1, n_states):
        pool = [u for u in range(v) if label[v] not in out_used[u]]
        while not pool:
            label[v] = rng.choice(letters)
            pool = [u for u in range(v) if label[v] not in out_used[u]]
        u = rng.choice(pool)
        edges.add((u, v, label[v]))
        out_used[u].add(label[v])

    for _ in range(rng.randint(0, 2 * n_states)):
        v = rng.randint(1, n_states - 1)
        span = range(n_states) if cyclic else range(v)
        pool = [u for u in span if label[v] not in out_used[u]]
        if pool:
            u = rng.choice(pool)
            edges.add((u, v, label[v]))
            out_used[u].add(label[v])

    accepting = [q for q in range(n_states) if rng.random() < 0.4] or [n_states - 1]
    return Automaton(n_states, letters, 0, accepting, sorted(edges))


def random_2nfa(rng, n_states, sigma):
    """Random input-consistent automaton with at most two equally-labeled
    out-edges per state; not constrained to be sortable."""
    letters = _letters(sigma)
    if n_states == 1:
        return _single_state(rng, letters)
    label = [None] + [rng.choice(letters) for _ in range(n_states - 1)]
    edges = set()
    out_count = [{} for _ in range(n_states)]

    def room(u, c):
        return out_count[u].get(c, 0) < 2

    for v in range(1, n_states):
        pool = [u for u in range(v) if room(u, label[v])]
        while not pool:
            label[v] = rng.choice(letters)
            pool = [u for u in range(v) if room(u, label[v])]
        u = rng.choice(pool)
        edges.add((u, v, label[v]))
        out_count[u][label[v]] = out_count[u].get(label[v], 0) + 1

    for _ in range(rng.randint(0, 2 * n_states)):
        v = rng.randint(1, n_states - 1)
        pool = [
            u
            for u in range(n_states)
            if room(u, label[v]) and (u, v, label[v]) not in edges
        ]
        if pool:
            u = rng.choice(pool)
            edges.add((u, v, label[v]))
            out_count[u][label[v]] = out_count[u].get(label[v], 0) + 1

    accepting = [q for q in range(n_states) if rng.random() < 0.4] or [n_states - 1]
    return Automaton(n_states, letters, 0, accepting, sorted(edges))


def random_wnfa_with_order(rng, n_states, sigma, max_degree=2):
    """Random sortable NFA built along its own order, plus that order.

    State ids are ranks: 0 is the source and incoming labels are
    non-decreasing with the id.  Within a letter block the edge set is a
    monotone staircase: destinations are filled in ascending order while the
    source frontier never moves left, which is exactly the same-label
    Wheeler condition.  Every destination's first source has a smaller id
    (reachability); later sources may point forward, so cycles occur.
    """
    letters = _letters(sigma)
    if n_states == 1:
        return Automaton(1, [], 0, [0], []), WheelerOrder([0])
    label = [None] + sorted(rng.choice(letters) for _ in range(n_states - 1))
    # declared alphabet = used letters, so state-count bounds in terms of
    # the alphabet size are meaningful
    letters = sorted(set(label[1:]))
    edges = []
    out_count = [{} for _ in range(n_states)]

    def take(u, c, y):
        edges.append((u, y, c))
        out_count[u][c] = out_count[u].get(c, 0) + 1

    v = 1
    while v < n_states:
        c = label[v]
        block = [v]
        while v + len(block) < n_states and label[v + len(block)] == c:
            block.append(v + len(block))
        # first pass: one backbone source per destination, non-decreasing,
        # each strictly below its destination (keeps everything reachable);
        # repeating a source spends degree, bumping past it always fits
        backbone = []
        prev = 0
        for y in block:
            lo = prev
            if out_count[lo].get(c, 0) >= max_degree:
                lo += 1
            u = rng.randint(lo, y - 1)
            backbone.append(u)
            take(u, c, y)
            prev = u
        # second pass: extra sources between consecutive backbone points stay
        # monotone; the last destination may reach forward and close cycles
        for i, y in enumerate(block):
            lo = backbone[i]
            hi = backbone[i + 1] if i + 1 < len(block) else n_states - 1
            while rng.random() < 0.3:
                pool = [
                    w
                    for w in range(lo, hi + 1)
                    if out_count[w].get(c, 0) < max_degree and (w, y, c) not in edges
                ]
                if not pool:
                    break
                take(rng.choice(pool), c, y)
        v += len(block)

    accepting = [q for q in range(n_states) if rng.random() < 0.4] or [n_states - 1]
    a = Automaton(n_states, letters, 0, accepting, sorted(set(edges)))
    return a, WheelerOrder(range(n_states))


def random_words(rng, count, sigma, max_len, min_len=0):
    letters = _letters(sigma)
    out = set()
    while len(out) < count:
        k = rng.randint(min_len, max_len)
        out.add("".join(rng.choice(letters) for _ in range(k)))
    return sorted(out)


def random_trie(rng, n_words, sigma, max_len):
    return trie_from_strings(random_words(rng, n_words, sigma, max_len, min_len=1))


def random_wheeler_trie(rng, target_edges, sigma=4, word_len=14):
    """Trie with at least `target_edges` edges, for throughput measurements."""
    letters = _letters(sigma)
    words = set()
    while True:
        for _ in range(256):
            words.add("".join(rng.choice(letters) for _ in range(word_len)))
        trie = trie_from_strings(words)
        if len(trie.edges) >= target_edges:
            return trie
