"""Wheeler recognition for 2-NFAs via a 2-SAT reduction solved by SCC analysis.

One boolean variable per ordered state pair encodes "u precedes v".  Clauses
force the label rule and predecessor propagation plus antisymmetry and
completeness; transitivity needs no clauses on these inputs because it
propagates along shortest paths from the source.
"""

from .automaton import check_input_consistency, nondeterminism_degree
from .errors import DegreeTooHigh, InternalError
from .order import WheelerOrder, verify_wheeler_order


class TwoSatInstance:
    """CNF with at most two literals per clause.

    Variables are 0..n_vars-1.  A literal is 2*var for the positive phase and
    2*var+1 for the negation.  `var_of` maps an ordered state pair (u, v) to
    the variable asserting u < v.
    """

    __slots__ = ("n_vars", "clauses", "var_of")

    def __init__(self, n_vars, clauses, var_of):
        self.n_vars = n_vars
        self.clauses = clauses
        self.var_of = var_of

    @staticmethod
    def lit(var, positive=True):
        return 2 * var + (0 if positive else 1)


def build_2sat(a):
    """Encode "a admits a Wheeler order" as a TwoSatInstance.

    Clause families over variables x(u,v) = "u < v":

    - unary x(u,v) whenever u's incoming label precedes v's,
    - x(u',v') -> x(u,v) for equally-labeled u,v with a-predecessors u',v',
    - antisymmetry x(u,v) -> not x(v,u),
    - completeness x(u,v) or x(v,u).

    Requires an input-consistent automaton of nondeterminism degree <= 2.
    """
    label = check_input_consistency(a)
    d = nondeterminism_degree(a)
    if d > 2:
        raise DegreeTooHigh(d)

    n = a.n_states
    var_of = {}
    for u in range(n):
        for v in range(n):
            if u != v:
                var_of[(u, v)] = len(var_of)
    pos = TwoSatInstance.lit
    neg = lambda var: TwoSatInstance.lit(var, positive=False)  # noqa: E731

    sym_rank = dict(a.symbol_id)
    sym_rank["#"] = 0
    clauses = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            x_uv = var_of[(u, v)]
            if sym_rank[label[u]] < sym_rank[label[v]]:
                clauses.append((pos(x_uv),))
            if u < v:
                x_vu = var_of[(v, u)]
                clauses.append((neg(x_uv), neg(x_vu)))
                clauses.append((pos(x_uv), pos(x_vu)))

    by_dest = {}
    for up, u, c in a.edges:
        by_dest.setdefault((c, u), []).append(up)
    for (c, u), upreds in by_dest.items():
        for v in range(n):
            if v == u or label[v] != c:
                continue
            for vp in by_dest.get((c, v), ()):
                for up in upreds:
                    if up != vp:
                        # x(up,vp) -> x(u,v)
                        clauses.append((neg(var_of[(up, vp)]), pos(var_of[(u, v)])))

    return TwoSatInstance(len(var_of), clauses, var_of)


def solve_2sat(inst):
    """Satisfying assignment as a list of bools, or None when unsatisfiable.

    Implication-graph construction plus iterative Tarjan SCC; a variable is
    true iff its positive literal's component comes later in topological
    order than its negation's.
    """
    n_lits = 2 * inst.n_vars
    adj = [[] for _ in range(n_lits)]
    for clause in inst.clauses:
        if len(clause) == 1:
            (lit,) = clause
            adj[lit ^ 1].append(lit)
        else:
            p, q = clause
            adj[p ^ 1].append(q)
            adj[q ^ 1].append(p)

    index = [-1] * n_lits
    low = [0] * n_lits
    on_stack = bytearray(n_lits)
    comp = [-1] * n_lits
    stack = []
    counter = 0
    n_comps = 0

    for root in range(n_lits):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, ei = work[-1]
            if ei == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = 1
            if ei < len(adj[node]):
                work[-1] = (node, ei + 1)
                child = adj[node][ei]
                if index[child] == -1:
                    work.append((child, 0))
                elif on_stack[child]:
                    if index[child] < low[node]:
                        low[node] = index[child]
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    if low[node] < low[parent]:
                        low[parent] = low[node]
                if low[node] == index[node]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = 0
                        comp[w] = n_comps
                        if w == node:
                            break
                    n_comps += 1

    assignment = []
    for var in range(inst.n_vars):
        cp, cn = comp[2 * var], comp[2 * var + 1]
        if cp == cn:
            return None
        # Tarjan numbers components in reverse topological order, so the
        # smaller id is the one everything else can reach: make it true.
        assignment.append(cp < cn)
    return assignment


def sort_2nfa(a):
    """Wheeler order of a 2-NFA, or None when no such order exists.

    The rank of u is the number of states assigned to precede it; by
    completeness and antisymmetry this is a permutation whenever the relation
    is a total order.  The extracted order is verified defensively — the
    reduction guarantees transitivity, so a verification failure means an
    implementation bug and raises InternalError instead of reporting
    "not Wheeler".
    """
    inst = build_2sat(a)
    assignment = solve_2sat(inst)
    if assignment is None:
        return None
    n = a.n_states
    ranks = [0] * n
    for (u, v), var in inst.var_of.items():
        if assignment[var]:
            ranks[v] += 1
    states = [0] * n
    if sorted(ranks) != list(range(n)):
        raise InternalError("2-SAT assignment did not induce a total order")
    for q, r in enumerate(ranks):
        states[r] = q
    order = WheelerOrder(states)
    if not verify_wheeler_order(a, order):
        raise InternalError("extracted order failed verification")
    return order
