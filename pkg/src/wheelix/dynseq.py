"""Synchronized dynamic state sequence with per-slot outgoing-label counts.

This is the engine under the online sorter and the DFA-to-WDFA converter:
one balanced tree (a treap) holds the co-lexicographic sequence of placed
states.  Every tree node is one state slot carrying the multiset of outgoing
labels appended so far, plus subtree aggregates, so position lookups, label
rank/select and slot insertion all run in O(log n) expected time.

Positions are 0-based.  Letters are small integer ids (the automaton's
symbol ids); id 0 is reserved for the source sentinel and never appears in
an outgoing-label slot.
"""

import random

_rng = random.Random(0x57EE1)


class _Slot:
    __slots__ = ("prio", "left", "right", "parent", "size", "state", "own", "sub")

    def __init__(self, state, n_letters):
        self.prio = _rng.random()
        self.left = None
        self.right = None
        self.parent = None
        self.size = 1
        self.state = state
        self.own = [0] * n_letters
        self.sub = [0] * n_letters


class DynSeq:
    def __init__(self, n_letters):
        self.n_letters = n_letters
        self.root = None
        self._node = {}

    def __len__(self):
        return self.root.size if self.root else 0

    def __contains__(self, state):
        return state in self._node

    # -- structure maintenance -------------------------------------------

    def _refresh(self, node):
        size = 1
        sub = node.own.copy()
        for child in (node.left, node.right):
            if child is not None:
                size += child.size
                csub = child.sub
                for i in range(self.n_letters):
                    sub[i] += csub[i]
        node.size = size
        node.sub = sub

    def _rotate_up(self, node):
        parent = node.parent
        grand = parent.parent
        if parent.left is node:
            parent.left = node.right
            if node.right is not None:
                node.right.parent = parent
            node.right = parent
        else:
            parent.right = node.left
            if node.left is not None:
                node.left.parent = parent
            node.left = parent
        parent.parent = node
        node.parent = grand
        if grand is not None:
            if grand.left is parent:
                grand.left = node
            else:
                grand.right = node
        else:
            self.root = node
        self._refresh(parent)
        self._refresh(node)

    def _insert_slot(self, pos, slot):
        if not 0 <= pos <= len(self):
            raise IndexError(f"insert position {pos} out of range")
        if slot.state in self._node:
            raise ValueError(f"state {slot.state!r} already placed")
        self._node[slot.state] = slot
        if self.root is None:
            self.root = slot
            return
        add = slot.own
        node = self.root
        while True:
            # sizes and label counts grow on the whole descent path
            node.size += 1
            if any(add):
                nsub = node.sub
                for i in range(self.n_letters):
                    nsub[i] += add[i]
            lsize = node.left.size if node.left else 0
            if pos <= lsize:
                if node.left is None:
                    node.left = slot
                    slot.parent = node
                    break
                node = node.left
            else:
                pos -= lsize + 1
                if node.right is None:
                    node.right = slot
                    slot.parent = node
                    break
                node = node.right
        while slot.parent is not None and slot.prio < slot.parent.prio:
            self._rotate_up(slot)

    # -- updates ----------------------------------------------------------

    def insert(self, pos, state):
        """Place `state` at position `pos` with an empty label slot."""
        self._insert_slot(pos, _Slot(state, self.n_letters))

    def insert_copy(self, pos, state, src_state):
        """Place `state` at `pos` with a copy of src_state's label multiset."""
        slot = _Slot(state, self.n_letters)
        slot.own = self._node[src_state].own.copy()
        slot.sub = slot.own.copy()
        self._insert_slot(pos, slot)

    def add_symbol(self, state, letter):
        """Append one outgoing label `letter` to the slot of `state`."""
        node = self._node[state]
        node.own[letter] += 1
        while node is not None:
            node.sub[letter] += 1
            node = node.parent

    def rename(self, old_state, new_state):
        node = self._node.pop(old_state)
        if new_state in self._node:
            raise ValueError(f"state {new_state!r} already placed")
        node.state = new_state
        self._node[new_state] = node

    # -- queries ----------------------------------------------------------

    def position(self, state):
        node = self._node[state]
        pos = node.left.size if node.left else 0
        while node.parent is not None:
            parent = node.parent
            if parent.right is node:
                pos += (parent.left.size if parent.left else 0) + 1
            node = parent
        return pos

    def state_at(self, pos):
        if not 0 <= pos < len(self):
            raise IndexError(f"position {pos} out of range")
        node = self.root
        while True:
            lsize = node.left.size if node.left else 0
            if pos < lsize:
                node = node.left
            elif pos == lsize:
                return node.state
            else:
                pos -= lsize + 1
                node = node.right

    def own_count(self, state, letter):
        return self._node[state].own[letter]

    def total(self, letter):
        return self.root.sub[letter] if self.root else 0

    def count_prefix(self, letter, pos):
        """Number of `letter` labels in the slots at positions 0..pos-1."""
        node = self.root
        acc = 0
        while node is not None and pos > 0:
            lsize = node.left.size if node.left else 0
            if pos <= lsize:
                node = node.left
            else:
                if node.left is not None:
                    acc += node.left.sub[letter]
                pos -= lsize + 1
                acc += node.own[letter]
                node = node.right
        return acc

    def count_range(self, letter, lo, hi):
        """Number of `letter` labels in the slots at positions lo..hi inclusive."""
        if hi < lo:
            return 0
        return self.count_prefix(letter, hi + 1) - self.count_prefix(letter, lo)

    def _select_slot(self, letter, k):
        """The slot holding the k-th occurrence (1-based) of `letter`."""
        node = self.root
        while node is not None:
            lcount = node.left.sub[letter] if node.left else 0
            if k <= lcount:
                node = node.left
            elif k <= lcount + node.own[letter]:
                return node
            else:
                k -= lcount + node.own[letter]
                node = node.right
        raise IndexError("select past the last occurrence")

    def select(self, letter, k):
        """State whose slot holds the k-th occurrence (1-based) of `letter`."""
        return self._select_slot(letter, k).state

    def nearest_before(self, letter, pos):
        """State of the rightmost slot strictly before `pos` holding `letter`."""
        k = self.count_prefix(letter, pos)
        if k == 0:
            return None
        return self._select_slot(letter, k).state

    def nearest_after(self, letter, pos):
        """State of the leftmost slot strictly after `pos` holding `letter`."""
        k = self.count_prefix(letter, pos + 1) + 1
        if k > self.total(letter):
            return None
        return self._select_slot(letter, k).state

    def states(self):
        """All placed states in sequence order (O(n))."""
        out = []
        stack = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            out.append(node.state)
            node = node.right
        return out

    def check_synchronized(self, expected_states):
        """Debug invariant: one slot per placed state, aggregates consistent."""
        assert len(self) == len(expected_states) == len(self._node)
        assert set(self._node) == set(expected_states)

        def walk(node):
            if node is None:
                return 0, [0] * self.n_letters
            lsize, lsub = walk(node.left)
            rsize, rsub = walk(node.right)
            size = 1 + lsize + rsize
            sub = [a + b + c for a, b, c in zip(node.own, lsub, rsub)]
            assert node.size == size, "treap size desync"
            assert node.sub == sub, "treap label-count desync"
            return size, sub

        walk(self.root)
