"""B+-tree over V handles with computed-on-demand keys.

Keys are ``(char, u)`` pairs where ``u`` is a U handle; two keys compare by
character first and then by U-list order. Nothing is cached in the tree, so
a key changes automatically when the underlying order does (it never does
for live members, which is what makes the tree valid).

The single sentinel-keyed member sits in ``min_slot`` outside the tree body.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .errors import CorruptState, NotMember

FANOUT = 16
_MIN_FILL = FANOUT // 2


class _Leaf:
    __slots__ = ("items", "parent")

    def __init__(self, items: list) -> None:
        self.items = items
        self.parent: Optional[_Inner] = None

    @property
    def leftmost(self) -> "_Leaf":
        return self


class _Inner:
    __slots__ = ("children", "parent", "leftmost")

    def __init__(self, children: list) -> None:
        self.children = children
        self.parent: Optional[_Inner] = None
        for child in children:
            child.parent = self
        self.leftmost = children[0].leftmost


class VTree:
    """Ordered set of V handles.

    ``key_of(v)`` returns ``(char, u)``; ``u_before(a, b)`` is the U-order
    predicate. Structural inserts and deletes are counted in
    ``structural_ops`` so callers can assert that a code path only used
    replacements.
    """

    def __init__(self, key_of: Callable, u_before: Callable[[object, object], bool]) -> None:
        self._key_of = key_of
        self._u_before = u_before
        self._root: _Leaf | _Inner = _Leaf([])
        self._where: dict = {}
        self.min_slot = None
        self.structural_ops = 0

    # -- ordering ---------------------------------------------------------
    def _less(self, a: tuple, b: tuple) -> bool:
        if a[0] != b[0]:
            return a[0] < b[0]
        return self._u_before(a[1], b[1])

    def _min_key(self, node) -> tuple:
        return self._key_of(node.leftmost.items[0])

    # -- queries ----------------------------------------------------------
    def __contains__(self, h) -> bool:
        return h is self.min_slot or h in self._where

    def __len__(self) -> int:
        return len(self._where) + (self.min_slot is not None)

    def __iter__(self) -> Iterator:
        if self.min_slot is not None:
            yield self.min_slot
        yield from self._iter_node(self._root)

    def _iter_node(self, node) -> Iterator:
        if isinstance(node, _Leaf):
            yield from node.items
        else:
            for child in node.children:
                yield from self._iter_node(child)

    def pred(self, key: tuple):
        """Largest member strictly smaller than ``key``, or None."""
        node = self._root
        if self._where:
            while isinstance(node, _Inner):
                children = node.children
                idx = self._last_below(children, key)
                if idx < 0:
                    node = None
                    break
                node = children[idx]
            if node is not None:
                items = node.items
                lo, hi = 0, len(items)
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if self._less(self._key_of(items[mid]), key):
                        lo = mid + 1
                    else:
                        hi = mid
                if lo:
                    return items[lo - 1]
        if self.min_slot is not None and self._less(self._key_of(self.min_slot), key):
            return self.min_slot
        return None

    def _last_below(self, children: list, key: tuple) -> int:
        lo, hi = 0, len(children)
        while lo < hi:
            mid = (lo + hi) >> 1
            if self._less(self._min_key(children[mid]), key):
                lo = mid + 1
            else:
                hi = mid
        return lo - 1

    # -- replacement ------------------------------------------------------
    def replace(self, old, new) -> None:
        """Put ``new`` in the exact slot of ``old`` without rebalancing."""
        if old is self.min_slot:
            self.min_slot = new
            return
        leaf = self._where.pop(old, None)
        if leaf is None:
            raise NotMember(old)
        leaf.items[leaf.items.index(old)] = new
        self._where[new] = leaf

    def set_min(self, h) -> None:
        self.min_slot = h

    # -- structural edits -------------------------------------------------
    def insert(self, h) -> None:
        if h in self._where:
            raise CorruptState("handle already in tree")
        self.structural_ops += 1
        key = self._key_of(h)
        node = self._root
        while isinstance(node, _Inner):
            node = node.children[max(self._last_below(node.children, key), 0)]
        items = node.items
        lo, hi = 0, len(items)
        while lo < hi:
            mid = (lo + hi) >> 1
            if self._less(self._key_of(items[mid]), key):
                lo = mid + 1
            else:
                hi = mid
        items.insert(lo, h)
        self._where[h] = node
        if len(items) > FANOUT:
            self._split(node)

    def _split(self, node) -> None:
        half = len(self._children_of(node)) // 2
        if isinstance(node, _Leaf):
            right = _Leaf(node.items[half:])
            del node.items[half:]
            for item in right.items:
                self._where[item] = right
        else:
            right = _Inner(node.children[half:])
            del node.children[half:]
        parent = node.parent
        if parent is None:
            self._root = _Inner([node, right])
            return
        right.parent = parent
        parent.children.insert(parent.children.index(node) + 1, right)
        if len(parent.children) > FANOUT:
            self._split(parent)

    @staticmethod
    def _children_of(node) -> list:
        return node.items if isinstance(node, _Leaf) else node.children

    def delete(self, h) -> None:
        if h is self.min_slot:
            self.min_slot = None
            return
        leaf = self._where.pop(h, None)
        if leaf is None:
            raise NotMember(h)
        self.structural_ops += 1
        leaf.items.remove(h)
        self._rebalance(leaf)

    def _rebalance(self, node) -> None:
        parent = node.parent
        entries = self._children_of(node)
        if parent is None:
            if isinstance(node, _Inner) and len(entries) == 1:
                self._root = entries[0]
                self._root.parent = None
            return
        if len(entries) >= _MIN_FILL:
            self._fix_leftmost(node)
            return
        siblings = parent.children
        idx = siblings.index(node)
        if idx + 1 < len(siblings):
            left, right = node, siblings[idx + 1]
        else:
            left, right = siblings[idx - 1], node
        left_entries, right_entries = self._children_of(left), self._children_of(right)
        if len(left_entries) + len(right_entries) <= FANOUT:
            left_entries.extend(right_entries)
            self._adopt(left, right_entries)
            siblings.remove(right)
            self._fix_leftmost(left)
            self._rebalance(parent)
            return
        # Borrow so both sides end up at least half full.
        total = left_entries + right_entries
        half = len(total) // 2
        left_entries[:] = total[:half]
        right_entries[:] = total[half:]
        self._adopt(left, left_entries)
        self._adopt(right, right_entries)
        self._fix_leftmost(left)
        self._fix_leftmost(right)

    def _adopt(self, owner, entries: list) -> None:
        if isinstance(owner, _Leaf):
            for item in entries:
                self._where[item] = owner
        else:
            for child in entries:
                child.parent = owner

    @staticmethod
    def _fix_leftmost(node) -> None:
        while node is not None:
            if isinstance(node, _Inner):
                leftmost = node.children[0].leftmost
                if node.leftmost is leftmost:
                    return
                node.leftmost = leftmost
            node = node.parent

    # -- diagnostics ------------------------------------------------------
    def check(self) -> list[str]:
        """Structural self-check; returns a list of problems."""
        problems: list[str] = []
        self._check_node(self._root, None, problems, depth=0, depths=set())
        members = list(self._iter_node(self._root))
        for a, b in zip(members, members[1:]):
            if not self._less(self._key_of(a), self._key_of(b)):
                problems.append("tree items out of key order")
                break
        if len(members) != len(self._where):
            problems.append("back-pointer map size mismatch")
        return problems

    def _check_node(self, node, parent, problems, depth, depths) -> None:
        if node.parent is not parent:
            problems.append("bad parent pointer")
        if isinstance(node, _Leaf):
            depths.add(depth)
            if len(depths) > 1:
                problems.append("leaves at different depths")
            for item in node.items:
                if self._where.get(item) is not node:
                    problems.append("stale leaf back-pointer")
            if parent is not None and not node.items:
                problems.append("empty non-root leaf")
            return
        if node.leftmost is not node.children[0].leftmost:
            problems.append("stale leftmost pointer")
        for child in node.children:
            self._check_node(child, node, problems, depth + 1, depths)
