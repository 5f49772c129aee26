"""Order maintenance by integer list labeling.

Items are any objects exposing ``prev``, ``next`` and a writable ``tag``
attribute; the caller keeps the linked list itself and notifies this
structure about insertions so tags stay monotone along the list.

On a gap collision we look for the smallest aligned tag range around the
anchor whose population is below ``density ** level`` and spread its items
evenly, which gives amortized logarithmic relabeling cost.
"""

from __future__ import annotations

DEFAULT_BITS = 62
DENSITY = 1.5


class ListLabeling:
    __slots__ = ("bits", "relabels")

    def __init__(self, bits: int = DEFAULT_BITS) -> None:
        self.bits = bits
        self.relabels = 0

    @property
    def universe(self) -> int:
        return 1 << self.bits

    @staticmethod
    def before(a, b) -> bool:
        return a.tag < b.tag

    def insert(self, item) -> None:
        """Assign a tag to ``item`` which is already linked into the list."""
        lo = item.prev.tag if item.prev is not None else -1
        hi = item.next.tag if item.next is not None else self.universe
        if hi - lo >= 2:
            item.tag = (lo + hi) >> 1
            return
        self._relabel_around(item)

    def delete(self, item) -> None:
        """Nothing to do: gaps left behind are reused by later inserts."""

    def _relabel_around(self, item) -> None:
        self.relabels += 1
        anchor = item.prev if item.prev is not None else item.next
        center = anchor.tag
        level = 1
        while True:
            if level > self.bits:
                self._grow(item)
                return
            size = 1 << level
            base = (center >> level) << level
            left = item
            while left.prev is not None and base <= left.prev.tag < base + size:
                left = left.prev
            members = []
            node = left
            while node is not None and (node is item or base <= node.tag < base + size):
                members.append(node)
                node = node.next
            if len(members) <= DENSITY ** level and len(members) < size:
                step = size // len(members)
                for i, node in enumerate(members):
                    node.tag = base + i * step
                return
            level += 1

    def _grow(self, item) -> None:
        self.bits += 8
        head = item
        while head.prev is not None:
            head = head.prev
        count = 0
        node = head
        while node is not None:
            count += 1
            node = node.next
        step = self.universe // (count + 1)
        node, tag = head, step
        while node is not None:
            node.tag = tag
            tag += step
            node = node.next

