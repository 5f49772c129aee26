"""Plain node storage: one object per node with explicit links and edges.

A store exposes two *sides*, ``U`` and ``V``, with the same interface so the
engine can run every symmetric operation once. Handles are the node objects
themselves. Labels (``char``, ``length``), ``partner``, ``prev`` and ``next``
are read as attributes; everything that may need derivation in other
backends (edges, structural edits, ordering) goes through side methods.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .order import ListLabeling


class PlainNode:
    __slots__ = ("char", "length", "prev", "next", "partner", "target", "offset", "sources", "tag")

    def __init__(self, char: int, length: int) -> None:
        self.char = char
        self.length = length
        self.prev: Optional[PlainNode] = None
        self.next: Optional[PlainNode] = None
        self.partner: Optional[PlainNode] = None
        self.target: Optional[PlainNode] = None
        self.offset = 0
        # In-edge sources in insertion order; values unused.
        self.sources: dict[PlainNode, None] = {}
        self.tag = 0

    def __repr__(self) -> str:
        return f"<node {self.char}x{self.length} @{id(self) & 0xFFFF:04x}>"


class PlainSide:
    """Doubly linked list of :class:`PlainNode` plus edge bookkeeping."""

    def __init__(self, ordered: bool) -> None:
        self.head: Optional[PlainNode] = None
        self.tail: Optional[PlainNode] = None
        self.size = 0
        self.order = ListLabeling() if ordered else None
        self.other: Optional[PlainSide] = None

    # -- creation ---------------------------------------------------------
    def new(self, char: int, length: int) -> PlainNode:
        return PlainNode(char, length)

    def new_partner(self, mate: PlainNode) -> PlainNode:
        node = PlainNode(mate.char, mate.length)
        node.partner = mate
        mate.partner = node
        return node

    # -- list structure ---------------------------------------------------
    def first(self) -> Optional[PlainNode]:
        return self.head

    def last(self) -> Optional[PlainNode]:
        return self.tail

    def insert_after(self, anchor: Optional[PlainNode], node: PlainNode) -> None:
        """Link ``node`` after ``anchor``; ``None`` means at the front."""
        if anchor is None:
            nxt = self.head
            self.head = node
        else:
            nxt = anchor.next
            anchor.next = node
        node.prev = anchor
        node.next = nxt
        if nxt is None:
            self.tail = node
        else:
            nxt.prev = node
        self.size += 1
        if self.order is not None:
            self.order.insert(node)

    def insert_before(self, anchor: Optional[PlainNode], node: PlainNode) -> None:
        """Link ``node`` before ``anchor``; ``None`` means at the end."""
        self.insert_after(self.tail if anchor is None else anchor.prev, node)

    def remove(self, node: PlainNode) -> None:
        prv, nxt = node.prev, node.next
        if prv is None:
            self.head = nxt
        else:
            prv.next = nxt
        if nxt is None:
            self.tail = prv
        else:
            nxt.prev = prv
        self.size -= 1
        if node.target is not None:
            node.target.sources.pop(node, None)
        node.prev = node.next = None

    def __iter__(self) -> Iterator[PlainNode]:
        node = self.head
        while node is not None:
            yield node
            node = node.next

    def before(self, a: PlainNode, b: PlainNode) -> bool:
        return a.tag < b.tag

    # -- edges ------------------------------------------------------------
    @staticmethod
    def out_edge(node: PlainNode) -> tuple[PlainNode, int]:
        return node.target, node.offset

    @staticmethod
    def set_out_edge(node: PlainNode, target: PlainNode, offset: int) -> None:
        old = node.target
        if old is not None:
            old.sources.pop(node, None)
        node.target = target
        node.offset = offset
        target.sources[node] = None

    @staticmethod
    def in_edges(node: PlainNode) -> list[tuple[PlainNode, int]]:
        return [(src, src.offset) for src in node.sources]

    @staticmethod
    def in_degree(node: PlainNode, cap: int) -> int:
        return len(node.sources)

    def settle(self) -> None:
        """Plain edges are always explicit, nothing to resolve."""

    def audit_record(self, node: PlainNode) -> tuple[str, ...]:
        return PlainNode.__slots__


class PlainStore:
    backend = "plain"

    def __init__(self) -> None:
        self.U = PlainSide(ordered=True)
        self.V = PlainSide(ordered=False)
        self.U.other = self.V
        self.V.other = self.U

    def settle(self) -> None:
        pass


def locate(node, offset: int):
    """Advance along a list from ``node`` until ``offset`` fits inside."""
    while offset >= node.length:
        offset -= node.length
        node = node.next
    return node, offset
