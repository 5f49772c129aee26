"""Grouped node storage.

Consecutive nodes of one list are packed into groups of at most ``g``
records. A record carries only its label (U side), its partner and its
``(group, local)`` identifier; it has no list links and no out-edge. Each
group stores one out-edge, the one of its first record, and everything else
is derived:

* ``prev``/``next`` come from the group's slot array and group links;
* the out-edge of a later slot is found by advancing the head edge along the
  opposite list by the lengths of the preceding slots;
* in-edges of a node are the opposite-list nodes whose start falls inside
  it, which form one consecutive run starting at the node's out-edge target.

Derivation needs a consistent graph. Structural edits that invalidate a
group's head edge (a new first record, a group split) mark it dirty; the
engine calls :meth:`GroupedStore.settle` once the operation is complete and
dirty heads are recomputed from the preceding group.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .errors import CorruptState
from .order import ListLabeling

DEFAULT_GROUP_SIZE = 16


class Group:
    __slots__ = ("slots", "lookup", "prev", "next", "head_target", "head_offset", "tag", "dirty")

    def __init__(self, capacity: int) -> None:
        self.slots: list = []
        self.lookup: list = [None] * (capacity + 1)  # local ids are 1..capacity
        self.prev: Optional[Group] = None
        self.next: Optional[Group] = None
        self.head_target = None
        self.head_offset = 0
        self.tag = 0
        self.dirty = True

    def resolve(self, local: int):
        return self.lookup[local]


class _Record:
    __slots__ = ()

    @property
    def prev(self):
        group = self.group
        idx = group.slots.index(self)
        if idx:
            return group.slots[idx - 1]
        return group.prev.slots[-1] if group.prev is not None else None

    @property
    def next(self):
        group = self.group
        slots = group.slots
        idx = slots.index(self) + 1
        if idx < len(slots):
            return slots[idx]
        return group.next.slots[0] if group.next is not None else None

    @property
    def node_id(self) -> tuple[Group, int]:
        return self.group, self.local


class URecord(_Record):
    __slots__ = ("char", "length", "partner", "group", "local")

    def __init__(self, char: int, length: int) -> None:
        self.char = char
        self.length = length
        self.partner = None
        self.group: Optional[Group] = None
        self.local = 0

    def __repr__(self) -> str:
        return f"<u {self.char}x{self.length} #{self.local}>"


class VRecord(_Record):
    """F-interval record; its label is read through the partner."""

    __slots__ = ("partner", "group", "local")

    def __init__(self, partner: URecord) -> None:
        self.partner = partner
        self.group: Optional[Group] = None
        self.local = 0

    @property
    def char(self) -> int:
        return self.partner.char

    @property
    def length(self) -> int:
        return self.partner.length

    def __repr__(self) -> str:
        return f"<v {self.char}x{self.length} #{self.local}>"


class GroupedSide:
    def __init__(self, ordered: bool, capacity: int, record_type: type) -> None:
        self.capacity = capacity
        self.record_type = record_type
        self.head_group: Optional[Group] = None
        self.tail_group: Optional[Group] = None
        self.size = 0
        self.group_count = 0
        self.order = ListLabeling() if ordered else None
        self.other: Optional[GroupedSide] = None
        self._dirty: dict[Group, None] = {}

    # -- creation ---------------------------------------------------------
    def new(self, char: int, length: int) -> URecord:
        return URecord(char, length)

    def new_partner(self, mate: URecord) -> VRecord:
        rec = VRecord(mate)
        mate.partner = rec
        return rec

    # -- groups -----------------------------------------------------------
    def _link_group(self, after: Optional[Group]) -> Group:
        group = Group(self.capacity)
        nxt = self.head_group if after is None else after.next
        group.prev = after
        group.next = nxt
        if after is None:
            self.head_group = group
        else:
            after.next = group
        if nxt is None:
            self.tail_group = group
        else:
            nxt.prev = group
        self.group_count += 1
        if self.order is not None:
            self.order.insert(group)
        self._dirty[group] = None
        return group

    def _unlink_group(self, group: Group) -> None:
        prv, nxt = group.prev, group.next
        if prv is None:
            self.head_group = nxt
        else:
            prv.next = nxt
        if nxt is None:
            self.tail_group = prv
        else:
            nxt.prev = prv
        self.group_count -= 1
        self._dirty.pop(group, None)
        group.prev = group.next = None

    def _mark_dirty(self, group: Group) -> None:
        group.dirty = True
        self._dirty[group] = None

    def _place(self, group: Group, idx: int, rec) -> None:
        if len(group.slots) == self.capacity:
            # Split a full group into ceil(g/2) and floor(g/2) records first;
            # the new record then lands in whichever half covers ``idx``.
            keep = -(-self.capacity // 2)
            fresh = self._split_group(group, keep)
            if idx > keep:
                group, idx = fresh, idx - keep
        group.slots.insert(idx, rec)
        local = group.lookup.index(None, 1)
        group.lookup[local] = rec
        rec.group = group
        rec.local = local
        self.size += 1
        if idx == 0:
            self._mark_dirty(group)

    def _split_group(self, group: Group, keep: int) -> Group:
        moved = group.slots[keep:]
        del group.slots[keep:]
        fresh = self._link_group(group)
        for rec in moved:
            group.lookup[rec.local] = None
        for local, rec in enumerate(moved, start=1):
            fresh.slots.append(rec)
            fresh.lookup[local] = rec
            rec.group = fresh
            rec.local = local
        return fresh

    # -- list structure ---------------------------------------------------
    def first(self):
        return self.head_group.slots[0] if self.head_group is not None else None

    def last(self):
        return self.tail_group.slots[-1] if self.tail_group is not None else None

    def insert_after(self, anchor, rec) -> None:
        if anchor is None:
            group = self.head_group
            if group is None:
                group = self._link_group(None)
            self._place(group, 0, rec)
            return
        group = anchor.group
        self._place(group, group.slots.index(anchor) + 1, rec)

    def insert_before(self, anchor, rec) -> None:
        if anchor is None:
            group = self.tail_group
            if group is None or len(group.slots) == self.capacity:
                # Appending packs groups full instead of splitting the tail.
                group = self._link_group(group)
            self._place(group, len(group.slots), rec)
            return
        group = anchor.group
        idx = group.slots.index(anchor)
        if idx == 0 and group.prev is not None:
            prev_group = group.prev
            self._place(prev_group, len(prev_group.slots), rec)
        else:
            self._place(group, idx, rec)

    def remove(self, rec) -> None:
        group = rec.group
        idx = group.slots.index(rec)
        del group.slots[idx]
        group.lookup[rec.local] = None
        self.size -= 1
        if not group.slots:
            self._unlink_group(group)
        elif idx == 0:
            self._mark_dirty(group)

    def __iter__(self) -> Iterator:
        group = self.head_group
        while group is not None:
            yield from group.slots
            group = group.next

    def groups(self) -> Iterator[Group]:
        group = self.head_group
        while group is not None:
            yield group
            group = group.next

    def before(self, a, b) -> bool:
        ga, gb = a.group, b.group
        if ga is gb:
            return ga.slots.index(a) < ga.slots.index(b)
        return ga.tag < gb.tag

    # -- edges ------------------------------------------------------------
    def out_edge(self, rec):
        group = rec.group
        if group.dirty:
            raise CorruptState("out-edge read while the group head is unresolved")
        pos = group.head_offset
        for slot in group.slots:
            if slot is rec:
                break
            pos += slot.length
        target = group.head_target
        while pos >= target.length:
            pos -= target.length
            target = target.next
        return target, pos

    def set_out_edge(self, rec, target, offset: int) -> None:
        group = rec.group
        if group.slots[0] is rec:
            group.head_target = target
            group.head_offset = offset
            group.dirty = False
            self._dirty.pop(group, None)

    def in_edges(self, rec, cap: Optional[int] = None) -> list:
        target, offset = self.out_edge(rec)
        found = []
        if offset == 0:
            found.append((target, 0))
        pos = target.length - offset
        target = target.next
        length = rec.length
        while target is not None and pos < length:
            if cap is not None and len(found) >= cap:
                break
            found.append((target, pos))
            pos += target.length
            target = target.next
        return found

    def in_degree(self, rec, cap: int) -> int:
        return len(self.in_edges(rec, cap))

    def settle(self) -> None:
        while self._dirty:
            group = next(iter(self._dirty))
            self._resolve(group)

    def _resolve(self, group: Group) -> None:
        chain = []
        while group is not None and group.dirty:
            chain.append(group)
            group = group.prev
        for group in reversed(chain):
            if group.prev is None:
                target, offset = self.other.first(), 0
            else:
                tail = group.prev.slots[-1]
                target, offset = self.out_edge(tail)
                offset += tail.length
                while offset >= target.length:
                    offset -= target.length
                    target = target.next
            group.head_target = target
            group.head_offset = offset
            group.dirty = False
            self._dirty.pop(group, None)

    def audit_record(self, rec) -> tuple[str, ...]:
        return type(rec).__slots__


class GroupedStore:
    backend = "grouped"

    def __init__(self, group_size: int = DEFAULT_GROUP_SIZE) -> None:
        self.group_size = group_size
        self.U = GroupedSide(ordered=True, capacity=group_size, record_type=URecord)
        self.V = GroupedSide(ordered=False, capacity=group_size, record_type=VRecord)
        self.U.other = self.V
        self.V.other = self.U

    def settle(self) -> None:
        self.U.settle()
        self.V.settle()
