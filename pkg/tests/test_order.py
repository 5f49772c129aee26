import random

from rcomp.order import ListLabeling


class Item:
    __slots__ = ("prev", "next", "tag", "name")

    def __init__(self, name):
        self.prev = self.next = None
        self.tag = 0
        self.name = name


class Chain:
    """Tiny linked list that reports inserts to a labeling."""

    def __init__(self, bits=62):
        self.head = None
        self.om = ListLabeling(bits)

    def insert_after(self, anchor, item):
        if anchor is None:
            item.next, self.head = self.head, item
        else:
            item.next, anchor.next = anchor.next, item
        item.prev = anchor
        if item.next is not None:
            item.next.prev = item
        self.om.insert(item)

    def remove(self, item):
        if item.prev is None:
            self.head = item.next
        else:
            item.prev.next = item.next
        if item.next is not None:
            item.next.prev = item.prev
        self.om.delete(item)

    def items(self):
        out, node = [], self.head
        while node is not None:
            out.append(node)
            node = node.next
        return out


def assert_consistent(chain):
    items = chain.items()
    for a, b in zip(items, items[1:]):
        assert chain.om.before(a, b) and not chain.om.before(b, a)


def test_irreflexive_and_definitional():
    chain = Chain()
    x, y = Item("x"), Item("y")
    chain.insert_after(None, y)
    chain.insert_after(None, x)
    assert not chain.om.before(x, x)
    assert chain.om.before(x, y)


def test_insert_then_delete_restores_comparisons():
    chain = Chain()
    a, b, c = Item("a"), Item("b"), Item("c")
    chain.insert_after(None, a)
    chain.insert_after(a, c)
    chain.insert_after(a, b)
    chain.remove(b)
    assert chain.om.before(a, c) and not chain.om.before(c, a)


def test_many_front_insertions():
    chain = Chain()
    for i in range(100_000):
        chain.insert_after(None, Item(i))
    assert_consistent(chain)


def test_repeated_insertion_at_one_gap_relabels():
    chain = Chain(bits=16)
    first = Item("first")
    chain.insert_after(None, first)
    last = Item("last")
    chain.insert_after(first, last)
    for i in range(2000):
        chain.insert_after(first, Item(i))
    assert chain.om.relabels > 0
    assert_consistent(chain)


def test_random_workload_matches_walk():
    rng = random.Random(1)
    chain = Chain(bits=24)
    live = []
    for step in range(10_000):
        if live and rng.random() < 0.3:
            chain.remove(live.pop(rng.randrange(len(live))))
        else:
            anchor = rng.choice(live) if live and rng.random() < 0.8 else None
            item = Item(step)
            chain.insert_after(anchor, item)
            live.append(item)
    items = chain.items()
    position = {id(x): i for i, x in enumerate(items)}
    for _ in range(2000):
        a, b = rng.choice(items), rng.choice(items)
        assert chain.om.before(a, b) == (position[id(a)] < position[id(b)])
