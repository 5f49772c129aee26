"""The LF-interval graph.

``U`` holds the pieces of a divided BWT in L order, ``V`` the matching
F-intervals in F order. Each node has one partner on the other side (same
label) and one outgoing covering edge ``(target, offset)`` into the other
side: the target is the opposite node whose range contains this node's
start, and ``offset`` is the distance from the target's start. No absolute
row numbers are stored; only :meth:`LfIntervalGraph.validate` reconstructs
them by walking the lists.

Two structural primitives live here because both the update engine and the
balancer need them: :meth:`LfIntervalGraph.split` and
:meth:`LfIntervalGraph.merge`. Each reads every edge it needs before
mutating anything and leaves a consistent graph behind.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import CorruptState, InvalidAlpha
from .grouped import DEFAULT_GROUP_SIZE, GroupedStore
from .oracle import lf_naive
from .store import PlainStore, locate
from .text import SENTINEL
from .vtree import VTree

MIN_ALPHA = 16
BACKENDS = ("plain", "grouped")


class TreeCondition(str, Enum):
    ADJACENT_DISTINCT = "adjacent-distinct"
    ACROSS_SENTINEL = "distinct-across-sentinel"
    IS_SENTINEL = "is-sentinel"
    NONE = "none"


def tree_condition(v, missing_is_distinct: bool = True) -> TreeCondition:
    """Decide whether ``v`` belongs in the search tree over V.

    With ``u`` the partner of ``v`` and ``n1``, ``n2`` its successors in U:
    ``u`` is the sentinel; or ``n1`` is an ordinary node with a different
    character; or ``n1`` is the sentinel and ``n2`` has a different
    character. A missing successor counts as a different character unless
    ``missing_is_distinct`` is false.
    """
    u = v.partner
    char = u.char
    if char == SENTINEL:
        return TreeCondition.IS_SENTINEL
    n1 = u.next
    if n1 is None:
        return TreeCondition.ADJACENT_DISTINCT if missing_is_distinct else TreeCondition.NONE
    if n1.char != SENTINEL:
        return TreeCondition.ADJACENT_DISTINCT if n1.char != char else TreeCondition.NONE
    n2 = n1.next
    if n2 is None:
        return TreeCondition.ACROSS_SENTINEL if missing_is_distinct else TreeCondition.NONE
    return TreeCondition.ACROSS_SENTINEL if n2.char != char else TreeCondition.NONE


class HeavyArray:
    """Unordered array of handles with a back-index for O(1) removal."""

    __slots__ = ("_items", "_index")

    def __init__(self) -> None:
        self._items: list = []
        self._index: dict = {}

    def __contains__(self, h) -> bool:
        return h in self._index

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(list(self._items))

    def mark(self, h) -> None:
        if h not in self._index:
            self._index[h] = len(self._items)
            self._items.append(h)

    def unmark(self, h) -> None:
        idx = self._index.pop(h, None)
        if idx is None:
            return
        last = self._items.pop()
        if last is not h:
            self._items[idx] = last
            self._index[last] = idx

    def pop(self):
        h = self._items.pop()
        del self._index[h]
        return h


@dataclass
class ValidationReport:
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def fail(self, code: str, message: str) -> None:
        self.problems.append(f"{code}: {message}")

    def codes(self) -> set[str]:
        return {p.split(":", 1)[0] for p in self.problems}

    def __bool__(self) -> bool:
        return self.ok


def _make_store(backend: str, group_size: int):
    if backend == "plain":
        return PlainStore()
    if backend == "grouped":
        return GroupedStore(group_size)
    raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")


class LfIntervalGraph:
    def __init__(self, alpha: int = MIN_ALPHA, backend: str = "plain",
                 group_size: int = DEFAULT_GROUP_SIZE, *, _empty: bool = False) -> None:
        if not isinstance(alpha, int) or alpha < MIN_ALPHA:
            raise InvalidAlpha(f"alpha must be an integer >= {MIN_ALPHA}, got {alpha!r}")
        self.alpha = alpha
        self.backend = backend
        self.store = _make_store(backend, group_size)
        self.U = self.store.U
        self.V = self.store.V
        self.tree = VTree(lambda v: (v.partner.char, v.partner), self.U.before)
        self.heavy_u = HeavyArray()
        self.heavy_v = HeavyArray()
        self.sentinel = None
        self.delta = 0
        if not _empty:
            u = self.U.new(SENTINEL, 1)
            self.U.insert_after(None, u)
            v = self.V.new_partner(u)
            self.V.insert_after(None, v)
            self.U.set_out_edge(u, v, 0)
            self.V.set_out_edge(v, u, 0)
            self.store.settle()
            self.tree.set_min(v)
            self.sentinel = u
            self.delta = 1

    # -- construction from an explicit partition ---------------------------
    @classmethod
    def from_dbwt(cls, pairs: Sequence[tuple[int, int]], alpha: int = MIN_ALPHA,
                  backend: str = "plain", group_size: int = DEFAULT_GROUP_SIZE) -> "LfIntervalGraph":
        """Build the graph of a given divided BWT, e.g. a figure fixture.

        ``pairs`` lists ``(symbol, length)`` pieces whose expansion must be
        a valid BWT. Absolute rows are used during construction only.
        """
        graph = cls(alpha, backend, group_size, _empty=True)
        U, V = graph.U, graph.V
        bwt = [s for s, n in pairs for _ in range(n)]
        lf = lf_naive(bwt)
        starts, row = [], 1
        us = []
        for sym, length in pairs:
            u = U.new(sym, length)
            U.insert_before(None, u)
            us.append(u)
            starts.append(row)
            row += length
        f_start = {id(u): lf[s - 1] for u, s in zip(us, starts)}
        v_order = sorted(us, key=lambda u: f_start[id(u)])
        vs = []
        for u in v_order:
            v = V.new_partner(u)
            V.insert_before(None, v)
            vs.append(v)
        v_starts = [f_start[id(u)] for u in v_order]
        for u, s in zip(us, starts):
            idx = bisect_right(v_starts, s) - 1
            U.set_out_edge(u, vs[idx], s - v_starts[idx])
        for v, s in zip(vs, v_starts):
            idx = bisect_right(starts, s) - 1
            V.set_out_edge(v, us[idx], s - starts[idx])
        graph.store.settle()
        graph.delta = len(bwt)
        for u in us:
            if u.char == SENTINEL:
                graph.sentinel = u
        for v in vs:
            cond = tree_condition(v)
            if cond is TreeCondition.IS_SENTINEL:
                graph.tree.set_min(v)
            elif cond is not TreeCondition.NONE:
                graph.tree.insert(v)
        graph.refresh_heavy(us, vs)
        return graph

    # -- basic queries ---------------------------------------------------
    @property
    def k(self) -> int:
        return self.U.size

    def u_labels(self) -> list[tuple[int, int]]:
        return [(u.char, u.length) for u in self.U]

    def v_labels(self) -> list[tuple[int, int]]:
        return [(v.char, v.length) for v in self.V]

    def bwt(self) -> list[int]:
        return [c for c, n in self.u_labels() for _ in range(n)]

    def order_before(self, a, b) -> bool:
        return self.U.before(a, b)

    def in_degree_u(self, u) -> int:
        return self.U.in_degree(u, self.alpha)

    def in_degree_v(self, v) -> int:
        return self.V.in_degree(v, self.alpha)

    def is_heavy(self, h, side: str) -> bool:
        store_side = self.U if side == "U" else self.V
        return store_side.in_degree(h, self.alpha) >= self.alpha

    def heavy_mark(self, h, side: str) -> None:
        (self.heavy_u if side == "U" else self.heavy_v).mark(h)

    def heavy_unmark(self, h, side: str) -> None:
        (self.heavy_u if side == "U" else self.heavy_v).unmark(h)

    def refresh_heavy(self, u_nodes: Iterable, v_nodes: Iterable) -> None:
        alpha = self.alpha
        U, V = self.U, self.V
        for u in u_nodes:
            if U.in_degree(u, alpha) >= alpha:
                self.heavy_u.mark(u)
            else:
                self.heavy_u.unmark(u)
        for v in v_nodes:
            if V.in_degree(v, alpha) >= alpha:
                self.heavy_v.mark(v)
            else:
                self.heavy_v.unmark(v)

    # -- primitives --------------------------------------------------------
    def split(self, u, ell: int):
        """Split ``u`` and its partner after ``ell`` symbols.

        Returns ``(u1, u2, v1, v2)``. Every edge touching the old pair is
        re-aimed by comparing its offset with ``ell``; the second halves get
        their out-edges by walking ``ell`` further along the opposite list.
        If the old partner was a tree member, the second V half takes its
        slot (its membership condition is identical).
        """
        U, V = self.U, self.V
        v = u.partner
        char, total = u.char, u.length
        if not 0 < ell < total:
            raise CorruptState(f"split offset {ell} outside (0, {total})")
        tu, ou = U.out_edge(u)
        tv, ov = V.out_edge(v)
        into_u = U.in_edges(u)
        into_v = V.in_edges(v)
        tu2, ou2 = locate(tu, ou + ell)
        tv2, ov2 = locate(tv, ov + ell)

        u1, u2 = U.new(char, ell), U.new(char, total - ell)
        U.insert_after(u, u1)
        U.insert_after(u1, u2)
        v1, v2 = V.new_partner(u1), V.new_partner(u2)
        V.insert_after(v, v1)
        V.insert_after(v1, v2)

        def tr_u(node, off):
            if node is u:
                return (u1, off) if off < ell else (u2, off - ell)
            return node, off

        def tr_v(node, off):
            if node is v:
                return (v1, off) if off < ell else (v2, off - ell)
            return node, off

        U.set_out_edge(u1, *tr_v(tu, ou))
        U.set_out_edge(u2, *tr_v(tu2, ou2))
        V.set_out_edge(v1, *tr_u(tv, ov))
        V.set_out_edge(v2, *tr_u(tv2, ov2))
        for src, off in into_u:
            if src is not v:
                V.set_out_edge(src, *tr_u(u, off))
        for src, off in into_v:
            if src is not u:
                U.set_out_edge(src, *tr_v(v, off))
        U.remove(u)
        V.remove(v)
        self.store.settle()

        if v in self.tree:
            self.tree.replace(v, v2)
        self.heavy_u.unmark(u)
        self.heavy_v.unmark(v)
        self.refresh_heavy(
            (u1, u2, V.out_edge(v1)[0], V.out_edge(v2)[0]),
            (v1, v2, U.out_edge(u1)[0], U.out_edge(u2)[0]),
        )
        return u1, u2, v1, v2

    def merge(self, us: Sequence, tree_from=None):
        """Merge consecutive same-character U nodes (and their partners).

        ``tree_from`` names the old V node whose tree slot the merged V node
        inherits; any other merged V member is deleted from the tree.
        Returns ``(uy, vy)``.
        """
        U, V = self.U, self.V
        vs = [u.partner for u in us]
        char = us[0].char
        bases, acc = [], 0
        for u in us:
            if u.char != char:
                raise CorruptState("merge of nodes with different characters")
            bases.append(acc)
            acc += u.length
        u_index = {id(u): i for i, u in enumerate(us)}
        v_index = {id(v): i for i, v in enumerate(vs)}
        tu, ou = U.out_edge(us[0])
        tv, ov = V.out_edge(vs[0])
        into_u = [U.in_edges(u) for u in us]
        into_v = [V.in_edges(v) for v in vs]
        old_v_targets = [U.out_edge(u)[0] for u in us[1:]]
        old_u_targets = [V.out_edge(v)[0] for v in vs[1:]]

        uy = U.new(char, acc)
        U.insert_after(us[-1], uy)
        vy = V.new_partner(uy)
        V.insert_after(vs[-1], vy)

        def tr_u(node, off):
            i = u_index.get(id(node))
            return (node, off) if i is None else (uy, bases[i] + off)

        def tr_v(node, off):
            i = v_index.get(id(node))
            return (node, off) if i is None else (vy, bases[i] + off)

        U.set_out_edge(uy, *tr_v(tu, ou))
        V.set_out_edge(vy, *tr_u(tv, ov))
        for i, edges in enumerate(into_u):
            for src, off in edges:
                if id(src) not in v_index:
                    V.set_out_edge(src, uy, bases[i] + off)
        for i, edges in enumerate(into_v):
            for src, off in edges:
                if id(src) not in u_index:
                    U.set_out_edge(src, vy, bases[i] + off)
        for u in us:
            U.remove(u)
        for v in vs:
            V.remove(v)
        self.store.settle()

        tree = self.tree
        for v in vs:
            if v in tree:
                if v is tree_from:
                    tree.replace(v, vy)
                else:
                    tree.delete(v)
        for u in us:
            self.heavy_u.unmark(u)
        for v in vs:
            self.heavy_v.unmark(v)
        self.refresh_heavy(
            [uy] + [tr_u(t, 0)[0] for t in old_u_targets],
            [vy] + [tr_v(t, 0)[0] for t in old_v_targets],
        )
        return uy, vy

    # -- validation --------------------------------------------------------
    def validate(self, expected_bwt: Optional[Sequence[int]] = None,
                 phase: str = "balanced") -> ValidationReport:
        """Check the structural invariants, reconstructing rows by walking.

        ``phase`` is ``"balanced"`` (after balancing: no heavy node at all,
        heavy arrays empty) or ``"update"`` (right after an update: in-degree
        at most 2*alpha and at most two heavy nodes per side, heavy arrays
        holding exactly the heavy nodes).
        """
        rep = ValidationReport()
        U, V = self.U, self.V
        us, vs = list(U), list(V)
        alpha = self.alpha

        # G1: sizes, partners, labels
        if len(us) != len(vs) or len(us) != U.size or len(vs) != V.size:
            rep.fail("G1", f"list sizes differ: |U|={len(us)} |V|={len(vs)}")
        v_set = {id(v) for v in vs}
        u_set = {id(u) for u in us}
        for u in us:
            v = u.partner
            if v is None or id(v) not in v_set or v.partner is not u:
                rep.fail("G1", f"{u!r} has no mutual live partner")
            elif (v.char, v.length) != (u.char, u.length):
                rep.fail("G1", f"{u!r} and partner {v!r} carry different labels")
            if u.length < 1:
                rep.fail("G1", f"{u!r} has non-positive length")

        # G9: sentinel, total length
        sent_u = [u for u in us if u.char == SENTINEL]
        sent_v = [v for v in vs if v.char == SENTINEL]
        if len(sent_u) != 1 or sent_u[0].length != 1 or sent_u[0] is not self.sentinel:
            rep.fail("G9", "U side must hold exactly the recorded sentinel node of length 1")
        if len(sent_v) != 1 or sent_v[0].length != 1:
            rep.fail("G9", "V side must hold exactly one sentinel node of length 1")
        total_u = sum(u.length for u in us)
        total_v = sum(v.length for v in vs)
        if total_u != self.delta or total_v != self.delta:
            rep.fail("G9", f"length sums {total_u}/{total_v} differ from delta={self.delta}")
        if not rep.ok:
            return rep

        # rows (1-based) reconstructed by list walks
        pu, pv, row = {}, {}, 1
        for u in us:
            pu[id(u)] = row
            row += u.length
        row = 1
        for v in vs:
            pv[id(v)] = row
            row += v.length

        # G2: L and F columns, LF matching
        bwt = self.bwt()
        f_col = [c for v in vs for c in [v.char] * v.length]
        if f_col != sorted(bwt):
            rep.fail("G2", "V labels do not spell the sorted L column")
        if expected_bwt is not None and list(expected_bwt) != bwt:
            rep.fail("G2", "U labels do not spell the expected BWT")
        lf = lf_naive(bwt)
        for u in us:
            if pv[id(u.partner)] != lf[pu[id(u)] - 1]:
                rep.fail("G1", f"{u!r} partner does not start at LF of its first row")

        # G3: covering edges
        for u in us:
            t, off = U.out_edge(u)
            if id(t) not in v_set or not 0 <= off < t.length or pv[id(t)] + off != pu[id(u)]:
                rep.fail("G3", f"bad out-edge on {u!r}: ({t!r}, {off})")
        for v in vs:
            t, off = V.out_edge(v)
            if id(t) not in u_set or not 0 <= off < t.length or pu[id(t)] + off != pv[id(v)]:
                rep.fail("G3", f"bad out-edge on {v!r}: ({t!r}, {off})")

        # G4: reverse edges
        incoming_u: dict[int, set] = {id(u): set() for u in us}
        incoming_v: dict[int, set] = {id(v): set() for v in vs}
        for v in vs:
            t, off = V.out_edge(v)
            incoming_u.setdefault(id(t), set()).add((id(v), off))
        for u in us:
            t, off = U.out_edge(u)
            incoming_v.setdefault(id(t), set()).add((id(u), off))
        for u in us:
            if {(id(s), o) for s, o in U.in_edges(u)} != incoming_u[id(u)]:
                rep.fail("G4", f"in-edge set of {u!r} disagrees with out-edges")
        for v in vs:
            if {(id(s), o) for s, o in V.in_edges(v)} != incoming_v[id(v)]:
                rep.fail("G4", f"in-edge set of {v!r} disagrees with out-edges")

        # in-edge sources must be a consecutive run of the opposite list
        v_index = {id(v): i for i, v in enumerate(vs)}
        u_index = {id(u): i for i, u in enumerate(us)}
        for incoming, index in ((incoming_u, v_index), (incoming_v, u_index)):
            for srcs in incoming.values():
                idx = sorted(index[s] for s, _ in srcs)
                if idx and idx[-1] - idx[0] + 1 != len(idx):
                    rep.fail("G4", "in-edge sources are not consecutive")

        # G5 / G8: degrees and heavy arrays
        deg_u = {id(u): len(incoming_u[id(u)]) for u in us}
        deg_v = {id(v): len(incoming_v[id(v)]) for v in vs}
        heavy_u = [u for u in us if deg_u[id(u)] >= alpha]
        heavy_v = [v for v in vs if deg_v[id(v)] >= alpha]
        if phase == "balanced":
            if heavy_u or heavy_v:
                rep.fail("G5", f"{len(heavy_u)}+{len(heavy_v)} heavy nodes after balancing")
        elif phase == "update":
            worst = max(list(deg_u.values()) + list(deg_v.values()))
            if worst > 2 * alpha:
                rep.fail("G5", f"in-degree {worst} exceeds 2*alpha after update")
            if len(heavy_u) > 2 or len(heavy_v) > 2:
                rep.fail("G5", f"{len(heavy_u)} heavy U and {len(heavy_v)} heavy V nodes after update")
        else:
            raise ValueError(f"unknown phase {phase!r}")
        if {id(h) for h in self.heavy_u} != {id(h) for h in heavy_u}:
            rep.fail("G8", "heavy_U differs from the set of heavy U nodes")
        if {id(h) for h in self.heavy_v} != {id(h) for h in heavy_v}:
            rep.fail("G8", "heavy_V differs from the set of heavy V nodes")

        # G6: tree membership and order
        wanted = [v for v in vs if tree_condition(v) is not TreeCondition.NONE]
        members = list(self.tree)
        if [id(v) for v in members] != [id(v) for v in wanted]:
            missing = [v for v in wanted if v not in self.tree]
            extra = [v for v in members if id(v) not in {id(w) for w in wanted}]
            rep.fail("G6", f"tree membership mismatch: missing={missing} extra={extra}")
        if self.tree.min_slot is None or self.tree.min_slot.partner is not self.sentinel:
            rep.fail("G6", "minimum slot does not hold the sentinel's partner")
        for problem in self.tree.check():
            rep.fail("G6", problem)

        # G7: order maintenance
        for a, b in zip(us, us[1:]):
            if not U.before(a, b) or U.before(b, a):
                rep.fail("G7", f"order disagrees with list between {a!r} and {b!r}")
                break

        if self.backend == "grouped":
            self._validate_groups(rep)
        return rep

    def _validate_groups(self, rep: ValidationReport) -> None:
        for side_name, side in (("U", self.U), ("V", self.V)):
            prev_tag = None
            for group in side.groups():
                if group.dirty:
                    rep.fail("GRP", f"{side_name} group left with an unresolved head edge")
                if not 1 <= len(group.slots) <= side.capacity:
                    rep.fail("GRP", f"{side_name} group occupancy {len(group.slots)}")
                for rec in group.slots:
                    if rec.group is not group or group.lookup[rec.local] is not rec:
                        rep.fail("GRP", f"{side_name} lookup table does not resolve {rec!r}")
                live = sum(1 for x in group.lookup if x is not None)
                if live != len(group.slots):
                    rep.fail("GRP", f"{side_name} lookup table holds stale entries")
                if side_name == "U":
                    if prev_tag is not None and group.tag <= prev_tag:
                        rep.fail("G7", "group tags out of order")
                    prev_tag = group.tag
