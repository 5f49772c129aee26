"""One prepend step on the LF-interval graph.

A step turns the graph for ``T`` into the graph for ``cT``. The sentinel
row of the BWT receives ``c`` and a fresh sentinel appears at the insertion
row. Both paths run the same three phases:

1. find ``vgnext``, the V node that will follow the new ``(c, 1)`` node;
2. if the insertion row falls strictly inside a U node, split that node so
   the row becomes a node boundary (this is the ``did_split`` flag);
3. the core insert: swap the sentinel node for ``(c, 1)``, place the new
   sentinel, and rewire the handful of edges that touch them.

The slow path finds ``vgnext`` through the search tree over V. The fast
path applies when a neighbour of the sentinel already carries ``c``: the
position comes straight from that neighbour's partner, and afterwards the
``(c, 1)`` node is merged into its equal-character neighbour(s).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import CorruptState, SentinelInput
from .graph import LfIntervalGraph, TreeCondition, tree_condition
from .text import MAX_SYMBOL, SENTINEL

__all__ = [
    "UpdateOutcome",
    "TreeCondition",
    "satisfies_tree_condition",
    "dispatch",
    "slow_update",
    "fast_update",
]


@dataclass
class UpdateOutcome:
    used_fast: bool = False
    did_split: bool = False
    case: str = ""
    new_handles: tuple = field(default=(), repr=False)


INITIAL_OUTCOME = UpdateOutcome()


def satisfies_tree_condition(graph: LfIntervalGraph, v) -> TreeCondition:
    return tree_condition(v)


def _check_symbol(c: int) -> None:
    if c == SENTINEL:
        raise SentinelInput("the sentinel cannot be prepended")
    if not 0 < c <= MAX_SYMBOL:
        raise ValueError(f"symbol {c} outside 1..{MAX_SYMBOL}")


def _make_boundary(graph: LfIntervalGraph, vgnext):
    """Ensure the insertion row starts a U node.

    ``vgnext`` starts at the insertion row in F order; its out-edge offset
    is the distance from the start of the U node containing that row.
    Returns ``(vgnext, ux, split_nodes)`` where ``ux`` is the U node the new
    sentinel must precede (``None`` = append at the end).
    """
    if vgnext is None:
        return None, None, ()
    uj, offset = graph.V.out_edge(vgnext)
    if offset == 0:
        return vgnext, uj, ()
    vj = uj.partner
    nodes = graph.split(uj, offset)
    if vgnext is vj:
        vgnext = nodes[2]
    return vgnext, nodes[1], nodes


def _core_insert(graph: LfIntervalGraph, c: int, vgnext, ux):
    U, V = graph.U, graph.V
    s = graph.sentinel
    sv = s.partner
    ts, os_ = U.out_edge(s)
    into_s = U.in_edges(s)
    into_sv = V.in_edges(sv)
    first_u = U.first()

    ui = U.new(c, 1)
    U.insert_after(s, ui)
    vi = V.new_partner(ui)
    V.insert_before(vgnext, vi)
    new_s = U.new(SENTINEL, 1)
    U.insert_before(ui if ux is s else ux, new_s)
    new_sv = V.new_partner(new_s)
    V.insert_after(None, new_sv)

    U.set_out_edge(ui, new_sv if ts is sv else ts, os_)
    V.set_out_edge(vi, new_s, 0)
    U.set_out_edge(new_s, vi, 0)
    V.set_out_edge(new_sv, ui if first_u is s else first_u, 0)
    for src, off in into_s:
        if src is not sv:
            V.set_out_edge(src, ui, off)
    for src, off in into_sv:
        if src is not s:
            U.set_out_edge(src, new_sv, off)
    U.remove(s)
    V.remove(sv)
    graph.store.settle()

    graph.sentinel = new_s
    graph.delta += 1
    graph.tree.replace(sv, new_sv)
    graph.heavy_u.unmark(s)
    graph.heavy_v.unmark(sv)
    graph.refresh_heavy((ui, new_s), (vi, new_sv))
    return ui, vi, new_s, new_sv


def _sync_membership(graph: LfIntervalGraph, v) -> None:
    tree = graph.tree
    wanted = tree_condition(v) is not TreeCondition.NONE
    if wanted and v not in tree:
        tree.insert(v)
    elif not wanted and v in tree:
        tree.delete(v)


def slow_update(graph: LfIntervalGraph, c: int) -> UpdateOutcome:
    _check_symbol(c)
    s = graph.sentinel
    vg = graph.tree.pred((c, s))
    if vg is None:
        raise CorruptState("search tree has no member below the new key")
    vgnext, ux, split_nodes = _make_boundary(graph, vg.next)
    left = s.prev
    ui, vi, new_s, new_sv = _core_insert(graph, c, vgnext, ux)
    if left is not None:
        _sync_membership(graph, left.partner)
    _sync_membership(graph, vi)
    return UpdateOutcome(
        used_fast=False,
        did_split=bool(split_nodes),
        case="slow",
        new_handles=(ui, vi, new_s, new_sv) + tuple(split_nodes),
    )


def fast_update(graph: LfIntervalGraph, c: int, prev_outcome: UpdateOutcome = INITIAL_OUTCOME) -> UpdateOutcome:
    _check_symbol(c)
    s = graph.sentinel
    left, right = s.prev, s.next
    if left is not None and left.char == c:
        vgnext = left.partner.next
    elif right is not None and right.char == c:
        vgnext = right.partner
    else:
        raise CorruptState("fast update requested but no neighbour carries the symbol")
    vgnext, ux, split_nodes = _make_boundary(graph, vgnext)
    ui, vi, new_s, new_sv = _core_insert(graph, c, vgnext, ux)

    left, right = ui.prev, ui.next
    joins_left = left is not None and left.char == c
    joins_right = right is not None and right.char == c
    if joins_left and joins_right:
        case = "C'" if prev_outcome.did_split else "A'"
    elif joins_left:
        case = "A'"
    elif joins_right:
        case = "B"
    else:
        raise CorruptState("no neighbour of the new node carries its symbol")
    if case == "A'":
        uy, vy = graph.merge((left, ui), tree_from=left.partner)
    elif case == "B":
        uy, vy = graph.merge((ui, right), tree_from=right.partner)
    else:
        uy, vy = graph.merge((left, ui, right), tree_from=right.partner)
    return UpdateOutcome(
        used_fast=True,
        did_split=bool(split_nodes),
        case=case,
        new_handles=(uy, vy, new_s, new_sv) + tuple(split_nodes),
    )


def uses_fast_path(graph: LfIntervalGraph, c: int) -> bool:
    s = graph.sentinel
    left, right = s.prev, s.next
    return (left is not None and left.char == c) or (right is not None and right.char == c)


def dispatch(graph: LfIntervalGraph, c: int, prev_outcome: Optional[UpdateOutcome] = None) -> UpdateOutcome:
    _check_symbol(c)
    if uses_fast_path(graph, c):
        return fast_update(graph, c, prev_outcome or INITIAL_OUTCOME)
    return slow_update(graph, c)
