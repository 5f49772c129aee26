"""Splitting heavy nodes until no node has ``alpha`` or more in-edges."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CorruptState, NotHeavy
from .graph import LfIntervalGraph


@dataclass(frozen=True)
class SplitPlan:
    target_u: object
    target_v: object
    split_len: int
    case: int


def select_split_offset(graph: LfIntervalGraph, u, v=None) -> SplitPlan:
    """Choose where to cut a heavy pair.

    Case 1 (``u`` heavy) uses the offsets of the V nodes starting inside
    ``u``; case 2 (only ``v`` heavy) uses the offsets of the U nodes
    starting inside ``v``. In both cases the cut sits at the
    ``ceil(t/2) + 1``-th smallest of the ``t`` offsets, so each half keeps
    roughly half of the in-edges.
    """
    v = u.partner if v is None else v
    if graph.is_heavy(u, "U"):
        case, edges = 1, graph.U.in_edges(u)
    elif graph.is_heavy(v, "V"):
        case, edges = 2, graph.V.in_edges(v)
    else:
        raise NotHeavy("neither node of the pair is heavy")
    offsets = sorted(off for _, off in edges)
    ell = offsets[-(-len(offsets) // 2)]
    return SplitPlan(u, v, ell, case)


def split_heavy(graph: LfIntervalGraph, plan: SplitPlan):
    return graph.split(plan.target_u, plan.split_len)


def balance(graph: LfIntervalGraph) -> int:
    """Run the balancing loop; returns the number of splits performed."""
    limit = 4 * graph.k + 8
    splits = 0
    heavy_u, heavy_v = graph.heavy_u, graph.heavy_v
    while heavy_u or heavy_v:
        if heavy_u:
            u = heavy_u.pop()
            if not graph.is_heavy(u, "U"):
                continue
        else:
            v = heavy_v.pop()
            if not graph.is_heavy(v, "V"):
                continue
            u = v.partner
        split_heavy(graph, select_split_offset(graph, u))
        splits += 1
        if splits > limit:
            raise CorruptState("balancing did not terminate")
    return splits
