import random

import pytest

from rcomp import LfIntervalGraph, rcomp_build
from rcomp.grouped import GroupedStore, URecord, VRecord
from rcomp.update import INITIAL_OUTCOME, dispatch

from conftest import SAMPLE_DBWT, random_corpus


def test_records_carry_no_links_or_edges():
    for rec_type in (URecord, VRecord):
        slots = set(rec_type.__slots__)
        assert not slots & {"prev", "next", "target", "offset", "sources"}
    store = GroupedStore()
    assert store.U.audit_record(URecord(1, 1)) == ("char", "length", "partner", "group", "local")
    assert store.V.audit_record(VRecord(URecord(1, 1))) == ("partner", "group", "local")


def test_sample_packs_into_groups_of_three():
    g = LfIntervalGraph.from_dbwt(SAMPLE_DBWT, backend="grouped", group_size=3)
    assert g.U.group_count == 3 and g.V.group_count == 3
    assert [len(grp.slots) for grp in g.U.groups()] == [3, 3, 1]
    assert g.validate().ok


def test_group_split_keeps_ids_resolvable():
    g = LfIntervalGraph.from_dbwt(SAMPLE_DBWT, backend="grouped", group_size=3)
    g.split(list(g.U)[1], 1)
    g.store.settle()
    assert g.validate().ok
    for side in (g.U, g.V):
        for grp in side.groups():
            assert 1 <= len(grp.slots) <= 3
            for rec in grp.slots:
                assert grp.resolve(rec.local) is rec


@pytest.mark.parametrize("group_size", [2, 3, 5, 16])
def test_grouped_shadows_plain_step_by_step(group_size):
    rng = random.Random(group_size)
    for _ in range(15):
        plain = LfIntervalGraph(16)
        grouped = LfIntervalGraph(16, "grouped", group_size)
        p_prev = g_prev = INITIAL_OUTCOME
        for _ in range(rng.randrange(1, 80)):
            c = rng.randrange(1, 4)
            p_prev = dispatch(plain, c, p_prev)
            g_prev = dispatch(grouped, c, g_prev)
            assert (p_prev.used_fast, p_prev.did_split, p_prev.case) == \
                   (g_prev.used_fast, g_prev.did_split, g_prev.case)
            assert plain.u_labels() == grouped.u_labels()
            assert plain.v_labels() == grouped.v_labels()


def test_grouped_build_matches_plain():
    for text in random_corpus(count=60, max_len=300, seed=7):
        assert rcomp_build(text) == rcomp_build(text, backend="grouped")


def test_grouped_validated_build():
    for text in random_corpus(count=25, max_len=120, seed=9):
        rcomp_build(text, backend="grouped", group_size=4, validate_steps=True)


def test_random_inserts_keep_plain_order():
    rng = random.Random(17)
    side = GroupedStore(group_size=4).U
    reference = []
    for _ in range(10_000):
        rec = side.new(1, 1)
        if reference and rng.random() < 0.7:
            anchor = rng.choice(reference)
            idx = reference.index(anchor)
            if rng.random() < 0.5:
                side.insert_after(anchor, rec)
                reference.insert(idx + 1, rec)
            else:
                side.insert_before(anchor, rec)
                reference.insert(idx, rec)
        else:
            side.insert_before(None, rec)
            reference.append(rec)
    assert list(side) == reference
    assert all(a.next is b and b.prev is a for a, b in zip(reference, reference[1:]))
    for grp in side.groups():
        assert 1 <= len(grp.slots) <= 4


def test_deleting_head_slot_rederives_edge():
    g = LfIntervalGraph.from_dbwt(SAMPLE_DBWT, backend="grouped", group_size=3)
    second_group = list(g.V.groups())[1]
    head, follower = second_group.slots[0], second_group.slots[1]
    g.V.remove(head)
    assert second_group.dirty
    g.V.settle()
    tail = second_group.prev.slots[-1]
    target, off = g.V.out_edge(tail)
    off += tail.length
    while off >= target.length:
        off -= target.length
        target = target.next
    assert g.V.out_edge(follower) == (target, off)
