import json

import pytest
from hypothesis import given, strategies as st

from indexcoding import (
    Instance,
    Receiver,
    ValidationError,
    dedup,
    parse_instance,
    serialize_instance,
    split_groupcast,
    validate,
)
from indexcoding.generate import random_instance


@st.composite
def instances(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    m = draw(st.integers(min_value=0, max_value=6))
    receivers = []
    for _ in range(m):
        wants = draw(
            st.frozensets(st.integers(1, n), min_size=1, max_size=n)
        )
        rest = sorted(set(range(1, n + 1)) - wants)
        has = draw(st.frozensets(st.sampled_from(rest))) if rest else frozenset()
        receivers.append(Receiver(wants, frozenset(has)))
    return Instance(n, tuple(receivers))


class TestParseValidate:
    def test_parse_worked_example(self):
        text = json.dumps(
            {
                "num_messages": 6,
                "receivers": [
                    {"wants": [1], "has": [2, 3, 4]},
                    {"wants": [2], "has": [5]},
                    {"wants": [3], "has": [1, 4]},
                    {"wants": [4], "has": [1, 3]},
                    {"wants": [5], "has": [2, 6]},
                    {"wants": [6], "has": [4]},
                ],
            }
        )
        inst = parse_instance(text)
        assert inst.num_messages == 6
        assert len(inst.receivers) == 6
        assert inst.receivers[0] == Receiver.of({1}, {2, 3, 4})
        assert validate(inst) == []

    def test_wants_has_overlap_rejected(self):
        text = '{"num_messages": 3, "receivers": [{"wants": [1], "has": [1]}]}'
        with pytest.raises(ValidationError, match="overlap"):
            parse_instance(text)

    def test_empty_receiver_list_is_valid(self):
        inst = parse_instance('{"num_messages": 3, "receivers": []}')
        assert inst.num_messages == 3
        assert inst.receivers == ()

    def test_malformed_json(self):
        with pytest.raises(ValidationError, match="malformed JSON"):
            parse_instance("{nope")

    def test_duplicate_ids_rejected(self):
        text = '{"num_messages": 3, "receivers": [{"wants": [1, 1], "has": []}]}'
        with pytest.raises(ValidationError, match="duplicate"):
            parse_instance(text)

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValidationError, match="unknown"):
            parse_instance('{"num_messages": 2, "receivers": [], "extra": 1}')

    def test_non_integer_id_rejected(self):
        text = '{"num_messages": 3, "receivers": [{"wants": ["a"], "has": []}]}'
        with pytest.raises(ValidationError, match="non-integer"):
            parse_instance(text)

    def test_missing_wants_rejected(self):
        with pytest.raises(ValidationError, match="missing 'wants'"):
            parse_instance('{"num_messages": 2, "receivers": [{"has": [1]}]}')

    def test_validate_reports_every_violation(self):
        inst = Instance.of(6, [(set(), set()), ({7}, {1}), ({2}, {2, 9})])
        messages = validate(inst)
        assert any("receiver 1: empty demand" in v for v in messages)
        assert any("receiver 2" in v and "out of range" in v for v in messages)
        assert any("receiver 3" in v and "overlap" in v for v in messages)
        assert any("receiver 3" in v and "9 out of range" in v for v in messages)

    def test_zero_messages_rejected(self):
        assert validate(Instance(0, ())) == ["num_messages must be a positive integer"]

    @given(instances())
    def test_round_trip(self, inst):
        assert parse_instance(serialize_instance(inst)) == inst

    def test_round_trip_on_seeded_generator(self):
        for seed in range(25):
            inst = random_instance(5, 4, 0.5, (1, 3), seed=seed)
            assert parse_instance(serialize_instance(inst)) == inst

    def test_serialized_arrays_sorted(self):
        inst = Instance.of(4, [({3, 1}, {4, 2})])
        data = json.loads(serialize_instance(inst))
        assert data["receivers"][0]["wants"] == [1, 3]
        assert data["receivers"][0]["has"] == [2, 4]


class TestSplit:
    def test_split_groupcast_pair(self, groupcast3):
        u = split_groupcast(groupcast3)
        got = [(v.want, set(v.has), v.origin) for v in u.virtuals]
        assert got == [
            (1, {2, 3}, (1, 1)),
            (2, {1}, (2, 1)),
            (3, {1}, (2, 2)),
        ]

    def test_split_already_unicast_identity(self, example6):
        u = split_groupcast(example6)
        assert len(u.virtuals) == 6
        for v, r in zip(u.virtuals, example6.receivers):
            assert {v.want} == set(r.wants)
            assert v.has == r.has

    def test_split_duplicate_demands(self):
        inst = Instance.of(3, [({1, 2}, {3}), ({1, 2}, {3})])
        u = split_groupcast(inst)
        keys = [(v.want, v.has) for v in u.virtuals]
        assert len(u.virtuals) == 4
        assert keys[0] == keys[2] and keys[1] == keys[3]

    def test_split_rejects_invalid(self):
        with pytest.raises(ValidationError):
            split_groupcast(Instance.of(2, [({1}, {1})]))

    @given(instances())
    def test_split_count_and_faithfulness(self, inst):
        u = split_groupcast(inst)
        assert len(u.virtuals) == sum(len(r.wants) for r in inst.receivers)
        per_receiver: dict[int, list[int]] = {}
        for v in u.virtuals:
            j, _ = v.origin
            assert v.has == inst.receivers[j - 1].has
            assert v.want in inst.receivers[j - 1].wants
            per_receiver.setdefault(j, []).append(v.want)
        for j, r in enumerate(inst.receivers, start=1):
            assert sorted(per_receiver.get(j, [])) == sorted(r.wants)


class TestDedup:
    def test_dedup_duplicate_pairs(self):
        inst = Instance.of(3, [({1, 2}, {3}), ({1, 2}, {3})])
        u = dedup(split_groupcast(inst))
        assert len(u.virtuals) == 2
        assert u.dedup_map == {2: 0, 3: 1}

    def test_dedup_all_distinct_is_noop(self, example6):
        u = dedup(split_groupcast(example6))
        assert len(u.virtuals) == 6
        assert u.dedup_map == {}

    def test_dedup_three_identical(self):
        inst = Instance.of(2, [({1}, {2})] * 3)
        u = dedup(split_groupcast(inst))
        assert len(u.virtuals) == 1
        assert u.dedup_map == {1: 0, 2: 0}

    @given(instances())
    def test_dedup_keeps_first_occurrences(self, inst):
        pre = split_groupcast(inst)
        post = dedup(pre)
        assert len({(v.want, v.has) for v in post.virtuals}) == len(post.virtuals)
        for removed, rep in post.dedup_map.items():
            assert rep < removed
            assert (pre.virtuals[removed].want, pre.virtuals[removed].has) == (
                pre.virtuals[rep].want,
                pre.virtuals[rep].has,
            )
        assert len(post.virtuals) + len(post.dedup_map) == len(pre.virtuals)
