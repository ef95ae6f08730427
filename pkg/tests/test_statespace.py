import itertools
import json
import math

import numpy as np
import pytest

from liarsim import (
    OutOfRange,
    SparseState,
    build_initial_state,
    canonical_entry_cycle,
    cycle_states,
    eight_liar,
    interpret_entry,
    kappa,
    kappa_inverse,
    one_liar,
    simple_liar,
    state_from_json,
    state_to_json,
)

from golden import EIGHT_EMBEDDED, EIGHT_TUPLES


def test_kappa_smallest_cases():
    assert kappa((1,), 2) == 1
    assert kappa((2,), 2) == 2
    assert kappa((1, 1), 4) == 1
    assert kappa((1, 2), 4) == 2
    assert kappa((2, 1), 4) == 5
    assert kappa((4, 4), 4) == 16


def test_kappa_is_lexicographic_rank():
    # exhaustive oracle for m = 2 and m = 3
    for m in (2, 3):
        n = 2 * m
        ranked = list(itertools.product(range(1, n + 1), repeat=m))
        for rank, idx in enumerate(ranked, start=1):
            assert kappa(idx, n) == rank
            assert kappa_inverse(rank, m, n) == idx


def test_kappa_reference_pairs():
    for idx, embedded in zip(EIGHT_TUPLES, EIGHT_EMBEDDED):
        assert kappa(idx, 16) == embedded
        assert kappa_inverse(embedded, 8, 16) == idx


def test_kappa_round_trip_random():
    rng = np.random.default_rng(42)
    for m in range(1, 9):
        n = 2 * m
        for _ in range(300):
            idx = tuple(int(x) for x in rng.integers(1, n + 1, size=m))
            assert kappa_inverse(kappa(idx, n), m, n) == idx


def test_kappa_exact_beyond_double_precision():
    # m = 12 gives 24^12 ~ 4.3e16 states, past float53 integer exactness
    idx = tuple(range(13, 25))
    n = 24
    e = kappa(idx, n)
    assert kappa_inverse(e, 12, n) == idx
    assert kappa((24,) * 12, n) == n**12


def test_kappa_rejects_bad_entries():
    with pytest.raises(OutOfRange):
        kappa((0, 1), 4)
    with pytest.raises(OutOfRange):
        kappa((1, 5), 4)
    with pytest.raises(OutOfRange):
        kappa_inverse(0, 2, 4)
    with pytest.raises(OutOfRange):
        kappa_inverse(17, 2, 4)


def test_canonical_entry_cycle_layout():
    assert canonical_entry_cycle(1) == (1, 2)
    assert canonical_entry_cycle(2) == (3, 2, 4, 1)
    assert canonical_entry_cycle(4) == (7, 6, 5, 4, 8, 3, 2, 1)
    c = canonical_entry_cycle(8)
    assert len(c) == 16
    assert sorted(c) == list(range(1, 17))
    assert c[0] == 15 and c[8] == 16


def test_cycle_states_one_liar():
    assert cycle_states(one_liar()) == ((1,), (2,))


def test_cycle_states_match_reference():
    assert cycle_states(eight_liar()) == EIGHT_TUPLES


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_cycle_states_have_no_degenerate_entries(m):
    states = cycle_states(simple_liar(m))
    assert len(states) == 2 * m
    assert len(set(states)) == 2 * m
    for i in range(m):
        column = sorted(s[i] for s in states)
        assert column == list(range(1, 2 * m + 1))


def test_interpret_entry_meanings():
    m = 4
    top = interpret_entry(7, m)
    assert (top.kind, top.value, top.steps_until_hypothesis) == (
        "true_by_hypothesis",
        True,
        0,
    )
    bottom = interpret_entry(8, m)
    assert (bottom.kind, bottom.value) == ("false_by_hypothesis", False)
    for j in range(1, m):
        meaning = interpret_entry(j, m)
        assert (meaning.kind, meaning.value) == ("true_by_inference", True)
        assert meaning.steps_until_hypothesis == j
    for j in range(m, 2 * m - 1):
        meaning = interpret_entry(j, m)
        assert (meaning.kind, meaning.value) == ("false_by_inference", False)
        assert meaning.steps_until_hypothesis == j + 1 - m
    with pytest.raises(OutOfRange):
        interpret_entry(0, m)
    with pytest.raises(OutOfRange):
        interpret_entry(9, m)


def test_interpret_entry_one_sentence_has_only_hypotheses():
    assert interpret_entry(1, 1).kind == "true_by_hypothesis"
    assert interpret_entry(2, 1).kind == "false_by_hypothesis"


def test_cycle_state_entries_decode_consistently():
    # at every step the hypothesized sentence carries a hypothesis entry
    # matching the walk's value, every other sentence an inference entry
    from liarsim import reasoning_cycle

    config = eight_liar()
    cycle = reasoning_cycle(config)
    states = cycle_states(config)
    for t, state in enumerate(states, start=1):
        sentence, value = cycle.hypothesis_at(t)
        for i in range(1, config.m + 1):
            meaning = interpret_entry(state[i - 1], config.m)
            if i == sentence:
                assert meaning.steps_until_hypothesis == 0
                assert meaning.value is value
            else:
                assert meaning.steps_until_hypothesis > 0


def test_sparse_state_basics():
    state = SparseState(2, 4, {(1, 2): 0.6, (3, 4): 0.8j})
    assert state.norm() == pytest.approx(1.0)
    assert not state.is_null
    assert state.amplitude((1, 2)) == 0.6
    assert state.amplitude((2, 2)) == 0
    unit = state.normalized()
    assert unit.norm() == pytest.approx(1.0)


def test_sparse_state_defensive_copy():
    amps = {(1,): 1.0}
    state = SparseState(1, 2, amps)
    amps[(2,)] = 5.0
    assert state.amplitude((2,)) == 0


def test_sparse_state_validation():
    with pytest.raises(OutOfRange):
        SparseState(2, 4, {(1,): 1.0})
    with pytest.raises(OutOfRange):
        SparseState(2, 4, {(1, 5): 1.0})
    null = SparseState(2, 4, {})
    assert null.is_null
    assert null.norm() == 0.0
    assert null.normalized() is null


def test_initial_state_uniform_in_cycle_order():
    config = eight_liar()
    state = build_initial_state(config)
    assert state.norm() == pytest.approx(1.0, abs=1e-14)
    assert tuple(state.amplitudes) == cycle_states(config)
    for a in state.amplitudes.values():
        assert a == pytest.approx(1 / math.sqrt(16), abs=1e-15)


def test_state_json_round_trip():
    state = build_initial_state(eight_liar())
    doc = json.loads(state_to_json(state))
    assert doc["m"] == 8 and doc["n"] == 16
    assert [tuple(t["tuple"]) for t in doc["terms"]] == list(EIGHT_TUPLES)
    assert [int(t["embedded"]) for t in doc["terms"]] == list(EIGHT_EMBEDDED)
    again = state_from_json(state_to_json(state))
    assert again == state


def test_state_json_extra_keys_and_validation():
    state = build_initial_state(one_liar())
    text = state_to_json(state, extra={"manifest": {"command": "state"}})
    doc = json.loads(text)
    assert doc["manifest"] == {"command": "state"}
    assert state_from_json(text) == state

    tampered = json.loads(state_to_json(state))
    tampered["terms"][0]["embedded"] = "2"
    with pytest.raises(OutOfRange):
        state_from_json(json.dumps(tampered))
