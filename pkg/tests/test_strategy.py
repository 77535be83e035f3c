import json

import pytest
from hypothesis import given, strategies as st

from crthrottle import families
from crthrottle.game import GameState, Phase
from crthrottle.solvers import capture_time, damage_number
from crthrottle.strategy import (
    PreconditionError,
    SimConfigError,
    attach_path,
    evasion_robber_step,
    guarded_set,
    simulate,
    simulate_many,
)

P = families.petersen()


def test_guarded_set_examples():
    assert len(guarded_set(P, (0,))) == 4
    assert guarded_set(families.empty(3), (0,)) == {0}
    assert guarded_set(families.cycle(5), (0, 2)) == {0, 1, 2, 3, 4}


def test_evasion_needs_girth_five():
    s = GameState(Phase.ROBBER, (0,), 2)
    with pytest.raises(PreconditionError):
        evasion_robber_step(families.cycle(4), s, 1)


def test_odd_round_smallest_id_without_cops():
    s = GameState(Phase.ROBBER, (), 0)
    assert evasion_robber_step(P, s, 1) == 1


def test_odd_round_prefers_fewest_damaged_neighbours():
    # neighbours of 0 are 1, 4, 5; damage around 1
    damaged = 1 << 0 | 1 << 2 | 1 << 6
    s = GameState(Phase.ROBBER, (), 0, damaged)
    assert evasion_robber_step(P, s, 1) == 4


def test_even_round_single_option():
    # cop on 2 guards 1; vertex 4 damaged; only 5 is unguarded and fresh
    s = GameState(Phase.ROBBER, (2,), 0, damaged=1 << 0 | 1 << 4)
    assert evasion_robber_step(P, s, 2) == 5


def test_failure_signal():
    s = GameState(Phase.ROBBER, (2,), 0, damaged=1 << 4 | 1 << 5)
    assert evasion_robber_step(P, s, 2) is None


def test_petersen_stationary_cop():
    trace = simulate(P, "stationary", "evasion", k=1, rounds=20)
    assert not trace.captured and trace.damage >= 5
    assert trace.damage >= damage_number(P, 1)


def test_star_centre_cop():
    for r in range(5):
        trace = simulate(families.star(6), "stationary", "scripted", k=1, rounds=5,
                         cops=(5,), robber=r, robber_script=[r] * 5)
        assert trace.damage == 0 and trace.captured


def test_scripted_capture_on_tree():
    g = families.path(7)
    assert capture_time(g, 1) == 3
    trace = simulate(g, "scripted", "scripted", k=1, rounds=5, cops=(3,), robber=0,
                     cop_script=[(2,), (1,), (0,), (0,), (0,)], robber_script=[0] * 5)
    assert trace.capture_round == capture_time(g, 1)


def test_short_script_is_an_error():
    with pytest.raises(SimConfigError):
        simulate(P, "scripted", "evasion", k=1, rounds=3, cop_script=[(0,)])
    with pytest.raises(SimConfigError):
        simulate(P, "stationary", "scripted", k=1, rounds=3, robber_script=[1, 1])


def test_unknown_strategy():
    with pytest.raises(SimConfigError):
        simulate(P, "teleport", "evasion")


def test_shadow_captures_on_tree():
    trace = simulate(families.path(6), "shadow", "scripted", k=1, rounds=10, cops=(0,),
                     robber=5, robber_script=[5] * 10)
    assert trace.captured and trace.capture_round == 5


def test_trace_json():
    trace = simulate(P, "stationary", "evasion", rounds=4)
    data = json.loads(trace.to_json())
    assert [r["round"] for r in data["rounds"]] == [0, 1, 2, 3, 4]
    assert data["damage"] == len({r["damaged"] for r in data["rounds"] if r["damaged"] is not None})


def test_path_view_keeps_robber_in_girth5_part():
    g, view = attach_path(P, 0, 5)
    for cop in (14, 12, 10):
        trace = simulate(g, "stationary", "evasion", k=1, rounds=30, cops=(cop,), view=view)
        assert not trace.captured
        assert all(r.robber < 10 for r in trace.records)


def test_simulate_many_matches_sequential():
    jobs = [dict(cop_strategy="stationary", k=1, rounds=10, cops=(v,)) for v in range(4)]
    assert [t.to_json() for t in simulate_many(P, jobs, workers=2)] == \
        [t.to_json() for t in simulate_many(P, jobs)]


@given(st.lists(st.integers(0, 9), min_size=1, max_size=2), st.integers(1, 40))
def test_evasion_safe_while_steps_succeed(cops, rounds):
    cops = tuple(sorted(cops))
    trace = simulate(P, "stationary", "evasion", k=len(cops), rounds=rounds, cops=cops)
    guard = guarded_set(P, cops)
    for rec in trace.records:
        if rec.step_failed:
            break
        assert not rec.captured
        assert rec.robber not in guard
    assert not set(trace.damaged_vertices()) & (guard - set(cops))
    assert trace.damage == len(set(trace.damaged_vertices()))


@given(st.lists(st.integers(0, 9), min_size=1, max_size=3), st.integers(1, 30))
def test_shadow_cops_guard_one_neighbour_each(cops, rounds):
    # the step asserts the girth-5 guarding property on every state it sees
    simulate(P, "shadow", "evasion", k=len(cops), rounds=rounds, cops=tuple(sorted(cops)))
