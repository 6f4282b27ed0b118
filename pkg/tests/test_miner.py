import json

import pytest

from fuzzytop.classifier import is_weakly_closed, is_weakly_open
from fuzzytop.lab.miner import MinerConfig, REMARKS, claim_ids, mine, search_spaces
from fuzzytop.lattice import join, meet
from fuzzytop.topology import crisp_topology


def test_claim_ids_start_with_the_remarks():
    ids = claim_ids()
    assert ids[:4] == list(REMARKS)
    assert all(i.startswith("nonimpl:") for i in ids[4:])
    assert len(ids) == len(set(ids))


def test_meet_of_weakly_closed_sets_witness_is_genuine():
    res = mine("Rem2.4", budget=200)
    assert res.found
    a, b = res.witness["A"], res.witness["B"]
    assert is_weakly_closed(res.tau, a) and is_weakly_closed(res.tau, b)
    assert not is_weakly_closed(res.tau, meet(a, b))
    data = res.to_json()
    assert data["status"] == "found" and data["space"]["name"] == res.space
    json.dumps(data)


def test_join_of_weakly_open_sets_witness_is_genuine():
    res = mine("Rem2.8", budget=200)
    assert res.found
    a, b = res.witness["A"], res.witness["B"]
    assert is_weakly_open(res.tau, a) and is_weakly_open(res.tau, b)
    assert not is_weakly_open(res.tau, join(a, b))


def test_no_witness_on_the_one_point_space():
    tau = crisp_topology("a", [])
    res = mine("nonimpl:weakly_closed:closed", spaces=[("point", tau)])
    assert not res.found and res.spaces_searched == 1
    assert res.to_json()["status"] == "not-found"


def test_finite_joins_stay_weakly_closed_within_budget():
    res = mine("Rem2.6", budget=40)
    assert not res.found and res.spaces_searched == 40


def test_search_order():
    cfg = MinerConfig(fine_grids=((2, (1, 2)),))
    labels = [label for label, _ in search_spaces(cfg)]
    assert labels[:4] == ["ex2_2", "ex2_5", "ex3_6", "crisp1#0"]
    assert labels[-1].startswith("grid1/2-2#")
    # corpus + isomorphism classes on 1..4 points + half-grid classes on 1..2 points
    assert len(labels) == len(set(labels)) == 3 + (1 + 3 + 9 + 33) + (2 + 28)


def test_unknown_claim():
    with pytest.raises(KeyError):
        mine("Rem9.9")
    with pytest.raises(KeyError):
        mine("nonimpl:closed:purple_closed")


@pytest.mark.parametrize("claim", ["Rem2.4", "nonimpl:pg_closed:p_closed", "nonimpl:s_closed:closed"])
def test_worker_count_does_not_change_the_answer(claim):
    one = mine(claim, budget=120, workers=1)
    two = mine(claim, budget=120, workers=2)
    again = mine(claim, budget=120, workers=1)
    assert one.to_json() == two.to_json() == again.to_json()
