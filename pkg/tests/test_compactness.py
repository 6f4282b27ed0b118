import random

import pytest
from hypothesis import given

from conftest import SMALL_SPACES, chi, space_and_set
from fuzzytop.compactness import (CoverReport, SetFamily, filterbases, has_fip,
                                  is_filterbase, is_quasi_compact, is_quasi_compact_set,
                                  is_weakly_closed_relative, is_weakly_closed_space,
                                  is_weakly_compact, is_weakly_compact_relative, meets_all_q,
                                  some_meet_q)
from fuzzytop.lab.corpus import corpus
from fuzzytop.lab.enumeration import enumerate_topologies, small_carrier
from fuzzytop.lattice import (CapExceeded, Carrier, FuzzySet, Grid, complement,
                              enumerate_grid_sets)
from fuzzytop.topology import crisp_topology


@pytest.mark.parametrize("check", [has_fip, is_filterbase])
def test_fip_examples(check, ex2_5):
    assert check([chi(ex2_5, "ac"), chi(ex2_5, "ab")])
    a = chi(ex2_5, "bd")
    assert not check([a, complement(a)])
    assert check([FuzzySet.one(ex2_5.carrier)])
    assert check([])


def test_fip_shortcut_matches_definition_on_sampled_families():
    rng = random.Random(20240611)
    carrier = Carrier(("a", "b", "c"))
    pool = list(enumerate_grid_sets(carrier, Grid.uniform(2)))
    for _ in range(1000):
        fam = SetFamily(tuple(rng.sample(pool, rng.randint(0, 6))))
        assert has_fip(fam) == has_fip(fam, exhaustive=True)


def test_set_family_validation():
    with pytest.raises(ValueError):
        SetFamily((), role="cover")
    with pytest.raises(ValueError):
        SetFamily((FuzzySet.one(Carrier(("a",))), FuzzySet.one(Carrier(("b",)))))


def test_quasi_compact_report(ex2_5):
    rep = is_quasi_compact(ex2_5.topology)
    assert isinstance(rep, CoverReport) and rep.holds
    assert [s.label() for s in rep.smallest_cover] == ["{a,b,c,d}"]
    assert rep.worst_minimal == 1
    assert rep.to_json()["smallest_cover"] == ["{a,b,c,d}"]


def test_indiscrete_and_ex2_2_are_compact(ex2_2):
    indiscrete = crisp_topology("abc", [])
    rep = is_quasi_compact(indiscrete)
    assert rep.holds and rep.smallest_cover == (indiscrete.one,)
    assert is_quasi_compact(ex2_2.topology)
    for tau in (indiscrete, ex2_2.topology):
        assert is_weakly_compact(tau) and is_weakly_closed_space(tau)


def test_relative_examples(ex2_5, ex2_2):
    t5, t2 = ex2_5.topology, ex2_2.topology
    assert is_weakly_compact_relative(t5, t5.zero)
    assert is_weakly_compact_relative(t5, chi(ex2_5, "a"))
    assert is_weakly_closed_relative(t5, t5.zero)
    assert is_weakly_closed_relative(t2, chi(ex2_2, "ac"))
    assert is_weakly_compact(t5) and is_weakly_closed_space(t5)


@pytest.mark.parametrize("tau", SMALL_SPACES + [d.topology for d in corpus()],
                         ids=lambda t: t.describe())
def test_relative_forms_reduce_to_global_at_one(tau):
    one = tau.one
    assert is_weakly_compact_relative(tau, one).holds == is_weakly_compact(tau).holds
    assert is_weakly_closed_relative(tau, one).holds == is_weakly_closed_space(tau).holds
    # weakly-compact spaces are weakly-closed spaces
    if is_weakly_compact(tau):
        assert is_weakly_closed_space(tau)


def test_finite_grids_make_every_cover_notion_hold():
    for tau in enumerate_topologies(small_carrier(2), Grid.uniform(2)):
        assert is_quasi_compact(tau) and is_weakly_compact(tau) and is_weakly_closed_space(tau)
        rep = is_weakly_compact(tau)
        assert rep.worst_minimal is not None and rep.worst_minimal <= rep.candidates


@given(space_and_set())
def test_set_compactness_always_holds_on_finite_families(case):
    tau, a = case
    rep = is_quasi_compact_set(tau, a)
    assert rep.holds and rep.covers >= 1


def test_cover_cap(ex2_5):
    with pytest.raises(CapExceeded):
        is_weakly_compact(ex2_5.topology, cap=8)


def test_quasi_coincidence_over_subfamilies(ex2_5):
    u = chi(ex2_5, "a")
    fam = [chi(ex2_5, "ab"), chi(ex2_5, "ac")]
    assert meets_all_q(fam, u) and some_meet_q(fam, u)
    assert not some_meet_q([chi(ex2_5, "b")], u)
    assert meets_all_q([], u) and not some_meet_q([], u)


def test_filterbases_are_fip_families(ex2_2):
    pool = list(enumerate_grid_sets(ex2_2.carrier, Grid.crisp()))
    fbs = list(filterbases(pool, 2))
    assert all(has_fip(f) for f in fbs)
    assert (chi(ex2_2, "a"), chi(ex2_2, "b")) not in fbs
    assert (chi(ex2_2, "bc"), chi(ex2_2, "ab")) in fbs
