import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fuzzytop.lab.corpus import corpus_space
from fuzzytop.lab.enumeration import enumerate_topologies, small_carrier
from fuzzytop.lattice import Carrier, FuzzySet, Grid

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

HALF = Fraction(1, 2)


@pytest.fixture(scope="session")
def ex2_2():
    return corpus_space("ex2_2")


@pytest.fixture(scope="session")
def ex2_5():
    return corpus_space("ex2_5")


@pytest.fixture(scope="session")
def ex3_6():
    return corpus_space("ex3_6")


def chi(doc_or_carrier, points):
    carrier = getattr(doc_or_carrier, "carrier", doc_or_carrier)
    return FuzzySet.crisp(carrier, points)


def grid_sets(carrier: Carrier, grid: Grid):
    return st.tuples(*[st.sampled_from(grid.values)] * len(carrier)).map(
        lambda v: FuzzySet(carrier, v))


# a shared pool of small spaces for property tests: crisp 3-point and 1/2-grid 2-point
SMALL_SPACES = (list(enumerate_topologies(small_carrier(3), Grid.crisp()))
                + list(enumerate_topologies(small_carrier(2), Grid.uniform(2))))


@st.composite
def space_and_set(draw, n_sets=1):
    tau = draw(st.sampled_from(SMALL_SPACES))
    sets = [draw(grid_sets(tau.carrier, tau.grid)) for _ in range(n_sets)]
    return (tau, *sets)
