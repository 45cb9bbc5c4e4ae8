"""Shared level systems for the test suite.

Vertex-transitive actions are classified with repetitivity bound 0: every
ball type is already realized at the base, so levels are saturated as soon
as the explore radius reaches n.

The Grigorchuk orbit of 1^inf is a ray. Level-4 balls see at most five
consecutive loop labels along it, and every such pattern shows up within 80
steps of the base, so radius 96 saturates E_0..E_4 (doubling confirms it).
Radius 12 misses the first vertex with d-loops on both sides (14 steps out)
and leaves level 1 unsaturated.
"""

import pytest

from urskit.actions import load_action
from urskit.balls import classify


@pytest.fixture(scope="session")
def integers():
    return load_action("integers")


@pytest.fixture(scope="session")
def two_cycle():
    return load_action("two_cycle")


@pytest.fixture(scope="session")
def free2():
    return load_action("free2")


@pytest.fixture(scope="session")
def grigorchuk():
    return load_action("grigorchuk")


@pytest.fixture(scope="session")
def ls_int(integers):
    return classify(integers, 12, 12, repetitivity_bound=0)


@pytest.fixture(scope="session")
def ls_int_long(integers):
    # ball indicators with k = n^3 up to n = 6 are checked on level k + n = 222
    return classify(integers, 222, 222, repetitivity_bound=0)


@pytest.fixture(scope="session")
def ls_cycle(two_cycle):
    return classify(two_cycle, 6, 6, repetitivity_bound=0)


@pytest.fixture(scope="session")
def ls_free(free2):
    return classify(free2, 4, 4, repetitivity_bound=0)


@pytest.fixture(scope="session")
def ls_grig(grigorchuk):
    return classify(grigorchuk, 4, 96)


@pytest.fixture(scope="session")
def ls_grig_small(grigorchuk):
    return classify(grigorchuk, 3, 12)
