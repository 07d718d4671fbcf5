import pytest

from posetblock import Alphabet, Poset, lee_weight, space_context


@pytest.fixture
def chain2_m2():
    """Chain 1 < 2, one coordinate per block, binary Hamming."""
    return space_context(Poset.chain(2), (1, 1), 2)


@pytest.fixture
def antichain2_m3():
    return space_context(Poset.antichain(2), (1, 1), 3)


@pytest.fixture
def vee_m2():
    """Covers (1,3), (2,3): two minimal elements under a common top."""
    return space_context(Poset.from_covers(3, [(1, 3), (2, 3)]), (1, 1, 1), 2)


@pytest.fixture
def lee5_single():
    return space_context(Poset.chain(1), (1,), 5, lee_weight(Alphabet(5)))
