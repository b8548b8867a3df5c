import itertools

import pytest

from matroid_toric.catalog import (
    BadParams,
    complete_graph,
    cycle_graph,
    excluded_minor_free,
    graphic,
    named,
    uniform,
)
from matroid_toric.lifts import two_sum
from matroid_toric.matroid import Matroid, anchor, direct_sum, is_isomorphic, is_valid

NAMED = {"MK4": 16, "W3": 17, "P6": 19, "Q6": 18}


def test_uniform_examples():
    assert uniform(1, 2).n_bases == 2
    assert uniform(2, 4).n_bases == 6
    assert uniform(0, 1).bases == ((),)
    for r, n in [(-1, 2), (3, 2), (0, 0)]:
        with pytest.raises(BadParams):
            uniform(r, n)


def test_graphic_examples():
    assert graphic(cycle_graph(3)) == uniform(2, 3)
    assert graphic(complete_graph(4)).n_bases == 16
    assert graphic(cycle_graph(4)) == uniform(3, 4)
    with pytest.raises(BadParams):
        graphic([])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cycles_are_uniform(n):
    assert graphic(cycle_graph(n)) == uniform(n - 1, n)


def test_graphic_spanning_forests():
    # two disjoint edges plus a loop edge: forests of size 2 avoiding the loop
    m = graphic([(0, 1), (2, 3), (4, 4)])
    assert m.bases == ((1, 2),)


def test_graphic_multigraph():
    # a doubled edge is a parallel pair
    assert graphic([(0, 1), (0, 1)]) == uniform(1, 2)


@pytest.mark.parametrize("name,count", sorted(NAMED.items()))
def test_named_invariants(name, count):
    m = named(name)
    assert (m.rank, m.ground_size, m.n_bases) == (3, 6, count)
    assert is_valid(m)
    assert not excluded_minor_free(m)


def test_named_pairwise_non_isomorphic():
    for a, b in itertools.combinations(NAMED, 2):
        assert is_isomorphic(named(a), named(b)) is None


def test_named_lowercase_and_unknown():
    assert named("mk4") == named("MK4")
    with pytest.raises(BadParams):
        named("K5")


def test_excluded_minor_free_examples():
    assert excluded_minor_free(uniform(2, 4))
    assert excluded_minor_free(two_sum(anchor(uniform(2, 3), 1), anchor(uniform(2, 4), 1)))
    assert excluded_minor_free(direct_sum(uniform(2, 4), uniform(1, 3)))
    # a series extension of MK4 still contains it
    ext = Matroid.from_bases(
        7, [tuple(b) + (7,) for b in named("MK4").bases] + [tuple(sorted(set(b) | {1})) for b in named("MK4").bases if 1 not in b]
    )
    assert not excluded_minor_free(ext)
