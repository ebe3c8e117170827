import pytest

from pentachrome.detectors import C5, HVN, P5, T5WHEEL, Y5WHEEL, find_induced
from pentachrome.errors import GraphError
from pentachrome.generators import (COMPLETE_MULTIPARTITE, FIVE_RING, RANDOM_IN_CLASS,
                                    WHEEL_SEEDED, GenerationFailed, GenSpec, generate, in_class)
from pentachrome.graph import complete_multipartite, five_ring, path_graph


def test_fixed_families():
    assert generate(GenSpec(FIVE_RING, parts=(2, 1, 1, 1, 1))).graph == five_ring([2, 1, 1, 1, 1])
    doc = generate(GenSpec(COMPLETE_MULTIPARTITE, parts=(3, 2)))
    assert doc.graph == complete_multipartite([3, 2]) and doc.name == "complete_multipartite-3-2"
    with pytest.raises(GraphError):
        generate(GenSpec(COMPLETE_MULTIPARTITE, parts=(0, 2)))
    with pytest.raises(GraphError):
        generate(GenSpec("TREE"))


def test_in_class():
    assert not in_class(path_graph(5))
    assert in_class(five_ring([1] * 5))
    assert not in_class(five_ring([1] * 5), avoid=(C5,))


def test_random_gives_up_with_try_count():
    with pytest.raises(GenerationFailed) as err:
        generate(GenSpec(RANDOM_IN_CLASS, n=40, p=0.5, seed=1, max_tries=5))
    assert err.value.tries == 5


@pytest.mark.parametrize("spec", [
    GenSpec(RANDOM_IN_CLASS, n=8, p=0.5, seed=12345678901234567890),
    GenSpec(WHEEL_SEEDED, wheel="T5", augment=15, seed=3),
    GenSpec(WHEEL_SEEDED, wheel="Y5", augment=15, seed=-7),
])
def test_same_seed_same_graph(spec):
    assert generate(spec) == generate(spec)


@pytest.mark.parametrize("wheel,has,avoid", [
    ("T5", T5WHEEL, ()), ("Y5", Y5WHEEL, (T5WHEEL,)), ("C5", C5, (T5WHEEL, Y5WHEEL)),
])
def test_wheel_seeded_stays_in_class(wheel, has, avoid):
    for seed in range(8):
        g = generate(GenSpec(WHEEL_SEEDED, wheel=wheel, augment=14, seed=seed)).graph
        assert g.n == (20 if wheel != "C5" else 19)
        assert find_induced(g, P5) is None and find_induced(g, HVN) is None
        assert find_induced(g, has) is not None
        assert all(find_induced(g, t) is None for t in avoid)


def test_different_seeds_differ():
    graphs = {generate(GenSpec(WHEEL_SEEDED, augment=10, seed=s)).graph.edges.__repr__()
              for s in range(10)}
    assert len(graphs) > 5
