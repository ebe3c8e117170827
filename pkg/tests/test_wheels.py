from collections import Counter
from functools import lru_cache

import pytest

from pentachrome.detectors import C5, T5WHEEL, Y5WHEEL, find_induced
from pentachrome.errors import ClaimViolation, InternalInconsistency, PreconditionViolation
from pentachrome.generators import WHEEL_SEEDED, GenSpec, generate
from pentachrome.graph import complete_graph, cycle_graph, t5_wheel, y5_wheel
from pentachrome.oracles import max_clique
from pentachrome.partition import partition_by_t5, partition_by_y5, partition_wheel_free
from pentachrome.pipeline import color_wheel_free
from pentachrome.wheels import PaletteLedger, color_components, color_with_t5, color_with_y5

SEEDS = range(60)


@lru_cache(maxsize=None)
def colored(wheel, seed):
    g = generate(GenSpec(WHEEL_SEEDED, wheel=wheel, seed=seed, augment=10)).graph
    omega = max_clique(g).size
    if wheel == "T5":
        part = partition_by_t5(g, find_induced(g, T5WHEEL))
        res = color_with_t5(g, part, omega)
    elif wheel == "Y5":
        part = partition_by_y5(g, find_induced(g, Y5WHEEL))
        res = color_with_y5(g, part, omega)
    else:
        part = partition_wheel_free(g, find_induced(g, C5))
        res = color_wheel_free(g, part, omega)
    return g, part, omega, res


def test_ledger_refuses_foreign_colors():
    led = PaletteLedger(3)
    assert led.extra == (4, 5, 6)
    led.assign("A", {0: 1, 1: 2}, range(1, 4))
    with pytest.raises(InternalInconsistency):
        led.assign("B", {2: 5}, (4,))
    with pytest.raises(InternalInconsistency):
        led.assign("B", {0: 4}, (4,))
    with pytest.raises(ClaimViolation) as err:
        led.assign_stable(cycle_graph(5), "D", {2, 3}, 6)
    assert err.value.rule == "stable/D"
    assert led.replay() == {0: 1, 1: 2} and led.entry("A").colors == (1, 2)


def test_components_run_out_of_colors():
    g = complete_graph(3)
    led = PaletteLedger(3)
    led.assign("A", {0: 3}, (3,))
    with pytest.raises(ClaimViolation) as err:
        color_components(g, led, "S", {1, 2}, (3, 4))
    assert err.value.rule == "S/palette"


def test_plain_wheels():
    for g, fn, build in ((t5_wheel(), color_with_t5, partition_by_t5),
                         (y5_wheel(), color_with_y5, partition_by_y5)):
        res = fn(g, build(g, tuple(range(6))), 3)
        assert res.is_proper(g) and max(res.used) <= 6


def test_wrong_partition_kind():
    g = t5_wheel()
    with pytest.raises(PreconditionViolation):
        color_with_y5(g, partition_by_t5(g, tuple(range(6))), 3)
    with pytest.raises(PreconditionViolation):
        color_with_t5(g, partition_by_t5(g, tuple(range(6))), 2)


@pytest.mark.parametrize("wheel", ["T5", "Y5", "C5"])
def test_bound_and_ledger(wheel):
    for seed in SEEDS:
        g, part, omega, res = colored(wheel, seed)
        assert res.is_proper(g)
        assert set(res.colors) == set(range(g.n))
        assert max(res.used) <= omega + 3
        led = res.ledger
        assert led.replay() == res.colors
        for entry in led.log:
            assert set(entry.colors) <= set(entry.permitted)
        for label in ("B", "D", "M", "B1", "B2"):
            e = led.entry(label)
            if e is not None:
                assert len(e.colors) == 1 and e.colors[0] > omega


def test_t5_s_sees_two_colors_in_a():
    for seed in SEEDS:
        g, part, omega, res = colored("T5", seed)
        a = set(res.notes["A"])
        for u in part["S"]:
            for v in g.adj[u] & a:
                assert res.colors[v] in (1, 2), (seed, u, v)
        assert all(res.colors[u] >= 3 for u in part["S"])


def test_prescription_honoured_via_split():
    for seed in SEEDS:
        g, part, omega, res = colored("T5", seed)
        assert all(res.colors[u] == 2 for u in res.split.first)
        assert all(res.colors[u] == 1 for u in res.split.second)
        g, part, omega, res = colored("C5", seed)
        assert all(res.colors[u] == 2 for u in res.split.first)
        assert all(res.colors[u] == 1 for u in res.split.second)


def test_y5_s_components_see_two_colors():
    for seed in SEEDS:
        g, part, omega, res = colored("Y5", seed)
        nx = g.adj[part.apex]
        for u in part["S"]:
            if g.adj[u] & part["S"]:
                seen = {res.colors[v] for v in g.adj[u] & nx}
                assert seen <= {1, 2}


def test_every_case_is_exercised():
    cases = Counter(colored(w, s)[3].case for w in ("T5", "Y5") for s in SEEDS)
    assert set(cases) == {"both-stable", "R3-unstable", "R4-unstable",
                          "R1-nonempty", "R2-nonempty", "R1-R2-empty"}


def test_wheel_free_s_layers():
    for seed in SEEDS:
        g, part, omega, res = colored("C5", seed)
        book = res.notes["book"]
        assert book.S1 | book.S0 == part["S"]
        if book.w is not None:
            assert book.S1 <= g.adj[book.w]
