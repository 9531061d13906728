from __future__ import annotations

import pytest
from hypothesis import given

from aisle_router.errors import CounterexampleNotFound, InstanceTooLargeError
from aisle_router.model import WarehouseInstance, full_double_aisles, is_rectangular, tour_length, validate_tour
from aisle_router.oracle import (MAX_EDGES_ENV, SearchSpace, brute_force_optimum, enumerate_tours,
                                 find_counterexample, needs_full_double)
from helpers import E1, e1_square, instances, nx_is_tour


def test_e1_optimum():
    result = brute_force_optimum(E1, enumerate_all=True)
    assert result.length == 24
    assert dict(result.witness) == dict(e1_square())
    assert [dict(t) for t in result.optima] == [dict(e1_square())]


def test_e1_second_best_route():
    # the next route is the top-only one: down aisle 1 to 7 and back, plus to pick 5 in aisle 2
    lengths = sorted({tour_length(E1, t) for t in enumerate_tours(E1, 28)})
    assert lengths[:2] == [24, 28]


@pytest.mark.parametrize("length,depot,expected", [(10, 3, 6), (10, 8, 4), (5, 2, 4)])
def test_interior_depot_without_picks(length, depot, expected):
    inst = WarehouseInstance((length,), ((),), (), (), (0, depot))
    assert brute_force_optimum(inst).length == expected == 2 * min(depot, length - depot)


def test_interior_depot_next_to_pick():
    inst = WarehouseInstance((10, 10), ((4,), ()), (3,), (3,), (0, 3))
    assert brute_force_optimum(inst).length == 2  # doubled stub between depot and pick


def test_single_pick_single_aisle():
    inst = WarehouseInstance((10,), ((3,),), (), (), (0, 0))
    assert brute_force_optimum(inst).length == 6


def test_size_guard(monkeypatch):
    big = WarehouseInstance((10,) * 6, ((1, 2),) * 6, (1,) * 5, (1,) * 5)
    with pytest.raises(InstanceTooLargeError, match="edges"):
        brute_force_optimum(big)
    monkeypatch.setenv(MAX_EDGES_ENV, "4")
    with pytest.raises(InstanceTooLargeError):
        brute_force_optimum(E1)
    monkeypatch.setenv(MAX_EDGES_ENV, "40")
    assert brute_force_optimum(WarehouseInstance((3,) * 5, ((1,),) * 5, (1,) * 4, (1,) * 4)).length > 0


@given(instances())
def test_enumerate_all_consistent(inst):
    plain = brute_force_optimum(inst)
    full = brute_force_optimum(inst, enumerate_all=True)
    assert plain.length == full.length
    assert dict(plain.witness) == dict(full.witness)
    assert full.optima and dict(full.optima[0]) == dict(full.witness)
    for t in full.optima:
        assert validate_tour(inst, t) is None and nx_is_tour(inst, t)
        assert tour_length(inst, t) == full.length
        assert all(m <= 2 for m in t.values())


@given(instances(rectangular=True))
def test_rectangular_optimum_without_full_double(inst):
    optima = brute_force_optimum(inst, enumerate_all=True).optima
    assert any(not full_double_aisles(inst, t) for t in optima)


def test_witness_independent_of_edge_order():
    # reversing the aisles only relabels edges; the optimum is unchanged
    from aisle_router.model import mirror_instance_lr
    inst = WarehouseInstance((6, 9, 4), ((2,), (3, 7), ()), (2, 5), (4, 1), (2, 4))
    assert brute_force_optimum(inst).length == brute_force_optimum(mirror_instance_lr(inst)).length


def test_counterexample_search_is_pinned(counterexample):
    found = find_counterexample(SearchSpace(), seed=0)
    assert found == counterexample
    assert not is_rectangular(found)
    assert needs_full_double(found)


def test_counterexample_search_deterministic():
    assert find_counterexample(seed=5) == find_counterexample(seed=5)


def test_rectangular_space_has_no_counterexample():
    with pytest.raises(CounterexampleNotFound):
        find_counterexample(SearchSpace(rectangular=True, max_tries=1500), seed=1)
