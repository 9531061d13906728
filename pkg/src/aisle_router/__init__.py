"""Exact order-picking routes in warehouses with two cross aisles."""

from __future__ import annotations

from .configs import VerticalKind, enumerate_cross, enumerate_vertical
from .dp import Solution, solve
from .errors import (AisleRouterError, ContractError, CounterexampleNotFound, FormatError, InfeasibleError,
                     InstanceTooLargeError, InvalidEdgeError, InvalidInstanceError, InvalidRestrictionError,
                     UnsupportedInstanceError)
from .model import (EquivalenceClass, Side, TourSubgraph, Violation, WarehouseInstance, canonicalize_multiplicities,
                    full_double_aisles, has_full_aisle_double, is_rectangular, pts_class, restrict, tour_length,
                    validate_tour)
from .oracle import OracleResult, SearchSpace, brute_force_optimum, enumerate_tours, find_counterexample
from .reducer import ReductionCase, ReductionStep, eliminate_all, iter_reductions, reduce_once, reduction_step
from .render import RenderSpec, render_svg, write_svg

__all__ = [
    "AisleRouterError", "ContractError", "CounterexampleNotFound", "EquivalenceClass", "FormatError",
    "InfeasibleError", "InstanceTooLargeError", "InvalidEdgeError", "InvalidInstanceError",
    "InvalidRestrictionError", "OracleResult", "ReductionCase", "ReductionStep", "RenderSpec", "SearchSpace",
    "Side", "Solution", "TourSubgraph", "UnsupportedInstanceError", "VerticalKind", "Violation",
    "WarehouseInstance", "brute_force_optimum", "canonicalize_multiplicities", "eliminate_all",
    "enumerate_cross", "enumerate_tours", "enumerate_vertical", "find_counterexample", "full_double_aisles",
    "has_full_aisle_double", "is_rectangular", "iter_reductions", "pts_class", "reduce_once", "reduction_step",
    "render_svg", "restrict", "solve", "tour_length", "validate_tour", "write_svg",
]
