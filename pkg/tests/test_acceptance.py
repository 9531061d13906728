"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N ...: PASS|FAIL`` line that is printed in
the pytest terminal summary; running this file as a script prints the same
lines directly.
"""

from __future__ import annotations

import json
import random
import sys
import time
import xml.etree.ElementTree as ET
from functools import lru_cache

import pytest

from aisle_router.cli import main as cli_main
from aisle_router.dp import solve
from aisle_router.errors import InfeasibleError
from aisle_router.formats import dumps_instance, dumps_tour, loads_instance, loads_tour
from aisle_router.generate import random_instance, small_instance
from aisle_router.model import full_double_aisles, is_rectangular, tour_length, validate_tour
from aisle_router.oracle import SearchSpace, brute_force_optimum, enumerate_tours, find_counterexample
from aisle_router.reducer import eliminate_all, iter_reductions
from aisle_router.render import render_svg
from helpers import ACCEPTANCE_LINES, FIXTURES, reduction_failures

SUITE_SIZE = 500
SUITE_SEED = 2024
REDUCTION_INSTANCES = 60
SLACK = 8
BIG_AISLES, BIG_PICKS = 100_000, 300_000


def record(n: int, name: str, ok: bool, detail: str) -> None:
    line = f"criterion {n} {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


@lru_cache(maxsize=None)
def oracle_suite():
    """Seeded desk-scale instances, alternating rectangular and free-form,
    each with its oracle result (all optima listed)."""
    rng = random.Random(SUITE_SEED)
    out = []
    for i in range(SUITE_SIZE):
        inst = small_instance(rng, rectangular=i % 2 == 0, max_aisles=4, max_targets=6, max_len=12)
        out.append((inst, brute_force_optimum(inst, enumerate_all=True)))
    return tuple(out)


def test_criterion_1_oracle_equivalence():
    suite = oracle_suite()
    mismatches = [(inst, solve(inst).length, res.length) for inst, res in suite
                  if solve(inst).length != res.length]
    rect = sum(is_rectangular(inst) for inst, _ in suite)
    ok = len(suite) >= 500 and not mismatches
    record(1, "oracle equivalence", ok,
           f"{len(suite)} instances, {rect} rectangular, {len(mismatches)} mismatches")
    assert ok, mismatches[:3]


def test_criterion_2_rectangular_needs_no_full_double():
    rect = [(inst, res) for inst, res in oracle_suite() if is_rectangular(inst)]
    length_gaps, no_witness = [], []
    for inst, res in rect:
        try:
            without = solve(inst, allow_full_double=False).length
        except InfeasibleError:
            without = None
        if without != solve(inst, allow_full_double=True).length:
            length_gaps.append(inst)
        if all(full_double_aisles(inst, t) for t in res.optima):
            no_witness.append(inst)
    ok = bool(rect) and not length_gaps and not no_witness
    record(2, "no full double needed on rectangular", ok,
           f"{len(rect)} instances, {len(length_gaps)} length gaps, {len(no_witness)} without a witness")
    assert ok


def test_criterion_3_counterexample():
    space = SearchSpace(max_length=12, max_rail=12, max_picks=2, rectangular=False)
    found = find_counterexample(space, seed=0)
    pinned = loads_instance((FIXTURES / "counterexample.json").read_text())
    gap = solve(found, False).length - solve(found, True).length
    optima = brute_force_optimum(found, enumerate_all=True).optima
    every_doubled = all(full_double_aisles(found, t) for t in optima)
    ok = found == pinned and gap >= 1 and every_doubled and not is_rectangular(found)
    record(3, "non-rectangular counterexample", ok,
           f"gap={gap}, {len(optima)} optima all doubled={every_doubled}, matches pinned fixture={found == pinned}")
    assert ok


def test_criterion_4_reduction_soundness():
    rng = random.Random(4)
    tours = steps = 0
    failures = []
    for _ in range(REDUCTION_INSTANCES):
        inst = small_instance(rng, rectangular=True, max_aisles=4, max_targets=4, max_len=8)
        opt = brute_force_optimum(inst).length
        for t in enumerate_tours(inst, opt + SLACK):
            if not full_double_aisles(inst, t):
                continue
            tours += 1
            cur = t
            for step in iter_reductions(inst, t):
                steps += 1
                bad = reduction_failures(inst, cur, step)
                if bad:
                    failures.append((inst, dict(cur), step.aisle, bad))
                cur = step.tour
            out = eliminate_all(inst, t)
            if full_double_aisles(inst, out) or tour_length(inst, out) > tour_length(inst, t):
                failures.append((inst, dict(t), None, ["eliminate_all"]))
    ok = REDUCTION_INSTANCES >= 50 and tours > 0 and not failures
    record(4, "reduction soundness", ok,
           f"{REDUCTION_INSTANCES} instances, {tours} tours within optimum+{SLACK}, {steps} steps, "
           f"{len(failures)} failures")
    assert ok, failures[:3]


def test_criterion_5_optimality_preserved():
    checked = 0
    broken = []
    for inst, res in oracle_suite():
        if not is_rectangular(inst):
            continue
        for t in res.optima:
            checked += 1
            if tour_length(inst, eliminate_all(inst, t)) != res.length:
                broken.append((inst, dict(t)))
    ok = checked > 0 and not broken
    record(5, "optimal tours stay optimal", ok, f"{checked} optimal tours, {len(broken)} lengthened")
    assert ok


def _timed_solve(inst, repeats: int = 2) -> tuple[float, object]:
    best, sol = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        sol = solve(inst)
        best = min(best, time.perf_counter() - t0)
    return best, sol


def test_criterion_6_linear_time():
    inst = random_instance(random.Random(6), BIG_AISLES, BIG_PICKS, rectangular=True, max_len=20)
    elapsed, sol = _timed_solve(inst)
    widest = max(sol.table.entry_counts())
    double = random_instance(random.Random(7), 2 * BIG_AISLES, 2 * BIG_PICKS, rectangular=True, max_len=20)
    elapsed2, _ = _timed_solve(double)
    ratio = elapsed2 / elapsed
    valid = validate_tour(inst, sol.tour) is None
    ok = elapsed < 2.0 and widest <= 7 and ratio <= 3.0 and valid
    record(6, "linear-time smoke test", ok,
           f"n={BIG_AISLES}: {elapsed:.2f}s, max entries per stage={widest}, "
           f"n={2 * BIG_AISLES}: {elapsed2:.2f}s, ratio={ratio:.2f}")
    assert ok


def _cli(argv) -> int:
    return cli_main([str(a) for a in argv])


def test_criterion_7_determinism_and_round_trips(tmp_path, capsys):
    problems = []
    # generator, solver and reducer outputs are byte-identical across runs
    for run in ("a", "b"):
        _cli(["gen", "--seed", 99, "--aisles", 6, "--picks", 10, "--out", tmp_path / f"gen_{run}.json"])
        _cli(["solve", tmp_path / "gen_a.json", "--out", tmp_path / f"sol_{run}.json"])
    capsys.readouterr()
    for stem in ("gen", "sol"):
        if (tmp_path / f"{stem}_a.json").read_bytes() != (tmp_path / f"{stem}_b.json").read_bytes():
            problems.append(f"{stem} not deterministic")

    inst = loads_instance((tmp_path / "gen_a.json").read_text())
    # a comb: every aisle walked down and back, joined along the top
    doubled = {e: 2 for j in range(inst.aisle_count) for e in inst.aisle_edges(j)}
    doubled.update({inst.top_rail(j): 2 for j in range(inst.aisle_count - 1)})
    if validate_tour(inst, doubled) is None and is_rectangular(inst):
        (tmp_path / "doubled.json").write_text(dumps_tour(inst, doubled))
        logs = []
        for run in ("a", "b"):
            _cli(["reduce", tmp_path / "gen_a.json", tmp_path / "doubled.json", "--out", tmp_path / f"red_{run}.json"])
            logs.append(capsys.readouterr().out)
        if logs[0] != logs[1] or (tmp_path / "red_a.json").read_bytes() != (tmp_path / "red_b.json").read_bytes():
            problems.append("reduce not deterministic")
    else:
        problems.append("could not build a reduce input")

    # lossless round trips over the oracle suite
    trips = 0
    for inst, res in oracle_suite()[:100]:
        text = dumps_instance(inst)
        if loads_instance(text) != inst or dumps_instance(loads_instance(text)) != text:
            problems.append(f"instance round trip {inst}")
        ttext = dumps_tour(inst, res.witness)
        if dict(loads_tour(inst, ttext)) != dict(res.witness) or dumps_tour(inst, loads_tour(inst, ttext)) != ttext:
            problems.append(f"tour round trip {inst}")
        try:
            ET.fromstring(render_svg(inst, res.witness))
        except ET.ParseError as exc:
            problems.append(f"svg {exc}")
        trips += 1
    _cli(["render", tmp_path / "gen_a.json", "--tour", tmp_path / "sol_a.json", "--out", tmp_path / "a.svg"])
    try:
        ET.fromstring((tmp_path / "a.svg").read_text())
    except ET.ParseError as exc:
        problems.append(f"cli svg {exc}")
    json.loads((tmp_path / "sol_a.json").read_text())
    ok = not problems
    record(7, "determinism and round trips", ok, f"{trips} instance/tour/svg round trips, problems={problems}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
