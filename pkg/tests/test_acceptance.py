"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Criteria (all exact; timing budgets noted inline):
  1-3  n=5 decomposition tables for pd / a / pod2, row-for-row.
  4    worked-example anchors.
  5    exhaustive round trips for n <= 24 (< 60 s total).
  6    orbit theorem for every n == 2 mod 3, n <= 20.
  7    congruence scans to 300 and series == enumeration for n <= 24 (< 30 s).
  8    theta spot values to 100.
  9    rotation map: period 3 and fixed points, weight <= 12.
"""

import time

import pytest

from vrank import bijections, orbits
from vrank.families import (
    A,
    A_IMAGE,
    OP2,
    OddStaircase,
    PD,
    PD_IMAGE,
    POD2,
    POD2_IMAGE,
    count_family,
    enumerate_family,
    format_element,
    parse_element,
)
from vrank.golden import TABLES, orbit_partition
from vrank.series import family_series, odd_staircase_theta, scan_congruence, staircase_theta

FAMILIES = {"pd": (PD, PD_IMAGE), "a": (A, A_IMAGE), "pod2": (POD2, POD2_IMAGE)}


def report(criterion: str, ok: bool):
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}")
    assert ok, criterion


@pytest.mark.parametrize(
    "name,number,n_orbits",
    [("pd", 1, 5), ("a", 2, 4), ("pod2", 3, 6)],
    ids=["pd", "a", "pod2"],
)
def test_criterion_1_2_3_table_reproduction(name, number, n_orbits):
    family, image = FAMILIES[name]
    rows = TABLES[name]
    start = time.monotonic()
    forward, _, _ = orbits.family_bijection(family)
    row_ok = True
    for elem, tup, rank, _ in rows:
        v = forward(parse_element(family, elem))
        row_ok &= format_element(image, v) == tup and orbits.v_rank(v) == rank
    decomposition = orbits.build_orbits(family, 5)
    got = {
        frozenset(format_element(family, x) for x, _, _ in orbit.members)
        for orbit in decomposition
    }
    elapsed = time.monotonic() - start
    ok = (
        row_ok
        and len(rows) == count_family(family, 5)
        and len(decomposition) == n_orbits
        and got == orbit_partition(rows)
        and elapsed < 1.0
    )
    report(f"criterion {number}: n=5 table for {name} ({elapsed:.2f}s)", ok)


def test_criterion_4_worked_example_anchors():
    ok = bijections.phi((4, 4, 2, 2, 1)) == ((1,), (2,), (6, 4))

    dp = parse_element(PD, "20+20+20'+4+4'+4+4+2'+2+1+1+1+1+1+1+1'+1")
    ok &= format_element(PD_IMAGE, bijections.lambda_pd(dp)) == "(2;6+4;8+2+2;1;60+3)"

    w = bijections.wright((9, 7, 3), (17, 15, 11, 7, 3, 1))
    ok &= w.pi == (16, 16, 14, 8, 6, 4) and w.triangle == OddStaircase(3, True)

    from vrank.families import Family, ORDINARY, STAIRCASE, VTuple

    spec = Family("vector", components=(ORDINARY, ORDINARY, ORDINARY, STAIRCASE))
    v = VTuple(((9, 8, 7, 7, 5, 4), (5, 2, 1), (10, 6, 4, 4, 3, 2), (3, 2, 1)), spec)
    ranks = []
    for _ in range(3):
        ranks.append(orbits.v_rank(v))
        v = orbits.o_hat(v)
    ok &= ranks == [3, 1, -1]

    report("criterion 4: worked-example anchors", ok)


def test_criterion_5_round_trip_suite():
    start = time.monotonic()
    ok = True
    for name, (family, image) in FAMILIES.items():
        forward, inverse, _ = orbits.family_bijection(family)
        for n in range(25):
            for x in enumerate_family(family, n):
                v = forward(x)
                ok &= v.weight == n and inverse(v) == x
            for v in enumerate_family(image, n):
                x = inverse(v)
                ok &= forward(x) == v
    elapsed = time.monotonic() - start
    ok &= elapsed < 60.0
    report(f"criterion 5: round trips n<=24 ({elapsed:.1f}s)", ok)


def test_criterion_6_orbit_theorem_suite():
    ok = True
    for name, (family, image) in FAMILIES.items():
        for n in range(2, 21, 3):
            decomposition = orbits.build_orbits(family, n)
            members = [x for o in decomposition for x, _, _ in o.members]
            total = count_family(family, n)
            ok &= len(members) == len(set(members)) == total
            ok &= total % 3 == 0
            for o in decomposition:
                ok &= len(o.members) == 3
                ok &= sorted(r % 3 for _, _, r in o.members) == [0, 1, 2]
                for _, v, _ in o.members:
                    w = orbits.o_hat(orbits.o_hat(orbits.o_hat(v)))
                    ok &= w == v
    report("criterion 6: orbit theorem for n == 2 mod 3, n <= 20", ok)


def test_criterion_7_congruence_scans():
    start = time.monotonic()
    ok = True
    for family in (PD, A, POD2, OP2):
        ok &= scan_congruence(family, 300) == []
        s = family_series(family, 24)
        ok &= all(s[n] == count_family(family, n) for n in range(25))
    elapsed = time.monotonic() - start
    ok &= elapsed < 30.0
    report(f"criterion 7: congruence scans to 300 ({elapsed:.1f}s)", ok)


def test_criterion_8_theta_spot_values():
    st = staircase_theta(100)
    triangular = {k * (k + 1) // 2 for k in range(15)}
    ok = all(st[n] == (1 if n in triangular else 0) for n in range(101))
    ot = odd_staircase_theta(100)
    squares = {m * m for m in range(1, 11)}
    ok &= ot[0] == 1
    ok &= all(ot[n] == (2 if n in squares else 0) for n in range(1, 101))
    report("criterion 8: theta spot values to 100", ok)


def test_criterion_9_rotation_map():
    ok = True
    for image in (PD_IMAGE, A_IMAGE, POD2_IMAGE):
        for n in range(13):
            for v in enumerate_family(image, n):
                ok &= orbits.rotate_o(orbits.rotate_o(orbits.rotate_o(v))) == v
                fixed = orbits.rotate_o(v) == v
                ok &= fixed == (v.components[0] == v.components[1] == v.components[2])
    report("criterion 9: rotation map on weight <= 12 tuples", ok)
