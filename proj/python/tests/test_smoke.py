"""Smoke tests for the mycubic extension module.

Runnable directly (python test_smoke.py) or under pytest.
"""

import math
import sys

import mycubic


def test_closed_form_values():
    assert abs(mycubic.my(0.01) - 0.1328694292) <= 1e-10
    assert abs(mycubic.my(2.0 / 27.0) - 1.0 / 3.0) <= 1e-15
    assert abs(mycubic.my(18.0) - 3.0) <= 1e-14
    r = mycubic.my_closed(1000.0)
    assert abs(r.value - 12.2745406200) <= 1e-10
    assert r.method == mycubic.Method.ClosedRadical
    assert r.iterations == 0


def test_methods_agree():
    for x in (0.01, 2.0 / 27.0, 5.0, 1000.0):
        closed = mycubic.my(x)
        assert abs(mycubic.my_fixed(x, 1e-11).value - closed) <= 1e-10
        assert abs(mycubic.my_hyper(x).value - closed) <= 1e-9 * closed
        assert abs(mycubic.my_bisect(x, 1e-13) - closed) <= 1e-11


def test_iteration_trace():
    trace = mycubic.iterate(0.01, 5)
    assert len(trace.rows) == 6
    assert abs(trace.rows[0].value - 0.1321129198) <= 1e-9
    assert abs(trace.rows[5].value - 0.1328694292) <= 1e-9
    assert trace.rows[5].abs_err < trace.rows[0].abs_err


def test_solver():
    rs = mycubic.solve_depressed(-3.0, 1.0)
    assert rs.kind == mycubic.RootKind.ThreeReal
    assert rs.case_id == 4
    roots = list(rs.roots)
    assert abs(roots[0] - (-1.8793852416)) <= 1e-9
    assert abs(roots[1] - 0.3472963553) <= 1e-9
    assert abs(roots[2] - 1.5320888862) <= 1e-9
    for r in roots:
        assert abs(r ** 3 - 3.0 * r + 1.0) <= 1e-12

    one = mycubic.solve_general(1.0, 0.0, 1.0, 1.0)
    assert one.kind == mycubic.RootKind.OneReal
    assert abs(one.roots[0] - (-0.6823278038)) <= 1e-9

    trig = mycubic.viete_trig_roots(-3.0, 1.0)
    assert abs(trig[0] - 1.5320888862) <= 1e-9


def test_constants_and_bounds():
    k = mycubic.convergence_constants()
    assert abs(k.K - 25.0572) <= 1e-3
    assert abs(k.C1 * 21.2398 - 1.0) <= 1e-4
    lo, hi = mycubic.bounds(0.01)
    assert lo <= mycubic.my(0.01) <= hi


def test_scenarios_and_roots():
    assert mycubic.classify_target(0.12) == mycubic.Scenario.UniqueAboveMax
    assert mycubic.classify_target(-0.08) == mycubic.Scenario.UniqueNegative
    canon = mycubic.canonical_roots(0.05)
    assert len(canon.roots) == 3
    assert canon.roots[0] <= canon.roots[1] <= canon.roots[2]
    oracle = mycubic.canonical_roots_bisect(0.05, 1e-13)
    for a, b in zip(canon.roots, oracle.roots):
        assert abs(a - b) <= 1e-9


def test_domain_errors():
    for bad_call in (
        lambda: mycubic.my(-1.0),
        lambda: mycubic.my_hyper(1e-4),
        lambda: mycubic.my_fixed(1.0, 1e-16),
        lambda: mycubic.solve_general(0.0, 1.0, 1.0, 1.0),
    ):
        try:
            bad_call()
        except ValueError:
            continue
        raise AssertionError("expected ValueError")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
