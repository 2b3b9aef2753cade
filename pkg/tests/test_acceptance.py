"""The eight acceptance criteria, each at its stated sizes and time limit.

Run ``pytest tests/test_acceptance.py`` for a PASS/FAIL line per criterion in
the terminal summary, or ``python3 tests/test_acceptance.py`` for the same lines
without pytest.
"""

import sys
import time

from conftest import ACCEPTANCE

from realization import suites as S
from realization.crossed import Flavor, enumerate_hom
from realization.literals import bundled, bundled_names
from realization.sset import standard


def _record(k, title, limit, run, check):
    t = time.perf_counter()
    rep = run()
    secs = time.perf_counter() - t
    problems = list(rep.failures[:3])
    problems += check(rep)
    if secs >= limit:
        problems.append(f"took {secs:.1f}s, limit {limit}s")
    ok = not problems
    ACCEPTANCE[k] = (ok, secs, limit, title if ok else f"{title}: {problems[0]}")
    print(f"{'PASS' if ok else 'FAIL'} {k}: {title} ({secs:.1f}s)")
    assert ok, problems


def test_1_metric():
    _record(1, "metric on simplices", 10, lambda: S.suite_metric(3, 200, 100, seed=1),
            lambda r: [] if r.checks["pairs"] >= 200 and r.checks["triples"] >= 100 else ["too few samples"])


def test_2_refinement_invariance():
    pres = [bundled(n) for n in ("delta2", "lambda1", "dih1")]
    _record(2, "distance is refinement invariant", 10, lambda: S.suite_refinement(pres, 100, seed=2),
            lambda r: [] if r.checks["instances"] >= 100 else ["too few instances"])


def test_3_crossed_groups():
    def check(r):
        out = []
        if r.checks["group tables"] != 12:
            out.append("group tables for n <= 5 not all checked")
        if r.checks["rewriting words"] == 0:
            out.append("no words rewritten")
        return out

    _record(3, "crossed groups, relations and rewriting", 60, lambda: S.suite_axioms(("C", "D"), 5, 4, 3, 3, 6),
            check)


def test_4_unique_factorization():
    def check(r):
        out = []
        if r.facts["|Hom_D([1],[1])|"] != 12:
            out.append(f"|Hom_D([1],[1])| = {r.facts['|Hom_D([1],[1])|']}")
        for kind in "CD":
            homs = enumerate_hom(2, 2, Flavor(kind))
            if len(set(homs)) != len(homs):
                out.append(f"repeated functors in Hom_{kind}([2],[2])")
        return out

    _record(4, "unique factorization for m, n <= 2", 10, lambda: S.suite_factorization(("C", "D"), 2), check)


def test_5_finite_limits():
    def check(r):
        cells = r.facts["nondegenerate cells"]
        out = [] if (cells[1], cells[2]) == (5, 2) else [f"cells {cells}"]
        if r.checks["grid points"] != 81:
            out.append("grid incomplete")
        return out

    _record(5, "products and equalizers", 10, lambda: S.suite_products(9), check)


def test_6_subdivision():
    objs = [standard("simplex", 2), standard("cyclic", 1), standard("dihedral", 1)]

    def check(r):
        # 100 round trips per (object, r) and 10 homeomorphisms each
        out = [] if r.checks["round trips"] >= 600 else ["too few round trips"]
        if r.checks["squares"] == 0:
            out.append("no squares checked")
        return out

    _record(6, "subdivision point maps and equivariance", 30,
            lambda: S.suite_sdr(objs, (2, 3), samples=100, homeos=10, seed=6), check)


def test_7_fixed_points():
    # expected to fail: see the notes on rotation-subgroup fixed points
    def check(r):
        if r.facts["fixed derived"] != r.facts["fixed base"]:
            return ["fixed point counts differ"]
        return []

    _record(7, "fixed points under D_2 and C_2", 30, lambda: S.suite_fixed_points(bundled("dih1_mod_d2"), 2, 3),
            check)


def test_8_ez_and_normalize():
    pres = [bundled(n) for n in bundled_names()]

    class Both:
        def __init__(self):
            a, b = S.suite_ez(pres, 3), S.suite_normalize(pres, 500, seed=8)
            self.failures = a.failures + b.failures
            self.checks = {**a.checks, **b.checks}

    _record(8, "EZ uniqueness and normalization", 10, Both,
            lambda r: [] if r.checks["cases"] >= 500 else ["too few cases"])


if __name__ == "__main__":
    fails = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_")):
        try:
            fn()
        except AssertionError:
            fails += 1
    sys.exit(1 if fails else 0)
