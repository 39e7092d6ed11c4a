"""One test per acceptance criterion.  Each prints a PASS/FAIL line and the
lines are repeated in the terminal summary.  Budgets are wall-clock limits."""
import time

import pytest

from qgsmash.suites import SUITES
from conftest import ACCEPTANCE_LINES

CRITERIA = [
    (1, "Schur idempotent tables", "idempotents-d2d3", {}, 30),
    (2, "Q_G shape conformance", "qg-shapes", {}, 60),
    (3, "functor fixture conformance", "fixtures-iso", {}, 120),
    (4, "Schofield semantics", "schofield", {}, 120),
    (5, "proposition suites at a = 1", "propositions", {"a": 1}, 300),
    (6, "dim SI and reciprocity", "reciprocity", {}, 180),
    (7, "adjunction", "adjunction", {}, 120),
    (8, "foundational properties", "foundations", {}, 60),
]


def run_criterion(k, title, suite, kwargs, budget):
    start = time.perf_counter()
    checks = SUITES[suite](seed=0, **kwargs)
    elapsed = time.perf_counter() - start
    failed = [c for c in checks if not c.ok]
    in_time = elapsed < budget
    ok = not failed and in_time
    summary = f"{len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.1f}s of {budget}s"
    if failed:
        summary += "; failing: " + "; ".join(c.line()[5:] for c in failed)
    if not in_time:
        summary += "; over budget"
    line = f"{'PASS' if ok else 'FAIL'} criterion {k} ({title}): {summary}"
    return ok, line, checks


@pytest.mark.parametrize("k,title,suite,kwargs,budget", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(k, title, suite, kwargs, budget):
    ok, line, checks = run_criterion(k, title, suite, kwargs, budget)
    print(line)
    for c in checks:
        print("    " + c.line())
    ACCEPTANCE_LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    import sys
    bad = 0
    for crit in CRITERIA:
        ok, line, _ = run_criterion(*crit)
        print(line, flush=True)
        bad += not ok
    sys.exit(1 if bad else 0)
