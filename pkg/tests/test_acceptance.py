"""Full-scale verification criteria.

Every criterion runs at its stated scale and reports one visible
pass/fail line, bypassing pytest capture so the lines always print.
Run this module alone with ``pytest tests/test_acceptance.py``.
"""

import time

from mindec import selftest


def _announce(capsys, result):
    tag = "PASS" if result.passed else "FAIL"
    with capsys.disabled():
        print(
            f"\n[{tag}] criterion {result.index}: {result.name} "
            f"({result.detail}; {result.seconds:.1f}s)"
        )
    assert result.passed, f"criterion {result.index} failed: {result.detail}"


def test_criterion_1_additive_decomposition(capsys):
    # 200 generated matrices, n <= 6: exact S + N with the slow
    # iteration as an independent cross check, under a minute
    result = selftest.criterion_sn(count=200, budget=60.0)
    _announce(capsys, result)
    assert result.seconds < 60.0


def test_criterion_2_covariant_systems(capsys):
    _announce(capsys, selftest.criterion_covariants(count=200))


def test_criterion_3_fine_decomposition_and_mutations(capsys):
    _announce(capsys, selftest.criterion_fine(count=200, mutations=50))


def test_criterion_4_polynomial_images(capsys):
    _announce(capsys, selftest.criterion_matfun(count=100))


def test_criterion_5_complete_multiplicative(capsys):
    _announce(capsys, selftest.criterion_cmjc(count=50))


def test_criterion_6_singular_value_systems(capsys):
    _announce(capsys, selftest.criterion_svd(count=50, normal_count=20))


def test_criterion_7_worked_example_table(capsys):
    _announce(capsys, selftest.criterion_trivial())


def test_criterion_8_scalar_arithmetic(capsys):
    _announce(capsys, selftest.criterion_scalar(count=1000))


def test_full_selftest_under_five_minutes(capsys):
    t0 = time.monotonic()
    results = selftest.run_all(quick=False)
    elapsed = time.monotonic() - t0
    with capsys.disabled():
        print(f"\n[{'PASS' if elapsed < 300 else 'FAIL'}] full selftest in {elapsed:.1f}s")
    assert all(r.passed for r in results)
    assert elapsed < 300.0


def test_quick_selftest_under_ten_seconds(capsys):
    t0 = time.monotonic()
    results = selftest.run_all(quick=True)
    elapsed = time.monotonic() - t0
    with capsys.disabled():
        print(f"\n[{'PASS' if elapsed < 10 else 'FAIL'}] quick selftest in {elapsed:.1f}s")
    assert all(r.passed for r in results)
    assert elapsed < 10.0
