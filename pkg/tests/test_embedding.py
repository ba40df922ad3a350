"""Embedding / origami recurrence and geometric validation."""

import pytest

from tembed.embedding import (
    alpha,
    base_embedding,
    beta,
    compare_theorem,
    gamma_coeff,
    run_recurrence,
    step,
    validate_perfect,
)
from tembed.rings import I, gaussian, rational
from tembed.wavefield import DirectionalSolver


def test_stage_one_square():
    emb = base_embedding(rational(1))
    assert emb.T(1, 0) == gaussian(1)
    assert emb.T(-1, 0) == gaussian(-1)
    assert emb.T(0, 1) == I
    assert emb.T(0, -1) == -I
    assert emb.T(0, 0) == gaussian(0)
    # shared base point with the assembled origami map
    solver = DirectionalSolver(rational(1), 1)
    assert emb.O(0, 0) == solver.assemble_O(0, 0, 1) == gaussian(1, 1)


def test_corners_pinned_every_stage():
    a = rational(7, 10)
    emb = base_embedding(a)
    for _ in range(6):
        emb = step(emb)
        n = emb.stage
        assert emb.T(n, 0) == gaussian(1)
        assert emb.T(-n, 0) == gaussian(-1)
        assert emb.T(0, n) == I * a
        assert emb.T(0, -n) == -(I * a)
        assert emb.O(n, 0) == emb.O(-n, 0) == gaussian(1)
        assert emb.O(0, n) == emb.O(0, -n) == I * a


def test_central_antisymmetry():
    emb = run_recurrence(rational(7, 10), 8)
    for (j, k) in emb.vertices():
        assert emb.T(-j, -k) == -emb.T(j, k)


def test_coefficient_tables():
    a = rational(7, 10)
    a2 = a * a
    assert alpha(3, a) == 1 and alpha(2, a) == a2 and alpha(4, a) == 1 / a2
    assert beta(0, 4, a) == a2 and beta(1, 4, a) == 1 / a2
    assert beta(1, 2, a) == a2 and beta(0, 2, a) == 1 / a2
    assert beta(2, 5, a) == 1
    assert gamma_coeff(0, 0, 2, a) == 1
    assert gamma_coeff(0, 0, 3, a) == a2 and gamma_coeff(1, 0, 3, a) == 1 / a2
    assert gamma_coeff(1, 1, 1, a) == a2 and gamma_coeff(0, 0, 1, a) == 1 / a2


def test_convexity_of_the_update_weights():
    a = rational(7, 10)
    for n in range(1, 8):
        al = alpha(n, a)
        assert al > 0 and al / (al + 1) + 1 / (al + 1) == 1
        for j in range(-n + 1, n):
            be = beta(j, n, a)
            assert be > 0 and be / (be + 1) + 1 / (be + 1) == 1
            for k in range(-n + 1, n):
                ga = gamma_coeff(j, k, n, a)
                assert ga > 0 and ga / (ga + 1) + 1 / (ga + 1) == 1


def test_compare_theorem_exact_small():
    report = compare_theorem(rational(1, 2), 6)
    assert report["passed"]
    assert all(rec["exact"] for rec in report["stages"])


def test_compare_theorem_float_small():
    report = compare_theorem(rational(7, 10), 10, mode="float", tol=1e-12)
    assert report["passed"]


def test_float_and_exact_recurrences_agree():
    a = rational(7, 10)
    exact = run_recurrence(a, 8)
    approx = run_recurrence(a, 8, mode="float")
    tc, oc = exact.as_complex()
    for key in tc:
        assert abs(tc[key] - approx.T(*key)) < 1e-12
        assert abs(oc[key] - approx.O(*key)) < 1e-12


def test_validate_perfect_passes():
    for a in (rational(1), rational(7, 10)):
        emb = run_recurrence(a, 12, mode="float")
        result = validate_perfect(emb)
        assert result["passed"], result["violations"][:3]
        assert result["orientation"] == ["direct"]
        assert result["faces_checked"] > 0


def test_validate_perfect_detects_perturbation():
    emb = run_recurrence(rational(7, 10), 8, mode="float")
    emb.tvals[(1, 0)] = emb.tvals[(1, 0)] + 1e-3
    result = validate_perfect(emb)
    assert not result["passed"]
