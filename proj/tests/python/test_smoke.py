"""Smoke tests for the python bindings: one pass over each exposed area."""

import math

import pytest

import bracekit as bk


def test_groups():
    s3 = bk.symmetric_group(3)
    assert s3.order == 6
    assert not s3.is_abelian()
    assert bk.automorphism_count(s3) == 6
    assert bk.identify_group(s3) == "S3"
    assert bk.is_solvable_group(s3)
    assert bk.isomorphic(bk.holomorph(bk.cyclic_group(3)), s3)
    assert bk.group_preset("c3xc2cubed").order == 24

    with pytest.raises(bk.BracekitError):
        bk.FiniteGroup.from_table([[0, 1], [1, 1]])


def test_braces():
    s3 = bk.symmetric_group(3)
    op = bk.FiniteSkewBrace.verify(s3, s3.opposite())
    assert bk.classify_triviality(op) == "almost_trivial"
    assert len(bk.all_ideals(op)) == 3
    chain, solvable = bk.brace_derived_series(op)
    assert solvable and [len(t) for t in chain] == [6, 3, 1]
    q = bk.quotient(op, chain[1])
    assert q.order == 2

    assert bk.count_braces(bk.cyclic_group(2)) == 1
    braces = bk.enumerate_braces(bk.cyclic_group(4))
    assert all(b.order == 4 for b in braces)


def test_lambda_and_star():
    s3 = bk.symmetric_group(3)
    op = bk.FiniteSkewBrace.verify(s3, s3.opposite())
    lam = op.lambda_map(1)
    assert sorted(lam) == list(range(6))  # a permutation
    assert op.star(1, 0) == 0


def test_lie_algebras():
    sl2 = bk.sl2()
    bk.check_jacobi(sl2)
    assert bk.is_semisimple(sl2)
    assert bk.is_simple_algebra(sl2)
    count, non_split = bk.simple_summand_count(sl2)
    assert count == 1 and not non_split
    ideals, continuous = bk.all_ideals_lowdim(sl2)
    assert len(ideals) == 2 and not continuous

    solvable = bk.LieAlgebra.from_constants(3, [(0, 1, 1, "1"), (0, 2, 2, "-1")])
    assert bk.is_solvable_algebra(solvable)
    ideals, continuous = bk.all_ideals_lowdim(solvable)
    assert len(ideals) == 5 and not continuous


def test_post_lie():
    p = bk.a11_post_lie()
    bk.check_postlie(p)
    assert bk.is_simple_brace_infinitesimal(p)

    case, detail = bk.rigidity_classify(bk.PostLieAlgebra(bk.sl2(), []))
    assert case == "case_i"

    # triangle = -bracket on sl2: [h,e]=2e, [h,f]=-2f, [e,f]=h
    entries = [
        (0, 1, 1, "-2"),
        (1, 0, 1, "2"),
        (0, 2, 2, "2"),
        (2, 0, 2, "-2"),
        (1, 2, 0, "-1"),
        (2, 1, 0, "1"),
    ]
    case, detail = bk.rigidity_classify(bk.PostLieAlgebra(bk.sl2(), entries))
    assert case == "case_ii"


def test_numeric_laws():
    dot, circ = bk.brace_law_preset("a1_1_model")
    report = bk.check_brace_numeric(dot, circ, samples=300, tol=1e-8, seed=42)
    assert report["pass"] and report["brace_residual"] < 1e-8

    lam = bk.lambda_numeric(dot, circ, [1.0, 0.0, 0.0])
    e = math.e
    expected = [1, 0, 0, 0, e, 0, 0, 0, 1 / e]
    assert max(abs(a - b) for a, b in zip(lam, expected)) < 1e-9

    p = bk.extract_and_rationalize(dot, circ, 64)
    assert bk.is_simple_brace_infinitesimal(p)


def test_cli_round_trip():
    code, report = bk.cli_run(["lsb-check", "presets:affine2d", "--samples", "200"])
    assert code == 0 and "status: pass" in report
    code2, report2 = bk.cli_run(["lsb-check", "presets:affine2d", "--samples", "200"])
    assert report2 == report

    code, report = bk.cli_run(["presets"])
    assert code == 0 and "a1_1_model" in report
