"""Acceptance gate: every criterion at its stated budget, one
pass/fail line each (run pytest with -s to watch them stream)."""

import pytest

from omforge.acceptance import CRITERIA, AcceptanceContext, DEFAULT_SEED


@pytest.fixture(scope="module")
def ctx():
    return AcceptanceContext(seed=DEFAULT_SEED, campaign_nodes=3000)


def _check(result):
    print(result.line())
    assert result.ok, result.line()


def test_criterion_01_oracle_equivalence(ctx):
    _check(CRITERIA[1](ctx))


def test_criterion_02_realizable_shannon(ctx):
    _check(CRITERIA[2](ctx))


def test_criterion_03_realizable_euclidean(ctx):
    _check(CRITERIA[3](ctx))


def test_criterion_04_rank3_universality(ctx):
    _check(CRITERIA[4](ctx))


def test_criterion_05_lex_battery(ctx):
    _check(CRITERIA[5](ctx))


def test_criterion_06_preservation(ctx):
    _check(CRITERIA[6](ctx))


def test_criterion_07_euclidean_L3(ctx):
    _check(CRITERIA[7](ctx))


def test_criterion_08_eight_point(ctx):
    _check(CRITERIA[8](ctx))


def test_criterion_09_cycle_structure(ctx):
    _check(CRITERIA[9](ctx))


def test_criterion_10_direct_sum(ctx):
    _check(CRITERIA[10](ctx))
