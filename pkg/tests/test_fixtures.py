import json

import pytest

from arthurlab import ParseError, UnknownFixture
from arthurlab.config import PACKAGED_FIXTURES
from arthurlab.fixtures import (
    CHECKS,
    FixtureCase,
    Provenance,
    evaluate,
    load_corpus,
    lookup,
    run_case,
)

CORPUS = load_corpus(PACKAGED_FIXTURES)


@pytest.mark.parametrize("case", CORPUS, ids=[case.id for case in CORPUS])
def test_corpus_case(case):
    outcome = run_case(case)

    assert outcome.passed, outcome.detail


def test_corpus_covers_every_check():
    assert {case.check for case in CORPUS} <= set(CHECKS)
    assert len({case.id for case in CORPUS}) == len(CORPUS)


def test_lookup():
    case = lookup(CORPUS, "upper-reduce")

    assert case.check == "reduce_upper"
    assert case.suite == "arthur-steps"
    assert case.provenance is Provenance.PUBLISHED_TABLE


def test_lookup_unknown_case():
    with pytest.raises(UnknownFixture) as error:
        lookup(CORPUS, "nope")

    assert repr(error.value) == "<no fixture named nope>"


def test_unknown_check():
    case = FixtureCase("odd", "no_such_check", "derived-oracle", {}, {})

    with pytest.raises(UnknownFixture):
        evaluate(case)


def test_domain_errors_become_outputs():
    case = FixtureCase(
        "tempered",
        "reduce_upper",
        "derived-oracle",
        {"family": "SO", "ldata": "L(; pi(tr(1,O)[1/2]+))"},
        {"error": "TemperedData"},
    )

    assert evaluate(case) == {"error": "TemperedData"}
    assert run_case(case).passed


def test_mismatch_detail():
    case = FixtureCase(
        "wrong",
        "m_matrix",
        "derived-oracle",
        {"x": "0", "a": 1, "grid": ["-1/2", "1/2"]},
        {"matrix": "1"},
    )

    outcome = run_case(case)

    assert not outcome.passed
    assert outcome.detail == "matrix: expected '1', got '0'"


def test_bad_json(tmp_path):
    (tmp_path / "broken.json").write_text("{", encoding="utf-8")

    with pytest.raises(ParseError):
        load_corpus(tmp_path)


def test_case_without_expected(tmp_path):
    case = {"id": "x", "check": "triangle", "provenance": "published-table"}
    document = {"cases": [case]}
    (tmp_path / "cases.json").write_text(json.dumps(document), encoding="utf-8")

    with pytest.raises(ParseError) as error:
        load_corpus(tmp_path)

    assert error.value.expected == ("expected",)


def test_bad_provenance():
    with pytest.raises(ValueError):
        FixtureCase("x", "triangle", "folklore", {}, {})


def test_empty_directory(tmp_path):
    assert load_corpus(tmp_path) == []
