"""
Worked examples with known answers, stored as JSON next to the package.

A corpus file holds ``{"cases": [...]}``. Each case names a ``check``, the
inputs in their DSL text forms, and the expected outputs. Only the keys
listed under ``expected`` are compared, so a case can pin down part of a
result. Every case records where its expected values come from.
"""

import enum
import json
import logging
import pathlib
import typing

import attr

from . import algorithms, ldata, multisegments, orders, vogan
from ._error import ArthurLabError, ParseError, UnknownFixture
from ._validation import type_validator
from .dsl import (
    parse_ems,
    parse_label,
    parse_ldata,
    parse_parameter,
    parse_segments,
)
from .halfint import half
from .params import Family, GroupSpec, partitions_of, phi_of

logger = logging.getLogger(__name__)

Json = typing.Dict[str, typing.Any]


class Provenance(enum.Enum):
    PUBLISHED_TABLE = "published-table"
    DERIVED_ORACLE = "derived-oracle"


@attr.s(frozen=True, slots=True)
class FixtureCase:
    id = attr.ib(type=str, validator=type_validator())
    check = attr.ib(type=str, validator=type_validator())
    provenance = attr.ib(
        type=Provenance, converter=Provenance, validator=type_validator()
    )
    inputs = attr.ib(type=dict, validator=type_validator())
    expected = attr.ib(type=dict, validator=type_validator())
    suite = attr.ib(type=str, default="examples", validator=type_validator())


@attr.s(frozen=True, slots=True)
class CaseOutcome:
    id = attr.ib(type=str)
    passed = attr.ib(type=bool)
    detail = attr.ib(type=str, default="")


def _case(data: Json) -> FixtureCase:
    try:
        return FixtureCase(
            data["id"],
            data["check"],
            data["provenance"],
            data.get("inputs", {}),
            data["expected"],
            data.get("suite", "examples"),
        )
    except KeyError as error:
        raise ParseError(json.dumps(data, sort_keys=True), 0, error.args)


def load_corpus(directory: pathlib.Path) -> typing.List[FixtureCase]:
    cases = []
    for path in sorted(pathlib.Path(directory).glob("*.json")):
        with path.open(encoding="utf-8") as stream:
            try:
                document = json.load(stream)
            except json.JSONDecodeError as error:
                raise ParseError(str(path), error.pos, ("JSON value",))
        cases.extend(_case(item) for item in document.get("cases", ()))
    logger.debug("loaded %d fixture cases from %s", len(cases), directory)
    return cases


def lookup(cases: typing.Iterable[FixtureCase], case_id: str) -> FixtureCase:
    for case in cases:
        if case.id == case_id:
            return case
    raise UnknownFixture(case_id)


def _group(inputs: Json, key: str = "group") -> GroupSpec:
    return GroupSpec.parse(inputs[key])


def _psi(inputs: Json, key: str = "parameter"):
    return parse_parameter(inputs[key], _group(inputs))


def _ems(inputs: Json, key: str = "ems"):
    if "group" in inputs:
        return parse_ems(inputs[key], _group(inputs))
    return parse_ems(inputs[key], Family(inputs["family"]))


def _pi(inputs: Json, key: str = "ldata"):
    return parse_ldata(inputs[key], Family(inputs["family"]))


def _rho(inputs: Json):
    return parse_label(inputs.get("rho", "tr(1,O)"))


def _order(inputs: Json) -> orders.OrderKind:
    return orders.OrderKind(inputs["order"])


def _candidates(inputs: Json):
    group = _group(inputs)
    return [parse_parameter(text, group) for text in inputs["candidates"]]


def _texts(items) -> typing.List[str]:
    return [str(item) for item in items]


def _check_triangle(inputs: Json) -> Json:
    triangles = vogan.rank_triangles(phi_of(_psi(inputs)))
    return {"triangle": str(triangles[_rho(inputs)])}


def _check_m_matrix(inputs: Json) -> Json:
    grid = [half(value) for value in inputs["grid"]]
    matrix = vogan.m_matrix(half(inputs["x"]), inputs["a"], grid)
    return {"matrix": str(matrix)}


def _check_partitions(inputs: Json) -> Json:
    p_arthur, p_deligne = partitions_of(_psi(inputs))
    return {"arthur": str(p_arthur), "deligne": str(p_deligne)}


def _check_compare(inputs: Json) -> Json:
    group = _group(inputs)
    result = orders.compare(
        parse_parameter(inputs["left"], group),
        parse_parameter(inputs["right"], group),
        _order(inputs),
    )
    return {"result": result.value}


def _check_extremal(inputs: Json) -> Json:
    result = orders.extremal(_candidates(inputs), _order(inputs))
    return {
        "maxima": _texts(result.maxima),
        "minima": _texts(result.minima),
        "unique_max": result.unique_max,
        "unique_min": result.unique_min,
    }


def _check_edges(inputs: Json) -> Json:
    edges = orders.poset_edges(_candidates(inputs), _order(inputs))
    actual = {"edges": [[str(upper), str(lower)] for upper, lower in edges]}
    labels = []
    for upper, lower in edges:
        operator = orders.covering_operator(upper, lower)
        labels.append(None if operator is None else operator.kind.value)
    actual["labels"] = labels
    return actual


def _check_ems_validate(inputs: Json) -> Json:
    report = multisegments.validate_ems(_ems(inputs))
    return {
        "valid": report.valid,
        "sign_product": report.sign_product,
        "p_prime": report.p_prime,
    }


def _ems_result(result) -> Json:
    actual = {"ems": str(result.ems), "group": str(result.ems.group)}
    actual["valid"] = multisegments.validate_ems(result.ems).valid
    return actual


def _step_e_minus(E, rho, inputs):
    result = multisegments.e_minus(E, rho)
    return dict(_ems_result(result), removed=[str(result.removed)], r=result.r)


def _step_e_rho_minus(E, rho, inputs):
    result = multisegments.e_rho_minus(E, rho)
    return dict(_ems_result(result), removed=_texts(result.removed))


def _step_shift_add(mode):
    def _step(E, rho, inputs):
        ems = multisegments.shift_add(
            E, rho, inputs.get("row"), inputs["d"], mode
        )
        return {"ems": str(ems), "group": str(ems.group)}

    return _step


def _step_e_plus_upper(E, rho, inputs):
    result = multisegments.e_plus_upper(
        E, rho, half(inputs["x"]), half(inputs["y"]), inputs["r"]
    )
    return dict(
        _ems_result(result),
        branch=result.branch,
        inserted=_texts(result.inserted),
    )


def _step_e_plus_lower(E, rho, inputs):
    result = multisegments.e_plus_lower(E, rho, half(inputs["x"]), inputs["m"])
    return dict(_ems_result(result), inserted=_texts(result.inserted))


def _step_dual_tempered(E, rho, inputs):
    ems = multisegments.dual_tempered_ems(E)
    return {"ems": str(ems), "group": str(ems.group)}


_EMS_STEPS = {
    "e_minus": _step_e_minus,
    "e_rho_minus": _step_e_rho_minus,
    "shift": _step_shift_add(multisegments.Mode.SHIFT),
    "add": _step_shift_add(multisegments.Mode.ADD),
    "e_plus_upper": _step_e_plus_upper,
    "e_plus_lower": _step_e_plus_lower,
    "dual_tempered": _step_dual_tempered,
}


def _check_ems_step(inputs: Json) -> Json:
    step = _EMS_STEPS[inputs["step"]]
    return step(_ems(inputs), _rho(inputs), inputs)


def _check_tempered_ems(inputs: Json) -> Json:
    E = multisegments.tempered_ems(_pi(inputs))
    return {"ems": str(E), "group": str(E.group)}


def _check_reduce_upper(inputs: Json) -> Json:
    reduction = ldata.reduce_upper(_pi(inputs))
    return {
        "pi_minus": str(reduction.pi_minus),
        "x": str(reduction.x),
        "y": str(reduction.y),
        "r": reduction.r,
    }


def _check_reduce_lower(inputs: Json) -> Json:
    reduction = ldata.reduce_lower(_pi(inputs))
    return {
        "pi_minus": str(reduction.pi_minus),
        "removed": _texts(reduction.removed),
        "x_min": str(reduction.x_min),
    }


def _check_ldata_insert(inputs: Json) -> Json:
    pi = ldata.insert_segments(_pi(inputs), parse_segments(inputs["segments"]))
    return {"ldata": str(pi), "group": str(pi.group)}


def _check_max_b(inputs: Json) -> Json:
    result = ldata.max_b_check(_pi(inputs), _psi(inputs))
    return {"holds": result.holds, "equality": result.equality}


def _step_outcome(result: algorithms.StepResult) -> Json:
    return {
        "arthur_type": result.arthur_type,
        "psi_plus": None if result.psi_plus is None else str(result.psi_plus),
        "ems_plus": None if result.ems_plus is None else str(result.ems_plus),
        "rejected": len(result.failures),
    }


def _step_candidates(inputs: Json):
    group = _group(inputs)
    return [parse_ems(text, group) for text in inputs["candidates"]]


def _check_step_upper(inputs: Json) -> Json:
    return _step_outcome(
        algorithms.upper_step(_pi(inputs), _step_candidates(inputs))
    )


def _check_step_lower(inputs: Json) -> Json:
    return _step_outcome(
        algorithms.lower_step(_pi(inputs), _step_candidates(inputs))
    )


CHECKS = {
    "triangle": _check_triangle,
    "m_matrix": _check_m_matrix,
    "partitions": _check_partitions,
    "compare": _check_compare,
    "extremal": _check_extremal,
    "edges": _check_edges,
    "ems_validate": _check_ems_validate,
    "ems_step": _check_ems_step,
    "tempered_ems": _check_tempered_ems,
    "reduce_upper": _check_reduce_upper,
    "reduce_lower": _check_reduce_lower,
    "ldata_insert": _check_ldata_insert,
    "max_b": _check_max_b,
    "step_upper": _check_step_upper,
    "step_lower": _check_step_lower,
}


def evaluate(case: FixtureCase) -> Json:
    """Actual outputs of a case; domain errors become ``{"error": name}``."""
    try:
        check = CHECKS[case.check]
    except KeyError:
        raise UnknownFixture(case.check)
    try:
        return check(case.inputs)
    except ArthurLabError as error:
        return {"error": type(error).__name__}


def run_case(case: FixtureCase) -> CaseOutcome:
    actual = evaluate(case)
    mismatches = [
        "{}: expected {!r}, got {!r}".format(key, value, actual.get(key))
        for key, value in sorted(case.expected.items())
        if actual.get(key) != value
    ]
    if mismatches:
        logger.debug("fixture %s failed: %s", case.id, "; ".join(mismatches))
    return CaseOutcome(case.id, not mismatches, "; ".join(mismatches))
