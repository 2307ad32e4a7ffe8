"""
One step of either Arthur type test.

Both steps strip segments off ``pi``, look for an extended multi-segment of
the smaller representation whose parameter passes the membership
conditions, and rebuild an extended multi-segment of ``pi`` from it. The
candidates are certified members of the smaller representation's packet;
that certification comes from outside (the fixture corpus).
"""

import logging
import typing

import attr

from ._error import ArthurLabError
from .ldata import (
    LanglandsData,
    LowerReduction,
    UpperReduction,
    predicate_lower,
    predicate_upper,
    reduce_lower,
    reduce_upper,
)
from .multisegments import (
    ExtendedMultiSegment,
    e_plus_lower,
    e_plus_upper,
    psi_of_ems,
)
from .params import LocalArthurParameter

logger = logging.getLogger(__name__)


@attr.s(frozen=True, slots=True)
class StepResult:
    reduction = attr.ib(type=typing.Union[UpperReduction, LowerReduction])
    arthur_type = attr.ib(type=bool)
    candidate = attr.ib(type=typing.Optional[ExtendedMultiSegment])
    psi_plus = attr.ib(type=typing.Optional[LocalArthurParameter])
    ems_plus = attr.ib(type=typing.Optional[ExtendedMultiSegment])
    # one entry per rejected candidate
    failures = attr.ib(type=typing.Tuple[typing.Tuple[str, ...], ...])


def upper_step(
    pi: LanglandsData, candidates: typing.Iterable[ExtendedMultiSegment]
) -> StepResult:
    reduction = reduce_upper(pi)
    rho, x, y, r = reduction.rho, reduction.x, reduction.y, reduction.r
    failures = []
    for E in candidates:
        result = predicate_upper(psi_of_ems(E), rho, x, y, r)
        if not result.ok:
            failures.append(result.failures)
            continue
        try:
            ems_plus = e_plus_upper(E, rho, x, y, r).ems
        except ArthurLabError as error:
            logger.info("E+ not built from %s: %s", E, error)
            ems_plus = None
        return StepResult(
            reduction, True, E, result.psi_plus, ems_plus, tuple(failures)
        )
    return StepResult(reduction, False, None, None, None, tuple(failures))


def lower_step(
    pi: LanglandsData, candidates: typing.Iterable[ExtendedMultiSegment]
) -> StepResult:
    reduction = reduce_lower(pi)
    x = reduction.x_min
    m = sum(1 for segment in reduction.removed if segment.y == x + 1)
    failures = []
    for E in candidates:
        result = predicate_lower(psi_of_ems(E), reduction.removed, x)
        if not result.ok:
            failures.append(result.failures)
            continue
        try:
            ems_plus = e_plus_lower(E, reduction.rho, x, m).ems
        except ArthurLabError as error:
            logger.info("E_+ not built from %s: %s", E, error)
            ems_plus = None
        return StepResult(
            reduction, True, E, result.psi_plus, ems_plus, tuple(failures)
        )
    return StepResult(reduction, False, None, None, None, tuple(failures))
