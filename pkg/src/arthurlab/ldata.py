"""
Langlands data and the parameter-level steps of the Arthur type tests.

A representation is recorded as ``L(D[x_1,-y_1], ...; pi(phi, eps))``:
segments ``D(rho)[x,-y]`` sorted by ``x - y`` and a tempered part given as
signed summands ``rho x S_a``.
"""

import collections
import logging
import typing

import attr

from ._error import InvariantBroken, TemperedData
from ._validation import positive, type_validator, unit_sign
from .halfint import HalfInt
from .params import (
    ArthurSummand,
    Family,
    GroupSpec,
    LocalArthurParameter,
    SupercuspidalLabel,
    label_key,
    remove_summands,
)

logger = logging.getLogger(__name__)


@attr.s(frozen=True, slots=True)
class Segment:
    """The segment ``D(rho)[x, -y]``."""

    rho = attr.ib(type=SupercuspidalLabel, validator=type_validator())
    x = attr.ib(type=HalfInt, converter=HalfInt.of, validator=type_validator())
    y = attr.ib(type=HalfInt, converter=HalfInt.of, validator=type_validator())

    @property
    def length(self) -> int:
        return (self.x + self.y).as_int() + 1

    @property
    def dimension(self) -> int:
        return 2 * self.rho.dim * self.length

    def problems(self) -> typing.List[str]:
        problems = []
        if not (self.x + self.y).is_integer or self.x + self.y < 0:
            problems.append("x + y is a non-negative integer")
        if self.x - self.y >= 0:
            problems.append("x - y < 0")
        return problems

    def key(self):
        return (self.x - self.y, self.x, label_key(self.rho))

    def __str__(self):
        return "D({})[{},{}]".format(self.rho, self.x, -self.y)


@attr.s(frozen=True, slots=True)
class TemperedEntry:
    rho = attr.ib(type=SupercuspidalLabel, validator=type_validator())
    a = attr.ib(type=int, validator=[type_validator(), positive()])
    sign = attr.ib(
        type=int, default=1, validator=[type_validator(), unit_sign()]
    )

    @property
    def exponent(self) -> HalfInt:
        return HalfInt(self.a - 1)

    @property
    def dimension(self) -> int:
        return self.rho.dim * self.a

    def key(self):
        return (label_key(self.rho), self.a, -self.sign)

    def __str__(self):
        return "{}[{}]{}".format(
            self.rho, self.exponent, "+" if self.sign > 0 else "-"
        )


def _sorted(items) -> tuple:
    return tuple(sorted(items, key=lambda item: item.key()))


@attr.s(frozen=True, slots=True)
class LanglandsData:
    family = attr.ib(type=Family, validator=type_validator())
    segments = attr.ib(
        type=typing.Tuple[Segment, ...],
        converter=_sorted,
        validator=type_validator(),
    )
    tempered = attr.ib(
        type=typing.Tuple[TemperedEntry, ...],
        default=(),
        converter=_sorted,
        validator=type_validator(),
    )

    def __attrs_post_init__(self):
        for segment in self.segments:
            for problem in segment.problems():
                raise InvariantBroken(problem, segment)

    @property
    def dimension(self) -> int:
        return sum(item.dimension for item in self.segments + self.tempered)

    @property
    def group(self) -> GroupSpec:
        return GroupSpec.from_standard_dim(self.family, self.dimension)

    @property
    def is_tempered(self) -> bool:
        return not self.segments

    def segments_of(self, rho: SupercuspidalLabel) -> typing.List[Segment]:
        return [segment for segment in self.segments if segment.rho == rho]

    def good_parity(self) -> bool:
        dual_type = self.group.dual_type
        summands = [
            ArthurSummand(segment.rho, segment.length, 1)
            for segment in self.segments
        ] + [ArthurSummand(entry.rho, entry.a, 1) for entry in self.tempered]
        return all(
            summand.selfdual_type() is dual_type for summand in summands
        )

    def evolve(self, segments) -> "LanglandsData":
        return LanglandsData(self.family, segments, self.tempered)

    def __str__(self):
        return "L({}; pi({}))".format(
            ", ".join(str(segment) for segment in self.segments),
            ", ".join(str(entry) for entry in self.tempered),
        )


@attr.s(frozen=True, slots=True)
class UpperReduction:
    pi_minus = attr.ib(type=LanglandsData)
    rho = attr.ib(type=SupercuspidalLabel)
    x = attr.ib(type=HalfInt)
    y = attr.ib(type=HalfInt)
    r = attr.ib(type=int)


@attr.s(frozen=True, slots=True)
class LowerReduction:
    pi_minus = attr.ib(type=LanglandsData)
    rho = attr.ib(type=SupercuspidalLabel)
    removed = attr.ib(type=typing.Tuple[Segment, ...])
    x_min = attr.ib(type=HalfInt)


@attr.s(frozen=True, slots=True)
class MaxBCheck:
    holds = attr.ib(type=bool)
    equality = attr.ib(type=bool)


@attr.s(frozen=True, slots=True)
class PredicateResult:
    ok = attr.ib(type=bool)
    psi_plus = attr.ib(type=typing.Optional[LocalArthurParameter])
    failures = attr.ib(type=typing.Tuple[str, ...], default=())


def _pick_rho(pi: LanglandsData, rho) -> SupercuspidalLabel:
    if pi.is_tempered:
        raise TemperedData(pi)
    return pi.segments[0].rho if rho is None else rho


def insert_segments(
    pi: LanglandsData, segments: typing.Iterable[Segment]
) -> LanglandsData:
    return pi.evolve(pi.segments + tuple(segments))


def remove_segments(
    pi: LanglandsData, segments: typing.Iterable[Segment]
) -> LanglandsData:
    remaining = collections.Counter(pi.segments)
    for segment in segments:
        if remaining[segment] == 0:
            raise InvariantBroken("segment present in the L-data", segment)
        remaining[segment] -= 1
    return pi.evolve(remaining.elements())


def reduce_upper(
    pi: LanglandsData, rho: typing.Optional[SupercuspidalLabel] = None
) -> UpperReduction:
    """Strip every copy of the segment with the most negative ``x - y``
    (smallest ``x`` on ties)."""
    rho = _pick_rho(pi, rho)
    candidates = pi.segments_of(rho)
    if not candidates:
        raise TemperedData(pi)
    lowest = min(segment.x - segment.y for segment in candidates)
    x = min(
        segment.x for segment in candidates if segment.x - segment.y == lowest
    )
    target = Segment(rho, x, x - lowest)
    r = pi.segments.count(target)
    logger.debug("upper reduction removes %d x %s", r, target)
    return UpperReduction(
        remove_segments(pi, [target] * r), rho, target.x, target.y, r
    )


def reduce_lower(
    pi: LanglandsData, rho: typing.Optional[SupercuspidalLabel] = None
) -> LowerReduction:
    rho = _pick_rho(pi, rho)
    candidates = pi.segments_of(rho)
    if not candidates:
        raise TemperedData(pi)
    x_min = min(segment.x for segment in candidates)
    removed = tuple(segment for segment in candidates if segment.x == x_min)
    logger.debug("lower reduction removes %s", ", ".join(map(str, removed)))
    return LowerReduction(remove_segments(pi, removed), rho, removed, x_min)


def max_b_check(pi: LanglandsData, psi: LocalArthurParameter) -> MaxBCheck:
    """
    Compare ``1 - max b`` of ``psi`` with ``min(x - y)`` of ``pi`` for each
    label. The inequality is necessary for ``psi`` to contain ``pi``, the
    equality for ``psi`` to be its maximal parameter.
    """
    rhos = {segment.rho for segment in pi.segments} | set(psi.rhos())
    holds = equality = True
    for rho in rhos:
        widest = max((s.b for s in psi.block(rho)), default=1)
        lowest = min(
            [segment.x - segment.y for segment in pi.segments_of(rho)]
            + [HalfInt(0)]
        )
        holds = holds and 1 - widest <= lowest
        equality = equality and 1 - widest == lowest
    return MaxBCheck(holds, equality)


def predicate_upper(
    psi: LocalArthurParameter,
    rho: SupercuspidalLabel,
    x: HalfInt,
    y: HalfInt,
    r: int,
) -> PredicateResult:
    """
    Parameter-level conditions for ``psi`` of ``pi^{rho,-}`` to extend to
    ``pi`` by putting back ``r`` copies of ``D(rho)[x,-y]``.
    """
    x, y = HalfInt.of(x), HalfInt.of(y)
    a = (x + y).as_int() + 1
    gap = (y - x).as_int()
    failures = []
    shrunk = ArthurSummand(rho, a, gap - 1) if gap > 1 else None
    if shrunk is not None and psi.counter()[shrunk] < r:
        failures.append("contains {} copies of {}".format(r, shrunk))
    for summand in psi.block(rho):
        if summand.b > gap + 1:
            failures.append("{} has b <= {}".format(summand, gap + 1))
        elif summand.b == gap + 1 and summand.a <= a:
            failures.append("{} has a > {}".format(summand, a))
    if failures:
        return PredicateResult(False, None, tuple(failures))

    remaining = remove_summands(psi, [shrunk] * r if shrunk else [])
    psi_plus = psi.with_summands(
        remaining + [ArthurSummand(rho, a, gap + 1)] * r
    )
    return PredicateResult(True, psi_plus)


def predicate_lower(
    psi: LocalArthurParameter,
    removed: typing.Sequence[Segment],
    x_min: HalfInt,
) -> PredicateResult:
    """
    Parameter-level conditions for ``psi`` of ``pi_{rho,-}`` to extend to
    ``pi`` by putting back the segments starting at ``x_min``.
    """
    if not removed:
        return PredicateResult(True, psi)
    x_min = HalfInt.of(x_min)
    rho = removed[0].rho
    minus = []
    plus = []
    for segment in removed:
        a = segment.length
        b = (segment.y - segment.x).as_int()
        if b - 1 > 0:
            minus.append(ArthurSummand(segment.rho, a, b - 1))
        plus.append(ArthurSummand(segment.rho, a, b + 1))

    failures = []
    remaining = remove_summands(psi, minus)
    if remaining is None:
        failures.append(
            "contains {}".format(" + ".join(str(item) for item in minus))
        )
    for summand in psi.block(rho):
        if summand.a - summand.b <= 2 * x_min and summand.b != 1:
            failures.append("{} has b = 1".format(summand))
    if failures:
        return PredicateResult(False, None, tuple(failures))
    return PredicateResult(True, psi.with_summands(remaining + plus))
