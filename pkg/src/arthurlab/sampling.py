"""
Seeded random objects for the randomized checks.

Every generator takes a :class:`random.Random` so that a trial is fully
determined by its seed; hypothesis hands the same objects to the property
tests through ``st.randoms()``.
"""

import logging
import random
import typing

from .halfint import HalfInt
from .ldata import LanglandsData, Segment, TemperedEntry
from .multisegments import (
    EmsBlock,
    ExtendedMultiSegment,
    ExtendedSegment,
    validate_ems,
)
from .params import (
    TRIVIAL,
    ArthurSummand,
    Family,
    GroupSpec,
    LocalArthurParameter,
    LocalLParameter,
    LSummand,
    SelfDualType,
    SupercuspidalLabel,
)

logger = logging.getLogger(__name__)

LABELS = (
    TRIVIAL,
    SupercuspidalLabel("sgn", 1, SelfDualType.ORTHOGONAL),
    SupercuspidalLabel("sp", 2, SelfDualType.SYMPLECTIC),
)

MAX_DIMENSION = 30
MAX_SUMMANDS = 6
ATTEMPTS = 1000


def _family(rng: random.Random) -> Family:
    return rng.choice(list(Family))


def _good_summand(
    rng: random.Random, rho: SupercuspidalLabel, group_family: Family, room: int
) -> typing.Optional[ArthurSummand]:
    dual_type = GroupSpec(group_family, 0).dual_type
    options = [
        ArthurSummand(rho, a, b)
        for a in range(1, room + 1)
        for b in range(1, room // a + 1)
        if rho.dim * a * b <= room
        and ArthurSummand(rho, a, b).selfdual_type() is dual_type
    ]
    return rng.choice(options) if options else None


def random_parameter(
    rng: random.Random,
    family: typing.Optional[Family] = None,
    max_dimension: int = MAX_DIMENSION,
    max_summands: int = MAX_SUMMANDS,
    max_labels: int = len(LABELS),
) -> LocalArthurParameter:
    """A good parity parameter of dimension at most ``max_dimension``."""
    family = family or _family(rng)
    labels = rng.sample(LABELS, rng.randint(1, max_labels))
    if family is Family.SP and all(rho.dim % 2 == 0 for rho in labels):
        # an odd dimension needs a summand of odd dimension
        labels.append(TRIVIAL)
    for _ in range(ATTEMPTS):
        summands = []
        room = max_dimension
        for _ in range(rng.randint(1, max_summands)):
            summand = _good_summand(rng, rng.choice(labels), family, room)
            if summand is None:
                break
            summands.append(summand)
            room -= summand.dimension
        dimension = sum(summand.dimension for summand in summands)
        if not summands or (family is Family.SP and dimension % 2 == 0):
            continue
        return LocalArthurParameter(
            GroupSpec.from_standard_dim(family, dimension), summands
        )
    fallback = _smallest_parameter(family)
    logger.warning(
        "no parameter drawn in %d attempts, using %s", ATTEMPTS, fallback
    )
    return fallback


def _smallest_parameter(family: Family) -> LocalArthurParameter:
    a = 1 if family is Family.SP else 2
    summand = ArthurSummand(TRIVIAL, a, 1)
    return LocalArthurParameter(
        GroupSpec.from_standard_dim(family, a), [summand]
    )


def random_unramified(
    rng: random.Random, max_exponent: int = 4, max_summands: int = 4
) -> LocalLParameter:
    """A self-dual unramified L-parameter of the trivial label on an
    integral or half-integral grid."""
    offset = rng.choice((0, 1))
    summands = []
    for _ in range(rng.randint(1, max_summands)):
        a = rng.randint(1, 2 * max_exponent + 1)
        # exponents of the summand stay within [-max_exponent, max_exponent]
        low = -2 * max_exponent + (a - 1)
        choices = [
            doubled
            for doubled in range(low, -low + 1)
            if (doubled + a - 1 + offset) % 2 == 0
        ]
        if not choices:
            continue
        x = HalfInt(rng.choice(choices))
        summands.append(LSummand(TRIVIAL, x, a))
        summands.append(LSummand(TRIVIAL, -x, a))
    if not summands:
        summands = [LSummand(TRIVIAL, 0, 1)]
    dimension = sum(summand.dimension for summand in summands)
    family = Family.SP if dimension % 2 else Family.SO
    return LocalLParameter(
        GroupSpec.from_standard_dim(family, dimension), summands
    )


def _random_rows(
    rng: random.Random, family: Family, count: int, max_a: int
) -> typing.List[ExtendedSegment]:
    # integral A gives a + b even, the orthogonal parity for Sp
    offset = 0 if family is Family.SP else 1
    rows = []
    for _ in range(count):
        A = HalfInt(2 * rng.randint(0, max_a) + offset)
        B = HalfInt(2 * rng.randint(-A.floor(), A.floor()) + offset)
        b = (A - B).as_int() + 1
        rows.append(
            ExtendedSegment(A, B, rng.randint(0, b // 2), rng.choice((1, -1)))
        )
    rows.sort(key=lambda row: (row.B, row.A))
    return rows


def _fix_sign(rng: random.Random, rows: typing.List[ExtendedSegment]) -> bool:
    flippable = [
        index
        for index, row in enumerate(rows)
        if row.b % 2 and 2 * row.l < row.b
    ]
    if flippable:
        index = rng.choice(flippable)
        row = rows[index]
        rows[index] = ExtendedSegment(row.A, row.B, row.l, -row.eta)
        return True
    return False


def random_ems(
    rng: random.Random,
    family: typing.Optional[Family] = None,
    max_rows: int = 4,
    max_a: int = 3,
) -> ExtendedMultiSegment:
    """A valid extended multi-segment of the trivial label satisfying (P')."""
    family = family or _family(rng)
    for _ in range(ATTEMPTS):
        rows = _random_rows(rng, family, rng.randint(1, max_rows), max_a)
        dimension = sum(
            (row.A + row.B).as_int() + 1 for row in rows for _ in range(row.b)
        )
        if family is Family.SP and dimension % 2 == 0:
            continue
        E = ExtendedMultiSegment.build(family, [EmsBlock(TRIVIAL, rows)])
        if validate_ems(E).sign_product != 1 and not _fix_sign(rng, rows):
            continue
        E = ExtendedMultiSegment.build(family, [EmsBlock(TRIVIAL, rows)])
        if validate_ems(E).valid:
            return E
    A = HalfInt(0) if family is Family.SP else HalfInt(1)
    return ExtendedMultiSegment.build(
        family, [EmsBlock(TRIVIAL, [ExtendedSegment(A, A, 0, 1)])]
    )


def random_ldata(
    rng: random.Random, max_segments: int = 3, max_tempered: int = 3
) -> LanglandsData:
    labels = LABELS[:2]
    segments = []
    for _ in range(rng.randint(0, max_segments)):
        y = HalfInt(rng.randint(1, 8))
        length = rng.randint(1, y.doubled)
        x = HalfInt(2 * (length - 1)) - y
        segments.append(Segment(rng.choice(labels), x, y))
    tempered = [
        TemperedEntry(
            rng.choice(labels), rng.randint(1, 6), rng.choice((1, -1))
        )
        for _ in range(rng.randint(0, max_tempered))
    ]
    dimension = sum(entry.dimension for entry in tempered)
    family = Family.SP if dimension % 2 else Family.SO
    return LanglandsData(family, segments, tempered)
