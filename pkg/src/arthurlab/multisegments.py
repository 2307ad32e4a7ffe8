"""
Extended multi-segments: per label, an ordered list of rows
``([A, B], l, eta)``.

A row stands for the summand ``rho x S_{A+B+1} x S_{A-B+1}`` of the
parameter together with the data ``(l, eta)`` that picks a member of its
packet. Rows are never reordered here except between identical segments.
"""

import enum
import logging
import typing

import attr

from ._error import (
    DecompositionFailed,
    HypothesisFailed,
    InvariantBroken,
    LZero,
    NotTemperedAllPlus,
    NoWideRow,
    PPrimeViolated,
    RowExchangeRequired,
)
from ._validation import type_validator, unit_sign
from .halfint import HalfInt
from .ldata import LanglandsData, Segment
from .params import (
    ArthurSummand,
    Family,
    GroupSpec,
    LocalArthurParameter,
    SupercuspidalLabel,
    label_key,
)

logger = logging.getLogger(__name__)


class Mode(enum.Enum):
    SHIFT = "shift"
    ADD = "add"


@attr.s(frozen=True, slots=True)
class ExtendedSegment:
    A = attr.ib(type=HalfInt, converter=HalfInt.of, validator=type_validator())
    B = attr.ib(type=HalfInt, converter=HalfInt.of, validator=type_validator())
    l = attr.ib(type=int, validator=type_validator())  # noqa: E741
    eta = attr.ib(
        type=int, default=1, validator=[type_validator(), unit_sign()]
    )

    def __attrs_post_init__(self):
        # weak equivalence: eta carries no information once 2l = b
        if 2 * self.l == self.b and self.eta != 1:
            object.__setattr__(self, "eta", 1)

    @property
    def b(self) -> int:
        return (self.A.doubled - self.B.doubled) // 2 + 1

    @property
    def segment(self) -> typing.Tuple[HalfInt, HalfInt]:
        return (self.A, self.B)

    def problems(self) -> typing.List[str]:
        problems = []
        if not (self.A - self.B).is_integer or self.A < self.B:
            problems.append("width")
        if self.A + self.B < 0:
            problems.append("a_plus_b")
        if self.l < 0 or 2 * self.l > self.b:
            problems.append("l_range")
        return problems

    def sign(self) -> int:
        return (-1) ** (self.b // 2 + self.l) * self.eta ** self.b

    def summand(self, rho: SupercuspidalLabel) -> ArthurSummand:
        return ArthurSummand.from_ab(rho, self.A, self.B)

    def __str__(self):
        return "([{},{}],{},{})".format(
            self.A, self.B, self.l, "+1" if self.eta > 0 else "-1"
        )


Rows = typing.Tuple[ExtendedSegment, ...]


@attr.s(frozen=True, slots=True)
class EmsBlock:
    rho = attr.ib(type=SupercuspidalLabel, validator=type_validator())
    rows = attr.ib(
        type=Rows, converter=tuple, validator=type_validator()
    )

    def __str__(self):
        return "{}: {}".format(
            self.rho, "; ".join(str(row) for row in self.rows)
        )


def _sorted_blocks(blocks) -> typing.Tuple[EmsBlock, ...]:
    blocks = [block for block in blocks if block.rows]
    return tuple(sorted(blocks, key=lambda block: label_key(block.rho)))


@attr.s(frozen=True, slots=True)
class ExtendedMultiSegment:
    group = attr.ib(type=GroupSpec, validator=type_validator())
    blocks = attr.ib(
        type=typing.Tuple[EmsBlock, ...],
        converter=_sorted_blocks,
        validator=type_validator(),
    )

    @classmethod
    def build(
        cls, family: Family, blocks: typing.Iterable[EmsBlock]
    ) -> "ExtendedMultiSegment":
        """Assemble blocks, sizing the group from their parameter."""
        blocks = list(blocks)
        dimension = sum(
            block.rho.dim * ((row.A + row.B).as_int() + 1) * row.b
            for block in blocks
            for row in block.rows
        )
        return cls(GroupSpec.from_standard_dim(family, dimension), blocks)

    def rhos(self) -> typing.List[SupercuspidalLabel]:
        return [block.rho for block in self.blocks]

    def block(self, rho: SupercuspidalLabel) -> Rows:
        for block in self.blocks:
            if block.rho == rho:
                return block.rows
        return ()

    def with_block(
        self, rho: SupercuspidalLabel, rows: typing.Iterable[ExtendedSegment]
    ) -> "ExtendedMultiSegment":
        others = [block for block in self.blocks if block.rho != rho]
        return ExtendedMultiSegment.build(
            self.group.family, others + [EmsBlock(rho, rows)]
        )

    def __str__(self):
        return " | ".join(str(block) for block in self.blocks) or "()"


@attr.s(frozen=True, slots=True)
class EmsReport:
    row_problems = attr.ib(type=typing.Tuple[typing.Tuple[str, int, str], ...])
    admissible = attr.ib(type=bool)
    p_prime = attr.ib(type=bool)
    sign_product = attr.ib(type=int)
    good_parity = attr.ib(type=bool)
    dimension_ok = attr.ib(type=bool)

    @property
    def valid(self) -> bool:
        return (
            not self.row_problems
            and self.admissible
            and self.sign_product == 1
            and self.good_parity
            and self.dimension_ok
        )


@attr.s(frozen=True, slots=True)
class EMinusResult:
    ems = attr.ib(type=ExtendedMultiSegment)
    removed = attr.ib(type=Segment)
    r = attr.ib(type=int)


@attr.s(frozen=True, slots=True)
class ERhoMinusResult:
    ems = attr.ib(type=ExtendedMultiSegment)
    removed = attr.ib(type=typing.Tuple[Segment, ...])


@attr.s(frozen=True, slots=True)
class EPlusResult:
    ems = attr.ib(type=ExtendedMultiSegment)
    branch = attr.ib(type=str)
    # segments the construction adds to the L-data
    inserted = attr.ib(type=typing.Tuple[Segment, ...])


def _admissible(rows: Rows) -> bool:
    return not any(
        earlier.A > later.A and earlier.B > later.B
        for index, earlier in enumerate(rows)
        for later in rows[index + 1 :]
    )


def _p_prime(rows: Rows) -> bool:
    return all(
        earlier.B <= later.B for earlier, later in zip(rows, rows[1:])
    )


def validate_ems(E: ExtendedMultiSegment) -> EmsReport:
    problems = []
    sign_product = 1
    summands = []
    for block in E.blocks:
        for index, row in enumerate(block.rows):
            for problem in row.problems():
                problems.append((str(block.rho), index, problem))
            sign_product *= row.sign()
            if not row.problems():
                summands.append(row.summand(block.rho))
    dimension = sum(summand.dimension for summand in summands)
    return EmsReport(
        tuple(problems),
        all(_admissible(block.rows) for block in E.blocks),
        all(_p_prime(block.rows) for block in E.blocks),
        sign_product,
        all(summand.has_good_parity(E.group) for summand in summands),
        not problems and dimension == E.group.standard_dim,
    )


def psi_of_ems(E: ExtendedMultiSegment) -> LocalArthurParameter:
    return LocalArthurParameter(
        E.group,
        [row.summand(block.rho) for block in E.blocks for row in block.rows],
    )


def _moved(row: ExtendedSegment, d: int, mode: Mode) -> ExtendedSegment:
    if mode is Mode.SHIFT:
        return attr.evolve(row, A=row.A + d, B=row.B + d)
    return attr.evolve(row, A=row.A + d, B=row.B - d, l=row.l + d)


def _transform(
    rows: Rows, indices: typing.Iterable[int], d: int, mode: Mode
) -> typing.List[ExtendedSegment]:
    indices = set(indices)
    result = []
    for index, row in enumerate(rows):
        if index not in indices:
            result.append(row)
            continue
        moved = _moved(row, d, mode)
        if mode is Mode.ADD and moved.b == 0 and moved.l == 0:
            continue
        for problem in moved.problems():
            raise InvariantBroken(problem, moved)
        result.append(moved)
    return result


def shift_add(
    E: ExtendedMultiSegment,
    rho: SupercuspidalLabel,
    j: typing.Optional[int],
    d: int,
    mode: Mode,
) -> ExtendedMultiSegment:
    """
    ``sh^d`` moves ``[A, B]`` to ``[A+d, B+d]``; ``add^d`` widens it to
    ``[A+d, B-d]`` and raises ``l`` by ``d``. ``j=None`` acts on the whole
    block. Rows that ``add`` shrinks to nothing are dropped.
    """
    rows = E.block(rho)
    indices = range(len(rows)) if j is None else [j]
    for index in indices:
        if not 0 <= index < len(rows):
            raise InvariantBroken("row index inside the block", index)
    return E.with_block(rho, _transform(rows, indices, d, Mode(mode)))


def _widest(rows: Rows, rho) -> int:
    widths = [row.b for row in rows]
    if not widths or max(widths) <= 1:
        raise NoWideRow(rho)
    return max(widths)


def e_minus(E: ExtendedMultiSegment, rho: SupercuspidalLabel) -> EMinusResult:
    """Shrink every copy of the first widest segment by one on both ends."""
    rows = E.block(rho)
    if not _p_prime(rows):
        raise PPrimeViolated(rho)
    width = _widest(rows, rho)
    start, first = next(
        (index, row) for index, row in enumerate(rows) if row.b == width
    )
    # the chosen row must come last among the rows sharing its B
    for later in rows[start + 1 :]:
        if later.B == first.B and later.A < first.A:
            raise RowExchangeRequired(rho, later)
    targets = [i for i, row in enumerate(rows) if row.segment == first.segment]
    ems = E.with_block(rho, _transform(rows, targets, -1, Mode.ADD))
    removed = Segment(rho, first.B, first.A)
    logger.debug("e_minus removes %d x %s", len(targets), removed)
    return EMinusResult(ems, removed, len(targets))


def e_rho_minus(
    E: ExtendedMultiSegment, rho: SupercuspidalLabel
) -> ERhoMinusResult:
    """Shrink every wide row sitting at the lowest ``B`` among wide rows."""
    rows = E.block(rho)
    if not _p_prime(rows):
        raise PPrimeViolated(rho)
    wide = [row for row in rows if row.A != row.B]
    if not wide:
        raise NoWideRow(rho)
    lowest = min(row.B for row in wide)
    second = [
        index
        for index, row in enumerate(rows)
        if row.B == lowest and row.A != row.B
    ]
    for index in second:
        if rows[index].l < 1:
            raise LZero(rho, rows[index])
    removed = tuple(Segment(rho, rows[i].B, rows[i].A) for i in second)
    ems = E.with_block(rho, _transform(rows, second, -1, Mode.ADD))
    return ERhoMinusResult(ems, removed)


def _require(condition: bool, bullet: str, detail):
    if not condition:
        raise HypothesisFailed(bullet, detail)


def e_plus_upper(
    E: ExtendedMultiSegment,
    rho: SupercuspidalLabel,
    x: HalfInt,
    y: HalfInt,
    r: int,
) -> EPlusResult:
    """
    Rebuild the segment ``D(rho)[x,-y]`` (``r`` copies) on top of ``E``.

    When ``y = x + 1`` new rows ``([y, x], 1, 1)`` are inserted, otherwise
    the ``r`` rows equal to ``[y-1, x+1]`` are widened with ``add^1``.
    """
    x, y = HalfInt.of(x), HalfInt.of(y)
    rows = E.block(rho)
    inserted = tuple([Segment(rho, x, y)] * r)
    _require((y - x).is_integer and y > x, "y - x in 1, 2, ...", (x, y))
    gap = (y - x).as_int() - 1
    branch = "insert" if gap == 0 else "add"
    if r == 0:
        return EPlusResult(E, branch, ())
    _require(_p_prime(rows), "P'", E)

    if gap == 0:
        _require(
            all(row.b <= 2 for row in rows), "b_rho <= 2", str(E)
        )
        _require(
            all((y - row.A).is_integer for row in rows),
            "y - A integral",
            str(E),
        )
        summand = ArthurSummand(rho, (2 * y).as_int(), 2)
        _require(
            summand not in psi_of_ems(E).summands,
            "psi_E has no {}".format(summand),
            str(E),
        )
        _require(
            all(row.A == row.B for row in rows if row.B <= x),
            "A = B for rows with B <= {}".format(x),
            str(E),
        )
        position = next(
            (index for index, row in enumerate(rows) if row.B > x), len(rows)
        )
        new_rows = (
            list(rows[:position])
            + [ExtendedSegment(y, x, 1, 1)] * r
            + list(rows[position:])
        )
        return EPlusResult(E.with_block(rho, new_rows), branch, inserted)

    target = (y - 1, x + 1)
    first = next(
        (index for index, row in enumerate(rows) if row.segment == target),
        None,
    )
    _require(first is not None, "(ii) rows equal to [y-1,x+1]", str(E))
    chosen = list(range(first, first + r))
    _require(
        chosen[-1] < len(rows)
        and all(rows[index].segment == target for index in chosen),
        "(i) {} adjacent copies".format(r),
        str(E),
    )
    _require(
        all(row.B != target[1] for row in rows[:first]),
        "(iii) first row with its B",
        str(E),
    )
    bound = rows[first].b + 2
    _require(
        all(row.b <= bound for row in rows)
        and all(row.b != bound for row in rows[:first]),
        "(iv) width bound",
        str(E),
    )
    ems = E.with_block(rho, _transform(rows, chosen, 1, Mode.ADD))
    return EPlusResult(ems, branch, inserted)


def e_plus_lower(
    E: ExtendedMultiSegment, rho: SupercuspidalLabel, x: HalfInt, m: int
) -> EPlusResult:
    """
    Rebuild the segments starting at ``x``: insert ``m`` rows
    ``([x+1, x], 1, 1)`` and widen every row starting at ``x + 1``.
    """
    x = HalfInt.of(x)
    rows = E.block(rho)
    first, second, third = [], [], []
    for row in rows:
        if row.B <= x:
            if row.A != row.B or second or third:
                raise DecompositionFailed(rho, x)
            first.append(row)
        elif row.B == x + 1:
            if third:
                raise DecompositionFailed(rho, x)
            second.append(row)
        else:
            third.append(row)

    widened = _transform(tuple(second), range(len(second)), 1, Mode.ADD)
    new_rows = first + [ExtendedSegment(x + 1, x, 1, 1)] * m + widened + third
    inserted = [Segment(rho, x, x + 1)] * m + [
        Segment(rho, row.B, row.A) for row in widened
    ]
    return EPlusResult(
        E.with_block(rho, new_rows), "lower", tuple(inserted)
    )


def tempered_ems(pi: LanglandsData) -> ExtendedMultiSegment:
    """Rows ``([e, e], 0, sign)`` of a tempered representation, ``e``
    non-decreasing."""
    if not pi.is_tempered:
        raise InvariantBroken("tempered L-data", pi)
    per_rho = {}
    for entry in pi.tempered:
        per_rho.setdefault(entry.rho, []).append(entry)
    blocks = [
        EmsBlock(
            rho,
            [
                ExtendedSegment(entry.exponent, entry.exponent, 0, entry.sign)
                for entry in sorted(entries, key=lambda entry: entry.a)
            ],
        )
        for rho, entries in per_rho.items()
    ]
    return ExtendedMultiSegment(pi.group, blocks)


def dual_tempered_ems(E: ExtendedMultiSegment) -> ExtendedMultiSegment:
    blocks = []
    for block in E.blocks:
        rows = []
        for row in block.rows:
            if row.A != row.B or row.l != 0 or row.eta != 1:
                raise NotTemperedAllPlus(row)
            rows.append(ExtendedSegment(row.A, -row.A, row.A.ceil(), 1))
        blocks.append(EmsBlock(block.rho, reversed(rows)))
    return ExtendedMultiSegment(E.group, blocks)
