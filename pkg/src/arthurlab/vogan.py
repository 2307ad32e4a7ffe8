"""
Orbit closure order on the Vogan variety, computed with rank triangles.

An L-parameter is first stripped of the self-dual part it shares with the
other side, then split per supercuspidal label into unramified pieces.
Each piece lives on an eigenvalue grid ``l_0 < l_1 < ... < l_r`` and is
summarised by its rank triangle ``r[alpha][beta]``, ``1 <= alpha <= beta
<= r``, which counts the summands whose eigenvalues cover the whole run
``l_{alpha-1}, ..., l_beta``.
"""

import collections
import logging
import typing

import attr

from ._error import (
    AssumptionViolated,
    GroupMismatch,
    InfinitesimalMismatch,
    InvariantBroken,
    NegativeMultiplicity,
)
from ._validation import non_negative, type_validator
from .halfint import HalfInt
from .params import (
    LocalLParameter,
    LSummand,
    SupercuspidalLabel,
    infinitesimal_of,
)
from .partitions import OrderResult, Partition

logger = logging.getLogger(__name__)


@attr.s(frozen=True, slots=True)
class UnramifiedLParameter:
    summands = attr.ib(
        type=typing.Tuple[typing.Tuple[HalfInt, int], ...],
        converter=lambda items: tuple(sorted(items)),
        validator=type_validator(),
    )
    grid = attr.ib(type=typing.Tuple[HalfInt, ...], validator=type_validator())

    @property
    def dimension(self) -> int:
        return sum(a for _, a in self.summands)

    def __str__(self):
        return " + ".join(
            "[{}].S{}".format(x, a) for x, a in self.summands
        ) or "()"


@attr.s(frozen=True, slots=True)
class RankTriangle:
    size = attr.ib(type=int, validator=[type_validator(), non_negative()])
    rows = attr.ib(
        type=typing.Tuple[typing.Tuple[int, ...], ...],
        converter=lambda rows: tuple(tuple(row) for row in rows),
        validator=type_validator(),
    )

    def __attrs_post_init__(self):
        shape = [len(row) for row in self.rows]
        if shape != list(range(self.size, 0, -1)):
            raise InvariantBroken("rank triangle shape", self.rows)
        if any(entry < 0 for row in self.rows for entry in row):
            raise InvariantBroken("rank triangle entries >= 0", self.rows)

    @classmethod
    def zero(cls, size: int) -> "RankTriangle":
        return cls(size, [[0] * (size - alpha) for alpha in range(size)])

    @classmethod
    def parse(cls, text: str) -> "RankTriangle":
        text = text.strip()
        if text == "-":
            return cls.zero(0)
        rows = [
            [int(entry) for entry in row.split()] for row in text.split("/")
        ]
        return cls(len(rows), rows)

    def entry(self, alpha: int, beta: int) -> int:
        """Entry for eigenvalues ``l_{alpha-1}`` through ``l_beta``."""
        return self.rows[alpha - 1][beta - alpha]

    def entries(self) -> typing.Iterator[int]:
        for row in self.rows:
            yield from row

    def off_diagonal_sum(self, offset: int) -> int:
        return sum(
            self.entry(alpha, alpha + offset)
            for alpha in range(1, self.size - offset + 1)
        )

    def __add__(self, other):
        if not isinstance(other, RankTriangle):
            return NotImplemented
        if other.size != self.size:
            raise InvariantBroken("rank triangles of one size", other)
        return RankTriangle(
            self.size,
            [
                [left + right for left, right in zip(mine, theirs)]
                for mine, theirs in zip(self.rows, other.rows)
            ],
        )

    def compare(self, other: "RankTriangle") -> OrderResult:
        if other.size != self.size:
            raise InvariantBroken("rank triangles of one size", other)
        pairs = list(zip(self.entries(), other.entries()))
        return OrderResult.from_flags(
            all(left >= right for left, right in pairs),
            all(left <= right for left, right in pairs),
        )

    def __str__(self):
        if self.size == 0:
            return "-"
        return " / ".join(
            " ".join(str(entry) for entry in row) for row in self.rows
        )


_ANY = SupercuspidalLabel("_", 1)


def _partner(summand: LSummand) -> LSummand:
    return LSummand(summand.rho.dual(), -summand.x, summand.a)


def _check_same_lambda(phi1: LocalLParameter, phi2: LocalLParameter):
    if phi1.group != phi2.group:
        raise GroupMismatch(phi1.group, phi2.group)
    lambda1, lambda2 = infinitesimal_of(phi1), infinitesimal_of(phi2)
    if lambda1 != lambda2:
        raise InfinitesimalMismatch(lambda1, lambda2)


def cancel_common(
    phi1: LocalLParameter, phi2: LocalLParameter
) -> typing.Tuple[LocalLParameter, LocalLParameter]:
    """Remove the largest self-dual sub-multiset shared by both sides."""
    _check_same_lambda(phi1, phi2)
    common = phi1.counter() & phi2.counter()
    removed = collections.Counter()
    for summand, copies in common.items():
        partner = _partner(summand)
        if partner == summand:
            removed[summand] = copies
        else:
            removed[summand] = min(copies, common[partner])

    def _reduced(phi):
        return LocalLParameter(
            phi.group, (phi.counter() - removed).elements()
        )

    logger.debug("cancelled common part %s", dict(removed))
    return _reduced(phi1), _reduced(phi2)


def _grid_of(
    exponents: typing.Iterable[HalfInt],
) -> typing.Tuple[HalfInt, ...]:
    grid = tuple(sorted(set(exponents)))
    for low, high in zip(grid, grid[1:]):
        if not (high - low).is_integer:
            raise AssumptionViolated("integral steps", grid)
    if tuple(-value for value in reversed(grid)) != grid:
        raise AssumptionViolated("symmetric grid", grid)
    return grid


def unramified_reduction(
    phi: LocalLParameter,
) -> typing.Dict[SupercuspidalLabel, UnramifiedLParameter]:
    blocks = collections.defaultdict(list)
    for summand in phi.summands:
        blocks[summand.rho].append(summand)

    reduction = {}
    for rho, summands in blocks.items():
        exponents = [x for summand in summands for x in summand.exponents()]
        if not rho.is_self_dual:
            raise AssumptionViolated("self-dual label", sorted(exponents))
        reduction[rho] = UnramifiedLParameter(
            [(summand.x, summand.a) for summand in summands],
            _grid_of(exponents),
        )
    return reduction


def m_matrix(
    x: HalfInt, a: int, grid: typing.Sequence[HalfInt]
) -> RankTriangle:
    size = len(grid) - 1
    if a == 1:
        return RankTriangle.zero(size)
    covered = set(LSummand(_ANY, x, a).exponents())
    rows = []
    for alpha in range(1, size + 1):
        rows.append(
            [
                int(set(grid[alpha - 1 : beta + 1]) <= covered)
                for beta in range(alpha, size + 1)
            ]
        )
    return RankTriangle(size, rows)


def rank_triangle(phi_ur: UnramifiedLParameter) -> RankTriangle:
    triangle = RankTriangle.zero(len(phi_ur.grid) - 1)
    for x, a in phi_ur.summands:
        triangle = triangle + m_matrix(x, a, phi_ur.grid)
    return triangle


def rank_triangles(
    phi: LocalLParameter,
) -> typing.Dict[SupercuspidalLabel, RankTriangle]:
    return {
        rho: rank_triangle(block)
        for rho, block in unramified_reduction(phi).items()
    }


def rank_entry_closed_form(A, B, x, y) -> int:
    """
    Rank entry of ``S_{A+B+1} x S_{A-B+1}`` between eigenvalues ``y < x``.
    """
    A, B, x, y = (HalfInt.of(value) for value in (A, B, x, y))
    count = A + B - max(x, B) - max(-y, B) + 1
    return max(count.as_int(), 0)


def rank_entry_by_count(A, B, x, y) -> int:
    """Count the twists of the summand whose eigenvalues cover ``y..x``."""
    A, B, x, y = (HalfInt.of(value) for value in (A, B, x, y))
    a = (A + B).as_int() + 1
    b = (A - B).as_int() + 1
    if a == 1:
        return 0
    run = []
    value = y
    while value <= x:
        run.append(value)
        value = value + 1
    total = 0
    for t in range(b):
        covered = LSummand(_ANY, HalfInt(b - 1 - 2 * t), a).exponents()
        total += int(set(run) <= set(covered))
    return total


def closure_compare(
    phi1: LocalLParameter, phi2: LocalLParameter
) -> OrderResult:
    """``Greater`` when the orbit of ``phi2`` lies in the closure of the
    orbit of ``phi1``; decided block by block on rank triangles."""
    reduced1, reduced2 = cancel_common(phi1, phi2)
    blocks1 = unramified_reduction(reduced1)
    blocks2 = unramified_reduction(reduced2)
    ge = le = True
    for rho in set(blocks1) | set(blocks2):
        grid = (blocks1.get(rho) or blocks2[rho]).grid
        left = rank_triangle(
            blocks1.get(rho, UnramifiedLParameter((), grid))
        )
        right = rank_triangle(
            blocks2.get(rho, UnramifiedLParameter((), grid))
        )
        result = left.compare(right)
        ge = ge and result.at_least
        le = le and result.flip().at_least
    return OrderResult.from_flags(ge, le)


def partition_from_triangle(r: RankTriangle, N: int) -> Partition:
    multiplicities = {}
    size = r.size
    if size:
        multiplicities[size + 1] = r.off_diagonal_sum(size - 1)
    for part in range(size, 1, -1):
        multiplicities[part] = r.off_diagonal_sum(part - 2) - sum(
            (larger - part + 1) * multiplicities[larger]
            for larger in range(part + 1, size + 2)
        )
    multiplicities[1] = N - sum(
        part * count for part, count in multiplicities.items()
    )
    for part, count in sorted(multiplicities.items(), reverse=True):
        if count < 0:
            raise NegativeMultiplicity(part, count)
    return Partition.from_multiplicities(multiplicities)
