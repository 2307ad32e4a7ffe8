"""Partitions of integers and the dominance order."""

import enum
import itertools
import typing

import attr

from ._error import TotalMismatch
from ._validation import positive, type_validator


class OrderResult(enum.Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def flip(self) -> "OrderResult":
        return _FLIPPED.get(self, self)

    @property
    def at_least(self) -> bool:
        return self in (OrderResult.GREATER, OrderResult.EQUAL)

    @classmethod
    def from_flags(cls, ge: bool, le: bool) -> "OrderResult":
        if ge and le:
            return cls.EQUAL
        if ge:
            return cls.GREATER
        if le:
            return cls.LESS
        return cls.INCOMPARABLE


_FLIPPED = {
    OrderResult.GREATER: OrderResult.LESS,
    OrderResult.LESS: OrderResult.GREATER,
}


def _parts_validator(instance, attribute, field):
    for part in field:
        positive()(instance, attribute, part)


def _sorted_parts(parts: typing.Iterable[int]) -> typing.Tuple[int, ...]:
    return tuple(sorted(parts, reverse=True))


@attr.s(frozen=True, slots=True)
class Partition:
    parts = attr.ib(
        type=typing.Tuple[int, ...],
        converter=_sorted_parts,
        validator=[type_validator(), _parts_validator],
    )

    @property
    def total(self) -> int:
        return sum(self.parts)

    @classmethod
    def from_multiplicities(
        cls, multiplicities: typing.Mapping[int, int]
    ) -> "Partition":
        return cls(
            itertools.chain.from_iterable(
                [part] * count for part, count in multiplicities.items()
            )
        )

    def prefix_sums(self, length: int) -> typing.List[int]:
        padded = list(self.parts) + [0] * (length - len(self.parts))
        return list(itertools.accumulate(padded))

    def __str__(self):
        groups = []
        for part, run in itertools.groupby(self.parts):
            size = len(list(run))
            text = str(part) if size == 1 else "{}^{}".format(part, size)
            groups.append(text)
        return "[{}]".format(",".join(groups))


def dominance_compare(p: Partition, q: Partition) -> OrderResult:
    """Compare two partitions of the same integer by their prefix sums."""
    if p.total != q.total:
        raise TotalMismatch(p, q)

    length = max(len(p.parts), len(q.parts))
    ge = le = True
    for left, right in zip(p.prefix_sums(length), q.prefix_sums(length)):
        ge = ge and left >= right
        le = le and left <= right
    return OrderResult.from_flags(ge, le)
