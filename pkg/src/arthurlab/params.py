"""
Supercuspidal labels, groups, Arthur parameters, L-parameters and
infinitesimal parameters, together with the basic maps between them.
"""

import collections
import enum
import logging
import typing

import attr

from ._error import InvariantBroken, UnpairableBadParity
from ._validation import non_negative, positive, type_validator
from .halfint import HalfInt
from .partitions import Partition

logger = logging.getLogger(__name__)


class SelfDualType(enum.Enum):
    ORTHOGONAL = "O"
    SYMPLECTIC = "S"

    @property
    def sign(self) -> int:
        return 1 if self is SelfDualType.ORTHOGONAL else -1

    @classmethod
    def from_sign(cls, sign: int) -> "SelfDualType":
        return cls.ORTHOGONAL if sign > 0 else cls.SYMPLECTIC


class Family(enum.Enum):
    SP = "Sp"
    SO = "SO"


@attr.s(frozen=True, slots=True)
class SupercuspidalLabel:
    """
    An opaque supercuspidal representation ``rho`` of some ``GL(dim)``.

    Self-dual labels carry their type. A non-self-dual label instead names
    the label of its contragredient in ``dual_partner``.
    """

    name = attr.ib(type=str, validator=type_validator())
    dim = attr.ib(type=int, validator=[type_validator(), positive()])
    selfdual_type = attr.ib(
        type=typing.Optional[SelfDualType],
        default=SelfDualType.ORTHOGONAL,
        validator=type_validator(),
    )
    dual_partner = attr.ib(
        type=typing.Optional[str], default=None, validator=type_validator()
    )

    def __attrs_post_init__(self):
        if (self.selfdual_type is None) == (self.dual_partner is None):
            raise InvariantBroken(
                "a label is either self-dual or names its dual partner", self
            )

    @property
    def is_self_dual(self) -> bool:
        return self.selfdual_type is not None

    def dual(self) -> "SupercuspidalLabel":
        if self.is_self_dual:
            return self
        return SupercuspidalLabel(self.dual_partner, self.dim, None, self.name)

    def key(self) -> typing.Tuple[str, int, str]:
        kind = self.selfdual_type.value if self.is_self_dual else "~"
        return (self.name, self.dim, kind)

    def __str__(self):
        if self.is_self_dual:
            return "{}({},{})".format(
                self.name, self.dim, self.selfdual_type.value
            )
        return "{}({},~{})".format(self.name, self.dim, self.dual_partner)


TRIVIAL = SupercuspidalLabel("tr", 1, SelfDualType.ORTHOGONAL)


@attr.s(frozen=True, slots=True)
class GroupSpec:
    """``Sp(2n)`` or split ``SO(2n+1)``, seen through its dual group."""

    family = attr.ib(type=Family, validator=type_validator())
    rank = attr.ib(type=int, validator=[type_validator(), non_negative()])

    @property
    def standard_dim(self) -> int:
        if self.family is Family.SP:
            return 2 * self.rank + 1
        return 2 * self.rank

    @property
    def dual_type(self) -> SelfDualType:
        if self.family is Family.SP:
            return SelfDualType.ORTHOGONAL
        return SelfDualType.SYMPLECTIC

    @classmethod
    def from_standard_dim(cls, family: Family, dimension: int) -> "GroupSpec":
        if family is Family.SP:
            if dimension % 2 != 1 or dimension < 1:
                raise InvariantBroken("Sp needs odd dimension", dimension)
            return cls(family, (dimension - 1) // 2)
        if dimension % 2 != 0 or dimension < 0:
            raise InvariantBroken("SO needs even dimension", dimension)
        return cls(family, dimension // 2)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        family_text, _, size_text = text.strip().partition(":")
        try:
            family = Family(family_text)
            size = int(size_text)
        except ValueError:
            raise InvariantBroken("group is Sp:2n or SO:2n+1", text)
        if family is Family.SP and size % 2 == 0 and size >= 0:
            return cls(family, size // 2)
        if family is Family.SO and size % 2 == 1 and size >= 1:
            return cls(family, (size - 1) // 2)
        raise InvariantBroken("group is Sp:2n or SO:2n+1", text)

    def __str__(self):
        if self.family is Family.SP:
            return "Sp:{}".format(2 * self.rank)
        return "SO:{}".format(2 * self.rank + 1)


def label_key(rho: SupercuspidalLabel) -> typing.Tuple[str, int, str]:
    return rho.key()


@attr.s(frozen=True, slots=True)
class ArthurSummand:
    rho = attr.ib(type=SupercuspidalLabel, validator=type_validator())
    a = attr.ib(type=int, validator=[type_validator(), positive()])
    b = attr.ib(type=int, validator=[type_validator(), positive()])

    @classmethod
    def from_ab(
        cls, rho: SupercuspidalLabel, A: HalfInt, B: HalfInt
    ) -> "ArthurSummand":
        A, B = HalfInt.of(A), HalfInt.of(B)
        return cls(rho, (A + B).as_int() + 1, (A - B).as_int() + 1)

    @property
    def A(self) -> HalfInt:
        return HalfInt(self.a + self.b - 2)

    @property
    def B(self) -> HalfInt:
        return HalfInt(self.a - self.b)

    @property
    def dimension(self) -> int:
        return self.rho.dim * self.a * self.b

    def selfdual_type(self) -> typing.Optional[SelfDualType]:
        if not self.rho.is_self_dual:
            return None
        sign = self.rho.selfdual_type.sign * (-1) ** (self.a + self.b)
        return SelfDualType.from_sign(sign)

    def has_good_parity(self, group: GroupSpec) -> bool:
        return self.selfdual_type() is group.dual_type

    def dual(self) -> "ArthurSummand":
        return ArthurSummand(self.rho, self.b, self.a)

    def contragredient(self) -> "ArthurSummand":
        return ArthurSummand(self.rho.dual(), self.a, self.b)

    def key(self):
        return (self.rho.key(), self.a, self.b)

    def __str__(self):
        return "{}.S{}.S{}".format(self.rho, self.a, self.b)


def _canonical(items) -> tuple:
    return tuple(sorted(items, key=lambda item: item.key()))


def _grouped(summands) -> str:
    if not summands:
        return "()"
    counts = collections.Counter(summands)
    pieces = []
    for summand in dict.fromkeys(summands):
        copies = counts[summand]
        prefix = "{}*".format(copies) if copies > 1 else ""
        pieces.append(prefix + str(summand))
    return " + ".join(pieces)


@attr.s(frozen=True, slots=True)
class LocalArthurParameter:
    group = attr.ib(type=GroupSpec, validator=type_validator())
    summands = attr.ib(
        type=typing.Tuple[ArthurSummand, ...],
        converter=_canonical,
        validator=type_validator(),
    )

    @property
    def dimension(self) -> int:
        return sum(summand.dimension for summand in self.summands)

    def rhos(self) -> typing.List[SupercuspidalLabel]:
        return sorted(
            {summand.rho for summand in self.summands}, key=label_key
        )

    def block(self, rho: SupercuspidalLabel) -> typing.List[ArthurSummand]:
        return [summand for summand in self.summands if summand.rho == rho]

    def counter(self) -> typing.Counter[ArthurSummand]:
        return collections.Counter(self.summands)

    def with_summands(
        self, summands: typing.Iterable[ArthurSummand]
    ) -> "LocalArthurParameter":
        """Same family, group regrown to fit the new total dimension."""
        summands = tuple(summands)
        dimension = sum(summand.dimension for summand in summands)
        group = GroupSpec.from_standard_dim(self.group.family, dimension)
        return LocalArthurParameter(group, summands)

    def __str__(self):
        return _grouped(self.summands)


@attr.s(frozen=True, slots=True)
class LSummand:
    rho = attr.ib(type=SupercuspidalLabel, validator=type_validator())
    x = attr.ib(type=HalfInt, converter=HalfInt.of, validator=type_validator())
    a = attr.ib(type=int, validator=[type_validator(), positive()])

    @property
    def dimension(self) -> int:
        return self.rho.dim * self.a

    def exponents(self) -> typing.List[HalfInt]:
        top = self.x + HalfInt(self.a - 1)
        return [top - k for k in range(self.a)]

    def key(self):
        return (self.rho.key(), self.x, self.a)

    def __str__(self):
        return "{}[{}].S{}".format(self.rho, self.x, self.a)


@attr.s(frozen=True, slots=True)
class LocalLParameter:
    group = attr.ib(type=GroupSpec, validator=type_validator())
    summands = attr.ib(
        type=typing.Tuple[LSummand, ...],
        converter=_canonical,
        validator=type_validator(),
    )

    @property
    def dimension(self) -> int:
        return sum(summand.dimension for summand in self.summands)

    def rhos(self) -> typing.List[SupercuspidalLabel]:
        return sorted(
            {summand.rho for summand in self.summands}, key=label_key
        )

    def counter(self) -> typing.Counter[LSummand]:
        return collections.Counter(self.summands)

    def __str__(self):
        return _grouped(self.summands)


Exponent = typing.Tuple[SupercuspidalLabel, HalfInt]


@attr.s(frozen=True, slots=True)
class InfinitesimalBlock:
    rho = attr.ib(type=SupercuspidalLabel, validator=type_validator())
    exponents = attr.ib(
        type=typing.Tuple[typing.Tuple[HalfInt, int], ...],
        validator=type_validator(),
    )

    def __str__(self):
        return "{}: {{{}}}".format(
            self.rho,
            ", ".join(
                str(x) if count == 1 else "{}x{}".format(x, count)
                for x, count in self.exponents
            ),
        )


@attr.s(frozen=True, slots=True)
class InfinitesimalParameter:
    """Eigenvalue exponents of Frobenius, one multiset per label."""

    blocks = attr.ib(
        type=typing.Tuple[InfinitesimalBlock, ...], validator=type_validator()
    )

    @classmethod
    def from_counter(
        cls, counter: typing.Mapping[Exponent, int]
    ) -> "InfinitesimalParameter":
        per_rho = collections.defaultdict(dict)
        for (rho, x), count in counter.items():
            if count > 0:
                per_rho[rho][x] = count
        return cls(
            tuple(
                InfinitesimalBlock(rho, tuple(sorted(per_rho[rho].items())))
                for rho in sorted(per_rho, key=label_key)
            )
        )

    def counter(self) -> typing.Counter[Exponent]:
        return collections.Counter(
            {
                (block.rho, x): count
                for block in self.blocks
                for x, count in block.exponents
            }
        )

    def block(
        self, rho: SupercuspidalLabel
    ) -> typing.Tuple[typing.Tuple[HalfInt, int], ...]:
        for block in self.blocks:
            if block.rho == rho:
                return block.exponents
        return ()

    def __str__(self):
        return "; ".join(str(block) for block in self.blocks)


@attr.s(frozen=True, slots=True)
class ParameterReport:
    dimension = attr.ib(type=int)
    expected = attr.ib(type=int)
    summand_flags = attr.ib(type=typing.Tuple[bool, ...])

    @property
    def dimension_ok(self) -> bool:
        return self.dimension == self.expected

    @property
    def good_parity(self) -> bool:
        return all(self.summand_flags)

    @property
    def ok(self) -> bool:
        return self.dimension_ok and self.good_parity


def validate_parameter(psi: LocalArthurParameter) -> ParameterReport:
    return ParameterReport(
        psi.dimension,
        psi.group.standard_dim,
        tuple(summand.has_good_parity(psi.group) for summand in psi.summands),
    )


def good_parity_split(
    psi: LocalArthurParameter,
) -> typing.Tuple[typing.Tuple[ArthurSummand, ...], LocalArthurParameter]:
    """
    Split ``psi`` as ``psi1 + psi0 + dual(psi1)``.

    ``psi0`` collects the good parity summands. ``psi1`` is returned as a
    bare tuple of summands, since it is not a parameter of any group.
    """
    if psi.dimension != psi.group.standard_dim:
        raise InvariantBroken("dimension matches the group", psi)

    good = [s for s in psi.summands if s.has_good_parity(psi.group)]
    bad = collections.Counter(
        s for s in psi.summands if not s.has_good_parity(psi.group)
    )
    half = collections.Counter()
    for summand in sorted(bad, key=lambda s: s.key()):
        partner = summand.contragredient()
        if partner == summand:
            if bad[summand] % 2:
                raise UnpairableBadParity(summand)
            half[summand] = bad[summand] // 2
            continue
        if bad[partner] != bad[summand]:
            raise UnpairableBadParity(summand)
        if summand.rho.name < partner.rho.name:
            half[summand] = bad[summand]

    psi1 = tuple(sorted(half.elements(), key=lambda s: s.key()))
    psi0 = psi.with_summands(good)
    logger.debug("split %s into psi1=%s psi0=%s", psi, psi1, psi0)
    return psi1, psi0


def dual_psi(psi: LocalArthurParameter) -> LocalArthurParameter:
    return LocalArthurParameter(
        psi.group, (summand.dual() for summand in psi.summands)
    )


def phi_of(psi: LocalArthurParameter) -> LocalLParameter:
    summands = []
    for summand in psi.summands:
        for t in range(summand.b):
            summands.append(
                LSummand(summand.rho, HalfInt(summand.b - 1 - 2 * t), summand.a)
            )
    return LocalLParameter(psi.group, summands)


def infinitesimal_of(phi: LocalLParameter) -> InfinitesimalParameter:
    counter = collections.Counter()
    for summand in phi.summands:
        for x in summand.exponents():
            counter[(summand.rho, x)] += 1
    return InfinitesimalParameter.from_counter(counter)


def lambda_of(psi: LocalArthurParameter) -> InfinitesimalParameter:
    return infinitesimal_of(phi_of(psi))


def partitions_of(
    psi: LocalArthurParameter,
) -> typing.Tuple[Partition, Partition]:
    """Return ``(p^A, p^D)``: the orbits of the Arthur and Deligne SL2."""
    p_arthur = []
    p_deligne = []
    for summand in psi.summands:
        p_arthur.extend([summand.b] * (summand.rho.dim * summand.a))
        p_deligne.extend([summand.a] * (summand.rho.dim * summand.b))
    return Partition(p_arthur), Partition(p_deligne)


def partition_of_phi(phi: LocalLParameter) -> Partition:
    parts = []
    for summand in phi.summands:
        parts.extend([summand.a] * summand.rho.dim)
    return Partition(parts)


def extremal_parameters_of_lambda(
    psi: LocalArthurParameter,
) -> typing.Tuple[LocalArthurParameter, LocalArthurParameter]:
    """The open-orbit and zero-orbit parameters sharing the infinitesimal
    parameter of ``psi``: restrict both SL2 factors to the diagonal."""
    summands = []
    for summand in psi.summands:
        for k in range(min(summand.a, summand.b)):
            summands.append(
                ArthurSummand(summand.rho, summand.a + summand.b - 1 - 2 * k, 1)
            )
    psi_open = LocalArthurParameter(psi.group, summands)
    return psi_open, dual_psi(psi_open)


def is_tempered(psi: LocalArthurParameter) -> bool:
    return all(summand.b == 1 for summand in psi.summands)


def is_anti_tempered(psi: LocalArthurParameter) -> bool:
    return all(summand.a == 1 for summand in psi.summands)


def remove_summands(
    psi: LocalArthurParameter, summands: typing.Iterable[ArthurSummand]
) -> typing.Optional[typing.List[ArthurSummand]]:
    """Multiset difference, or ``None`` when ``psi`` lacks a summand."""
    remaining = psi.counter()
    for summand in summands:
        if remaining[summand] == 0:
            return None
        remaining[summand] -= 1
    return list(remaining.elements())
