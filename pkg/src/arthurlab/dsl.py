"""
Text forms of parameters and Langlands data.

Arthur parameters read ``2*tr(1,O).S2.S1 + tr(1,O).S4.S1``, L-parameters
``tr(1,O)[1/2].S3 + tr(1,O)[-1/2].S3``, Langlands data
``L(D(tr(1,O))[-1,-2], D(tr(1,O))[0,-1]; pi(tr(1,O)[0]+))`` and extended
multi-segments ``tr(1,O): ([2,-1],1,+1); ([0,0],0,-1)``. The empty sum is
written ``()``. Every printer output parses back to the same value.
"""

import functools
import typing

import lark

from ._error import InvariantBroken, ParseError
from .halfint import HalfInt
from .ldata import LanglandsData, Segment, TemperedEntry
from .multisegments import EmsBlock, ExtendedMultiSegment, ExtendedSegment
from .params import (
    ArthurSummand,
    Family,
    GroupSpec,
    LocalArthurParameter,
    LocalLParameter,
    LSummand,
    SelfDualType,
    SupercuspidalLabel,
)

_GRAMMAR = r"""
parameter: "(" ")" -> no_summands
         | aterm ("+" aterm)*
lparameter: "(" ")" -> no_lsummands
          | lterm ("+" lterm)*
ldata: "L(" [segments] ";" "pi(" [entries] ")" ")"
ems: "(" ")" -> no_blocks
   | block ("|" block)*

segments: segment ("," segment)*
entries: entry ("," entry)*

aterm: [INT "*"] rho ".S" INT ".S" INT
lterm: [INT "*"] rho "[" HALF "]" ".S" INT
segment: "D(" rho ")" "[" HALF "," HALF "]"
entry: rho "[" HALF "]" SIGN
block: rho ":" row (";" row)*
row: "(" "[" HALF "," HALF "]" "," INT "," ETA ")"

rho: NAME "(" INT "," SELFDUAL ")" -> selfdual
   | NAME "(" INT "," "~" NAME ")" -> paired

SELFDUAL: "O" | "S"
SIGN: "+" | "-"
ETA: "+1" | "-1"
HALF: /-?\d+(\/2)?/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.INT
%import common.WS
%ignore WS
"""


@functools.lru_cache(maxsize=None)
def _parser() -> lark.Lark:
    return lark.Lark(
        _GRAMMAR,
        parser="lalr",
        start=["parameter", "lparameter", "ldata", "ems", "segments", "rho"],
        maybe_placeholders=True,
    )


def _copies(count) -> int:
    if count is None:
        return 1
    copies = int(count)
    if copies < 1:
        raise InvariantBroken("multiplicity is positive", copies)
    return copies


@lark.v_args(inline=True)
class _Builder(lark.Transformer):
    def selfdual(self, name, dim, kind):
        return SupercuspidalLabel(str(name), int(dim), SelfDualType(str(kind)))

    def paired(self, name, dim, partner):
        return SupercuspidalLabel(str(name), int(dim), None, str(partner))

    def aterm(self, count, rho, a, b):
        return [ArthurSummand(rho, int(a), int(b))] * _copies(count)

    def lterm(self, count, rho, x, a):
        return [LSummand(rho, HalfInt.parse(x), int(a))] * _copies(count)

    def segment(self, rho, x, minus_y):
        return Segment(rho, HalfInt.parse(x), -HalfInt.parse(minus_y))

    def entry(self, rho, exponent, sign):
        a = HalfInt.parse(exponent).doubled + 1
        return TemperedEntry(rho, a, 1 if sign == "+" else -1)

    def no_summands(self):
        return []

    no_lsummands = no_blocks = no_summands

    def parameter(self, *terms):
        return [summand for term in terms for summand in term]

    lparameter = parameter

    def segments(self, *items):
        return list(items)

    entries = segments

    def ldata(self, segments, entries):
        return segments or [], entries or []

    def row(self, A, B, l, eta):  # noqa: E741
        return ExtendedSegment(
            HalfInt.parse(A), HalfInt.parse(B), int(l), int(eta)
        )

    def block(self, rho, *rows):
        return EmsBlock(rho, rows)

    def ems(self, *blocks):
        return list(blocks)


def _expected(error: lark.exceptions.UnexpectedInput) -> typing.List[str]:
    expected = getattr(error, "expected", None)
    if expected is None:
        expected = getattr(error, "allowed", None)
    return [str(item) for item in expected or ()]


def _parse(text: str, start: str):
    try:
        tree = _parser().parse(text, start=start)
    except lark.exceptions.UnexpectedInput as error:
        position = getattr(error, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        raise ParseError(text, position, _expected(error)) from None
    try:
        return _Builder().transform(tree)
    except lark.exceptions.VisitError as error:
        raise error.orig_exc from None


def _group(group: typing.Union[GroupSpec, str]) -> GroupSpec:
    if isinstance(group, GroupSpec):
        return group
    return GroupSpec.parse(group)


def parse_parameter(
    text: str, group: typing.Union[GroupSpec, str]
) -> LocalArthurParameter:
    return LocalArthurParameter(_group(group), _parse(text, "parameter"))


def parse_lparameter(
    text: str, group: typing.Union[GroupSpec, str]
) -> LocalLParameter:
    return LocalLParameter(_group(group), _parse(text, "lparameter"))


def parse_ldata(
    text: str, family: typing.Union[Family, str]
) -> LanglandsData:
    segments, entries = _parse(text, "ldata")
    return LanglandsData(Family(family), segments, entries)


def parse_ems(
    text: str, group: typing.Union[GroupSpec, Family, str]
) -> ExtendedMultiSegment:
    """
    Read ``rho: ([A,B],l,+1); ... | rho': ...``. Given only a family, the
    group is sized to fit the rows.
    """
    blocks = _parse(text, "ems")
    if isinstance(group, Family):
        return ExtendedMultiSegment.build(group, blocks)
    return ExtendedMultiSegment(_group(group), blocks)


def parse_segments(text: str) -> typing.List[Segment]:
    if not text.strip():
        return []
    return _parse(text, "segments")


def parse_label(text: str) -> SupercuspidalLabel:
    return _parse(text, "rho")


def parse_dsl(
    text: str, group: typing.Union[GroupSpec, str]
) -> typing.Union[LocalArthurParameter, LocalLParameter]:
    """Read either kind of parameter; twists in brackets mark L-parameters."""
    if "[" in text:
        return parse_lparameter(text, group)
    return parse_parameter(text, group)


def format_parameter(psi: LocalArthurParameter) -> str:
    return str(psi)


def format_lparameter(phi: LocalLParameter) -> str:
    return str(phi)


def format_ldata(pi: LanglandsData) -> str:
    return str(pi)


def format_ems(E: ExtendedMultiSegment) -> str:
    return str(E)
