"""JSON forms of labels, parameters, extended multi-segments and L-data."""

import json
import typing

from ._error import ParseError
from .halfint import HalfInt
from .ldata import LanglandsData, Segment, TemperedEntry
from .multisegments import EmsBlock, ExtendedMultiSegment, ExtendedSegment
from .params import (
    ArthurSummand,
    Family,
    GroupSpec,
    LocalArthurParameter,
    SelfDualType,
    SupercuspidalLabel,
)

Json = typing.Dict[str, typing.Any]


def _field(data: Json, key: str):
    try:
        return data[key]
    except (KeyError, TypeError):
        raise ParseError(json.dumps(data, sort_keys=True), 0, (key,))


def _half(value) -> HalfInt:
    return HalfInt.parse(str(value))


def label_to_json(rho: SupercuspidalLabel) -> Json:
    if rho.is_self_dual:
        return {
            "name": rho.name,
            "dim": rho.dim,
            "type": rho.selfdual_type.value,
        }
    return {"name": rho.name, "dim": rho.dim, "dual": rho.dual_partner}


def label_from_json(data: Json) -> SupercuspidalLabel:
    name, dim = _field(data, "name"), _field(data, "dim")
    if "dual" in data:
        return SupercuspidalLabel(name, dim, None, data["dual"])
    return SupercuspidalLabel(name, dim, SelfDualType(_field(data, "type")))


def parameter_to_json(psi: LocalArthurParameter) -> Json:
    return {
        "group": str(psi.group),
        "summands": [
            {"rho": label_to_json(s.rho), "a": s.a, "b": s.b}
            for s in psi.summands
        ],
    }


def parameter_from_json(data: Json) -> LocalArthurParameter:
    return LocalArthurParameter(
        GroupSpec.parse(_field(data, "group")),
        [
            ArthurSummand(
                label_from_json(_field(item, "rho")),
                _field(item, "a"),
                _field(item, "b"),
            )
            for item in _field(data, "summands")
        ],
    )


def ems_to_json(E: ExtendedMultiSegment) -> Json:
    return {
        "group": str(E.group),
        "blocks": [
            {
                "rho": label_to_json(block.rho),
                "rows": [
                    {
                        "A": str(row.A),
                        "B": str(row.B),
                        "l": row.l,
                        "eta": row.eta,
                    }
                    for row in block.rows
                ],
            }
            for block in E.blocks
        ],
    }


def ems_from_json(data: Json) -> ExtendedMultiSegment:
    blocks = [
        EmsBlock(
            label_from_json(_field(block, "rho")),
            [
                ExtendedSegment(
                    _half(_field(row, "A")),
                    _half(_field(row, "B")),
                    _field(row, "l"),
                    row.get("eta", 1),
                )
                for row in _field(block, "rows")
            ],
        )
        for block in _field(data, "blocks")
    ]
    return ExtendedMultiSegment(GroupSpec.parse(_field(data, "group")), blocks)


def ldata_to_json(pi: LanglandsData) -> Json:
    return {
        "family": pi.family.value,
        "segments": [
            {
                "rho": label_to_json(segment.rho),
                "x": str(segment.x),
                "y": str(segment.y),
            }
            for segment in pi.segments
        ],
        "tempered": [
            {"rho": label_to_json(entry.rho), "a": entry.a, "sign": entry.sign}
            for entry in pi.tempered
        ],
    }


def ldata_from_json(
    data: Json, family: typing.Optional[Family] = None
) -> LanglandsData:
    """``family`` is used when the document does not name one."""
    if "family" in data or family is None:
        family = Family(_field(data, "family"))
    segments = [
        Segment(
            label_from_json(_field(item, "rho")),
            _half(_field(item, "x")),
            _half(_field(item, "y")),
        )
        for item in data.get("segments", ())
    ]
    tempered = [
        TemperedEntry(
            label_from_json(_field(item, "rho")),
            _field(item, "a"),
            item.get("sign", 1),
        )
        for item in data.get("tempered", ())
    ]
    return LanglandsData(Family(family), segments, tempered)


def dumps(data: Json) -> str:
    return json.dumps(data, sort_keys=True)


def loads(text: str) -> Json:
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(text, error.pos, ("JSON value",)) from None
