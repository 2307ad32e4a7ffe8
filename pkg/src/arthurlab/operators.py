"""
Rewriting operators on local Arthur parameters.

Indices in an :class:`OperatorDescriptor` point into the canonical
summand order of the parameter the operator is applied to. Operators only
touch good parity summands; the rest of the parameter is carried along.
"""

import enum
import functools
import logging
import typing

import attr

from ._error import BadIndex, BadKind, NotApplicable, SearchExhausted
from ._validation import type_validator
from .config import Settings
from .halfint import HalfInt
from .params import (
    ArthurSummand,
    LocalArthurParameter,
    SupercuspidalLabel,
    dual_psi,
)

logger = logging.getLogger(__name__)

Rows = typing.List[ArthurSummand]


class OperatorKind(enum.Enum):
    UI_INVERSE = "ui^-1"
    DUAL_UI_DUAL = "dual.ui.dual"
    DUAL_MINUS = "dual^-"
    UI = "ui"
    DUAL_UI_DUAL_INVERSE = "dual.ui^-1.dual"
    DUAL_PLUS = "dual^+"

    @property
    def is_raising(self) -> bool:
        return self in RAISING


RAISING = frozenset(
    {
        OperatorKind.UI_INVERSE,
        OperatorKind.DUAL_UI_DUAL,
        OperatorKind.DUAL_MINUS,
    }
)

_TRANSPORT = {
    OperatorKind.UI_INVERSE: OperatorKind.DUAL_UI_DUAL,
    OperatorKind.DUAL_UI_DUAL: OperatorKind.UI_INVERSE,
    OperatorKind.DUAL_MINUS: OperatorKind.DUAL_MINUS,
}


@attr.s(frozen=True, slots=True)
class OperatorDescriptor:
    kind = attr.ib(type=OperatorKind, validator=type_validator())
    rho = attr.ib(type=SupercuspidalLabel, validator=type_validator())
    indices = attr.ib(
        type=typing.Tuple[int, ...], converter=tuple, validator=type_validator()
    )
    # picks one preimage of a type 3' inverse
    pivot = attr.ib(
        type=typing.Optional[HalfInt], default=None, validator=type_validator()
    )

    def __str__(self):
        text = "{}[{}]".format(
            self.kind.value, ",".join(str(index) for index in self.indices)
        )
        if self.pivot is not None:
            text += "@{}".format(self.pivot)
        return text


@attr.s(frozen=True, slots=True)
class Application:
    result = attr.ib(type=LocalArthurParameter)
    applied = attr.ib(type=bool)


def _same_block(rows: Rows, group, i: int, j: int) -> bool:
    return (
        i != j
        and rows[i].rho == rows[j].rho
        and rows[i].has_good_parity(group)
        and rows[j].has_good_parity(group)
    )


def _ui_applicable(rows: Rows, group, i: int, j: int) -> bool:
    if not _same_block(rows, group, i, j):
        return False
    A_i, B_i = rows[i].A, rows[i].B
    A_j, B_j = rows[j].A, rows[j].B
    if not (A_j >= A_i + 1 >= B_j > B_i):
        return False
    for r, row in enumerate(rows):
        if r in (i, j) or row.rho != rows[i].rho:
            continue
        if not row.has_good_parity(group):
            continue
        if B_i < row.B < B_j and A_i < row.A < A_j:
            return False
    return True


def _ui_rows(rows: Rows, i: int, j: int) -> Rows:
    rho = rows[i].rho
    A_i, B_i = rows[i].A, rows[i].B
    A_j, B_j = rows[j].A, rows[j].B
    result = [row for r, row in enumerate(rows) if r not in (i, j)]
    result.append(ArthurSummand.from_ab(rho, A_j, B_i))
    if A_i + 1 != B_j:
        result.append(ArthurSummand.from_ab(rho, A_i, B_j))
    return result


def _ui_moves(rows: Rows, group):
    for i in range(len(rows)):
        for j in range(len(rows)):
            if _ui_applicable(rows, group, i, j):
                yield (i, j), None, _ui_rows(rows, i, j)


def _preimage_reproduces(preimage: Rows, group, target: Rows) -> bool:
    i, j = len(preimage) - 2, len(preimage) - 1
    if not _ui_applicable(preimage, group, i, j):
        return False
    image = _ui_rows(preimage, i, j)
    return sorted(image, key=ArthurSummand.key) == sorted(
        target, key=ArthurSummand.key
    )


def _pair_preimage(rows: Rows, group, u: int, v: int) -> typing.Optional[Rows]:
    if not _same_block(rows, group, u, v):
        return None
    A_u, B_u = rows[u].A, rows[u].B
    A_v, B_v = rows[v].A, rows[v].B
    if not (A_u > A_v and B_u < B_v):
        return None
    if (A_v + B_u) < 0 or not (A_v - B_u).is_integer:
        return None
    rho = rows[u].rho
    preimage = [row for r, row in enumerate(rows) if r not in (u, v)]
    preimage.append(ArthurSummand.from_ab(rho, A_v, B_u))
    preimage.append(ArthurSummand.from_ab(rho, A_u, B_v))
    if _preimage_reproduces(preimage, group, rows):
        return preimage
    return None


def _pivot_preimage(
    rows: Rows, group, u: int, pivot: HalfInt
) -> typing.Optional[Rows]:
    row = rows[u]
    if not row.has_good_parity(group):
        return None
    A_u, B_u = row.A, row.B
    if not (pivot - B_u).is_integer or pivot < abs(B_u) or pivot > A_u - 1:
        return None
    preimage = [other for r, other in enumerate(rows) if r != u]
    preimage.append(ArthurSummand.from_ab(row.rho, pivot, B_u))
    preimage.append(ArthurSummand.from_ab(row.rho, A_u, pivot + 1))
    if _preimage_reproduces(preimage, group, rows):
        return preimage
    return None


def _pivots(row: ArthurSummand) -> typing.Iterator[HalfInt]:
    pivot = abs(row.B)
    while pivot <= row.A - 1:
        yield pivot
        pivot = pivot + 1


def _ui_inverse_moves(rows: Rows, group):
    for u in range(len(rows)):
        for v in range(len(rows)):
            preimage = _pair_preimage(rows, group, u, v)
            if preimage is not None:
                yield (u, v), None, preimage
    for u in range(len(rows)):
        for pivot in _pivots(rows[u]):
            preimage = _pivot_preimage(rows, group, u, pivot)
            if preimage is not None:
                yield (u,), pivot, preimage


def _dual_rows(rows: Rows) -> Rows:
    return [row.dual() for row in rows]


def _dualized(moves):
    def _moves(rows: Rows, group):
        for indices, pivot, result in moves(_dual_rows(rows), group):
            yield indices, pivot, _dual_rows(result)

    return _moves


def _dual_step_moves(source: int, target: int):
    """``dual_k^-`` when ``(source, target) = (0, 1)``, else ``dual_k^+``."""

    def _moves(rows: Rows, group):
        for k, row in enumerate(rows):
            if not row.has_good_parity(group):
                continue
            if (row.a, row.b)[target] != (row.a, row.b)[source] + 1:
                continue
            result = list(rows)
            result[k] = row.dual()
            yield (k,), None, result

    return _moves


_MOVES = {
    OperatorKind.UI: _ui_moves,
    OperatorKind.UI_INVERSE: _ui_inverse_moves,
    OperatorKind.DUAL_UI_DUAL: _dualized(_ui_moves),
    OperatorKind.DUAL_UI_DUAL_INVERSE: _dualized(_ui_inverse_moves),
    OperatorKind.DUAL_MINUS: _dual_step_moves(0, 1),
    OperatorKind.DUAL_PLUS: _dual_step_moves(1, 0),
}

_LOWERING = (
    OperatorKind.UI,
    OperatorKind.DUAL_UI_DUAL_INVERSE,
    OperatorKind.DUAL_PLUS,
)
_RAISING_ORDER = (
    OperatorKind.UI_INVERSE,
    OperatorKind.DUAL_UI_DUAL,
    OperatorKind.DUAL_MINUS,
)


def _check_indices(psi: LocalArthurParameter, indices: typing.Sequence[int]):
    for index in indices:
        if not 0 <= index < len(psi.summands):
            raise BadIndex(index, len(psi.summands))


def applicable_ui(psi: LocalArthurParameter, i: int, j: int) -> bool:
    _check_indices(psi, (i, j))
    return _ui_applicable(list(psi.summands), psi.group, i, j)


def _moves_of(
    psi: LocalArthurParameter, kinds: typing.Iterable[OperatorKind]
) -> typing.Iterator[typing.Tuple[OperatorDescriptor, LocalArthurParameter]]:
    rows = list(psi.summands)
    for kind in kinds:
        for indices, pivot, result in _MOVES[kind](rows, psi.group):
            descriptor = OperatorDescriptor(
                kind, rows[indices[0]].rho, indices, pivot
            )
            yield descriptor, LocalArthurParameter(psi.group, result)


def _unique_results(moves):
    seen = set()
    unique = []
    for descriptor, result in moves:
        if result in seen:
            continue
        seen.add(result)
        unique.append((descriptor, result))
    return unique


def enumerate_raising(
    psi: LocalArthurParameter,
) -> typing.List[typing.Tuple[OperatorDescriptor, LocalArthurParameter]]:
    return _unique_results(_moves_of(psi, _RAISING_ORDER))


def enumerate_lowering(
    psi: LocalArthurParameter,
) -> typing.List[typing.Tuple[OperatorDescriptor, LocalArthurParameter]]:
    return _unique_results(_moves_of(psi, _LOWERING))


def is_absolutely_maximal(psi: LocalArthurParameter) -> bool:
    return not enumerate_raising(psi)


def is_absolutely_minimal(psi: LocalArthurParameter) -> bool:
    return not enumerate_lowering(psi)


def apply(psi: LocalArthurParameter, op: OperatorDescriptor) -> Application:
    """
    Apply ``op`` to ``psi``.

    An operator that does not apply leaves ``psi`` unchanged and reports
    ``applied=False``. A type 3' inverse given without a pivot picks the
    canonically least preimage.
    """
    _check_indices(psi, op.indices)
    candidates = [
        result
        for descriptor, result in _moves_of(psi, (op.kind,))
        if descriptor.indices == op.indices
        and descriptor.rho == op.rho
        and (op.pivot is None or descriptor.pivot == op.pivot)
    ]
    if not candidates:
        logger.debug("%s does not apply to %s", op, psi)
        return Application(psi, False)
    result = min(
        candidates,
        key=lambda parameter: [summand.key() for summand in parameter.summands],
    )
    logger.debug("%s maps %s to %s", op, psi, result)
    return Application(result, True)


def dual_transport(
    op: OperatorDescriptor, psi: typing.Optional[LocalArthurParameter] = None
) -> OperatorDescriptor:
    """
    The raising operator ``T'`` with ``dual(psi) = T'(dual(T(psi)))``.

    Without ``psi`` only the kind is transported. With ``psi`` the indices
    are re-targeted to ``dual(T(psi))``.
    """
    if op.kind not in _TRANSPORT:
        raise BadKind(op.kind)
    kind = _TRANSPORT[op.kind]
    if psi is None:
        return attr.evolve(op, kind=kind)

    application = apply(psi, op)
    if not application.applied:
        raise NotApplicable(op, psi)
    source = dual_psi(application.result)
    target = dual_psi(psi)
    for descriptor, result in _moves_of(source, (kind,)):
        if result == target:
            return descriptor
    raise NotApplicable(attr.evolve(op, kind=kind), source)


@functools.lru_cache(maxsize=1024)
def _raising_closure(
    psi: LocalArthurParameter, depth: int, max_states: int
) -> typing.FrozenSet[LocalArthurParameter]:
    visited = {psi}
    frontier = [psi]
    for level in range(depth):
        following = []
        for current in frontier:
            for _, result in enumerate_raising(current):
                if result in visited:
                    continue
                visited.add(result)
                following.append(result)
                if len(visited) > max_states:
                    raise SearchExhausted(len(visited), max_states)
        logger.debug("raising search level %d: %d new", level, len(following))
        if not following:
            break
        frontier = following
    return frozenset(visited)


def raising_closure(
    psi: LocalArthurParameter, settings: typing.Optional[Settings] = None
) -> typing.FrozenSet[LocalArthurParameter]:
    """Every parameter reachable from ``psi`` by raising operators."""
    settings = settings or Settings()
    return _raising_closure(psi, settings.search_depth, settings.max_states)
