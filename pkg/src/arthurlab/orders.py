"""The four orders on local Arthur parameters sharing a group."""

import enum
import logging
import typing

import attr
import networkx

from ._error import GroupMismatch, InfinitesimalMismatch
from .config import Settings
from .operators import OperatorDescriptor, enumerate_raising, raising_closure
from .params import LocalArthurParameter, lambda_of, partitions_of, phi_of
from .partitions import OrderResult, dominance_compare
from .vogan import closure_compare

logger = logging.getLogger(__name__)


class OrderKind(enum.Enum):
    A = "A"
    D = "D"
    O = "O"  # noqa: E741
    C = "C"

    @property
    def is_preorder(self) -> bool:
        return self in (OrderKind.A, OrderKind.D)


@attr.s(frozen=True, slots=True)
class ExtremalResult:
    maxima = attr.ib(type=typing.Tuple[LocalArthurParameter, ...])
    minima = attr.ib(type=typing.Tuple[LocalArthurParameter, ...])
    unique_max = attr.ib(type=bool)
    unique_min = attr.ib(type=bool)


def compare(
    psi1: LocalArthurParameter,
    psi2: LocalArthurParameter,
    kind: OrderKind,
    settings: typing.Optional[Settings] = None,
) -> OrderResult:
    kind = OrderKind(kind)
    if psi1.group != psi2.group:
        raise GroupMismatch(psi1.group, psi2.group)

    if kind is OrderKind.A:
        # larger parameters have smaller Arthur SL2 orbits
        return dominance_compare(partitions_of(psi2)[0], partitions_of(psi1)[0])
    if kind is OrderKind.D:
        return dominance_compare(partitions_of(psi1)[1], partitions_of(psi2)[1])

    lambda1, lambda2 = lambda_of(psi1), lambda_of(psi2)
    if lambda1 != lambda2:
        raise InfinitesimalMismatch(lambda1, lambda2)
    if kind is OrderKind.C:
        return closure_compare(phi_of(psi1), phi_of(psi2))

    if psi1 == psi2:
        return OrderResult.EQUAL
    if psi1 in raising_closure(psi2, settings):
        return OrderResult.GREATER
    if psi2 in raising_closure(psi1, settings):
        return OrderResult.LESS
    return OrderResult.INCOMPARABLE


def _distinct(candidates) -> typing.List[LocalArthurParameter]:
    return list(dict.fromkeys(candidates))


def _relation(candidates, kind, settings):
    return {
        (i, j): compare(left, right, kind, settings)
        for i, left in enumerate(candidates)
        for j, right in enumerate(candidates)
        if i != j
    }


def extremal(
    candidates: typing.Iterable[LocalArthurParameter],
    kind: OrderKind,
    settings: typing.Optional[Settings] = None,
) -> ExtremalResult:
    """
    Maximal and minimal elements of a finite set of parameters.

    An extremum is flagged unique only when it is the sole extremum and it
    is comparable to, and on the right side of, every other candidate.
    """
    candidates = _distinct(candidates)
    relation = _relation(candidates, kind, settings)
    indices = range(len(candidates))

    def _undominated(direction):
        return [
            i
            for i in indices
            if not any(
                relation[(j, i)] is direction for j in indices if j != i
            )
        ]

    def _dominates_all(i, at_least):
        return all(at_least(relation[(i, j)]) for j in indices if j != i)

    maxima = _undominated(OrderResult.GREATER)
    minima = _undominated(OrderResult.LESS)
    return ExtremalResult(
        tuple(candidates[i] for i in maxima),
        tuple(candidates[i] for i in minima),
        len(maxima) == 1
        and _dominates_all(maxima[0], lambda result: result.at_least),
        len(minima) == 1
        and _dominates_all(minima[0], lambda result: result.flip().at_least),
    )


def poset_edges(
    candidates: typing.Iterable[LocalArthurParameter],
    kind: OrderKind,
    settings: typing.Optional[Settings] = None,
) -> typing.List[typing.Tuple[LocalArthurParameter, LocalArthurParameter]]:
    """Covering pairs ``(upper, lower)`` of the strict order."""
    candidates = _distinct(candidates)
    graph = networkx.DiGraph()
    graph.add_nodes_from(range(len(candidates)))
    for (i, j), result in _relation(candidates, kind, settings).items():
        if result is OrderResult.GREATER:
            graph.add_edge(i, j)
    reduced = networkx.transitive_reduction(graph)
    logger.debug(
        "%d strict relations reduce to %d covers",
        graph.number_of_edges(),
        reduced.number_of_edges(),
    )
    return [
        (candidates[i], candidates[j]) for i, j in sorted(reduced.edges())
    ]


def covering_operator(
    upper: LocalArthurParameter, lower: LocalArthurParameter
) -> typing.Optional[OperatorDescriptor]:
    """The raising move taking ``lower`` to ``upper`` in one step, if any."""
    for descriptor, result in enumerate_raising(lower):
        if result == upper:
            return descriptor
    return None
