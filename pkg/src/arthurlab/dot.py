import typing

from .config import Settings
from .dsl import format_parameter
from .orders import OrderKind, covering_operator, poset_edges
from .params import LocalArthurParameter


def _quote(text: str) -> str:
    return '"{}"'.format(text.replace("\\", "\\\\").replace('"', '\\"'))


def emit_dot(
    candidates: typing.Iterable[LocalArthurParameter],
    kind: OrderKind,
    settings: typing.Optional[Settings] = None,
) -> str:
    """Hasse diagram in DOT; arrows point from a parameter to its cover."""
    kind = OrderKind(kind)
    candidates = list(dict.fromkeys(candidates))
    names = {psi: "p{}".format(index) for index, psi in enumerate(candidates)}
    lines = ["digraph {} {{".format(_quote("order " + kind.value))]
    for psi in candidates:
        lines.append(
            "  {} [label={}];".format(names[psi], _quote(format_parameter(psi)))
        )
    for upper, lower in poset_edges(candidates, kind, settings):
        attributes = ""
        if kind is OrderKind.O:
            operator = covering_operator(upper, lower)
            if operator is not None:
                attributes = " [label={}]".format(_quote(operator.kind.value))
        lines.append(
            "  {} -> {}{};".format(names[lower], names[upper], attributes)
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
