"""
The ``arthurlab`` command.

Parameters are given in their text form together with ``--group``.
Extended multi-segments are read from JSON documents, L-data from JSON or
text. Domain failures exit with status 1, usage errors with status 2.
"""

import functools
import json
import logging
import sys
import typing

import click

from . import codec
from ._error import ArthurLabError, BadIndex
from .config import Settings
from .dot import emit_dot
from .dsl import (
    parse_dsl,
    parse_label,
    parse_ldata,
    parse_parameter,
    parse_segments,
)
from .halfint import half
from .ldata import (
    insert_segments,
    max_b_check,
    predicate_lower,
    predicate_upper,
    reduce_lower,
    reduce_upper,
)
from .multisegments import (
    Mode,
    dual_tempered_ems,
    e_minus,
    e_plus_lower,
    e_plus_upper,
    e_rho_minus,
    psi_of_ems,
    shift_add,
    validate_ems,
)
from .operators import (
    OperatorDescriptor,
    OperatorKind,
    apply,
    dual_transport,
    enumerate_lowering,
    enumerate_raising,
)
from .orders import OrderKind, compare, extremal, poset_edges
from .params import (
    Family,
    GroupSpec,
    LocalArthurParameter,
    dual_psi,
    extremal_parameters_of_lambda,
    good_parity_split,
    infinitesimal_of,
    lambda_of,
    partitions_of,
    phi_of,
    validate_parameter,
)
from .partitions import OrderResult
from .suites import SUITES, run_suite
from .vogan import (
    RankTriangle,
    closure_compare,
    partition_from_triangle,
    rank_entry_closed_form,
    rank_triangles,
)

logger = logging.getLogger(__name__)

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class _GroupType(click.ParamType):
    name = "group"

    def convert(self, value, param, ctx):
        if isinstance(value, GroupSpec):
            return value
        try:
            return GroupSpec.parse(value)
        except ArthurLabError as error:
            self.fail(str(error), param, ctx)


GROUP = _GroupType()


def _domain(command):
    """Report domain errors as a failure (status 1) instead of a trace."""

    @functools.wraps(command)
    def _wrapped(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ArthurLabError as error:
            raise click.ClickException(str(error))

    return _wrapped


def _fail(message: str):
    click.echo(message)
    sys.exit(1)


def _group_option(function):
    return click.option("--group", "-g", type=GROUP, required=True)(function)


def _order_option(function):
    return click.option(
        "--order",
        "-o",
        type=click.Choice([kind.value for kind in OrderKind]),
        default=OrderKind.O.value,
        show_default=True,
    )(function)


def _rho_option(function):
    return click.option(
        "--rho", default="tr(1,O)", show_default=True, help="Label acted on."
    )(function)


@click.group()
@click.option("-v", "--verbose", count=True, help="Repeat for more detail.")
@click.option(
    "--fixtures",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Fixture corpus directory.",
)
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.pass_context
def cli(ctx, verbose, fixtures, workers):
    """Local Arthur parameters of Sp(2n) and SO(2n+1)."""
    logging.basicConfig(level=_LEVELS[min(verbose, len(_LEVELS) - 1)])
    ctx.obj = Settings.from_env().evolve(fixtures=fixtures, workers=workers)


# parameters


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def validate(group, parameter):
    report = validate_parameter(parse_parameter(parameter, group))
    click.echo(
        "dimension {} (expected {})".format(report.dimension, report.expected)
    )
    click.echo("good parity: {}".format("yes" if report.good_parity else "no"))
    if not report.ok:
        _fail("invalid")


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def split(group, parameter):
    psi1, psi0 = good_parity_split(parse_parameter(parameter, group))
    click.echo(
        "psi1: {}".format(" + ".join(str(summand) for summand in psi1) or "()")
    )
    click.echo("psi0: {}".format(psi0))


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def dual(group, parameter):
    click.echo(str(dual_psi(parse_parameter(parameter, group))))


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def phi(group, parameter):
    click.echo(str(phi_of(parse_parameter(parameter, group))))


@cli.command(name="lambda")
@_group_option
@click.argument("parameter")
@_domain
def lambda_(group, parameter):
    parsed = parse_dsl(parameter, group)
    if isinstance(parsed, LocalArthurParameter):
        click.echo(str(lambda_of(parsed)))
    else:
        click.echo(str(infinitesimal_of(parsed)))


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def partitions(group, parameter):
    p_arthur, p_deligne = partitions_of(parse_parameter(parameter, group))
    click.echo("p^A = {}".format(p_arthur))
    click.echo("p^D = {}".format(p_deligne))


@cli.command(name="extremal-params")
@_group_option
@click.argument("parameter")
@_domain
def extremal_params(group, parameter):
    psi_open, psi_zero = extremal_parameters_of_lambda(
        parse_parameter(parameter, group)
    )
    click.echo("open: {}".format(psi_open))
    click.echo("zero: {}".format(psi_zero))


# orders


def _parameters(texts, group) -> typing.List[LocalArthurParameter]:
    return [parse_parameter(text, group) for text in texts]


def _format_option(function):
    return click.option(
        "--format",
        "output",
        type=click.Choice(["text", "json"]),
        default="text",
        show_default=True,
    )(function)


@cli.command(name="compare")
@_group_option
@_order_option
@_format_option
@click.argument("left")
@click.argument("right")
@click.pass_obj
@_domain
def compare_command(settings, group, order, output, left, right):
    psi_left = parse_parameter(left, group)
    psi_right = parse_parameter(right, group)
    kind = OrderKind(order)
    result = compare(psi_left, psi_right, kind, settings)
    note = None
    if (
        kind.is_preorder
        and result is OrderResult.EQUAL
        and psi_left != psi_right
    ):
        note = "preorder-equal, parameters differ"
    if output == "json":
        document = {"order": kind.value, "result": result.value}
        if note:
            document["note"] = note
        click.echo(json.dumps(document, indent=2))
        return
    click.echo(result.value)
    if note:
        click.echo("note: {}".format(note))


@cli.command(name="extremal")
@_group_option
@_order_option
@_format_option
@click.argument("candidates", nargs=-1, required=True)
@click.pass_obj
@_domain
def extremal_command(settings, group, order, output, candidates):
    result = extremal(
        _parameters(candidates, group), OrderKind(order), settings
    )
    if output == "json":
        document = {
            "maxima": [str(psi) for psi in result.maxima],
            "minima": [str(psi) for psi in result.minima],
            "unique_max": result.unique_max,
            "unique_min": result.unique_min,
        }
        click.echo(json.dumps(document, indent=2))
        return
    for label, items, unique in (
        ("max", result.maxima, result.unique_max),
        ("min", result.minima, result.unique_min),
    ):
        suffix = " (unique)" if unique else ""
        for psi in items:
            click.echo("{}{}: {}".format(label, suffix, psi))


@cli.command()
@_group_option
@_order_option
@click.option(
    "--format",
    "output",
    type=click.Choice(["text", "json", "dot"]),
    default="text",
    show_default=True,
)
@click.argument("candidates", nargs=-1, required=True)
@click.pass_obj
@_domain
def edges(settings, group, order, output, candidates):
    candidates = _parameters(candidates, group)
    kind = OrderKind(order)
    if output == "dot":
        click.echo(emit_dot(candidates, kind, settings), nl=False)
        return
    covers = poset_edges(candidates, kind, settings)
    if output == "json":
        click.echo(
            json.dumps(
                [[str(upper), str(lower)] for upper, lower in covers],
                indent=2,
            )
        )
        return
    for upper, lower in covers:
        click.echo("{} > {}".format(upper, lower))


# operators


def _print_moves(moves):
    for descriptor, result in moves:
        click.echo("{}: {}".format(descriptor, result))


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def raising(group, parameter):
    _print_moves(enumerate_raising(parse_parameter(parameter, group)))


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def lowering(group, parameter):
    _print_moves(enumerate_lowering(parse_parameter(parameter, group)))


def _indices(text: str) -> typing.Tuple[int, ...]:
    try:
        return tuple(int(item) for item in text.split(","))
    except ValueError:
        raise click.BadParameter("comma separated indices: {}".format(text))


def _descriptor_options(function):
    for option in reversed(
        (
            click.option(
                "--kind",
                type=click.Choice([kind.value for kind in OperatorKind]),
                required=True,
            ),
            click.option("--indices", required=True, help="For example 0,1."),
            click.option("--pivot", default=None),
        )
    ):
        function = option(function)
    return function


def _descriptor(psi, kind, indices, pivot) -> OperatorDescriptor:
    indices = _indices(indices)
    if not 0 <= indices[0] < len(psi.summands):
        raise BadIndex(indices[0], len(psi.summands))
    rho = psi.summands[indices[0]].rho
    return OperatorDescriptor(
        OperatorKind(kind),
        rho,
        indices,
        None if pivot is None else half(pivot),
    )


@cli.command(name="apply")
@_group_option
@_descriptor_options
@click.argument("parameter")
@_domain
def apply_command(group, kind, indices, pivot, parameter):
    psi = parse_parameter(parameter, group)
    application = apply(psi, _descriptor(psi, kind, indices, pivot))
    click.echo(str(application.result))
    if not application.applied:
        _fail("not applicable")


@cli.command()
@_group_option
@_descriptor_options
@click.argument("parameter")
@_domain
def transport(group, kind, indices, pivot, parameter):
    psi = parse_parameter(parameter, group)
    click.echo(str(dual_transport(_descriptor(psi, kind, indices, pivot), psi)))


# geometry


def _lparameter(text, group):
    parsed = parse_dsl(text, group)
    if isinstance(parsed, LocalArthurParameter):
        return phi_of(parsed)
    return parsed


@cli.command()
@_group_option
@click.argument("parameter")
@_domain
def triangle(group, parameter):
    for rho, r in rank_triangles(_lparameter(parameter, group)).items():
        click.echo("{}: {}".format(rho, r))


@cli.command()
@_group_option
@click.argument("left")
@click.argument("right")
@_domain
def closure(group, left, right):
    result = closure_compare(
        _lparameter(left, group), _lparameter(right, group)
    )
    click.echo(result.value)


@cli.command(name="rank-entry")
@click.argument("A")
@click.argument("B")
@click.argument("x")
@click.argument("y")
@_domain
def rank_entry(a, b, x, y):
    click.echo(
        str(rank_entry_closed_form(half(a), half(b), half(x), half(y)))
    )


@cli.command(name="partition-from-triangle")
@click.argument("triangle_text", metavar="TRIANGLE")
@click.argument("dimension", type=click.IntRange(min=0))
@_domain
def partition_from_triangle_command(triangle_text, dimension):
    r = RankTriangle.parse(triangle_text)
    click.echo(str(partition_from_triangle(r, dimension)))


# extended multi-segments


def _load_json(stream) -> codec.Json:
    return codec.loads(stream.read())


def _emit_ems(E, output, **extra):
    if output == "json":
        document = codec.ems_to_json(E)
        document.update(extra)
        click.echo(codec.dumps(document))
        return
    click.echo("{} on {}".format(E, E.group))
    for key, value in sorted(extra.items()):
        if isinstance(value, list):
            value = ", ".join(value) or "-"
        click.echo("{}: {}".format(key, value))


def _ems_command(name):
    def _decorate(function):
        function = click.argument("source", type=click.File("r"))(function)
        function = _format_option(function)
        function = _rho_option(function)
        return ems.command(name=name)(_domain(function))

    return _decorate


@cli.group()
def ems():
    """Extended multi-segments, read from JSON (``-`` for stdin)."""


@ems.command(name="validate")
@click.argument("source", type=click.File("r"))
@_domain
def ems_validate(source):
    report = validate_ems(codec.ems_from_json(_load_json(source)))
    for rho, index, problem in report.row_problems:
        click.echo("{} row {}: {}".format(rho, index, problem))
    click.echo("admissible: {}".format(report.admissible))
    click.echo("P': {}".format(report.p_prime))
    click.echo("sign product: {}".format(report.sign_product))
    click.echo("good parity: {}".format(report.good_parity))
    click.echo("dimension: {}".format(report.dimension_ok))
    if not report.valid:
        _fail("invalid")


@ems.command(name="psi")
@click.argument("source", type=click.File("r"))
@_domain
def ems_psi(source):
    E = codec.ems_from_json(_load_json(source))
    click.echo(str(psi_of_ems(E)))


def _shift_add(rho, output, source, row, d, mode):
    E = codec.ems_from_json(_load_json(source))
    _emit_ems(shift_add(E, parse_label(rho), row, d, mode), output)


@_ems_command("shift")
@click.option("--row", type=int, default=None, help="Whole block if unset.")
@click.option("-d", type=int, default=1, show_default=True)
def ems_shift(rho, output, source, row, d):
    _shift_add(rho, output, source, row, d, Mode.SHIFT)


@_ems_command("add")
@click.option("--row", type=int, default=None, help="Whole block if unset.")
@click.option("-d", type=int, default=1, show_default=True)
def ems_add(rho, output, source, row, d):
    _shift_add(rho, output, source, row, d, Mode.ADD)


@_ems_command("minus")
def ems_minus(rho, output, source):
    result = e_minus(codec.ems_from_json(_load_json(source)), parse_label(rho))
    _emit_ems(result.ems, output, removed=[str(result.removed)], r=result.r)


@_ems_command("rho-minus")
def ems_rho_minus(rho, output, source):
    E = codec.ems_from_json(_load_json(source))
    result = e_rho_minus(E, parse_label(rho))
    _emit_ems(result.ems, output, removed=[str(s) for s in result.removed])


@_ems_command("plus-upper")
@click.option("--x", required=True)
@click.option("--y", required=True)
@click.option("--r", "copies", type=click.IntRange(min=0), default=1)
def ems_plus_upper(rho, output, source, x, y, copies):
    E = codec.ems_from_json(_load_json(source))
    result = e_plus_upper(E, parse_label(rho), half(x), half(y), copies)
    _emit_ems(
        result.ems,
        output,
        branch=result.branch,
        inserted=[str(s) for s in result.inserted],
    )


@_ems_command("plus-lower")
@click.option("--x", required=True)
@click.option("--m", "copies", type=click.IntRange(min=0), default=0)
def ems_plus_lower(rho, output, source, x, copies):
    E = codec.ems_from_json(_load_json(source))
    result = e_plus_lower(E, parse_label(rho), half(x), copies)
    _emit_ems(result.ems, output, inserted=[str(s) for s in result.inserted])


@_ems_command("dual")
def ems_dual(rho, output, source):
    E = codec.ems_from_json(_load_json(source))
    _emit_ems(dual_tempered_ems(E), output)


# L-data


def _ldata(text: str, family: typing.Optional[str]):
    if text == "-":
        text = sys.stdin.read()
    if text.lstrip().startswith("{"):
        return codec.ldata_from_json(
            codec.loads(text), Family(family) if family else None
        )
    if family is None:
        raise click.UsageError("--family is needed for text L-data")
    return parse_ldata(text, Family(family))


def _ldata_command(group, name):
    def _decorate(function):
        function = click.argument("source")(function)
        function = click.option(
            "--family", type=click.Choice([f.value for f in Family])
        )(function)
        return group.command(name=name)(_domain(function))

    return _decorate


@cli.group()
def ldata():
    """Langlands data, as JSON or text (``-`` for stdin)."""


@_ldata_command(ldata, "reduce-upper")
def ldata_reduce_upper(family, source):
    reduction = reduce_upper(_ldata(source, family))
    click.echo(str(reduction.pi_minus))
    click.echo(
        "removed {} x D({})[{},{}]".format(
            reduction.r, reduction.rho, reduction.x, -reduction.y
        )
    )


@_ldata_command(ldata, "reduce-lower")
def ldata_reduce_lower(family, source):
    reduction = reduce_lower(_ldata(source, family))
    click.echo(str(reduction.pi_minus))
    click.echo(
        "removed {}".format(", ".join(str(s) for s in reduction.removed))
    )


@_ldata_command(ldata, "max-b")
@_group_option
@click.option("--parameter", "-p", required=True)
def ldata_max_b(family, source, group, parameter):
    pi = _ldata(source, family)
    result = max_b_check(pi, parse_parameter(parameter, group))
    click.echo("holds: {}".format(result.holds))
    click.echo("equality: {}".format(result.equality))
    if not result.holds:
        _fail("max b bound violated")


@_ldata_command(ldata, "insert")
@click.option("--segments", "-s", required=True)
def ldata_insert(family, source, segments):
    pi = insert_segments(_ldata(source, family), parse_segments(segments))
    click.echo(str(pi))


@cli.group()
def predicate():
    """Membership conditions for one step of the Arthur type tests."""


def _echo_predicate(result):
    if result.ok:
        click.echo(str(result.psi_plus))
        return
    for failure in result.failures:
        click.echo("fails: {}".format(failure))
    _fail("predicate fails")


@predicate.command(name="upper")
@_group_option
@_rho_option
@click.option("--x", required=True)
@click.option("--y", required=True)
@click.option("--r", "copies", type=click.IntRange(min=0), default=1)
@click.argument("parameter")
@_domain
def predicate_upper_command(group, rho, x, y, copies, parameter):
    result = predicate_upper(
        parse_parameter(parameter, group),
        parse_label(rho),
        half(x),
        half(y),
        copies,
    )
    _echo_predicate(result)


@predicate.command(name="lower")
@_group_option
@click.option("--segments", "-s", required=True)
@click.option("--x", required=True)
@click.argument("parameter")
@_domain
def predicate_lower_command(group, segments, x, parameter):
    result = predicate_lower(
        parse_parameter(parameter, group), parse_segments(segments), half(x)
    )
    _echo_predicate(result)


# suites


@cli.command()
@click.argument("name", type=click.Choice(SUITES))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--trials", type=click.IntRange(min=0), default=1000, show_default=True
)
@click.pass_obj
def suite(settings, name, seed, trials):
    report = run_suite(name, seed, trials, settings)
    click.echo(str(report))
    if not report.ok:
        sys.exit(1)


def main():
    cli(prog_name="arthurlab")
