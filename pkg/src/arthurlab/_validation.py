import typing

from ._error import AttributeTypeError, BadTypeError, RangeError, TupleError


class SimilarTypes:
    Tuple = {tuple, typing.Tuple}


def type_validator():
    """
    Validates the attributes using the type argument specified. If the
    type argument is not present, the attribute is considered valid.

    Integer fields reject ``bool`` even though it subclasses ``int``.
    """

    def _validator(instance, attribute, field):
        _validate_elements(attribute, field, attribute.type)

    return _validator


def positive():
    def _validator(instance, attribute, field):
        if field < 1:
            raise RangeError(field, attribute, "positive")

    return _validator


def non_negative():
    def _validator(instance, attribute, field):
        if field < 0:
            raise RangeError(field, attribute, "non-negative")

    return _validator


def unit_sign():
    def _validator(instance, attribute, field):
        if field not in (1, -1):
            raise RangeError(field, attribute, "+1 or -1")

    return _validator


def _validate_elements(attribute, value, expected_type):
    if expected_type is None:
        return

    base_type = _get_base_type(expected_type)

    if base_type == typing.Any:
        return

    if base_type == typing.Union:  # type: ignore
        _handle_union(attribute, value, expected_type)
        return

    if not isinstance(value, base_type) or (
        base_type is int and isinstance(value, bool)
    ):
        raise AttributeTypeError(value, attribute)

    if base_type in SimilarTypes.Tuple:
        _handle_tuple(attribute, value, expected_type)


def _get_base_type(type_):
    origin = getattr(type_, "__origin__", None)
    if origin is not None:
        return origin

    return type_


def _handle_tuple(attribute, container, expected_type):
    tuple_types = getattr(expected_type, "__args__", None)
    if not tuple_types:
        return
    if len(tuple_types) == 2 and tuple_types[1] == Ellipsis:
        element_type = tuple_types[0]
        tuple_types = (element_type,) * len(container)

    if len(container) != len(tuple_types):
        raise TupleError(container, attribute, tuple_types)

    for element, element_type in zip(container, tuple_types):
        try:
            _validate_elements(attribute, element, element_type)
        except BadTypeError as error:
            error.add_container(container)
            raise error


def _handle_union(attribute, value, expected_type):
    if value is None and type(None) in expected_type.__args__:
        return

    for arg in expected_type.__args__:
        try:
            _validate_elements(attribute, value, arg)
            return
        except ValueError:
            pass
    raise AttributeTypeError(value, attribute)
