import pytest

import arthurlab

CONCRETE_ERRORS = [
    arthurlab.BadTypeError,
    arthurlab.AttributeTypeError,
    arthurlab.ParseError,
    arthurlab.GroupMismatch,
    arthurlab.TotalMismatch,
    arthurlab.InfinitesimalMismatch,
    arthurlab.SearchExhausted,
    arthurlab.BadIndex,
    arthurlab.NotApplicable,
    arthurlab.InvariantBroken,
    arthurlab.PPrimeViolated,
    arthurlab.RowExchangeRequired,
    arthurlab.HypothesisFailed,
    arthurlab.TemperedData,
    arthurlab.UnknownFixture,
]


def test_version():
    assert hasattr(arthurlab, "__version__")


def test_exports_are_importable():
    for name in arthurlab.__all__:
        assert hasattr(arthurlab, name), name


def test_base_error_is_a_plain_exception():
    assert issubclass(arthurlab.ArthurLabError, Exception)
    assert not issubclass(arthurlab.ArthurLabError, ValueError)


@pytest.mark.parametrize(
    "error", CONCRETE_ERRORS, ids=[e.__name__ for e in CONCRETE_ERRORS]
)
def test_concrete_errors_are_value_errors(error):
    assert issubclass(error, arthurlab.ArthurLabError)
    assert issubclass(error, ValueError)


def test_lookup_errors_keep_their_builtin_kind():
    assert issubclass(arthurlab.BadIndex, IndexError)
    assert issubclass(arthurlab.UnknownFixture, KeyError)
