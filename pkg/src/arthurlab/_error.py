from ._commons import format_type


class ArthurLabError(Exception):
    def __repr__(self):
        return "<{}>".format(str(self))


class BadTypeError(ArthurLabError, ValueError):
    def __init__(self):
        self.containers = []

    def add_container(self, container):
        self.containers.append(container)

    def _render(self, error):
        if self.containers:
            backtrack = " in ".join(
                [str(container) for container in self.containers]
            )
            return "{} in {}".format(error, backtrack)

        return error


class AttributeTypeError(BadTypeError):
    def __init__(self, value, attribute):
        super().__init__()
        self.value = value
        self.attribute = attribute

    def __str__(self):
        error = "{} must be {} (got {} that is a {})".format(
            self.attribute.name,
            format_type(self.attribute.type),
            self.value,
            type(self.value),
        )
        return self._render(error)


class TupleError(BadTypeError):
    def __init__(self, container, attribute, tuple_types):
        super().__init__()
        self.attribute = attribute
        self.container = container
        self.tuple_types = tuple_types

    def __str__(self):
        error = (
            "Element {} has {} elements than types specified in {}. "
            "Expected {} received {}"
        ).format(
            self.container,
            self._more_or_less(),
            format_type(self.attribute.type),
            len(self.tuple_types),
            len(self.container),
        )
        return self._render(error)

    def _more_or_less(self):
        return "more" if len(self.container) > len(self.tuple_types) else "less"


class RangeError(BadTypeError):
    def __init__(self, value, attribute, expected):
        super().__init__()
        self.value = value
        self.attribute = attribute
        self.expected = expected

    def __str__(self):
        return self._render(
            "{} must be {} (got {})".format(
                self.attribute.name, self.expected, self.value
            )
        )


class ParseError(ArthurLabError, ValueError):
    def __init__(self, text, position, expected=()):
        self.text = text
        self.position = position
        self.expected = tuple(sorted(expected))

    def __str__(self):
        message = "cannot parse {!r} at position {}".format(
            self.text, self.position
        )
        if self.expected:
            message += ", expected one of {}".format(", ".join(self.expected))
        return message


class UnpairableBadParity(ArthurLabError, ValueError):
    def __init__(self, summand):
        self.summand = summand

    def __str__(self):
        return "bad parity summand {} has no dual partner to pair with".format(
            self.summand
        )


class GroupMismatch(ArthurLabError, ValueError):
    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __str__(self):
        return "parameters live on different groups: {} and {}".format(
            self.left, self.right
        )


class TotalMismatch(ArthurLabError, ValueError):
    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __str__(self):
        return "partitions {} and {} have different totals".format(
            self.left, self.right
        )


class InfinitesimalMismatch(ArthurLabError, ValueError):
    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __str__(self):
        return "infinitesimal parameters differ: {} and {}".format(
            self.left, self.right
        )


class SearchExhausted(ArthurLabError, ValueError):
    def __init__(self, visited, limit):
        self.visited = visited
        self.limit = limit

    def __str__(self):
        return "raising search visited {} states, limit is {}".format(
            self.visited, self.limit
        )


class BadIndex(ArthurLabError, IndexError, ValueError):
    def __init__(self, index, size):
        self.index = index
        self.size = size

    def __str__(self):
        return "summand index {} out of range for {} summands".format(
            self.index, self.size
        )


class BadKind(ArthurLabError, ValueError):
    def __init__(self, kind):
        self.kind = kind

    def __str__(self):
        return "{} is not a raising operator".format(self.kind.value)


class NotApplicable(ArthurLabError, ValueError):
    def __init__(self, operator, parameter):
        self.operator = operator
        self.parameter = parameter

    def __str__(self):
        return "{} does not apply to {}".format(self.operator, self.parameter)


class AssumptionViolated(ArthurLabError, ValueError):
    def __init__(self, bullet, grid):
        self.bullet = bullet
        self.grid = grid

    def __str__(self):
        return "eigenvalue grid {} violates the {} assumption".format(
            "({})".format(", ".join(str(value) for value in self.grid)),
            self.bullet,
        )


class NegativeMultiplicity(ArthurLabError, ValueError):
    def __init__(self, part, multiplicity):
        self.part = part
        self.multiplicity = multiplicity

    def __str__(self):
        return "rank triangle gives part {} multiplicity {}".format(
            self.part, self.multiplicity
        )


class InvariantBroken(ArthurLabError, ValueError):
    def __init__(self, invariant, value):
        self.invariant = invariant
        self.value = value

    def __str__(self):
        return "{} breaks invariant {}".format(self.value, self.invariant)


class NoWideRow(ArthurLabError, ValueError):
    def __init__(self, rho):
        self.rho = rho

    def __str__(self):
        return "block {} has no row with A != B".format(self.rho)


class PPrimeViolated(ArthurLabError, ValueError):
    def __init__(self, rho):
        self.rho = rho

    def __str__(self):
        return "block {} does not have nondecreasing B".format(self.rho)


class RowExchangeRequired(ArthurLabError, ValueError):
    def __init__(self, rho, row):
        self.rho = rho
        self.row = row

    def __str__(self):
        return (
            "block {} needs a row exchange to move {} to the end of its "
            "equal-B run"
        ).format(self.rho, self.row)


class LZero(ArthurLabError, ValueError):
    def __init__(self, rho, row):
        self.rho = rho
        self.row = row

    def __str__(self):
        return "row {} of block {} has l = 0".format(self.row, self.rho)


class HypothesisFailed(ArthurLabError, ValueError):
    def __init__(self, bullet, detail):
        self.bullet = bullet
        self.detail = detail

    def __str__(self):
        return "hypothesis {} fails: {}".format(self.bullet, self.detail)


class DecompositionFailed(ArthurLabError, ValueError):
    def __init__(self, rho, x):
        self.rho = rho
        self.x = x

    def __str__(self):
        return "block {} does not split at B <= {} < B".format(self.rho, self.x)


class NotTemperedAllPlus(ArthurLabError, ValueError):
    def __init__(self, row):
        self.row = row

    def __str__(self):
        return "row {} is not of the form ([A,A],0,+1)".format(self.row)


class TemperedData(ArthurLabError, ValueError):
    def __init__(self, ldata):
        self.ldata = ldata

    def __str__(self):
        return "{} has no segments".format(self.ldata)


class UnknownFixture(ArthurLabError, KeyError, ValueError):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return "no fixture named {}".format(self.name)
