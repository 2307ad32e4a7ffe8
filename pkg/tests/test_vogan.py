import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from arthurlab import (
    AssumptionViolated,
    GroupMismatch,
    InfinitesimalMismatch,
    InvariantBroken,
    NegativeMultiplicity,
    OrderResult,
    Partition,
    RankTriangle,
    cancel_common,
    closure_compare,
    half,
    m_matrix,
    parse_lparameter,
    parse_parameter,
    partition_from_triangle,
    partition_of_phi,
    phi_of,
    rank_entry_by_count,
    rank_entry_closed_form,
    rank_triangle,
    rank_triangles,
    unramified_reduction,
)
from arthurlab.halfint import HalfInt
from arthurlab.params import TRIVIAL
from arthurlab.sampling import random_unramified

GRID = [half(value) for value in ("-3/2", "-1/2", "1/2", "3/2")]


def so9_phi(text):
    return phi_of(parse_parameter(text, "SO:9"))


def test_triangle_text():
    triangle = RankTriangle.parse("1 1 0 / 3 1 / 1")

    assert triangle.size == 3
    assert str(triangle) == "1 1 0 / 3 1 / 1"
    assert triangle.entry(1, 1) == 1
    assert triangle.entry(1, 3) == 0
    assert triangle.entry(2, 2) == 3
    assert triangle.entry(3, 3) == 1


def test_empty_triangle():
    triangle = RankTriangle.parse("-")

    assert triangle == RankTriangle.zero(0)
    assert str(triangle) == "-"


@pytest.mark.parametrize(
    "size, rows",
    [(2, [[1], [1]]), (2, [[1, 0]]), (1, [[-1]])],
)
def test_triangle_rejects_bad_rows(size, rows):
    with pytest.raises(InvariantBroken):
        RankTriangle(size, rows)


def test_triangle_addition_and_compare():
    small = RankTriangle.parse("0 0 / 1")
    large = RankTriangle.parse("1 0 / 1")

    assert str(small + large) == "1 0 / 2"
    assert large.compare(small) is OrderResult.GREATER
    assert small.compare(large) is OrderResult.LESS
    assert small.compare(small) is OrderResult.EQUAL
    assert RankTriangle.parse("1 0 / 0").compare(small) is (
        OrderResult.INCOMPARABLE
    )
    with pytest.raises(InvariantBroken):
        small + RankTriangle.zero(1)


@pytest.mark.parametrize(
    "x, a, expected",
    [
        ("0", 2, "0 0 0 / 1 0 / 0"),
        ("1/2", 3, "0 0 0 / 1 1 / 1"),
        ("-1/2", 3, "1 1 0 / 1 0 / 0"),
        ("0", 4, "1 1 1 / 1 1 / 1"),
        ("3/2", 1, "0 0 0 / 0 0 / 0"),
    ],
)
def test_m_matrix(x, a, expected):
    assert str(m_matrix(half(x), a, GRID)) == expected


def test_unramified_reduction():
    reduction = unramified_reduction(so9_phi("tr(1,O).S2.S1 + tr(1,O).S3.S2"))

    block = reduction[TRIVIAL]
    assert block.grid == tuple(GRID)
    assert str(block) == "[-1/2].S3 + [0].S2 + [1/2].S3"
    assert block.dimension == 8


@pytest.mark.parametrize(
    "text, triangle",
    [
        ("2*tr(1,O).S2.S1 + tr(1,O).S4.S1", "1 1 1 / 3 1 / 1"),
        ("tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1", "1 1 1 / 2 1 / 1"),
        ("tr(1,O).S2.S1 + tr(1,O).S3.S2", "1 1 0 / 3 1 / 1"),
        ("tr(1,O).S1.S2 + tr(1,O).S3.S2", "1 1 0 / 2 1 / 1"),
    ],
)
def test_rank_triangles(text, triangle):
    assert str(rank_triangles(so9_phi(text))[TRIVIAL]) == triangle


@pytest.mark.parametrize(
    "text, bullet",
    [
        ("tr(1,O)[0].S1 + tr(1,O)[1/2].S1 + tr(1,O)[-1/2].S1", "integral"),
        ("tr(1,O)[1].S1", "symmetric grid"),
        ("chi(1,~chib)[0].S1", "self-dual label"),
    ],
)
def test_unramified_reduction_assumptions(text, bullet):
    with pytest.raises(AssumptionViolated) as error:
        unramified_reduction(parse_lparameter(text, "SO:3"))

    assert bullet in repr(error.value)


def test_assumption_message():
    phi = parse_lparameter("tr(1,O)[1].S1", "SO:3")

    with pytest.raises(AssumptionViolated) as error:
        unramified_reduction(phi)

    assert repr(error.value) == (
        "<eigenvalue grid (1) violates the symmetric grid assumption>"
    )


def test_cancel_common():
    phi1 = so9_phi("2*tr(1,O).S2.S1 + tr(1,O).S4.S1")
    phi2 = so9_phi("tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1")

    reduced1, reduced2 = cancel_common(phi1, phi2)

    assert str(reduced1) == "tr(1,O)[0].S2"
    assert str(reduced2) == "tr(1,O)[-1/2].S1 + tr(1,O)[1/2].S1"
    assert reduced1.group == phi1.group


def test_cancel_common_without_shared_summands():
    phi1 = parse_lparameter("tr(1,O)[1/2].S1 + tr(1,O)[-1/2].S1", "SO:3")
    phi2 = parse_lparameter("tr(1,O)[0].S2", "SO:3")

    reduced1, reduced2 = cancel_common(phi1, phi2)

    assert (reduced1, reduced2) == (phi1, phi2)


def test_cancel_common_checks_inputs():
    phi = so9_phi("tr(1,O).S4.S2")
    with pytest.raises(GroupMismatch):
        cancel_common(phi, parse_lparameter("tr(1,O)[0].S1", "Sp:0"))
    with pytest.raises(InfinitesimalMismatch):
        cancel_common(phi, so9_phi("tr(1,O).S8.S1"))


@pytest.mark.parametrize(
    "left, right, expected",
    [
        (
            "2*tr(1,O).S2.S1 + tr(1,O).S4.S1",
            "tr(1,O).S1.S2 + tr(1,O).S3.S2",
            OrderResult.GREATER,
        ),
        (
            "tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1",
            "tr(1,O).S2.S1 + tr(1,O).S3.S2",
            OrderResult.INCOMPARABLE,
        ),
        (
            "tr(1,O).S1.S2 + tr(1,O).S3.S2",
            "tr(1,O).S1.S2 + tr(1,O).S3.S2",
            OrderResult.EQUAL,
        ),
    ],
)
def test_closure_compare(left, right, expected):
    assert closure_compare(so9_phi(left), so9_phi(right)) is expected


@pytest.mark.parametrize(
    "A, B, x, y, expected",
    [
        ("3/2", "1/2", "1/2", "-1/2", 2),
        ("3/2", "1/2", "1/2", "-3/2", 1),
        ("3/2", "1/2", "3/2", "-3/2", 0),
        ("5/2", "1/2", "3/2", "-1/2", 2),
        ("5/2", "1/2", "5/2", "3/2", 1),
        ("3/2", "-1/2", "3/2", "1/2", 1),
        ("3/2", "-1/2", "3/2", "-1/2", 0),
    ],
)
def test_rank_entry(A, B, x, y, expected):
    values = [half(value) for value in (A, B, x, y)]

    assert rank_entry_closed_form(*values) == expected
    assert rank_entry_by_count(*values) == expected


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_entry_formulas_agree(a, b, data):
    assume(a + b > 2)
    A, B = HalfInt(a + b - 2), HalfInt(a - b)
    high = data.draw(st.integers(0, a + b - 3))
    low = data.draw(st.integers(high + 1, a + b - 2))
    x, y = A - high, A - low

    assert rank_entry_closed_form(A, B, x, y) == rank_entry_by_count(
        A, B, x, y
    )


def test_partition_from_triangle():
    triangle = RankTriangle.parse("1 1 0 / 3 1 / 1")

    assert partition_from_triangle(triangle, 8) == Partition([3, 3, 2])
    assert partition_from_triangle(RankTriangle.zero(0), 3) == Partition(
        [1, 1, 1]
    )


@pytest.mark.parametrize(
    "text, dimension, message",
    [
        ("1 0 / 0", 1, "<rank triangle gives part 1 multiplicity -1>"),
        ("0 1 / 0", 5, "<rank triangle gives part 2 multiplicity -2>"),
    ],
)
def test_partition_from_triangle_rejects(text, dimension, message):
    with pytest.raises(NegativeMultiplicity) as error:
        partition_from_triangle(RankTriangle.parse(text), dimension)

    assert repr(error.value) == message


@settings(max_examples=50)
@given(st.randoms(use_true_random=False))
def test_triangle_recovers_partition(rng):
    phi = random_unramified(rng)

    block = unramified_reduction(phi)[TRIVIAL]
    recovered = partition_from_triangle(rank_triangle(block), phi.dimension)

    assert recovered == partition_of_phi(phi)
