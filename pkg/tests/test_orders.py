import pytest

from arthurlab import (
    GroupMismatch,
    InfinitesimalMismatch,
    OrderKind,
    OrderResult,
    compare,
    extremal,
    parse_parameter,
    poset_edges,
)
from arthurlab.orders import covering_operator

PSI_1 = "2*tr(1,O).S2.S1 + tr(1,O).S4.S1"
PSI_2 = "tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1"
PSI_3 = "tr(1,O).S2.S1 + tr(1,O).S3.S2"
PSI_4 = "tr(1,O).S1.S2 + tr(1,O).S3.S2"
DIAMOND = [PSI_1, PSI_2, PSI_3, PSI_4]


def so9(text):
    return parse_parameter(text, "SO:9")


@pytest.mark.parametrize(
    "kind, left, right, expected",
    [
        (OrderKind.A, PSI_1, PSI_2, OrderResult.GREATER),
        (OrderKind.A, PSI_4, PSI_3, OrderResult.LESS),
        (OrderKind.A, PSI_2, PSI_2, OrderResult.EQUAL),
        (OrderKind.D, PSI_2, PSI_3, OrderResult.INCOMPARABLE),
        (OrderKind.D, PSI_1, PSI_4, OrderResult.GREATER),
        (OrderKind.O, PSI_1, PSI_4, OrderResult.GREATER),
        (OrderKind.O, PSI_4, PSI_2, OrderResult.LESS),
        (OrderKind.O, PSI_2, PSI_3, OrderResult.INCOMPARABLE),
        (OrderKind.O, PSI_3, PSI_3, OrderResult.EQUAL),
        (OrderKind.C, PSI_2, PSI_3, OrderResult.INCOMPARABLE),
        (OrderKind.C, PSI_1, PSI_2, OrderResult.GREATER),
        (
            OrderKind.C,
            "tr(1,O).S1.S2 + tr(1,O).S2.S3",
            "tr(1,O).S1.S2 + tr(1,O).S1.S4 + tr(1,O).S2.S1",
            OrderResult.GREATER,
        ),
    ],
)
def test_compare(kind, left, right, expected):
    assert compare(so9(left), so9(right), kind) == expected


@pytest.mark.parametrize(
    "kind, expected",
    [
        (OrderKind.D, OrderResult.GREATER),
        (OrderKind.C, OrderResult.INCOMPARABLE),
    ],
)
def test_deligne_is_weaker_than_closure(kind, expected):
    left = parse_parameter(
        "tr(1,O).S1.S2 + tr(1,O).S1.S4 + tr(1,O).S6.S1", "SO:13"
    )
    right = parse_parameter("tr(1,O).S1.S6 + tr(1,O).S3.S2", "SO:13")

    assert compare(left, right, kind) == expected


def test_preorders_tie_distinct_parameters():
    left = parse_parameter("tr(1,O).S2.S2", "SO:5")
    right = parse_parameter("2*tr(1,O).S2.S1", "SO:5")

    assert compare(left, right, OrderKind.D) is OrderResult.EQUAL
    assert compare(left, right, OrderKind.A) is OrderResult.LESS
    assert OrderKind.D.is_preorder
    assert not OrderKind.C.is_preorder


def test_compare_needs_same_group():
    with pytest.raises(GroupMismatch) as error:
        compare(
            so9(PSI_1),
            parse_parameter("tr(1,O).S1.S1", "Sp:0"),
            OrderKind.A,
        )

    assert repr(error.value) == (
        "<parameters live on different groups: SO:9 and Sp:0>"
    )


@pytest.mark.parametrize("kind", [OrderKind.O, OrderKind.C])
def test_compare_needs_same_infinitesimal_parameter(kind):
    with pytest.raises(InfinitesimalMismatch):
        compare(so9(PSI_1), so9("tr(1,O).S8.S1"), kind)


def test_arthur_order_ignores_infinitesimal_parameter():
    result = compare(so9("tr(1,O).S8.S1"), so9(PSI_1), OrderKind.A)

    assert result is OrderResult.EQUAL


@pytest.mark.parametrize("kind", [OrderKind.O, OrderKind.C])
def test_extremal_diamond(kind):
    result = extremal([so9(text) for text in DIAMOND], kind)

    assert [str(psi) for psi in result.maxima] == [PSI_1]
    assert [str(psi) for psi in result.minima] == [PSI_4]
    assert result.unique_max
    assert result.unique_min


def test_extremal_with_ties_is_not_unique():
    candidates = [
        parse_parameter("tr(1,O).S2.S2", "SO:5"),
        parse_parameter("2*tr(1,O).S2.S1", "SO:5"),
    ]

    result = extremal(candidates, OrderKind.D)

    assert len(result.maxima) == 2
    assert not result.unique_max
    assert not result.unique_min


def test_extremal_drops_duplicates():
    result = extremal([so9(PSI_1), so9(PSI_1)], OrderKind.O)

    assert result.maxima == result.minima == (so9(PSI_1),)
    assert result.unique_max


def _edges(kind, texts=DIAMOND):
    return [
        (str(upper), str(lower))
        for upper, lower in poset_edges([so9(text) for text in texts], kind)
    ]


def test_arthur_order_is_a_chain():
    assert _edges(OrderKind.A) == [
        (PSI_1, PSI_2),
        (PSI_2, PSI_3),
        (PSI_3, PSI_4),
    ]


@pytest.mark.parametrize("kind", [OrderKind.O, OrderKind.C, OrderKind.D])
def test_diamond_edges(kind):
    assert _edges(kind) == [
        (PSI_1, PSI_2),
        (PSI_1, PSI_3),
        (PSI_2, PSI_4),
        (PSI_3, PSI_4),
    ]


def test_covering_operator_labels():
    labels = [
        covering_operator(so9(upper), so9(lower)).kind.value
        for upper, lower in _edges(OrderKind.O)
    ]

    assert labels == ["dual^-", "ui^-1", "ui^-1", "dual^-"]


def test_no_covering_operator():
    assert covering_operator(so9(PSI_1), so9(PSI_4)) is None
