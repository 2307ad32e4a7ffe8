import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arthurlab import (
    DecompositionFailed,
    ExtendedSegment,
    Family,
    HypothesisFailed,
    InvariantBroken,
    LZero,
    Mode,
    NotTemperedAllPlus,
    NoWideRow,
    PPrimeViolated,
    RowExchangeRequired,
    dual_tempered_ems,
    e_minus,
    e_plus_lower,
    e_plus_upper,
    e_rho_minus,
    parse_ems,
    parse_ldata,
    psi_of_ems,
    shift_add,
    tempered_ems,
    validate_ems,
)
from arthurlab.ldata import Segment
from arthurlab.params import TRIVIAL
from arthurlab.sampling import random_ems

E = "tr(1,O): ([3,-3],3,+1); ([1,-1],1,-1); ([0,0],0,-1)"
E1 = "tr(1,O): ([2,-2],2,+1); ([1,-1],1,-1); ([0,0],0,-1)"

def ems(text):
    return parse_ems(text, Family.SP)

def test_eta_is_normalised_when_l_is_half_of_b():
    assert ExtendedSegment(1, 0, 1, -1).eta == 1
    assert ExtendedSegment(1, -1, 1, -1).eta == -1

@pytest.mark.parametrize(
    "row, sign",
    [
        (ExtendedSegment(3, -3, 3, 1), 1),
        (ExtendedSegment(1, -1, 1, -1), -1),
        (ExtendedSegment(0, 0, 0, -1), -1),
        (ExtendedSegment(2, 0, 1, 1), 1),
    ],
)
def test_row_sign(row, sign):
    assert row.sign() == sign

def test_validate_chain_start():
    report = validate_ems(ems(E))

    assert report.valid
    assert report.sign_product == 1
    assert report.p_prime
    assert report.admissible

def test_validate_reports_row_problems():
    E0 = parse_ems("tr(1,O): ([0,1],0,+1); ([1,0],2,+1)", "Sp:4")

    report = validate_ems(E0)

    assert report.row_problems == (
        ("tr(1,O)", 0, "width"),
        ("tr(1,O)", 1, "l_range"),
    )
    assert not report.valid

def test_validate_sign_product():
    report = validate_ems(ems("tr(1,O): ([0,0],0,-1)"))

    assert report.sign_product == -1
    assert not report.valid

def test_validate_admissible_and_p_prime():
    report = validate_ems(
        ems("tr(1,O): ([2,2],0,+1); ([1,1],0,+1); ([0,0],0,+1)")
    )

    assert not report.admissible
    assert not report.p_prime

def test_psi_of_ems():
    psi = psi_of_ems(ems(E))

    assert str(psi) == "tr(1,O).S1.S1 + tr(1,O).S1.S3 + tr(1,O).S1.S7"
    assert psi.group == ems(E).group

@pytest.mark.parametrize(
    "j, d, mode, expected, group",
    [
        (
            2,
            1,
            Mode.SHIFT,
            "tr(1,O): ([3,-3],3,+1); ([1,-1],1,-1); ([1,1],0,-1)",
            "Sp:12",
        ),
        (
            1,
            -1,
            Mode.ADD,
            "tr(1,O): ([3,-3],3,+1); ([0,0],0,-1); ([0,0],0,-1)",
            "Sp:8",
        ),
        (
            None,
            1,
            Mode.SHIFT,
            "tr(1,O): ([4,-2],3,+1); ([2,0],1,-1); ([1,1],0,-1)",
            "Sp:32",
        ),
    ],
)
def test_shift_add(j, d, mode, expected, group):
    result = shift_add(ems(E), TRIVIAL, j, d, mode)

    assert str(result) == expected
    assert str(result.group) == group

def test_add_drops_rows_shrunk_to_nothing():
    E2 = ems("tr(1,O): ([0,0],0,+1); ([1,0],1,+1)")

    result = shift_add(E2, TRIVIAL, 1, -1, Mode.ADD)

    assert str(result) == "tr(1,O): ([0,0],0,+1)"

@pytest.mark.parametrize("j, d, mode", [(2, -1, Mode.ADD), (5, 1, Mode.SHIFT)])
def test_shift_add_rejects(j, d, mode):
    with pytest.raises(InvariantBroken):
        shift_add(ems(E), TRIVIAL, j, d, mode)

def test_e_minus_chain():
    # GIVEN the start of the chain
    start = ems(E)

    # WHEN
    result = e_minus(start, TRIVIAL)

    # THEN
    assert str(result.ems) == E1
    assert str(result.ems.group) == "Sp:8"
    assert result.removed == Segment(TRIVIAL, -3, 3)
    assert result.r == 1
    assert validate_ems(result.ems).valid

def test_e_minus_shrinks_every_copy():
    result = e_minus(
        ems("tr(1,O): ([0,0],0,+1); ([2,0],1,+1); ([2,0],1,+1)"), TRIVIAL
    )

    assert str(result.ems) == (
        "tr(1,O): ([0,0],0,+1); ([1,1],0,+1); ([1,1],0,+1)"
    )
    assert str(result.removed) == "D(tr(1,O))[0,-2]"
    assert result.r == 2

def test_e_minus_needs_row_exchange():
    with pytest.raises(RowExchangeRequired):
        e_minus(ems("tr(1,O): ([1,0],0,+1); ([0,0],0,-1)"), TRIVIAL)

def test_e_minus_ignores_equal_b_rows_away_from_the_widest():
    # GIVEN an equal-B pair out of A order below the widest row [5,1]
    start = ems("tr(1,O): ([2,0],1,+1); ([0,0],0,+1); ([5,1],1,+1)")

    # WHEN
    result = e_minus(start, TRIVIAL)

    # THEN only the widest row shrinks
    assert result.r == 1
    assert str(result.removed) == "D(tr(1,O))[1,-5]"
    assert [
        (row.A, row.B, row.l) for row in result.ems.block(TRIVIAL)
    ] == [(2, 0, 1), (0, 0, 0), (4, 2, 0)]

@pytest.mark.parametrize("step", [e_minus, e_rho_minus])
def test_needs_p_prime(step):
    with pytest.raises(PPrimeViolated) as error:
        step(
            ems("tr(1,O): ([1,1],0,+1); ([2,0],1,+1); ([0,0],0,+1)"), TRIVIAL
        )

    assert repr(error.value) == "<block tr(1,O) does not have nondecreasing B>"

@pytest.mark.parametrize("step", [e_minus, e_rho_minus])
def test_no_wide_row(step):
    with pytest.raises(NoWideRow) as error:
        step(ems("tr(1,O): ([0,0],0,+1)"), TRIVIAL)

    assert repr(error.value) == "<block tr(1,O) has no row with A != B>"

def test_e_rho_minus_takes_lowest_wide_rows():
    result = e_rho_minus(ems("tr(1,O): ([1,0],1,+1); ([3,1],1,+1)"), TRIVIAL)

    assert str(result.ems) == "tr(1,O): ([3,1],1,+1)"
    assert str(result.ems.group) == "Sp:14"
    assert [str(segment) for segment in result.removed] == [
        "D(tr(1,O))[0,-1]"
    ]

def test_e_rho_minus_needs_positive_l():
    with pytest.raises(LZero):
        e_rho_minus(ems("tr(1,O): ([1,0],0,+1); ([2,2],0,+1)"), TRIVIAL)

def test_e_plus_upper_undoes_e_minus():
    result = e_plus_upper(ems(E1), TRIVIAL, -3, 3, 1)

    assert result.branch == "add"
    assert result.ems == ems(E)
    assert result.inserted == (Segment(TRIVIAL, -3, 3),)

def test_e_plus_upper_inserts_new_rows():
    result = e_plus_upper(ems("tr(1,O): ([0,0],0,+1)"), TRIVIAL, 0, 1, 1)

    assert result.branch == "insert"
    assert str(result.ems) == "tr(1,O): ([0,0],0,+1); ([1,0],1,+1)"
    assert str(result.ems.group) == "Sp:4"

def test_e_plus_upper_with_no_copies_is_identity():
    start = ems(E1)

    result = e_plus_upper(start, TRIVIAL, -3, 3, 0)

    assert result.ems == start
    assert result.inserted == ()

def test_e_plus_upper_missing_rows():
    with pytest.raises(HypothesisFailed):
        e_plus_upper(ems(E1), TRIVIAL, -4, 4, 1)

def test_e_plus_lower():
    result = e_plus_lower(
        ems("tr(1,O): ([0,0],0,+1); ([2,1],1,+1)"), TRIVIAL, 0, 1
    )

    assert result.branch == "lower"
    assert str(result.ems) == (
        "tr(1,O): ([0,0],0,+1); ([1,0],1,+1); ([3,0],2,+1)"
    )
    assert [str(segment) for segment in result.inserted] == [
        "D(tr(1,O))[0,-1]",
        "D(tr(1,O))[0,-3]",
    ]

def test_e_plus_lower_needs_decomposition():
    with pytest.raises(DecompositionFailed):
        e_plus_lower(
            ems("tr(1,O): ([1,0],1,+1); ([0,0],0,+1)"), TRIVIAL, 0, 1
        )

def test_tempered_ems():
    pi = parse_ldata("L(; pi(tr(1,O)[0]+))", Family.SP)

    E0 = tempered_ems(pi)

    assert str(E0) == "tr(1,O): ([0,0],0,+1)"
    assert str(E0.group) == "Sp:0"

def test_tempered_ems_needs_tempered_data():
    pi = parse_ldata("L(D(tr(1,O))[0,-1]; pi(tr(1,O)[0]+))", Family.SP)

    with pytest.raises(InvariantBroken):
        tempered_ems(pi)

def test_dual_tempered_ems():
    E0 = parse_ems(
        "tr(1,O): ([1/2,1/2],0,+1); ([3/2,3/2],0,+1)", Family.SO
    )

    dual = dual_tempered_ems(E0)

    assert str(dual) == "tr(1,O): ([3/2,-3/2],2,+1); ([1/2,-1/2],1,+1)"
    assert str(dual.group) == "SO:7"

def test_dual_tempered_needs_all_plus():
    E0 = parse_ems(
        "tr(1,O): ([1/2,1/2],0,-1); ([3/2,3/2],0,-1)", Family.SO
    )

    with pytest.raises(NotTemperedAllPlus):
        dual_tempered_ems(E0)

@settings(max_examples=50)
@given(st.randoms(use_true_random=False))
def test_random_ems_is_valid(rng):
    E0 = random_ems(rng)

    report = validate_ems(E0)
    assert report.valid
    assert report.p_prime
    assert psi_of_ems(E0).dimension == E0.group.standard_dim
