import io
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nrtperfect.cli import main
from nrtperfect.codes import is_perfect
from nrtperfect.core import Params
from nrtperfect.enumeration import ball_volume
from nrtperfect.feasibility import (
    NONEXISTENCE_REASONS,
    Outcome,
    Reason,
    delta,
    hamming_exponent,
    prime_power_base,
    scan,
    verdict,
)

GOLDEN = Path(__file__).parent / "golden" / "scan_2_6_4_8.tsv"


@pytest.mark.parametrize("s,r,R,expected", [(2, 2, 1, 1), (4, 2, 2, 0), (3, 2, 1, -1), (5, 2, 2, -2)])
def test_delta(s, r, R, expected):
    assert delta(s, r, R) == expected


def test_prime_power_helpers():
    assert [q for q in range(2, 17) if prime_power_base(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert prime_power_base(12) is None
    assert hamming_exponent(2, 7) == 3
    assert hamming_exponent(3, 4) == 2
    assert hamming_exponent(2, 6) is None


@pytest.mark.parametrize("args,summary", [
    ((2, 2, 2, 1), "Nonexistent (DeltaNonnegative, δ=1)"),
    ((2, 3, 2, 1), "ExistsConstructive (lift: repetition, h=1)"),
    ((2, 5, 2, 2), "Nonexistent (Divisibility: 26 ∤ 1024)"),
    ((2, 4, 2, 2), "Nonexistent (DeltaNonnegative, δ=0)"),
    ((2, 4, 3, 2), "Nonexistent (SEqualsRPlusTwo)"),
])
def test_verdict_examples(args, summary):
    assert verdict(*args).summary() == summary


def test_trivial_and_single_chain():
    assert verdict(2, 2, 2, 4).outcome is Outcome.TRIVIAL_ONLY
    assert verdict(2, 2, 2, 0).outcome is Outcome.TRIVIAL_ONLY
    v = verdict(3, 1, 4, 2)
    assert v.reason is Reason.SINGLE_CHAIN
    assert len(v.recipe.build()) == 9


def test_radius_one_table():
    assert verdict(2, 7, 1, 1).recipe.describe() == "hamming, i=3"
    assert verdict(2, 5, 1, 2).recipe.kind == "repetition"
    assert verdict(2, 23, 1, 3).recipe.kind == "golay_binary"
    assert not verdict(2, 23, 1, 3).recipe.executable
    assert verdict(3, 11, 1, 2).recipe.kind == "golay_ternary"
    assert verdict(4, 5, 1, 1).outcome is Outcome.EXISTS_CONSTRUCTIVE
    assert not verdict(4, 5, 1, 1).recipe.executable
    v = verdict(2, 6, 1, 1)
    assert v.outcome is Outcome.NONEXISTENT and v.reason is Reason.RADIUS_ONE_CLASSIFICATION


def test_all_reasons_attached_in_precedence_order():
    v = verdict(2, 2, 2, 1)
    assert v.all_reasons == (Reason.DELTA_NONNEGATIVE, Reason.DIVISIBILITY)
    assert v.reason is v.all_reasons[0]


def test_s_equals_two_always_delta():
    for r in range(2, 51):
        for R in range(1, 51):
            if R < 2 * r:
                assert verdict(2, 2, r, R).reason is Reason.DELTA_NONNEGATIVE


@given(st.integers(2, 12), st.integers(2, 12), st.integers(1, 30), st.sampled_from([2, 3, 5, 7]))
def test_structural_rules_independent_of_q(s, r, R, q):
    if R >= s * r:
        return
    a, b = verdict(2, s, r, R), verdict(q, s, r, R)
    for rule in (Reason.DELTA_NONNEGATIVE, Reason.S_EQUALS_R_PLUS_TWO):
        assert (rule in a.all_reasons) == (rule in b.all_reasons)


def test_scan_small():
    rows = scan(2, 2, 2, 2)
    assert len(rows) == 4
    assert all(v.outcome is not Outcome.UNKNOWN for v in rows)


def test_scan_delta_nonnegative_rows_are_nonexistent():
    for v in scan(2, 6, 4, 8):
        p = v.params
        if p.s >= 2 and p.r >= 2 and p.delta >= 0:
            assert v.outcome is Outcome.NONEXISTENT


def test_recipes_execute_and_never_conflict():
    for q in (2, 3):
        for v in scan(q, 7, 3, 4):
            if v.recipe is None:
                continue
            assert not set(v.all_reasons) & NONEXISTENCE_REASONS
            if v.recipe.executable and v.params.space_size <= 3**9:
                assert is_perfect(v.recipe.build(), v.params.R)


def test_divides_field():
    d = verdict(2, 5, 2, 2).as_dict()
    assert d["divides"] is False and d["ball_volume"] == ball_volume(Params(2, 5, 2, 2))


def test_golden_scan_table():
    buf = io.StringIO()
    assert main(["scan", "--q", "2", "--s-max", "6", "--r-max", "4", "--R-max", "8", "--format", "machine"], out=buf) == 0
    assert buf.getvalue() == GOLDEN.read_text(encoding="utf-8")


def agreement_tuples():
    for q in (2, 3):
        for s in range(1, 17):
            for r in range(1, 17):
                size = q ** (s * r)
                # single-chain codes exist by construction; search them only while cheap
                if size > 2**16 or (s == 1 and size > 2**12):
                    continue
                for R in range(1, s * r):
                    p = Params(q, s, r, R)
                    if size % ball_volume(p) == 0:
                        yield p


@pytest.mark.parametrize("p", list(agreement_tuples()), ids=str)
def test_verdict_agrees_with_search_up_to_2_16(p):
    from nrtperfect.search import SearchConfig, SearchStatus, search_perfect

    v = verdict(p.q, p.s, p.r, p.R)
    if v.outcome is Outcome.UNKNOWN:
        pytest.skip("open tuple: nothing to agree with")
    out = search_perfect(p, SearchConfig(max_nodes=10**5))
    if v.outcome is Outcome.NONEXISTENT:
        assert out.status is SearchStatus.EXHAUSTED_NONE
    else:
        assert out.status is SearchStatus.FOUND
