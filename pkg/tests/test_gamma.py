import pytest
from hypothesis import given, settings

from conftest import GAMMA_LETTERS, word, words
from h2moduli import gamma
from h2moduli import symplectic as sp


def test_orbits_match_reference_sets():
    s = gamma.orbit_summary()
    assert s["O1_matches"] and s["O2_matches"]
    assert len(s["O1"]) == 5 and len(s["O2"]) == 10
    assert s["orbit_with_U_size"] == 15


def test_zero_seed_rejected():
    with pytest.raises(ValueError):
        gamma.orbit_mod2((0, 0, 0, 0), gamma.GAMMA_GENERATORS.values())


def test_membership_certificate():
    assert gamma.membership_certificate() == {
        "order_sp4_f2": 720,
        "order_gamma_mod2": 120,
        "index": 6,
        "gamma_equals_o1_stabilizer": True,
    }


def test_membership_examples():
    assert gamma.gamma_member(sp.T)
    assert not gamma.gamma_member(sp.T_PRIME)
    assert not gamma.gamma_member(sp.U)
    assert not gamma.gamma_member(gamma.T_PRIME_CONJ)
    with pytest.raises(sp.NotSymplecticError):
        gamma.gamma_member(sp.IntMat4([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_representatives_in_distinct_cosets():
    tags = [gamma.coset_of(m).tag for m in gamma.COSET_REPRESENTATIVES.values()]
    assert tags == list(gamma.COSET_TAGS)


def test_coset_table_matches_reference():
    assert gamma.verify_coset_table() == gamma.REFERENCE_COSET_TABLE


def test_coset_table_mismatch_names_cell(monkeypatch):
    bad = dict(gamma.REFERENCE_COSET_TABLE)
    bad["T"] = ("UΓ",) + bad["T"][1:]
    monkeypatch.setattr(gamma, "REFERENCE_COSET_TABLE", bad)
    with pytest.raises(gamma.VerificationError, match=r"cell \(T, Γ\)"):
        gamma.verify_coset_table()


def test_elementary_generation_with_corrected_witness():
    rep = gamma.verify_generation()
    assert rep["failed"] == ["E21 = U^-1 T^-1 U"]
    assert rep["corrected"] == {"E21 = U^-1 R^-1 U": True}
    assert rep["all_elementary_generated"]
    assert all(rep["memberships"].values())


def test_e21_candidate_word_is_e43():
    assert sp.product([sp.U**-1, sp.T**-1, sp.U]) == sp.elementary_matrix(4, 3)


def test_txy_grid():
    for l in range(-3, 4):
        for m in range(-3, 4):
            for n in range(-3, 4):
                shown, built, _ = gamma.factor_txy(l, m, n)
                assert shown == built
                assert gamma.gamma_member(built)


@settings(max_examples=150, deadline=None)
@given(words(GAMMA_LETTERS))
def test_gamma_words_are_members(w):
    assert gamma.gamma_member(word(w))


@settings(max_examples=100, deadline=None)
@given(words(GAMMA_LETTERS, max_size=8), words(max_size=8))
def test_coset_constant_under_right_gamma(g, m):
    x = word(m)
    assert gamma.coset_of(x @ word(g)).tag == gamma.coset_of(x).tag
