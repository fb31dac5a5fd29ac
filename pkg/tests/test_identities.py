import json

import pytest

from modsym.identities import (
    Ranges,
    check_cell,
    fermat_rhs,
    h_at_powered_points,
    list_identities,
    lmod_rhs,
    mutation_selftest,
    profile_ranges,
    ps1_rhs,
    verify,
    verify_all,
)

EXPECTED_IDS = [
    "GF_M", "REC3", "REC4", "PATHS", "TILINGS", "ALLONES",
    "S2MOD_SPEC", "S2MOD_REC", "S2MOD_GF", "PART_MOD", "PART_ZERO",
    "PS1", "FERMAT", "LMOD", "EVANISH", "CONV_HE",
    "INV_H", "INV_E", "INV_ZERO", "EH_ME",
    "S1MOD_DEF", "S1MOD_REC", "S1MOD_PART", "NESTED", "HIGHER_REC", "OMEGA",
]

ERRATA_IDS = {"S2MOD_GF", "INV_H", "INV_E"}


class TestCatalog:
    def test_size_and_ids(self):
        infos = list_identities()
        assert len(infos) == 26
        assert [i.id for i in infos] == EXPECTED_IDS

    def test_ids_unique(self):
        ids = [i.id for i in list_identities()]
        assert len(set(ids)) == len(ids)

    def test_every_entry_has_anchor(self):
        assert all(i.anchor for i in list_identities())

    def test_errata_flags(self):
        assert {i.id for i in list_identities() if i.has_errata} == ERRATA_IDS

    def test_lmod_carries_interpretation_note(self):
        info = next(i for i in list_identities() if i.id == "LMOD")
        assert info.note and "interpretation" in info.note

    def test_profiles_cover_catalog(self):
        for info in list_identities():
            assert profile_ranges(info.id, "quick") is not None
            assert profile_ranges(info.id, "full") is not None
        with pytest.raises(ValueError):
            profile_ranges("GF_M", "medium")


class TestVerify:
    def test_unknown_id_rejected(self):
        with pytest.raises(ValueError):
            verify("NOSUCH")

    def test_case_insensitive_ids(self):
        rep = verify("ps1", Ranges(n_max=2, k_max=3, s_max=1))
        assert rep.identity == "PS1"
        assert rep.failed == 0

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            verify("LMOD", Ranges(n_max=2, k_max=2, s_max=1, ell=3))

    def test_ps1_reference_cell(self):
        case = check_cell("PS1", n=4, k=8, s=3)
        assert case.status == "pass"
        assert case.lhs == case.rhs == "107331"
        assert ps1_rhs(4, 8, 3) == 107331

    def test_ps1_example_range(self):
        rep = verify("PS1", Ranges(n_max=4, k_max=8, s_max=3))
        assert rep.failed == 0 and rep.skipped == 0
        assert rep.passed == 5 * 9 * 3

    def test_rec4_skips_small_degrees(self):
        rep = verify("REC4", Ranges(n_max=2, k_max=4, s_max=2))
        assert rep.failed == 0
        assert rep.skipped > 0

    def test_evanish_skips_even_s(self):
        rep = verify("EVANISH", Ranges(n_max=2, k_max=4, s_max=2))
        assert rep.failed == 0
        # half of the s values (s = 2) are skipped
        assert rep.skipped == rep.passed

    def test_evanish_odd_s_full_pass(self):
        rep = verify("EVANISH", Ranges(n_max=3, k_max=6, s_max=3))
        assert rep.failed == 0
        assert rep.passed == 3 * 6 * 2  # s in {1, 3}

    def test_inv_zero_skips_multiples(self):
        rep = verify("INV_ZERO", Ranges(n_max=3, k_max=7, s_max=3))
        assert rep.failed == 0
        assert rep.skipped > 0

    def test_lmod_skips_non_coprime(self):
        rep = verify("LMOD", Ranges(n_max=2, k_max=3, s_max=3))
        assert rep.failed == 0
        assert rep.skipped > 0

    def test_fermat_skips_non_prime(self):
        rep = verify("FERMAT", Ranges(n_max=2, k_max=3, p_list=(2, 4)))
        assert rep.failed == 0
        assert rep.passed == rep.skipped  # the p = 4 half is skipped

    def test_determinism(self):
        a = verify("S2MOD_GF", Ranges(n_max=6, k_max=3, s_max=2)).to_json_obj()
        b = verify("S2MOD_GF", Ranges(n_max=6, k_max=3, s_max=2)).to_json_obj()
        assert json.dumps(a) == json.dumps(b)

    def test_report_json_schema(self):
        obj = verify("OMEGA", Ranges(n_max=4, s_max=2)).to_json_obj()
        assert list(obj) == [
            "identity", "anchor", "range", "pass", "fail",
            "skipped", "failures", "errata", "note",
        ]

    def test_quick_sweep_all_green(self):
        reports = verify_all("quick")
        assert len(reports) == 26
        assert [r.identity for r in reports] == EXPECTED_IDS
        assert all(r.failed == 0 for r in reports)

    def test_verify_all_rejects_bad_profile(self):
        with pytest.raises(ValueError):
            verify_all("medium")


class TestErrata:
    def test_errata_present_exactly_on_documented_ids(self):
        for rep in verify_all("quick"):
            if rep.identity in ERRATA_IDS:
                assert len(rep.errata) == 1, rep.identity
            else:
                assert rep.errata == [], rep.identity

    def test_gf_erratum_records_zero_cell(self):
        rep = verify("S2MOD_GF", Ranges(n_max=4, k_max=2, s_max=2))
        assert rep.failed == 0  # the corrected form passes
        note = rep.errata[0]
        assert note["printed_form"].count("x^s") == 1
        first = note["first_failing_cell"]
        assert first["params"] == {"n": 2, "k": 1, "s": 2}
        assert (first["printed"], first["corrected"]) == ("0", "1")
        zero = note["nonzero_where_zero_cell"]
        assert zero["params"] == {"n": 3, "k": 1, "s": 2}
        assert (zero["printed"], zero["corrected"]) == ("1", "0")

    def test_inv_h_erratum_first_cell(self):
        rep = verify("INV_H", Ranges(n_max=2, k_max=2, s_max=2))
        assert rep.failed == 0
        first = rep.errata[0]["first_failing_cell"]
        assert first["params"] == {"n": 1, "k": 1, "s": 1}
        assert first["printed"] == "x1"
        assert first["corrected"] == "x1^2"

    def test_inv_e_erratum_first_cell(self):
        rep = verify("INV_E", Ranges(n_max=2, k_max=4, s_max=2))
        assert rep.failed == 0
        first = rep.errata[0]["first_failing_cell"]
        assert first["params"] == {"n": 1, "k": 2, "s": 1}


class TestMutations:
    def test_five_perturbations_all_fail_somewhere(self):
        reports = mutation_selftest()
        assert len(reports) == 5
        for rep in reports:
            assert rep.failed >= 1, rep.identity
            first = rep.failures[0]
            assert first.status == "fail"
            assert first.lhs != first.rhs

    def test_failures_in_grid_order(self):
        rep = next(
            r for r in mutation_selftest() if r.identity == "CONV_HE_unpowered_h"
        )
        cells = [tuple(c.params.values()) for c in rep.failures]
        assert cells == sorted(cells)
        assert rep.failures[0].params == {"n": 1, "k": 2, "s": 1}


class TestRhsHelpers:
    def test_h_at_powered_points(self):
        assert h_at_powered_points(2, 1, 2) == 1 + 8
        assert h_at_powered_points(3, 0, 4) == 1
        assert h_at_powered_points(3, -1, 2) == 0

    def test_fermat_congruence_examples(self):
        from modsym.stirling import stirling2_mod

        for p in (2, 3, 5):
            for n in range(4):
                for k in range(6):
                    lhs = stirling2_mod(n + k, n, p - 1)
                    assert (lhs - fermat_rhs(n, k, p)) % p == 0

    def test_lmod_rhs_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            lmod_rhs(3, 2, 3, 2)

    def test_lmod_rhs_matches_direct_eval(self):
        from modsym.polycore import poly_eval_int
        from modsym.symfun import lmodular_sym

        for n in range(4):
            for k in range(6):
                for s in (2, 3, 4):
                    for ell in range(1, s + 1):
                        from math import gcd

                        if gcd(ell, s + 1) != 1:
                            continue
                        direct = poly_eval_int(
                            lmodular_sym(n, k, s, ell), tuple(range(1, n + 1))
                        )
                        assert direct == lmod_rhs(n, k, s, ell)


class TestThreadControl:
    def test_thread_env_respected(self, monkeypatch):
        monkeypatch.setenv("MODSYM_THREADS", "2")
        rep = verify("OMEGA", Ranges(n_max=4, s_max=2))
        assert rep.failed == 0
        monkeypatch.setenv("MODSYM_THREADS", "bogus")
        with pytest.raises(ValueError):
            verify("OMEGA", Ranges(n_max=3, s_max=1))
