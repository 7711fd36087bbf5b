from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dnacf import core
from dnacf.constraints import (
    ConstraintReport,
    DnaCode,
    conflict_free_level,
    count_special_strings,
    is_complete_conflict_free,
    is_conflict_free,
    is_rc_substring_free,
    verify_code,
)

dna = st.text(alphabet="ACGT", min_size=2, max_size=20)


def oracle_conflict_free(s, ell):
    for t in range(1, ell + 1):
        for p in range(len(s) - 2 * t + 1):
            if s[p:p + t] == s[p + t:p + 2 * t]:
                return False
    return True


def oracle_rc_free(s):
    # every substring pair of every length >= 3
    n = len(s)
    for length in range(3, n + 1):
        subs = {s[i:i + length] for i in range(n - length + 1)}
        if any(core.reverse_complement(w) in subs for w in subs):
            return False
    return True


def test_conflict_free_examples():
    assert is_conflict_free("ATCATCG", 2)
    assert not is_conflict_free("ATCATCG", 3)
    assert not is_conflict_free("ACGGGGAT", 1)
    assert not is_conflict_free("AGATATATGC", 2)
    with pytest.raises(ValueError):
        is_conflict_free("ACGT", 3)
    with pytest.raises(ValueError):
        is_conflict_free("ACGT", 0)


def test_complete_conflict_free_examples():
    assert is_complete_conflict_free("ACGT")
    assert not is_complete_conflict_free("AA")
    # the adjacent ATC blocks make this fail at level 3 = floor(7/2)
    assert not is_complete_conflict_free("ATCATCG")
    assert is_complete_conflict_free("A")


def test_rc_substring_free_examples():
    assert is_rc_substring_free("ACATCG")
    assert not is_rc_substring_free("ATACGCGAATGCGTGC")
    assert is_rc_substring_free("AAAA")


def test_oracle_agreement_small_exhaustive():
    for n in range(2, 6):
        for tup in product("ACGT", repeat=n):
            s = "".join(tup)
            for ell in range(1, n // 2 + 1):
                assert is_conflict_free(s, ell) == oracle_conflict_free(s, ell)
            assert is_rc_substring_free(s) == oracle_rc_free(s)


@given(dna)
def test_oracle_agreement_random(s):
    assert is_rc_substring_free(s) == oracle_rc_free(s)
    for ell in range(1, len(s) // 2 + 1):
        assert is_conflict_free(s, ell) == oracle_conflict_free(s, ell)


@given(dna.filter(lambda s: len(s) >= 4))
def test_conflict_closure_and_monotonicity(s):
    for ell in range(1, len(s) // 2 + 1):
        v = is_conflict_free(s, ell)
        assert is_conflict_free(core.complement(s), ell) == v
        assert is_conflict_free(core.reverse(s), ell) == v
        assert is_conflict_free(core.reverse_complement(s), ell) == v
        if ell >= 2 and v:
            assert is_conflict_free(s, ell - 1)


@given(dna)
def test_rc_free_closure(s):
    v = is_rc_substring_free(s)
    assert is_rc_substring_free(core.complement(s)) == v
    assert is_rc_substring_free(core.reverse(s)) == v
    assert is_rc_substring_free(core.reverse_complement(s)) == v


def brute_count(n, kind, m=None):
    total = 0
    for tup in product("ACGT", repeat=n):
        s = "".join(tup)
        if kind == "self_reverse":
            ok = s == core.reverse(s)
        elif kind == "self_rc":
            ok = s == core.reverse_complement(s)
        elif kind == "gc_exact":
            ok = core.gc_content(s) == m
        elif kind == "gc_and_self_rc":
            ok = core.gc_content(s) == m and s == core.reverse_complement(s)
        else:
            ok = core.gc_content(s) == m and s == core.reverse(s)
        total += ok
    return total


def test_count_examples():
    assert count_special_strings(4, "self_reverse") == 16
    assert count_special_strings(3, "self_rc") == 0
    assert count_special_strings(2, "gc_exact", 1) == 8
    with pytest.raises(ValueError):
        count_special_strings(4, "gc_exact", 9)
    with pytest.raises(ValueError):
        count_special_strings(4, "bogus", 1)


def test_counts_match_brute_force_small():
    # acceptance covers n <= 8; keep the unit test quick
    for n in range(1, 6):
        assert count_special_strings(n, "self_reverse") == brute_count(n, "self_reverse")
        assert count_special_strings(n, "self_rc") == brute_count(n, "self_rc")
        for m in range(n + 1):
            for kind in ("gc_exact", "gc_and_self_rc", "gc_and_self_reverse"):
                assert count_special_strings(n, kind, m) == brute_count(n, kind, m), (n, kind, m)


def test_verify_code_worked_example():
    code = {"CAC", "CGT", "ACG", "TGC", "GCA", "GTG"}
    rep = verify_code(code)
    assert rep.min_hamming == 2
    assert rep.gc_constant == 2
    assert rep.reverse_ok and rep.reverse_complement_ok


def test_verify_code_published_12_word_code():
    words = ("ACTG", "AGCT", "ATGC", "CAGT", "CGTA", "CTAG",
             "GATC", "GCAT", "GTCA", "TACG", "TCGA", "TGAC")
    rep = verify_code(words, claimed_d=3)
    assert rep.min_hamming == 3
    assert rep.gc_constant == 2
    assert rep.conflict_free_level == 2
    assert rep.reverse_ok and rep.reverse_complement_ok


def test_verify_code_singleton_convention():
    rep = verify_code(["ACGT"])
    assert rep.min_hamming == 4
    assert rep.reverse_ok and rep.reverse_complement_ok and rep.complement_ok
    assert rep.gc_constant == 2


def test_verify_code_rejects_mixed_lengths():
    with pytest.raises(ValueError):
        verify_code(["ACG", "ACGT"])
    with pytest.raises(ValueError):
        DnaCode(("ACG", "ACG"))


def test_reverse_plus_complement_implies_rc_for_closed_codes():
    # codes closed under reverse and complement satisfy all three transform
    # constraints at their own minimum distance
    from dnacf.search import orbit_closure

    for seedset in ({"ACGTT"}, {"CAC", "CGT"}, {"ATGCA", "GGATC"}):
        rep = verify_code(orbit_closure(seedset))
        assert rep.reverse_ok and rep.complement_ok
        assert rep.reverse_complement_ok


def test_reverse_plus_complement_does_not_imply_rc_in_general():
    # pinned counterexample: the published remark deriving the
    # reverse-complement constraint from the other two fails once pairs
    # where a word equals the transform are skipped
    rep = verify_code(["GAC", "AGA", "GGG"])
    assert rep.reverse_ok and rep.complement_ok
    assert not rep.reverse_complement_ok


def test_conflict_level_descending_scan():
    assert conflict_free_level("ACGT") == 2
    assert conflict_free_level("AA") == 0
    assert conflict_free_level("ATCATCG") == 2


def test_report_shape():
    rep = verify_code(["ACGT", "TGCA"])
    assert isinstance(rep, ConstraintReport)
    d = rep.to_dict()
    assert set(d) == {
        "n", "size", "min_hamming", "distance_floor", "reverse_ok",
        "reverse_complement_ok", "complement_ok", "gc_constant",
        "conflict_free_level", "hairpin_free",
    }
