import pytest
from hypothesis import given, settings, strategies as st

from twobridge import cf, census as C, tables
from twobridge.formulas import jacobsthal as j

# the K(6) table: tuple -> (branch, image)
K6_TABLE = {
    (3, 2, 2, 2): (1, (3, 2)),
    (2, 3, 2, 2): (1, (2, 3)),
    (2, 2, 3, 2): (2, (2, 2, 2, 2)),
    (3, 3, 2): (2, (3, 2, 2)),
    (5, 2): (2, (4, 2)),
    (2, 2, 2, 3): (3, (2, 2, 3)),
    (2, 3, 3): (3, (2, 4)),
    (4, 3): (3, (5,)),
    (3, 4): (4, (3, 2)),
    (2, 5): (4, (2, 3)),
}
KP7_TABLE = {
    (2, 2, 3, 2, 2): (1, (3,)),
    (2, 2, 2, 2, 2, 2): (1, (2, 2)),
    (2, 3, 3, 2): (2, (2, 2, 2, 2)),
    (3, 3, 3): (3, (5,)),
    (4, 4): (4, (2, 2)),
    (7,): (4, (3,)),
}


class TestEnumerateK:
    def test_k4(self):
        assert C.enumerate_K(4) == [(2, 3), (3, 2)]

    def test_k5(self):
        assert set(C.enumerate_K(5)) == {(2, 2, 2, 2), (3, 2, 2), (4, 2), (2, 2, 3), (2, 4), (5,)}

    def test_k6_table(self):
        assert C.enumerate_K(6) == sorted(K6_TABLE)

    def test_k2_empty(self):
        assert C.enumerate_K(2) == []

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            C.enumerate_K(1)

    @pytest.mark.parametrize("c", range(2, 17))
    def test_count(self, c):
        K = C.enumerate_K(c)
        assert len(K) == 2 * j(c - 2)
        assert K == sorted(set(K))
        assert all(min(t) >= 2 and C.tuple_crossings(t) == c for t in K)
        assert all(cf.eval_subtractive(t).denominator % 2 == 1 for t in K)


class TestEnumerateKP:
    def test_kp7_table(self):
        assert C.enumerate_KP(7) == sorted(KP7_TABLE)

    def test_kp3(self):
        assert C.enumerate_KP(3) == [(2, 2), (3,)]

    @pytest.mark.parametrize("c", range(2, 22))
    def test_matches_filter(self, c):
        KP = C.enumerate_KP(c)
        if c <= 16:
            assert KP == [t for t in C.enumerate_K(c) if t == t[::-1]]
        assert len(KP) == (2 * j((c - 1) // 2) if c % 2 else 0)


class TestG:
    @pytest.mark.parametrize("t", sorted(K6_TABLE))
    def test_k6_images(self, t):
        branch, image = K6_TABLE[t]
        assert C.g_branch(t) == branch
        assert C.apply_g(t) == image
        assert C.invert_g(image, branch) == t

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            C.apply_g((2, 3))

    @pytest.mark.parametrize("c", range(5, 15))
    def test_bijection(self, c):
        by_branch = {b: [] for b in range(1, 5)}
        for t in C.enumerate_K(c):
            by_branch[C.g_branch(t)].append(C.apply_g(t))
        assert sorted(by_branch[1]) == C.enumerate_K(c - 2)
        assert sorted(by_branch[4]) == C.enumerate_K(c - 2)
        assert sorted(by_branch[2] + by_branch[3]) == C.enumerate_K(c - 1)
        assert all(s[-1] == 2 for s in by_branch[2])
        assert all(s[-1] >= 3 for s in by_branch[3])

    @pytest.mark.parametrize("c", range(5, 17))
    def test_delta_tables(self, c):
        for t in C.enumerate_K(c):
            assert C.delta_wz_of_g(t) == tables.expected_g(t, C.g_branch(t)), t

    @pytest.mark.parametrize("t, dw, dz", [
        ((2, 2, 3, 2), 2, 1),
        ((3, 2, 3, 2, 2), 1, 1),
        ((2, 3, 4, 2), 0, -1),
    ])
    def test_delta_examples(self, t, dw, dz):
        assert C.delta_wz_of_g(t) == (dw, dz)


class TestGP:
    @pytest.mark.parametrize("t", sorted(KP7_TABLE))
    def test_kp7_images(self, t):
        branch, image = KP7_TABLE[t]
        assert C.gP_branch(t) == branch
        assert C.apply_gP(t) == image
        assert C.invert_gP(image, branch) == t

    def test_rejects(self):
        with pytest.raises(ValueError):
            C.apply_gP((2, 3, 4))
        with pytest.raises(ValueError):
            C.apply_gP((2, 2))

    @pytest.mark.parametrize("c", range(7, 24, 2))
    def test_bijection(self, c):
        by_branch = {b: [] for b in range(1, 5)}
        for t in C.enumerate_KP(c):
            s = C.apply_gP(t)
            assert s == s[::-1]
            by_branch[C.gP_branch(t)].append(s)
        assert sorted(by_branch[1]) == C.enumerate_KP(c - 4)
        assert sorted(by_branch[4]) == C.enumerate_KP(c - 4)
        assert sorted(by_branch[2] + by_branch[3]) == C.enumerate_KP(c - 2)

    @pytest.mark.parametrize("c", range(tables.GP_TABLE_FROM, 24, 2))
    def test_delta_tables(self, c):
        for t in C.enumerate_KP(c):
            assert C.delta_wz_of_gP(t) == tables.expected_gP(t, C.gP_branch(t)), t

    def test_delta_table_exception_at_7(self):
        # (4, 4) is in no row of the palindromic dw table, yet dw = 1
        assert tables.expected_gP((4, 4), 4) == (0, 0)
        assert C.delta_wz_of_gP((4, 4)) == (1, 0)
        others = [t for t in C.enumerate_KP(7) if t != (4, 4)]
        assert all(C.delta_wz_of_gP(t) == tables.expected_gP(t, C.gP_branch(t)) for t in others)


class TestCardinalities:
    @pytest.mark.parametrize("c", range(4, 17))
    def test_endings(self, c):
        K = C.enumerate_K(c)
        assert sum(1 for t in K if C.ends_with(t, (2, 2))) == 2 * j(c - 4)
        assert sum(1 for t in K if C.ends_with(t, ("4+",))) == 2 * j(c - 4)
        assert sum(1 for t in K if t[-1] == 2) == j(c - 2)
        assert sum(1 for t in K if C.ends_with(t, ("3+",))) == j(c - 2)

    def test_run_of_threes_recursion(self):
        count = {c: sum(1 for t in C.enumerate_K(c) if tables.matches_suffix(t, r"23+22")) for c in range(4, 17)}
        assert count[4] == count[5] == 0 and count[6] == count[7] == 1
        for c in range(6, 17):
            assert count[c] == count[c - 2] + j(c - 6) + (-1) ** c * (c % 3 == 0)

    @pytest.mark.parametrize("c", range(3, 22, 2))
    def test_palindrome_endings(self, c):
        KP = C.enumerate_KP(c)
        d = (c - 1) // 2
        assert sum(1 for t in KP if t[-1] == 2) == j(d)
        if c >= 7:
            assert sum(1 for t in KP if C.palindrome_ends_with(t, (2, 2))) == 2 * j(d - 2)

    def test_palindrome_suffix_overlap(self):
        assert C.palindrome_ends_with((2, 3, 2), (3, 2))
        assert not C.palindrome_ends_with((3, 2), (3, 2))


class TestTotals:
    @pytest.mark.parametrize("c, W, Z", [(4, 4, 0), (5, 10, 0), (6, 24, 2), (7, 56, 4)])
    def test_small(self, c, W, Z):
        t = C.census_totals(c)
        assert (t.W, t.Z) == (W, Z)

    def test_palindromic_seeds(self):
        assert (C.census_totals(7).WP, C.census_totals(7).ZP) == (14, 2)
        assert (C.census_totals(9).WP, C.census_totals(9).ZP) == (34, 4)

    def test_z7_tuples(self):
        from twobridge.invariants import compute_wz
        nonzero = {t for t in C.enumerate_K(7) if compute_wz(t).z}
        assert nonzero == {(2, 2, 3, 2, 2), (3, 2, 3, 2), (2, 3, 3, 2), (2, 3, 2, 3)}

    @pytest.mark.parametrize("c", range(3, 13))
    def test_shape(self, c):
        t = C.census_totals(c)
        assert t.W >= t.Z >= 0 and t.count % 2 == 0
        assert set(t.as_record()) == {"c", "count", "W", "Z", "count_P", "WP", "ZP"}


class TestEvenTuples:
    def test_e0(self):
        assert C.enumerate_E(0) == [()]

    def test_table_rows(self):
        assert C.enumerate_E_families(4).E == [(-4,), (4,)]
        assert C.enumerate_E_families(4).KE == []
        assert C.enumerate_E_families(5).E == []
        assert C.enumerate_E_families(6).LE == [(-6,), (6,)]
        assert C.enumerate_E_families(7).KE == [(-4, -4), (4, 4)]

    def test_palindromic_rows(self):
        assert C.enumerate_E_families(11).KEP == [(-6, -6), (6, 6)]
        assert C.enumerate_E_families(13).KEP == [(-4, -4, -4, -4), (4, 4, 4, 4)]
        for c in (8, 9, 10, 12, 14):
            assert C.enumerate_E_families(c).KEP == []

    @pytest.mark.parametrize("c", range(8, 27))
    def test_recursions(self, c):
        E = {k: C.enumerate_E_families(k) for k in range(c - 8, c + 1)}
        delta = {k: len(E[k].KE) - len(E[k].LE) for k in E}
        assert len(E[c].E) == len(E[c - 2].E) + len(E[c - 3].E) + len(E[c - 4].E)
        assert delta[c] == delta[c - 2] - delta[c - 3] - delta[c - 4]
        if c >= 9:
            # counted with an empty palindrome at 0 the recursion breaks at 8
            assert len(E[c].KEP) == len(E[c - 4].KEP) + len(E[c - 6].KEP) + len(E[c - 8].KEP)

    def test_empty_tuple_breaks_recursion_at_4_and_8(self):
        assert len(C.enumerate_E(4)) != len(C.enumerate_E(2)) + len(C.enumerate_E(1)) + len(C.enumerate_E(0))
        kep = lambda c: len(C.enumerate_E_families(c).KEP)
        assert kep(8) == 0 != kep(4) + kep(2) + kep(0)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(4, 22))
    def test_family_shape(self, c):
        fam = C.enumerate_E_families(c)
        assert all(e % 2 == 0 and abs(e) >= 4 for t in fam.E for e in t)
        assert all(cf.crossing_number(t) == c for t in fam.E)
        assert all(len(t) % 2 == 0 for t in fam.KE) and all(len(t) % 2 == 1 for t in fam.LE)
        assert sorted(fam.KE + fam.LE) == fam.E
        # even length gives a knot: the denominator of the fraction is odd
        assert all(cf.eval_subtractive(t).denominator % 2 == 1 for t in fam.KE)
        assert all(cf.eval_subtractive(t).denominator % 2 == 0 for t in fam.LE)

    def test_family_dispatch(self):
        assert C.enumerate_family(7, C.Family.KEP) == [(-4, -4), (4, 4)]
        assert C.enumerate_family(6, C.Family.K) == C.enumerate_K(6)
