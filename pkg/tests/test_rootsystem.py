"""Cartan data, positive roots and cone generators."""

from math import gcd

import pytest

from coxgrowth import rootsystem
from coxgrowth.rootsystem import (build, build_label, cartan_matrix,
                                  parse_label, mat_vec, InvalidTypeError)


ALL_LABELS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
              "D4", "F4", "G2", "E6"]

# number of positive roots per type
POS_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9,
              "B4": 16, "C2": 4, "C3": 9, "C4": 16, "D4": 12, "F4": 24,
              "G2": 6, "E6": 36}


class TestCartan:
    def test_label_parsing(self):
        assert parse_label("A2") == ("A", 2)
        assert parse_label("a_2") == ("A", 2)
        assert parse_label("F4") == ("F", 4)
        for bad in ["Z9", "A0", "", "A", "2A", "G3", "F5", "E9", "B1"]:
            with pytest.raises(InvalidTypeError):
                build_label(bad)

    def test_diagonal_and_signs(self):
        for label in ALL_LABELS:
            fam, rank = parse_label(label)
            c = cartan_matrix(fam, rank)
            for i in range(rank):
                assert c[i][i] == 2
                for j in range(rank):
                    if i != j:
                        assert c[i][j] <= 0
                        # off-diagonal zeros are symmetric
                        assert (c[i][j] == 0) == (c[j][i] == 0)

    def test_specific_matrices(self):
        assert cartan_matrix("A", 2) == ((2, -1), (-1, 2))
        assert cartan_matrix("G", 2) == ((2, -3), (-1, 2))
        assert cartan_matrix("B", 3) == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
        assert cartan_matrix("C", 3) == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
        assert cartan_matrix("F", 4) == ((2, -1, 0, 0), (-1, 2, -2, 0),
                                         (0, -1, 2, -1), (0, 0, -1, 2))

    def test_determinants(self):
        for label, want in [("A1", 2), ("A2", 3), ("A3", 4), ("B3", 2),
                            ("C4", 2), ("D4", 4), ("F4", 1), ("G2", 1),
                            ("E6", 3)]:
            assert build_label(label).det_c == want


class TestRoots:
    @pytest.mark.parametrize("label", ALL_LABELS)
    def test_positive_root_count(self, label):
        rs = build_label(label)
        assert len(rs.positive_roots) == POS_COUNTS[label]

    @pytest.mark.parametrize("label", ALL_LABELS)
    def test_roots_distinct_and_positive(self, label):
        rs = build_label(label)
        seen = {root for root, _ in rs.positive_roots}
        assert len(seen) == len(rs.positive_roots)
        for root, coroot in rs.positive_roots:
            assert all(c >= 0 for c in root) and any(c > 0 for c in root)
            # <root, root^vee> = 2
            assert sum(a * b for a, b in
                       zip(root, mat_vec(rs.cartan, coroot))) == 2

    @pytest.mark.parametrize("label", ALL_LABELS)
    def test_highest_root_dominates(self, label):
        rs = build_label(label)
        hi = rs.highest_root
        for root, _ in rs.positive_roots:
            assert all(a >= b for a, b in zip(hi, root))

    def test_longest_length_is_root_count(self):
        for label in ALL_LABELS:
            rs = build_label(label)
            assert rs.longest_length(rs.full_mask) == POS_COUNTS[label]


class TestConeGens:
    @pytest.mark.parametrize("label", ALL_LABELS)
    def test_defining_property(self, label):
        rs = build_label(label)
        n = rs.rank
        for i, w in enumerate(rs.cone_gens):
            assert all(c > 0 for c in w)
            assert gcd(*w) == 1
            cw = mat_vec(rs.cartan, w)
            assert all(cw[j] == 0 for j in range(n) if j != i)
            assert cw[i] > 0

    def test_known_generators(self):
        assert build_label("A2").cone_gens == ((2, 1), (1, 2))
        assert build_label("G2").cone_gens == ((2, 1), (3, 2))
        assert build_label("B3").cone_gens == ((2, 2, 1), (1, 2, 1),
                                               (2, 4, 3))
        assert build_label("F4").cone_gens == ((2, 3, 2, 1), (3, 6, 4, 2),
                                               (4, 8, 6, 3), (2, 4, 3, 2))

    def test_weights(self):
        rs = build_label("C4")
        got = [rs.two_rho_weight(w) for w in rs.cone_gens]
        assert got == [i * (9 - i) for i in range(1, 5)]


class TestSubsets:
    def test_masks_and_ids(self):
        rs = build_label("A3")
        assert rs.mask_of([1, 3]) == 0b101
        assert rs.ids_of(0b101) == [1, 3]
        assert rs.mask_of([]) == 0
        with pytest.raises(ValueError):
            rs.mask_of([0])
        with pytest.raises(ValueError):
            rs.mask_of([4])

    def test_subsets_order(self):
        rs = build_label("A2")
        assert rs.subsets() == [0, 1, 2, 3]
        assert rs.subsets(0b10) == [0, 2]

    def test_components(self):
        rs = build_label("A4")
        comps = rs.components(rs.mask_of([1, 2, 4]))
        assert sorted(comps) == [rs.mask_of([1, 2]), rs.mask_of([4])]
        assert rs.components(0) == []

    def test_two_rho(self):
        rs = build_label("A2")
        assert rs.two_rho == (2, 2)
        assert rs.two_rho_weight((1, 1)) == 4
