import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sectorpack import (OrderTag, OutsideSectorError, QuadPoly,
                        SectorPackError, cantor, divides, enumerate_sector,
                        order_for_family, parse_family, psi_map, quasi_h,
                        sector_decompose, steep)

from family_zoo import all_families, divides_pairs, sector_points


class TestConstructors:
    def test_cantor_values(self):
        assert cantor("F").rank((1, 0)) == 1
        assert cantor("G").rank((1, 0)) == 2
        assert cantor("F").rank((0, 0)) == 0

    def test_steep_values(self):
        assert steep("F", 2).rank((2, 0)) == 4
        assert steep("G", 2).rank((1, 2)) == 1

    def test_f1_is_triangle_offset(self):
        x, y = QuadPoly.x(), QuadPoly.y()
        one = QuadPoly.constant(1)
        assert steep("F", 1).form == x * (x + one) / 2 + y

    def test_variant_validation(self):
        with pytest.raises(SectorPackError):
            cantor("H")
        with pytest.raises(SectorPackError):
            steep("f", 2)

    def test_steep_rejects_zero_slope(self):
        with pytest.raises(SectorPackError):
            steep("F", 0)

    @pytest.mark.parametrize("r,s", [(2, 4), (3, 5), (5, 3), (2, 2), (0, 3)])
    def test_divides_rejects_bad_parameters(self, r, s):
        with pytest.raises(SectorPackError):
            divides("F", r, s)

    def test_divides_values(self):
        assert divides("F", 2, 3).rank((2, 1)) == 2
        assert divides("G", 2, 3).rank((3, 2)) == 1
        assert divides("F", 1, 2).rank((2, 1)) == 2

    def test_quasi_rejects_non_coprime(self):
        with pytest.raises(SectorPackError):
            quasi_h(2, 4)

    def test_quasi_values(self):
        fam = quasi_h(3, 2)
        assert fam.rank((3, 0)) == 5
        assert fam.rank((2, 3)) == 8

    def test_quasi_printed_branches(self):
        fam = quasi_h(3, 2)
        assert fam.form.branches[0] == QuadPoly("3/4", 0, 0, "-1/2", 2, 0)
        assert fam.form.branches[1] == QuadPoly("3/4", 0, 0, -1, 2, "5/4")

    def test_quasi_period_one_collapses_to_steep(self):
        for r in range(1, 8):
            fam = quasi_h(r, 1)
            assert fam.form.period == 1
            assert fam.form.branches[0] == steep("F", r).form

    def test_order_tags(self):
        assert cantor("F").order is OrderTag.DIAGONAL
        assert steep("F", 2).order is OrderTag.BOTTOM_UP
        assert divides("G", 2, 3).order is OrderTag.TOP_DOWN
        assert quasi_h(3, 2).order is OrderTag.BOTTOM_UP


class TestSectorDecompose:
    def test_examples(self):
        assert sector_decompose(2, 3, (3, 1)) == (2, 1)
        assert sector_decompose(1, 2, (2, 1)) == (1, 1)
        for a in range(6):
            assert sector_decompose(2, 3, (a, 0)) == (a, 0)

    def test_rejects_outside_point(self):
        with pytest.raises(OutsideSectorError):
            sector_decompose(2, 3, (1, 1))

    def test_blocks_tile_the_sector(self):
        # decomposition inverts the block parameterization and the block
        # index never exceeds the stated range
        for r, s in divides_pairs(8):
            d = (s - 1) // r
            fam = divides("F", r, s)
            for p in sector_points(fam.sector, 40):
                a, j = sector_decompose(r, s, p)
                assert p == (a + d * j, j)
                assert 0 <= j <= r * a


class TestRank:
    def test_examples(self):
        assert steep("F", 3).rank((1, 3)) == 4
        assert quasi_h(3, 2).rank((2, 3)) == 8

    def test_origin_is_zero_for_every_family(self):
        for family in all_families(6):
            assert family.rank((0, 0)) == 0

    def test_outside_sector_rejected(self):
        with pytest.raises(OutsideSectorError):
            steep("F", 1).rank((1, 2))
        with pytest.raises(OutsideSectorError):
            cantor("F").rank((-1, 0))


class TestUnrank:
    def test_examples(self):
        assert cantor("F").unrank(7) == (2, 1)
        assert steep("F", 2).unrank(4) == (2, 0)
        assert quasi_h(3, 2).unrank(1) == (1, 0)

    def test_negative_rank_rejected(self):
        with pytest.raises(SectorPackError):
            cantor("F").unrank(-1)

    def test_round_trip_both_ways(self):
        for family in all_families(6):
            for n in range(500):
                p = family.unrank(n)
                assert family.sector.contains(p)
                assert family.rank(p) == n, family.name
            for p in sector_points(family.sector, 30, 30):
                assert family.unrank(family.rank(p)) == p, family.name

    @settings(max_examples=60)
    @given(st.integers(0, 10**24))
    def test_round_trip_at_large_ranks(self, n):
        # exactness must not degrade with magnitude
        for family in (cantor("G"), steep("F", 7), divides("G", 3, 10), quasi_h(7, 4)):
            p = family.unrank(n)
            assert family.rank(p) == n

    def test_agrees_with_enumeration_oracle(self):
        for family in all_families(10):
            order = order_for_family(family)
            for n, p in enumerate(enumerate_sector(family.sector, order, 5000)):
                assert family.unrank(n) == p
                assert family.rank(p) == n


class TestPolynomialIdentities:
    def test_steep_closed_form_matches_column_count_derivation(self):
        x, y = QuadPoly.x(), QuadPoly.y()
        one = QuadPoly.constant(1)
        for r in range(1, 11):
            assert steep("F", r).form == r * x * (x - one) / 2 + x + y
            assert steep("G", r).form == steep("F", r).form.compose(psi_map(r))

    def test_divides_closed_form_matches_block_count_derivation(self):
        # the expanded coefficients equal "points before block a, plus the
        # offset within block a" written directly in terms of a = x - d*y
        x, y = QuadPoly.x(), QuadPoly.y()
        one = QuadPoly.constant(1)
        for r, s in divides_pairs(20):
            d = (s - 1) // r
            t = x - d * y
            counted_f = r * (t * (t - one)) / 2 + x - (d - 1) * y
            counted_g = r * (t * (t - one)) / 2 + (r + 1) * x - (d + s) * y
            assert divides("F", r, s).form == counted_f, (r, s)
            assert divides("G", r, s).form == counted_g, (r, s)

    def test_quasi_and_divides_orders_differ(self):
        # same sector, both packings, but different enumerations: the ranks
        # disagree somewhere even though both cover every prefix
        quasi, block = quasi_h(1, 2), divides("F", 1, 2)
        pts = sector_points(quasi.sector, 20)
        assert any(quasi.rank(p) != block.rank(p) for p in pts)
        # ... yet each one, on its own, fills every rank prefix bijectively
        for family in (quasi, block):
            preimages = {family.unrank(n) for n in range(200)}
            assert len(preimages) == 200
            assert all(family.rank(p) < 200 for p in preimages)


class TestFamilyNames:
    @pytest.mark.parametrize("name", [
        "cantor-f", "cantor-g", "steep-f:1", "steep-g:7",
        "div-f:2/3", "div-g:1/10", "quasi:3/2", "quasi:5/1",
    ])
    def test_parse_round_trip(self, name):
        assert parse_family(name).name == name

    @pytest.mark.parametrize("name", [
        "cantor", "cantor-f:1", "steep-f", "steep-f:0", "steep-f:x",
        "div-f:2/4", "div-f:3", "quasi:2/4", "quasi:-1/2", "unknown:1",
    ])
    def test_rejects_malformed(self, name):
        with pytest.raises(SectorPackError):
            parse_family(name)
