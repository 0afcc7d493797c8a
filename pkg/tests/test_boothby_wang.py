import pytest

from sasakinv import boothby_wang as bw
from sasakinv import complete_intersection as ci
from sasakinv.errors import DomainError, IntegrityError
from sasakinv.horikawa import horikawa_invariants, xk_invariants
from sasakinv.reference import KNOWN_COLLISION_PAIRS
from sasakinv.surface_tuples import SurfaceInvariants


def k3_invariants():
    return SurfaceInvariants.from_chern(
        c1_coeffs=(0, 0), c1sq=0, c2=24, spin=True, ample_canonical=False
    )


def cp2_invariants():
    return SurfaceInvariants.from_chern(
        c1_coeffs=(3,), c1sq=9, c2=3, spin=False, ample_canonical=False
    )


def canonical_euler(inv):
    """Primitive Euler class along the canonical direction -c1."""
    return tuple(-c // inv.c1_div for c in inv.c1_coeffs)


def wall_of(degrees):
    return ci.wall_invariants(ci.threefold_spec(degrees))


class TestClassify:
    def test_k3(self):
        report = bw.bw_classify(
            bw.BaseSurfaceData(invariants=k3_invariants(), euler_class=(1, 0))
        )
        assert report.manifold == bw.SmaleBardenType(n=21, spin=True)
        assert report.manifold.label() == "#21(S^2 x S^3)"
        assert report.contact_c1_zero
        assert not report.negative_type

    def test_projective_plane(self):
        report = bw.bw_classify(
            bw.BaseSurfaceData(invariants=cp2_invariants(), euler_class=(1,))
        )
        assert report.manifold == bw.SmaleBardenType(n=0, spin=True)
        assert report.manifold.label() == "S^5"
        assert report.contact_c1_zero

    def test_xk_negative_structure(self):
        inv = xk_invariants(1)
        report = bw.bw_classify(
            bw.BaseSurfaceData(invariants=inv, euler_class=canonical_euler(inv))
        )
        assert report.manifold == bw.SmaleBardenType(n=153, spin=True)
        assert report.basic_hodge == (16, 122, 154)
        assert report.negative_type
        assert report.contact_c1_zero

    def test_non_canonical_kahler_class(self):
        inv = xk_invariants(1)  # c1 = (-1, -2)
        report = bw.bw_classify(
            bw.BaseSurfaceData(invariants=inv, euler_class=(1, 4))
        )
        assert not report.contact_c1_zero
        assert not report.negative_type
        assert report.note != ""

    def test_spin_rule_matches_mod2_vectors(self):
        inv = xk_invariants(1)  # c1 = (-1, -2), base not spin
        spin_euler = (1, 2)
        report = bw.bw_classify(
            bw.BaseSurfaceData(invariants=inv, euler_class=spin_euler)
        )
        assert report.manifold.spin == (
            tuple(c % 2 for c in inv.c1_coeffs)
            == tuple(c % 2 for c in spin_euler)
        )
        twisted = bw.bw_classify(
            bw.BaseSurfaceData(invariants=inv, euler_class=(2, 1))
        )
        assert not twisted.manifold.spin
        assert twisted.manifold.label() == "#153(S^2 x S^3) # (S^2 ~x S^3)"

    def test_rejects_imprimitive_euler(self):
        with pytest.raises(DomainError):
            bw.bw_classify(
                bw.BaseSurfaceData(invariants=k3_invariants(), euler_class=(2, 0))
            )

    def test_rejects_non_simply_connected(self):
        with pytest.raises(DomainError):
            bw.bw_classify(
                bw.BaseSurfaceData(
                    invariants=k3_invariants(),
                    euler_class=(1, 0),
                    simply_connected=False,
                )
            )


class TestHamilton:
    def reports(self, k):
        x = xk_invariants(k)
        z = horikawa_invariants(8 * k + 2)
        return (
            bw.bw_classify(bw.BaseSurfaceData(x, canonical_euler(x))),
            bw.bw_classify(bw.BaseSurfaceData(z, canonical_euler(z))),
        )

    def test_even_k_inequivalent(self):
        r1, r2 = self.reports(2)
        assert r1.manifold == r2.manifold
        assert (r1.hamilton_div, r2.hamilton_div) == (2, 1)
        assert bw.hamilton_obstruction(r1, r2) is bw.ContactVerdict.INEQUIVALENT

    def test_odd_k_inconclusive(self):
        r1, r2 = self.reports(1)
        assert (r1.hamilton_div, r2.hamilton_div) == (1, 1)
        assert bw.hamilton_obstruction(r1, r2) is bw.ContactVerdict.INCONCLUSIVE

    def test_identical_reports_inconclusive(self):
        r1, _ = self.reports(3)
        assert bw.hamilton_obstruction(r1, r1) is bw.ContactVerdict.INCONCLUSIVE

    def test_symmetric(self):
        r1, r2 = self.reports(4)
        assert bw.hamilton_obstruction(r1, r2) is bw.hamilton_obstruction(r2, r1)

    def test_rejects_different_manifolds(self):
        r1, _ = self.reports(1)
        r3, _ = self.reports(2)
        with pytest.raises(DomainError):
            bw.hamilton_obstruction(r1, r3)

    def test_rejects_nontrivial_contact_c1(self):
        inv = xk_invariants(1)
        twisted = bw.bw_classify(bw.BaseSurfaceData(inv, (1, 4)))
        ok = bw.bw_classify(bw.BaseSurfaceData(inv, canonical_euler(inv)))
        with pytest.raises(DomainError):
            bw.hamilton_obstruction(twisted, twisted)
        with pytest.raises(DomainError):
            bw.hamilton_obstruction(ok, twisted)


class TestLinkSign:
    def test_positive(self):
        assert bw.link_sign((1, 1, 1, 21), 22) is bw.LinkSign.POSITIVE

    def test_null(self):
        assert bw.link_sign((1, 1, 1, 1), 4) is bw.LinkSign.NULL

    def test_negative(self):
        assert bw.link_sign((1, 1, 1, 1), 5) is bw.LinkSign.NEGATIVE

    def test_rejects_bad_weights(self):
        with pytest.raises(DomainError):
            bw.link_sign((1, 0), 1)


class TestDiamond:
    def test_quintic_middle_row(self):
        w = wall_of((5,))
        diamond = bw.ci3_diamond(w, w.d)
        assert [diamond.h(3, 0), diamond.h(2, 1), diamond.h(1, 2), diamond.h(0, 3)] == [
            1,
            101,
            101,
            1,
        ]
        assert diamond.euler() == -200

    def test_projective_space(self):
        w = ci.wall_invariants(ci.CompleteIntersectionSpec(ci.AmbientSpace((3,))))
        diamond = bw.ci3_diamond(w, w.d)
        assert [diamond.h(3, 0), diamond.h(2, 1), diamond.h(1, 2), diamond.h(0, 3)] == [
            0,
            0,
            0,
            0,
        ]

    def test_known_pair_rows_differ(self):
        a, b = (wall_of(degs) for degs in KNOWN_COLLISION_PAIRS[0])
        da, db = bw.ci3_diamond(a, a.d), bw.ci3_diamond(b, b.d)
        assert da != db
        assert da.h(0, 3) != db.h(0, 3)

    def test_validation(self):
        with pytest.raises(IntegrityError):
            bw.HodgeDiamond(((2,),))
        with pytest.raises(IntegrityError):
            bw.HodgeDiamond(((1, 2), (3, 1)))
        with pytest.raises(IntegrityError):
            bw.HodgeDiamond(((1, 0), (0, 2)))


class TestKunneth:
    def test_point_identity(self):
        w = wall_of((5,))
        diamond = bw.ci3_diamond(w, w.d)
        assert bw.kunneth_hodge(diamond, bw.HodgeDiamond.point()) == diamond

    def test_curve_factor(self):
        w = wall_of((5,))
        diamond = bw.ci3_diamond(w, w.d)
        for g in (0, 2, 5):
            product = bw.kunneth_hodge(diamond, bw.HodgeDiamond.curve(g))
            assert product.h(1, 0) == g

    def test_quintic_square(self):
        w = wall_of((5,))
        diamond = bw.ci3_diamond(w, w.d)
        square = bw.kunneth_hodge(diamond, diamond)
        assert square.h(1, 1) == 2

    def test_commutative_associative(self):
        w = wall_of((5,))
        a = bw.ci3_diamond(w, w.d)
        b = bw.HodgeDiamond.curve(2)
        c = bw.HodgeDiamond(((1, 0, 1), (0, 20, 0), (1, 0, 1)))
        assert bw.kunneth_hodge(a, b) == bw.kunneth_hodge(b, a)
        assert bw.kunneth_hodge(bw.kunneth_hodge(a, b), c) == bw.kunneth_hodge(
            a, bw.kunneth_hodge(b, c)
        )

    def test_euler_multiplicative(self):
        a = bw.HodgeDiamond.curve(2)
        b = bw.HodgeDiamond(((1, 0, 1), (0, 20, 0), (1, 0, 1)))
        assert bw.kunneth_hodge(a, b).euler() == a.euler() * b.euler()


class TestSevenDimPair:
    def pair(self, index=0):
        return tuple(wall_of(degs) for degs in KNOWN_COLLISION_PAIRS[index])

    def test_simply_connected(self):
        report = bw.seven_dim_pair(1, self.pair())
        assert report.fundamental_group_order == 1
        assert report.diamonds[0] != report.diamonds[1]

    def test_cyclic_group(self):
        assert bw.seven_dim_pair(5, self.pair()).fundamental_group_order == 5

    def test_rejects_equal_c1(self):
        w = wall_of((70, 16, 16, 14, 7, 6))
        with pytest.raises(DomainError):
            bw.seven_dim_pair(1, (w, w))

    def test_rejects_non_diffeomorphic(self):
        with pytest.raises(DomainError):
            bw.seven_dim_pair(1, (wall_of((5,)), wall_of((6,))))


class TestHigherDimPair:
    def pair(self, index=0):
        return tuple(wall_of(degs) for degs in KNOWN_COLLISION_PAIRS[index])

    def test_genus_two_factor(self):
        report = bw.higher_dim_pair(self.pair(), bw.HodgeDiamond.curve(2))
        assert report.total_dimension == 9
        da, db = report.diamonds
        assert da.h(3, 0) != db.h(3, 0)

    def test_point_factor_reduces(self):
        report = bw.higher_dim_pair(self.pair(), bw.HodgeDiamond.point())
        assert report.total_dimension == 7
        seven = bw.seven_dim_pair(1, self.pair())
        assert report.diamonds == seven.diamonds

    def test_threefold_factor(self):
        w = wall_of((5,))
        quintic = bw.ci3_diamond(w, w.d)
        report = bw.higher_dim_pair(self.pair(1), quintic)
        assert report.total_dimension == 13
        assert report.diamonds[0] != report.diamonds[1]
