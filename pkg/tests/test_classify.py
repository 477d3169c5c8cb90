from fractions import Fraction

import pytest
from hypothesis import given, settings

from hesstop.classify import (
    SturmChain,
    Verdict,
    certify_nonnegative,
    certify_nonpositive,
    certify_pairing_nonpositive,
    count_real_roots,
    is_elliptic,
    is_hyperbolic,
    isolate_real_roots,
    polar_hyperbolicity_criterion,
    sign_on_punctured_plane,
    _yun_squarefree,
)
from hesstop.errors import DomainError
from hesstop.polyalg import (
    HomoPoly,
    multiply,
    parse,
    radial_family,
    saddle_family,
)
from hesstop.quadform import discriminant, hessian_pairing, second_fundamental_form

from conftest import homopolys
from helpers import (
    cauchy_radius,
    circle_samples,
    descartes_count_roots,
    random_homopoly,
    squarefree_with_known_roots,
)

F = Fraction


class TestSturm:
    def test_known_root_counts(self):
        assert count_real_roots([F(-2), F(0), F(1)]) == 2  # t^2 - 2
        assert count_real_roots([F(1), F(0), F(1)]) == 0  # t^2 + 1
        assert count_real_roots([F(0), F(1)]) == 1  # t
        assert count_real_roots([F(5)]) == 0

    def test_multiple_roots_counted_once(self):
        # (t - 1)^2 (t + 2)
        u = [F(2), F(-3), F(0), F(1)]
        assert count_real_roots(u) == 2

    def test_chain_terminal_relates_to_gcd(self):
        u = [F(2), F(-3), F(0), F(1)]
        chain = SturmChain.of(u)
        degrees = [len(p) - 1 for p in chain.polys]
        assert degrees == sorted(degrees, reverse=True)

    def test_interval_count(self):
        chain = SturmChain.of([F(-2), F(0), F(1)])  # roots at +-sqrt(2)
        assert chain.count_in(F(0), F(2)) == 1
        assert chain.count_in(F(-2), F(2)) == 2
        assert chain.count_in(F(2), F(3)) == 0

    def test_agrees_with_descartes_isolator(self, rng):
        # 100 random squarefree slices with known real-root counts
        for _ in range(100):
            n_real = rng.randint(0, 4)
            n_pairs = rng.randint(0, 2)
            u, expected = squarefree_with_known_roots(rng, n_real, n_pairs)
            assert count_real_roots(u) == expected
            radius = cauchy_radius(u) + 1
            assert descartes_count_roots(u, -radius, radius) == expected

    def test_isolation_brackets_each_root_once(self, rng):
        for _ in range(30):
            u, expected = squarefree_with_known_roots(
                rng, rng.randint(1, 4), rng.randint(0, 1)
            )
            intervals = isolate_real_roots(u)
            assert len(intervals) == expected
            for lo, hi in intervals:
                assert lo <= hi
                chain = SturmChain.of(u)
                if lo < hi:
                    assert chain.count_in(lo, hi) == 1


class TestYun:
    @given(homopolys(min_degree=1, max_degree=6))
    @settings(max_examples=60)
    def test_factorization_reconstructs(self, p):
        u = [c for c in p.coeffs]
        while u and u[-1] == 0:
            u.pop()
        if not u or len(u) == 1:
            return
        lead, factors = _yun_squarefree(u)
        prod = [lead]
        for a, mult in factors:
            for _ in range(mult):
                out = [F(0)] * (len(prod) + len(a) - 1)
                for i, x in enumerate(prod):
                    for j, y in enumerate(a):
                        out[i + j] += x * y
                prod = out
        assert prod == u

    def test_squarefree_parts_have_simple_roots(self):
        # (t-1)^2 (t+1)^3 = t^5 + t^4 - 2t^3 - 2t^2 + t + 1
        u = [F(1), F(1), F(-2), F(-2), F(1), F(1)]
        lead, factors = _yun_squarefree(u)
        assert lead == 1
        by_mult = {m: a for a, m in factors}
        assert by_mult[2] == [F(-1), F(1)]
        assert by_mult[3] == [F(1), F(1)]


class TestSignCertificates:
    def test_positive_definite(self):
        cert = sign_on_punctured_plane(parse("36*x^2 + 36*y^2"))
        assert cert.verdict is Verdict.POSITIVE

    def test_negative_constant(self):
        cert = sign_on_punctured_plane(HomoPoly.constant(-4))
        assert cert.verdict is Verdict.NEGATIVE

    def test_mixed_with_witness(self):
        p = parse("x^2 - y^2")
        cert = sign_on_punctured_plane(p)
        assert cert.verdict is Verdict.MIXED
        assert cert.witness is not None
        wx, wy = cert.witness
        assert p.evaluate(wx, wy) < 0

    def test_identically_zero(self):
        assert sign_on_punctured_plane(HomoPoly.zero(4)).verdict is Verdict.ZERO

    def test_odd_degree_is_mixed_with_negative_witness(self):
        p = saddle_family(3)
        cert = sign_on_punctured_plane(p)
        assert cert.verdict is Verdict.MIXED
        assert p.evaluate(*cert.witness) < 0

    def test_semidefinite_rational_zero_line(self):
        cert = sign_on_punctured_plane(parse("8*x^2"))
        assert cert.verdict is Verdict.MIXED
        assert cert.witness == (F(0), F(1))
        assert parse("8*x^2").evaluate(*cert.witness) == 0

    def test_semidefinite_irrational_zeros_have_no_witness(self):
        # (y^2 - 2 x^2)^2 vanishes only on irrational directions
        p = multiply(parse("y^2 - 2*x^2"), parse("y^2 - 2*x^2"))
        cert = sign_on_punctured_plane(p)
        assert cert.verdict is Verdict.MIXED
        assert cert.witness is None
        assert "semidefinite" in cert.method

    @given(homopolys(max_degree=8))
    @settings(max_examples=60, deadline=None)
    def test_definite_verdicts_never_contradicted_by_sampling(self, p):
        cert = sign_on_punctured_plane(p)
        values = circle_samples(p, 401)
        if cert.verdict is Verdict.POSITIVE:
            assert all(v > 0 for v in values)
        elif cert.verdict is Verdict.NEGATIVE:
            assert all(v < 0 for v in values)
        elif cert.verdict is Verdict.ZERO:
            assert all(v == 0 for v in values)

    def test_plane_grid_sampler_consistency(self):
        # a denser plane-grid cross-check on two known certificates
        for p, expect_pos in [(parse("x^4 + x^2*y^2 + y^4"), True),
                              (parse("-2*x^4 - y^4"), False)]:
            cert = sign_on_punctured_plane(p)
            want = Verdict.POSITIVE if expect_pos else Verdict.NEGATIVE
            assert cert.verdict is want
            for i in range(-20, 21):
                for j in range(-20, 21):
                    if i == 0 and j == 0:
                        continue
                    v = p.evaluate(F(i, 10), F(j, 10))
                    assert (v > 0) == expect_pos


class TestNonnegativity:
    def test_strict_positive(self):
        cert = certify_nonnegative(radial_family(2))
        assert cert.nonnegative and cert.strict

    def test_semidefinite_square(self):
        p = saddle_family(3)
        cert = certify_nonnegative(4 * multiply(p, p))
        assert cert.nonnegative and not cert.strict

    def test_fails_with_witness(self):
        p = parse("x^2 - y^2")
        cert = certify_nonnegative(p)
        assert not cert.nonnegative
        assert p.evaluate(*cert.witness) < 0

    def test_vertical_direction_violation(self):
        p = parse("x^4 - y^4")
        cert = certify_nonnegative(p)
        assert not cert.nonnegative
        assert p.evaluate(*cert.witness) < 0

    def test_odd_degree_fails(self):
        cert = certify_nonnegative(parse("x^3"))
        assert not cert.nonnegative
        assert parse("x^3").evaluate(*cert.witness) < 0

    def test_zero_polynomial(self):
        cert = certify_nonnegative(HomoPoly.zero(2))
        assert cert.nonnegative and not cert.strict

    def test_nonpositive_mirror(self):
        cert = certify_nonpositive(parse("-3*x^2 - y^2"))
        assert cert.nonnegative and cert.strict

    @given(homopolys(max_degree=8))
    @settings(max_examples=60, deadline=None)
    def test_never_contradicted_by_sampling(self, p):
        cert = certify_nonnegative(p)
        values = circle_samples(p, 201)
        if cert.nonnegative:
            assert all(v > -1e-9 for v in values)
        else:
            wx, wy = cert.witness
            assert p.evaluate(wx, wy) < 0


class TestClassification:
    def test_monkey_saddle_hyperbolic(self):
        ok, cert = is_hyperbolic(saddle_family(3))
        assert ok and cert.verdict is Verdict.POSITIVE

    def test_circle_not_hyperbolic_but_elliptic(self):
        assert not is_hyperbolic(radial_family(1))[0]
        assert is_elliptic(radial_family(1))[0]

    def test_degree_five_product_hyperbolic(self):
        ok, _ = is_hyperbolic(multiply(saddle_family(3), radial_family(1)))
        assert ok

    @pytest.mark.parametrize("k", range(1, 7))
    def test_radial_powers_elliptic(self, k):
        assert is_elliptic(radial_family(k))[0]

    def test_xy_not_elliptic(self):
        assert not is_elliptic(parse("x*y"))[0]
        assert is_hyperbolic(parse("x*y"))[0]

    def test_anisotropic_ellipse(self):
        assert is_elliptic(parse("x^2 + 2*y^2"))[0]

    def test_degree_guard(self):
        with pytest.raises(DomainError):
            is_hyperbolic(parse("x"))

    def test_quartic_with_parabolic_axes_not_hyperbolic(self):
        # x^4 - y^4: the discriminant of its second form vanishes on the axes
        ok, cert = is_hyperbolic(parse("x^4 - y^4"))
        assert not ok
        assert cert.verdict is Verdict.MIXED


class TestPolarCriterion:
    def test_values(self):
        assert polar_hyperbolicity_criterion(3, 1).max_value == -20
        assert polar_hyperbolicity_criterion(3, 0).max_value == -18
        assert polar_hyperbolicity_criterion(2, 5).max_value == 96
        assert polar_hyperbolicity_criterion(3, 1).hyperbolic
        assert not polar_hyperbolicity_criterion(2, 5).hyperbolic

    def test_boundary_pair_not_certified(self):
        # m = 2, k = 1 sits exactly on the boundary: the criterion value is 0
        crit = polar_hyperbolicity_criterion(2, 1)
        assert crit.max_value == 0 and not crit.hyperbolic

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            polar_hyperbolicity_criterion(1, 1)

    @pytest.mark.parametrize("m", range(3, 9))
    def test_agrees_with_sturm_route(self, m):
        for k in range(1, m):
            if m + 2 * k > 14:
                continue
            crit = polar_hyperbolicity_criterion(m, k)
            sturm = is_hyperbolic(multiply(saddle_family(m), radial_family(k)))[0]
            assert crit.hyperbolic == sturm == True


class TestPairingCertificate:
    @pytest.mark.parametrize("m", range(2, 11))
    def test_saddle_radial_pairs_hold(self, m):
        for k in range(1, 6):
            cert = certify_pairing_nonpositive(saddle_family(m), radial_family(k))
            assert cert.holds and cert.strict

    def test_hand_expanded_pair(self):
        cert = certify_pairing_nonpositive(saddle_family(2), parse("x^2+y^2"))
        assert cert.holds
        assert hessian_pairing(saddle_family(2), parse("x^2+y^2")) == parse(
            "-8*x^2-8*y^2"
        )

    def test_identically_zero_pairing(self):
        cert = certify_pairing_nonpositive(parse("x^2"), parse("y^2"))
        assert cert.holds and cert.method == "identically-zero"

    def test_semidefinite_pairing(self):
        # pairing(x^2 - y^2, x^2) = -8 x^2: nonpositive with a zero line
        cert = certify_pairing_nonpositive(parse("x^2 - y^2"), parse("x^2"))
        assert cert.holds and not cert.strict

    def test_violated_pairing_has_witness(self):
        # pairing(x^2 + y^2, x^2) = 8 x^2 > 0 off the y-axis
        cert = certify_pairing_nonpositive(parse("x^2 + y^2"), parse("x^2"))
        assert not cert.holds
        b = hessian_pairing(parse("x^2 + y^2"), parse("x^2"))
        assert b.evaluate(*cert.base.witness) > 0


def test_origin_not_separately_tested():
    # homogeneity forces every positive-degree pairing to vanish at the
    # origin, so certificates only ever speak about the punctured plane
    b = hessian_pairing(saddle_family(4), radial_family(2))
    assert b.evaluate(0, 0) == 0
