#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldman/hplane.hpp"

#include <cmath>
#include <random>

using namespace goldman;

namespace {

MobiusMap diag(double t) {
    return MobiusMap::from_entries(std::exp(0.5 * t), 0, 0, std::exp(-0.5 * t));
}

MobiusMap rot_about_i(double chi) {
    return MobiusMap::from_entries(std::cos(0.5 * chi), std::sin(0.5 * chi),
                                   -std::sin(0.5 * chi), std::cos(0.5 * chi));
}

MobiusMap random_mobius(std::mt19937& rng) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    while (true) {
        double a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        if (a * d - b * c > 0.1) return MobiusMap::from_entries(a, b, c, d);
    }
}

// independent oracle for the distance: integrate ds = |dz| / Im z along
// the connecting geodesic, parametrized by the crossing circle
double dist_by_quadrature(PointH p, PointH q) {
    DirectedGeodesic L = geodesic_through(p, q);
    GeodesicFrame f(L);
    double t0 = f.param(p), t1 = f.param(q);
    const int n = 20000;
    double sum = 0;
    PointH prev = f.at(t0);
    for (int i = 1; i <= n; ++i) {
        PointH cur = f.at(t0 + (t1 - t0) * i / n);
        sum += std::hypot(cur.real() - prev.real(), cur.imag() - prev.imag()) /
               (0.5 * (cur.imag() + prev.imag()));
        prev = cur;
    }
    return std::fabs(sum);
}

}  // namespace

TEST_CASE("classification trichotomy") {
    CHECK(classify(diag(2.0)) == IsomClass::Hyperbolic);
    CHECK(classify(MobiusMap::from_entries(1, 1, 0, 1)) == IsomClass::Parabolic);
    CHECK(classify(rot_about_i(M_PI / 3)) == IsomClass::Elliptic);
    CHECK(classify(MobiusMap{}) == IsomClass::Identity);
}

TEST_CASE("translation length") {
    CHECK(translation_length(diag(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(translation_length(diag(4.0)) == doctest::Approx(4.0).epsilon(1e-12));
    std::mt19937 rng(3);
    MobiusMap k = random_mobius(rng);
    MobiusMap conj = k * diag(2.0) * k.inverse();
    CHECK(translation_length(conj) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS(translation_length(rot_about_i(1.0)), domain_error);
}

TEST_CASE("distance") {
    CHECK(dist(PointH(0, 1), PointH(0, 2)) == doctest::Approx(std::log(2.0)));
    CHECK(dist(PointH(0, 1), PointH(0, 1)) == doctest::Approx(0.0));
    double d = dist(PointH(0, 1), PointH(1, 2));
    CHECK(d == doctest::Approx(std::acosh(1.5)).epsilon(1e-12));
    CHECK(d == doctest::Approx(dist_by_quadrature(PointH(0, 1), PointH(1, 2))).epsilon(1e-6));
}

TEST_CASE("axis direction and equivariance") {
    DirectedGeodesic ax = axis(diag(2.0));
    CHECK(!ax.source.is_infinite());
    CHECK(ax.source.value() == doctest::Approx(0.0));
    CHECK(ax.target.is_infinite());

    DirectedGeodesic rev = axis(diag(-2.0));
    CHECK(rev.source.is_infinite());
    CHECK(rev.target.value() == doctest::Approx(0.0));

    // conjugation by z + 3
    MobiusMap shift = MobiusMap::from_entries(1, 3, 0, 1);
    DirectedGeodesic moved = axis(shift * diag(2.0) * shift.inverse());
    CHECK(moved.source.value() == doctest::Approx(3.0));
    CHECK(moved.target.is_infinite());

    SUBCASE("axis(kgk^-1) = k axis(g) on random conjugators") {
        std::mt19937 rng(4);
        for (int trial = 0; trial < 100; ++trial) {
            MobiusMap k = random_mobius(rng);
            DirectedGeodesic a1 = axis(k * diag(1.7) * k.inverse());
            BoundaryPoint s = k.apply(axis(diag(1.7)).source);
            BoundaryPoint t = k.apply(axis(diag(1.7)).target);
            CHECK(std::fabs(boundary_det(a1.source, s)) < 1e-9);
            CHECK(std::fabs(boundary_det(a1.target, t)) < 1e-9);
        }
    }
}

TEST_CASE("geodesic_meet") {
    DirectedGeodesic up{BoundaryPoint::finite(0), BoundaryPoint::infinity()};
    DirectedGeodesic unit{BoundaryPoint::finite(-1), BoundaryPoint::finite(1)};
    auto crossing = geodesic_meet(up, unit);
    REQUIRE(crossing);
    CHECK(crossing->point.real() == doctest::Approx(0.0));
    CHECK(crossing->point.imag() == doctest::Approx(1.0));
    CHECK(crossing->angle == doctest::Approx(M_PI / 2).epsilon(1e-12));

    CHECK(!geodesic_meet(up, {BoundaryPoint::finite(1), BoundaryPoint::finite(2)}));

    DirectedGeodesic wide{BoundaryPoint::finite(2), BoundaryPoint::finite(-2)};
    auto crossing2 = geodesic_meet(up, wide);
    REQUIRE(crossing2);
    CHECK(crossing2->point.imag() == doctest::Approx(2.0));
    CHECK(crossing2->angle == doctest::Approx(M_PI / 2).epsilon(1e-12));
    // reversing one direction flips the orientation
    CHECK(crossing2->orientation == -geodesic_meet(up, unit)->orientation);
}

TEST_CASE("reflection") {
    DirectedGeodesic up{BoundaryPoint::finite(0), BoundaryPoint::infinity()};
    Reflection r(up);
    PointH z = r.apply(PointH(1, 1));
    CHECK(z.real() == doctest::Approx(-1.0));
    CHECK(z.imag() == doctest::Approx(1.0));

    SUBCASE("involution on random points and mirrors") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> coord(-3.0, 3.0);
        for (int trial = 0; trial < 100; ++trial) {
            double a = coord(rng), b = coord(rng);
            if (std::fabs(a - b) < 0.1) continue;
            Reflection mirror(DirectedGeodesic{BoundaryPoint::finite(a), BoundaryPoint::finite(b)});
            PointH w(coord(rng), std::fabs(coord(rng)) + 0.2);
            PointH back = mirror.apply(mirror.apply(w));
            CHECK(std::abs(back - w) < 1e-12 * (1.0 + std::abs(w)));
        }
    }
}

TEST_CASE("perpendicular foot, point_at, perpendicular_at") {
    DirectedGeodesic up{BoundaryPoint::finite(0), BoundaryPoint::infinity()};
    PointH foot = perpendicular_foot(up, PointH(1, 1));
    CHECK(foot.real() == doctest::Approx(0.0));
    CHECK(foot.imag() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    SUBCASE("foot minimizes the distance (golden-section oracle)") {
        PointH p(1, 1);
        GeodesicFrame f(up);
        double lo = -3, hi = 3;
        for (int it = 0; it < 200; ++it) {
            double m1 = lo + (hi - lo) * 0.382, m2 = lo + (hi - lo) * 0.618;
            if (dist(p, f.at(m1)) < dist(p, f.at(m2)))
                hi = m2;
            else
                lo = m1;
        }
        CHECK(std::abs(f.at(0.5 * (lo + hi)) - foot) < 1e-6);
    }

    PointH moved = point_at(up, PointH(0, 1), 1.0);
    CHECK(moved.imag() == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

    DirectedGeodesic perp = perpendicular_at(up, PointH(0, 1), 0.0);
    auto crossing = geodesic_meet(up, perp);
    REQUIRE(crossing);
    CHECK(crossing->angle == doctest::Approx(M_PI / 2).epsilon(1e-9));
    CHECK(crossing->orientation == 1);  // positively oriented by convention
}

TEST_CASE("cosh composition law") {
    MobiusMap g = diag(2.0);
    MobiusMap h = rot_about_i(M_PI / 2) * diag(2.0) * rot_about_i(M_PI / 2).inverse();
    CoshCheck chk = compose_check_cosh(g, h);
    CHECK(chk.theta == doctest::Approx(M_PI / 2).epsilon(1e-9));
    CHECK(std::cosh(0.5 * chk.t_gh) ==
          doctest::Approx(std::cosh(1.0) * std::cosh(1.0)).epsilon(1e-10));
    CHECK(chk.residual < 1e-10);
    CHECK(chk.t_gh == doctest::Approx(2.0 * std::acosh(std::cosh(1.0) * std::cosh(1.0))));

    CHECK_THROWS_AS(compose_check_cosh(g, g), domain_error);  // equal axes

    SUBCASE("isometry invariance of the residual data") {
        std::mt19937 rng(6);
        for (int trial = 0; trial < 50; ++trial) {
            MobiusMap k = random_mobius(rng);
            CoshCheck moved = compose_check_cosh(k * g * k.inverse(), k * h * k.inverse());
            CHECK(moved.theta == doctest::Approx(chk.theta).epsilon(1e-9));
            CHECK(moved.t_gh == doctest::Approx(chk.t_gh).epsilon(1e-9));
        }
    }
}

TEST_CASE("two reflections") {
    MobiusMap g = diag(2.0);
    auto [l1, l2] = two_reflection_decomposition(g);
    // L1 is the unit half-circle, L2 the half-circle of radius e
    CHECK(std::fabs(l1.source.value() * l1.target.value() + 1.0) < 1e-9);
    CHECK(std::fabs(l2.source.value() * l2.target.value() + std::exp(2.0)) < 1e-6);
    MobiusMap composed = Reflection(l2).compose(Reflection(l1));
    CHECK(composed.approx_equal(g, 1e-9));

    SUBCASE("random hyperbolics recompose within 1e-9") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            MobiusMap k = random_mobius(rng);
            MobiusMap m = k * diag(0.4 + 0.1 * trial) * k.inverse();
            auto [r1, r2] = two_reflection_decomposition(m);
            CHECK(Reflection(r2).compose(Reflection(r1)).approx_equal(m, 1e-9));
            GeodesicFrame f(axis(m));
            auto c1 = geodesic_meet(axis(m), r1);
            REQUIRE(c1);
            auto c2 = geodesic_meet(axis(m), r2);
            REQUIRE(c2);
            double gap = dist(c1->point, c2->point);
            CHECK(gap == doctest::Approx(0.5 * translation_length(m)).epsilon(1e-8));
        }
    }
}

TEST_CASE("two rotations") {
    MobiusMap g = diag(2.0);
    auto [v1, v2] = two_rotation_decomposition(g, PointH(0, 1));
    CHECK(std::abs(v1 - PointH(0, 1)) < 1e-12);
    CHECK(std::abs(v2 - PointH(0, std::exp(1.0))) < 1e-9);
    CHECK((half_turn(v2) * half_turn(v1)).approx_equal(g, 1e-9));
    CHECK(dist(v1, v2) == doctest::Approx(0.5 * translation_length(g)).epsilon(1e-12));

    // the axis passes through both rotation centers
    GeodesicFrame f(axis(g));
    CHECK(f.offset(v1) < 1e-9);
    CHECK(f.offset(v2) < 1e-9);

    CHECK_THROWS_AS(two_rotation_decomposition(g, PointH(1, 1)), domain_error);
}

TEST_CASE("projective matrix equality") {
    MobiusMap g = diag(1.0);
    CHECK(g.approx_equal(g.negated(), 1e-12));
    CHECK(!g.approx_equal(diag(1.1), 1e-6));
    CHECK_THROWS_AS(MobiusMap::from_entries(1, 0, 0, -1), domain_error);
}
