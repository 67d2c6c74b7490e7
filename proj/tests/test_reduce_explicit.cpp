#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace hjtest;

TEST_CASE("genus-1 chord fixture, checked against the chord law") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    auto p0 = c.point(q.from_int(0), q.from_int(1));
    auto p1 = c.point(q.from_int(2), q.from_int(3));

    auto expect = ec_add<RatField>(c, p0, p1);
    REQUIRE(expect.has_value());
    CHECK(expect->x == q.from_int(-1));
    CHECK(expect->y.is_zero());

    auto rp = reduce_gplus1_distinct(c, {p0, p1});
    CHECK(rp.h() == parse_poly(q, "x + 1"));
    CHECK(rp.i().is_zero());
    auto md = rp.to_mumford();
    CHECK(md.u() == parse_poly(q, "x + 1"));
    CHECK(md.v().is_zero());
    CHECK(md.v().eval(expect->x) == expect->y);
}

TEST_CASE("genus-1 tangent fixture, checked against the tangent law") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    auto p = c.point(q.from_int(2), q.from_int(3));

    auto expect = ec_add<RatField>(c, p, p);
    REQUIRE(expect.has_value());
    CHECK(expect->x == q.from_int(0));
    CHECK(expect->y == q.one());

    auto rp = reduce_gplus1_duplicated(c, p, {});
    CHECK(rp.h() == parse_poly(q, "x"));
    CHECK(rp.i() == parse_poly(q, "-1"));
    auto md = rp.to_mumford();
    CHECK(md.u() == parse_poly(q, "x"));
    CHECK(md.v() == parse_poly(q, "1"));
}

TEST_CASE("the Taylor route coincides with the duplicated-point route at g = 1") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    auto p = c.point(q.from_int(2), q.from_int(3));

    // y-series by hand: c0 = 3, c1 = 2, c2 = 1/3
    auto cn = y_taylor_coeffs(c, p, 3);
    CHECK(cn == std::vector<Rat>{q.from_int(3), q.from_int(2), Rat(1, 3)});

    auto a = reduce_gplus1_single(c, p);
    auto b = reduce_gplus1_duplicated(c, p, {});
    CHECK(a == b);

    FpField k(1009);
    Curve<FpField> cf = Curve<FpField>::from_lambdas(k, 1, {{6, k.one()}, {4, k.from_int(2)}});
    for (int t = 0; t < 25; ++t) {
        auto pt = random_point(cf, 40 + static_cast<std::uint64_t>(t));
        CHECK(reduce_gplus1_single(cf, pt) == reduce_gplus1_duplicated(cf, pt, {}));
    }
}

TEST_CASE("validation errors of the explicit reductions") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    auto p = c.point(q.from_int(2), q.from_int(3));
    auto branch = c.point(q.from_int(-1), q.zero());

    CHECK_THROWS_MATCHES(reduce_gplus1_distinct(c, {p, p}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::duplicate_x_coordinate;
                         }));
    CHECK_THROWS_MATCHES(reduce_gplus1_distinct(c, {p, involution(p)}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::involution_pair; }));
    CHECK_THROWS_MATCHES(reduce_gplus1_duplicated(c, branch, {}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::branch_point_duplication;
                         }));
    CHECK_THROWS_MATCHES(reduce_gplus1_single(c, branch), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::branch_point; }));
    CHECK_THROWS_AS(reduce_gplus1_distinct(c, {p}), Error);
}

TEST_CASE("degenerate g+2 input: strict raises, default reduces through division") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    // all three points lie on y = x + 1, so the class is the neutral one
    std::vector<AffinePoint<RatField>> pts = {c.point(q.from_int(0), q.from_int(1)),
                                              c.point(q.from_int(2), q.from_int(3)),
                                              c.point(q.from_int(-1), q.zero())};
    CHECK_THROWS_MATCHES(reduce_gplus2_distinct(c, pts, true), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::degenerate_leading_coefficient;
                         }));
    auto md = reduce_gplus2_distinct(c, pts).to_mumford();
    CHECK(md == neutral(c));
    CHECK(md == cantor_reduce_points(PointDivisor<RatField>::from_points(c, pts)));
}

TEST_CASE("closed-form outputs match the oracle over GF(97), genus 2") {
    FpField k(97);
    Curve<FpField> c = Curve<FpField>::from_lambdas(k, 2, {{10, k.one()}});
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        std::uint64_t s = 1000 + static_cast<std::uint64_t>(t) * 23;

        auto p3 = draw_points(c, 3, s);
        CHECK(reduce_gplus1_distinct(c, p3).to_mumford() ==
              cantor_reduce_points(PointDivisor<FpField>::from_points(c, p3)));

        auto p4 = draw_points(c, 4, s + 1);
        CHECK(reduce_gplus2_distinct(c, p4).to_mumford() ==
              cantor_reduce_points(PointDivisor<FpField>::from_points(c, p4)));

        auto pd = draw_points(c, 2, s + 2);
        CHECK(reduce_gplus1_duplicated(c, pd[0], {pd[1]}).to_mumford() ==
              cantor_reduce_points(PointDivisor<FpField>(c, {{pd[0], 2}, {pd[1], 1}})));

        auto p1 = random_point(c, s + 3);
        CHECK(reduce_gplus1_single(c, p1).to_mumford() ==
              cantor_reduce_points(PointDivisor<FpField>(c, {{p1, 3}})));
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("closed-form H equals the division-form H") {
    FpField k(1009);
    for (int g = 1; g <= 3; ++g) {
        Curve<FpField> c =
            Curve<FpField>::from_lambdas(k, g, {{4 * g + 2, k.one()}, {4, k.from_int(g + 1)}});
        for (int t = 0; t < 20; ++t) {
            std::uint64_t s = 9000 + static_cast<std::uint64_t>(g) * 421 +
                              static_cast<std::uint64_t>(t) * 29;
            auto pts = draw_points(c, g + 1, s);
            Poly<FpField> f = detail::linear_product(k, detail::x_coords(pts), -1);
            auto [h_div, i_div] = detail::division_route(c, detail::lagrange_G(k, pts), f);
            (void)i_div;
            CHECK(detail::t1_closed_H(c, pts) == h_div);

            auto pts2 = draw_points(c, g + 2, s + 1);
            Poly<FpField> f2 = detail::linear_product(k, detail::x_coords(pts2), -1);
            auto [h2_div, i2_div] = detail::division_route(c, detail::lagrange_G(k, pts2), f2);
            (void)i2_div;
            CHECK(detail::t2_closed_H(c, pts2) == h2_div);
        }
    }
}

TEST_CASE("leading coefficients: monic for g+1 routes, h0 = -g0^2 for g+2") {
    FpField k(1009);
    Curve<FpField> c = genus2_curve(k);
    for (int t = 0; t < 25; ++t) {
        std::uint64_t s = 5000 + static_cast<std::uint64_t>(t) * 37;
        auto rp1 = reduce_gplus1_distinct(c, draw_points(c, 3, s));
        CHECK(rp1.h().degree_or(0) == 2);
        CHECK(rp1.h().leading() == k.one());

        auto pts = draw_points(c, 4, s + 1);
        auto rp2 = reduce_gplus2_distinct(c, pts);
        Fp g0 = detail::lagrange_G(k, pts).coeff(3);
        if (!g0.is_zero()) {
            CHECK(rp2.h().degree_or(0) == 2);
            CHECK(rp2.h().leading() == -(g0 * g0));
        }

        auto pd = draw_points(c, 2, s + 2);
        auto rp3 = reduce_gplus1_duplicated(c, pd[0], {pd[1]});
        CHECK(rp3.h().leading() == k.one());

        auto rp4 = reduce_gplus1_single(c, random_point(c, s + 3));
        CHECK(rp4.h().degree_or(0) == 2);
        CHECK(rp4.h().leading() == k.one());
    }
}

TEST_CASE("hermite basis sums to one over the point part") {
    FpField k(1009);
    Curve<FpField> c = Curve<FpField>::from_lambdas(k, 3, {{14, k.one()}, {6, k.from_int(2)}});
    for (int t = 0; t < 10; ++t) {
        auto pts = draw_points(c, 3, 7000 + static_cast<std::uint64_t>(t) * 41);
        auto basis = detail::t3_hermite_basis(k, detail::x_coords(pts));
        REQUIRE(basis.size() == 4);   // y_1, y_2, y_3, y_1'
        Poly<FpField> sum(k);
        for (std::size_t m = 0; m + 1 < basis.size(); ++m) sum += basis[m];
        CHECK(sum == Poly<FpField>::constant(k, k.one()));
    }
}

TEST_CASE("every reduced pair satisfies the membership identity") {
    FpField k(1009);
    Curve<FpField> c = genus2_curve(k);
    for (int t = 0; t < 25; ++t) {
        auto rp = reduce_gplus2_distinct(c, draw_points(c, 4, 8000 + static_cast<std::uint64_t>(t)));
        CHECK(((c.rhs() - rp.i() * rp.i()) % rp.h()).is_zero());
    }
}
