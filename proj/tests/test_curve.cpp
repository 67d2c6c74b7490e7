#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace hjtest;

TEST_CASE("curve construction from Sato-indexed parameters") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    CHECK(c.rhs() == parse_poly(q, "x^3 + 1"));
    CHECK(c.lambda(0) == q.one());
    CHECK(c.lambda(6) == q.one());
    CHECK(c.lambda(2).is_zero());

    FpField k(97);
    Curve<FpField> c2 = Curve<FpField>::from_lambdas(k, 2, {{10, k.one()}});
    CHECK(c2.rhs() == parse_poly(k, "x^5 + 1"));
}

TEST_CASE("singular models are rejected") {
    RatField q;
    CHECK_THROWS_MATCHES(Curve<RatField>::from_lambdas(q, 1, {}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::singular_curve; }));
}

TEST_CASE("characteristic must clear 2g+1") {
    // GF(5) with genus 2 means char = 2g+1
    CHECK_THROWS_MATCHES(
        Curve<FpField>::from_lambdas(FpField(5), 2, {{10, FpField(5).one()}}), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == errc::bad_characteristic; }));
    CHECK_NOTHROW(Curve<FpField>::from_lambdas(FpField(7), 2, {{10, FpField(7).one()}}));
}

TEST_CASE("lambda indices are validated") {
    RatField q;
    CHECK_THROWS_MATCHES(Curve<RatField>::from_lambdas(q, 1, {{7, q.one()}, {6, q.one()}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::bad_degree; }));
    CHECK_THROWS_AS(Curve<RatField>::from_lambdas(q, 1, {{8, q.one()}, {6, q.one()}}), Error);
}

TEST_CASE("point membership") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    CHECK(c.contains({q.from_int(2), q.from_int(3)}));
    CHECK(!c.contains({q.from_int(2), q.from_int(4)}));
    CHECK_THROWS_AS(c.point(q.from_int(2), q.from_int(4)), Error);

    FpField k(97);
    Curve<FpField> c2 = Curve<FpField>::from_lambdas(k, 2, {{10, k.one()}});
    CHECK(c2.contains({k.from_int(-1), k.zero()}));
}

TEST_CASE("involution") {
    RatField q;
    AffinePoint<RatField> p{q.from_int(2), q.from_int(3)};
    CHECK(involution(p) == AffinePoint<RatField>{q.from_int(2), q.from_int(-3)});
    AffinePoint<RatField> branch{q.from_int(-1), q.zero()};
    CHECK(involution(branch) == branch);
    CHECK(involution(involution(p)) == p);
}

TEST_CASE("sato weights") {
    const int g = 3;
    CHECK(monomial_weight(1, 0, g).value == 2);
    CHECK(monomial_weight(0, 1, g).value == 2 * g + 1);
    // both monomials of the curve equation share weight 4g+2
    CHECK(monomial_weight(0, 2, g) == monomial_weight(2 * g + 1, 0, g));
    CHECK(monomial_weight(0, 2, g).value == 4 * g + 2);
}

TEST_CASE("random points are on the curve, nonzero and deterministic") {
    FpField k(97);
    Curve<FpField> c = Curve<FpField>::from_lambdas(k, 2, {{10, k.one()}});
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto p = random_point(c, s);
        CHECK(c.contains(p));
        CHECK(!p.y.is_zero());
        CHECK(random_point(c, s) == p);
    }

    RatField q;
    Curve<RatField> cq = cubic_curve(q);
    CHECK_THROWS_MATCHES(random_point(cq, 1), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::no_point_found; }));
}
