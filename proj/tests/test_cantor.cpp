#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace hjtest;

namespace {

MumfordDivisor<FpField> random_reduced(const Curve<FpField>& c, std::uint64_t seed) {
    auto pts = draw_points(c, c.genus(), seed);
    return mumford_from_pairform(
        pairform_from_points(PointDivisor<FpField>::from_points(c, pts)));
}

} // namespace

TEST_CASE("composition with the neutral element") {
    FpField k(1009);
    Curve<FpField> c = genus2_curve(k);
    auto d = random_reduced(c, 10);
    auto n = neutral(c);
    CHECK(cantor_compose(d, n) == d);
    CHECK(cantor_compose(n, d) == d);
}

TEST_CASE("coprime-support composition multiplies U and keeps residues") {
    FpField k(1009);
    Curve<FpField> c = genus2_curve(k);
    for (int t = 0; t < 30; ++t) {
        auto a = random_reduced(c, 100 + static_cast<std::uint64_t>(t) * 7);
        auto b = random_reduced(c, 200 + static_cast<std::uint64_t>(t) * 7);
        if (poly_gcd(a.u(), b.u()).degree_or(0) != 0) continue;
        auto s = cantor_compose(a, b);
        CHECK(s.u() == a.u() * b.u());
        CHECK(((s.v() - a.v()) % a.u()).is_zero());
        CHECK(((s.v() - b.v()) % b.u()).is_zero());
        CHECK(((c.rhs() - s.v() * s.v()) % s.u()).is_zero());
    }
}

TEST_CASE("inverse class composes to the neutral element") {
    FpField k(1009);
    Curve<FpField> c = genus2_curve(k);
    for (int t = 0; t < 20; ++t) {
        auto d = random_reduced(c, 300 + static_cast<std::uint64_t>(t) * 11);
        auto z = cantor_reduce(cantor_compose(d, negate(d)));
        CHECK(z == neutral(c));
    }
}

TEST_CASE("reduction is idempotent and degree-bounded") {
    FpField k(1009);
    Curve<FpField> c = genus2_curve(k);
    for (int t = 0; t < 20; ++t) {
        auto a = random_reduced(c, 400 + static_cast<std::uint64_t>(t) * 13);
        auto b = random_reduced(c, 500 + static_cast<std::uint64_t>(t) * 13);
        auto semi = cantor_compose(a, b);
        auto red = cantor_reduce(semi);
        CHECK(red.degree() <= c.genus());
        CHECK(cantor_reduce(red) == red);
        CHECK(((c.rhs() - red.v() * red.v()) % red.u()).is_zero());
    }
}

TEST_CASE("genus-1 chord through the oracle") {
    RatField q;
    Curve<RatField> c = cubic_curve(q);
    auto d = cantor_reduce_points(PointDivisor<RatField>::from_points(
        c, {c.point(q.from_int(0), q.from_int(1)), c.point(q.from_int(2), q.from_int(3))}));
    CHECK(d.u() == parse_poly(q, "x + 1"));
    CHECK(d.v().is_zero());
}

TEST_CASE("random genus-3 semi-reduced inputs keep the invariants") {
    FpField k(1009);
    Curve<FpField> c = Curve<FpField>::from_lambdas(k, 3, {{14, k.one()}, {8, k.from_int(5)}});
    for (int t = 0; t < 15; ++t) {
        auto pts = draw_points(c, 6, 600 + static_cast<std::uint64_t>(t) * 17);
        auto pf = pairform_from_points(PointDivisor<FpField>::from_points(c, pts));
        auto semi = mumford_from_pairform(pf);   // degree 2g semi-reduced
        CHECK(semi.degree() == 6);
        auto red = cantor_reduce(semi);
        CHECK(red.degree() <= 3);
        CHECK(red.u().leading() == k.one());
        CHECK(((c.rhs() - red.v() * red.v()) % red.u()).is_zero());
    }
}

TEST_CASE("oracle group laws") {
    FpField k(1009);
    Curve<FpField> c = genus2_curve(k);
    for (int t = 0; t < 20; ++t) {
        auto a = random_reduced(c, 700 + static_cast<std::uint64_t>(t) * 19);
        auto b = random_reduced(c, 800 + static_cast<std::uint64_t>(t) * 19);
        auto d = random_reduced(c, 900 + static_cast<std::uint64_t>(t) * 19);
        auto ab = cantor_reduce(cantor_compose(a, b));
        auto ba = cantor_reduce(cantor_compose(b, a));
        CHECK(ab == ba);
        auto ab_d = cantor_reduce(cantor_compose(ab, d));
        auto a_bd = cantor_reduce(cantor_compose(a, cantor_reduce(cantor_compose(b, d))));
        CHECK(ab_d == a_bd);
    }
}
