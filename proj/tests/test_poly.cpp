#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace hjtest;

namespace {

template <class K>
Poly<K> random_poly(const K& k, Rng& rng, int deg, std::uint64_t p) {
    std::vector<typename K::Elem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Fp(rng.below(p), p));
    return Poly<K>(k, std::move(c));
}

} // namespace

TEST_CASE("ring operations") {
    RatField q;
    CHECK(parse_poly(q, "x + 1") * parse_poly(q, "x - 1") == parse_poly(q, "x^2 - 1"));
    Poly<RatField> a = parse_poly(q, "3*x^2 + 1/2");
    CHECK(a + Poly<RatField>(q) == a);

    FpField k(7);
    CHECK(parse_poly(k, "x + 3") * parse_poly(k, "x + 5") == parse_poly(k, "x^2 + x + 1"));
}

TEST_CASE("euclidean division") {
    RatField q;
    auto [q1, r1] = parse_poly(q, "x^2 - 1").divrem(parse_poly(q, "x - 1"));
    CHECK(q1 == parse_poly(q, "x + 1"));
    CHECK(r1.is_zero());

    auto [q2, r2] = parse_poly(q, "x^3").divrem(parse_poly(q, "x^2"));
    CHECK(q2 == parse_poly(q, "x"));
    CHECK(r2.is_zero());

    FpField k(7);
    auto [q3, r3] = parse_poly(k, "x^3 + 2*x + 5").divrem(parse_poly(k, "x + 1"));
    CHECK(q3 == parse_poly(k, "x^2 - x + 3"));
    CHECK(r3 == parse_poly(k, "2"));
    CHECK(q3 * parse_poly(k, "x + 1") + r3 == parse_poly(k, "x^3 + 2*x + 5"));

    CHECK_THROWS_AS(parse_poly(k, "x").divrem(Poly<FpField>(k)), Error);
}

TEST_CASE("divrem recomposition on random inputs") {
    FpField k(1009);
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        auto a = random_poly(k, rng, 1 + static_cast<int>(rng.below(9)), 1009);
        auto b = random_poly(k, rng, 1 + static_cast<int>(rng.below(5)), 1009);
        if (b.is_zero()) continue;
        auto [quo, rem] = a.divrem(b);
        CHECK(quo * b + rem == a);
        CHECK(rem.degree_or(-1) < b.degree_or(-1));
    }
}

TEST_CASE("extended gcd") {
    RatField q;
    auto a = parse_poly(q, "x - 1");
    auto b = parse_poly(q, "x - 2");
    auto [d, s, t] = poly_xgcd(a, b);
    CHECK(d == parse_poly(q, "1"));
    CHECK(s * a + t * b == d);

    auto [d0, s0, t0] = poly_xgcd(parse_poly(q, "3*x^2 - 3"), Poly<RatField>(q));
    CHECK(d0 == parse_poly(q, "x^2 - 1"));
    CHECK(s0 * parse_poly(q, "3*x^2 - 3") == d0);
    CHECK(t0.is_zero());

    FpField k(1009);
    Rng rng(17);
    for (int t2 = 0; t2 < 50; ++t2) {
        auto f = random_poly(k, rng, 4, 1009);
        auto g = random_poly(k, rng, 4, 1009);
        if (f.is_zero() || g.is_zero()) continue;
        auto [dd, ss, tt] = poly_xgcd(f, g);
        CHECK(ss * f + tt * g == dd);
        CHECK(dd.leading() == k.one());
        if (dd.degree_or(0) == 0) {   // coprime: minimal cofactor degrees
            CHECK(ss.degree_or(-1) < g.degree_or(0));
            CHECK(tt.degree_or(-1) < f.degree_or(0));
        }
    }
}

TEST_CASE("lagrange interpolation") {
    RatField q;
    auto chord = lagrange_interpolate(
        q, {{q.from_int(0), q.from_int(1)}, {q.from_int(2), q.from_int(3)}});
    CHECK(chord == parse_poly(q, "x + 1"));

    auto single = lagrange_interpolate(q, {{q.from_int(5), Rat(7, 3)}});
    CHECK(single == Poly<RatField>::constant(q, Rat(7, 3)));

    FpField k(97);
    Rng rng(11);
    auto xs = distinct_fp(FpField(97), 5, 23);
    std::vector<std::pair<Fp, Fp>> pts;
    for (const auto& x : xs) pts.push_back({x, Fp(rng.below(97), 97)});
    auto p = lagrange_interpolate(k, pts);
    CHECK(p.degree_or(-1) <= 4);
    for (const auto& [x, y] : pts) CHECK(p.eval(x) == y);

    CHECK_THROWS_MATCHES(
        lagrange_interpolate(q, {{q.one(), q.one()}, {q.one(), q.from_int(2)}}), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == errc::duplicate_x_coordinate; }));
}

TEST_CASE("lagrange basis sums to one") {
    FpField k(1009);
    auto xs = distinct_fp(k, 6, 99);
    Poly<FpField> sum(k);
    for (std::size_t m = 0; m < xs.size(); ++m) {
        Poly<FpField> num = Poly<FpField>::constant(k, k.one());
        Fp den = k.one();
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == m) continue;
            num *= Poly<FpField>::linear_root(k, xs[j]);
            den *= xs[m] - xs[j];
        }
        sum += num * den.inverse();
    }
    CHECK(sum == Poly<FpField>::constant(k, k.one()));
}

TEST_CASE("complete symmetric polynomials") {
    RatField q;
    Rat a(3, 2);
    CHECK(complete_symmetric(q, {a}, 3) == a * a * a);

    std::vector<Rat> two = {q.from_int(2), q.from_int(5)};
    CHECK(complete_symmetric(q, two, 2) == q.from_int(4 + 10 + 25));

    // enumeration oracle agreement
    FpField k(1009);
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        auto xs = distinct_fp(k, 1 + static_cast<int>(rng.below(5)), 1000 + t);
        for (int n = 0; n <= 6; ++n) {
            CHECK(complete_symmetric(k, xs, n) == h_enum(k, xs, n));
        }
    }
    CHECK(complete_symmetric(k, {k.one()}, -1).is_zero());
}

TEST_CASE("power-sum identity against direct evaluation") {
    // sum_k x_k^n / prod_{j != k} (x_k - x_j) = h_{n - N + 1}
    FpField k(1009);
    RatField q;
    for (int t = 0; t < 30; ++t) {
        int n_vars = 2 + t % 7;
        auto xs = distinct_fp(k, n_vars, 555 + t);
        for (int n = 0; n <= 12; ++n) {
            Fp lhs = k.zero();
            for (int m = 0; m < n_vars; ++m) {
                Fp den = k.one();
                for (int j = 0; j < n_vars; ++j) {
                    if (j != m) den *= xs[m] - xs[j];
                }
                Fp pw = k.one();
                for (int e = 0; e < n; ++e) pw *= xs[m];
                lhs += pw / den;
            }
            CHECK(lhs == complete_symmetric(k, xs, n - n_vars + 1));
        }
    }
    for (int t = 0; t < 5; ++t) {
        int n_vars = 2 + t;
        auto xs = distinct_rats(n_vars, 777 + t);
        for (int n = 0; n <= 8; ++n) {
            Rat lhs;
            for (int m = 0; m < n_vars; ++m) {
                Rat den = q.one();
                for (int j = 0; j < n_vars; ++j) {
                    if (j != m) den *= xs[m] - xs[j];
                }
                Rat pw = q.one();
                for (int e = 0; e < n; ++e) pw *= xs[m];
                lhs += pw / den;
            }
            CHECK(lhs == complete_symmetric(q, xs, n - n_vars + 1));
        }
    }
}

TEST_CASE("taylor recentring") {
    RatField q;
    auto p = parse_poly(q, "x^3 + 1");
    auto coeffs = taylor_coeffs_at(p, q.from_int(2), 4);
    CHECK(coeffs == std::vector<Rat>{q.from_int(9), q.from_int(12), q.from_int(6), q.one()});

    auto same = taylor_coeffs_at(p, q.zero(), 4);
    CHECK(poly_from_taylor(q, same, q.zero()) == p);

    FpField k(1009);
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        auto f = random_poly(k, rng, 7, 1009);
        Fp x0(rng.below(1009), 1009);
        auto cs = taylor_coeffs_at(f, x0, 8);
        CHECK(poly_from_taylor(k, cs, x0) == f);
    }
}

TEST_CASE("evaluation, derivative, monic") {
    RatField q;
    CHECK(parse_poly(q, "x^2 + 1").eval(q.from_int(2)) == q.from_int(5));
    CHECK(parse_poly(q, "x^3 + x").derivative() == parse_poly(q, "3*x^2 + 1"));

    FpField k(7);
    CHECK(parse_poly(k, "3*x^2 + 6").monic() == parse_poly(k, "x^2 + 2"));
    CHECK_THROWS_AS(Poly<FpField>(k).monic(), Error);
}

TEST_CASE("text form round-trips") {
    FpField k(1009);
    Rng rng(81);
    for (int t = 0; t < 40; ++t) {
        auto f = random_poly(k, rng, static_cast<int>(rng.below(7)), 1009);
        CHECK(parse_poly(k, to_string(f)) == f);
    }
    RatField q;
    auto f = Poly<RatField>(q, {Rat(-3, 4), q.zero(), Rat(1, 2), q.from_int(-2)});
    CHECK(parse_poly(q, to_string(f)) == f);
    CHECK(to_string(Poly<RatField>(q)) == "0");
    CHECK(parse_poly(q, "0").is_zero());

    CHECK_THROWS_AS(parse_poly(q, ""), Error);
    CHECK_THROWS_AS(parse_poly(q, "x^"), Error);
    CHECK_THROWS_AS(parse_poly(q, "3 +"), Error);
    CHECK_THROWS_AS(parse_poly(q, "y + 1"), Error);
}

TEST_CASE("degree sentinel") {
    RatField q;
    Poly<RatField> zero(q);
    CHECK(!zero.degree().has_value());
    CHECK(zero.degree_or(-7) == -7);
    CHECK(zero.degree() < parse_poly(q, "1").degree());
}
