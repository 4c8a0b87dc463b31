#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "samelson/poly.hpp"

using namespace samelson;

namespace {

RingPtr free_p3() { return Ring::make({"p1", "p2", "p3"}, {4, 8, 12}); }

Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, int nterms, int maxexp) {
    std::uniform_int_distribution<int> ex(0, maxexp), num(-9, 9), den(1, 9);
    Poly p(ring);
    for (int t = 0; t < nterms; ++t) {
        Expo e(ring->nvars());
        for (auto& x : e) x = ex(rng);
        Rat c(num(rng), den(rng));
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("ideal reduction kills p1^2") {
    auto r = Ring::make({"p1"}, {4}, {{2}});
    auto p1 = Poly::variable(r, "p1");
    CHECK((p1 * p1).is_zero());
    CHECK((p1 * p1 * p1).is_zero());
    CHECK_FALSE(p1.is_zero());
}

TEST_CASE("difference of squares in a free ring") {
    auto r = free_p3();
    auto one = Poly(r, 1);
    auto p1 = Poly::variable(r, "p1");
    CHECK((one + p1) * (one - p1) == one - p1 * p1);
}

TEST_CASE("square of the x12 image") {
    auto r = free_p3();
    auto lhs = parse_poly(r, "-6p3 + p2*p1");
    CHECK(lhs * lhs == parse_poly(r, "36p3^2 - 12p3*p2*p1 + p2^2*p1^2"));
}

TEST_CASE("degree truncation") {
    auto r = Ring::make({"p1", "p2"}, {4, 8});
    auto p = parse_poly(r, "1 + p1 + p2");
    CHECK(p.truncate_degree(4) == parse_poly(r, "1 + p1"));
    auto x = Poly::variable(r, "p2");
    CHECK(x.truncate_degree(7).is_zero());
}

TEST_CASE("word-length cut") {
    auto r = Ring::make({"x4", "x12"}, {4, 12}, {}, 2);
    auto x4 = Poly::variable(r, "x4");
    auto x12 = Poly::variable(r, "x12");
    CHECK_FALSE((x4 * x12).is_zero());
    CHECK((x4 * x4 * x12).is_zero());
}

TEST_CASE("mod p of p-local coefficients") {
    auto r = Ring::make({"x24", "x36"}, {24, 36});
    auto a = parse_poly(r, "-131/144000 x24*x36");
    auto b = a.mod_p(11);
    CHECK_FALSE(b.is_zero());  // 144000 = 2^7 3^2 5^3 is a unit mod 11
    // 228u + 114v is already reduced mod 19^2
    auto r2 = Ring::make({"u", "v"}, {2, 2});
    auto c = parse_poly(r2, "228u + 114v");
    CHECK(c.mod_p(19, 2) == parse_poly(r2, "228u + 114v").mod_p(19, 2));
    CHECK(c.mod_p(19, 2).coeff({1, 0}) == 228);
}

TEST_CASE("mod p rejects non-local denominators") {
    auto r = Ring::make({"x"}, {4});
    auto a = parse_poly(r, "1/5 x");
    CHECK_THROWS_AS((void)a.mod_p(5), NonPLocalCoefficient);
}

TEST_CASE("p-adic valuations") {
    CHECK(p_valuation(Rat(1746822, 5), 19) == 1);
    CHECK(p_valuation(Rat(1), 5) == 0);
    CHECK(p_valuation(Rat(126), 5) == 0);
    CHECK(p_valuation(Rat(1, 19), 19) == -1);
    CHECK_THROWS(p_valuation(Rat(0), 5));
}

TEST_CASE("ring mismatch is rejected") {
    auto a = Poly::variable(free_p3(), "p1");
    auto b = Poly::variable(Ring::make({"q"}, {4}), "q");
    CHECK_THROWS_AS((void)(a * b), RingMismatch);
}

TEST_CASE("ring laws on random sparse polynomials") {
    std::mt19937_64 rng(20240811);
    auto r = free_p3();
    for (int it = 0; it < 40; ++it) {
        auto a = random_poly(r, rng, 4, 3);
        auto b = random_poly(r, rng, 4, 3);
        auto c = random_poly(r, rng, 4, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("reduction is idempotent and products stay reduced") {
    std::mt19937_64 rng(7);
    auto r = Ring::make({"p1", "p2", "p3"}, {4, 8, 12}, {{2, 0, 0}}, 4);
    for (int it = 0; it < 25; ++it) {
        auto a = random_poly(r, rng, 5, 2);
        auto b = random_poly(r, rng, 5, 2);
        auto ab = a * b;
        for (auto& [k, coef] : ab.terms()) {
            CHECK_FALSE(r->killed(k.second));
            CHECK(coef != 0);
        }
    }
}

TEST_CASE("multiplication is graded") {
    std::mt19937_64 rng(99);
    auto r = free_p3();
    for (int it = 0; it < 20; ++it) {
        auto a = random_poly(r, rng, 3, 3);
        auto b = random_poly(r, rng, 3, 3);
        for (int d = 0; d <= a.degree() + b.degree() && !a.is_zero() && !b.is_zero(); d += 4) {
            Poly part(r);
            for (int da = 0; da <= d; da += 4)
                part += a.homogeneous_part(da) * b.homogeneous_part(d - da);
            CHECK((a * b).homogeneous_part(d) == part);
        }
    }
}

TEST_CASE("mod_p commutes with arithmetic on p-local input") {
    std::mt19937_64 rng(31337);
    auto r = free_p3();
    for (int it = 0; it < 25; ++it) {
        auto a = random_poly(r, rng, 4, 2);
        auto b = random_poly(r, rng, 4, 2);
        long p = 7;  // denominators drawn from 1..9 may contain 7; skip those
        bool local = true;
        for (auto* q : {&a, &b})
            for (auto& [k, c] : q->terms())
                if (c != 0 && p_valuation(c, p) < 0) local = false;
        if (!local) continue;
        CHECK((a * b).mod_p(p) == (a.mod_p(p) * b.mod_p(p)));
        CHECK((a + b).mod_p(p) == (a.mod_p(p) + b.mod_p(p)));
    }
}

TEST_CASE("canonical rendering and parsing round-trip") {
    std::mt19937_64 rng(5);
    auto r = free_p3();
    for (int it = 0; it < 30; ++it) {
        auto a = random_poly(r, rng, 6, 3);
        CHECK(parse_poly(r, a.str()) == a);
    }
    CHECK(Poly(r).str() == "0");
    CHECK(parse_poly(r, "p2 - p1 + 2").str() == "p2 - p1 + 2");
}
