#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "samelson/symfunc.hpp"

using namespace samelson;

TEST_CASE("power sums in the elementary basis") {
    auto r = pontryagin_ring(5);
    CHECK(power_sum_e(5, 1) == parse_poly(r, "p1"));
    CHECK(power_sum_e(5, 2) == parse_poly(r, "p1^2 - 2p2"));
    CHECK(power_sum_e(5, 3) == parse_poly(r, "p1^3 - 3p1*p2 + 3p3"));
    CHECK(power_sum_e(5, 4) == parse_poly(r, "p1^4 - 4p1^2*p2 + 2p2^2 + 4p1*p3 - 4p4"));
    // expanding back into u recovers the genuine power sum
    for (int m : {1, 2, 3, 5, 8}) {
        std::vector<Poly> eexp;
        for (int i = 1; i <= 5; ++i) eexp.push_back(elementary_in_u(5, i));
        Poly back = power_sum_e(5, m).map_through(u_ring(5), eexp);
        Poly direct(u_ring(5));
        for (int i = 0; i < 5; ++i) {
            Expo e(5, 0);
            e[i] = m;
            direct.add_term(e, 1);
        }
        CHECK(back == direct);
    }
}

TEST_CASE("series log") {
    // log(1/(1-q)) = q + q^2/2 + q^3/3 + ...
    std::vector<Rat> f(8, Rat(1));
    auto g = series_log(f, 8);
    for (int n = 1; n < 8; ++n) CHECK(g[n] == Rat(1, n));
}

TEST_CASE("graded exp against direct series") {
    auto r = pontryagin_ring(5);
    Poly a = Rat(1, 3) * parse_poly(r, "p1") + Rat(2) * parse_poly(r, "p2 - p1^2");
    Poly direct(r, 1);
    Poly pw(r, 1);
    Rat fact = 1;
    for (int k = 1; k <= 8; ++k) {
        pw = (pw * a).truncate_degree(32);
        fact /= k;
        direct += fact * pw;
    }
    CHECK(graded_exp(a, 8) == direct.truncate_degree(32));
}

TEST_CASE("symmetric_to_e expresses symmetric polynomials") {
    auto u = u_ring(5);
    Poly s(u);
    for (int i = 0; i < 5; ++i) {
        Expo e(5, 0);
        e[i] = 2;
        s.add_term(e, 1);
    }
    CHECK(symmetric_to_e(s) == power_sum_e(5, 2));
    Poly bad = Poly::variable(u, "u1");
    CHECK_THROWS_AS((void)symmetric_to_e(bad), NotInSpan);
}

TEST_CASE("girard formula small cases") {
    auto r = Ring::make({"c1", "c2", "c3"}, {2, 4, 6});
    std::vector<Poly> c{Poly::variable(r, "c1"), Poly::variable(r, "c2"), Poly::variable(r, "c3")};
    CHECK(girard_ch(c, 1) == parse_poly(r, "c1"));
    CHECK(girard_ch(c, 2) == parse_poly(r, "c1^2 - 2c2"));
    CHECK(girard_ch(c, 3) == parse_poly(r, "c1^3 - 3c1*c2 + 3c3"));
}

TEST_CASE("newton inversion round-trips girard") {
    std::mt19937_64 rng(424242);
    auto r = Ring::make({"a", "b"}, {2, 4});
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), ex(0, 2);
    for (int it = 0; it < 10; ++it) {
        std::vector<Poly> c;
        for (int k = 1; k <= 6; ++k) {
            Poly p(r);
            for (int t = 0; t < 2; ++t) {
                Expo e(2);
                e[0] = ex(rng);
                e[1] = ex(rng);
                Rat q(num(rng), den(rng));
                q.canonicalize();
                p.add_term(e, q);
            }
            c.push_back(p);
        }
        std::vector<Poly> s;
        for (int n = 1; n <= 6; ++n) s.push_back(girard_ch(c, n));
        auto back = newton_invert(s, 6, r);
        for (int k = 0; k < 6; ++k) CHECK(back[k] == c[k]);
    }
}

TEST_CASE("newton inversion of zero is zero") {
    auto r = Ring::make({"a"}, {2});
    std::vector<Poly> s(5, Poly(r));
    for (auto& e : newton_invert(s, 5, r)) CHECK(e.is_zero());
}
