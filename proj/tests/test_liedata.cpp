#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samelson/liedata.hpp"
#include "samelson/symfunc.hpp"
#include "samelson/weights.hpp"

using namespace samelson;

TEST_CASE("group contexts from the decomposition table") {
    auto e8 = group_ctx(GroupId::E8, 19);
    CHECK(e8.tp == std::vector<int>{2, 8, 12, 14, 18, 24});
    CHECK(e8.r(2) == 2);
    CHECK(e8.r(12) == 2);
    for (int i : {8, 14, 18, 24}) CHECK(e8.r(i) == 1);

    auto f4 = group_ctx(GroupId::F4, 7);
    CHECK(f4.tp == std::vector<int>{2, 6});
    CHECK(f4.r(2) == 2);
    CHECK(f4.r(6) == 2);
    CHECK(f4.factor(2).top == 15);
    CHECK(f4.factor(6).top == 23);

    CHECK_THROWS_AS(group_ctx(GroupId::E7, 7), NotQuasiPRegular);
    CHECK_THROWS_AS(group_ctx(GroupId::G2, 7), OutOfValidRange);  // p-regular
    CHECK(all_cases().size() == 16);
}

TEST_CASE("classical admissibility bounds") {
    CHECK(classical_admissible("SU", 13, 5));
    CHECK_FALSE(classical_admissible("SU", 14, 5));
    CHECK(classical_admissible("Sp", 6, 5));
    CHECK_FALSE(classical_admissible("SpinOdd", 7, 5));
    CHECK(classical_admissible("SpinEven", 7, 5));
}

TEST_CASE("generator images: exact entries") {
    const auto& e6 = generator_images(GroupId::E6);
    CHECK(e6.image.at(12).exact());
    CHECK(e6.image.at(12).known == parse_poly(e6.spin, "-6p3 + p2*p1"));
    CHECK(e6.image.at(10).known == parse_poly(e6.spin, "c5"));
    for (auto& [d, mp] : e6.image) {
        CHECK(mp.exact());
        CHECK(mp.known.homogeneous(d));
    }
}

TEST_CASE("generator images: qualifiers and masks") {
    const auto& e8 = e8_images_spin15();
    CHECK(e8.image.at(4).exact());
    CHECK(e8.image.at(16).exact());
    CHECK_FALSE(e8.image.at(28).exact());
    // every unknown slot of x28 is a multiple of p1^2
    Expo p1sq(7, 0);
    p1sq[0] = 2;
    for (auto& e : e8.image.at(28).unknown) CHECK(expo_divides(p1sq, e));
    // x40: p1-multiples unknown except the excluded p5 p4 p1
    Expo p5p4p1(7, 0);
    p5p4p1[0] = 1;
    p5p4p1[3] = 1;
    p5p4p1[4] = 1;
    CHECK_FALSE(e8.image.at(40).unknown.count(p5p4p1));
    Expo p1p3cube(7, 0);  // p1 p3^3 has degree 40
    p1p3cube[0] = 1;
    p1p3cube[2] = 3;
    CHECK(e8.image.at(40).unknown.count(p1p3cube));
    // x60 is partial: 14 known terms over Spin(15)
    CHECK(e8.image.at(60).known.size() == 14);
    CHECK_FALSE(e8.image.at(60).unknown.empty());
}

TEST_CASE("restriction to Spin(11) kills p6, p7 and keeps masks consistent") {
    const auto& e8 = generator_images(GroupId::E8);
    CHECK(generator_images(GroupId::E8).image.at(24).known ==
          parse_poly(e8.spin, "-5p5*p1 - 5p4*p2 + 3p3^2 - p3*p2*p1 + 5/36p2^3"));
    // restricted x60: 13 known terms, and p3 p2^6 is among the unknown slots
    CHECK(e8.image.at(60).known.size() == 13);
    Expo p3p2_6(5, 0);
    p3p2_6[1] = 6;
    p3p2_6[2] = 1;
    CHECK(e8.image.at(60).unknown.count(p3p2_6));
}

TEST_CASE("E7 shares the E8 images and carries its own x12, x20") {
    const auto& e7 = generator_images(GroupId::E7);
    CHECK(e7.image.at(20).known == parse_poly(e7.spin, "p5"));
    CHECK(e7.image.at(12).known == parse_poly(e7.spin, "-6p3 + p2*p1"));
    const auto& e8 = generator_images(GroupId::E8);
    CHECK(e7.image.at(16).known == e8.image.at(16).known);
    CHECK(e7.image.at(36).unknown == e8.image.at(36).unknown);
    const auto& pulls = e7_quadratic_pullbacks();
    CHECK(pulls.size() == 3);
    CHECK(pulls.at(60).size() == 1);
}

TEST_CASE("F4 images drop the Euler class") {
    const auto& f4 = generator_images(GroupId::F4);
    CHECK(f4.degrees == std::vector<int>{4, 12, 16, 24});
    CHECK(f4.image.at(16).known == parse_poly(f4.spin, "12p4 - 3p3*p1 + p2^2"));
    for (auto& [d, mp] : f4.image) CHECK(mp.exact());
}

TEST_CASE("rep index per group") {
    CHECK(rep_index(GroupId::E6) == 6);
    CHECK(rep_index(GroupId::E8) == 8);
    CHECK_THROWS(rep_index(GroupId::G2));
}
