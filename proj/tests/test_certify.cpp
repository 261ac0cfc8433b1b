#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cq/certify.hpp"
#include "cq/factor.hpp"

using namespace cq;

TEST_CASE("squarefree_conditions") {
    CHECK(squarefree_conditions(4) == std::make_pair(true, false));
    CHECK(squarefree_conditions(88) == std::make_pair(false, true));
    CHECK(squarefree_conditions(284) == std::make_pair(false, false));
    CHECK(squarefree_conditions(5) == std::make_pair(true, true));
    CHECK_THROWS_AS(squarefree_conditions(1), std::invalid_argument);
}

TEST_CASE("certify_z on the known monogenic members") {
    Certificate c5 = certify_z(5);
    CHECK(c5.irreducible);
    CHECK(c5.is_c4);
    CHECK(c5.monogenic == true);
    CHECK(c5.conductor == Int(12259));
    CHECK(c5.disc_field == Int("80100882173"));
    CHECK(c5.disc_poly == Int("80100882173"));
    CHECK(c5.index_square == Int(1));

    Certificate c6 = certify_z(6);
    CHECK(c6.monogenic == true);
    CHECK(c6.conductor == Int(39440));
    CHECK(c6.disc_field == Int("1804395776000"));

    Certificate c2 = certify_z(2);
    CHECK(c2.monogenic == true);
    CHECK(c2.conductor == Int(16));
    CHECK(c2.disc_field == Int(2048));

    Certificate c3 = certify_z(3);
    CHECK(c3.monogenic == true);
    CHECK(c3.conductor == Int(371));
    CHECK(c3.disc_field == Int(7294973));
}

TEST_CASE("certify_z on the known non-real fields") {
    Certificate c1 = certify_z(1);
    CHECK(c1.monogenic == true);
    CHECK(c1.conductor == Int(5));
    CHECK(c1.disc_poly == Int(125));
    CHECK(c1.irreducible);
    CHECK(c1.is_c4);

    Certificate c0 = certify_z(0);
    CHECK(c0.monogenic == true);
    CHECK(c0.conductor == Int(16));
    CHECK(c0.disc_poly == Int(2048));
}

TEST_CASE("certify_z where square factors break monogenicity") {
    Certificate c4 = certify_z(4);
    CHECK(c4.irreducible);
    CHECK(c4.is_c4);
    CHECK(c4.squarefree_a);
    CHECK_FALSE(c4.squarefree_m_part);
    CHECK(c4.monogenic == false);
    CHECK(c4.conductor == Int(560));
    CHECK(c4.disc_field == Int("2508800"));
    CHECK(c4.index_square == Int(625));

    Certificate c88 = certify_z(88);
    CHECK_FALSE(c88.squarefree_a);
    CHECK(c88.squarefree_m_part);
    CHECK(c88.monogenic == false);
    CHECK(c88.conductor == Int("9470293744"));
    CHECK(c88.index_square == Int(2401));

    Certificate c284 = certify_z(284);
    CHECK_FALSE(c284.squarefree_a);
    CHECK_FALSE(c284.squarefree_m_part);
    CHECK(c284.monogenic == false);
    CHECK(c284.conductor == Int("369218671280"));
    CHECK(c284.index_square == Int("1698181681"));

    Certificate c10 = certify_z(10);
    CHECK(c10.monogenic == false);
    CHECK(c10.index_square == Int(2401));
}

TEST_CASE("squarefree conditions imply a monogenic verdict") {
    for (int z = 2; z <= 60; ++z) {
        auto [sf_a, sf_m] = squarefree_conditions(z);
        Certificate c = certify_z(z);
        CHECK(c.irreducible);
        CHECK(c.is_c4);
        REQUIRE(c.monogenic.has_value());
        if (sf_a && sf_m) CHECK(*c.monogenic);
        REQUIRE(c.index_square.has_value());
        CHECK(is_perfect_square(*c.index_square));
        CHECK((*c.monogenic) == (*c.index_square == 1));
    }
}

TEST_CASE("certify_z is symmetric in z") {
    for (int z : {2, 3, 4, 5, 6, 10, 17}) {
        Certificate cp = certify_z(z);
        Certificate cm = certify_z(-z);
        CHECK(cp.conductor == cm.conductor);
        CHECK(cp.disc_field == cm.disc_field);
        CHECK(cp.disc_poly == cm.disc_poly);
        CHECK(cp.monogenic == cm.monogenic);
        CHECK(cp.is_c4 == cm.is_c4);
    }
}

TEST_CASE("certify_params on the a=1, x=y=1 family") {
    Certificate v0 = certify_params(further_family_b(0));
    CHECK(v0.monogenic == true);
    CHECK(v0.conductor == Int(20));
    CHECK(v0.disc_field == Int(2000));
    CHECK(v0.disc_poly == Int(2000));

    Certificate v2 = certify_params(further_family_b(2));
    CHECK(v2.monogenic == true);
    CHECK(v2.conductor == Int(35204));
    CHECK(v2.disc_field == Int("839020734032"));

    // v = 3 fails the squarefree conditions: g/4 = 25
    Certificate v3 = certify_params(further_family_b(3));
    CHECK(v3.monogenic == false);
    CHECK(v3.conductor == Int(10004));
    CHECK(v3.disc_field == Int("250300120016"));
    CHECK(v3.index_square == Int(625));
    CHECK_FALSE(v3.squarefree_a);
}

TEST_CASE("certify_params on the base family and further family (1)") {
    GrasParams p284 = family_params(284);
    p284.t = 284;
    Certificate c = certify_params(p284);
    CHECK(c.monogenic == false);

    Certificate fa3 = certify_params(further_family_a(3));
    CHECK_FALSE(fa3.squarefree_m_part);  // m = 125 = 5^3
    CHECK(fa3.monogenic == false);
    CHECK(fa3.conductor == Int(55));
    CHECK(fa3.disc_field == Int(15125));
    CHECK(fa3.index_square == Int(15625));

    Certificate fa1 = certify_params(further_family_a(1));
    CHECK(fa1.monogenic == true);
    CHECK(fa1.conductor == Int(39));
}

TEST_CASE("certify_params on the x3y4 families") {
    Certificate w1 = certify_params(x3y4_family(1, 0));
    CHECK(w1.monogenic == true);
    CHECK(w1.conductor == Int("115302406640"));
    CHECK(w1.disc_field == Int("36836270516405789264420096000"));

    Certificate w3 = certify_params(x3y4_family(3, 0));
    CHECK(w3.monogenic == true);
    CHECK(w3.conductor == Int("419646706383"));
    bool has_hasse_note = false;
    for (const auto& r : w3.reasons)
        if (r.find("Hasse") != std::string::npos) has_hasse_note = true;
    CHECK(has_hasse_note);  // odd m, g sign caveat is recorded, not fatal
}

TEST_CASE("certify_params precondition errors are distinct") {
    GrasParams bad(7, 2, 7, 53, 2, 0, 3, 1, Int(3));  // system fails
    CHECK_THROWS_AS(certify_params(bad), std::invalid_argument);

    GrasParams p6 = family_params(6);
    p6.t = 6;  // non-integral polynomial
    CHECK_THROWS_AS(certify_params(p6), std::invalid_argument);

    GrasParams p3 = family_params(3);
    CHECK_THROWS_AS(certify_params(p3), std::logic_error);  // t unset
}

TEST_CASE("index-square law on random z") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> zd(2, 200);
    for (int i = 0; i < 25; ++i) {
        Certificate c = certify_z(zd(rng));
        REQUIRE(c.disc_field.has_value());
        REQUIRE(c.index_square.has_value());
        CHECK(is_perfect_square(*c.index_square));
        CHECK(*c.disc_field * *c.index_square == c.disc_poly);
        CHECK((*c.index_square == 1) == (c.disc_poly == *c.disc_field));
    }
}
