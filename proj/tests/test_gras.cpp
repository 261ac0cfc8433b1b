#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cq/gras.hpp"

using namespace cq;

TEST_CASE("family_params") {
    GrasParams p3 = family_params(3);
    CHECK(p3.a == 7);
    CHECK(p3.b == 2);
    CHECK(p3.g == 7);
    CHECK(p3.m == 53);
    CHECK(p3.x == 1);
    CHECK(p3.y == 0);
    CHECK_FALSE(p3.t.has_value());
    CHECK(p3.chi == 1);

    GrasParams p5 = family_params(5);
    CHECK(p5.a == 23);
    CHECK(p5.m == 533);
    CHECK(p5.conductor() == 12259);

    GrasParams p6 = family_params(6);
    CHECK(p6.a == 34);
    CHECK(p6.m == 1160);
    CHECK(p6.conductor() == 39440);

    CHECK_THROWS_AS(family_params(1), std::invalid_argument);
    CHECK_THROWS_AS(family_params(-1), std::invalid_argument);
    CHECK_THROWS_AS(family_params(0), std::invalid_argument);
}

TEST_CASE("GrasParams validation") {
    CHECK_THROWS_AS(GrasParams(1, 2, 1, 6, 1, 0, 1), std::invalid_argument);  // m != a^2+b^2
    CHECK_THROWS_AS(GrasParams(2, 1, 1, 5, 1, 0, 1), std::invalid_argument);  // b odd
    CHECK_THROWS_AS(GrasParams(1, 2, 1, 5, 1, 0, 1, 2), std::invalid_argument);  // bad chi
}

TEST_CASE("choose_t") {
    CHECK(choose_t(2) == 4);
    CHECK(choose_t(3) == 3);
    CHECK(choose_t(6) == 8);
    CHECK(choose_t(-2) == 0);
    CHECK(choose_t(-6) == -4);
    CHECK(choose_t(4) == 4);
    CHECK(choose_t(-3) == -3);
}

TEST_CASE("gras_polynomial reproduces f_z and the a=1, x=y=1 family polynomial") {
    GrasParams p3 = family_params(3);
    p3.t = 3;
    CHECK(gras_polynomial(p3) == ExactPoly::from_string("-1069,-747,-149,-3,1"));

    GrasParams axy(1, 2, 4, 5, 1, 1, 2, 1, Int(2));
    CHECK(gras_polynomial(axy) == ExactPoly::from_string("-19,32,-11,-2,1"));

    GrasParams p2 = family_params(2);
    p2.t = 4;
    ExactPoly shifted = shift(fz_polynomial(2), Rat(-1, 2));
    CHECK(gras_polynomial(p2) == shifted);
    CHECK(is_integral(gras_polynomial(p2)));
}

TEST_CASE("fz_polynomial small z") {
    CHECK(fz_polynomial(0) == ExactPoly::from_string("2,0,4,0,1"));
    // f_{+-1} are the +-X substitutions of X^4+X^3+X^2+X+1
    CHECK(fz_polynomial(-1) == ExactPoly::from_string("1,1,1,1,1"));
    CHECK(fz_polynomial(1) == ExactPoly::from_string("1,-1,1,-1,1"));
    CHECK(fz_polynomial(3) == ExactPoly::from_string("-1069,-747,-149,-3,1"));
}

TEST_CASE("fz_presented integrality") {
    CHECK(fz_presented(3) == fz_polynomial(3));
    CHECK(is_integral(fz_presented(2)));
    CHECK(is_integral(fz_presented(6)));
    CHECK(is_integral(fz_presented(-2)));
    for (int z = -100; z <= 100; ++z) {
        CHECK(is_integral(fz_presented(z)));
        bool plain_integral = is_integral(fz_polynomial(z));
        CHECK(plain_integral == (mod_floor(z, 4) != 2));
        CHECK(is_integral(shift(fz_polynomial(z), Rat(-1, 2))) == (mod_floor(z, 4) == 2));
    }
}

TEST_CASE("gras_polynomial equals fz_polynomial with t = z across the family") {
    for (int z = -100; z <= 100; ++z) {
        if (std::abs(z) < 2) continue;
        GrasParams p = family_params(z);
        p.t = z;
        CHECK(gras_polynomial(p) == fz_polynomial(z));
        if (mod_floor(z, 4) == 2) {
            p.t = z + 2;
            CHECK(gras_polynomial(p) == shift(fz_polynomial(z), Rat(-1, 2)));
        }
    }
}

TEST_CASE("coefficient numerator residues for even z") {
    for (Int z1 = -50; z1 <= 50; ++z1) {
        Int z = 2 * z1;
        Int z2 = z * z, z4 = z2 * z2;
        Int n2 = -(3 * z2 * z2 * z2 - 16 * z4 + 37 * z2 - 32);
        Int n1 = -(2 * pow_int(z, 9) - 19 * pow_int(z, 7) + 72 * pow_int(z, 5) -
                   135 * z2 * z + 96 * z);
        Int n0 = -(3 * z4 * z4 * z4 - 40 * z4 * z4 * z2 + 214 * z4 * z4 - 576 * z4 * z2 +
                   719 * z4 - 64 * z2 - 512);
        CHECK(mod_floor(n2, 8) == mod_floor(4 * z1 * z1, 8));
        CHECK(mod_floor(n1, 16) == mod_floor(8 * z1 * z1 * z1, 16));
        CHECK(mod_floor(n0, 256) == mod_floor(16 * z1 * z1 * z1 * z1, 256));
    }
}

TEST_CASE("psi_polynomial") {
    CHECK(psi_polynomial(3) == IntQuartic{0, -371, 0, 2597});
    CHECK(psi_polynomial(2) == IntQuartic{0, -16, 0, 32});
    CHECK(psi_polynomial(-3) == psi_polynomial(3));
    CHECK_THROWS_AS(psi_polynomial(1), std::invalid_argument);
}

TEST_CASE("hasse_integral") {
    GrasParams p3 = family_params(3);
    p3.t = 3;
    CHECK(hasse_integral(p3));
    GrasParams p6 = family_params(6);
    p6.t = 8;
    CHECK(hasse_integral(p6));
    p6.t = 6;
    CHECK_FALSE(hasse_integral(p6));
    for (int z = -100; z <= 100; ++z) {
        if (std::abs(z) < 2) continue;
        GrasParams p = family_params(z);
        p.t = choose_t(z);
        CHECK(hasse_integral(p));
    }
}

TEST_CASE("verify_system") {
    for (int z = 2; z <= 20; ++z) {
        CHECK(verify_system(family_params(z)));
    }
    GrasParams axy(1, 2, 4, 5, 1, 1, 2, 1);
    CHECK(verify_system(axy));
    GrasParams bad(7, 2, 7, 53, 2, 0, 3, 1);  // x replaced by 2
    CHECK_FALSE(verify_system(bad));
}

TEST_CASE("parity claims for the family") {
    for (int z = -100; z <= 100; ++z) {
        if (std::abs(z) < 2) continue;
        GrasParams p = family_params(z);
        if (is_odd(p.m)) {
            CHECK(mod_floor(p.g, 4) == 3);
            CHECK(mod_floor(p.m, 4) == 1);
        } else {
            CHECK(mod_floor(p.g, 4) == 2);
            CHECK(mod_floor(p.m, 16) == 8);
        }
    }
}

TEST_CASE("theta_numeric") {
    GrasParams p3 = family_params(3);
    p3.t = 3;
    auto r3 = theta_numeric(p3, 30);
    CHECK(r3.residual < mpf_class("1e-20"));

    GrasParams p5 = family_params(5);
    p5.t = 5;
    CHECK(theta_numeric(p5, 30).residual < mpf_class("1e-20"));

    // y != 0 contribution through the conjugate branch
    GrasParams axy1(1, 10, 20, 101, 1, 1, 6, 1, Int(6));
    CHECK(theta_numeric(axy1, 40).residual < mpf_class("1e-28"));

    GrasParams nonreal(1, 2, 1, 5, 1, 0, 1, -1, Int(1));
    CHECK_THROWS_AS(theta_numeric(nonreal, 20), std::domain_error);

    // the residual bound |P(theta)| < 10^(6 - digits) holds at any size
    for (int z : {50, -98}) {
        GrasParams big = family_params(z);
        big.t = choose_t(z);
        for (unsigned digits : {20u, 40u, 60u}) {
            mpf_class bound(10.0);
            mpf_pow_ui(bound.get_mpf_t(), bound.get_mpf_t(), digits - 6);
            CHECK(theta_numeric(big, digits).residual * bound < 1);
        }
    }
}

TEST_CASE("further_family_a") {
    GrasParams f3 = further_family_a(3);
    CHECK(f3.a == 11);
    CHECK(f3.b == 2);
    CHECK(f3.g == 11);
    CHECK(f3.m == 125);
    CHECK(f3.x == 1);
    CHECK(f3.y == 0);
    CHECK(f3.t == Int(3));
    GrasParams f1 = further_family_a(1);
    CHECK(f1.a == 3);
    CHECK(f1.m == 13);
    for (int z = -20; z <= 20; ++z) CHECK(verify_system(further_family_a(z)));
}

TEST_CASE("further_family_b") {
    GrasParams v0 = further_family_b(0);
    CHECK(v0.a == 1);
    CHECK(v0.b == 2);
    CHECK(v0.g == 4);
    CHECK(v0.m == 5);
    CHECK(v0.z == 2);
    CHECK(v0.t == Int(2));
    CHECK(gras_polynomial(v0) == ExactPoly::from_string("-19,32,-11,-2,1"));

    GrasParams v1 = further_family_b(1);
    CHECK(v1.g == 20);
    CHECK(v1.b == 10);
    CHECK(v1.m == 101);
    CHECK(v1.z == 6);
    for (int v = -10; v <= 10; ++v) CHECK(verify_system(further_family_b(v)));
}

TEST_CASE("x3y4_family") {
    GrasParams w1 = x3y4_family(1, 0);
    CHECK(w1.z == 1020);
    CHECK(w1.a == 466);
    CHECK(w1.b == 1598);
    CHECK(w1.g == 41614);
    CHECK(w1.m == 2770760);
    CHECK(w1.x == 3);
    CHECK(w1.y == 4);
    // Gras necessary condition g^2 + 4 = m c^2 with c = 25
    CHECK(w1.g * w1.g + 4 == w1.m * 625);

    GrasParams w3 = x3y4_family(3, 0);
    CHECK(w3.z == 1265);
    CHECK(w3.g == 64011);
    CHECK(w3.g * w3.g + 4 == w3.m * 625);

    for (int which = 1; which <= 4; ++which) {
        for (int v = 0; v <= 2; ++v) {
            GrasParams p = x3y4_family(which, v);
            CHECK(verify_system(p));
            CHECK(is_integral(gras_polynomial(p)));
        }
    }
    CHECK_THROWS_AS(x3y4_family(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(x3y4_family(5, 0), std::invalid_argument);
}

TEST_CASE("scan_t prefers small positive t and respects Hasse when possible") {
    GrasParams p3 = family_params(3);
    auto t = scan_t(p3, true);
    REQUIRE(t.has_value());
    CHECK(*t == -1);  // t = -1 passes Hasse and gives the integral shift of f_3
    GrasParams q = p3;
    q.t = *t;
    CHECK(hasse_integral(q));
    CHECK(is_integral(gras_polynomial(q)));
}
