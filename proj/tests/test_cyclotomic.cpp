#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sarkisov/cyclotomic.hpp"

#include <random>

using namespace sarkisov;

TEST_CASE("roots of unity have the right orders and relations") {
    CHECK(CycNum::root_of_unity(1) == CycNum::one());
    CHECK(CycNum::root_of_unity(2) == CycNum::from_rational(Rational(-1)));
    CHECK(CycNum::root_of_unity(4).pow(2) == CycNum::from_rational(Rational(-1)));

    for (long n : {3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L, 15L}) {
        CycNum z = CycNum::root_of_unity(n);
        CHECK(z.pow(n) == CycNum::one());
        auto ord = z.root_of_unity_order();
        REQUIRE(ord.has_value());
        CHECK(*ord == n);
    }
}

TEST_CASE("conductor is always the true conductor") {
    // zeta_4^2 = -1 lives in Q
    CHECK(CycNum::root_of_unity(4).pow(2).conductor() == 1);
    // zeta_6 = -zeta_3^2 lives in Q(zeta_3)
    CHECK(CycNum::root_of_unity(6).conductor() == 3);
    // zeta_12^4 = zeta_3
    CHECK(CycNum::root_of_unity(12).pow(4).conductor() == 3);
    // 1 + zeta_5 + ... + zeta_5^4 = 0
    CycNum s = CycNum::zero();
    for (long k = 0; k < 5; ++k) s = s + CycNum::root_of_unity(5, k);
    CHECK(s.is_zero());
    CHECK(s.conductor() == 1);
}

TEST_CASE("field axioms hold on randomized samples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> cond_pick(0, 3);
    long conds[4] = {3, 4, 5, 8};

    auto sample = [&]() {
        long n = conds[cond_pick(rng)];
        std::vector<Rational> c(static_cast<size_t>(euler_phi(n)));
        for (auto& x : c) x = Rational(coef(rng));
        return CycNum::from_coeffs(n, std::move(c));
    };

    for (int trial = 0; trial < 40; ++trial) {
        CycNum a = sample(), b = sample(), c = sample();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycNum::one());
        }
    }
}

TEST_CASE("conductor growth stays within the lcm of the inputs") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-2, 2);
    long conds[3] = {4, 5, 12};
    for (int trial = 0; trial < 30; ++trial) {
        long n1 = conds[static_cast<size_t>(trial) % 3], n2 = conds[(trial + 1) % 3];
        std::vector<Rational> c1(static_cast<size_t>(euler_phi(n1))), c2(static_cast<size_t>(euler_phi(n2)));
        for (auto& x : c1) x = Rational(coef(rng));
        for (auto& x : c2) x = Rational(coef(rng));
        CycNum a = CycNum::from_coeffs(n1, std::move(c1));
        CycNum b = CycNum::from_coeffs(n2, std::move(c2));
        long lcm = std::lcm(a.conductor(), b.conductor());
        CHECK((a * b).conductor() <= std::lcm(n1, n2));
        CHECK(std::lcm((a + b).conductor(), lcm) == lcm);
        CHECK(std::lcm((a * b).conductor(), lcm) == lcm);
    }
}

TEST_CASE("galois conjugation is a field automorphism") {
    CycNum z = CycNum::root_of_unity(5);
    CycNum a = z + z.pow(4);              // 2 cos(2 pi / 5), real
    CHECK(a.conj() == a);
    CycNum b = z - z.pow(4);
    CHECK(b.conj() == -b);
    CHECK(z.galois(2) == z.pow(2));
    // sqrt(5) = 1 + 2(z + z^4)
    CycNum sqrt5 = CycNum::one() + (a + a);
    CHECK(sqrt5 * sqrt5 == CycNum::from_rational(Rational(5)));
}

TEST_CASE("serialization string is canonical") {
    CycNum x = CycNum::root_of_unity(8) + CycNum::from_rational(Rational(1, 2));
    CycNum y = CycNum::from_rational(Rational(1, 2)) + CycNum::root_of_unity(8);
    CHECK(x.str() == y.str());
    CHECK(x == y);
}
