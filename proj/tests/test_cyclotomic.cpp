#include <doctest.h>

#include <random>

#include "qd/cyclotomic.hpp"

using namespace qd;

TEST_CASE("cyclotomic polynomial table") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    for (long long e : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 30})
        CHECK(static_cast<long long>(cyclotomic_polynomial(e).size()) == euler_phi(e) + 1);
}

TEST_CASE("ring axioms and reduction") {
    auto z = Cyclotomic::zeta_power(3, 1);
    // 1 + z + z^2 = 0 in Q(zeta_3)
    auto sum = Cyclotomic::integer(3, 1) + z + z * z;
    CHECK(sum.is_zero());

    // zeta_e^e = 1
    for (long long e : {2, 3, 4, 5, 6, 12}) {
        auto x = Cyclotomic::zeta_power(e, 1);
        auto acc = Cyclotomic::integer(e, 1);
        for (long long i = 0; i < e; ++i)
            acc *= x;
        CHECK(acc == Cyclotomic::integer(e, 1));
        CHECK(Cyclotomic::zeta_power(e, e) == Cyclotomic::integer(e, 1));
    }

    // conj of a real value is itself; conj(zeta) * zeta = 1
    auto z12 = Cyclotomic::zeta_power(12, 1);
    CHECK(z12.conj() * z12 == Cyclotomic::integer(12, 1));
    CHECK(Cyclotomic::integer(12, -7).conj() == Cyclotomic::integer(12, -7));
}

TEST_CASE("rational integer detection") {
    CHECK(Cyclotomic::integer(12, 5).is_rational_integer());
    CHECK(Cyclotomic::integer(12, 5).rational_value() == 5);
    CHECK_FALSE(Cyclotomic::zeta_power(12, 1).is_rational_integer());
    // zeta_2 = -1 is rational
    CHECK(Cyclotomic::zeta_power(2, 1).is_rational_integer());
    CHECK(Cyclotomic::zeta_power(2, 1).rational_value() == -1);
    // zeta_6 + zeta_6^5 = 1
    auto v = Cyclotomic::zeta_power(6, 1) + Cyclotomic::zeta_power(6, 5);
    CHECK(v.is_rational_integer());
    CHECK(v.rational_value() == 1);
}

TEST_CASE("galois twists are ring automorphisms") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long long> cv(-5, 5);
    for (long long e : {3, 4, 6, 8, 12}) {
        for (long long s = 1; s < e; ++s) {
            if (std::gcd(s, e) != 1)
                continue;
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<long long> av(static_cast<std::size_t>(e)), bv(av.size());
                for (auto& x : av)
                    x = cv(rng);
                for (auto& x : bv)
                    x = cv(rng);
                auto a = Cyclotomic::from_powers(e, av);
                auto b = Cyclotomic::from_powers(e, bv);
                CHECK((a + b).galois(s) == a.galois(s) + b.galois(s));
                CHECK((a * b).galois(s) == a.galois(s) * b.galois(s));
            }
        }
        // identity twist
        auto x = Cyclotomic::zeta_power(e, 1) + Cyclotomic::integer(e, 2);
        CHECK(x.galois(1) == x);
    }
}

TEST_CASE("promotion is a ring embedding") {
    auto z3 = Cyclotomic::zeta_power(3, 1);
    CHECK(z3.promote(12) == Cyclotomic::zeta_power(12, 4));
    auto a = z3 + Cyclotomic::integer(3, 2);
    auto b = z3 * z3 - Cyclotomic::integer(3, 1);
    CHECK((a * b).promote(12) == a.promote(12) * b.promote(12));
    CHECK((a + b).promote(12) == a.promote(12) + b.promote(12));
    // promoted rational integers stay rational
    CHECK(Cyclotomic::integer(3, 9).promote(12) == Cyclotomic::integer(12, 9));
}

TEST_CASE("exact scaling and division") {
    auto v = Cyclotomic::zeta_power(8, 3).scaled(6) + Cyclotomic::integer(8, 12);
    CHECK(v.divided_exact(3).scaled(3) == v);
    CHECK_THROWS_AS(v.divided_exact(5), VerificationError);
}
