#include <doctest.h>

#include "mahon/macmahon.hpp"

using namespace mahon;

namespace {

Integer naive_sigma1(unsigned long long n) {
    Integer s = 0;
    for (unsigned long long d = 1; d <= n; ++d)
        if (n % d == 0) s += Integer(static_cast<unsigned long>(d));
    return s;
}

ExponentVector vec(std::initializer_list<unsigned> e) {
    return ExponentVector(std::vector<unsigned>(e));
}

}  // namespace

TEST_CASE("brute-force examples") {
    CHECK(macmahon_bruteforce(vec({1}), 4) == 7);    // 4*1, 2*2, 1*4
    CHECK(macmahon_bruteforce(vec({1, 1}), 5) == 9);
    CHECK(macmahon_bruteforce(vec({1, 1}), 2) == 0);  // two sizes need n >= 3
    CHECK(macmahon_bruteforce(vec({0}), 6) == 4);     // counts divisors
    CHECK_THROWS_AS(macmahon_bruteforce(vec({1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(macmahon_bruteforce(ExponentVector{}, 3), std::invalid_argument);
}

TEST_CASE("series equals sigma_1 for the single-entry vector") {
    const auto values = macmahon_values(vec({1}), 100);
    CHECK(sgn(values[0]) == 0);
    for (unsigned long long n = 1; n <= 100; ++n) CHECK(values[n] == naive_sigma1(n));
}

TEST_CASE("minimal support of length-a vectors") {
    // A vector of length a needs n >= 1 + 2 + ... + a.
    const auto values = macmahon_values(vec({2, 0, 1}), 12);
    for (std::size_t n = 1; n < 6; ++n) CHECK(sgn(values[n]) == 0);
    CHECK(sgn(values[6]) > 0);
}

TEST_CASE("order sensitivity") {
    // Equal entries are trivially order-invariant; unequal entries are not.
    CHECK(macmahon_bruteforce(vec({1, 1}), 9) == macmahon_bruteforce(vec({1, 1}), 9));
    CHECK(macmahon_bruteforce(vec({2, 2}), 9) == macmahon_bruteforce(vec({2, 2}), 9));
    CHECK(macmahon_bruteforce(vec({1, 3}), 4) == 3);
    CHECK(macmahon_bruteforce(vec({3, 1}), 4) == 9);
}

TEST_CASE("series route agrees with the brute-force oracle") {
    for (unsigned a1 = 0; a1 <= 2; ++a1) {
        for (unsigned a2 = 0; a2 <= 2; ++a2) {
            const auto values = macmahon_values(vec({a1, a2}), 20);
            for (unsigned long long n = 1; n <= 20; ++n)
                CHECK(values[n] == macmahon_bruteforce(vec({a1, a2}), n));
        }
    }
}

TEST_CASE("twisted series") {
    SUBCASE("twist 0 embeds the plain series") {
        const auto plain = macmahon_values(vec({1}), 12);
        const auto twisted = twisted_macmahon(vec({1}), 3, 0, 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(twisted[n].is_rational());
            CHECK(twisted[n].rational_part() == Rational(plain[n]));
        }
    }
    SUBCASE("twist multiplies coefficient n by zeta^n") {
        const auto s = twisted_macmahon(vec({1}), 3, 1, 6);
        // n = 2: M(2) = 3 times zeta^2 = 3(-1 - zeta)
        CHECK(s[2].coeffs()[0] == Rational(-3));
        CHECK(s[2].coeffs()[1] == Rational(-3));
        // n = 3: zeta^3 = 1, M(3) = 4
        CHECK(s[3] == Cyclo::from_rational(3, Rational(4)));
    }
    CHECK_THROWS_AS(twisted_macmahon(vec({1}), 3, 3, 6), std::invalid_argument);
}
