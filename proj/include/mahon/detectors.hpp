#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "mahon/qseries.hpp"
#include "mahon/rational.hpp"

namespace mahon {

// Parameters of a detector form: odd exponents ell > k, plus an optional
// arithmetic-progression twist (r mod t) with gcd(r, t) = 1.
struct DetectorParams {
    unsigned k = 1;
    unsigned ell = 3;
    std::optional<unsigned> residue;  // r
    std::optional<unsigned> modulus;  // t

    bool has_twist() const { return residue.has_value() || modulus.has_value(); }
    void validate() const;  // throws std::invalid_argument
};

// a(n, d) = (n^{3l}+n^{2l}+n^l+1) d^{3k} - (n^{3k}+n^{2k}+n^k+1) d^{3l},
// defined for d | n. Negative exactly when d = n.
Integer cube_coeff_term(unsigned k, unsigned ell, std::uint64_t n, std::uint64_t d);

// a(n) = sum_{d | n} a(n, d); the n-th coefficient of the cube detector.
// Vanishes for n >= 2 exactly at prime cubes.
Integer cube_coeff(unsigned k, unsigned ell, std::uint64_t n);

// Coefficient of the arithmetic-progression detector: for n = r (mod t)
// it is (n^l+1) sigma_k(n) - (n^k+1) sigma_l(n), otherwise (n^l+1) sigma_k(n).
// Non-negative, and zero on n >= 2 exactly at primes = r (mod t).
Integer ap_coeff(unsigned k, unsigned ell, unsigned r, unsigned t, std::uint64_t n);

// (D^{3l} + D^{2l} + D^l + 1) G_{3k+1} - (D^{3k} + D^{2k} + D^k + 1) G_{3l+1}
// as a truncated series. Coefficient n >= 1 equals cube_coeff(k, l, n);
// the two routes are kept separate deliberately so they can be checked
// against each other.
QSeries<Rational> build_g(const DetectorParams& p, std::size_t order);

// (D^l + 1) G_{k+1} - (D^k + 1) G^{r,t}_{l+1}; coefficient n >= 1 equals
// ap_coeff, the constant term is -B_{k+1}/(2(k+1)).
QSeries<Rational> build_f(const DetectorParams& p, std::size_t order);

// Residuals of the three classical derivative identities for G_2, G_4, G_6.
struct RamanujanReport {
    bool all_zero = false;
    // Highest index with a nonzero residual coefficient, per identity.
    std::array<std::optional<std::size_t>, 3> max_nonzero;
};
RamanujanReport ramanujan_check(std::size_t order);

}  // namespace mahon
