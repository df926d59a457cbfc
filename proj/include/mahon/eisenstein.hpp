#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mahon/qseries.hpp"
#include "mahon/rational.hpp"

namespace mahon {

// k-th Bernoulli number via the recurrence
// sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1.
Rational bernoulli(unsigned k);

// All divisors of n, ascending. Trial division; n stays desk-scale.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// sigma_k(n) = sum_{d | n} d^k.
Integer sigma_pow(unsigned k, std::uint64_t n);

// G_k = -B_k/(2k) + sum_{n>=1} sigma_{k-1}(n) q^n. Only even k >= 2 is a
// valid weight; anything else is a caller bug and is rejected.
QSeries<Rational> eisenstein(unsigned k, std::size_t order);

// The residue-class restriction of G_k: coefficient n is sigma_{k-1}(n)
// when n = r (mod t) and 0 otherwise; the constant term vanishes.
QSeries<Rational> eisenstein_twisted(unsigned k, unsigned r, unsigned t,
                                     std::size_t order);

// The same series assembled the slow way, as (1/t) sum_s zeta^{-rs} G_k(q zeta^s)
// with honest root-of-unity arithmetic. Exists purely as an independent
// cross-check of the closed form.
QSeries<Cyclo> eisenstein_twisted_by_filter(unsigned k, unsigned r, unsigned t,
                                            std::size_t order);

}  // namespace mahon
