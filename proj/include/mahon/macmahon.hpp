#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mahon/qseries.hpp"
#include "mahon/rational.hpp"

namespace mahon {

// The exponent vector (v_1, ..., v_a) indexing a multiplicity-weighted
// partition count: part sizes are taken in increasing order and the
// multiplicity of the i-th smallest size is weighted m_i^{v_i}. Entries
// may be zero (the part must still be present, with weight m^0 = 1).
struct ExponentVector {
    std::vector<unsigned> entries;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<unsigned> e);

    std::size_t length() const { return entries.size(); }
    unsigned degree() const;

    std::string str() const;  // "(1,1,3)"

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    bool operator<(const ExponentVector& o) const { return entries < o.entries; }
};

// M_vec(n) by direct enumeration of all partitions of n with exactly
// length(vec) distinct part sizes. Exponential; the independent oracle
// for the series route, intended for n up to a few dozen.
Integer macmahon_bruteforce(const ExponentVector& vec, unsigned long long n);

// M_vec(n) for 0 <= n <= order via the ascending-size DP: part sizes s
// are introduced in increasing order and the partial product series
// P_j picks up P_{j-1} * Lambda_{v_j}(q^s) with j descending, which
// enforces strictly increasing sizes.
std::vector<Integer> macmahon_values(const ExponentVector& vec, std::size_t order);

QSeries<Rational> macmahon_series(const ExponentVector& vec, std::size_t order);

// Coefficient n is M_vec(n) * zeta_t^{twist * n}.
QSeries<Cyclo> twisted_macmahon(const ExponentVector& vec, unsigned t, unsigned twist,
                                std::size_t order);

}  // namespace mahon
