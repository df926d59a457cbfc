#include "mahon/macmahon.hpp"

#include <stdexcept>

namespace mahon {

ExponentVector::ExponentVector(std::vector<unsigned> e) : entries(std::move(e)) {
    if (entries.empty())
        throw std::invalid_argument("exponent vector must have length >= 1");
}

unsigned ExponentVector::degree() const {
    unsigned d = 0;
    for (unsigned v : entries) d += v;
    return d;
}

std::string ExponentVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

namespace {

// Smallest total of `count` distinct part sizes starting at `smin`,
// each with multiplicity >= 1.
unsigned long long minimal_budget(unsigned long long smin, unsigned long long count) {
    return count * smin + count * (count - 1) / 2;
}

void brute_rec(const std::vector<unsigned>& vec, std::size_t i,
               unsigned long long smin, unsigned long long rem,
               const Integer& prod, Integer& total) {
    const std::size_t a = vec.size();
    if (i == a) {
        if (rem == 0) total += prod;
        return;
    }
    const unsigned long long left = a - i;
    for (unsigned long long s = smin; minimal_budget(s, left) <= rem; ++s) {
        for (unsigned long long m = 1;
             m * s + minimal_budget(s + 1, left - 1) <= rem; ++m) {
            brute_rec(vec, i + 1, s + 1, rem - m * s, prod * ipow(m, vec[i]), total);
        }
    }
}

}  // namespace

Integer macmahon_bruteforce(const ExponentVector& vec, unsigned long long n) {
    if (vec.entries.empty()) throw std::invalid_argument("empty exponent vector");
    if (n == 0) throw std::invalid_argument("macmahon_bruteforce: n must be >= 1");
    Integer total = 0;
    brute_rec(vec.entries, 0, 1, n, Integer(1), total);
    return total;
}

std::vector<Integer> macmahon_values(const ExponentVector& vec, std::size_t order) {
    if (vec.entries.empty()) throw std::invalid_argument("empty exponent vector");
    const std::size_t a = vec.entries.size();
    std::vector<std::vector<Integer>> partial(a + 1, std::vector<Integer>(order + 1));
    partial[0][0] = 1;
    Integer weight;
    for (std::size_t s = 1; s <= order; ++s) {
        for (std::size_t j = a; j >= 1; --j) {
            const unsigned v = vec.entries[j - 1];
            auto& dst = partial[j];
            const auto& src = partial[j - 1];
            for (std::size_t m = 1; m * s <= order; ++m) {
                mpz_ui_pow_ui(weight.get_mpz_t(), m, v);
                const std::size_t shift = m * s;
                for (std::size_t n = shift; n <= order; ++n) {
                    if (sgn(src[n - shift]) == 0) continue;
                    mpz_addmul(dst[n].get_mpz_t(), weight.get_mpz_t(),
                               src[n - shift].get_mpz_t());
                }
            }
        }
    }
    return std::move(partial[a]);
}

QSeries<Rational> macmahon_series(const ExponentVector& vec, std::size_t order) {
    auto values = macmahon_values(vec, order);
    auto r = rational_series(order);
    for (std::size_t n = 0; n <= order; ++n) r[n] = Rational(values[n]);
    return r;
}

QSeries<Cyclo> twisted_macmahon(const ExponentVector& vec, unsigned t, unsigned twist,
                                std::size_t order) {
    if (t == 0 || twist >= t)
        throw std::invalid_argument("twisted_macmahon: need 0 <= twist < t");
    auto values = macmahon_values(vec, order);
    std::vector<Cyclo> roots(t);
    for (unsigned j = 0; j < t; ++j) roots[j] = root_power(t, j);
    auto r = cyclo_series(order, t);
    for (std::size_t n = 1; n <= order; ++n) {
        if (sgn(values[n]) == 0) continue;
        r[n] = ring_scale(roots[(static_cast<unsigned long long>(twist) * n) % t],
                          values[n]);
    }
    return r;
}

}  // namespace mahon
