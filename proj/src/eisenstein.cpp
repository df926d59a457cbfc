#include "mahon/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mahon {

Rational bernoulli(unsigned k) {
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    Integer binom;
    for (unsigned m = 1; m <= k; ++m) {
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
            acc += b[j] * binom;
        }
        b[m] = -acc / (m + 1);
    }
    return b[k];
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Integer sigma_pow(unsigned k, std::uint64_t n) {
    Integer total = 0;
    for (std::uint64_t d : divisors(n)) total += ipow(d, k);
    return total;
}

namespace {
void require_even_weight(unsigned k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("eisenstein: weight must be even and >= 2, got " +
                                    std::to_string(k));
}
void require_coprime_residue(unsigned r, unsigned t) {
    if (t < 2 || r == 0 || r >= t || std::gcd(r, t) != 1)
        throw std::invalid_argument("twisted eisenstein: need 0 < r < t with gcd(r,t)=1");
}
}  // namespace

QSeries<Rational> eisenstein(unsigned k, std::size_t order) {
    require_even_weight(k);
    auto g = rational_series(order);
    g[0] = -bernoulli(k) / (2 * k);
    for (std::size_t n = 1; n <= order; ++n) g[n] = Rational(sigma_pow(k - 1, n));
    return g;
}

QSeries<Rational> eisenstein_twisted(unsigned k, unsigned r, unsigned t,
                                     std::size_t order) {
    require_even_weight(k);
    require_coprime_residue(r, t);
    auto g = rational_series(order);
    for (std::size_t n = r; n <= order; n += t) g[n] = Rational(sigma_pow(k - 1, n));
    return g;
}

QSeries<Cyclo> eisenstein_twisted_by_filter(unsigned k, unsigned r, unsigned t,
                                            std::size_t order) {
    require_even_weight(k);
    require_coprime_residue(r, t);
    const auto base = eisenstein(k, order);
    std::vector<Cyclo> roots(t);
    for (unsigned j = 0; j < t; ++j) roots[j] = root_power(t, j);
    const Cyclo inv_t = Cyclo::from_rational(t, Rational(1, t));

    auto out = cyclo_series(order, t);
    for (unsigned s = 0; s < t; ++s) {
        // zeta^{-rs} G_k(q zeta^s): coefficient n picks up zeta^{sn}.
        const Cyclo& front = roots[(t - (static_cast<unsigned long long>(r) * s) % t) % t];
        for (std::size_t n = 0; n <= order; ++n) {
            if (is_zero(base[n])) continue;
            Cyclo term = front * roots[(static_cast<unsigned long long>(s) * n) % t];
            out[n] += Cyclo::from_rational(t, base[n]) * term;
        }
    }
    for (std::size_t n = 0; n <= order; ++n) out[n] *= inv_t;
    return out;
}

}  // namespace mahon
