#include "mahon/detectors.hpp"

#include <numeric>
#include <stdexcept>

#include "mahon/eisenstein.hpp"

namespace mahon {

void DetectorParams::validate() const {
    if (k % 2 == 0 || ell % 2 == 0)
        throw std::invalid_argument("detector: k and ell must be odd");
    if (k < 1) throw std::invalid_argument("detector: k must be >= 1");
    if (ell <= k) throw std::invalid_argument("detector: need ell > k");
    if (residue.has_value() != modulus.has_value())
        throw std::invalid_argument("detector: r and t must be given together");
    if (has_twist()) {
        unsigned r = *residue, t = *modulus;
        if (t < 2 || r >= t || std::gcd(r, t) != 1)
            throw std::invalid_argument("detector: need t >= 2, 0 <= r < t, gcd(r,t)=1");
    }
}

Integer cube_coeff_term(unsigned k, unsigned ell, std::uint64_t n, std::uint64_t d) {
    if (d == 0 || n % d != 0)
        throw std::invalid_argument("cube_coeff_term: d must divide n");
    const Integer nk = ipow(n, k), nl = ipow(n, ell);
    const Integer sum_l = nl * nl * nl + nl * nl + nl + 1;
    const Integer sum_k = nk * nk * nk + nk * nk + nk + 1;
    return sum_l * ipow(d, 3 * k) - sum_k * ipow(d, 3 * ell);
}

Integer cube_coeff(unsigned k, unsigned ell, std::uint64_t n) {
    const Integer nk = ipow(n, k), nl = ipow(n, ell);
    const Integer sum_l = nl * nl * nl + nl * nl + nl + 1;
    const Integer sum_k = nk * nk * nk + nk * nk + nk + 1;
    return sum_l * sigma_pow(3 * k, n) - sum_k * sigma_pow(3 * ell, n);
}

Integer ap_coeff(unsigned k, unsigned ell, unsigned r, unsigned t, std::uint64_t n) {
    const Integer head = (ipow(n, ell) + 1) * sigma_pow(k, n);
    if (n % t != r % t) return head;
    return head - (ipow(n, k) + 1) * sigma_pow(ell, n);
}

namespace {
QSeries<Rational> geometric_d_sum(const QSeries<Rational>& g, unsigned step) {
    // (D^{3 step} + D^{2 step} + D^{step} + 1) g
    auto d1 = apply_d(g, step);
    auto d2 = apply_d(d1, step);
    auto d3 = apply_d(d2, step);
    return d3 + d2 + d1 + g;
}
}  // namespace

QSeries<Rational> build_g(const DetectorParams& p, std::size_t order) {
    p.validate();
    if (p.has_twist())
        throw std::invalid_argument("build_g: cube detector takes no (r, t)");
    const auto low = eisenstein(3 * p.k + 1, order);
    const auto high = eisenstein(3 * p.ell + 1, order);
    return geometric_d_sum(low, p.ell) - geometric_d_sum(high, p.k);
}

QSeries<Rational> build_f(const DetectorParams& p, std::size_t order) {
    p.validate();
    if (!p.has_twist())
        throw std::invalid_argument("build_f: progression detector needs (r, t)");
    const auto low = eisenstein(p.k + 1, order);
    const auto high = eisenstein_twisted(p.ell + 1, *p.residue, *p.modulus, order);
    return (apply_d(low, p.ell) + low) - (apply_d(high, p.k) + high);
}

RamanujanReport ramanujan_check(std::size_t order) {
    const auto g2 = eisenstein(2, order);
    const auto g4 = eisenstein(4, order);
    const auto g6 = eisenstein(6, order);

    const QSeries<Rational> residual[3] = {
        apply_d(g2, 1) + series_scale(Rational(2), g2 * g2) -
            series_scale(Rational(5, 6), g4),
        apply_d(g4, 1) + series_scale(Rational(8), g2 * g4) -
            series_scale(Rational(7, 10), g6),
        apply_d(g6, 1) + series_scale(Rational(12), g2 * g6) -
            series_scale(Rational(400, 7), g4 * g4),
    };

    RamanujanReport report;
    report.all_zero = true;
    for (int i = 0; i < 3; ++i) {
        for (std::size_t n = residual[i].order() + 1; n-- > 0;) {
            if (!is_zero(residual[i][n])) {
                report.max_nonzero[i] = n;
                report.all_zero = false;
                break;
            }
        }
    }
    return report;
}

}  // namespace mahon
