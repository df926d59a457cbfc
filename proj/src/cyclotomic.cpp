#include "mahon/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mahon {

namespace {

// Exact division of integer polynomials, used only where divisibility is
// guaranteed (x^t - 1 by products of cyclotomic factors).
std::vector<Integer> poly_divexact(const std::vector<Integer>& num,
                                   const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    const std::size_t dn = den.size() - 1;
    if (rem.size() <= dn) throw std::logic_error("poly_divexact: degree underflow");
    std::vector<Integer> quot(rem.size() - dn);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer q = rem[i + dn] / den[dn];
        quot[i] = q;
        if (sgn(q) != 0)
            for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= q * den[j];
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw std::logic_error("poly_divexact: not divisible");
    return quot;
}

// Map node references are stable and entries are never mutated after
// insertion, so returning a reference past the lock is safe.
const std::vector<Integer>& cached_phi(unsigned t) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<Integer>> table;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(t);
    if (it != table.end()) return it->second;
    // Fill Phi_d for every divisor d of t in ascending order: each step
    // divides x^d - 1 by the already-computed lower factors.
    for (unsigned d = 1; d <= t; ++d) {
        if (t % d || table.count(d)) continue;
        std::vector<Integer> num(d + 1);
        num[0] = -1;
        num[d] = 1;
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) num = poly_divexact(num, table.at(e));
        table.emplace(d, std::move(num));
    }
    return table.at(t);
}

// Reduce a power-basis polynomial of arbitrary degree modulo Phi_t, in place.
void reduce_mod_phi(std::vector<Rational>& c, unsigned t) {
    const auto& phi = cached_phi(t);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = c.size(); i-- > deg;) {
        if (sgn(c[i]) == 0) continue;
        Rational lead = c[i];
        c[i] = 0;
        // Phi is monic: x^i = -sum_{j<deg} phi_j x^{i-deg+j}
        for (std::size_t j = 0; j < deg; ++j) c[i - deg + j] -= lead * phi[j];
    }
    c.resize(deg);
}

}  // namespace

std::vector<Integer> cyclotomic_poly(unsigned t) {
    if (t == 0) throw std::invalid_argument("cyclotomic_poly: t must be positive");
    return cached_phi(t);
}

unsigned euler_phi(unsigned t) {
    if (t == 0) throw std::invalid_argument("euler_phi: t must be positive");
    return static_cast<unsigned>(cached_phi(t).size() - 1);
}

Cyclo Cyclo::zero(unsigned t) {
    return Cyclo(t, std::vector<Rational>(euler_phi(t)));
}

Cyclo Cyclo::one(unsigned t) {
    auto v = zero(t);
    v.c_[0] = 1;
    return v;
}

Cyclo Cyclo::from_rational(unsigned t, const Rational& q) {
    auto v = zero(t);
    v.c_[0] = q;
    return v;
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

namespace {
void require_same_field(unsigned a, unsigned b) {
    if (a != b)
        throw std::invalid_argument("cyclotomic: conductor mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}
}  // namespace

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    require_same_field(t_, o.t_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    require_same_field(t_, o.t_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    require_same_field(t_, o.t_);
    const std::size_t d = c_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce_mod_phi(prod, t_);
    c_ = std::move(prod);
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    require_same_field(a.t_, b.t_);
    return a.c_ == b.c_;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::invalid_argument("cyclotomic: inverse of zero");
    if (c_.size() == 1) return Cyclo(t_, {ring_inverse(c_[0])});

    // Extended Euclid on (this, Phi_t) over Q[x]; gcd is a nonzero constant.
    using Poly = std::vector<Rational>;
    auto degree = [](const Poly& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (sgn(p[i]) != 0) return static_cast<long>(i);
        return -1L;
    };
    const auto& phi_int = cached_phi(t_);
    Poly r0(phi_int.begin(), phi_int.end());
    Poly r1 = c_;
    Poly s0(1), s1(1);
    s1[0] = 1;  // s0 = 0, s1 = 1 so that s_i * this = r_i (mod Phi)
    while (degree(r1) > 0) {
        long d0 = degree(r0), d1 = degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // r0 -= (lead0/lead1) x^{d0-d1} r1, and the same update on s0.
        Rational f = r0[d0] / r1[d1];
        long shift = d0 - d1;
        for (long j = 0; j <= d1; ++j) r0[j + shift] -= f * r1[j];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift);
        for (std::size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= f * s1[j];
    }
    if (degree(r1) != 0) throw std::logic_error("cyclotomic: gcd degree > 0");
    Rational unit = ring_inverse(r1[0]);
    for (auto& x : s1) x *= unit;
    s1.resize(2 * c_.size() - 1);
    reduce_mod_phi(s1, t_);
    return Cyclo(t_, std::move(s1));
}

Cyclo root_power(unsigned t, long long j) {
    if (t == 0) throw std::invalid_argument("root_power: t must be positive");
    long long e = j % static_cast<long long>(t);
    if (e < 0) e += t;
    unsigned deg = euler_phi(t);
    if (static_cast<unsigned>(e) < deg) {
        std::vector<Rational> c(deg);
        c[static_cast<std::size_t>(e)] = 1;
        return Cyclo(t, std::move(c));
    }
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = 1;
    reduce_mod_phi(c, t);
    return Cyclo(t, std::move(c));
}

Cyclo ring_scale(const Cyclo& a, const Integer& m) {
    Cyclo r = a;
    return r *= Cyclo::from_rational(a.conductor(), Rational(m));
}

}  // namespace mahon
