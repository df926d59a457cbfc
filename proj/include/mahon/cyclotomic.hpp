#pragma once

#include <cstddef>
#include <vector>

#include "mahon/rational.hpp"

namespace mahon {

// Coefficients of the t-th cyclotomic polynomial Phi_t, monic of degree
// phi(t), constant term first. Computed over the integers by dividing
// x^t - 1 by Phi_d for every proper divisor d of t.
std::vector<Integer> cyclotomic_poly(unsigned t);

unsigned euler_phi(unsigned t);

// An element of Q(zeta_t) in the power basis 1, zeta, ..., zeta^{phi(t)-1},
// reduced modulo Phi_t. The representation is unique, so equality is
// coefficient-wise. t = 1 degenerates to a plain rational.
class Cyclo {
public:
    Cyclo() : t_(1), c_(1) {}

    static Cyclo zero(unsigned t);
    static Cyclo one(unsigned t);
    static Cyclo from_rational(unsigned t, const Rational& v);

    unsigned conductor() const { return t_; }
    std::size_t degree() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when every basis coefficient above the constant vanishes.
    bool is_rational() const;
    // The constant coefficient; only a full value when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    Cyclo operator-() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Field inverse via the extended Euclidean algorithm against Phi_t.
    // Phi_t is irreducible over Q, so every nonzero element is a unit.
    Cyclo inverse() const;

private:
    Cyclo(unsigned t, std::vector<Rational> c) : t_(t), c_(std::move(c)) {}
    friend Cyclo root_power(unsigned t, long long j);

    unsigned t_;
    std::vector<Rational> c_;
};

// zeta_t^{j mod t} in reduced form.
Cyclo root_power(unsigned t, long long j);

inline bool is_zero(const Cyclo& v) { return v.is_zero(); }
Cyclo ring_scale(const Cyclo& a, const Integer& m);
inline Rational ring_inverse(const Rational& q) {
    if (sgn(q) == 0) throw std::invalid_argument("inverse of zero");
    return Rational(1) / q;
}
inline Cyclo ring_inverse(const Cyclo& v) { return v.inverse(); }

}  // namespace mahon
