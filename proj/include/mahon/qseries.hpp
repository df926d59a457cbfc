#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mahon/cyclotomic.hpp"
#include "mahon/rational.hpp"

namespace mahon {

// Truncated formal power series in q over an exact coefficient ring
// (Rational or Cyclo). Coefficients 0..N are stored; index n is the
// coefficient of q^n. Arithmetic between series of different truncation
// orders truncates to the shorter one: unknown coefficients are never
// fabricated.
template <class Scalar>
class QSeries {
public:
    QSeries(std::size_t order, Scalar zero)
        : zero_(std::move(zero)), c_(order + 1, zero_) {}

    std::size_t order() const { return c_.size() - 1; }
    const Scalar& zero_element() const { return zero_; }

    const Scalar& operator[](std::size_t n) const { return c_.at(n); }
    Scalar& operator[](std::size_t n) { return c_.at(n); }

    const std::vector<Scalar>& coeffs() const { return c_; }

    QSeries truncated(std::size_t order) const {
        QSeries r(std::min(order, this->order()), zero_);
        for (std::size_t n = 0; n <= r.order(); ++n) r.c_[n] = c_[n];
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    Scalar zero_;
    std::vector<Scalar> c_;
};

template <class Scalar>
QSeries<Scalar> operator+(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
    QSeries<Scalar> r(std::min(a.order(), b.order()), a.zero_element());
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

template <class Scalar>
QSeries<Scalar> operator-(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
    QSeries<Scalar> r(std::min(a.order(), b.order()), a.zero_element());
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

// Truncated Cauchy product, plain quadratic convolution.
template <class Scalar>
QSeries<Scalar> operator*(const QSeries<Scalar>& a, const QSeries<Scalar>& b) {
    QSeries<Scalar> r(std::min(a.order(), b.order()), a.zero_element());
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= r.order(); ++j) {
            if (is_zero(b[j])) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

template <class Scalar>
QSeries<Scalar> series_scale(const Scalar& c, const QSeries<Scalar>& a) {
    QSeries<Scalar> r(a.order(), a.zero_element());
    for (std::size_t n = 0; n <= a.order(); ++n) r[n] = c * a[n];
    return r;
}

// D^j with D = q d/dq, i.e. coefficient n picks up a factor n^j.
// j = 0 is the identity; the constant term dies for j >= 1.
template <class Scalar>
QSeries<Scalar> apply_d(const QSeries<Scalar>& a, unsigned power) {
    if (power == 0) return a;
    QSeries<Scalar> r(a.order(), a.zero_element());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        if (is_zero(a[n])) continue;
        r[n] = ring_scale(a[n], ipow(static_cast<unsigned long>(n), power));
    }
    return r;
}

inline QSeries<Rational> rational_series(std::size_t order) {
    return QSeries<Rational>(order, Rational(0));
}

inline QSeries<Cyclo> cyclo_series(std::size_t order, unsigned t) {
    return QSeries<Cyclo>(order, Cyclo::zero(t));
}

// Lambda_v(q^s) = sum_{m >= 1} m^v q^{m s}, truncated. For v = 1, s = 1
// this is the expansion of q/(1-q)^2, the building block of the
// partition-multiplicity series.
inline QSeries<Rational> lambda_series(unsigned v, unsigned s, std::size_t order) {
    if (s == 0) throw std::invalid_argument("lambda_series: s must be >= 1");
    auto r = rational_series(order);
    for (unsigned long m = 1; m * s <= order; ++m)
        r[m * s] = Rational(ipow(m, v));
    return r;
}

}  // namespace mahon
