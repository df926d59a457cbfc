#include "mahon/expansion.hpp"

#include <map>
#include <stdexcept>

#include "mahon/linalg.hpp"

namespace mahon {

void LinearCombination::validate() const {
    if (conductor == 0)
        throw std::invalid_argument("combination: conductor must be positive");
    for (const auto& term : terms) {
        if (term.coeff.conductor() != conductor)
            throw std::invalid_argument("combination: coefficient conductor mismatch");
        if (term.twist >= conductor)
            throw std::invalid_argument("combination: twist index out of range");
    }
}

QSeries<Cyclo> evaluate_combination(const LinearCombination& comb, std::size_t order) {
    comb.validate();
    const unsigned t = comb.conductor;

    std::map<ExponentVector, std::vector<Integer>> series;
    for (const auto& term : comb.terms)
        if (!series.count(term.vec)) series.emplace(term.vec, macmahon_values(term.vec, order));

    std::vector<Cyclo> roots(t);
    for (unsigned j = 0; j < t; ++j) roots[j] = root_power(t, j);

    auto out = cyclo_series(order, t);
    for (const auto& term : comb.terms) {
        const auto& values = series.at(term.vec);
        for (std::size_t n = 1; n <= order; ++n) {
            if (sgn(values[n]) == 0) continue;
            Integer weighted = values[n];
            if (term.d_power) weighted *= ipow(static_cast<unsigned long>(n), term.d_power);
            Cyclo c = ring_scale(term.coeff, weighted);
            if (term.twist)
                c *= roots[(static_cast<unsigned long long>(term.twist) * n) % t];
            out[n] += c;
        }
    }
    return out;
}

QSeries<Cyclo> embed_series(const QSeries<Rational>& s, unsigned t) {
    auto out = cyclo_series(s.order(), t);
    for (std::size_t n = 0; n <= s.order(); ++n)
        out[n] = Cyclo::from_rational(t, s[n]);
    return out;
}

FitResult fit_expansion(const QSeries<Cyclo>& target,
                        const std::vector<LinearCombination>& basis,
                        std::size_t fit_k, std::size_t verify_k) {
    if (basis.empty()) throw std::invalid_argument("fit: empty basis");
    if (fit_k < 1 || verify_k < fit_k)
        throw std::invalid_argument("fit: need 1 <= fit_k <= verify_k");
    if (target.order() < verify_k)
        throw std::invalid_argument("fit: target truncation is shorter than verify_k");
    const unsigned t = target.zero_element().conductor();
    for (const auto& atom : basis)
        if (atom.conductor != t)
            throw std::invalid_argument("fit: basis conductor differs from target");

    // Atom columns evaluated once through the verify window.
    std::vector<QSeries<Cyclo>> columns;
    columns.reserve(basis.size());
    for (const auto& atom : basis) columns.push_back(evaluate_combination(atom, verify_k));

    Matrix<Cyclo> a(fit_k, std::vector<Cyclo>(basis.size(), Cyclo::zero(t)));
    std::vector<Cyclo> rhs(fit_k, Cyclo::zero(t));
    for (std::size_t n = 1; n <= fit_k; ++n) {
        for (std::size_t j = 0; j < basis.size(); ++j) a[n - 1][j] = columns[j][n];
        rhs[n - 1] = target[n];
    }

    auto solved = solve_exact(a, rhs, Cyclo::zero(t));
    FitResult out;
    out.consistent = solved.consistent;
    out.nullspace_dim = solved.nullspace_dim;
    if (!solved.consistent) return out;
    out.coefficients = std::move(solved.particular);

    out.verified = true;
    for (std::size_t n = fit_k + 1; n <= verify_k; ++n) {
        Cyclo acc = Cyclo::zero(t);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (out.coefficients[j].is_zero()) continue;
            acc += out.coefficients[j] * columns[j][n];
        }
        if (acc != target[n]) {
            out.verified = false;
            out.first_verify_mismatch = n;
            break;
        }
    }
    return out;
}

namespace {
template <class Scalar>
std::size_t rank_impl(const std::vector<QSeries<Scalar>>& forms, std::size_t window) {
    if (forms.empty()) return 0;
    Matrix<Scalar> m;
    m.reserve(forms.size());
    for (const auto& f : forms) {
        if (f.order() < window)
            throw std::invalid_argument("independence_rank: form shorter than window");
        std::vector<Scalar> row;
        row.reserve(window);
        for (std::size_t n = 1; n <= window; ++n) row.push_back(f[n]);
        m.push_back(std::move(row));
    }
    return matrix_rank(std::move(m));
}
}  // namespace

std::size_t independence_rank(const std::vector<QSeries<Rational>>& forms,
                              std::size_t window) {
    return rank_impl(forms, window);
}

std::size_t independence_rank(const std::vector<QSeries<Cyclo>>& forms,
                              std::size_t window) {
    return rank_impl(forms, window);
}

}  // namespace mahon
