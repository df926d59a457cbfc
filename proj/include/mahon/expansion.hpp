#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mahon/cyclotomic.hpp"
#include "mahon/macmahon.hpp"
#include "mahon/qseries.hpp"

namespace mahon {

// One term c * D^j U_vec(zeta_t^s q): coefficient of q^n contributes
// c * n^j * M_vec(n) * zeta_t^{s n}.
struct CombinationTerm {
    unsigned d_power = 0;   // j
    ExponentVector vec;     // the exponent vector
    unsigned twist = 0;     // s, with 0 <= s < conductor
    Cyclo coeff;            // c, in Q(zeta_conductor)
};

// A finite linear combination of twisted, D-differentiated
// multiplicity-weighted partition series over a fixed conductor.
struct LinearCombination {
    unsigned conductor = 1;
    std::vector<CombinationTerm> terms;

    void validate() const;  // conductor/twist consistency
};

// Exact evaluation: coefficient of q^n for 1 <= n <= order; zero at n = 0.
// Each distinct exponent vector's series is computed once.
QSeries<Cyclo> evaluate_combination(const LinearCombination& comb, std::size_t order);

QSeries<Cyclo> embed_series(const QSeries<Rational>& s, unsigned t);

struct FitResult {
    bool consistent = false;
    std::vector<Cyclo> coefficients;  // one per basis atom
    std::size_t nullspace_dim = 0;
    bool verified = false;  // fitted combination matches target on (fit_k, verify_k]
    std::optional<std::uint64_t> first_verify_mismatch;
};

// Match target coefficients 1..fit_k as an exact linear system over the
// basis atoms, then re-evaluate the fitted combination on (fit_k, verify_k].
// A verify failure is reported, not thrown: it means the particular solution
// does not extend beyond the fit window.
FitResult fit_expansion(const QSeries<Cyclo>& target,
                        const std::vector<LinearCombination>& basis,
                        std::size_t fit_k, std::size_t verify_k);

// Exact rank of the coefficient matrix rows = forms, columns = q^1..q^W.
// Rank equal to the number of forms certifies linear independence.
std::size_t independence_rank(const std::vector<QSeries<Rational>>& forms,
                              std::size_t window);
std::size_t independence_rank(const std::vector<QSeries<Cyclo>>& forms,
                              std::size_t window);

}  // namespace mahon
