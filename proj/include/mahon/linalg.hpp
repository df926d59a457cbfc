#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mahon/cyclotomic.hpp"
#include "mahon/rational.hpp"

namespace mahon {

// Dense row-major matrix over an exact field scalar (Rational or Cyclo).
template <class Scalar>
using Matrix = std::vector<std::vector<Scalar>>;

// In-place reduced row echelon form; returns the pivot columns.
// First-nonzero pivoting.
template <class Scalar>
std::vector<std::size_t> reduced_row_echelon(Matrix<Scalar>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const Scalar inv = ring_inverse(m[rank][col]);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || is_zero(m[i][col])) continue;
            const Scalar factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = m[i][j] - factor * m[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

template <class Scalar>
std::size_t matrix_rank(Matrix<Scalar> m) {
    return reduced_row_echelon(m).size();
}

template <class Scalar>
struct LinearSolution {
    bool consistent = false;
    std::vector<Scalar> particular;  // free variables set to zero
    std::size_t rank = 0;
    std::size_t nullspace_dim = 0;
};

// Solve A x = b exactly. The particular solution sets non-pivot variables
// to zero; nullspace_dim counts them.
template <class Scalar>
LinearSolution<Scalar> solve_exact(const Matrix<Scalar>& a,
                                   const std::vector<Scalar>& b,
                                   const Scalar& zero) {
    LinearSolution<Scalar> out;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Matrix<Scalar> aug(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    const auto pivots = reduced_row_echelon(aug);
    out.rank = pivots.size();
    if (!pivots.empty() && pivots.back() == cols) {
        out.consistent = false;  // a pivot landed in the rhs column
        out.rank -= 1;
        out.nullspace_dim = cols - out.rank;
        return out;
    }
    out.consistent = true;
    out.nullspace_dim = cols - out.rank;
    out.particular.assign(cols, zero);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.particular[pivots[i]] = aug[i][cols];
    return out;
}

}  // namespace mahon
