#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mahon/expansion.hpp"

namespace mahon {

// Published closed-form expressions bundled as data. The source tables
// index exponent vectors with the first entry weighting the multiplicity
// of the LARGEST part size; this library weights the smallest part first,
// so every vector is reversed on ingestion.

// The 29-row integer table claimed to expand the (1,3) cube detector.
LinearCombination published_cube_expression();

// The same table's vector list as single-term unit-coefficient atoms,
// for use as a fit basis.
std::vector<LinearCombination> published_cube_basis();

// The Q(omega) table (t = 3) claimed to expand the (1,3) detector for
// primes = 1 (mod 3). Coefficients of the shape a + b w^{n-1} + b w^{2n-2}
// are normalized to twist terms: w^{n-1} = w^2 w^n, w^{2n-2} = w w^{2n}.
LinearCombination published_ap_expression();

// Complete list of exponent vectors with odd entries satisfying
// degree + length <= 8, as twisted atoms over Q(omega): one atom per
// (vector, twist) pair. This basis provably spans the (1,3;1,3) detector.
std::vector<LinearCombination> odd_entry_ap_basis();

// (D^2 - 3D + 2) U_(1) - 8 U_(1,1): non-negative, zero on n >= 2 exactly
// at primes.
LinearCombination prime_detector_quadratic();

// The eight-vector degree-4 prime detector with zero exponents.
LinearCombination prime_detector_psi1();

struct AppendixReport {
    bool equal = false;                         // coefficient-wise on [2, max_n]
    std::optional<std::uint64_t> first_mismatch;
    std::string expected_at_mismatch;           // detector-form value
    std::string actual_at_mismatch;             // table value
    bool n1_equal = false;                      // reported, not judged
    std::string n1_expected, n1_actual;
    std::vector<std::uint64_t> zero_set;        // zeros of the table on [2, max_n]
};

// Evaluate the published cube table and compare with build_g(1, 3, .)
// coefficient-for-coefficient on [2, max_n].
AppendixReport verify_gstar(std::size_t max_n);

// Evaluate the published progression table over Q(omega) and compare with
// build_f(1, 3, 1, 3, .) on [2, max_n].
AppendixReport verify_fstar(std::size_t max_n);

}  // namespace mahon
