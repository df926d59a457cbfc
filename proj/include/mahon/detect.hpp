#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mahon/rational.hpp"

namespace mahon {

// Deterministic Miller-Rabin with a witness set valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Largest p with p^3 <= n, by binary search on big integers.
std::uint64_t integer_cbrt(std::uint64_t n);

// Every n >= 2 falls in exactly one of the three cases that drive the
// sign of the cube-detector coefficient.
enum class CubeClass {
    PrimeCube,      // n = p^3, p prime          -> coefficient 0
    ExceedsCube,    // n > p^3 for some prime p|n -> coefficient > 0
    BelowAllCubes,  // n < p^3 for all primes p|n -> coefficient < 0
};

CubeClass classify_cube(std::uint64_t n);

bool is_prime_in_ap(std::uint64_t n, unsigned r, unsigned t);

struct CubeScanReport {
    struct Mismatch {
        std::uint64_t n;
        int expected_sign;
        int actual_sign;
    };
    std::vector<std::uint64_t> zero_set;  // n in [2, max_n] with coefficient 0
    std::vector<Mismatch> mismatches;     // expected empty
    bool ok() const { return mismatches.empty(); }
};

// Compares sign(cube_coeff(k, ell, n)) against classify_cube(n) for every
// 2 <= n <= max_n. jobs = 0 means one worker per hardware thread; results
// are aggregated in n-order regardless of worker count.
CubeScanReport scan_cube(unsigned k, unsigned ell, std::uint64_t max_n,
                         unsigned jobs = 1);

struct ApScanReport {
    std::vector<std::uint64_t> zero_set;       // zeros in [2, max_n]
    std::vector<std::uint64_t> negatives;      // n in [1, max_n] with coeff < 0
    std::vector<std::uint64_t> false_zeros;    // zero but not a prime = r (t)
    std::vector<std::uint64_t> missed_primes;  // prime = r (t) but nonzero
    bool n1_zero = false;                      // n = 1 reported, not judged
    bool ok() const {
        return negatives.empty() && false_zeros.empty() && missed_primes.empty();
    }
};

ApScanReport scan_ap(unsigned k, unsigned ell, unsigned r, unsigned t,
                     std::uint64_t max_n, unsigned jobs = 1);

struct LemmaProbeReport {
    struct Failure {
        std::uint64_t n;
        std::uint64_t d;
        int assertion;  // 1 = sign trichotomy, 2 = upper bound, 3 = lower bound
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

// Exact-arithmetic checks of the termwise sign and size bounds:
//   (1) a(n, d) < 0 iff d = n;
//   (2) for d < n:  a(n, d) < n^{3l} d^{3k} (1 + 1/(n^l - 1));
//   (3) |a(n, n)| > n^{2k+3l} (1 - 1/n^2).
LemmaProbeReport probe_lemmas(unsigned k, unsigned ell, std::uint64_t max_n,
                              unsigned jobs = 1);

}  // namespace mahon
