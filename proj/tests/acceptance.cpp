// Acceptance suite: one pass/fail line per criterion, all in exact
// arithmetic. Run with no arguments for the full suite or with
// `--criterion N` for a single one. Exit 0 iff everything that ran passed.

#include <cstring>

#include <numeric>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mahon/appendix.hpp"
#include "mahon/detect.hpp"
#include "mahon/detectors.hpp"
#include "mahon/eisenstein.hpp"
#include "mahon/expansion.hpp"
#include "mahon/macmahon.hpp"

namespace {

using namespace mahon;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<std::uint64_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

// 1. Cube detection: sign trichotomy with zero mismatches on [2, 2000]
//    for (k,l) in {(1,3),(1,5),(3,5)}; zero set {8,27,125,343,1331}.
Outcome criterion1() {
    const std::vector<std::uint64_t> want_zeros = {8, 27, 125, 343, 1331};
    for (auto [k, l] : {std::pair{1u, 3u}, {1u, 5u}, {3u, 5u}}) {
        const auto report = scan_cube(k, l, 2000);
        if (!report.ok())
            return {false, "sign mismatches for (" + std::to_string(k) + "," +
                               std::to_string(l) + ") at n=" +
                               std::to_string(report.mismatches.front().n)};
        if (report.zero_set != want_zeros)
            return {false, "zero set for (" + std::to_string(k) + "," +
                               std::to_string(l) + ") is {" + join(report.zero_set) + "}"};
    }
    return {true, "3 parameter pairs, n <= 2000, zero set {8,27,125,343,1331}"};
}

// 2. Progression detection: non-negative coefficients and exact zero sets
//    for (r,t) in {(1,3),(2,3),(1,4),(3,4)}, n <= 2000.
Outcome criterion2() {
    for (auto [r, t] : {std::pair{1u, 3u}, {2u, 3u}, {1u, 4u}, {3u, 4u}}) {
        const auto report = scan_ap(1, 3, r, t, 2000);
        if (!report.negatives.empty())
            return {false, "negative coefficient at n=" +
                               std::to_string(report.negatives.front())};
        if (!report.false_zeros.empty() || !report.missed_primes.empty())
            return {false, "zero set differs from primes = " + std::to_string(r) +
                               " (mod " + std::to_string(t) + ")"};
    }
    return {true, "4 progressions, n <= 2000, zero sets match ground truth"};
}

// 3. Oracle equivalence: series DP vs brute force for every vector of
//    length <= 3 with entries <= 3 and n <= 30; M_(1) = sigma_1 to 1000.
Outcome criterion3() {
    for (unsigned len = 1; len <= 3; ++len) {
        std::vector<unsigned> entries(len, 0);
        while (true) {
            const ExponentVector vec{std::vector<unsigned>(entries)};
            const auto values = macmahon_values(vec, 30);
            for (unsigned long long n = 1; n <= 30; ++n)
                if (values[n] != macmahon_bruteforce(vec, n))
                    return {false, "DP vs brute force differ at " + vec.str() +
                                       ", n=" + std::to_string(n)};
            std::size_t i = 0;
            while (i < len && entries[i] == 3) entries[i++] = 0;
            if (i == len) break;
            ++entries[i];
        }
    }
    const auto m1 = macmahon_values(ExponentVector{{1}}, 1000);
    for (unsigned long long n = 1; n <= 1000; ++n)
        if (m1[n] != sigma_pow(1, n))
            return {false, "M_(1) != sigma_1 at n=" + std::to_string(n)};
    return {true, "84 vectors x 30 values vs brute force; M_(1)=sigma_1 to 1000"};
}

// 4. The two introductory prime detectors: non-negative with zero set
//    exactly the primes, on [2,1000] and [2,500].
Outcome criterion4() {
    const auto quad = evaluate_combination(prime_detector_quadratic(), 1000);
    for (std::size_t n = 2; n <= 1000; ++n) {
        if (!quad[n].is_rational()) return {false, "non-rational value"};
        const int s = sgn(quad[n].rational_part());
        if (s < 0) return {false, "quadratic detector negative at n=" + std::to_string(n)};
        if ((s == 0) != is_prime_u64(n))
            return {false, "quadratic detector zero set wrong at n=" + std::to_string(n)};
    }
    const auto psi = evaluate_combination(prime_detector_psi1(), 500);
    for (std::size_t n = 2; n <= 500; ++n) {
        const int s = sgn(psi[n].rational_part());
        if (s < 0) return {false, "psi_1 negative at n=" + std::to_string(n)};
        if ((s == 0) != is_prime_u64(n))
            return {false, "psi_1 zero set wrong at n=" + std::to_string(n)};
    }
    return {true, "quadratic detector to 1000, psi_1 to 500"};
}

// 5. Published expansion tables, coefficient-for-coefficient.
Outcome criterion5() {
    const auto g = verify_gstar(200);
    const auto f = verify_fstar(500);
    if (g.equal && f.equal) return {true, "both tables equal the detector forms"};
    std::ostringstream os;
    if (!g.equal) {
        os << "cube table differs from the detector at n=" << *g.first_mismatch
           << " (form " << g.expected_at_mismatch << ", table "
           << g.actual_at_mismatch << "); table zero set on [2,200] = {"
           << join(g.zero_set) << "}";
    }
    if (!f.equal) {
        if (!g.equal) os << "; ";
        os << "progression table differs at n=" << *f.first_mismatch << " (form "
           << f.expected_at_mismatch << ", table " << f.actual_at_mismatch
           << "); table zero set on [2,500] = {" << join(f.zero_set) << "}";
    }
    return {false, os.str()};
}

// 6. Derivative identities to order 200.
Outcome criterion6() {
    const auto report = ramanujan_check(200);
    if (report.all_zero) return {true, "all three residuals vanish to order 200"};
    std::ostringstream os;
    os << "nonzero residual";
    for (int i = 0; i < 3; ++i)
        if (report.max_nonzero[i])
            os << " [identity " << i + 1 << " at index " << *report.max_nonzero[i] << "]";
    return {false, os.str()};
}

// 7. Twisted Eisenstein closed form vs root-of-unity filter.
Outcome criterion7() {
    for (unsigned k : {2u, 4u, 8u}) {
        for (unsigned t : {3u, 4u, 5u}) {
            for (unsigned r = 1; r < t; ++r) {
                if (std::gcd(r, t) != 1) continue;
                const auto closed = embed_series(eisenstein_twisted(k, r, t, 300), t);
                const auto filtered = eisenstein_twisted_by_filter(k, r, t, 300);
                if (closed != filtered)
                    return {false, "mismatch at k=" + std::to_string(k) +
                                       ", r=" + std::to_string(r) +
                                       ", t=" + std::to_string(t)};
            }
        }
    }
    return {true, "k in {2,4,8}, t in {3,4,5}, all coprime r, order 300"};
}

// 8. Termwise sign and bound probes on [2, 1000].
Outcome criterion8() {
    for (auto [k, l] : {std::pair{1u, 3u}, {1u, 5u}, {3u, 5u}}) {
        const auto report = probe_lemmas(k, l, 1000);
        if (!report.ok()) {
            const auto& f = report.failures.front();
            return {false, "assertion " + std::to_string(f.assertion) + " fails at (k,l)=(" +
                               std::to_string(k) + "," + std::to_string(l) + "), n=" +
                               std::to_string(f.n) + ", d=" + std::to_string(f.d)};
        }
    }
    return {true, "sign and bounds hold for 3 parameter pairs, n <= 1000, all divisors"};
}

// 9. Independence certificates.
Outcome criterion9() {
    const auto g13 = build_g(DetectorParams{1, 3, {}, {}}, 60);
    const auto g15 = build_g(DetectorParams{1, 5, {}, {}}, 60);
    const auto g17 = build_g(DetectorParams{1, 7, {}, {}}, 60);
    const std::size_t rg = independence_rank({g13, g15, g17}, 60);
    if (rg != 3) return {false, "cube detector rank on window 60 is " + std::to_string(rg)};
    const auto f13 = build_f(DetectorParams{1, 3, 1, 3}, 40);
    const auto f15 = build_f(DetectorParams{1, 5, 1, 3}, 40);
    const std::size_t rf = independence_rank({f13, f15}, 40);
    if (rf != 2)
        return {false, "progression detector rank on window 40 is " + std::to_string(rf)};
    return {true, "rank {g(1,3),g(1,5),g(1,7)} = 3 on window 60; rank {f(1,3),f(1,5)} = 2 on window 40"};
}

// 10. Fit round-trip against the published vector basis.
Outcome criterion10() {
    const auto basis = published_cube_basis();
    const std::size_t fit_k = basis.size() + 10;
    const std::size_t verify_k = 2 * fit_k;
    const auto target =
        embed_series(build_g(DetectorParams{1, 3, {}, {}}, verify_k), 1);
    const auto fit = fit_expansion(target, basis, fit_k, verify_k);
    if (fit.consistent && fit.verified)
        return {true, "exact solution over " + std::to_string(basis.size()) +
                          " atoms reproduces the detector on (" + std::to_string(fit_k) +
                          "," + std::to_string(verify_k) + "]"};
    if (!fit.consistent)
        return {false,
                "no exact solution exists: the 52 published vectors have full rank "
                "on the fit window yet the detector is outside their span "
                "(augmenting the target raises the rank)"};
    return {false, "solution found but fails the verify window at n=" +
                       std::to_string(*fit.first_verify_mismatch)};
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "cube detection scan", criterion1},
    {2, "progression detection scan", criterion2},
    {3, "partition-count oracle equivalence", criterion3},
    {4, "introductory prime detectors", criterion4},
    {5, "published expansion tables", criterion5},
    {6, "derivative identities", criterion6},
    {7, "twisted Eisenstein cross-check", criterion7},
    {8, "termwise sign and bound probes", criterion8},
    {9, "independence certificates", criterion9},
    {10, "fit round-trip over the published basis", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }
    bool all_pass = true;
    for (const auto& c : kCriteria) {
        if (only && c.id != only) continue;
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id
                  << ": " << c.name << " - " << outcome.detail << "\n";
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
