#include "mahon/detect.hpp"

#include <numeric>
#include <stdexcept>
#include <thread>

#include "mahon/detectors.hpp"
#include "mahon/eisenstein.hpp"

namespace mahon {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Run the scan body over [lo, hi] split across workers; each worker owns a
// contiguous chunk, so aggregation in chunk order is deterministic.
template <class Body>
void chunked_for(std::uint64_t lo, std::uint64_t hi, unsigned jobs, Body&& body) {
    if (hi < lo) return;
    unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    const std::uint64_t count = hi - lo + 1;
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers == 1) {
        body(0, lo, hi);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t step = count / workers;
    std::uint64_t start = lo;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = (w + 1 == workers) ? hi : start + step - 1;
        pool.emplace_back(body, w, start, end);
        start = end + 1;
    }
    for (auto& th : pool) th.join();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t integer_cbrt(std::uint64_t n) {
    const Integer target(static_cast<unsigned long>(n));
    Integer lo = 0, hi = Integer(1) << 22;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (mid * mid * mid <= target)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo.get_ui();
}

CubeClass classify_cube(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("classify_cube: n must be >= 2");
    const std::uint64_t root = integer_cbrt(n);
    if (root * root * root == n && is_prime_u64(root)) return CubeClass::PrimeCube;
    // p^3 < n is exactly p <= cbrt(n - 1); avoids overflowing p^3.
    const std::uint64_t cap = integer_cbrt(n - 1);
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        if (p <= cap) return CubeClass::ExceedsCube;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1 && rest <= cap) return CubeClass::ExceedsCube;
    return CubeClass::BelowAllCubes;
}

bool is_prime_in_ap(std::uint64_t n, unsigned r, unsigned t) {
    if (t < 2 || r >= t || std::gcd(r, t) != 1)
        throw std::invalid_argument("is_prime_in_ap: need 0 <= r < t, gcd(r,t)=1");
    if (n < 2) throw std::invalid_argument("is_prime_in_ap: n must be >= 2");
    return n % t == r && is_prime_u64(n);
}

CubeScanReport scan_cube(unsigned k, unsigned ell, std::uint64_t max_n, unsigned jobs) {
    DetectorParams{k, ell, {}, {}}.validate();
    CubeScanReport report;
    if (max_n < 2) return report;

    std::vector<signed char> actual(max_n + 1, 0);
    std::vector<signed char> expected(max_n + 1, 0);
    chunked_for(2, max_n, jobs, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n <= hi; ++n) {
            actual[n] = static_cast<signed char>(sgn(cube_coeff(k, ell, n)));
            switch (classify_cube(n)) {
                case CubeClass::PrimeCube: expected[n] = 0; break;
                case CubeClass::ExceedsCube: expected[n] = 1; break;
                case CubeClass::BelowAllCubes: expected[n] = -1; break;
            }
        }
    });
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        if (actual[n] == 0) report.zero_set.push_back(n);
        if (actual[n] != expected[n])
            report.mismatches.push_back({n, expected[n], actual[n]});
    }
    return report;
}

ApScanReport scan_ap(unsigned k, unsigned ell, unsigned r, unsigned t,
                     std::uint64_t max_n, unsigned jobs) {
    DetectorParams{k, ell, r, t}.validate();
    ApScanReport report;
    if (max_n < 1) return report;

    // -1: negative coefficient, 0: zero, 1: positive
    std::vector<signed char> sign(max_n + 1, 1);
    chunked_for(1, max_n, jobs, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n <= hi; ++n)
            sign[n] = static_cast<signed char>(sgn(ap_coeff(k, ell, r, t, n)));
    });
    report.n1_zero = (sign[1] == 0);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        if (sign[n] < 0) report.negatives.push_back(n);
        if (n < 2) continue;
        const bool zero = (sign[n] == 0);
        const bool target = is_prime_in_ap(n, r, t);
        if (zero) report.zero_set.push_back(n);
        if (zero && !target) report.false_zeros.push_back(n);
        if (!zero && target) report.missed_primes.push_back(n);
    }
    return report;
}

LemmaProbeReport probe_lemmas(unsigned k, unsigned ell, std::uint64_t max_n,
                              unsigned jobs) {
    DetectorParams{k, ell, {}, {}}.validate();
    LemmaProbeReport report;
    if (max_n < 2) return report;

    std::vector<std::vector<LemmaProbeReport::Failure>> found(
        jobs ? jobs : std::thread::hardware_concurrency() + 1);
    chunked_for(2, max_n, jobs, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        auto& sink = found[w];
        for (std::uint64_t n = lo; n <= hi; ++n) {
            for (std::uint64_t d : divisors(n)) {
                const Integer term = cube_coeff_term(k, ell, n, d);
                if ((sgn(term) < 0) != (d == n)) sink.push_back({n, d, 1});
                if (d < n) {
                    // a(n,d) < n^{3l} d^{3k} * n^l / (n^l - 1), exactly.
                    const Integer nl = ipow(n, ell);
                    const Rational bound =
                        make_rational(ipow(n, 3 * ell) * ipow(d, 3 * k) * nl, nl - 1);
                    if (!(Rational(term) < bound)) sink.push_back({n, d, 2});
                } else {
                    // |a(n,n)| > n^{2k+3l} (n^2 - 1) / n^2, exactly.
                    const Rational bound = make_rational(
                        ipow(n, 2 * k + 3 * ell) * (ipow(n, 2) - 1), ipow(n, 2));
                    if (!(Rational(abs(term)) > bound)) sink.push_back({n, d, 3});
                }
            }
        }
    });
    for (const auto& chunk : found)
        report.failures.insert(report.failures.end(), chunk.begin(), chunk.end());
    return report;
}

}  // namespace mahon
