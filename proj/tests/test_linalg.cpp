#include <doctest.h>

#include "mahon/linalg.hpp"

using namespace mahon;

namespace {

Matrix<Rational> rmat(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix<Rational> m;
    for (auto& row : rows) {
        std::vector<Rational> r;
        for (int x : row) r.emplace_back(x);
        m.push_back(std::move(r));
    }
    return m;
}

std::vector<Rational> rvec(std::initializer_list<int> xs) {
    std::vector<Rational> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("rank") {
    CHECK(matrix_rank(rmat({{1, 2}, {2, 4}})) == 1);
    CHECK(matrix_rank(rmat({{1, 2}, {3, 4}})) == 2);
    CHECK(matrix_rank(rmat({{0, 0}, {0, 0}})) == 0);
    CHECK(matrix_rank(rmat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("exact solve over the rationals") {
    SUBCASE("unique solution") {
        auto sol = solve_exact(rmat({{2, 1}, {1, -1}}), rvec({5, 1}), Rational(0));
        REQUIRE(sol.consistent);
        CHECK(sol.nullspace_dim == 0);
        CHECK(sol.particular == rvec({2, 1}));
    }
    SUBCASE("inconsistent") {
        auto sol = solve_exact(rmat({{1, 1}, {2, 2}}), rvec({1, 3}), Rational(0));
        CHECK_FALSE(sol.consistent);
    }
    SUBCASE("underdetermined") {
        auto sol = solve_exact(rmat({{1, 1, 0}}), rvec({4}), Rational(0));
        REQUIRE(sol.consistent);
        CHECK(sol.nullspace_dim == 2);
        CHECK(sol.particular == rvec({4, 0, 0}));
    }
    SUBCASE("solution satisfies the system") {
        const auto a = rmat({{3, -2, 1}, {0, 5, 2}, {7, 1, 1}, {3, 3, 3}});
        const auto x = rvec({2, -1, 3});
        std::vector<Rational> b;
        for (const auto& row : a) {
            Rational acc(0);
            for (std::size_t j = 0; j < x.size(); ++j) acc += row[j] * x[j];
            b.push_back(acc);
        }
        auto sol = solve_exact(a, b, Rational(0));
        REQUIRE(sol.consistent);
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < x.size(); ++j) acc += a[i][j] * sol.particular[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("exact solve over a cyclotomic field") {
    const Cyclo w = root_power(3, 1);
    const Cyclo one = Cyclo::one(3);
    // [w, 1; 1, 1] x = [1, 0]  =>  x = (1/(w-1)) [1, -1]
    Matrix<Cyclo> a = {{w, one}, {one, one}};
    std::vector<Cyclo> b = {one, Cyclo::zero(3)};
    auto sol = solve_exact(a, b, Cyclo::zero(3));
    REQUIRE(sol.consistent);
    CHECK(sol.nullspace_dim == 0);
    const Cyclo inv = (w - one).inverse();
    CHECK(sol.particular[0] == inv);
    CHECK(sol.particular[1] == -inv);
    CHECK(a[0][0] * sol.particular[0] + a[0][1] * sol.particular[1] == b[0]);
}
