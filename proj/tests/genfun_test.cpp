#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coralarm/errors.hpp"
#include "coralarm/genfun.hpp"

using namespace coralarm;

namespace {
Poly2 t(long long c, int i, int j) { return Poly2::term(BigInt(c), i, j); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
    Poly2 a = t(1, 0, 0) - t(1, 1, 0);  // 1 - x
    Poly2 b = t(1, 0, 0) + t(1, 1, 0);  // 1 + x
    CHECK(a * b == t(1, 0, 0) - t(1, 2, 0));
    CHECK((a - a).is_zero());
    CHECK(a.x_degree() == 1);
    CHECK((t(2, 1, 1) * t(3, 2, 1)).coeff(3, 2) == 6);
    CHECK(Poly2().to_string() == "0");
    CHECK((t(1, 0, 0) - t(2, 1, 0) + t(3, 2, 2)).to_string() == "1 - 2x + 3x^2y^2");
    CHECK(t(1, 1, 1).at_y(BigInt(-1)) == t(-1, 1, 0));
}

TEST_CASE("series extraction against a known recurrence") {
    // 1/(1 - x - x^2) generates the Fibonacci numbers
    RationalGF fib{t(1, 0, 0), t(1, 0, 0) - t(1, 1, 0) - t(1, 2, 0)};
    auto rows = series_coeffs(fib, 7);
    std::vector<long long> expect{1, 1, 2, 3, 5, 8, 13, 21};
    for (size_t n = 0; n < expect.size(); ++n) {
        REQUIRE(rows[n].size() == 1);
        CHECK(rows[n][0] == expect[n]);
    }
    RationalGF bad{t(1, 0, 0), t(2, 0, 0)};
    CHECK_THROWS_AS(series_coeffs(bad, 3), Error);
}

TEST_CASE("cube series reproduces the small f-vectors") {
    auto rows = series_coeffs(gf_cubes(), 6);
    CHECK(rows[0] == std::vector<BigInt>{1});
    CHECK(rows[1] == std::vector<BigInt>{2, 1});
    CHECK(rows[2] == std::vector<BigInt>{4, 3});
    CHECK(rows[3] == std::vector<BigInt>{8, 8, 1});
    CHECK(rows[4] == std::vector<BigInt>{15, 18, 4});
    CHECK(rows[5] == std::vector<BigInt>{28, 38, 11});
    CHECK(rows[6] == std::vector<BigInt>{53, 81, 30, 1});
}

TEST_CASE("vertex counts and Euler characteristic from the series") {
    auto rows = series_coeffs(gf_cubes(), 30);
    std::vector<long long> states{1, 2, 4, 8, 15, 28, 53};
    for (size_t n = 0; n < states.size(); ++n) CHECK(rows[n][0] == states[n]);
    for (const auto& row : rows) {
        BigInt chi = 0, sign = 1;
        for (const BigInt& c : row) {
            chi += sign * c;
            sign = -sign;
        }
        CHECK(chi == 1);
    }
}

TEST_CASE("factor family series sum to the factor series") {
    for (const auto& name : family_names()) CHECK_NOTHROW(family_gf(name));
    CHECK_THROWS_AS(family_gf("M9"), Error);
    for (const auto& [name, ok] : genfun_identity_checks()) {
        INFO(name);
        CHECK(ok);
    }
}
