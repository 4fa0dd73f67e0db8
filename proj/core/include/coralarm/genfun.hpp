#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coralarm {

using BigInt = boost::multiprecision::cpp_int;

/// A bivariate polynomial in x (arm length) and y (cube dimension) with
/// exact integer coefficients, stored densely.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 term(BigInt coef, int xdeg, int ydeg);
    static Poly2 constant(BigInt c) { return term(std::move(c), 0, 0); }

    BigInt coeff(int xdeg, int ydeg) const;
    bool is_zero() const;
    int x_degree() const;  // -1 for the zero polynomial
    int y_degree() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    bool operator==(const Poly2& o) const;

    /// The univariate polynomial in x obtained by fixing y.
    Poly2 at_y(const BigInt& y) const;

    /// Graded-lexicographic rendering, e.g. "1 - 2x + 3x^2y^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<std::vector<BigInt>> c_;  // c_[i][j] multiplies x^i y^j
};

struct RationalGF {
    Poly2 num;
    Poly2 den;  // constant term must be 1 for series extraction
};

/// Coefficients of x^0..x^order of num/den as polynomials in y; entry [k][d]
/// multiplies x^k y^d. Rows are trimmed of trailing zeros.
std::vector<std::vector<BigInt>> series_coeffs(const RationalGF& f, int order);

/// Generating function of the cubes of the width-2 configuration spaces:
/// the coefficient of x^n y^d counts the d-cubes of S(2, n).
RationalGF gf_cubes();

/// Sum over the eight inner word-factor families (M1..M8) and over the
/// eight final families (F1..F8), weighted x^length y^dimension.
RationalGF gf_inner_factors();
RationalGF gf_final_factors();

/// Generating function of a single family; names M1..M8 and F1..F8.
RationalGF family_gf(const std::string& name);
std::vector<std::string> family_names();

/// Named algebraic identities tying the three series together: the
/// transfer-matrix identity (1 + x C) (1 - M) = F with denominators cleared,
/// and the Euler-characteristic specialisation C(x, -1) (1 - x) = 1 in
/// cleared form. Each entry is (description, holds).
std::vector<std::pair<std::string, bool>> genfun_identity_checks();

}  // namespace coralarm
