#include "coralarm/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "coralarm/errors.hpp"

namespace coralarm {

Poly2 Poly2::term(BigInt coef, int xdeg, int ydeg) {
    Poly2 p;
    if (coef == 0) return p;
    p.c_.resize(static_cast<size_t>(xdeg) + 1);
    p.c_[static_cast<size_t>(xdeg)].resize(static_cast<size_t>(ydeg) + 1);
    p.c_[static_cast<size_t>(xdeg)][static_cast<size_t>(ydeg)] = std::move(coef);
    return p;
}

BigInt Poly2::coeff(int xdeg, int ydeg) const {
    if (xdeg < 0 || ydeg < 0 || static_cast<size_t>(xdeg) >= c_.size()) return 0;
    const auto& row = c_[static_cast<size_t>(xdeg)];
    if (static_cast<size_t>(ydeg) >= row.size()) return 0;
    return row[static_cast<size_t>(ydeg)];
}

bool Poly2::is_zero() const { return c_.empty(); }

int Poly2::x_degree() const { return static_cast<int>(c_.size()) - 1; }

int Poly2::y_degree() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

void Poly2::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) {
        auto& row = r.c_[i];
        if (o.c_[i].size() > row.size()) row.resize(o.c_[i].size());
        for (size_t j = 0; j < o.c_[i].size(); ++j) row[j] += o.c_[i][j];
    }
    r.trim();
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) {
        auto& row = r.c_[i];
        if (o.c_[i].size() > row.size()) row.resize(o.c_[i].size());
        for (size_t j = 0; j < o.c_[i].size(); ++j) row[j] -= o.c_[i][j];
    }
    r.trim();
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.resize(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j] == 0) continue;
            for (size_t k = 0; k < o.c_.size(); ++k)
                for (size_t l = 0; l < o.c_[k].size(); ++l) {
                    if (o.c_[k][l] == 0) continue;
                    auto& row = r.c_[i + k];
                    if (row.size() <= j + l) row.resize(j + l + 1);
                    row[j + l] += c_[i][j] * o.c_[k][l];
                }
        }
    r.trim();
    return r;
}

bool Poly2::operator==(const Poly2& o) const { return (*this - o).is_zero(); }

Poly2 Poly2::at_y(const BigInt& y) const {
    Poly2 r;
    for (size_t i = 0; i < c_.size(); ++i) {
        BigInt value = 0;
        for (size_t j = c_[i].size(); j-- > 0;) value = value * y + c_[i][j];
        r = r + term(value, static_cast<int>(i), 0);
    }
    return r;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    auto power = [](const std::string& var, size_t e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return var;
        return var + "^" + std::to_string(e);
    };
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) {
            const BigInt& coef = c_[i][j];
            if (coef == 0) continue;
            BigInt mag = coef < 0 ? BigInt(-coef) : coef;
            if (out.empty()) out += coef < 0 ? "-" : "";
            else out += coef < 0 ? " - " : " + ";
            std::string vars = power("x", i) + power("y", j);
            if (mag != 1 || vars.empty()) out += mag.str();
            out += vars;
        }
    return out;
}

std::vector<std::vector<BigInt>> series_coeffs(const RationalGF& f, int order) {
    if (f.den.coeff(0, 0) != 1)
        throw Error("series extraction needs a denominator with constant term 1");
    std::vector<std::vector<BigInt>> coeffs;
    for (int k = 0; k <= order; ++k) {
        // numerator row k minus the already-known convolution terms
        int ymax = std::max(0, f.num.y_degree());
        for (int i = 1; i <= k; ++i)
            ymax = std::max(ymax, f.den.y_degree() + static_cast<int>(coeffs[static_cast<size_t>(k - i)].size()));
        std::vector<BigInt> row(static_cast<size_t>(ymax) + 1);
        for (int j = 0; j <= f.num.y_degree(); ++j) row[static_cast<size_t>(j)] = f.num.coeff(k, j);
        for (int i = 1; i <= k; ++i)
            for (int j = 0; j <= f.den.y_degree(); ++j) {
                BigInt d = f.den.coeff(i, j);
                if (d == 0) continue;
                const auto& prev = coeffs[static_cast<size_t>(k - i)];
                for (size_t l = 0; l < prev.size(); ++l) row[static_cast<size_t>(j) + l] -= d * prev[l];
            }
        while (!row.empty() && row.back() == 0) row.pop_back();
        coeffs.push_back(std::move(row));
    }
    return coeffs;
}

namespace {

Poly2 t(long long c, int i, int j) { return Poly2::term(BigInt(c), i, j); }

Poly2 one_minus_x_squared() { return t(1, 0, 0) - t(2, 1, 0) + t(1, 2, 0); }

}  // namespace

RationalGF gf_cubes() {
    Poly2 num = t(1, 0, 0) + t(1, 1, 1) + t(1, 2, 0) + t(1, 2, 1) + t(1, 3, 0) + t(3, 3, 1) +
                t(1, 3, 2) + t(2, 4, 1) + t(2, 4, 2) + t(1, 5, 2);
    Poly2 den = t(1, 0, 0) - t(2, 1, 0) + t(1, 2, 0) - t(1, 3, 0) - t(1, 4, 0) - t(2, 4, 1) -
                t(2, 5, 1) - t(1, 5, 2) - t(1, 6, 2);
    return {num, den};
}

RationalGF gf_inner_factors() {
    Poly2 num = t(1, 3, 0) + t(1, 4, 0) + t(2, 4, 1) + t(2, 5, 1) + t(1, 5, 2) + t(1, 6, 2);
    return {num, one_minus_x_squared()};
}

RationalGF gf_final_factors() {
    Poly2 num = t(1, 0, 0) - t(1, 1, 0) + t(1, 2, 0) + t(1, 2, 1) + t(1, 3, 1) + t(1, 4, 1) +
                t(1, 4, 2) + t(1, 5, 2);
    return {num, one_minus_x_squared()};
}

std::vector<std::string> family_names() {
    return {"M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8",
            "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"};
}

RationalGF family_gf(const std::string& name) {
    Poly2 one_minus_x = t(1, 0, 0) - t(1, 1, 0);
    Poly2 sq = one_minus_x_squared();
    // r+ contributes x/(1-x), r* contributes 1/(1-x), a lone vertical is x,
    // a corner switch x^2 y, an end flip x y
    if (name == "M1") return {t(1, 5, 2), sq};
    if (name == "M2") return {t(1, 6, 2), sq};
    if (name == "M3") return {t(1, 4, 1), sq};
    if (name == "M4") return {t(1, 5, 1), sq};
    if (name == "M5") return {t(1, 4, 1), sq};
    if (name == "M6") return {t(1, 5, 1), sq};
    if (name == "M7") return {t(1, 3, 0), sq};
    if (name == "M8") return {t(1, 4, 0), sq};
    if (name == "F1") return {t(1, 0, 0), one_minus_x};
    if (name == "F2") return {t(1, 2, 1), one_minus_x};
    if (name == "F3") return {t(1, 3, 1), sq};
    if (name == "F4") return {t(1, 4, 2), sq};
    if (name == "F5") return {t(1, 5, 2), sq};
    if (name == "F6") return {t(1, 2, 0), sq};
    if (name == "F7") return {t(1, 3, 1), sq};
    if (name == "F8") return {t(1, 4, 1), sq};
    throw Error("unknown factor family " + name);
}

std::vector<std::pair<std::string, bool>> genfun_identity_checks() {
    RationalGF c = gf_cubes(), m = gf_inner_factors(), f = gf_final_factors();
    std::vector<std::pair<std::string, bool>> checks;

    // (1 + x C)(1 - M) = F, multiplied through by den(C) den(M)
    Poly2 lhs = (c.den + t(1, 1, 0) * c.num) * (m.den - m.num);
    Poly2 rhs = f.num * c.den;
    checks.emplace_back("(1 + xC)(1 - M) = F", lhs == rhs);

    // sum of the family series equals M and F
    Poly2 msum, fsum;
    for (int i = 1; i <= 8; ++i) {
        RationalGF mi = family_gf("M" + std::to_string(i));
        RationalGF fi = family_gf("F" + std::to_string(i));
        msum = msum + mi.num * (m.den == mi.den ? t(1, 0, 0) : t(1, 0, 0) - t(1, 1, 0));
        fsum = fsum + fi.num * (f.den == fi.den ? t(1, 0, 0) : t(1, 0, 0) - t(1, 1, 0));
    }
    checks.emplace_back("sum of M families = M", msum == m.num);
    checks.emplace_back("sum of F families = F", fsum == f.num);

    // C(x, -1) = 1/(1-x) in cleared form: num(C)|y=-1 (1 - x) = den(C)|y=-1
    Poly2 lhs_euler = c.num.at_y(BigInt(-1)) * (t(1, 0, 0) - t(1, 1, 0));
    checks.emplace_back("C(x,-1)(1-x) = 1", lhs_euler == c.den.at_y(BigInt(-1)));

    return checks;
}

}  // namespace coralarm
