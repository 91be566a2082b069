#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace forkalg {

using Int = mpz_class;
using Rat = mpq_class;

// Laurent polynomial in the grading variable v with exact integer
// coefficients. Zero coefficients are never stored.
class LaurentV {
public:
    LaurentV() = default;
    explicit LaurentV(Int constant) {
        if (constant != 0) coeffs_[0] = std::move(constant);
    }
    static LaurentV monomial(int exp, Int coeff = Int(1)) {
        LaurentV r;
        if (coeff != 0) r.coeffs_[exp] = std::move(coeff);
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    Int coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        Int& slot = coeffs_[exp];
        slot += c;
        if (slot == 0) coeffs_.erase(exp);
    }

    LaurentV& operator+=(const LaurentV& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentV& operator-=(const LaurentV& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentV operator+(LaurentV a, const LaurentV& b) { return a += b; }
    friend LaurentV operator-(LaurentV a, const LaurentV& b) { return a -= b; }

    friend LaurentV operator*(const LaurentV& a, const LaurentV& b) {
        LaurentV r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentV& operator*=(const LaurentV& o) { return *this = *this * o; }

    friend bool operator==(const LaurentV& a, const LaurentV& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentV& a, const LaurentV& b) { return !(a == b); }

    // bar involution: v -> v^-1
    LaurentV bar() const {
        LaurentV r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    // v -> v^2 substitution
    LaurentV subst_v_squared() const {
        LaurentV r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[2 * e] = c;
        return r;
    }

    LaurentV shifted(int d) const {
        LaurentV r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + d] = c;
        return r;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    int min_exp() const { return coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.rbegin()->first; }

    // All exponents >= 1, as required of Kazhdan-Lusztig coefficients
    // below the top term.
    bool in_v_times_Zv() const {
        return coeffs_.empty() || coeffs_.begin()->first >= 1;
    }

    // Coefficients symmetric about (min+max)/2.
    bool is_palindromic() const {
        if (coeffs_.empty()) return true;
        int lo = min_exp(), hi = max_exp();
        for (const auto& [e, c] : coeffs_)
            if (coeff(lo + hi - e) != c) return false;
        return true;
    }

    // Rendered as in "v^-2+2+v^2": ascending exponents, no explicit '*'.
    std::string str() const;

private:
    std::map<int, Int> coeffs_;
};

inline std::string LaurentV::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? "-" : "+";
            if (a < 0) a = -a;
        }
        first = false;
        std::string coeff_part;
        if (e == 0) {
            coeff_part = a.get_str();
        } else {
            if (a != 1) coeff_part = a.get_str();
            coeff_part += "v";
            if (e != 1) coeff_part += "^" + std::to_string(e);
        }
        out += coeff_part;
    }
    return out;
}

inline LaurentV quantum_factorial_zero(int k) {
    // [k]_0! with [m]_0 = (v^{2m}-1)/(v^2-1) = 1 + v^2 + ... + v^{2(m-1)}
    LaurentV r(Int(1));
    for (int m = 2; m <= k; ++m) {
        LaurentV bracket;
        for (int j = 0; j < m; ++j) bracket.add_term(2 * j, Int(1));
        r *= bracket;
    }
    return r;
}

}  // namespace forkalg
