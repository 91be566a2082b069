#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "forkalg/laurent.hpp"

namespace forkalg {

// Monomial in x_1..x_n, stored as the exponent at each slot.
// Polynomial degree is 2 * (sum of exponents) since deg x_i = 2.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int n) : e(n, 0) {}
    static Monomial var(int i, int n, int power = 1) {
        Monomial m(n);
        m.e.at(i - 1) = power;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int exp(int i) const { return e.at(i - 1); }  // 1-based
    int total() const {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    int degree() const { return 2 * total(); }
    bool is_one() const { return total() == 0; }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (size_t i = 0; i < r.e.size(); ++i) {
            r.e[i] = a.e[i] - b.e[i];
            if (r.e[i] < 0) throw std::invalid_argument("monomial division not exact");
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const;
};

// The fixed monomial order: lexicographic with x_n > x_{n-1} > ... > x_1.
// All leading-term logic in the library goes through this comparator.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
    }
};

inline bool monomial_less(const Monomial& a, const Monomial& b) { return MonomialLess{}(a, b); }

// Sparse multivariate polynomial over Z.
class IntPolynomial {
public:
    using TermMap = std::map<Monomial, Int, MonomialLess>;

    IntPolynomial() : n_(0) {}
    explicit IntPolynomial(int n) : n_(n) {}
    IntPolynomial(int n, Int constant) : n_(n) {
        if (constant != 0) terms_[Monomial(n)] = std::move(constant);
    }
    static IntPolynomial monomial(Monomial m, Int c = Int(1)) {
        IntPolynomial p(m.nvars());
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }
    static IntPolynomial variable(int i, int n) { return monomial(Monomial::var(i, n)); }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        check_same_n(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        check_same_n(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    IntPolynomial operator-() const {
        IntPolynomial r(n_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        a.check_same_n(b);
        IntPolynomial r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    // Largest term under the fixed order; polynomial must be nonzero.
    std::pair<Monomial, Int> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    // Swap x_i <-> x_{i+1}.
    IntPolynomial apply_si(int i) const;

    std::string str() const;
    static IntPolynomial parse(const std::string& text, int n);

private:
    void check_same_n(const IntPolynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("polynomial variable counts differ");
    }

    int n_;
    TermMap terms_;
};

// h_j in the variables x_{vars[0]},...,x_{vars[m-1]} inside Z[x_1..x_n].
// h_0 = 1 and h_j over zero variables is 0 for j >= 1.
IntPolynomial complete_symmetric(int j, const std::vector<int>& vars, int n);

// h_j(x_1,...,x_m)
IntPolynomial complete_symmetric_initial(int j, int m, int n);

// Demazure operator (f - s_i f)/(x_i - x_{i+1}); the division is always exact.
IntPolynomial demazure(int i, const IntPolynomial& f);

// P_i(f) = f - x_i * demazure(i, f); lands in the s_i-invariants.
IntPolynomial p_operator(int i, const IntPolynomial& f);

}  // namespace forkalg
