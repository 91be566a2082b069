#pragma once

#include <optional>
#include <vector>

#include "forkalg/polyring.hpp"

namespace forkalg {

// Sequence (b_1,...,b_n) of positive integers indexing the ideal I_b.
struct BSequence {
    std::vector<int> b;

    BSequence() = default;
    explicit BSequence(std::vector<int> values) : b(std::move(values)) {}

    int n() const { return static_cast<int>(b.size()); }
    int at(int i) const { return b.at(static_cast<size_t>(i - 1)); }  // 1-based

    // b_i >= b_{i+1} >= b_i - 1, all entries positive.
    bool in_b_prime() const {
        for (int x : b)
            if (x < 1) return false;
        for (size_t i = 0; i + 1 < b.size(); ++i)
            if (!(b[i] >= b[i + 1] && b[i + 1] >= b[i] - 1)) return false;
        return true;
    }
    // Additionally b_n = 1 and b_1 <= k+1.
    bool in_b(int k) const {
        return in_b_prime() && !b.empty() && b.back() == 1 && b.front() <= k + 1;
    }

    Int dimension() const {
        Int d = 1;
        for (int x : b) d *= x;
        return d;
    }

    friend bool operator==(const BSequence& a, const BSequence& c) { return a.b == c.b; }
    friend bool operator!=(const BSequence& a, const BSequence& c) { return !(a == c); }
};

// R_b = Z[x_1..x_n]/I_b with I_b = (h_{b_1}(x_1), ..., h_{b_n}(x_1..x_n)).
// The generators form a Groebner basis (pairwise coprime leading terms
// x_i^{b_i}), so the monomials {x^j : 0 <= j_i < b_i} are a basis and
// reduction to normal form is well defined. General positive sequences are
// accepted; membership in B' is only a property flag.
class QuotientRing {
public:
    explicit QuotientRing(BSequence b);

    const BSequence& b() const { return b_; }
    int n() const { return b_.n(); }
    const std::vector<IntPolynomial>& generators() const { return gens_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    Int dimension() const { return b_.dimension(); }

    bool in_basis(const Monomial& m) const {
        for (int i = 1; i <= n(); ++i)
            if (m.exp(i) >= b_.at(i)) return false;
        return true;
    }

    // Unique r with p - r in I_b and every term of r in the monomial basis.
    // Repeatedly eliminates the largest offending term under the fixed order.
    IntPolynomial normal_form(const IntPolynomial& p) const;
    IntPolynomial normal_form(const Monomial& m) const {
        return normal_form(IntPolynomial::monomial(m));
    }

    // Sum of v^{2|j|} over the monomial basis.
    LaurentV graded_dim() const;

private:
    BSequence b_;
    std::vector<IntPolynomial> gens_;
    std::vector<Monomial> basis_;
};

// Basis of Hom_R(R_b, R_b'): monomials with c_i <= j_i < b'_i,
// c_i = max(b'_i - b_i, 0). Each monomial x^j is the morphism 1 -> x^j.
struct HomBasis {
    BSequence src;
    BSequence tgt;
    std::vector<int> c;
    std::vector<Monomial> monomials;

    bool contains(const Monomial& m) const {
        for (size_t i = 0; i < c.size(); ++i)
            if (m.e[i] < c[i] || m.e[i] >= tgt.b[i]) return false;
        return true;
    }
    // Sum of v^{2|j|} over the basis.
    LaurentV graded_dim() const {
        LaurentV g;
        for (const Monomial& m : monomials) g.add_term(m.degree(), Int(1));
        return g;
    }
};

HomBasis hom_basis(const BSequence& b, const BSequence& b_prime);

// The hom-space duality: 1 -> p becomes 1 -> x^{b-1}/x^{b'-1} * p.
// Maps the hom basis for b -> b' bijectively onto the one for b' -> b.
Monomial theta_dual(const Monomial& m, const BSequence& b, const BSequence& b_prime);

}  // namespace forkalg
