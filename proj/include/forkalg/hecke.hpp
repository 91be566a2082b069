#pragma once

#include <map>

#include "forkalg/weights.hpp"

namespace forkalg {

// Element of the Hecke algebra of S_n in the standard basis, Soergel
// normalization: H_i^2 = (v^{-1} - v) H_i + 1.
class HeckeElement {
public:
    HeckeElement() : n_(0) {}
    explicit HeckeElement(int n) : n_(n) {}
    static HeckeElement unit(int n) {
        HeckeElement h(n);
        h.terms_[Permutation::identity(n)] = LaurentV(Int(1));
        return h;
    }
    static HeckeElement standard(const Permutation& w) {
        HeckeElement h(w.size());
        h.terms_[w] = LaurentV(Int(1));
        return h;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, LaurentV>& terms() const { return terms_; }

    LaurentV coeff(const Permutation& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentV() : it->second;
    }

    void add_term(const Permutation& w, const LaurentV& c) {
        if (c.is_zero()) return;
        LaurentV& slot = terms_[w];
        slot += c;
        if (slot.is_zero()) terms_.erase(w);
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        for (const auto& [w, c] : o.terms_) {
            LaurentV neg;
            neg -= c;
            add_term(w, neg);
        }
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

    HeckeElement scaled(const LaurentV& s) const {
        HeckeElement r(n_);
        for (const auto& [w, c] : terms_) r.add_term(w, c * s);
        return r;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

private:
    int n_;
    std::map<Permutation, LaurentV> terms_;
};

// x * H_i via the length rule H_w H_i = H_{w s_i} (+ (v^{-1}-v) H_w).
HeckeElement mult_right_Hi(const HeckeElement& x, int i);
// x * H_w along a reduced word of w.
HeckeElement mult_right_standard(const HeckeElement& x, const Permutation& w);

// Bar involution, semilinear over v -> v^{-1}; uses H_i^{-1} = H_i + v - v^{-1}.
HeckeElement bar(const HeckeElement& x);

// Canonical (Kazhdan-Lusztig) bases of one S_n, built by the inductive
// algorithm (multiply C_{w'} by H_i + v, subtract constant-term multiples
// of lower canonical elements) and memoized. The table is built on demand,
// single-threaded; freeze before sharing across workers.
class HeckeContext {
public:
    explicit HeckeContext(int n) : n_(n) {}

    int n() const { return n_; }
    const HeckeElement& canonical_basis(const Permutation& w);

    // KL polynomial P_{w',w} = coefficient of H_{w'} in C_w.
    LaurentV kl_polynomial(const Permutation& w_prime, const Permutation& w) {
        return canonical_basis(w).coeff(w_prime);
    }

private:
    int n_;
    std::map<Permutation, HeckeElement> memo_;
};

// The permutation w_k z for a weight (w_k = longest element of S_k embedded
// in S_n, z the coset representative of the weight).
Permutation wk_z(const Weight& w);

// Closed summation formula for C_{w_k z}: sum over w' in S_k and one index
// per vee-distance entry, with coefficient v^{ell(w_k z) - ell(w') - sum i_j}.
HeckeElement explicit_C(const Weight& z);

// v^{-ell(w_k z)} * sum_{w'} P_{w', w_k z}(v^2), the graded dimension of the
// cyclic module attached to the weight.
LaurentV graded_dim_soergel(HeckeContext& ctx, const Weight& z);

// Number of standard terms in C_{s_j w_k z}:
// k! * prod(z^vee_i + 1) with the factor at i = j+1 bumped to z^vee_{j+1} + 2.
// Requires z^vee_j = z^vee_{j+1} for the given index j in k+1..n-1.
Int cor34_count(const Weight& z, int j);

// The sequence presenting C_{s_j w_k z} as a quotient ring: a_i = b^z_i
// except a_l = b^z_l + 1 at l = j - z^vee_j, so that prod a_i matches
// cor34_count.
BSequence cor34_a_sequence(const Weight& z, int j);

}  // namespace forkalg
