#include "forkalg/quotient.hpp"

#include <algorithm>

namespace forkalg {

QuotientRing::QuotientRing(BSequence b) : b_(std::move(b)) {
    const int nn = b_.n();
    if (nn == 0) throw std::invalid_argument("QuotientRing: empty b-sequence");
    for (int x : b_.b)
        if (x < 1) throw std::invalid_argument("QuotientRing: non-positive entry in b-sequence");
    gens_.reserve(static_cast<size_t>(nn));
    for (int i = 1; i <= nn; ++i) gens_.push_back(complete_symmetric_initial(b_.at(i), i, nn));

    // Basis monomials in ascending monomial order: odometer over the slots,
    // most significant slot last.
    Monomial m(nn);
    for (;;) {
        basis_.push_back(m);
        int i = 0;
        while (i < nn && m.e[static_cast<size_t>(i)] + 1 >= b_.b[static_cast<size_t>(i)]) {
            m.e[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == nn) break;
        ++m.e[static_cast<size_t>(i)];
    }
    std::sort(basis_.begin(), basis_.end(), MonomialLess{});
}

IntPolynomial QuotientRing::normal_form(const IntPolynomial& p) const {
    if (p.nvars() != n()) throw std::invalid_argument("normal_form: wrong variable count");
    IntPolynomial r = p;
    for (;;) {
        // Largest term with some exponent >= b_i; for that term reduce at the
        // largest such slot. Leading term of gens_[i-1] is x_i^{b_i}, so the
        // step replaces the term by strictly smaller ones.
        const Monomial* victim = nullptr;
        Int coeff;
        int slot = 0;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            for (int i = n(); i >= 1; --i) {
                if (it->first.exp(i) >= b_.at(i)) {
                    victim = &it->first;
                    coeff = it->second;
                    slot = i;
                    break;
                }
            }
            if (victim) break;
        }
        if (!victim) return r;
        Monomial quo = *victim;
        quo.e[static_cast<size_t>(slot - 1)] -= b_.at(slot);
        // subtract coeff * quo * h_{b_slot}(x_1..x_slot) term by term
        for (const auto& [gm, gc] : gens_[static_cast<size_t>(slot - 1)].terms())
            r.add_term(quo * gm, -coeff * gc);
    }
}

LaurentV QuotientRing::graded_dim() const {
    LaurentV g;
    for (const Monomial& m : basis_) g.add_term(m.degree(), Int(1));
    return g;
}

HomBasis hom_basis(const BSequence& b, const BSequence& b_prime) {
    if (b.n() != b_prime.n()) throw std::invalid_argument("hom_basis: mismatched lengths");
    const int nn = b.n();
    HomBasis hb;
    hb.src = b;
    hb.tgt = b_prime;
    hb.c.resize(static_cast<size_t>(nn));
    for (int i = 1; i <= nn; ++i)
        hb.c[static_cast<size_t>(i - 1)] = std::max(b_prime.at(i) - b.at(i), 0);
    Monomial m(nn);
    for (int i = 0; i < nn; ++i) m.e[static_cast<size_t>(i)] = hb.c[static_cast<size_t>(i)];
    for (;;) {
        hb.monomials.push_back(m);
        int i = 0;
        while (i < nn && m.e[static_cast<size_t>(i)] + 1 >= b_prime.b[static_cast<size_t>(i)]) {
            m.e[static_cast<size_t>(i)] = hb.c[static_cast<size_t>(i)];
            ++i;
        }
        if (i == nn) break;
        ++m.e[static_cast<size_t>(i)];
    }
    std::sort(hb.monomials.begin(), hb.monomials.end(), MonomialLess{});
    return hb;
}

Monomial theta_dual(const Monomial& m, const BSequence& b, const BSequence& b_prime) {
    Monomial r = m;
    for (size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] += b.b[i] - b_prime.b[i];
        int c_tgt = std::max(b.b[i] - b_prime.b[i], 0);
        if (r.e[i] < c_tgt || r.e[i] >= b.b[i])
            throw std::logic_error("theta_dual: image not in target hom basis");
    }
    return r;
}

}  // namespace forkalg
