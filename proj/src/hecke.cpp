#include "forkalg/hecke.hpp"

#include <algorithm>

namespace forkalg {

HeckeElement mult_right_Hi(const HeckeElement& x, int i) {
    HeckeElement r(x.n());
    LaurentV vinv_minus_v = LaurentV::monomial(-1) - LaurentV::monomial(1);
    for (const auto& [w, c] : x.terms()) {
        Permutation ws = w.times_si(i);
        if (w.right_descent(i)) {
            r.add_term(ws, c);
            r.add_term(w, c * vinv_minus_v);
        } else {
            r.add_term(ws, c);
        }
    }
    return r;
}

HeckeElement mult_right_standard(const HeckeElement& x, const Permutation& w) {
    HeckeElement r = x;
    for (int i : w.reduced_word()) r = mult_right_Hi(r, i);
    return r;
}

HeckeElement bar(const HeckeElement& x) {
    // bar(H_w) = product over a reduced word of w of (H_i + v - v^{-1}),
    // taken left to right; coefficients go through v -> v^{-1}.
    HeckeElement r(x.n());
    LaurentV v_minus_vinv = LaurentV::monomial(1) - LaurentV::monomial(-1);
    for (const auto& [w, c] : x.terms()) {
        HeckeElement acc = HeckeElement::unit(x.n());
        for (int i : w.reduced_word()) {
            acc = mult_right_Hi(acc, i) + acc.scaled(v_minus_vinv);
        }
        r += acc.scaled(c.bar());
    }
    return r;
}

const HeckeElement& HeckeContext::canonical_basis(const Permutation& w) {
    if (w.size() != n_) throw std::invalid_argument("canonical_basis: wrong group");
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;

    HeckeElement c(n_);
    if (w.is_identity()) {
        c = HeckeElement::unit(n_);
    } else {
        std::vector<int> word = w.reduced_word();
        int i = word.back();
        Permutation w_prev = w.times_si(i);  // strictly shorter
        HeckeElement x = mult_right_Hi(canonical_basis(w_prev), i);
        x += canonical_basis(w_prev).scaled(LaurentV::monomial(1));
        // Subtract constant-term multiples of lower canonical elements until
        // every coefficient below w lies in v Z[v].
        for (;;) {
            Permutation worst;
            Int correction = 0;
            int best_len = -1;
            for (const auto& [u, coeff] : x.terms()) {
                if (u == w) continue;
                Int c0 = coeff.coeff(0);
                if (c0 != 0 && u.length() > best_len) {
                    worst = u;
                    correction = c0;
                    best_len = u.length();
                }
            }
            if (best_len < 0) break;
            x -= canonical_basis(worst).scaled(LaurentV(correction));
        }
        c = std::move(x);
    }
    return memo_.emplace(w, std::move(c)).first->second;
}

Permutation wk_z(const Weight& w) {
    const int n = w.n(), k = w.k();
    Permutation wk = Permutation::identity(n);
    // longest element of the parabolic S_k inside S_n
    for (int a = 0; a < k; ++a) wk.img[static_cast<size_t>(a)] = k - 1 - a;
    return wk * weight_to_perm(w);
}

HeckeElement explicit_C(const Weight& z) {
    const int n = z.n(), k = z.k();
    Encodings e = encodings(z);
    const int ell_wkz = longest_element(k).length() + weight_length(z);

    // Pre-build the partial products t^{v}_{k+1,i_{k+1}} ... t^{v}_{j,i_j} as
    // words; enumerate the index boxes by an odometer.
    std::vector<int> caps = e.vee_dist;  // sizes of the boxes
    std::vector<int> idx(caps.size(), 0);
    HeckeElement out(n);
    const auto sk = symmetric_group(k);
    for (;;) {
        std::vector<int> word;
        for (size_t j = 0; j < idx.size(); ++j) {
            int block_index = k + static_cast<int>(j) + 1;
            for (int t = 1; t <= idx[j]; ++t) word.push_back(block_index - t);
        }
        Permutation tail = word_to_perm(word, n);
        int isum = 0;
        for (int v : idx) isum += v;
        for (const Permutation& wp : sk) {
            // embed w' in S_n
            Permutation w_embedded = Permutation::identity(n);
            for (int a = 0; a < k; ++a) w_embedded.img[static_cast<size_t>(a)] = wp.img[static_cast<size_t>(a)];
            Permutation term = w_embedded * tail;
            out.add_term(term, LaurentV::monomial(ell_wkz - wp.length() - isum));
        }
        size_t j = 0;
        while (j < idx.size() && idx[j] == caps[j]) { idx[j] = 0; ++j; }
        if (j == idx.size()) break;
        ++idx[j];
    }
    return out;
}

LaurentV graded_dim_soergel(HeckeContext& ctx, const Weight& z) {
    Permutation w = wk_z(z);
    const HeckeElement& c = ctx.canonical_basis(w);
    LaurentV sum;
    for (const auto& [u, coeff] : c.terms()) sum += coeff.subst_v_squared();
    return sum.shifted(-w.length());
}

Int cor34_count(const Weight& z, int j) {
    const int n = z.n(), k = z.k();
    if (j < k + 1 || j > n - 1) throw std::invalid_argument("cor34_count: index out of range");
    Encodings e = encodings(z);
    auto zv = [&](int i) { return e.vee_dist.at(static_cast<size_t>(i - k - 1)); };
    if (zv(j) != zv(j + 1))
        throw std::invalid_argument("cor34_count: requires equal vee distances at j, j+1");
    Int count = 1;
    for (int m = 2; m <= k; ++m) count *= m;
    for (int i = k + 1; i <= n; ++i) count *= zv(i) + (i == j + 1 ? 2 : 1);
    return count;
}

BSequence cor34_a_sequence(const Weight& z, int j) {
    Encodings e = encodings(z);
    const int k = z.k();
    int zvj = e.vee_dist.at(static_cast<size_t>(j - k - 1));
    if (zvj != e.vee_dist.at(static_cast<size_t>(j - k)))
        throw std::invalid_argument("cor34_a_sequence: requires equal vee distances at j, j+1");
    int l = j - zvj;
    BSequence a(e.b_seq);
    a.b.at(static_cast<size_t>(l - 1)) += 1;
    return a;
}

}  // namespace forkalg
