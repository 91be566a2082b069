#pragma once

#include <string>
#include <vector>

#include "forkalg/quotient.hpp"

namespace forkalg {

// Permutation of {1..m} in one-line notation (0-based storage).
//
// Words multiply left to right: the product u*v means "u first, then v",
// i.e. (u*v)(j) = v(u(j)). With this convention a word s_{i_1}...s_{i_r}
// acts on an up/down sequence by swapping positions i_1, i_1+1 first.
struct Permutation {
    std::vector<int> img;  // img[j] = image of j (0-based)

    Permutation() = default;
    static Permutation identity(int m) {
        Permutation p;
        p.img.resize(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) p.img[static_cast<size_t>(j)] = j;
        return p;
    }
    static Permutation transposition(int i, int m) {  // s_i, 1-based, 1 <= i < m
        Permutation p = identity(m);
        std::swap(p.img[static_cast<size_t>(i - 1)], p.img[static_cast<size_t>(i)]);
        return p;
    }
    static Permutation from_one_line(const std::vector<int>& one_based);

    int size() const { return static_cast<int>(img.size()); }
    int apply(int j) const { return img[static_cast<size_t>(j - 1)] + 1; }  // 1-based

    bool is_identity() const {
        for (int j = 0; j < size(); ++j)
            if (img[static_cast<size_t>(j)] != j) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation p;
        p.img.resize(img.size());
        for (size_t j = 0; j < img.size(); ++j) p.img[static_cast<size_t>(img[j])] = static_cast<int>(j);
        return p;
    }

    int length() const {  // inversion count
        int len = 0;
        for (size_t a = 0; a < img.size(); ++a)
            for (size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) ++len;
        return len;
    }

    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        Permutation p;
        p.img.resize(u.img.size());
        for (size_t j = 0; j < u.img.size(); ++j) p.img[j] = v.img[static_cast<size_t>(u.img[j])];
        return p;
    }

    // w * s_i: swaps the values i, i+1; lengthens iff value i sits left of i+1.
    Permutation times_si(int i) const;
    bool right_descent(int i) const;  // ell(w s_i) < ell(w)

    // s_i * w: swaps positions i, i+1; lengthens iff img[i-1] < img[i].
    Permutation si_times(int i) const {
        Permutation p = *this;
        std::swap(p.img[static_cast<size_t>(i - 1)], p.img[static_cast<size_t>(i)]);
        return p;
    }

    // Lexicographically smallest reduced word, letters 1-based.
    std::vector<int> reduced_word() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img < b.img; }

    std::string str() const;  // one-line, comma separated, 1-based
    static Permutation parse(const std::string& text, int m);
};

Permutation word_to_perm(const std::vector<int>& word, int m);
Permutation longest_element(int m);
// All of S_m sorted lexicographically by one-line notation (identity first).
std::vector<Permutation> symmetric_group(int m);

// Up/down sequence of length n with k wedges; text form "^^v^v".
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<bool> wedge_at) : up_(std::move(wedge_at)) {}
    static Weight parse(const std::string& text);
    static Weight identity_weight(int n, int k);  // ^^..^vv..v

    int n() const { return static_cast<int>(up_.size()); }
    int k() const {
        int c = 0;
        for (bool b : up_) c += b ? 1 : 0;
        return c;
    }
    bool wedge_at(int pos) const { return up_.at(static_cast<size_t>(pos - 1)); }  // 1-based

    std::vector<int> wedge_positions() const;  // 1-based, ascending
    std::vector<int> vee_positions() const;

    Weight swapped(int i) const {  // right action of s_i: swap positions i, i+1
        Weight w = *this;
        std::swap(w.up_[static_cast<size_t>(i - 1)], w.up_[static_cast<size_t>(i)]);
        return w;
    }
    Weight acted_by(const Permutation& z) const;       // this . z
    Weight acted_by_word(const std::vector<int>& word) const;

    std::string str() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.up_ == b.up_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) {
        return a.vee_positions() < b.vee_positions();
    }

private:
    std::vector<bool> up_;
};

// The four encodings of the coset representative behind a weight.
struct Encodings {
    std::vector<int> wedge_pos;   // size k
    std::vector<int> vee_pos;     // size n-k
    std::vector<int> wedge_dist;  // z^wedge, size k
    std::vector<int> vee_dist;    // z^vee, entries indexed k+1..n stored from 0
    std::vector<int> b_seq;       // size n
};

Encodings encodings(const Weight& w);
BSequence b_sequence(const Weight& w);

struct ReducedWords {
    std::vector<int> wedge_word;
    std::vector<int> vee_word;
};
// Reduced expressions built from the wedge- and vee-distance sequences.
ReducedWords reduced_words(const Weight& w);

// Element of D_{n,k} with identity_weight . perm == w (via the vee word).
Permutation weight_to_perm(const Weight& w);
int weight_length(const Weight& w);  // sum of z^vee entries

// All C(n,k) weights, ascending by vee-position tuple (a Bruhat linear
// extension with the minimum first).
std::vector<Weight> block(int n, int k);

// w1 <= w2 iff every vee of w1 is weakly left of the matching vee of w2.
bool bruhat_leq(const Weight& w1, const Weight& w2);

int defect(const Weight& w);       // count of wedges with a vee on their left
bool maximal_defect(const Weight& w);
Weight tilde(const Weight& w);     // swap first vee and first wedge unless already maximal

}  // namespace forkalg
