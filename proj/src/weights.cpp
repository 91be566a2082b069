#include "forkalg/weights.hpp"

#include <algorithm>
#include <sstream>

namespace forkalg {

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
    Permutation p;
    p.img.resize(one_based.size());
    std::vector<bool> seen(one_based.size(), false);
    for (size_t j = 0; j < one_based.size(); ++j) {
        int v = one_based[j];
        if (v < 1 || v > static_cast<int>(one_based.size()) || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v - 1)] = true;
        p.img[j] = v - 1;
    }
    return p;
}

Permutation Permutation::times_si(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("times_si: index out of range");
    Permutation p = *this;
    for (auto& v : p.img) {
        if (v == i - 1) v = i;
        else if (v == i) v = i - 1;
    }
    return p;
}

bool Permutation::right_descent(int i) const {
    int pos_i = -1, pos_i1 = -1;
    for (size_t j = 0; j < img.size(); ++j) {
        if (img[j] == i - 1) pos_i = static_cast<int>(j);
        if (img[j] == i) pos_i1 = static_cast<int>(j);
    }
    return pos_i > pos_i1;
}

std::vector<int> Permutation::reduced_word() const {
    // Greedy: repeatedly strip the first descent from the left.
    std::vector<int> word;
    Permutation w = *this;
    for (;;) {
        int i = 0;
        for (int j = 1; j < w.size(); ++j) {
            if (w.img[static_cast<size_t>(j - 1)] > w.img[static_cast<size_t>(j)]) { i = j; break; }
        }
        if (i == 0) break;
        word.push_back(i);
        w = w.si_times(i);
    }
    return word;
}

std::string Permutation::str() const {
    std::string out;
    for (size_t j = 0; j < img.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(img[j] + 1);
    }
    return out;
}

Permutation Permutation::parse(const std::string& text, int m) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        vals.push_back(std::stoi(item));
    }
    if (static_cast<int>(vals.size()) != m)
        throw std::invalid_argument("permutation has wrong size: " + text);
    return from_one_line(vals);
}

Permutation word_to_perm(const std::vector<int>& word, int m) {
    Permutation p = Permutation::identity(m);
    for (int i : word) p = p * Permutation::transposition(i, m);
    return p;
}

Permutation longest_element(int m) {
    Permutation p;
    p.img.resize(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) p.img[static_cast<size_t>(j)] = m - 1 - j;
    return p;
}

std::vector<Permutation> symmetric_group(int m) {
    std::vector<int> one_line(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) one_line[static_cast<size_t>(j)] = j + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(one_line));
    } while (std::next_permutation(one_line.begin(), one_line.end()));
    return out;
}

Weight Weight::parse(const std::string& text) {
    std::vector<bool> up;
    up.reserve(text.size());
    for (char c : text) {
        if (c == '^') up.push_back(true);
        else if (c == 'v') up.push_back(false);
        else throw std::invalid_argument("weight text must use only '^' and 'v': " + text);
    }
    if (up.empty()) throw std::invalid_argument("empty weight");
    return Weight(std::move(up));
}

Weight Weight::identity_weight(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("identity_weight: k out of range");
    std::vector<bool> up(static_cast<size_t>(n), false);
    for (int i = 0; i < k; ++i) up[static_cast<size_t>(i)] = true;
    return Weight(std::move(up));
}

std::vector<int> Weight::wedge_positions() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i)
        if (wedge_at(i)) out.push_back(i);
    return out;
}

std::vector<int> Weight::vee_positions() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i)
        if (!wedge_at(i)) out.push_back(i);
    return out;
}

Weight Weight::acted_by(const Permutation& z) const {
    if (z.size() != n()) throw std::invalid_argument("acted_by: size mismatch");
    Permutation zi = z.inverse();
    std::vector<bool> up(static_cast<size_t>(n()));
    for (int i = 1; i <= n(); ++i) up[static_cast<size_t>(i - 1)] = wedge_at(zi.apply(i));
    return Weight(std::move(up));
}

Weight Weight::acted_by_word(const std::vector<int>& word) const {
    Weight w = *this;
    for (int i : word) w = w.swapped(i);
    return w;
}

std::string Weight::str() const {
    std::string out;
    for (int i = 1; i <= n(); ++i) out += wedge_at(i) ? '^' : 'v';
    return out;
}

Encodings encodings(const Weight& w) {
    Encodings e;
    e.wedge_pos = w.wedge_positions();
    e.vee_pos = w.vee_positions();
    const int k = w.k();
    e.wedge_dist.resize(e.wedge_pos.size());
    for (size_t i = 0; i < e.wedge_pos.size(); ++i)
        e.wedge_dist[i] = e.wedge_pos[i] - static_cast<int>(i) - 1;
    e.vee_dist.resize(e.vee_pos.size());
    for (size_t j = 0; j < e.vee_pos.size(); ++j)
        e.vee_dist[j] = k + static_cast<int>(j) + 1 - e.vee_pos[j];
    e.b_seq.resize(static_cast<size_t>(w.n()));
    for (int i = 1; i <= w.n(); ++i) {
        int wedges_right = 0;
        for (int j = i + 1; j <= w.n(); ++j) wedges_right += w.wedge_at(j) ? 1 : 0;
        e.b_seq[static_cast<size_t>(i - 1)] = wedges_right + 1;
    }
    return e;
}

BSequence b_sequence(const Weight& w) { return BSequence(encodings(w).b_seq); }

ReducedWords reduced_words(const Weight& w) {
    Encodings e = encodings(w);
    ReducedWords rw;
    // wedge word: z = t^{^}_{k, z^_k} ... t^{^}_{1, z^_1} with
    // t^{^}_{i,l} = s_i s_{i+1} ... s_{i+l-1}.
    for (int i = static_cast<int>(e.wedge_dist.size()); i >= 1; --i) {
        int l = e.wedge_dist[static_cast<size_t>(i - 1)];
        for (int t = 0; t < l; ++t) rw.wedge_word.push_back(i + t);
    }
    // vee word: z = t^{v}_{k+1, z_v_{k+1}} ... t^{v}_{n, z_v_n} with
    // t^{v}_{k+i,l} = s_{k+i-1} s_{k+i-2} ... s_{k+i-l}.
    const int k = w.k();
    for (size_t j = 0; j < e.vee_dist.size(); ++j) {
        int idx = k + static_cast<int>(j) + 1;
        int l = e.vee_dist[j];
        for (int t = 1; t <= l; ++t) rw.vee_word.push_back(idx - t);
    }
    return rw;
}

Permutation weight_to_perm(const Weight& w) {
    return word_to_perm(reduced_words(w).vee_word, w.n());
}

int weight_length(const Weight& w) {
    int len = 0;
    for (int d : encodings(w).vee_dist) len += d;
    return len;
}

std::vector<Weight> block(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("block: k out of range");
    std::vector<Weight> out;
    std::vector<int> vee(static_cast<size_t>(n - k));
    for (int j = 0; j < n - k; ++j) vee[static_cast<size_t>(j)] = j + 1;
    // iterate combinations of vee positions in ascending lexicographic order
    for (;;) {
        std::vector<bool> up(static_cast<size_t>(n), true);
        for (int p : vee) up[static_cast<size_t>(p - 1)] = false;
        out.emplace_back(std::move(up));
        int i = n - k - 1;
        while (i >= 0 && vee[static_cast<size_t>(i)] == k + i + 1) --i;
        if (i < 0) break;
        ++vee[static_cast<size_t>(i)];
        for (int j = i + 1; j < n - k; ++j)
            vee[static_cast<size_t>(j)] = vee[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

bool bruhat_leq(const Weight& w1, const Weight& w2) {
    if (w1.n() != w2.n() || w1.k() != w2.k())
        throw std::invalid_argument("bruhat_leq: weights in different blocks");
    std::vector<int> v1 = w1.vee_positions(), v2 = w2.vee_positions();
    for (size_t i = 0; i < v1.size(); ++i)
        if (v1[i] > v2[i]) return false;
    return true;
}

int defect(const Weight& w) {
    int d = 0;
    bool seen_vee = false;
    for (int i = 1; i <= w.n(); ++i) {
        if (w.wedge_at(i)) d += seen_vee ? 1 : 0;
        else seen_vee = true;
    }
    return d;
}

bool maximal_defect(const Weight& w) {
    // Maximal within the block: starts with a vee, or has no vees at all.
    return w.k() == w.n() || !w.wedge_at(1);
}

Weight tilde(const Weight& w) {
    if (maximal_defect(w)) return w;
    // not maximal, so the first wedge sits left of the first vee
    int a = w.wedge_positions().front(), b = w.vee_positions().front();
    std::string s = w.str();
    std::swap(s[static_cast<size_t>(a - 1)], s[static_cast<size_t>(b - 1)]);
    return Weight::parse(s);
}

}  // namespace forkalg
