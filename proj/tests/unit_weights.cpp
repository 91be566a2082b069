#include <doctest.h>
#include <algorithm>
#include <functional>
#include <map>

#include "forkalg/weights.hpp"

using namespace forkalg;

TEST_CASE("permutation conventions: words act left to right") {
    // s t means s first, then t
    Permutation s = Permutation::transposition(1, 3);
    Permutation t = Permutation::transposition(2, 3);
    CHECK((s * t) == Permutation::from_one_line({3, 1, 2}));
    CHECK((t * s) == Permutation::from_one_line({2, 3, 1}));
    CHECK((s * t).length() == 2);
    CHECK(longest_element(3) == Permutation::from_one_line({3, 2, 1}));
    CHECK(longest_element(3).length() == 3);
    CHECK(word_to_perm({1, 2, 1}, 3) == longest_element(3));
    CHECK(word_to_perm({2, 1, 2}, 3) == longest_element(3));

    // right multiplication swaps values, left multiplication swaps positions
    Permutation w = Permutation::from_one_line({2, 3, 1});
    CHECK(w.times_si(1) == w * s);
    CHECK(w.si_times(1) == s * w);
    CHECK(w.reduced_word() == std::vector<int>{2, 1});  // its unique reduced word
    CHECK(word_to_perm(w.reduced_word(), 3) == w);
    for (const Permutation& u : symmetric_group(4)) {
        CHECK(word_to_perm(u.reduced_word(), 4) == u);
        CHECK(static_cast<int>(u.reduced_word().size()) == u.length());
    }
}

TEST_CASE("weight text and block enumeration") {
    Weight w = Weight::parse("^^v^vv^v");
    CHECK(w.n() == 8);
    CHECK(w.k() == 4);
    CHECK(w.str() == "^^v^vv^v");

    std::vector<Weight> blk = block(3, 2);
    REQUIRE(blk.size() == 3);
    // ascending vee-position tuples
    CHECK(blk[0].str() == "v^^");
    CHECK(blk[1].str() == "^v^");
    CHECK(blk[2].str() == "^^v");
    CHECK(block(8, 4).size() == 70);
    CHECK(block(4, 0).size() == 1);
    CHECK(block(4, 0)[0].str() == "vvvv");
}

TEST_CASE("encodings of the running example") {
    // z = s4 s5 s6 s3 acting on the identity weight of block(8,4)
    Weight e = Weight::identity_weight(8, 4);
    Weight z = e.acted_by_word({4, 5, 6, 3});
    CHECK(z.str() == "^^v^vv^v");
    Encodings enc = encodings(z);
    CHECK(enc.b_seq == std::vector<int>{4, 3, 3, 2, 2, 2, 1, 1});
    CHECK(enc.wedge_dist == std::vector<int>{0, 0, 1, 3});
    CHECK(enc.vee_dist == std::vector<int>{2, 1, 1, 0});
    CHECK(enc.vee_pos[0] == 3);

    ReducedWords rw = reduced_words(z);
    CHECK(rw.wedge_word == std::vector<int>{4, 5, 6, 3});
    CHECK(rw.vee_word == std::vector<int>{4, 3, 5, 6});
    CHECK(e.acted_by_word(rw.vee_word) == z);
    CHECK(weight_length(z) == 4);
    CHECK(weight_to_perm(z).length() == 4);
}

TEST_CASE("identity weight encodings") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            Weight e = Weight::identity_weight(n, k);
            Encodings enc = encodings(e);
            for (int d : enc.wedge_dist) CHECK(d == 0);
            for (int d : enc.vee_dist) CHECK(d == 0);
            for (int i = 1; i <= n; ++i)
                CHECK(enc.b_seq[static_cast<size_t>(i - 1)] == std::max(k - i, 0) + 1);
            CHECK(reduced_words(e).wedge_word.empty());
            CHECK(reduced_words(e).vee_word.empty());
        }
}

TEST_CASE("encodings are mutually inverse on whole blocks") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            std::map<std::vector<int>, Weight> by_b, by_wdist, by_vdist;
            for (const Weight& w : block(n, k)) {
                Encodings e = encodings(w);
                // rebuild from wedge positions
                std::vector<bool> up(static_cast<size_t>(n), false);
                for (int p : e.wedge_pos) up[static_cast<size_t>(p - 1)] = true;
                CHECK(Weight(up) == w);
                CHECK(by_b.emplace(e.b_seq, w).second);
                CHECK(by_wdist.emplace(e.wedge_dist, w).second);
                CHECK(by_vdist.emplace(e.vee_dist, w).second);
                CHECK(BSequence(e.b_seq).in_b(k));
                CHECK(weight_length(w) == weight_to_perm(w).length());
                CHECK(Weight::identity_weight(n, k).acted_by(weight_to_perm(w)) == w);
            }
            // every encoding separates the block, i.e. each is a bijection
            size_t expect = block(n, k).size();
            CHECK(by_b.size() == expect);
            CHECK(by_wdist.size() == expect);
            CHECK(by_vdist.size() == expect);
        }
}

TEST_CASE("bruhat order") {
    Weight a = Weight::parse("v^");
    Weight b = Weight::parse("^v");
    CHECK(bruhat_leq(a, a));
    CHECK(bruhat_leq(a, b));
    CHECK_FALSE(bruhat_leq(b, a));
    // antisymmetry and transitivity over a block
    std::vector<Weight> blk = block(5, 2);
    for (const Weight& w1 : blk)
        for (const Weight& w2 : blk) {
            if (bruhat_leq(w1, w2) && bruhat_leq(w2, w1)) CHECK(w1 == w2);
            for (const Weight& w3 : blk)
                if (bruhat_leq(w1, w2) && bruhat_leq(w2, w3)) CHECK(bruhat_leq(w1, w3));
        }
    CHECK_THROWS_AS(bruhat_leq(Weight::parse("v^"), Weight::parse("vv")),
                    std::invalid_argument);
}

namespace {

// classical Bruhat comparison through sorted-prefix dominance
bool perm_bruhat_leq(const Permutation& u, const Permutation& v) {
    const int m = u.size();
    for (int i = 1; i <= m; ++i) {
        std::vector<int> us, vs;
        for (int j = 1; j <= i; ++j) {
            us.push_back(u.apply(j));
            vs.push_back(v.apply(j));
        }
        std::sort(us.begin(), us.end(), std::greater<int>());
        std::sort(vs.begin(), vs.end(), std::greater<int>());
        for (int j = 0; j < i; ++j)
            if (us[static_cast<size_t>(j)] > vs[static_cast<size_t>(j)]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("weight order opposes the representative order") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (const Weight& w1 : block(n, k))
                for (const Weight& w2 : block(n, k))
                    CHECK(bruhat_leq(w1, w2) ==
                          perm_bruhat_leq(weight_to_perm(w2), weight_to_perm(w1)));
}

TEST_CASE("defect and the tilde involution") {
    CHECK(defect(Weight::parse("^^v")) == 0);
    CHECK(defect(Weight::parse("v^^")) == 2);
    CHECK(defect(Weight::parse("^v^v^")) == 2);
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            int best = -1;
            for (const Weight& w : block(n, k)) best = std::max(best, defect(w));
            for (const Weight& w : block(n, k)) {
                CHECK(maximal_defect(w) == (defect(w) == best));
                if (k < n)
                    CHECK(maximal_defect(w) == !w.wedge_at(1));
                CHECK(tilde(tilde(w)) == tilde(w));
                CHECK(maximal_defect(tilde(w)));
                CHECK(defect(tilde(w)) == best);
            }
        }
}
