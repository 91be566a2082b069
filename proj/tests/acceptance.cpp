// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Desk scale: full algebra builds up to n = 5, Hecke-level checks up
// to n = 6, exact arithmetic throughout.

#include <chrono>
#include <iostream>
#include <sstream>

#include "forkalg/verify.hpp"

using namespace forkalg;

namespace {

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
    void merge(const std::string& what, const CheckReport& r) {
        if (!r.pass) expect(false, what + ": " + r.summary());
    }
    void merge(const verify::SuiteResult& s) {
        if (!s.pass) {
            pass = false;
            for (const std::string& m : s.messages)
                if (notes.size() < 8) notes.push_back(s.name + ": " + m);
        }
    }
};

int overall = 0;

void report(int number, const std::string& title, const Criterion& c, double seconds) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << " ("
              << static_cast<int>(seconds * 1000) << " ms)\n";
    for (const std::string& m : c.notes) std::cout << "       " << m << "\n";
    if (!c.pass) overall = 1;
    std::cout.flush();
}

template <typename F>
void run(int number, const std::string& title, F&& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, title, c, dt);
}

Permutation sigma_of(const DiagramAlgebra& a, int idx) {
    return a.sk()[static_cast<size_t>(a.at(idx).sigma)];
}

}  // namespace

int main() {
    run(1, "golden examples", [](Criterion& c) {
        // Schubert staircase table for three strands
        SchubertTable t3(3);
        Permutation s = Permutation::transposition(1, 3), t = Permutation::transposition(2, 3);
        c.expect(t3.exponents(Permutation::identity(3)) == std::vector<int>{0, 0}, "table at e");
        c.expect(t3.exponents(s) == std::vector<int>{1, 0}, "table at s");
        c.expect(t3.exponents(t) == std::vector<int>{0, 1}, "table at t");
        c.expect(t3.exponents(s * t) == std::vector<int>{1, 1}, "table at st");
        c.expect(t3.exponents(t * s) == std::vector<int>{2, 0}, "table at ts");
        c.expect(t3.exponents(longest_element(3)) == std::vector<int>{2, 1}, "table at w_3");

        // encodings of the eight-vertex representative
        Weight z = Weight::identity_weight(8, 4).acted_by_word({4, 5, 6, 3});
        Encodings e = encodings(z);
        c.expect(e.b_seq == std::vector<int>{4, 3, 3, 2, 2, 2, 1, 1}, "b-sequence");
        c.expect(e.wedge_dist == std::vector<int>{0, 0, 1, 3}, "wedge distances");
        c.expect(e.vee_dist == std::vector<int>{2, 1, 1, 0}, "vee distances");

        // degrees 1, 5, 6 on the seven-vertex diagram
        Weight lower_w = Weight::parse("^v^^^^v"), upper_w = Weight::parse("v^^v^^^");
        Weight lam = Weight::parse("^^v^^^v");
        c.expect(lower_degree(lower_w, lam) == 1, "lower degree 1");
        c.expect(lower_degree(upper_w, lam) == 5, "upper degree 5");
        c.expect(OrientedForkDiagram{lower_w, lam, Permutation::identity(5), upper_w}.degree() == 6,
                 "total degree 6");

        // the recorded five-vertex product: -(a eta^pi d) with pi the longest
        // element and eta's vees at positions 2 and 5
        const DiagramAlgebra& a = verify::cached_algebra(5, 3, false);
        Permutation s1 = Permutation::transposition(1, 3);
        auto locate = [&](const char* lo, const char* et, const Permutation& sg, const char* up) {
            int sidx = -1;
            for (size_t i = 0; i < a.sk().size(); ++i)
                if (a.sk()[i] == sg) sidx = static_cast<int>(i);
            return a.basis_index(a.weight_index(Weight::parse(lo)), a.weight_index(Weight::parse(et)),
                                 sidx, a.weight_index(Weight::parse(up)));
        };
        int xi = locate("v^^^v", "^v^^v", s1, "v^^v^");
        int yi = locate("v^^v^", "^v^v^", Permutation::identity(3), "v^v^^");
        c.expect(xi >= 0 && yi >= 0, "factors exist in the basis");
        const auto& prod = a.product(xi, yi);
        bool matches_recorded_value = prod.size() == 1 && prod[0].second == -1 &&
                                      a.weight(a.at(prod[0].first).eta) == Weight::parse("^v^^v") &&
                                      sigma_of(a, prod[0].first) == longest_element(3);
        std::ostringstream got;
        for (const auto& [idx, coeff] : prod)
            got << coeff.get_str() << "*(eta=" << a.weight(a.at(idx).eta).str()
                << " sigma=" << sigma_of(a, idx).str() << ") ";
        c.expect(matches_recorded_value,
                 "recorded five-vertex product -(a eta^w3 d); computed: " + got.str());

        // The recorded intermediate monomial x1^3 x4 does reduce to
        // -(a eta^w3 d): reduction, illicit classification and staircase
        // inversion agree with the recorded continuation.
        Monomial inter(5);
        inter.e = {3, 0, 0, 1, 0};
        IntPolynomial nf =
            a.ring(a.weight_index(Weight::parse("v^^^v"))).normal_form(IntPolynomial::monomial(inter));
        std::map<std::pair<std::string, std::string>, Int> decoded;
        for (const auto& [m, coeff] : nf.terms()) {
            auto dec = monomial_to_diagram(a.schubert(), m, Weight::parse("v^v^^"),
                                           Weight::parse("v^^^v"));
            if (dec) decoded[{dec->eta.str(), dec->sigma.str()}] += coeff;
        }
        bool reduction_matches =
            decoded.size() == 1 && decoded.begin()->first.first == "^v^^v" &&
            decoded.begin()->first.second == longest_element(3).str() &&
            decoded.begin()->second == -1;
        c.expect(reduction_matches, "reduction of the recorded intermediate monomial");
    });

    run(2, "canonical-basis closed formula, n <= 6", [](Criterion& c) {
        for (int n = 1; n <= 6; ++n) {
            HeckeContext ctx(n);
            for (int k = 0; k <= n; ++k)
                for (const Weight& z : block(n, k)) {
                    Permutation w = wk_z(z);
                    const HeckeElement& can = ctx.canonical_basis(w);
                    c.expect(explicit_C(z) == can,
                             "closed formula at n=" + std::to_string(n) + " z=" + z.str());
                    c.expect(can.coeff(Permutation::identity(n)) == LaurentV::monomial(w.length()),
                             "identity coefficient at n=" + std::to_string(n) + " z=" + z.str());
                    if (!c.pass) return;
                }
        }
    });

    run(3, "triple dimension agreement, n <= 6", [](Criterion& c) {
        for (int n = 1; n <= 6; ++n) {
            HeckeContext ctx(n);
            for (int k = 0; k <= n; ++k)
                for (const Weight& z : block(n, k)) {
                    Encodings e = encodings(z);
                    BSequence b(e.b_seq);
                    Int prod_b = b.dimension();
                    Int count = 1;
                    for (int m = 2; m <= k; ++m) count *= m;
                    for (int d : e.vee_dist) count *= d + 1;
                    LaurentV gd = graded_dim_soergel(ctx, z);
                    c.expect(prod_b == count, "entry product vs distance count at " + z.str());
                    c.expect(gd.eval_at_one() == prod_b,
                             "Kazhdan-Lusztig value at one vs entry product at " + z.str());
                    c.expect(QuotientRing(b).graded_dim().shifted(-wk_z(z).length()) == gd,
                             "graded refinement at n=" + std::to_string(n) + " z=" + z.str());
                    if (!c.pass) return;
                }
        }
    });

    run(4, "hom/diagram dimension, n <= 6", [](Criterion& c) {
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) {
                SchubertTable table(k);
                Int fact = 1;
                for (int m = 2; m <= k; ++m) fact *= m;
                std::vector<Weight> blk = block(n, k);
                for (const Weight& target : blk)
                    for (const Weight& source : blk) {
                        HomBasis hb = hom_basis(b_sequence(source), b_sequence(target));
                        Int licit = 0;
                        for (const Monomial& m : hb.monomials)
                            if (monomial_to_diagram(table, m, source, target)) ++licit;
                        Int etas = 0;
                        for (const Weight& eta : blk)
                            if (orients(target, eta) && orients(source, eta)) ++etas;
                        c.expect(licit == fact * etas, "count mismatch at n=" + std::to_string(n) +
                                                           " (" + target.str() + "," + source.str() +
                                                           ")");
                        if (!c.pass) return;
                    }
            }
    });

    run(5, "algebra axioms, exhaustive n <= 4 and sampled n = 5", [](Criterion& c) {
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                const DiagramAlgebra& a = verify::cached_algebra(n, k);
                std::string tag = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                c.merge("idempotents" + tag, check_idempotents(a));
                c.merge("star" + tag, check_star(a, a.dim() > 400 ? 20000 : 0));
                c.merge("grading" + tag, check_grading_and_triangularity(a));
                c.merge("associativity" + tag, check_associativity(a, n >= 5 ? 12000 : 0));
                if (!c.pass) return;
            }
    });

    run(6, "graded cellular structure, n <= 5", [](Criterion& c) {
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                const DiagramAlgebra& a = verify::cached_algebra(n, k);
                std::string tag = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                c.merge("cell axioms" + tag, check_cellular(a));
                c.merge("anti-automorphism" + tag, check_star(a, a.dim() > 400 ? 20000 : 0));
                if (!c.pass) return;
            }
    });

    run(7, "properly stratified structure", [](Criterion& c) {
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                const DiagramAlgebra& a = verify::cached_algebra(n, k);
                std::string tag = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                c.merge("stratification" + tag, properly_stratified_check(a));
                if (!c.pass) return;
            }
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                const DiagramAlgebra& a = verify::cached_algebra(n, k);
                c.merge("grothendieck at (" + std::to_string(n) + "," + std::to_string(k) + ")",
                        check_grothendieck(a));
                if (!c.pass) return;
            }
    });

    run(8, "duality, bilinear form and self-dual projectives, n <= 5", [](Criterion& c) {
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                const DiagramAlgebra& a = verify::cached_algebra(n, k);
                std::string tag = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                c.merge("bilinear form" + tag, check_duality(a));
                c.merge("self-dual projectives" + tag, check_self_dual(a));
                if (!c.pass) return;
            }
    });

    run(9, "functor bimodules and the center, n <= 4", [](Criterion& c) {
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k < n; ++k) {
                const DiagramAlgebra& small = verify::cached_algebra(n, k);
                const DiagramAlgebra& big = verify::cached_algebra(n, k + 1);
                std::string tag = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                Bimodule f = build_F(small, big);
                Bimodule e = build_E(small, big);
                c.merge("action on projectives" + tag, check_F_on_projectives(f));
                c.merge("bimodule axioms F" + tag, check_bimodule_axioms(f));
                c.merge("bimodule axioms E" + tag, check_bimodule_axioms(e));
                c.merge("corner projection" + tag, check_psi(small, big));
                c.merge("adjunction tables" + tag, adjunction_check(small, big));
                CenterReport cr = center_vs_presentation(small);
                c.expect(cr.match(), "center " + cr.center.str() + " vs presentation " +
                                         cr.presentation.str() + tag);
                if (!c.pass) return;
            }
    });

    run(10, "determinism and serialization", [](Criterion& c) {
        for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{1, 1}}) {
            DiagramAlgebra a1(n, k), a2(n, k);
            a1.build_table(false);
            a2.build_table(true);
            std::string j1 = algebra_to_json(a1), j2 = algebra_to_json(a2);
            c.expect(j1 == j2, "serial and parallel exports differ at (" + std::to_string(n) + "," +
                                   std::to_string(k) + ")");
            c.expect(parse_algebra_json(j1) == dump_algebra(a1),
                     "round trip mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    });

    if (overall == 0) std::cout << "all criteria passed\n";
    else std::cout << "some criteria FAILED\n";
    return overall;
}
