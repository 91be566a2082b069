#pragma once

#include "forkalg/repr.hpp"

namespace forkalg {

// Flip the leading vee to a wedge (k -> k+1) and back. Both moves preserve
// the b-sequence.
Weight weight_lift(const Weight& w);
Weight weight_drop(const Weight& w);

// The corner projection e^wedge A_{k+1} e^wedge -> e^vee A_k e^vee: relabel
// the weights by dropping the leading wedge and re-test the hom monomial in
// the smaller algebra, where the run starting at position 1 may now make it
// illicit. Returns the image basis index in `small`, or -1 when killed.
int psi_basis(const DiagramAlgebra& small, const DiagramAlgebra& big, int big_idx);

// Linear extension of psi_basis to e^wedge x e^wedge.
AlgebraElement psi_map(const DiagramAlgebra& small, const DiagramAlgebra& big,
                       const AlgebraElement& x);

// psi is a degree-preserving surjective algebra homomorphism onto the
// maximal-defect corner of the smaller algebra.
CheckReport check_psi(const DiagramAlgebra& small, const DiagramAlgebra& big,
                      uint64_t samples = 0);

// (A_k, A_{k+1})-bimodule on the projective-injective part A_k e^vee, right
// action through psi; the E variant twists both actions by star.
struct Bimodule {
    const DiagramAlgebra* left_alg = nullptr;   // acts from the left
    const DiagramAlgebra* right_alg = nullptr;  // acts from the right
    std::string name;
    std::vector<int> basis;  // indices into the A_k basis
    std::vector<int> deg;
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> left_action;
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> right_action;

    int dim() const { return static_cast<int>(basis.size()); }
};

Bimodule build_F(const DiagramAlgebra& small, const DiagramAlgebra& big);
Bimodule build_E(const DiagramAlgebra& small, const DiagramAlgebra& big);

// (x m) y == x (m y) for all pairs of algebra basis elements, or sampled.
CheckReport check_bimodule_axioms(const Bimodule& b, uint64_t samples = 0);

// Right multiplication by e_mu projects F onto P(drop(mu)) when mu starts
// with a wedge and kills it otherwise; the corner ideal of the bigger
// algebra acts as zero.
CheckReport check_F_on_projectives(const Bimodule& f);

// Graded dimension tables of Hom(F (x) P(mu), P(nu)) (intertwiner solve)
// versus Hom(P(mu), E (x) P(nu)) (idempotent slice of the explicit module).
CheckReport adjunction_check(const DiagramAlgebra& small, const DiagramAlgebra& big);

// Center of the maximal-defect corner of A, one graded degree at a time.
LaurentV center_graded_dim(const DiagramAlgebra& a);

// Graded dimension of C[x_1..x_n]/I_k where I_k is spanned by complete
// symmetric polynomials h_{k+1} over variable subsets of size <= n-k and
// h_{n-m+1} over subsets of size m > n-k; exact row reduction degree by
// degree, stopping once a degree vanishes.
LaurentV presentation_graded_dim(int n, int k);

// End of F over both actions; equals the center of the corner.
LaurentV bimodule_end_graded_dim(const Bimodule& f);

struct CenterReport {
    LaurentV center;
    LaurentV presentation;
    bool match() const { return center == presentation; }
};
CenterReport center_vs_presentation(const DiagramAlgebra& a);

}  // namespace forkalg
