#pragma once

#include "forkalg/algebra.hpp"

namespace forkalg {

// Finite dimensional graded left module over a diagram algebra, with an
// explicit basis. Every basis vector is supported at a single weight (the
// idempotent that fixes it), recorded in `support`.
struct GradedModule {
    const DiagramAlgebra* alg = nullptr;
    std::string name;
    std::vector<int> deg;
    std::vector<int> support;                // weight index per basis vector
    std::vector<std::string> labels;
    // action[x] = columns of the matrix of algebra basis element x;
    // action[x][col] = list of (row, coeff)
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> action;
    bool has_action = false;

    int dim() const { return static_cast<int>(deg.size()); }
    LaurentV graded_dim() const {
        LaurentV g;
        for (int d : deg) g.add_term(d, Int(1));
        return g;
    }
    GradedModule shifted(int d) const {
        GradedModule m = *this;
        for (int& x : m.deg) x += d;
        return m;
    }
};

// P(lambda) = A e_lambda with the left multiplication action.
GradedModule projective_module(const DiagramAlgebra& a, int lambda, bool with_action = true);

// One-dimensional simple L(lambda) in degree 0.
GradedModule simple_module(const DiagramAlgebra& a, int lambda);

// Standard module: basis (c mu^tau| over oriented lower diagrams, action by
// the probe-extracted scalars. The scalars are read off against the probe
// d = overline(mu) and, when a second orientable d exists, re-extracted and
// compared against it.
GradedModule standard_module(const DiagramAlgebra& a, int mu, bool with_action = true,
                             bool verify_probe_independence = true);

// Proper standard module: unenhanced basis (c mu|, action nonzero only for
// x = (a lambda^e overline(lambda)) with (a mu) oriented.
GradedModule proper_standard_module(const DiagramAlgebra& a, int mu, bool with_action = true);

// Cell module V(mu^tau): the tau-slice of the standard module, action through
// the same probe scalars.
GradedModule cell_module(const DiagramAlgebra& a, int mu, int tau, bool with_action = true);

// x (y m) == (x y) m for all pairs (or `samples` pseudo-random pairs) plus
// grading compatibility of every action matrix.
CheckReport check_module_axioms(const GradedModule& m, uint64_t samples = 0);

// Filtration of P(lambda) by standard modules: layers indexed by the weights
// mu with lambda <= mu (anti-Bruhat order), subquotient i isomorphic to
// standard(mu_i) shifted by deg(underline(lambda) mu_i). The subquotient
// isomorphisms are verified matrix-by-matrix under the explicit basis maps.
CheckReport check_standard_filtration(const DiagramAlgebra& a, int lambda);

// Filtration of the standard module by k! proper standards, shifts 2 ell(sigma).
CheckReport check_proper_filtration(const DiagramAlgebra& a, int mu);

// Degree filtration of the proper standard module with semisimple layers.
CheckReport check_radical_filtration(const DiagramAlgebra& a, int mu);

// Class in the Grothendieck group over the simple basis, one Laurent
// polynomial per weight.
std::vector<LaurentV> grothendieck_class(const GradedModule& m);

// Decomposition entries d_{lambda,mu} = v^{deg(underline(lambda) mu)} when
// underline(lambda) is oriented by mu, else 0.
std::vector<std::vector<LaurentV>> decomposition_matrix(const DiagramAlgebra& a);

// [P(lambda)] = sum_mu d_{lambda,mu} [standard(mu)],
// [proper(mu)] = sum_lambda d_{lambda,mu} [L(lambda)],
// [standard(mu)] = [k]_0! [proper(mu)], plus unitriangularity of d.
CheckReport check_grothendieck(const DiagramAlgebra& a);

// Weights lambda with P(lambda) graded self-dual, detected through
// palindromic graded dimension together with the socle containing
// L(tilde lambda) at the top degree.
std::vector<int> self_dual_projectives(const DiagramAlgebra& a);
CheckReport check_self_dual(const DiagramAlgebra& a);

// The stratification axioms: standard filtration of every projective with
// higher layers, proper-standard filtration of every standard, semisimple
// layers of every proper standard, and the multiplicity matrix of propers in
// standards equal to [k]_0! times the identity.
CheckReport properly_stratified_check(const DiagramAlgebra& a);

// Graded dimension of the space of degree-preserving module maps M -> N<j>,
// one Laurent term per shift j. Solved as an exact intertwiner system.
LaurentV graded_hom_dim(const GradedModule& m, const GradedModule& n);

}  // namespace forkalg
