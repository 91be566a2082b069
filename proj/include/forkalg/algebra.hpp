#pragma once

#include <cstdint>
#include <unordered_map>

#include "forkalg/diagrams.hpp"

namespace forkalg {

// Basis element (a eta^sigma b) of the diagram algebra, stored through the
// indices of its lower weight, orientation weight, permutation and upper
// weight in the owning algebra's tables.
struct BasisElement {
    int lower;
    int eta;
    int sigma;
    int upper;
    int degree;
};

// Sparse integer combination of basis elements, keyed by basis index.
using AlgebraElement = std::map<int, Int>;

std::string to_string(const AlgebraElement& x);

// The graded diagram algebra A_{n,k}: basis indexed by oriented fork
// diagrams, multiplication through polynomial composition and normal forms
// in the quotient rings of the weight b-sequences.
//
// All data is immutable after construction except the structure-constant
// table, which is either filled by build_table() (serial or OpenMP-parallel
// over index pairs, merged once) or left empty, in which case products are
// computed on the fly. Concurrent queries require a built table; the
// on-the-fly path reuses a scratch buffer.
class DiagramAlgebra {
public:
    DiagramAlgebra(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& at(int i) const { return basis_.at(static_cast<size_t>(i)); }
    const std::vector<Weight>& weights() const { return gamma_; }
    const Weight& weight(int idx) const { return gamma_.at(static_cast<size_t>(idx)); }
    int weight_index(const Weight& w) const;
    const std::vector<Permutation>& sk() const { return sk_; }
    const SchubertTable& schubert() const { return schubert_; }
    const QuotientRing& ring(int weight_idx) const { return rings_.at(static_cast<size_t>(weight_idx)); }

    int basis_index(int lower, int eta, int sigma, int upper) const;  // -1 if absent
    int idempotent_index(int weight_idx) const { return e_idx_.at(static_cast<size_t>(weight_idx)); }
    int star_index(int i) const;

    bool orients_idx(int diagram_w, int orientation_w) const {
        return orients_[static_cast<size_t>(diagram_w)][static_cast<size_t>(orientation_w)];
    }

    // x_i * x_j as a sparse combination; zero map when the inner diagrams
    // do not match.
    const std::vector<std::pair<int, Int>>& product(int i, int j) const;

    // Multiplication of general elements.
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

    // Eagerly compute every compatible structure constant. Parallel builds
    // split the pair list across threads and merge once at the end.
    void build_table(bool parallel);
    bool table_built() const { return table_built_; }
    size_t compatible_pair_count() const { return pair_list_.size(); }

    // Graded Cartan matrix: entry (lambda, mu) = graded dimension of
    // e_lambda A e_mu.
    std::vector<std::vector<LaurentV>> graded_cartan() const;

    // Coefficient functional behind the bilinear form: the coefficient of the
    // fixed maximal-degree element of e_lambda A e_lambda, summed over the
    // maximal-defect weights lambda.
    Int theta_functional(const AlgebraElement& z) const;
    Int theta(int i, int j) const;  // theta(x_i, x_j)
    // Corner variant: coefficient of the fixed maximal element of
    // e_lambda A e_lambda, defined for every weight.
    Int theta_corner(int lambda, int i, int j) const;
    int xi_max_index(int weight_idx) const;

    std::vector<int> basis_of_corner(int lambda, int mu) const;  // e_la A e_mu

private:
    std::vector<std::pair<int, Int>> compute_product(int i, int j) const;

    int n_, k_;
    std::vector<Weight> gamma_;
    std::map<Weight, int> weight_index_;
    std::vector<Permutation> sk_;
    std::map<Permutation, int> sigma_index_;
    SchubertTable schubert_;
    std::vector<QuotientRing> rings_;
    std::vector<std::vector<char>> orients_;
    std::vector<BasisElement> basis_;
    std::vector<int> index_flat_;  // (((upper*G)+lower)*G+eta)*k! + sigma -> basis idx
    std::vector<int> e_idx_;
    std::vector<int> xi_max_idx_;

    std::vector<std::pair<uint32_t, uint32_t>> pair_list_;
    std::vector<std::vector<std::pair<int, Int>>> pair_results_;
    std::unordered_map<uint64_t, size_t> pair_pos_;
    bool table_built_ = false;

    mutable std::vector<std::pair<int, Int>> scratch_;  // on-the-fly result
};

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        pass = false;
        if (failures.size() < 32) failures.push_back(std::move(msg));
    }
    std::string summary() const;
};

// Orthogonal idempotents summing to 1; unit law against the whole basis.
CheckReport check_idempotents(const DiagramAlgebra& a);

// star is an anti-automorphism squaring to the identity.
CheckReport check_star(const DiagramAlgebra& a, uint64_t samples = 0);

// deg(xy) = deg x + deg y on every nonzero structure constant, coefficients
// integral, and cell-order triangularity of every product.
CheckReport check_grading_and_triangularity(const DiagramAlgebra& a);

// (x y) z == x (y z) over compatible basis triples; when `samples` is
// nonzero, that many pseudo-random triples instead of the full cube.
CheckReport check_associativity(const DiagramAlgebra& a, uint64_t samples = 0);

// The graded cellular axioms for the cell datum (weights x S_k, orientation
// sets, diagram basis, star, lower-half degrees).
CheckReport check_cellular(const DiagramAlgebra& a);

// Bilinear form: symmetry and nondegeneracy on each corner e_la A e_la,
// nondegeneracy of the pairing e_def A x A e_def, top-degree statement for
// the corners.
CheckReport check_duality(const DiagramAlgebra& a);

}  // namespace forkalg
