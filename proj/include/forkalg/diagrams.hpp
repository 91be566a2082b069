#pragma once

#include <map>
#include <optional>

#include "forkalg/hecke.hpp"

namespace forkalg {

// Staircase monomials S'_w indexed by S_k: S'_w = x_1^{c_1}...x_{k-1}^{c_{k-1}}
// with c_i = #{j < w^{-1}(i) : w(j) > i}. The map w -> (c_1..c_{k-1}) is a
// bijection onto {0 <= c_i <= k-i}.
class SchubertTable {
public:
    explicit SchubertTable(int k);

    int k() const { return k_; }
    const std::vector<int>& exponents(const Permutation& w) const;
    std::optional<Permutation> from_exponents(const std::vector<int>& c) const;

    // S'_w as a monomial living in Z[x_1..x_nvars].
    Monomial monomial_in(const Permutation& w, int nvars) const;

private:
    int k_;
    std::map<Permutation, std::vector<int>> table_;
    std::map<std::vector<int>, Permutation> inverse_;
};

// The lower fork diagram underline(lambda): initial wedge rays followed by one
// fork per vee, the j-th fork spanning [vee_j, vee_{j+1} - 1] (the last one
// runs to n). A diagram is recovered from its weight, so the weight is the
// canonical storage.
struct LowerForkDiagram {
    Weight weight;
    int initial_rays = 0;
    std::vector<std::pair<int, int>> forks;  // 1-based inclusive spans

    std::string ascii() const;
};

LowerForkDiagram underline(const Weight& lambda);

// orientation test: the diagram of `diagram_weight` carries `orientation`
// iff every fork holds exactly one vee, i.e. vee_j(orientation) lies in
// [vee_j(diagram), vee_{j+1}(diagram)) for every j.
bool orients(const Weight& diagram_weight, const Weight& orientation);

// degree of the oriented lower (equivalently mirrored upper) diagram:
// each vee moved t steps to the right inside its fork contributes t.
int lower_degree(const Weight& diagram_weight, const Weight& orientation);

// Oriented fork diagram (a eta^sigma b) with a = underline(lower), b the
// mirror of underline(upper).
struct OrientedForkDiagram {
    Weight lower;
    Weight eta;
    Permutation sigma;
    Weight upper;

    int degree() const {
        return lower_degree(lower, eta) + lower_degree(upper, eta) + 2 * sigma.length();
    }
};

// p_{underline(diagram) eta^sigma}: the Schubert monomial of sigma evaluated
// at the wedge positions of eta, times one run x_{vee_j(diagram)}..x_{vee_j(eta)-1}
// per fork. Always a single monomial.
Monomial p_polynomial(const SchubertTable& schubert, const Weight& diagram_weight,
                      const Weight& eta, const Permutation& sigma);

// Whole-hom-space illicitness: true iff no weight orients both diagrams,
// tested positionally (some vee_j(z) >= vee_{j+1}(z') or symmetrically).
bool illicit_case_i(const Weight& z, const Weight& z_prime);

// Decode a hom-basis monomial (source weight -> target weight) as an oriented
// fork diagram, or report it illicit. The runs x_{vee_j(target)}..x_{l_j - 1}
// must stop before min(vee_{j+1}(source), vee_{j+1}(target)); the leftover
// monomial is matched against the Schubert table at the wedge positions of
// the orientation weight.
std::optional<OrientedForkDiagram> monomial_to_diagram(const SchubertTable& schubert,
                                                       const Monomial& m,
                                                       const Weight& source,
                                                       const Weight& target);

// Inverse direction: the hom-basis monomial of an oriented diagram.
Monomial diagram_to_monomial(const SchubertTable& schubert, const OrientedForkDiagram& d);

// Independent construction of the illicit subspace: take the generating
// morphisms (one fork run times the threshold monomial per fork), close
// them under multiplication by the variables inside the target ring, and
// compare the resulting span with the set of hom-basis monomials the
// run-length test rejects. Returns true when the two agree exactly.
bool illicit_span_matches(const SchubertTable& schubert, const Weight& source,
                          const Weight& target);

// Minimal and maximal degrees of the span of diagrams (lambda eta^sigma mu),
// when nonempty.
struct DegreeRange {
    int min_deg;
    int max_deg;
};
std::optional<DegreeRange> degree_range(const Weight& lambda, const Weight& mu);

}  // namespace forkalg
