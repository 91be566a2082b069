#include "forkalg/diagrams.hpp"

#include <algorithm>

#include "forkalg/linalg.hpp"

namespace forkalg {

SchubertTable::SchubertTable(int k) : k_(k) {
    if (k < 0 || k > 8) throw std::invalid_argument("SchubertTable: k out of supported range");
    for (const Permutation& w : symmetric_group(k)) {
        Permutation winv = w.inverse();
        std::vector<int> c(static_cast<size_t>(std::max(k - 1, 0)), 0);
        for (int i = 1; i <= k - 1; ++i) {
            int count = 0;
            for (int j = 1; j < winv.apply(i); ++j)
                if (w.apply(j) > i) ++count;
            c[static_cast<size_t>(i - 1)] = count;
        }
        table_[w] = c;
        if (!inverse_.emplace(c, w).second)
            throw std::logic_error("SchubertTable: exponent tuples not distinct");
    }
}

const std::vector<int>& SchubertTable::exponents(const Permutation& w) const {
    auto it = table_.find(w);
    if (it == table_.end()) throw std::invalid_argument("SchubertTable: unknown permutation");
    return it->second;
}

std::optional<Permutation> SchubertTable::from_exponents(const std::vector<int>& c) const {
    auto it = inverse_.find(c);
    if (it == inverse_.end()) return std::nullopt;
    return it->second;
}

Monomial SchubertTable::monomial_in(const Permutation& w, int nvars) const {
    const std::vector<int>& c = exponents(w);
    Monomial m(nvars);
    for (size_t i = 0; i < c.size(); ++i) m.e[i] = c[i];
    return m;
}

LowerForkDiagram underline(const Weight& lambda) {
    LowerForkDiagram d;
    d.weight = lambda;
    std::vector<int> vees = lambda.vee_positions();
    d.initial_rays = vees.empty() ? lambda.n() : vees.front() - 1;
    for (size_t j = 0; j < vees.size(); ++j) {
        int start = vees[j];
        int end = (j + 1 < vees.size()) ? vees[j + 1] - 1 : lambda.n();
        d.forks.emplace_back(start, end);
    }
    return d;
}

std::string LowerForkDiagram::ascii() const {
    std::string out;
    for (int i = 1; i <= initial_rays; ++i) {
        if (!out.empty()) out += " ";
        out += "|";
    }
    for (const auto& [s, e] : forks) {
        if (!out.empty()) out += " ";
        out += "[";
        for (int i = s; i <= e; ++i) {
            if (i > s) out += " ";
            out += weight.wedge_at(i) ? "^" : "v";
        }
        out += "]";
    }
    return out;
}

bool orients(const Weight& diagram_weight, const Weight& orientation) {
    if (diagram_weight.n() != orientation.n() || diagram_weight.k() != orientation.k())
        return false;
    std::vector<int> dv = diagram_weight.vee_positions();
    std::vector<int> ov = orientation.vee_positions();
    for (size_t j = 0; j < dv.size(); ++j) {
        int hi = (j + 1 < dv.size()) ? dv[j + 1] : diagram_weight.n() + 1;
        if (!(dv[j] <= ov[j] && ov[j] < hi)) return false;
    }
    return true;
}

int lower_degree(const Weight& diagram_weight, const Weight& orientation) {
    if (!orients(diagram_weight, orientation))
        throw std::invalid_argument("lower_degree: diagram is not oriented by this weight");
    std::vector<int> dv = diagram_weight.vee_positions();
    std::vector<int> ov = orientation.vee_positions();
    int deg = 0;
    for (size_t j = 0; j < dv.size(); ++j) deg += ov[j] - dv[j];
    return deg;
}

Monomial p_polynomial(const SchubertTable& schubert, const Weight& diagram_weight,
                      const Weight& eta, const Permutation& sigma) {
    if (!orients(diagram_weight, eta))
        throw std::invalid_argument("p_polynomial: diagram is not oriented by eta");
    const int n = diagram_weight.n();
    Monomial m(n);
    std::vector<int> dv = diagram_weight.vee_positions();
    std::vector<int> ov = eta.vee_positions();
    for (size_t j = 0; j < dv.size(); ++j)
        for (int pos = dv[j]; pos < ov[j]; ++pos) m.e[static_cast<size_t>(pos - 1)] += 1;
    const std::vector<int>& c = schubert.exponents(sigma);
    std::vector<int> wedges = eta.wedge_positions();
    for (size_t i = 0; i < c.size(); ++i)
        m.e[static_cast<size_t>(wedges[i] - 1)] += c[i];
    return m;
}

bool illicit_case_i(const Weight& z, const Weight& z_prime) {
    std::vector<int> a = z.vee_positions(), b = z_prime.vee_positions();
    for (size_t j = 0; j + 1 < a.size(); ++j) {
        if (a[j] >= b[j + 1] || b[j] >= a[j + 1]) return true;
    }
    return false;
}

std::optional<OrientedForkDiagram> monomial_to_diagram(const SchubertTable& schubert,
                                                       const Monomial& m,
                                                       const Weight& source,
                                                       const Weight& target) {
    const int n = target.n();
    std::vector<int> tv = target.vee_positions();
    std::vector<int> sv = source.vee_positions();
    std::vector<int> eta_vees(tv.size());
    Monomial rest = m;
    for (size_t j = 0; j < tv.size(); ++j) {
        // maximal run x_{vee_j(target)} ... x_{l-1} dividing m
        int l = tv[j];
        while (l <= n && m.e[static_cast<size_t>(l - 1)] >= 1) ++l;
        int bound_src = (j + 1 < sv.size()) ? sv[j + 1] : n + 1;
        int bound_tgt = (j + 1 < tv.size()) ? tv[j + 1] : n + 1;
        if (l >= bound_src || l >= bound_tgt) return std::nullopt;  // illicit
        eta_vees[j] = l;
        for (int pos = tv[j]; pos < l; ++pos) rest.e[static_cast<size_t>(pos - 1)] -= 1;
    }
    std::vector<bool> up(static_cast<size_t>(n), true);
    for (int p : eta_vees) up[static_cast<size_t>(p - 1)] = false;
    Weight eta{std::move(up)};

    // The leftover must be a staircase monomial sitting at eta's wedges.
    std::vector<int> wedges = eta.wedge_positions();
    const int k = target.k();
    std::vector<int> c(static_cast<size_t>(std::max(k - 1, 0)), 0);
    for (size_t i = 0; i < wedges.size(); ++i) {
        int exp = rest.e[static_cast<size_t>(wedges[i] - 1)];
        rest.e[static_cast<size_t>(wedges[i] - 1)] = 0;
        if (static_cast<int>(i) < k - 1) {
            c[i] = exp;
        } else if (exp != 0) {
            throw std::logic_error("monomial_to_diagram: exponent at last wedge of a licit monomial");
        }
    }
    if (!rest.is_one())
        throw std::logic_error("monomial_to_diagram: residue off the wedge positions");
    std::optional<Permutation> sigma = schubert.from_exponents(c);
    if (!sigma)
        throw std::logic_error("monomial_to_diagram: residue is not a staircase monomial");
    return OrientedForkDiagram{target, std::move(eta), *sigma, source};
}

Monomial diagram_to_monomial(const SchubertTable& schubert, const OrientedForkDiagram& d) {
    return p_polynomial(schubert, d.lower, d.eta, d.sigma);
}

bool illicit_span_matches(const SchubertTable& schubert, const Weight& source,
                          const Weight& target) {
    const int n = target.n();
    BSequence b_src = b_sequence(source), b_tgt = b_sequence(target);
    HomBasis hb = hom_basis(b_src, b_tgt);
    QuotientRing ring(b_tgt);

    std::map<Monomial, size_t, MonomialLess> pos;
    std::vector<char> illicit(hb.monomials.size(), 0);
    size_t illicit_count = 0;
    for (size_t i = 0; i < hb.monomials.size(); ++i) {
        pos[hb.monomials[i]] = i;
        if (!monomial_to_diagram(schubert, hb.monomials[i], source, target)) {
            illicit[i] = 1;
            ++illicit_count;
        }
    }
    if (illicit_case_i(source, target)) return illicit_count == hb.monomials.size();

    // expand a polynomial over the hom basis; every morphism must stay inside
    auto coords = [&](const IntPolynomial& poly) {
        std::vector<Rat> row(hb.monomials.size(), Rat(0));
        for (const auto& [m, c] : poly.terms()) {
            auto it = pos.find(m);
            if (it == pos.end())
                throw std::logic_error("illicit_span_matches: morphism left the hom span");
            row[it->second] = Rat(c);
        }
        return row;
    };

    std::vector<int> sv = source.vee_positions(), tv = target.vee_positions();
    std::vector<IntPolynomial> worklist;
    for (size_t j = 0; j < tv.size(); ++j) {
        // the minimal hom-basis monomial rejected at fork j: componentwise
        // maximum of the threshold monomial and the target run reaching the
        // next vee of either weight
        Monomial gen(n);
        for (size_t i = 0; i < hb.c.size(); ++i) gen.e[i] = hb.c[i];
        int beta = (j + 1 < tv.size()) ? std::min(sv[j + 1], tv[j + 1]) - 1 : n;
        for (int posn = tv[j]; posn <= beta; ++posn)
            gen.e[static_cast<size_t>(posn - 1)] = std::max(gen.e[static_cast<size_t>(posn - 1)], 1);
        worklist.push_back(ring.normal_form(IntPolynomial::monomial(gen)));
    }
    RowSpace span(hb.monomials.size());
    auto supported_on_illicit = [&](const std::vector<Rat>& row) {
        for (size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0 && !illicit[i]) return false;
        return true;
    };
    while (!worklist.empty()) {
        IntPolynomial v = std::move(worklist.back());
        worklist.pop_back();
        if (v.is_zero()) continue;
        std::vector<Rat> row = coords(v);
        if (!supported_on_illicit(row)) return false;
        if (!span.add_row(std::move(row))) continue;
        for (int i = 1; i <= n; ++i)
            worklist.push_back(ring.normal_form(IntPolynomial::variable(i, n) * v));
    }
    return span.rank() == illicit_count;
}

std::optional<DegreeRange> degree_range(const Weight& lambda, const Weight& mu) {
    const int n = lambda.n();
    const int k = lambda.k();
    std::vector<int> a = lambda.vee_positions(), b = mu.vee_positions();
    if (illicit_case_i(lambda, mu)) return std::nullopt;
    int min_deg = 0, max_deg = k * (k - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        min_deg += std::abs(a[i] - b[i]);
        int next_min = (i + 1 < a.size()) ? std::min(a[i + 1], b[i + 1]) : n + 1;
        max_deg += std::abs(next_min - 1 - a[i]) + std::abs(next_min - 1 - b[i]);
    }
    return DegreeRange{min_deg, max_deg};
}

}  // namespace forkalg
