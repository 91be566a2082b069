#include "forkalg/repr.hpp"

#include <algorithm>

#include "forkalg/linalg.hpp"

namespace forkalg {

namespace {

void sort_column(std::vector<std::pair<int, Int>>& col) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

struct SplitMix {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

// scalars t^{tau'}_{x}(mu^tau) extracted from the product against the probe
// (c mu^tau overline(mu)); returns the vector over tau' indices.
std::vector<Int> t_scalars(const DiagramAlgebra& a, int x, int mu, int tau, int probe_upper) {
    const int fact = static_cast<int>(a.sk().size());
    std::vector<Int> t(static_cast<size_t>(fact), Int(0));
    const BasisElement& xb = a.at(x);
    int probe = a.basis_index(xb.upper, mu, tau, probe_upper);
    if (probe < 0) throw std::logic_error("t_scalars: probe element missing");
    for (const auto& [idx, c] : a.product(x, probe)) {
        const BasisElement& z = a.at(idx);
        if (z.eta == mu) t[static_cast<size_t>(z.sigma)] = c;
    }
    return t;
}

}  // namespace

GradedModule projective_module(const DiagramAlgebra& a, int lambda, bool with_action) {
    GradedModule m;
    m.alg = &a;
    m.name = "P(" + a.weight(lambda).str() + ")";
    std::vector<int> members;
    for (int i = 0; i < a.dim(); ++i)
        if (a.at(i).upper == lambda) members.push_back(i);
    for (int i : members) {
        m.deg.push_back(a.at(i).degree);
        m.support.push_back(a.at(i).lower);
        m.labels.push_back("[" + std::to_string(i) + "]");
    }
    if (with_action) {
        std::map<int, int> pos;
        for (size_t c = 0; c < members.size(); ++c) pos[members[c]] = static_cast<int>(c);
        m.action.assign(static_cast<size_t>(a.dim()), {});
        for (int x = 0; x < a.dim(); ++x) {
            auto& cols = m.action[static_cast<size_t>(x)];
            cols.assign(members.size(), {});
            for (size_t c = 0; c < members.size(); ++c) {
                for (const auto& [idx, coeff] : a.product(x, members[c]))
                    cols[c].emplace_back(pos.at(idx), coeff);
                sort_column(cols[c]);
            }
        }
        m.has_action = true;
    }
    return m;
}

GradedModule simple_module(const DiagramAlgebra& a, int lambda) {
    GradedModule m;
    m.alg = &a;
    m.name = "L(" + a.weight(lambda).str() + ")";
    m.deg = {0};
    m.support = {lambda};
    m.labels = {"1"};
    m.action.assign(static_cast<size_t>(a.dim()), {{}});
    for (int x = 0; x < a.dim(); ++x) {
        m.action[static_cast<size_t>(x)].assign(1, {});
        if (x == a.idempotent_index(lambda)) m.action[static_cast<size_t>(x)][0] = {{0, Int(1)}};
    }
    m.has_action = true;
    return m;
}

GradedModule standard_module(const DiagramAlgebra& a, int mu, bool with_action,
                             bool verify_probe_independence) {
    GradedModule m;
    m.alg = &a;
    m.name = "Std(" + a.weight(mu).str() + ")";
    const int G = static_cast<int>(a.weights().size());
    const int fact = static_cast<int>(a.sk().size());
    std::vector<std::pair<int, int>> members;  // (gamma, tau)
    for (int g = 0; g < G; ++g) {
        if (!a.orients_idx(g, mu)) continue;
        for (int t = 0; t < fact; ++t) members.emplace_back(g, t);
    }
    for (const auto& [g, t] : members) {
        m.deg.push_back(lower_degree(a.weight(g), a.weight(mu)) +
                        2 * a.sk()[static_cast<size_t>(t)].length());
        m.support.push_back(g);
        m.labels.push_back("(" + a.weight(g).str() + " " + a.sk()[static_cast<size_t>(t)].str() + "|");
    }
    if (!with_action) return m;

    std::map<std::pair<int, int>, int> pos;
    for (size_t c = 0; c < members.size(); ++c) pos[members[c]] = static_cast<int>(c);

    // candidate second probe: any other weight whose diagram mu orients
    int alt_probe = -1;
    for (int g = 0; g < G; ++g)
        if (g != mu && a.orients_idx(g, mu)) { alt_probe = g; break; }

    m.action.assign(static_cast<size_t>(a.dim()), {});
    for (int x = 0; x < a.dim(); ++x) {
        const BasisElement& xb = a.at(x);
        auto& cols = m.action[static_cast<size_t>(x)];
        cols.assign(members.size(), {});
        if (!a.orients_idx(xb.lower, mu)) continue;
        for (size_t c = 0; c < members.size(); ++c) {
            const auto& [g, t] = members[c];
            if (xb.upper != g) continue;
            std::vector<Int> t_vec = t_scalars(a, x, mu, t, mu);
            if (verify_probe_independence && alt_probe >= 0 &&
                t_scalars(a, x, mu, t, alt_probe) != t_vec)
                throw std::logic_error("standard_module: probe scalars depend on the upper diagram");
            for (int tp = 0; tp < fact; ++tp) {
                if (t_vec[static_cast<size_t>(tp)] == 0) continue;
                cols[c].emplace_back(pos.at({xb.lower, tp}), t_vec[static_cast<size_t>(tp)]);
            }
            sort_column(cols[c]);
        }
    }
    m.has_action = true;
    return m;
}

GradedModule proper_standard_module(const DiagramAlgebra& a, int mu, bool with_action) {
    GradedModule m;
    m.alg = &a;
    m.name = "PropStd(" + a.weight(mu).str() + ")";
    const int G = static_cast<int>(a.weights().size());
    std::vector<int> members;
    for (int g = 0; g < G; ++g)
        if (a.orients_idx(g, mu)) members.push_back(g);
    std::map<int, int> pos;
    for (size_t c = 0; c < members.size(); ++c) pos[members[c]] = static_cast<int>(c);
    for (int g : members) {
        m.deg.push_back(lower_degree(a.weight(g), a.weight(mu)));
        m.support.push_back(g);
        m.labels.push_back("(" + a.weight(g).str() + "|");
    }
    if (!with_action) return m;
    m.action.assign(static_cast<size_t>(a.dim()), {});
    for (int x = 0; x < a.dim(); ++x) {
        const BasisElement& xb = a.at(x);
        auto& cols = m.action[static_cast<size_t>(x)];
        cols.assign(members.size(), {});
        // nonzero only for x = (a lambda^e overline(lambda)) with (a mu) oriented
        if (xb.eta != xb.upper || !a.sk()[static_cast<size_t>(xb.sigma)].is_identity()) continue;
        if (!a.orients_idx(xb.lower, mu)) continue;
        for (size_t c = 0; c < members.size(); ++c) {
            if (xb.upper != members[c]) continue;
            cols[c] = {{pos.at(xb.lower), Int(1)}};
        }
    }
    m.has_action = true;
    return m;
}

GradedModule cell_module(const DiagramAlgebra& a, int mu, int tau, bool with_action) {
    GradedModule m;
    m.alg = &a;
    m.name = "V(" + a.weight(mu).str() + "^" + a.sk()[static_cast<size_t>(tau)].str() + ")";
    const int G = static_cast<int>(a.weights().size());
    std::vector<int> members;
    for (int g = 0; g < G; ++g)
        if (a.orients_idx(g, mu)) members.push_back(g);
    std::map<int, int> pos;
    for (size_t c = 0; c < members.size(); ++c) pos[members[c]] = static_cast<int>(c);
    const int shift = 2 * a.sk()[static_cast<size_t>(tau)].length();
    for (int g : members) {
        m.deg.push_back(lower_degree(a.weight(g), a.weight(mu)) + shift);
        m.support.push_back(g);
        m.labels.push_back("(" + a.weight(g).str() + "]");
    }
    if (!with_action) return m;
    m.action.assign(static_cast<size_t>(a.dim()), {});
    for (int x = 0; x < a.dim(); ++x) {
        const BasisElement& xb = a.at(x);
        auto& cols = m.action[static_cast<size_t>(x)];
        cols.assign(members.size(), {});
        if (!a.orients_idx(xb.lower, mu)) continue;
        for (size_t c = 0; c < members.size(); ++c) {
            if (xb.upper != members[c]) continue;
            std::vector<Int> t_vec = t_scalars(a, x, mu, tau, mu);
            const Int& t_same = t_vec[static_cast<size_t>(tau)];
            if (t_same != 0) cols[c] = {{pos.at(xb.lower), t_same}};
        }
    }
    m.has_action = true;
    return m;
}

CheckReport check_module_axioms(const GradedModule& m, uint64_t samples) {
    CheckReport r;
    const DiagramAlgebra& a = *m.alg;
    if (!m.has_action) { r.fail("module has no action matrices"); return r; }
    // grading: row degree = col degree + element degree
    for (int x = 0; x < a.dim(); ++x) {
        for (size_t c = 0; c < m.action[static_cast<size_t>(x)].size(); ++c)
            for (const auto& [row, coeff] : m.action[static_cast<size_t>(x)][c])
                if (m.deg[static_cast<size_t>(row)] !=
                    m.deg[c] + a.at(x).degree) {
                    r.fail(m.name + ": action of " + std::to_string(x) + " breaks the grading");
                    return r;
                }
    }
    auto apply = [&](int x, const std::map<int, Int>& vec) {
        std::map<int, Int> out;
        for (const auto& [c, coeff] : vec)
            for (const auto& [row, acoeff] : m.action[static_cast<size_t>(x)][static_cast<size_t>(c)]) {
                Int& slot = out[row];
                slot += coeff * acoeff;
                if (slot == 0) out.erase(row);
            }
        return out;
    };
    auto check_pair = [&](int x, int y) {
        for (int c = 0; c < m.dim(); ++c) {
            std::map<int, Int> vec{{c, Int(1)}};
            std::map<int, Int> lhs = apply(x, apply(y, vec));
            std::map<int, Int> rhs;
            for (const auto& [idx, coeff] : a.product(x, y))
                for (const auto& [row, acoeff] : m.action[static_cast<size_t>(idx)][static_cast<size_t>(c)]) {
                    Int& slot = rhs[row];
                    slot += coeff * acoeff;
                    if (slot == 0) rhs.erase(row);
                }
            if (lhs != rhs) {
                r.fail(m.name + ": x(y m) != (xy) m at x=" + std::to_string(x) + " y=" +
                       std::to_string(y) + " m=" + std::to_string(c));
                return;
            }
        }
    };
    if (samples == 0) {
        for (int x = 0; x < a.dim() && r.pass; ++x)
            for (int y = 0; y < a.dim() && r.pass; ++y) check_pair(x, y);
    } else {
        SplitMix rng{0x0dd5eed + static_cast<uint64_t>(m.dim())};
        for (uint64_t t = 0; t < samples && r.pass; ++t)
            check_pair(static_cast<int>(rng.below(static_cast<uint64_t>(a.dim()))),
                       static_cast<int>(rng.below(static_cast<uint64_t>(a.dim()))));
    }
    return r;
}

namespace {

// Generic filtration layer comparison: module basis positions split into
// ordered layers; checks each prefix is a submodule and that layer i matches
// the reference module under the given position bijection and degree shift.
struct Layer {
    std::vector<int> members;              // positions in the ambient module
    const GradedModule* reference;         // compared against
    std::vector<int> ref_position;         // members[c] corresponds to reference basis ref_position[c]
    int shift;
};

CheckReport check_filtration(const GradedModule& big, const std::vector<Layer>& layers) {
    CheckReport r;
    const DiagramAlgebra& a = *big.alg;
    std::vector<int> layer_of(static_cast<size_t>(big.dim()), -1);
    for (size_t l = 0; l < layers.size(); ++l)
        for (int p : layers[l].members) layer_of[static_cast<size_t>(p)] = static_cast<int>(l);
    for (int p = 0; p < big.dim(); ++p)
        if (layer_of[static_cast<size_t>(p)] < 0) {
            r.fail(big.name + ": filtration does not cover the basis");
            return r;
        }
    for (size_t l = 0; l < layers.size(); ++l) {
        const Layer& layer = layers[l];
        std::vector<int> inv(static_cast<size_t>(big.dim()), -1);
        for (size_t c = 0; c < layer.members.size(); ++c)
            inv[static_cast<size_t>(layer.members[c])] = static_cast<int>(c);
        // degree bookkeeping of the identification
        for (size_t c = 0; c < layer.members.size(); ++c) {
            int want = layer.reference->deg[static_cast<size_t>(layer.ref_position[c])] + layer.shift;
            if (big.deg[static_cast<size_t>(layer.members[c])] != want) {
                r.fail(big.name + ": degree shift mismatch in layer " + std::to_string(l));
                return r;
            }
        }
        for (int x = 0; x < a.dim(); ++x) {
            for (size_t c = 0; c < layer.members.size(); ++c) {
                std::vector<std::pair<int, Int>> projected;
                for (const auto& [row, coeff] :
                     big.action[static_cast<size_t>(x)][static_cast<size_t>(layer.members[c])]) {
                    int lr = layer_of[static_cast<size_t>(row)];
                    if (lr > static_cast<int>(l)) {
                        r.fail(big.name + ": prefix " + std::to_string(l) + " is not a submodule");
                        return r;
                    }
                    if (lr == static_cast<int>(l))
                        projected.emplace_back(layer.ref_position[static_cast<size_t>(inv[static_cast<size_t>(row)])], coeff);
                }
                sort_column(projected);
                std::vector<std::pair<int, Int>> expected =
                    layer.reference->action[static_cast<size_t>(x)][static_cast<size_t>(layer.ref_position[c])];
                sort_column(expected);
                if (projected != expected) {
                    r.fail(big.name + ": subquotient " + std::to_string(l) +
                           " does not match " + layer.reference->name);
                    return r;
                }
            }
        }
    }
    return r;
}

}  // namespace

CheckReport check_standard_filtration(const DiagramAlgebra& a, int lambda) {
    CheckReport r;
    GradedModule p = projective_module(a, lambda);
    const int G = static_cast<int>(a.weights().size());
    // weights mu with underline(lambda) oriented by mu, anti-Bruhat order
    std::vector<int> mus;
    for (int mu = 0; mu < G; ++mu)
        if (a.orients_idx(lambda, mu)) mus.push_back(mu);
    std::sort(mus.begin(), mus.end(), [&](int x, int y) {
        return a.weight(y) < a.weight(x);  // descending vee tuples
    });
    if (mus.empty() || mus.back() != lambda) {
        r.fail("standard filtration: lambda is not the final layer");
        return r;
    }
    // positions of P(lambda) basis (all algebra elements with upper = lambda)
    std::vector<int> members;
    for (int i = 0; i < a.dim(); ++i)
        if (a.at(i).upper == lambda) members.push_back(i);

    std::vector<GradedModule> refs;
    refs.reserve(mus.size());
    for (int mu : mus) refs.push_back(standard_module(a, mu));

    std::vector<Layer> layers(mus.size());
    for (size_t l = 0; l < mus.size(); ++l) {
        layers[l].reference = &refs[l];
        layers[l].shift = lower_degree(a.weight(lambda), a.weight(mus[l]));
        // standard module member order: (gamma, tau) as produced there
        std::map<std::pair<int, int>, int> ref_pos;
        {
            int c = 0;
            for (int g = 0; g < G; ++g) {
                if (!a.orients_idx(g, mus[l])) continue;
                for (int t = 0; t < static_cast<int>(a.sk().size()); ++t)
                    ref_pos[{g, t}] = c++;
            }
        }
        for (size_t pidx = 0; pidx < members.size(); ++pidx) {
            const BasisElement& b = a.at(members[pidx]);
            if (b.eta != mus[l]) continue;
            layers[l].members.push_back(static_cast<int>(pidx));
            layers[l].ref_position.push_back(ref_pos.at({b.lower, b.sigma}));
        }
    }
    CheckReport inner = check_filtration(p, layers);
    if (!inner.pass) return inner;

    // height rule: layer shifts are ell(lambda) - ell(mu), zero only at mu = lambda
    for (size_t l = 0; l < mus.size(); ++l) {
        int h = layers[l].shift;
        if (h != weight_length(a.weight(lambda)) - weight_length(a.weight(mus[l])))
            r.fail("standard filtration: shift is not the length drop at layer " + std::to_string(l));
        if (h == 0 && mus[l] != lambda)
            r.fail("standard filtration: zero shift away from the top layer");
        if (h < 0) r.fail("standard filtration: negative shift");
    }
    return r;
}

CheckReport check_proper_filtration(const DiagramAlgebra& a, int mu) {
    CheckReport r;
    GradedModule std_mod = standard_module(a, mu);
    const int fact = static_cast<int>(a.sk().size());
    const int G = static_cast<int>(a.weights().size());
    // sigma_1 .. sigma_{k!} with weakly decreasing length, identity last
    std::vector<int> sigmas(static_cast<size_t>(fact));
    for (int t = 0; t < fact; ++t) sigmas[static_cast<size_t>(t)] = t;
    std::sort(sigmas.begin(), sigmas.end(), [&](int x, int y) {
        int lx = a.sk()[static_cast<size_t>(x)].length(), ly = a.sk()[static_cast<size_t>(y)].length();
        if (lx != ly) return lx > ly;
        return x < y;
    });
    GradedModule prop = proper_standard_module(a, mu);
    std::map<std::pair<int, int>, int> pos;  // standard module positions
    {
        int c = 0;
        for (int g = 0; g < G; ++g) {
            if (!a.orients_idx(g, mu)) continue;
            for (int t = 0; t < fact; ++t) pos[{g, t}] = c++;
        }
    }
    std::map<int, int> prop_pos;
    {
        int c = 0;
        for (int g = 0; g < G; ++g)
            if (a.orients_idx(g, mu)) prop_pos[g] = c++;
    }
    std::vector<Layer> layers(sigmas.size());
    for (size_t l = 0; l < sigmas.size(); ++l) {
        layers[l].reference = &prop;
        layers[l].shift = 2 * a.sk()[static_cast<size_t>(sigmas[l])].length();
        for (const auto& [key, c] : pos) {
            if (key.second != sigmas[l]) continue;
            layers[l].members.push_back(c);
            layers[l].ref_position.push_back(prop_pos.at(key.first));
        }
    }
    CheckReport inner = check_filtration(std_mod, layers);
    if (!inner.pass) return inner;
    if (static_cast<int>(layers.size()) != fact) r.fail("proper filtration: wrong layer count");
    return r;
}

CheckReport check_radical_filtration(const DiagramAlgebra& a, int mu) {
    CheckReport r;
    GradedModule prop = proper_standard_module(a, mu);
    int maxdeg = 0;
    for (int d : prop.deg) maxdeg = std::max(maxdeg, d);
    // Q(j) = span of degree >= j; layer j must be a direct sum of simples
    // L(gamma)<j> over gamma with deg(underline(gamma) mu) = j.
    for (int j = 0; j <= maxdeg; ++j) {
        for (int c = 0; c < prop.dim(); ++c) {
            if (prop.deg[static_cast<size_t>(c)] != j) continue;
            for (int x = 0; x < a.dim(); ++x) {
                const auto& col = prop.action[static_cast<size_t>(x)][static_cast<size_t>(c)];
                if (a.at(x).degree > 0) {
                    for (const auto& [row, coeff] : col)
                        if (prop.deg[static_cast<size_t>(row)] <= j)
                            r.fail("radical filtration: positive-degree action does not raise degree");
                } else {
                    // degree-0 part is spanned by idempotents; e_nu must act
                    // as the support projector
                    bool is_e_of_support = x == a.idempotent_index(prop.support[static_cast<size_t>(c)]);
                    bool fixes = col.size() == 1 && col[0].first == c && col[0].second == 1;
                    if (is_e_of_support && !fixes)
                        r.fail("radical filtration: support idempotent does not fix a layer vector");
                    if (!is_e_of_support && !col.empty() &&
                        std::any_of(col.begin(), col.end(),
                                    [&](const auto& rc) { return rc.first == c; }))
                        r.fail("radical filtration: foreign idempotent hits a layer vector");
                }
            }
        }
    }
    // degree-0 layer is exactly L(mu)
    int zero_count = 0;
    for (int c = 0; c < prop.dim(); ++c)
        if (prop.deg[static_cast<size_t>(c)] == 0) {
            ++zero_count;
            if (prop.support[static_cast<size_t>(c)] != mu)
                r.fail("radical filtration: degree-0 layer is not L(mu)");
        }
    if (zero_count != 1) r.fail("radical filtration: degree-0 layer not one dimensional");
    return r;
}

std::vector<LaurentV> grothendieck_class(const GradedModule& m) {
    std::vector<LaurentV> cls(m.alg->weights().size());
    for (int c = 0; c < m.dim(); ++c)
        cls[static_cast<size_t>(m.support[static_cast<size_t>(c)])].add_term(
            m.deg[static_cast<size_t>(c)], Int(1));
    return cls;
}

std::vector<std::vector<LaurentV>> decomposition_matrix(const DiagramAlgebra& a) {
    const size_t G = a.weights().size();
    std::vector<std::vector<LaurentV>> d(G, std::vector<LaurentV>(G));
    for (size_t lam = 0; lam < G; ++lam)
        for (size_t mu = 0; mu < G; ++mu)
            if (a.orients_idx(static_cast<int>(lam), static_cast<int>(mu)))
                d[lam][mu] = LaurentV::monomial(
                    lower_degree(a.weight(static_cast<int>(lam)), a.weight(static_cast<int>(mu))));
    return d;
}

CheckReport check_grothendieck(const DiagramAlgebra& a) {
    CheckReport r;
    const int G = static_cast<int>(a.weights().size());
    auto d = decomposition_matrix(a);
    // unitriangular with respect to the Bruhat order (block order refines it)
    for (int lam = 0; lam < G; ++lam) {
        if (d[static_cast<size_t>(lam)][static_cast<size_t>(lam)] != LaurentV(Int(1)))
            r.fail("decomposition matrix diagonal is not 1");
        for (int mu = 0; mu < G; ++mu)
            if (!d[static_cast<size_t>(lam)][static_cast<size_t>(mu)].is_zero() &&
                !bruhat_leq(a.weight(lam), a.weight(mu)))
                r.fail("decomposition matrix is not Bruhat triangular");
    }
    LaurentV kfact = quantum_factorial_zero(a.k());
    std::vector<std::vector<LaurentV>> std_cls(static_cast<size_t>(G)), prop_cls(static_cast<size_t>(G));
    for (int mu = 0; mu < G; ++mu) {
        std_cls[static_cast<size_t>(mu)] = grothendieck_class(standard_module(a, mu, false));
        prop_cls[static_cast<size_t>(mu)] = grothendieck_class(proper_standard_module(a, mu, false));
    }
    for (int mu = 0; mu < G; ++mu) {
        for (int lam = 0; lam < G; ++lam) {
            if (prop_cls[static_cast<size_t>(mu)][static_cast<size_t>(lam)] !=
                d[static_cast<size_t>(lam)][static_cast<size_t>(mu)])
                r.fail("[proper(mu)] != sum d [L] at mu=" + a.weight(mu).str());
            if (std_cls[static_cast<size_t>(mu)][static_cast<size_t>(lam)] !=
                kfact * prop_cls[static_cast<size_t>(mu)][static_cast<size_t>(lam)])
                r.fail("[standard(mu)] != [k]_0! [proper(mu)] at mu=" + a.weight(mu).str());
        }
    }
    for (int lam = 0; lam < G; ++lam) {
        auto p_cls = grothendieck_class(projective_module(a, lam, false));
        for (int nu = 0; nu < G; ++nu) {
            LaurentV expect;
            for (int mu = 0; mu < G; ++mu)
                expect += d[static_cast<size_t>(lam)][static_cast<size_t>(mu)] *
                          std_cls[static_cast<size_t>(mu)][static_cast<size_t>(nu)];
            if (p_cls[static_cast<size_t>(nu)] != expect)
                r.fail("[P(lambda)] != sum d [standard] at lambda=" + a.weight(lam).str());
        }
    }
    return r;
}

std::vector<int> self_dual_projectives(const DiagramAlgebra& a) {
    std::vector<int> out;
    const int G = static_cast<int>(a.weights().size());
    auto cartan = a.graded_cartan();
    for (int lam = 0; lam < G; ++lam) {
        LaurentV grdim;
        for (int nu = 0; nu < G; ++nu)
            grdim += cartan[static_cast<size_t>(nu)][static_cast<size_t>(lam)];
        if (!grdim.is_palindromic()) continue;
        // Self-duality swaps head and socle, so the socle simple must be
        // L(lambda) itself: the top-degree component of A e_lambda has to be
        // one-dimensional with lower weight lambda.
        int top = grdim.max_exp();
        std::vector<int> top_elts;
        for (int i = 0; i < a.dim(); ++i)
            if (a.at(i).upper == lam && a.at(i).degree == top) top_elts.push_back(i);
        if (top_elts.size() != 1) continue;
        if (a.at(top_elts[0]).lower != lam) continue;
        out.push_back(lam);
    }
    return out;
}

CheckReport check_self_dual(const DiagramAlgebra& a) {
    CheckReport r;
    // the socle of every projective contains the simple of the defect-swap
    // weight, sitting at the top degree
    for (int lam = 0; lam < static_cast<int>(a.weights().size()); ++lam) {
        int top = -1;
        for (int i = 0; i < a.dim(); ++i)
            if (a.at(i).upper == lam) top = std::max(top, a.at(i).degree);
        Weight expected = tilde(a.weight(lam));
        bool found = false;
        for (int i = 0; i < a.dim(); ++i)
            if (a.at(i).upper == lam && a.at(i).degree == top &&
                a.weight(a.at(i).lower) == expected)
                found = true;
        if (!found) r.fail("top of A e_lambda misses the defect-swap weight at " +
                           a.weight(lam).str());
    }
    std::vector<int> got = self_dual_projectives(a);
    std::vector<int> expect;
    for (int lam = 0; lam < static_cast<int>(a.weights().size()); ++lam)
        if (maximal_defect(a.weight(lam))) expect.push_back(lam);
    if (got != expect)
        r.fail("self-dual projectives are not exactly the maximal-defect weights");
    return r;
}

CheckReport properly_stratified_check(const DiagramAlgebra& a) {
    CheckReport r;
    const int G = static_cast<int>(a.weights().size());
    for (int lam = 0; lam < G; ++lam) {
        CheckReport s1 = check_standard_filtration(a, lam);
        if (!s1.pass) { r.fail("PS1 at " + a.weight(lam).str() + ": " + s1.failures.front()); }
        CheckReport s2 = check_proper_filtration(a, lam);
        if (!s2.pass) { r.fail("PS2 at " + a.weight(lam).str() + ": " + s2.failures.front()); }
        CheckReport s3 = check_radical_filtration(a, lam);
        if (!s3.pass) { r.fail("PS3 at " + a.weight(lam).str() + ": " + s3.failures.front()); }
    }
    // multiplicity matrix of propers in standards: the filtration layers
    // verified above use only the module's own proper standard, so the matrix
    // is diagonal; the diagonal entry is the Poincare polynomial of S_k.
    LaurentV multiplicity;
    for (const Permutation& s : a.sk()) multiplicity.add_term(2 * s.length(), Int(1));
    if (multiplicity != quantum_factorial_zero(a.k()))
        r.fail("proper-standard multiplicity is not [k]_0!");
    return r;
}

LaurentV graded_hom_dim(const GradedModule& m, const GradedModule& n) {
    if (m.alg != n.alg) throw std::invalid_argument("graded_hom_dim: different algebras");
    const DiagramAlgebra& a = *m.alg;
    LaurentV out;
    // A degree-j map sends M_d to N_{d+j}; collect the feasible shifts.
    std::map<int, std::vector<std::pair<int, int>>> unknowns_by_shift;  // shift -> (row in N, col in M)
    for (int c = 0; c < m.dim(); ++c)
        for (int row = 0; row < n.dim(); ++row)
            unknowns_by_shift[n.deg[static_cast<size_t>(row)] - m.deg[static_cast<size_t>(c)]]
                .emplace_back(row, c);
    for (const auto& [shift, unknowns] : unknowns_by_shift) {
        std::map<std::pair<int, int>, size_t> upos;
        for (size_t u = 0; u < unknowns.size(); ++u) upos[unknowns[u]] = u;
        RowSpace rs(unknowns.size());
        // T act_M(x) = act_N(x) T for all basis x; equations grouped by the
        // output row of N and assembled sparsely per (x, input column).
        for (int x = 0; x < a.dim(); ++x) {
            for (int c = 0; c < m.dim(); ++c) {
                std::map<int, std::map<size_t, Rat>> eq;  // N row -> unknown -> coeff
                for (const auto& [mid, coeff] : m.action[static_cast<size_t>(x)][static_cast<size_t>(c)]) {
                    for (int rr = 0; rr < n.dim(); ++rr) {
                        auto it = upos.find({rr, mid});
                        if (it != upos.end()) eq[rr][it->second] += Rat(coeff);
                    }
                }
                for (int mid = 0; mid < n.dim(); ++mid) {
                    if (n.deg[static_cast<size_t>(mid)] != m.deg[static_cast<size_t>(c)] + shift) continue;
                    auto it = upos.find({mid, c});
                    if (it == upos.end()) continue;
                    for (const auto& [rr2, coeff] : n.action[static_cast<size_t>(x)][static_cast<size_t>(mid)])
                        eq[rr2][it->second] -= Rat(coeff);
                }
                for (const auto& [rr, sparse] : eq) {
                    bool any = false;
                    for (const auto& [u, val] : sparse) any = any || val != 0;
                    if (!any) continue;
                    std::vector<Rat> row(unknowns.size(), Rat(0));
                    for (const auto& [u, val] : sparse) row[u] = val;
                    rs.add_row(std::move(row));
                }
            }
        }
        size_t dim_hom = unknowns.size() - rs.rank();
        if (dim_hom > 0) out.add_term(shift, Int(static_cast<long>(dim_hom)));
    }
    return out;
}

}  // namespace forkalg
