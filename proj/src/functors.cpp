#include "forkalg/functors.hpp"

#include <algorithm>

#include "forkalg/linalg.hpp"

namespace forkalg {

namespace {

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

bool wedge_corner_element(const DiagramAlgebra& big, int idx) {
    const BasisElement& b = big.at(idx);
    return big.weight(b.lower).wedge_at(1) && big.weight(b.upper).wedge_at(1);
}

}  // namespace

Weight weight_lift(const Weight& w) {
    if (w.wedge_at(1)) throw std::invalid_argument("weight_lift: weight does not start with a vee");
    std::string s = w.str();
    s[0] = '^';
    return Weight::parse(s);
}

Weight weight_drop(const Weight& w) {
    if (!w.wedge_at(1)) throw std::invalid_argument("weight_drop: weight does not start with a wedge");
    std::string s = w.str();
    s[0] = 'v';
    return Weight::parse(s);
}

int psi_basis(const DiagramAlgebra& small, const DiagramAlgebra& big, int big_idx) {
    if (small.n() != big.n() || small.k() + 1 != big.k())
        throw std::invalid_argument("psi_basis: algebras are not adjacent");
    const BasisElement& b = big.at(big_idx);
    if (!wedge_corner_element(big, big_idx))
        throw std::invalid_argument("psi_basis: element not in the wedge corner");
    Monomial m = p_polynomial(big.schubert(), big.weight(b.lower), big.weight(b.eta),
                              big.sk()[static_cast<size_t>(b.sigma)]);
    Weight tgt = weight_drop(big.weight(b.lower));
    Weight src = weight_drop(big.weight(b.upper));
    auto dec = monomial_to_diagram(small.schubert(), m, src, tgt);
    if (!dec) return -1;
    int idx = small.basis_index(small.weight_index(tgt), small.weight_index(dec->eta),
                                [&] {
                                    const auto& sk = small.sk();
                                    for (size_t s = 0; s < sk.size(); ++s)
                                        if (sk[s] == dec->sigma) return static_cast<int>(s);
                                    throw std::logic_error("psi_basis: sigma not found");
                                }(),
                                small.weight_index(src));
    if (idx < 0) throw std::logic_error("psi_basis: image diagram not in the smaller basis");
    if (small.at(idx).degree != b.degree) throw std::logic_error("psi_basis: degree not preserved");
    return idx;
}

AlgebraElement psi_map(const DiagramAlgebra& small, const DiagramAlgebra& big,
                       const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [idx, c] : x) {
        if (!wedge_corner_element(big, idx)) continue;  // e^wedge x e^wedge
        int im = psi_basis(small, big, idx);
        if (im < 0) continue;
        Int& slot = out[im];
        slot += c;
        if (slot == 0) out.erase(im);
    }
    return out;
}

CheckReport check_psi(const DiagramAlgebra& small, const DiagramAlgebra& big, uint64_t samples) {
    CheckReport r;
    std::vector<int> corner;
    for (int i = 0; i < big.dim(); ++i)
        if (wedge_corner_element(big, i)) corner.push_back(i);

    // surjectivity onto the maximal-defect corner: psi maps basis to basis or
    // zero, so it is enough that every corner element downstairs is hit
    std::vector<char> hit(static_cast<size_t>(small.dim()), 0);
    for (int i : corner) {
        int im = psi_basis(small, big, i);
        if (im >= 0) hit[static_cast<size_t>(im)] = 1;
    }
    for (int j = 0; j < small.dim(); ++j) {
        const BasisElement& b = small.at(j);
        bool in_corner = maximal_defect(small.weight(b.lower)) && maximal_defect(small.weight(b.upper));
        if (in_corner && !hit[static_cast<size_t>(j)])
            r.fail("psi misses corner element " + std::to_string(j));
        if (!in_corner && hit[static_cast<size_t>(j)])
            r.fail("psi image leaves the maximal-defect corner");
    }

    // idempotents map to idempotents
    for (const Weight& w : big.weights()) {
        if (!w.wedge_at(1)) continue;
        int e_big = big.idempotent_index(big.weight_index(w));
        int im = psi_basis(small, big, e_big);
        if (im != small.idempotent_index(small.weight_index(weight_drop(w))))
            r.fail("psi(e) is not the dropped idempotent at " + w.str());
    }

    // multiplicativity on corner pairs
    auto check_pair = [&](int i, int j) {
        AlgebraElement xy;
        for (const auto& [idx, c] : big.product(i, j)) xy[idx] = c;
        AlgebraElement lhs = psi_map(small, big, xy);
        AlgebraElement xi, xj;
        xi[i] = 1;
        xj[j] = 1;
        AlgebraElement rhs = small.multiply(psi_map(small, big, xi), psi_map(small, big, xj));
        if (lhs != rhs)
            r.fail("psi not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    };
    if (samples == 0) {
        for (size_t a = 0; a < corner.size() && r.pass; ++a)
            for (size_t b = 0; b < corner.size() && r.pass; ++b) check_pair(corner[a], corner[b]);
    } else {
        SplitMix rng{0x9517bccdULL + static_cast<uint64_t>(big.dim())};
        for (uint64_t t = 0; t < samples && r.pass && !corner.empty(); ++t)
            check_pair(corner[rng.below(corner.size())], corner[rng.below(corner.size())]);
    }
    return r;
}

Bimodule build_F(const DiagramAlgebra& small, const DiagramAlgebra& big) {
    Bimodule f;
    f.left_alg = &small;
    f.right_alg = &big;
    f.name = "F(" + std::to_string(small.n()) + "," + std::to_string(small.k()) + ")";
    for (int i = 0; i < small.dim(); ++i)
        if (maximal_defect(small.weight(small.at(i).upper))) f.basis.push_back(i);
    std::map<int, int> pos;
    for (size_t c = 0; c < f.basis.size(); ++c) pos[f.basis[c]] = static_cast<int>(c);
    for (int i : f.basis) f.deg.push_back(small.at(i).degree);

    f.left_action.assign(static_cast<size_t>(small.dim()), {});
    for (int x = 0; x < small.dim(); ++x) {
        auto& cols = f.left_action[static_cast<size_t>(x)];
        cols.assign(f.basis.size(), {});
        for (size_t c = 0; c < f.basis.size(); ++c) {
            for (const auto& [idx, coeff] : small.product(x, f.basis[c]))
                cols[c].emplace_back(pos.at(idx), coeff);
        }
    }
    f.right_action.assign(static_cast<size_t>(big.dim()), {});
    for (int x = 0; x < big.dim(); ++x) {
        auto& cols = f.right_action[static_cast<size_t>(x)];
        cols.assign(f.basis.size(), {});
        if (!wedge_corner_element(big, x)) continue;
        int im = psi_basis(small, big, x);
        if (im < 0) continue;
        for (size_t c = 0; c < f.basis.size(); ++c) {
            for (const auto& [idx, coeff] : small.product(f.basis[c], im))
                cols[c].emplace_back(pos.at(idx), coeff);
        }
    }
    return f;
}

Bimodule build_E(const DiagramAlgebra& small, const DiagramAlgebra& big) {
    // Same underlying space as F; both actions twisted through star.
    Bimodule f = build_F(small, big);
    Bimodule e;
    e.left_alg = &big;
    e.right_alg = &small;
    e.name = "E(" + std::to_string(small.n()) + "," + std::to_string(small.k()) + ")";
    e.basis = f.basis;
    e.deg = f.deg;
    e.left_action.assign(static_cast<size_t>(big.dim()), {});
    for (int x = 0; x < big.dim(); ++x)
        e.left_action[static_cast<size_t>(x)] = f.right_action[static_cast<size_t>(big.star_index(x))];
    e.right_action.assign(static_cast<size_t>(small.dim()), {});
    for (int x = 0; x < small.dim(); ++x)
        e.right_action[static_cast<size_t>(x)] = f.left_action[static_cast<size_t>(small.star_index(x))];
    return e;
}

CheckReport check_bimodule_axioms(const Bimodule& b, uint64_t samples) {
    CheckReport r;
    const int dl = b.left_alg->dim(), dr = b.right_alg->dim();
    auto apply = [&](const std::vector<std::vector<std::pair<int, Int>>>& cols,
                     const std::map<int, Int>& vec) {
        std::map<int, Int> out;
        for (const auto& [c, coeff] : vec)
            for (const auto& [row, acoeff] : cols[static_cast<size_t>(c)]) {
                Int& slot = out[row];
                slot += coeff * acoeff;
                if (slot == 0) out.erase(row);
            }
        return out;
    };
    auto check_triple = [&](int x, int c, int y) {
        std::map<int, Int> vec{{c, Int(1)}};
        auto lhs = apply(b.left_action[static_cast<size_t>(x)],
                         apply(b.right_action[static_cast<size_t>(y)], vec));
        auto rhs = apply(b.right_action[static_cast<size_t>(y)],
                         apply(b.left_action[static_cast<size_t>(x)], vec));
        if (lhs != rhs)
            r.fail("bimodule actions do not commute at (" + std::to_string(x) + "," +
                   std::to_string(c) + "," + std::to_string(y) + ")");
    };
    if (samples == 0) {
        for (int x = 0; x < dl && r.pass; ++x)
            for (int c = 0; c < b.dim() && r.pass; ++c)
                for (int y = 0; y < dr && r.pass; ++y) check_triple(x, c, y);
    } else {
        SplitMix rng{0xb1610dULL * static_cast<uint64_t>(b.dim() + 1)};
        for (uint64_t t = 0; t < samples && r.pass && b.dim() > 0; ++t)
            check_triple(static_cast<int>(rng.below(static_cast<uint64_t>(dl))),
                         static_cast<int>(rng.below(static_cast<uint64_t>(b.dim()))),
                         static_cast<int>(rng.below(static_cast<uint64_t>(dr))));
    }
    return r;
}

CheckReport check_F_on_projectives(const Bimodule& f) {
    CheckReport r;
    const DiagramAlgebra& small = *f.left_alg;
    const DiagramAlgebra& big = *f.right_alg;
    for (int mu = 0; mu < static_cast<int>(big.weights().size()); ++mu) {
        const Weight& w = big.weight(mu);
        const auto& cols = f.right_action[static_cast<size_t>(big.idempotent_index(mu))];
        if (!w.wedge_at(1)) {
            for (size_t c = 0; c < cols.size(); ++c)
                if (!cols[c].empty()) {
                    r.fail("F e_mu nonzero for vee-starting mu = " + w.str());
                    return r;
                }
            continue;
        }
        int lam = small.weight_index(weight_drop(w));
        for (size_t c = 0; c < cols.size(); ++c) {
            bool keep = small.at(f.basis[c]).upper == lam;
            bool fixes = cols[c].size() == 1 && cols[c][0].first == static_cast<int>(c) &&
                         cols[c][0].second == 1;
            if (keep != fixes || (!keep && !cols[c].empty())) {
                r.fail("right e_mu is not the projection onto P(" + weight_drop(w).str() + ")");
                return r;
            }
        }
    }
    // the two-sided ideal generated by the vee-starting idempotents acts as 0:
    // psi(e^ u w e^) = 0 whenever the inner weight starts with a vee
    for (int u = 0; u < big.dim() && r.pass; ++u) {
        if (!big.weight(big.at(u).lower).wedge_at(1)) continue;
        if (big.weight(big.at(u).upper).wedge_at(1)) continue;  // middle must start with vee
        for (int w2 = 0; w2 < big.dim() && r.pass; ++w2) {
            if (big.at(w2).lower != big.at(u).upper) continue;
            if (!big.weight(big.at(w2).upper).wedge_at(1)) continue;
            AlgebraElement prod;
            for (const auto& [idx, c] : big.product(u, w2)) prod[idx] = c;
            if (!psi_map(small, big, prod).empty()) {
                r.fail("corner ideal does not die under psi at (" + std::to_string(u) + "," +
                       std::to_string(w2) + ")");
            }
        }
    }
    return r;
}

CheckReport adjunction_check(const DiagramAlgebra& small, const DiagramAlgebra& big) {
    CheckReport r;
    Bimodule f = build_F(small, big);
    Bimodule e = build_E(small, big);
    const int Gs = static_cast<int>(small.weights().size());
    const int Gb = static_cast<int>(big.weights().size());
    for (int mu = 0; mu < Gb; ++mu) {
        // F (x) P(mu): the e_mu slice of F as a left module over `small`
        std::vector<int> slice;
        for (size_t c = 0; c < f.basis.size(); ++c) {
            const auto& col = f.right_action[static_cast<size_t>(big.idempotent_index(mu))][c];
            if (col.size() == 1 && col[0].first == static_cast<int>(c) && col[0].second == 1)
                slice.push_back(static_cast<int>(c));
            else if (!col.empty())
                r.fail("right e_mu is not idempotent on F");
        }
        GradedModule fp;
        fp.alg = &small;
        fp.name = "F.P(" + big.weight(mu).str() + ")";
        std::map<int, int> pos;
        for (size_t c = 0; c < slice.size(); ++c) pos[slice[c]] = static_cast<int>(c);
        for (int c : slice) {
            fp.deg.push_back(f.deg[static_cast<size_t>(c)]);
            fp.support.push_back(small.at(f.basis[static_cast<size_t>(c)]).lower);
            fp.labels.push_back("[" + std::to_string(c) + "]");
        }
        fp.action.assign(static_cast<size_t>(small.dim()), {});
        for (int x = 0; x < small.dim(); ++x) {
            auto& cols = fp.action[static_cast<size_t>(x)];
            cols.assign(slice.size(), {});
            for (size_t c = 0; c < slice.size(); ++c)
                for (const auto& [row, coeff] :
                     f.left_action[static_cast<size_t>(x)][static_cast<size_t>(slice[c])]) {
                    auto it = pos.find(row);
                    if (it == pos.end())
                        throw std::logic_error("adjunction_check: slice is not left-stable");
                    cols[c].emplace_back(it->second, coeff);
                }
        }
        fp.has_action = true;

        for (int nu = 0; nu < Gs; ++nu) {
            LaurentV lhs = graded_hom_dim(fp, projective_module(small, nu));
            // RHS: e_mu slice of E e_nu under the left action of `big`
            LaurentV rhs;
            for (size_t c = 0; c < e.basis.size(); ++c) {
                if (small.at(e.basis[c]).lower != nu) continue;
                const auto& col = e.left_action[static_cast<size_t>(big.idempotent_index(mu))][c];
                if (col.size() == 1 && col[0].first == static_cast<int>(c) && col[0].second == 1)
                    rhs.add_term(e.deg[c], Int(1));
                else if (!col.empty())
                    r.fail("left e_mu is not idempotent on E");
            }
            // Hom degrees count maps P -> M<j>; the slice grading matches the
            // module grading directly.
            if (lhs != rhs) {
                r.fail("adjunction table mismatch at mu=" + big.weight(mu).str() + " nu=" +
                       small.weight(nu).str() + ": " + lhs.str() + " vs " + rhs.str());
            }
        }
    }
    return r;
}

LaurentV center_graded_dim(const DiagramAlgebra& a) {
    std::vector<int> corner;
    for (int i = 0; i < a.dim(); ++i)
        if (maximal_defect(a.weight(a.at(i).lower)) && maximal_defect(a.weight(a.at(i).upper)))
            corner.push_back(i);
    std::map<int, std::vector<int>> by_degree;
    for (int i : corner) by_degree[a.at(i).degree].push_back(i);
    LaurentV out;
    for (const auto& [d, members] : by_degree) {
        std::map<int, size_t> upos;
        for (size_t u = 0; u < members.size(); ++u) upos[members[u]] = u;
        RowSpace rs(members.size());
        for (int s : corner) {
            // commutator with x_s, one equation per output basis index
            std::map<int, std::map<size_t, Rat>> eq;
            for (size_t u = 0; u < members.size(); ++u) {
                for (const auto& [idx, c] : a.product(members[u], s)) eq[idx][u] += Rat(c);
                for (const auto& [idx, c] : a.product(s, members[u])) eq[idx][u] -= Rat(c);
            }
            for (const auto& [out_idx, sparse] : eq) {
                bool any = false;
                for (const auto& [u, val] : sparse) any = any || val != 0;
                if (!any) continue;
                std::vector<Rat> row(members.size(), Rat(0));
                for (const auto& [u, val] : sparse) row[u] = val;
                rs.add_row(std::move(row));
            }
        }
        size_t nullity = members.size() - rs.rank();
        if (nullity > 0) out.add_term(d, Int(static_cast<long>(nullity)));
    }
    return out;
}

LaurentV presentation_graded_dim(int n, int k) {
    // generator list: h-degree together with the variable subset
    std::vector<std::pair<int, std::vector<int>>> gens;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start) -> void {
        int m = static_cast<int>(subset.size());
        if (m >= 1) {
            if (m <= n - k) gens.emplace_back(k + 1, subset);
            else gens.emplace_back(n - m + 1, subset);
        }
        for (int i = start; i <= n; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 1);

    // monomials of each x-degree
    auto monomials_of_degree = [&](int d) {
        std::vector<Monomial> out;
        Monomial m(n);
        auto build = [&](auto&& self, int slot, int remaining) -> void {
            if (slot == n - 1) {
                m.e[static_cast<size_t>(slot)] = remaining;
                out.push_back(m);
                return;
            }
            for (int t = 0; t <= remaining; ++t) {
                m.e[static_cast<size_t>(slot)] = t;
                self(self, slot + 1, remaining - t);
            }
        };
        build(build, 0, d);
        return out;
    };

    LaurentV out(Int(1));  // degree 0: constants
    for (int d = 1; d <= 200; ++d) {
        std::vector<Monomial> mons = monomials_of_degree(d);
        std::map<Monomial, size_t, MonomialLess> pos;
        for (size_t i = 0; i < mons.size(); ++i) pos[mons[i]] = i;
        RowSpace rs(mons.size());
        for (const auto& [jdeg, vars] : gens) {
            if (jdeg > d) continue;
            IntPolynomial g = complete_symmetric(jdeg, vars, n);
            for (const Monomial& m : monomials_of_degree(d - jdeg)) {
                std::vector<Rat> row(mons.size(), Rat(0));
                for (const auto& [gm, gc] : g.terms()) row[pos.at(gm * m)] = Rat(gc);
                rs.add_row(std::move(row));
            }
        }
        size_t dim_d = mons.size() - rs.rank();
        if (dim_d == 0) break;  // the ideal swallows all higher degrees too
        out.add_term(2 * d, Int(static_cast<long>(dim_d)));
        if (d == 200) throw std::logic_error("presentation_graded_dim: quotient did not terminate");
    }
    return out;
}

LaurentV bimodule_end_graded_dim(const Bimodule& f) {
    // T F_x = F_x T for the left actions and T G_y = G_y T for the right
    // actions; same sparse assembly as the module hom solver.
    std::map<int, std::vector<std::pair<int, int>>> unknowns_by_shift;
    for (int c = 0; c < f.dim(); ++c)
        for (int row = 0; row < f.dim(); ++row)
            unknowns_by_shift[f.deg[static_cast<size_t>(row)] - f.deg[static_cast<size_t>(c)]]
                .emplace_back(row, c);
    LaurentV out;
    for (const auto& [shift, unknowns] : unknowns_by_shift) {
        std::map<std::pair<int, int>, size_t> upos;
        for (size_t u = 0; u < unknowns.size(); ++u) upos[unknowns[u]] = u;
        RowSpace rs(unknowns.size());
        auto feed = [&](const std::vector<std::vector<std::vector<std::pair<int, Int>>>>& family) {
            for (const auto& mat : family) {
                for (int c = 0; c < f.dim(); ++c) {
                    std::map<int, std::map<size_t, Rat>> eq;
                    for (const auto& [mid, coeff] : mat[static_cast<size_t>(c)])
                        for (int rr = 0; rr < f.dim(); ++rr) {
                            auto it = upos.find({rr, mid});
                            if (it != upos.end()) eq[rr][it->second] += Rat(coeff);
                        }
                    for (int mid = 0; mid < f.dim(); ++mid) {
                        if (f.deg[static_cast<size_t>(mid)] != f.deg[static_cast<size_t>(c)] + shift)
                            continue;
                        auto it = upos.find({mid, c});
                        if (it == upos.end()) continue;
                        for (const auto& [rr2, coeff] : mat[static_cast<size_t>(mid)])
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
        };
        feed(f.left_action);
        feed(f.right_action);
        size_t dim_hom = unknowns.size() - rs.rank();
        if (dim_hom > 0) out.add_term(shift, Int(static_cast<long>(dim_hom)));
    }
    return out;
}

CenterReport center_vs_presentation(const DiagramAlgebra& a) {
    CenterReport r;
    r.center = center_graded_dim(a);
    r.presentation = presentation_graded_dim(a.n(), a.k());
    return r;
}

}  // namespace forkalg
