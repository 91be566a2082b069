#include "forkalg/json_io.hpp"

#include <json.hpp>

namespace forkalg {

namespace {

long long to_int64(const Int& c) {
    if (!c.fits_slong_p())
        throw std::overflow_error("structure constant does not fit in a machine word");
    return c.get_si();
}

}  // namespace

AlgebraDump dump_algebra(const DiagramAlgebra& a) {
    AlgebraDump d;
    d.n = a.n();
    d.k = a.k();
    d.basis.reserve(static_cast<size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        const BasisElement& b = a.at(i);
        d.basis.push_back({a.weight(b.lower).str(), a.weight(b.eta).str(),
                           a.sk()[static_cast<size_t>(b.sigma)].str(), a.weight(b.upper).str(),
                           b.degree});
    }
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (a.at(i).upper != a.at(j).lower) continue;
            const auto& prod = a.product(i, j);
            if (prod.empty()) continue;
            std::vector<std::pair<int, long long>> entries;
            entries.reserve(prod.size());
            for (const auto& [idx, c] : prod) entries.emplace_back(idx, to_int64(c));
            d.products.emplace_back(i, j, std::move(entries));
        }
    }
    return d;
}

std::string algebra_to_json(const DiagramAlgebra& a) {
    AlgebraDump d = dump_algebra(a);
    nlohmann::ordered_json j;
    j["n"] = d.n;
    j["k"] = d.k;
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& b : d.basis) {
        nlohmann::ordered_json e;
        e["lower"] = b.lower;
        e["eta"] = b.eta;
        e["sigma"] = b.sigma;
        e["upper"] = b.upper;
        e["degree"] = b.degree;
        j["basis"].push_back(std::move(e));
    }
    j["products"] = nlohmann::ordered_json::array();
    for (const auto& [i, jj, entries] : d.products) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        row.push_back(i);
        row.push_back(jj);
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [idx, c] : entries) terms.push_back(nlohmann::ordered_json::array({idx, c}));
        row.push_back(std::move(terms));
        j["products"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

AlgebraDump parse_algebra_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AlgebraDump d;
    d.n = j.at("n").get<int>();
    d.k = j.at("k").get<int>();
    for (const auto& e : j.at("basis")) {
        d.basis.push_back({e.at("lower").get<std::string>(), e.at("eta").get<std::string>(),
                           e.at("sigma").get<std::string>(), e.at("upper").get<std::string>(),
                           e.at("degree").get<int>()});
    }
    for (const auto& row : j.at("products")) {
        std::vector<std::pair<int, long long>> entries;
        for (const auto& t : row.at(2)) entries.emplace_back(t.at(0).get<int>(), t.at(1).get<long long>());
        d.products.emplace_back(row.at(0).get<int>(), row.at(1).get<int>(), std::move(entries));
    }
    return d;
}

}  // namespace forkalg
