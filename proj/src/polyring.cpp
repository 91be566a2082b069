#include "forkalg/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace forkalg {

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string IntPolynomial::str() const {
    if (terms_.empty()) return "0";
    // Display order: x1-major descending, so "3*x1^2*x2 - x4" reads naturally.
    std::vector<std::pair<Monomial, Int>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return a.first.e > b.first.e;
    });
    std::string out;
    for (auto it = items.begin(); it != items.end(); ++it) {
        const Monomial& m = it->first;
        Int c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            out += c.get_str();
        } else if (c == 1) {
            out += m.str();
        } else {
            out += c.get_str() + "*" + m.str();
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int n;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + why);
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    // term := [int] { '*'? factor }* ; factor := x<i> ['^' int]
    IntPolynomial parse_term(bool negative) {
        Int coeff = 1;
        Monomial m(n);
        bool saw_anything = false;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_int();
            saw_anything = true;
        }
        for (;;) {
            skip_ws();
            size_t before = pos;
            eat('*');
            skip_ws();
            if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                Int idx = parse_int();
                long i = idx.get_si();
                if (i < 1 || i > n) fail("variable index out of range");
                int power = 1;
                if (eat('^')) power = static_cast<int>(parse_int().get_si());
                if (power < 0) fail("negative exponent");
                m.e[static_cast<size_t>(i - 1)] += power;
                saw_anything = true;
            } else {
                pos = before;
                break;
            }
        }
        if (!saw_anything) fail("empty term");
        if (negative) coeff = -coeff;
        return IntPolynomial::monomial(std::move(m), std::move(coeff));
    }

    IntPolynomial parse_poly() {
        IntPolynomial p(n);
        bool negative = eat('-');
        p += parse_term(negative);
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) {
                p += parse_term(false);
            } else if (eat('-')) {
                p += parse_term(true);
            } else {
                fail("expected '+' or '-'");
            }
        }
        return p;
    }
};

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text, int n) {
    Parser parser{text, 0, n};
    parser.skip_ws();
    if (parser.pos >= text.size()) throw std::invalid_argument("empty polynomial text");
    return parser.parse_poly();
}

IntPolynomial IntPolynomial::apply_si(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("apply_si: index out of range");
    IntPolynomial r(n_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        std::swap(mm.e[static_cast<size_t>(i - 1)], mm.e[static_cast<size_t>(i)]);
        r.terms_[std::move(mm)] = c;
    }
    return r;
}

IntPolynomial complete_symmetric(int j, const std::vector<int>& vars, int n) {
    if (j < 0) throw std::invalid_argument("complete_symmetric: negative degree");
    if (j == 0) return IntPolynomial(n, Int(1));
    if (vars.empty()) return IntPolynomial(n);
    // h_j = sum of all monomials of degree j in the named variables, i.e.
    // one term per exponent composition of j over vars.
    IntPolynomial p(n);
    std::vector<int> cur(vars.size(), 0);
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx + 1 == vars.size()) {
            cur[idx] = remaining;
            Monomial m(n);
            for (size_t t = 0; t < vars.size(); ++t) m.e[static_cast<size_t>(vars[t] - 1)] = cur[t];
            p.add_term(m, Int(1));
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            cur[idx] = take;
            self(self, idx + 1, remaining - take);
        }
    };
    rec(rec, 0, j);
    return p;
}

IntPolynomial complete_symmetric_initial(int j, int m, int n) {
    std::vector<int> vars(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) vars[static_cast<size_t>(i)] = i + 1;
    return complete_symmetric(j, vars, n);
}

IntPolynomial demazure(int i, const IntPolynomial& f) {
    const int n = f.nvars();
    if (i < 1 || i >= n) throw std::invalid_argument("demazure: index out of range");
    IntPolynomial g = f - f.apply_si(i);
    if (g.is_zero()) return IntPolynomial(n);
    // Divide by (x_i - x_{i+1}): collect by the x_i-exponent and run synthetic
    // division in that variable. The remainder g|_{x_i = x_{i+1}} vanishes
    // because g is s_i-antisymmetric.
    std::map<int, IntPolynomial> by_deg;  // x_i-degree -> coefficient poly (x_i stripped)
    int maxd = 0;
    for (const auto& [m, c] : g.terms()) {
        int d = m.exp(i);
        Monomial stripped = m;
        stripped.e[static_cast<size_t>(i - 1)] = 0;
        auto it = by_deg.find(d);
        if (it == by_deg.end()) it = by_deg.emplace(d, IntPolynomial(n)).first;
        it->second.add_term(stripped, c);
        if (d > maxd) maxd = d;
    }
    auto coeff_of = [&](int d) -> IntPolynomial {
        auto it = by_deg.find(d);
        return it == by_deg.end() ? IntPolynomial(n) : it->second;
    };
    const IntPolynomial xnext = IntPolynomial::variable(i + 1, n);
    IntPolynomial result(n);
    IntPolynomial q(n);  // quotient coefficient at current degree
    for (int d = maxd - 1; d >= 0; --d) {
        q = coeff_of(d + 1) + xnext * q;
        for (const auto& [m, c] : q.terms()) {
            Monomial full = m;
            full.e[static_cast<size_t>(i - 1)] = d;
            result.add_term(full, c);
        }
    }
    IntPolynomial check = result * (IntPolynomial::variable(i, n) - xnext);
    if (check != g) throw std::logic_error("demazure: division was not exact");
    return result;
}

IntPolynomial p_operator(int i, const IntPolynomial& f) {
    return f - IntPolynomial::variable(i, f.nvars()) * demazure(i, f);
}

}  // namespace forkalg
