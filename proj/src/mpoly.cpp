#include "arrange/mpoly.hpp"

#include <stdexcept>

namespace arrange {

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    MPoly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(m, Rat(1));
    return p;
}

MPoly MPoly::linear_form(const std::vector<long long>& coeffs) {
    MPoly p((int)coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Monomial m(coeffs.size(), 0);
        m[i] = 1;
        p.add_term(m, rat_of(coeffs[i]));
    }
    return p;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out(nvars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

MPoly MPoly::pow(int e) const {
    MPoly out = constant(nvars_, Rat(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if ((int)point.size() != nvars_) throw std::invalid_argument("eval: point size");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

std::pair<Monomial, Rat> MPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.get_str();
        for (int i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
        }
    }
    return s;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // lex enumeration by recursion on the first variable
    struct Rec {
        int nvars;
        std::vector<Monomial>& out;
        Monomial& cur;
        void go(int var, int remaining) {
            if (var + 1 == nvars) {
                cur[var] = remaining;
                out.push_back(cur);
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                cur[var] = e;
                go(var + 1, remaining - e);
            }
            cur[var] = 0;
        }
    } rec{nvars, out, cur};
    if (nvars == 0) return out;
    rec.go(0, degree);
    return out;
}

} // namespace arrange
