#include "arrange/polynomial.hpp"

#include "arrange/linalg.hpp"

#include <algorithm>
#include <map>

namespace arrange {

IntegerPolynomial IntegerPolynomial::constant(const mpz_class& v) {
    return IntegerPolynomial(std::vector<mpz_class>{v});
}

IntegerPolynomial IntegerPolynomial::variable() {
    return IntegerPolynomial(std::vector<mpz_class>{0, 1});
}

IntegerPolynomial IntegerPolynomial::from_roots(const std::vector<long long>& roots) {
    IntegerPolynomial p = constant(1);
    for (long long r : roots) {
        p = p * IntegerPolynomial(std::vector<mpz_class>{int_of(-r), mpz_class(1)});
    }
    return p;
}

mpz_class IntegerPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntegerPolynomial();
    std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntegerPolynomial(std::move(out));
}

std::optional<IntegerPolynomial> IntegerPolynomial::divide_by_root(long long r) const {
    if (is_zero()) return IntegerPolynomial();
    // synthetic division by (t - r)
    std::vector<mpz_class> q(c_.size() - 1, 0);
    mpz_class carry = 0;
    for (int i = (int)c_.size() - 1; i >= 1; --i) {
        carry = c_[i] + carry * int_of(r);
        q[i - 1] = carry;
    }
    mpz_class rem = c_[0] + carry * int_of(r);
    if (rem != 0) return std::nullopt;
    return IntegerPolynomial(std::move(q));
}

std::pair<std::vector<long long>, IntegerPolynomial>
IntegerPolynomial::integer_roots(long long lo, long long hi) const {
    std::vector<long long> roots;
    IntegerPolynomial p = *this;
    for (long long r = lo; r <= hi && !p.is_zero() && p.degree() > 0;) {
        auto q = p.divide_by_root(r);
        if (q) {
            roots.push_back(r);
            p = *q; // same r may divide again
        } else {
            ++r;
        }
    }
    return {roots, p};
}

std::string IntegerPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        bool first = s.empty();
        if (a < 0) {
            s += first ? "-" : " - ";
            a = -a;
        } else if (!first) {
            s += " + ";
        }
        bool show_coeff = (a != 1) || i == 0;
        if (show_coeff) s += a.get_str();
        if (i >= 1) {
            s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::string IntegerPolynomial::factored_str(const std::string& var) const {
    if (is_zero() || degree() <= 0) return str(var);
    long long bound = 0;
    for (const auto& c : c_) {
        mpz_class a = abs(c);
        if (a > int_of(bound)) bound = a.fits_slong_p() ? a.get_si() : (1LL << 40);
    }
    auto [roots, rest] = integer_roots(-bound - 1, bound + 1);
    if (!rest.is_zero() && rest.degree() == 0 && !roots.empty()) {
        std::map<long long, int> mult;
        for (long long r : roots) mult[r]++;
        std::string s;
        if (rest.coeff(0) != 1) s = rest.coeff(0).get_str();
        for (auto [r, m] : mult) {
            if (!s.empty()) s += " ";
            std::string f = r == 0 ? var
                            : r > 0 ? "(" + var + "-" + std::to_string(r) + ")"
                                    : "(" + var + "+" + std::to_string(-r) + ")";
            s += f;
            if (m > 1) s += "^" + std::to_string(m);
        }
        return s;
    }
    return str(var);
}

} // namespace arrange
