#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrange/linalg.hpp"

namespace arrange {

using Monomial = std::vector<int>; // exponent vector

// Sparse multivariate polynomial over Q. Small and exact; all the oracle
// needs is arithmetic, evaluation and leading-term comparison.
class MPoly {
public:
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int index);
    static MPoly linear_form(const std::vector<long long>& coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& c) const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly pow(int e) const;

    Rat eval(const std::vector<Rat>& point) const;

    // leading term in the map order (lex on exponent vectors)
    std::pair<Monomial, Rat> leading() const;

    std::string str() const;

private:
    int nvars_;
    std::map<Monomial, Rat> terms_;
};

// all exponent vectors of the given total degree, lex order
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

} // namespace arrange
