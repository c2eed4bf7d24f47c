#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace arrange {

// Dense univariate polynomial over Z, coefficients ascending by degree.
class IntegerPolynomial {
public:
    IntegerPolynomial() {}
    explicit IntegerPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) {
        trim();
    }

    static IntegerPolynomial zero() { return IntegerPolynomial(); }
    static IntegerPolynomial constant(const mpz_class& v);
    static IntegerPolynomial variable(); // t
    // prod (t - r) over the given roots
    static IntegerPolynomial from_roots(const std::vector<long long>& roots);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    mpz_class coeff(int i) const {
        return (i >= 0 && i < (int)c_.size()) ? c_[i] : mpz_class(0);
    }
    const std::vector<mpz_class>& coefficients() const { return c_; }

    mpz_class eval(const mpz_class& x) const;

    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-(const IntegerPolynomial& o) const;
    IntegerPolynomial operator*(const IntegerPolynomial& o) const;
    bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntegerPolynomial& o) const { return !(*this == o); }

    // Divides by (t - r); returns quotient only when the division is exact.
    std::optional<IntegerPolynomial> divide_by_root(long long r) const;

    // All integer roots in [lo, hi] with multiplicity, plus the residual
    // factor that has no roots in that window.
    std::pair<std::vector<long long>, IntegerPolynomial>
    integer_roots(long long lo, long long hi) const;

    std::string str(const std::string& var = "t") const;
    // factored display like "t (t-4)^3" when the polynomial splits over Z;
    // falls back to the expanded form otherwise.
    std::string factored_str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

} // namespace arrange
