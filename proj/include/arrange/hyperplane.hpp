#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrange {

/*
  An integral affine hyperplane sum(coeffs[i] * x_i) = constant, kept in
  canonical form: gcd of all entries (constant included) is 1 and the
  first nonzero coefficient is positive.
*/
class Hyperplane {
public:
    Hyperplane(std::vector<long long> coeffs, long long constant)
        : coeffs_(std::move(coeffs)), constant_(constant) {
        canonicalize();
    }

    int dim() const { return (int)coeffs_.size(); }
    const std::vector<long long>& coeffs() const { return coeffs_; }
    long long constant() const { return constant_; }
    bool is_central() const { return constant_ == 0; }

    auto operator<=>(const Hyperplane& o) const = default;

    std::string str(const std::vector<std::string>& vars = {}) const;

private:
    void canonicalize() {
        int first = -1;
        long long g = std::llabs(constant_);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            g = std::gcd(g, std::llabs(coeffs_[i]));
            if (first < 0 && coeffs_[i] != 0) first = (int)i;
        }
        if (first < 0) throw std::invalid_argument("hyperplane: zero normal");
        long long sign = coeffs_[first] > 0 ? 1 : -1;
        g *= sign;
        for (auto& c : coeffs_) c /= g;
        constant_ /= g;
    }

    std::vector<long long> coeffs_;
    long long constant_;
};

} // namespace arrange
