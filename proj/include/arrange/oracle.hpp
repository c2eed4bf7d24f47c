#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arrange/mpoly.hpp"
#include "arrange/multiarrangement.hpp"
#include "arrange/verdict.hpp"

namespace arrange {

/*
  Brute-force side of the freeness question: graded pieces of the
  logarithmic derivation module, solved exactly over Q. A derivation is a
  tuple of dim homogeneous polynomials of one degree; the constraint per
  hyperplane is divisibility of theta(alpha_H) by alpha_H^{m(H)}.
*/
struct GradedDerivationBasis {
    long long degree = 0;
    std::vector<std::vector<MPoly>> basis; // each entry: dim coefficient polys
};

GradedDerivationBasis derivation_space(const Multiarrangement& m, long long degree);
GradedDerivationBasis derivation_space(const Arrangement& a, long long degree);

// Degrees (with multiplicity) at which D gains a minimal generator, up to
// dmax: graded dimension minus the span of multiples of lower degrees.
std::vector<long long> minimal_generator_degrees(const Multiarrangement& m, long long dmax);
std::vector<long long> minimal_generator_degrees(const Arrangement& a, long long dmax);

// Saito determinant test: picks one minimal generator per candidate
// degree (iterating over echelon choices) and accepts iff some selection
// has coefficient determinant equal to a nonzero scalar times Q.
bool saito_check(const Multiarrangement& m, const std::vector<long long>& candidate_exponents,
                 std::uint64_t seed = 0x5eed);
bool saito_check(const Arrangement& a, const std::vector<long long>& candidate_exponents,
                 std::uint64_t seed = 0x5eed);

// Full oracle: Terao filter on chi, generator scan up to degree |A|,
// Saito confirmation. NotFree only on sound grounds (chi does not split,
// or more minimal generators than dim); otherwise Free or Inconclusive.
FreenessVerdict oracle_freeness(const Arrangement& a, size_t max_hyperplanes = 12,
                                std::uint64_t seed = 0x5eed);

// Exponents of a rank-2 multiarrangement read off the graded dimensions.
std::pair<long long, long long> rank2_multi_exponents(const Multiarrangement& m);

} // namespace arrange
