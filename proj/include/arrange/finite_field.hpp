#pragma once

#include <vector>

#include "arrange/arrangement.hpp"
#include "arrange/digraph.hpp"
#include "arrange/polynomial.hpp"

namespace arrange {

// Crude sufficient bound: primes above it are treated as admissible for
// the finite field method on this arrangement. The two-extra-prime
// validation in char_poly_ff backstops it.
long long admissible_prime_bound(const Arrangement& a);

// The `count` smallest primes above the admissibility bound.
std::vector<long long> admissible_primes(const Arrangement& a, int count);

// |F_p^dim \ union of hyperplanes|, by direct enumeration with pruning.
// Counts for any prime p >= 2; admissibility is the caller's concern.
// threads = 0 uses the hardware concurrency; the sum is identical for any
// thread count.
long long count_complement(const Arrangement& a, long long p, int threads = 0);

// Evaluates at dim+1 admissible primes, interpolates the unique
// polynomial of degree <= dim, validates at 2 more primes.
IntegerPolynomial char_poly_ff(const Arrangement& a, int threads = 0);

// Builds the paper-style bijection between the complements of A(G,psi)
// and A(G',psi') over F_p after the coking elimination at v, and checks
// it is a bijection pointwise. Also checks |M \ M'| = |M' \ M| directly.
bool verify_ceo_bijection(const VertexWeightedDigraph& g, int v, long long p);

// complement points as packed coordinate vectors (test support)
std::vector<std::vector<int>> complement_points(const Arrangement& a, long long p);

bool is_prime(long long p);

} // namespace arrange
