#pragma once

#include <string>
#include <vector>

namespace arrange {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& results);

// chi(Shi(l)) = chi(Ish(l)) = t (t-l)^{l-1}, poset and finite-field methods.
std::vector<CheckResult> verify_shi_ish_equality(int ell, int threads = 0);

// Structural CEO chain through every (T_l^k, psi_l^k).
std::vector<CheckResult> verify_shi_ish_chain(int ell);

// Per k: chi of the literal (k,l)-Shi-Ish arrangement, freeness via the
// pipeline, cone exponents, and supersolvability iff k = l (the latter
// only for l <= ss_max).
std::vector<CheckResult> verify_shi_ish(int ell, int ss_max = 4);

// CEO/KEO chain on l vertices: structural identities, chi preservation,
// Free verdicts along the chain, supersolvable tail; for l <= 3 also the
// literal cone of the Catalan arrangement Cat(l+1) and its exponents.
std::vector<CheckResult> verify_catalan(int ell);

// All 64 labeled 3-vertex digraphs with empty weights: catalogue verdict
// against the Saito oracle, and the catalogue's class count.
std::vector<CheckResult> verify_l2_catalogue();

// Exponent formula against the rank-2 derivation computation for every
// multiplicity triple with entries <= max_mult.
std::vector<CheckResult> verify_wakamiko(long long max_mult);

// The complement bijection for (T_l, [-1,0]) at the smallest admissible
// primes.
std::vector<CheckResult> verify_bijection(int ell_min, int ell_max, int primes_per_case);

} // namespace arrange
