#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrange/digraph.hpp"
#include "arrange/multiarrangement.hpp"
#include "arrange/poset.hpp"
#include "arrange/signed_graph.hpp"
#include "arrange/verdict.hpp"

namespace arrange {

// Exponents of a rank-2 multiarrangement on three concurrent lines with
// multiplicities (k1, k2, k3): {k3, k1+k2} in the lopsided regime, the
// balanced split otherwise.
std::pair<long long, long long> wakamiko_exponents(long long k1, long long k2, long long k3);

struct L1Verdict {
    bool free = false;
    bool supersolvable = false;
};

// Freeness / supersolvability of the cone of a 2-vertex weighted digraph,
// by the case analysis on arc count and weight sizes.
L1Verdict l1_free(const VertexWeightedDigraph& g2);

// Freeness of the cone of a 3-vertex digraph with no weights: membership
// in the 13-class catalogue.
bool l2_free(const VertexWeightedDigraph& g3);

// The catalogue itself (arc sets on vertices {1,2,3}), exposed for tests.
const std::vector<VertexWeightedDigraph::ArcSet>& l2_catalogue();

struct Codim3Entry {
    std::string type;          // "L1".."L4"
    std::vector<int> vertices; // the digraph vertices cut out by the flat
    bool free = false;
    std::string note;
};

struct Codim3Report {
    bool all_free = true;
    std::vector<Codim3Entry> entries;
    int count(const std::string& type) const;
};

// Enumerates the rank-3 flats of the cone of A(G, psi) inside the
// infinite hyperplane, classifies each via hyperplane provenance, and
// decides freeness of the localization per class.
Codim3Report locally_free_codim3(const VertexWeightedDigraph& g);

// The full combinatorial pipeline: peel simplicial vertices, decompose
// the Ziegler restriction as a signed graph per admissible n0, test
// signed-eliminability and codimension-3 local freeness; exponents are
// recovered from chi of the original cone. Falls back to the Saito
// oracle when no n0 exists.
FreenessVerdict decide_freeness(const VertexWeightedDigraph& g);

bool is_modular_coatom(const Arrangement& a, const Flat& x);

struct SupersolvableResult {
    bool supersolvable = false;
    std::vector<long long> exponents;  // padded with dim - rank zeros
    std::vector<size_t> chain_sizes;   // |A_{X_1}|, ..., |A_{X_r}|
};

SupersolvableResult supersolvable(const Arrangement& a);

// chi factored over Z by root search in [0, |A|]; nullopt when it does
// not split completely.
std::optional<std::vector<long long>> exponents_from_chi(const Arrangement& a);

} // namespace arrange
