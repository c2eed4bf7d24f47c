#pragma once

#include <optional>
#include <vector>

#include "arrange/digraph.hpp"

namespace arrange {

/*
  A signed graph on vertices 0..l (vertex 0 distinguished): a total
  symmetric signature epsilon in {-1, 0, +1} on unordered pairs, plus the
  companion n0 used when the graph encodes a Ziegler restriction.
*/
class SignedGraph {
public:
    SignedGraph(int num_vertices, long long n0);

    int vertex_count() const { return n_; }
    long long n0() const { return n0_; }

    int epsilon(int i, int j) const;
    void set_epsilon(int i, int j, int value);

private:
    int n_;
    long long n0_;
    std::vector<std::vector<int>> eps_;
};

// Signature of the Ziegler restriction of the cone of A(G, psi) onto the
// infinite hyperplane: +1 for double arcs, -1 for non-adjacent pairs, 0
// for single arcs; epsilon(0, i) = |psi(i)| - 2 - n0.
SignedGraph signed_graph_from(const VertexWeightedDigraph& g, long long n0);

// All n0 >= 0 making every |psi(i)| - 2 - n0 land in {-1, 0, +1}.
std::vector<long long> admissible_n0_set(const VertexWeightedDigraph& g);

// Signed-eliminability with respect to the given vertex ordering
// (a permutation of 0..l; position in the vector is the elimination rank).
bool signed_eliminable(const SignedGraph& s, const std::vector<int>& ordering);

// Existential version: searches all orderings (by choosing the last
// vertex recursively), returns a witness ordering when one exists.
std::optional<std::vector<int>> signed_elimination_order(const SignedGraph& s);
bool signed_eliminable_any(const SignedGraph& s);

} // namespace arrange
