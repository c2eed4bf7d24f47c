#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "arrange/errors.hpp"
#include "arrange/interval.hpp"

namespace arrange {

/*
  A digraph on vertices 1..n with a weight interval attached to every
  vertex.  Values are immutable after construction; every operation
  returns a new digraph.
*/
class VertexWeightedDigraph {
public:
    using ArcSet = std::set<std::pair<int, int>>;

    explicit VertexWeightedDigraph(int n);
    VertexWeightedDigraph(int n, ArcSet arcs, std::vector<WeightInterval> psi_1based);

    int vertex_count() const { return n_; }
    const ArcSet& arcs() const { return arcs_; }
    bool has_arc(int i, int j) const { return arcs_.count({i, j}) > 0; }
    const WeightInterval& weight(int v) const;

    std::set<int> kings() const;
    std::set<int> cokings() const;
    bool is_king(int v) const;
    bool is_coking(int v) const;
    bool is_isolated(int v) const;

    bool operator==(const VertexWeightedDigraph& o) const {
        return n_ == o.n_ && arcs_ == o.arcs_ && psi_ == o.psi_;
    }
    bool operator!=(const VertexWeightedDigraph& o) const { return !(*this == o); }

private:
    void check_vertex(int v) const;

    int n_;
    ArcSet arcs_;
    std::vector<WeightInterval> psi_; // index 0 unused
};

// Coking/king elimination (arcs into/out of v removed; every other weight
// extended by one on the left/right). Both require every weight non-Empty.
VertexWeightedDigraph ceo(const VertexWeightedDigraph& g, int v);
VertexWeightedDigraph keo(const VertexWeightedDigraph& g, int v);

// Elimination applied to the induced subgraph on W, expressed on the
// original vertex set: vertices outside W must be isolated and keep their
// weights unchanged. This is the step that walks the Shi-Ish and Catalan
// chains, where the eliminated vertex only dominates the active part.
VertexWeightedDigraph ceo_within(const VertexWeightedDigraph& g, const std::vector<int>& w, int v);
VertexWeightedDigraph keo_within(const VertexWeightedDigraph& g, const std::vector<int>& w, int v);

// Weight conditions relative to a vertex v.
// (C): 0 in every weight and [a_i, b_i-1] contained in psi(v) for i != v.
// (K): 0 in every weight and [a_i+1, b_i] contained in psi(v) for i != v.
// (Z): the set of n0 >= 0 with n0+2 <= |psi(v)| <= n0+3 and
//      n0+1 <= |psi(i)| <= n0+3 for all i != v (empty set = condition fails).
bool condition_c(const VertexWeightedDigraph& g, int v);
bool condition_k(const VertexWeightedDigraph& g, int v);
std::set<long long> condition_z(const VertexWeightedDigraph& g, int v);

VertexWeightedDigraph converse(const VertexWeightedDigraph& g);

// Induced subgraph on W (sorted, deduplicated); vertices renumbered 1..|W|
// in increasing order of original label.
VertexWeightedDigraph induced(const VertexWeightedDigraph& g, const std::vector<int>& w);

// True iff v has no incident arcs and psi(v) is contained in every weight.
bool isolated_min_weight(const VertexWeightedDigraph& g, int v);

// Named families.
VertexWeightedDigraph transitive_tournament(int l, const WeightInterval& w = WeightInterval::empty());
VertexWeightedDigraph complete_digraph(int l, const WeightInterval& w = WeightInterval::empty());
VertexWeightedDigraph edgeless_digraph(int l, const WeightInterval& w = WeightInterval::empty());

// (T_l^k, psi_l^k): arcs (i,j) for 1 <= i < j <= l-k+1,
// psi(i) = [-min(l-i+1, k), 0]. Its arrangement is the (k+1, l+1)-Shi-Ish
// arrangement up to a product with an empty factor.
VertexWeightedDigraph shi_ish_digraph(int l, int k);

// Catalan chain members (C_l^k, psi) and (D_l^k, phi).
VertexWeightedDigraph catalan_c_digraph(int l, int k);
VertexWeightedDigraph catalan_d_digraph(int l, int k);

// Brute-force isomorphism on the arc structure (weights ignored), n <= 8.
bool digraph_isomorphic(const VertexWeightedDigraph& g1, const VertexWeightedDigraph& g2);

} // namespace arrange
