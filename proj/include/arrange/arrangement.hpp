#pragma once

#include <optional>
#include <vector>

#include "arrange/digraph.hpp"
#include "arrange/errors.hpp"
#include "arrange/hyperplane.hpp"

namespace arrange {

/*
  A finite set of integral affine hyperplanes in Q^dim. Hyperplanes are
  stored sorted and deduplicated under the canonical form; the central
  flag is cached. A cone remembers the index of its infinite hyperplane.
*/
class Arrangement {
public:
    explicit Arrangement(int dim) : dim_(dim) {
        if (dim < 0) throw ParamOutOfRange("negative dimension");
    }
    Arrangement(int dim, std::vector<Hyperplane> hyperplanes);

    int dim() const { return dim_; }
    size_t size() const { return hyperplanes_.size(); }
    bool central() const { return central_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](size_t i) const { return hyperplanes_[i]; }

    std::optional<size_t> infinity_index() const { return infinity_; }
    void set_infinity_index(std::optional<size_t> i);

    // index of an equal hyperplane, if present
    std::optional<size_t> find(const Hyperplane& h) const;

    bool operator==(const Arrangement& o) const {
        return dim_ == o.dim_ && hyperplanes_ == o.hyperplanes_;
    }

private:
    int dim_;
    std::vector<Hyperplane> hyperplanes_;
    bool central_ = true;
    std::optional<size_t> infinity_;
};

// Homogenize with a new last coordinate z and adjoin z = 0; the returned
// arrangement has its infinity index set.
Arrangement cone(const Arrangement& a);

// Blocks on disjoint coordinates.
Arrangement product(const Arrangement& a1, const Arrangement& a2);

Arrangement deletion(const Arrangement& a, size_t h_index);

Arrangement empty_arrangement(int dim);

// Provenance of each hyperplane of a digraph arrangement, used by the
// codimension-3 classification.
struct HyperplaneOrigin {
    enum class Kind { Braid, Arc, Weight, Infinity };
    Kind kind;
    int i = 0, j = 0;  // vertices (Braid/Arc), vertex i for Weight
    long long c = 0;   // weight value for Weight
};

struct DigraphArrangement {
    Arrangement arr;
    std::vector<HyperplaneOrigin> origins; // aligned with arr.hyperplanes()
};

// x_i - x_j = 0 (i < j), x_i - x_j = 1 per arc, x_i = c per weight value.
DigraphArrangement from_digraph(const VertexWeightedDigraph& g);
// cone of the above, with provenance and infinity index.
DigraphArrangement cone_digraph(const VertexWeightedDigraph& g);

Arrangement arrangement_of(const VertexWeightedDigraph& g);

// Classical families, given literally.
Arrangement braid_arrangement(int l);
Arrangement shi_arrangement(int l);
Arrangement ish_arrangement(int l);
Arrangement catalan_arrangement(int l);
// Cox(l) + {x_1 - x_j = i : 1 <= i < j <= l, i < k} + {x_i - x_j = 1 : k <= i < j}.
Arrangement shi_ish_arrangement(int l, int k);

// Lattice-preserving projection onto the span of the normals (central
// arrangements only). Returns the essential arrangement and the rank.
std::pair<Arrangement, int> essentialize(const Arrangement& a);

int arrangement_rank(const Arrangement& a);

} // namespace arrange
