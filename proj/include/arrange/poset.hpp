#pragma once

#include <cstdint>
#include <vector>

#include "arrange/arrangement.hpp"
#include "arrange/linalg.hpp"
#include "arrange/polynomial.hpp"

namespace arrange {

/*
  A nonempty intersection of hyperplanes, canonically represented by the
  RREF of its defining system. members is the bitmask of all hyperplanes
  of the ambient arrangement containing the flat.
*/
struct Flat {
    LinearSystem system;
    std::uint64_t members = 0;
    int rank = 0;

    Flat() : system(0) {}
    explicit Flat(LinearSystem s) : system(std::move(s)), rank(system.rank()) {}
};

// members mask of a flat relative to a; throws FlatNotInPoset when the
// flat is not the intersection of the hyperplanes containing it.
Flat resolve_flat(const Arrangement& a, const LinearSystem& system);

// Flat spanned by the given hyperplane indices (must be nonempty).
Flat flat_of(const Arrangement& a, const std::vector<size_t>& h_indices);

/*
  The poset L(A): all nonempty intersections, built level by level by
  closing under intersection with single hyperplanes. Ordered by reverse
  inclusion; the ambient space is the unique bottom element.
*/
class IntersectionPoset {
public:
    // max_rank < 0 builds every level.
    explicit IntersectionPoset(const Arrangement& a, int max_rank = -1);

    const Arrangement& arrangement() const { return a_; }
    const std::vector<Flat>& flats() const { return flats_; } // level order
    std::vector<const Flat*> level(int rank) const;
    int rank() const { return max_rank_built_; }

    // Moebius values mu(ambient, X), aligned with flats(). Requires the
    // poset to be fully built.
    const std::vector<Int>& mobius() const;
    IntegerPolynomial characteristic_polynomial() const;

private:
    Arrangement a_;
    std::vector<Flat> flats_;
    std::vector<size_t> level_offsets_;
    int max_rank_built_ = 0;
    bool complete_ = false;
    mutable std::vector<Int> mobius_;
};

IntegerPolynomial char_poly(const Arrangement& a);

// A_X: hyperplanes containing X, in ambient coordinates.
Arrangement localization(const Arrangement& a, const Flat& x);

// A^X: traces K cap X for K outside A_X, coordinatized by the free
// variables of X's RREF system in index order; empty traces dropped.
Arrangement restriction(const Arrangement& a, const Flat& x);

// All rank-3 flats of a central cone lying inside the given hyperplane.
std::vector<Flat> codim3_flats_along(const Arrangement& cone_arr, size_t infinity_index);

} // namespace arrange
