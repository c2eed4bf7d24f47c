#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arrange {

using Rat = mpq_class;
using Int = mpz_class;

// gmpxx has no long long constructors; this platform's long is 64-bit
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

// In-place reduced row echelon form (leading 1s, zeros above and below).
// Returns the pivot column indices in row order.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

// Canonical basis of the right nullspace of m (one vector per free column,
// echelonized the usual way: free variable set to 1, pivots solved).
std::vector<RatRow> nullspace(const RatMatrix& m, int cols);

/*
  An affine subspace of Q^dim kept as a canonical RREF system
  [coeffs | constant].  Rows are ordered by pivot column; this is the
  hashable representation backing flats of an intersection poset.
*/
class LinearSystem {
public:
    explicit LinearSystem(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return (int)rows_.size(); }
    const RatMatrix& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Adds the equation coeffs . x = c.  Returns false when the system
    // becomes inconsistent (empty subspace); the system is unchanged then.
    bool add_equation(const RatRow& coeffs, const Rat& c);

    // True iff the equation is implied by the system.
    bool implies(const RatRow& coeffs, const Rat& c) const;

    // Substitutes the pivot variables into (coeffs, c), returning the
    // residual equation on the free variables. Used for restrictions.
    std::pair<RatRow, Rat> reduce(const RatRow& coeffs, const Rat& c) const;

    std::vector<int> free_columns() const;

    std::string key() const;

    bool operator==(const LinearSystem& o) const {
        return dim_ == o.dim_ && rows_ == o.rows_;
    }

private:
    int dim_;
    RatMatrix rows_;          // each of length dim_+1, last entry = constant
    std::vector<int> pivots_; // pivot column per row, strictly increasing
};

} // namespace arrange
