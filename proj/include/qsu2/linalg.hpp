#pragma once

// Exact dense linear algebra over MuScalar: incremental echelon bases,
// expression of vectors over spanning sets, nullspaces and Gram solves.
// Pivoting is by first nonzero column, so results are deterministic.

#include "qsu2/scalar.hpp"

#include <optional>
#include <vector>

namespace qsu2 {

using Vec = std::vector<MuScalar>;
using Mat = std::vector<Vec>;

// Row space kept in reduced echelon form; rows are added one at a time.
class EchelonBasis {
  public:
    explicit EchelonBasis(size_t ncols) : ncols_(ncols) {}

    size_t rank() const { return rows_.size(); }
    size_t ncols() const { return ncols_; }
    const Mat& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Reduce v against the current basis (returns the residual).
    Vec reduce(Vec v) const;
    // Add a vector; returns true if it enlarged the span.
    bool add(Vec v);
    bool contains(Vec v) const;

    // Columns containing no pivot.
    std::vector<size_t> free_columns() const;

  private:
    size_t ncols_;
    Mat rows_;                   // each row normalized to pivot coefficient 1
    std::vector<size_t> pivots_;  // pivot column per row, strictly increasing order not enforced
};

// Writes b as a linear combination of the vectors supplied to add();
// express() returns the coefficients or nullopt when b is outside the span.
class ExpressSolver {
  public:
    explicit ExpressSolver(size_t ncols) : ncols_(ncols), basis_(0) {}

    void add(const Vec& v);
    std::optional<Vec> express(const Vec& b) const;
    size_t rank() const { return basis_.rank(); }
    size_t nvectors() const { return nvec_; }

  private:
    size_t ncols_;
    size_t nvec_ = 0;
    EchelonBasis basis_{0};
};

// Nullspace basis of the homogeneous system rows * x = 0.
Mat nullspace(const Mat& rows, size_t ncols);

// Unique solution of a square (or overdetermined consistent) system A x = b;
// throws SolveError if the solution does not exist or is not unique.
Vec solve_unique(const Mat& a, const Vec& b);

}  // namespace qsu2
