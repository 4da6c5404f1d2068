#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace chowlab {

/// Sparse integer row: (column, coefficient) pairs, ascending columns, no zeros.
using SparseRowZ = std::vector<std::pair<int, mpz_class>>;
using SparseRowQ = std::vector<std::pair<int, mpq_class>>;

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>; // row-major

/// Incremental row echelon form over Z kept fraction-free: each stored row is
/// primitive (content 1, positive leading coefficient) and is the unique row
/// with its leading column.  Exact by construction.
class IntEchelon {
  public:
    explicit IntEchelon(int ncols) : ncols_(ncols) {}

    int cols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool col_is_pivot(int c) const { return rows_.count(c) != 0; }

    /// Reduce r against the current rows; insert the remainder if nonzero.
    /// Returns true when the rank grew.
    bool add_row(SparseRowZ r);

    /// Canonical representative of v modulo the row space: the result is
    /// supported on non-pivot columns only.
    SparseRowQ reduce(SparseRowQ v) const;

  private:
    int ncols_;
    std::map<int, SparseRowZ> rows_; // leading column -> row
};

/// Rank of a dense rational matrix by exact Gaussian elimination.
int rank_of(QMat m);

/// True iff every column of `extra` lies in the column space of `base`
/// (both matrices over the same row count).
bool columns_contained(const QMat& base, const QMat& extra);

} // namespace chowlab
