#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gfsuper/rational.hpp"

namespace gfsuper {

// Sparse matrix over Q. Only nonzero entries are stored.
class SparseMatrix {
public:
    using Index = std::uint32_t;
    using EntryMap = std::map<std::pair<Index, Index>, Rational>;

    SparseMatrix() : nrows_(0), ncols_(0) {}
    SparseMatrix(Index nrows, Index ncols) : nrows_(nrows), ncols_(ncols) {}

    Index nrows() const { return nrows_; }
    Index ncols() const { return ncols_; }
    std::size_t nnz() const { return entries_.size(); }

    // Setting an entry to zero erases it.
    void set(Index r, Index c, const Rational& v);
    void add(Index r, Index c, const Rational& v);
    Rational at(Index r, Index c) const;

    const EntryMap& entries() const { return entries_; }

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& s) const;
    bool operator==(const SparseMatrix& o) const;

    bool is_zero() const { return entries_.empty(); }

    // Fraction-free Gaussian elimination with Markowitz-style pivoting.
    // Deterministic for a given matrix regardless of evaluation order.
    Index rank() const;
    Index kernel_dim() const { return ncols_ - rank(); }

    // Lexicographically first maximal set of linearly independent columns.
    std::vector<Index> independent_columns() const;

private:
    Index nrows_, ncols_;
    EntryMap entries_;
};

}  // namespace gfsuper
