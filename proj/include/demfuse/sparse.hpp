#ifndef DEMFUSE_SPARSE_HPP
#define DEMFUSE_SPARSE_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "demfuse/root_system.hpp"

namespace demfuse {

// Sparse vector over exact rationals: sorted (index, value) pairs, values
// nonzero.
class SparseVec {
 public:
  SparseVec() = default;
  static SparseVec unit(int i) {
    SparseVec v;
    v.ent_.push_back({i, Rational(1)});
    return v;
  }

  bool is_zero() const { return ent_.empty(); }
  int leading_index() const { return ent_.front().first; }
  const Rational& leading_value() const { return ent_.front().second; }
  const std::vector<std::pair<int, Rational>>& entries() const { return ent_; }

  void set(int i, const Rational& v);
  Rational get(int i) const;

  SparseVec& axpy(const Rational& c, const SparseVec& other);  // *this += c * other
  SparseVec& scale(const Rational& c);
  bool operator==(const SparseVec& o) const { return ent_ == o.ent_; }

 private:
  std::vector<std::pair<int, Rational>> ent_;
};

// Sparse matrix, stored by columns: column j holds the image of basis vector j.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(int rows, int cols) : rows_(rows), cols_(static_cast<size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  const SparseVec& col(int j) const { return cols_[j]; }
  SparseVec& col(int j) { return cols_[j]; }
  void set(int r, int c, const Rational& v) { cols_[c].set(r, v); }
  bool is_zero() const;

  SparseVec apply(const SparseVec& v) const;
  SparseMat& axpy(const Rational& c, const SparseMat& other);
  SparseMat& scale(const Rational& c);
  SparseMat operator*(const SparseMat& o) const;  // composition
  SparseMat operator-(const SparseMat& o) const;
  bool operator==(const SparseMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  int rows_ = 0;
  std::vector<SparseVec> cols_;
};

// Forward-only echelon basis: rows are kept in insertion order and are never
// modified after insertion, so the flag of partial spans (first m rows) is
// preserved exactly.  Each row has a distinct leading index with value 1.
class EchelonBasis {
 public:
  int size() const { return static_cast<int>(rows_.size()); }
  const SparseVec& row(int i) const { return rows_[i]; }

  // Reduces v against the basis; returns the nonzero residual or nullopt if
  // v was in the span.
  std::optional<SparseVec> reduce(SparseVec v) const;
  // Adds v if independent; returns the index of the new row, or -1.
  int add(SparseVec v);
  bool contains(const SparseVec& v) const { return !reduce(v).has_value(); }

  // Coordinates of v in terms of the stored rows; nullopt if v not in span.
  std::optional<std::vector<std::pair<int, Rational>>> coordinates(SparseVec v) const;

 private:
  std::vector<SparseVec> rows_;
  std::unordered_map<int, int> pivot_row_;  // leading index -> row
};

}  // namespace demfuse

#endif
