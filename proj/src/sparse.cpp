#include "demfuse/sparse.hpp"

#include <algorithm>

namespace demfuse {

void SparseVec::set(int i, const Rational& v) {
  auto it = std::lower_bound(ent_.begin(), ent_.end(), i,
                             [](const auto& p, int idx) { return p.first < idx; });
  if (it != ent_.end() && it->first == i) {
    if (v == 0)
      ent_.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    ent_.insert(it, {i, v});
  }
}

Rational SparseVec::get(int i) const {
  auto it = std::lower_bound(ent_.begin(), ent_.end(), i,
                             [](const auto& p, int idx) { return p.first < idx; });
  if (it != ent_.end() && it->first == i) return it->second;
  return Rational(0);
}

SparseVec& SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (c == 0 || other.ent_.empty()) return *this;
  std::vector<std::pair<int, Rational>> out;
  out.reserve(ent_.size() + other.ent_.size());
  auto a = ent_.begin();
  auto b = other.ent_.begin();
  while (a != ent_.end() || b != other.ent_.end()) {
    if (b == other.ent_.end() || (a != ent_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == ent_.end() || b->first < a->first) {
      out.push_back({b->first, c * b->second});
      ++b;
    } else {
      Rational v = a->second + c * b->second;
      if (v != 0) out.push_back({a->first, v});
      ++a;
      ++b;
    }
  }
  ent_ = std::move(out);
  return *this;
}

SparseVec& SparseVec::scale(const Rational& c) {
  if (c == 0) {
    ent_.clear();
    return *this;
  }
  for (auto& [i, v] : ent_) v *= c;
  return *this;
}

bool SparseMat::is_zero() const {
  for (const auto& c : cols_)
    if (!c.is_zero()) return false;
  return true;
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v.entries()) out.axpy(c, cols_[j]);
  return out;
}

SparseMat& SparseMat::axpy(const Rational& c, const SparseMat& other) {
  for (size_t j = 0; j < cols_.size(); ++j) cols_[j].axpy(c, other.cols_[j]);
  return *this;
}

SparseMat& SparseMat::scale(const Rational& c) {
  for (auto& col : cols_) col.scale(c);
  return *this;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  SparseMat r(rows_, o.cols());
  for (int j = 0; j < o.cols(); ++j) r.cols_[j] = apply(o.col(j));
  return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  SparseMat r = *this;
  r.axpy(Rational(-1), o);
  return r;
}

std::optional<SparseVec> EchelonBasis::reduce(SparseVec v) const {
  while (!v.is_zero()) {
    auto it = pivot_row_.find(v.leading_index());
    if (it == pivot_row_.end()) return v;
    v.axpy(-v.leading_value(), rows_[it->second]);
  }
  return std::nullopt;
}

int EchelonBasis::add(SparseVec v) {
  auto res = reduce(std::move(v));
  if (!res) return -1;
  SparseVec r = std::move(*res);
  r.scale(Rational(1) / r.leading_value());
  pivot_row_[r.leading_index()] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return static_cast<int>(rows_.size()) - 1;
}

std::optional<std::vector<std::pair<int, Rational>>> EchelonBasis::coordinates(
    SparseVec v) const {
  std::vector<std::pair<int, Rational>> coords;
  while (!v.is_zero()) {
    auto it = pivot_row_.find(v.leading_index());
    if (it == pivot_row_.end()) return std::nullopt;
    Rational c = v.leading_value();
    coords.push_back({it->second, c});
    v.axpy(-c, rows_[it->second]);
  }
  std::sort(coords.begin(), coords.end());
  return coords;
}

}  // namespace demfuse
