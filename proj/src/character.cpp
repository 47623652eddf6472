#include "demfuse/character.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace demfuse {

void GradedCharacter::add(const std::vector<int>& wt, int q, long long mult) {
  if (mult == 0) return;
  auto key = Key(wt, q);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

long long GradedCharacter::mult(const std::vector<int>& wt, int q) const {
  auto it = terms_.find(Key(wt, q));
  return it == terms_.end() ? 0 : it->second;
}

long long GradedCharacter::dimension() const {
  long long d = 0;
  for (const auto& [k, m] : terms_) d += m;
  return d;
}

int GradedCharacter::min_q() const {
  if (terms_.empty()) throw std::logic_error("min_q of empty character");
  int q = terms_.begin()->first.second;
  for (const auto& [k, m] : terms_) q = std::min(q, k.second);
  return q;
}

int GradedCharacter::max_q() const {
  if (terms_.empty()) throw std::logic_error("max_q of empty character");
  int q = terms_.begin()->first.second;
  for (const auto& [k, m] : terms_) q = std::max(q, k.second);
  return q;
}

long long GradedCharacter::dim_at_q(int q) const {
  long long d = 0;
  for (const auto& [k, m] : terms_)
    if (k.second == q) d += m;
  return d;
}

GradedCharacter GradedCharacter::shifted_q(int s) const {
  GradedCharacter r;
  for (const auto& [k, m] : terms_) r.add(k.first, k.second + s, m);
  return r;
}

GradedCharacter GradedCharacter::normalized() const {
  if (terms_.empty()) return *this;
  return shifted_q(-min_q());
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
  GradedCharacter r = *this;
  for (const auto& [k, m] : o.terms_) r.add(k.first, k.second, m);
  return r;
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const {
  GradedCharacter r = *this;
  for (const auto& [k, m] : o.terms_) r.add(k.first, k.second, -m);
  return r;
}

GradedCharacter GradedCharacter::specialize_q() const {
  GradedCharacter r;
  for (const auto& [k, m] : terms_) r.add(k.first, 0, m);
  return r;
}

bool GradedCharacter::weyl_symmetric(const RootSystem& rs) const {
  for (int i = 0; i < rs.rank(); ++i) {
    WeylElt s = WeylElt::simple_reflection(rs, i);
    for (const auto& [k, m] : terms_) {
      Weight im = s.apply(Weight(k.first));
      if (mult(im.fc, k.second) != m) return false;
    }
  }
  return true;
}

bool GradedCharacter::nonnegative() const {
  for (const auto& [k, m] : terms_)
    if (m < 0) return false;
  return true;
}

std::string GradedCharacter::to_json(int level) const {
  std::vector<std::pair<std::pair<int, std::vector<int>>, long long>> sorted;
  sorted.reserve(terms_.size());
  for (const auto& [k, m] : terms_) sorted.push_back({{k.second, k.first}, m});
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "{\"level\":" << level << ",\"terms\":[";
  bool first = true;
  for (const auto& [qk, m] : sorted) {
    if (!first) os << ",";
    first = false;
    os << "{\"wt\":[";
    for (size_t i = 0; i < qk.second.size(); ++i) {
      if (i) os << ",";
      os << qk.second[i];
    }
    os << "],\"q\":" << qk.first << ",\"mult\":" << m << "}";
  }
  os << "]}";
  return os.str();
}

GradedCharacter weyl_character(const Weight& lambda, const RootSystem& rs) {
  if (!lambda.dominant()) throw std::invalid_argument("weyl_character: non-dominant weight");
  int n = rs.rank();
  // Freudenthal recursion, processed by height of lambda - mu.
  std::map<std::vector<int>, long long> mult;
  mult[lambda.fc] = 1;
  std::vector<std::vector<Weight>> by_level{{lambda}};
  Weight lr = lambda + rs.rho();
  Rational norm_top = rs.form_weight_weight(lr, lr);

  std::vector<int> root_heights;
  std::vector<Weight> roots_w;  // positive roots in the fundamental basis
  for (const auto& a : rs.positive_roots()) {
    root_heights.push_back(std::accumulate(a.begin(), a.end(), 0));
    Weight aw = Weight(std::vector<int>(n, 0));
    const auto& C = rs.cartan();
    for (int r = 0; r < n; ++r) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += C[r][j] * a[j];
      aw.fc[r] = s;
    }
    roots_w.push_back(std::move(aw));
  }

  for (int h = 1;; ++h) {
    // Candidates at height h: previous-level weights minus a simple root.
    std::map<std::vector<int>, bool> cand;
    for (const auto& nu : by_level[h - 1])
      for (int i = 0; i < n; ++i) cand[(nu - rs.simple_root(i)).fc] = true;
    std::vector<Weight> level;
    for (const auto& [c, unused] : cand) {
      Weight mu(c);
      Rational rhs = 0;
      for (size_t ai = 0; ai < rs.positive_roots().size(); ++ai) {
        const auto& alpha = rs.positive_roots()[ai];
        for (int k = 1; k * root_heights[ai] <= h; ++k) {
          Weight up = mu + roots_w[ai] * k;
          auto it = mult.find(up.fc);
          if (it == mult.end() || it->second == 0) continue;
          rhs += Rational(static_cast<long>(2 * it->second)) *
                 Rational(static_cast<long>(rs.form_weight_root(up, alpha)));
        }
      }
      if (rhs == 0) continue;
      Weight mr = mu + rs.rho();
      Rational den = norm_top - rs.form_weight_weight(mr, mr);
      if (den == 0) throw std::logic_error("Freudenthal: vanishing denominator");
      Rational m = rhs / den;
      if (m.get_den() != 1 || m < 0) throw std::logic_error("Freudenthal: non-integral multiplicity");
      long long mv = static_cast<long long>(m.get_num().get_si());
      if (mv > 0) {
        mult[mu.fc] = mv;
        level.push_back(mu);
      }
    }
    if (level.empty()) break;
    by_level.push_back(std::move(level));
  }

  GradedCharacter ch;
  long long dim = 0;
  for (const auto& [wt, m] : mult) {
    ch.add(wt, 0, m);
    dim += m;
  }
  if (dim != rs.weyl_dimension(lambda))
    throw std::logic_error("weyl_character: dimension mismatch with Weyl formula");
  return ch;
}

}  // namespace demfuse
