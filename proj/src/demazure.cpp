#include "demfuse/demazure.hpp"

#include <algorithm>
#include <climits>

namespace demfuse {

AffineCharPoly::Key AffineCharPoly::make_key(const std::vector<int>& wt, int d) const {
  Key k;
  for (int i = 0; i < rank_; ++i) {
    if (wt[i] < INT16_MIN || wt[i] > INT16_MAX) throw std::overflow_error("weight coordinate overflow");
    k.v[i] = static_cast<int16_t>(wt[i]);
  }
  if (d < INT16_MIN || d > INT16_MAX) throw std::overflow_error("delta-degree overflow");
  k.v[8] = static_cast<int16_t>(d);
  return k;
}

AffineCharPoly AffineCharPoly::monomial(const RootSystem& rs, const AffineWeight& xi) {
  AffineCharPoly p(rs.rank(), xi.level);
  p.add(xi.finite.fc, xi.delta_degree, 1, INT_MAX);
  return p;
}

AffineCharPoly AffineCharPoly::one(const RootSystem& rs) {
  AffineCharPoly p(rs.rank(), 0);
  p.add(std::vector<int>(rs.rank(), 0), 0, 1, INT_MAX);
  return p;
}

void AffineCharPoly::add(const std::vector<int>& wt, int d, long long mult, int guard) {
  if (mult == 0) return;
  if (d > guard || d < -guard) throw TruncationError(d);
  Key k = make_key(wt, d);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

AffineCharPoly AffineCharPoly::times_monomial(const AffineWeight& xi, int guard) const {
  AffineCharPoly r(rank_, level_ + xi.level);
  r.terms_.reserve(terms_.size());
  for (const auto& [k, m] : terms_) {
    std::vector<int> wt(rank_);
    for (int i = 0; i < rank_; ++i) wt[i] = k.v[i] + xi.finite.fc[i];
    r.add(wt, k.v[8] + xi.delta_degree, m, guard);
  }
  return r;
}

AffineCharPoly AffineCharPoly::operator+(const AffineCharPoly& o) const {
  if (level_ != o.level_) throw std::invalid_argument("adding characters of different level");
  AffineCharPoly r = *this;
  for (const auto& [k, m] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_.emplace(k, m);
    } else {
      it->second += m;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

GradedCharacter AffineCharPoly::to_graded_character() const {
  GradedCharacter ch;
  if (terms_.empty()) return ch;
  int dmax = INT_MIN;
  for (const auto& [k, m] : terms_) dmax = std::max(dmax, static_cast<int>(k.v[8]));
  for (const auto& [k, m] : terms_) {
    std::vector<int> wt(rank_);
    for (int i = 0; i < rank_; ++i) wt[i] = k.v[i];
    ch.add(wt, dmax - k.v[8], m);
  }
  return ch;
}

AffineCharPoly demazure_operator(const AffineCharPoly& f, int i, const RootSystem& rs,
                                 int guard) {
  int n = rs.rank();
  AffineCharPoly out(n, f.level_);
  out.terms_.reserve(f.terms_.size() * 2);
  Weight alpha = (i == 0) ? Weight::zero(n) : rs.simple_root(i - 1);
  Weight theta = rs.theta();
  for (const auto& [k, mult] : f.terms_) {
    std::vector<int> wt(n);
    for (int j = 0; j < n; ++j) wt[j] = k.v[j];
    int d = k.v[8];
    long long m;
    if (i == 0) {
      m = f.level_ - rs.pair_weight_theta_coroot(Weight(wt));
    } else {
      m = wt[i - 1];
    }
    if (m >= 0) {
      // Sum e^{mu - k alpha_i} for k = 0..m.
      std::vector<int> cur = wt;
      int cd = d;
      for (long long s = 0; s <= m; ++s) {
        out.add(cur, cd, mult, guard);
        if (s == m) break;
        if (i == 0) {
          for (int j = 0; j < n; ++j) cur[j] += theta.fc[j];
          cd += 1;
        } else {
          for (int j = 0; j < n; ++j) cur[j] -= alpha.fc[j];
        }
      }
    } else if (m <= -2) {
      // Minus sum e^{mu + k alpha_i} for k = 1..-m-1.
      std::vector<int> cur = wt;
      int cd = d;
      for (long long s = 1; s <= -m - 1; ++s) {
        if (i == 0) {
          for (int j = 0; j < n; ++j) cur[j] -= theta.fc[j];
          cd -= 1;
        } else {
          for (int j = 0; j < n; ++j) cur[j] += alpha.fc[j];
        }
        out.add(cur, cd, -mult, guard);
      }
    }
    // m == -1 contributes nothing.
  }
  return out;
}

AffineCharPoly demazure_apply_word(const std::vector<int>& word, const AffineCharPoly& f,
                                   const RootSystem& rs, int guard) {
  AffineCharPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    g = demazure_operator(g, *it, rs, guard);
  return g;
}

GradedCharacter affine_demazure_character(int level, const Weight& mu, const RootSystem& rs,
                                          int d_max) {
  DemazureParams dp = demazure_params(level, mu, rs);
  // All intermediate delta-degrees lie in [Lambda.delta_degree, 0], so the
  // guard below can never fire; it is kept as a defensive bound.
  int guard = std::abs(dp.lambda.delta_degree) + 1;
  AffineCharPoly f =
      demazure_apply_word(dp.word, AffineCharPoly::monomial(rs, dp.lambda), rs, guard);
  GradedCharacter full = f.to_graded_character();
  GradedCharacter out;
  for (const auto& [k, m] : full.terms())
    if (k.second <= d_max) out.add(k.first, k.second, m);
  return out;
}

GradedCharacter affine_demazure_character_full(int level, const Weight& mu,
                                               const RootSystem& rs) {
  return affine_demazure_character(level, mu, rs, INT_MAX);
}

namespace {

// Permute the coefficients of Lambda over the affine vertices: writing
// Lambda = sum_j m_j xi_j in the basis of affine fundamental weights (delta
// part kept fixed), send m_j to slot sigma(j).  Diagram automorphisms
// preserve the level; this is asserted.
AffineWeight relabel_affine_weight(const std::vector<int>& sigma, const AffineWeight& la,
                                   const RootSystem& rs) {
  int n = rs.rank();
  std::vector<long long> m(n + 1, 0);
  m[0] = la.level - rs.pair_weight_theta_coroot(la.finite);
  for (int j = 1; j <= n; ++j) m[j] = la.finite.fc[j - 1];
  std::vector<long long> m2(n + 1, 0);
  for (int j = 0; j <= n; ++j) m2[sigma[j]] = m[j];
  AffineWeight out;
  out.finite = Weight(std::vector<int>(n, 0));
  for (int j = 1; j <= n; ++j) out.finite.fc[j - 1] = static_cast<int>(m2[j]);
  out.level = static_cast<int>(m2[0] + rs.pair_weight_theta_coroot(out.finite));
  out.delta_degree = la.delta_degree;
  if (out.level != la.level)
    throw std::logic_error("affine node relabeling changed the level");
  return out;
}

std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> r(outer.size());
  for (size_t i = 0; i < outer.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

}  // namespace

GradedCharacter generalized_demazure_character(const std::vector<GeneralizedFactor>& factors,
                                               const RootSystem& rs, int guard) {
  int k = static_cast<int>(factors.size());
  if (k == 0) {
    GradedCharacter ch;
    ch.add(std::vector<int>(rs.rank(), 0), 0, 1);
    return ch;
  }
  for (const auto& f : factors)
    if (!f.lambda.dominant(rs))
      throw std::invalid_argument("generalized_demazure_character: non-dominant factor weight");

  // Increments and length additivity.
  std::vector<ExtAffineWeylElt> incr;
  long long prev_len = 0;
  ExtAffineWeylElt prev = ExtAffineWeylElt::identity(rs);
  for (int i = 0; i < k; ++i) {
    ExtAffineWeylElt wi = prev.inverse() * factors[i].w_cumulative;
    long long li = affine_length(factors[i].w_cumulative, rs);
    if (li != prev_len + affine_length(wi, rs))
      throw std::invalid_argument(
          "generalized_demazure_character: length additivity fails between factors " +
          std::to_string(i) + " and " + std::to_string(i + 1));
    incr.push_back(wi);
    prev = factors[i].w_cumulative;
    prev_len = li;
  }

  // Decompose increments and accumulate the node relabelings.
  std::vector<AffineReducedWord> words;
  std::vector<std::vector<int>> sigma(k + 1);
  sigma[0].resize(rs.rank() + 1);
  for (int j = 0; j <= rs.rank(); ++j) sigma[0][j] = j;
  for (int i = 0; i < k; ++i) {
    words.push_back(affine_reduced_word(incr[i], rs));
    sigma[i + 1] = compose_perm(sigma[i], words[i].omega.node_perm);
  }

  AffineCharPoly g = AffineCharPoly::one(rs);
  for (int i = k - 1; i >= 0; --i) {
    AffineWeight la = relabel_affine_weight(sigma[i + 1], factors[i].lambda, rs);
    g = g.times_monomial(la, guard);
    std::vector<int> word;
    for (int nd : words[i].word) word.push_back(sigma[i][nd]);
    g = demazure_apply_word(word, g, rs, guard);
  }
  return g.to_graded_character();
}

GradedCharacter kr_chain_character(int level, const Coweight& lv, const RootSystem& rs) {
  WeylElt w0 = WeylElt::longest(rs);
  ExtAffineWeylElt tau = ExtAffineWeylElt::translation(rs, w0.apply(lv));
  AffineWeight l0{level, Weight::zero(rs.rank()), 0};
  int guard = static_cast<int>(2 * affine_length(tau, rs)) + 8;
  return generalized_demazure_character({{tau, l0}}, rs, guard);
}

// Character of the fusion D(l_1, l_1 iota(lv_1)) * ... * D(l_k, l_k iota(lv_k))
// * D(l, l iota(nu)) realized as the generalized Demazure module
//   D( tau_{w0 lv_1} (l_1-l_2) Lambda_0, ..., tau_{w0 (lv_1+...+lv_k)} (l_k-l) Lambda_0,
//      tau_{w0 (lv_1+...+lv_k)} (extremal weight of D(l, l iota(nu))) ).
GradedCharacter demazure_chain_character(const std::vector<int>& ells,
                                         const std::vector<Coweight>& lvs, int ell_last,
                                         const Coweight& nu, const RootSystem& rs) {
  if (ells.size() != lvs.size())
    throw std::invalid_argument("demazure_chain_character: size mismatch");
  WeylElt w0 = WeylElt::longest(rs);
  std::vector<GeneralizedFactor> gf;
  Coweight partial = Coweight::zero(rs.rank());
  long long total_len = 0;
  ExtAffineWeylElt prev = ExtAffineWeylElt::identity(rs);
  for (size_t i = 0; i < ells.size(); ++i) {
    partial = partial + lvs[i];
    int m = (i + 1 < ells.size() ? ells[i] - ells[i + 1] : ells[i] - ell_last);
    if (m < 0) throw std::invalid_argument("demazure_chain_character: increasing levels");
    ExtAffineWeylElt w = ExtAffineWeylElt::translation(rs, w0.apply(partial));
    total_len += affine_length(prev.inverse() * w, rs);
    prev = w;
    gf.push_back({w, AffineWeight{m, Weight::zero(rs.rank()), 0}});
  }
  DemazureParams dp = demazure_params(ell_last, rs.coweight_embed(nu) * ell_last, rs);
  ExtAffineWeylElt w =
      ExtAffineWeylElt::translation(rs, w0.apply(partial)) * dp.w;
  total_len += affine_length(prev.inverse() * w, rs);
  gf.push_back({w, dp.lambda});
  return generalized_demazure_character(gf, rs, static_cast<int>(2 * total_len) + 8);
}

}  // namespace demfuse
