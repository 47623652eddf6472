#ifndef DEMFUSE_DEMAZURE_HPP
#define DEMFUSE_DEMAZURE_HPP

#include <array>
#include <cstdint>
#include <unordered_map>

#include "demfuse/character.hpp"
#include "demfuse/root_system.hpp"
#include "demfuse/weyl.hpp"

namespace demfuse {

struct TruncationError : std::runtime_error {
  int degree;
  explicit TruncationError(int d)
      : std::runtime_error("delta-degree truncation overflow at degree " + std::to_string(d)),
        degree(d) {}
};

// Element of the level-l affine character ring truncated in delta-degree:
// integer combination of e^{lambda - d*delta} terms at a fixed level.
class AffineCharPoly {
 public:
  // Packed term key: up to 8 weight coordinates plus the delta-degree.
  struct Key {
    std::array<int16_t, 9> v{};
    bool operator==(const Key& o) const { return v == o.v; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      uint64_t h = 1469598103934665603ull;
      for (int16_t x : k.v) {
        h ^= static_cast<uint16_t>(x);
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h);
    }
  };

  AffineCharPoly(int rank, int level) : rank_(rank), level_(level) {
    if (rank > 8) throw std::invalid_argument("rank > 8 unsupported by packed keys");
  }

  static AffineCharPoly monomial(const RootSystem& rs, const AffineWeight& xi);
  static AffineCharPoly one(const RootSystem& rs);  // level 0, e^0

  int level() const { return level_; }
  int rank() const { return rank_; }
  bool empty() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }

  void add(const std::vector<int>& wt, int d, long long mult, int guard);
  // Multiply by e^{xi} (finite part + delta degree); adds xi.level to level.
  AffineCharPoly times_monomial(const AffineWeight& xi, int guard) const;
  AffineCharPoly operator+(const AffineCharPoly& o) const;

  // Graded character with qdeg = max_d - d (lowest q-degree normalized to 0).
  GradedCharacter to_graded_character() const;

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [k, m] : terms_) {
      std::vector<int> wt(rank_);
      for (int i = 0; i < rank_; ++i) wt[i] = k.v[i];
      f(wt, static_cast<int>(k.v[8]), m);
    }
  }

  friend AffineCharPoly demazure_operator(const AffineCharPoly& f, int i, const RootSystem& rs,
                                          int guard);

 private:
  Key make_key(const std::vector<int>& wt, int d) const;
  int rank_;
  int level_;
  std::unordered_map<Key, long long, KeyHash> terms_;
};

// D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}) via the geometric-sum
// expansion along alpha_i; i = 0 is the affine node.  guard bounds |d|.
AffineCharPoly demazure_operator(const AffineCharPoly& f, int i, const RootSystem& rs, int guard);

AffineCharPoly demazure_apply_word(const std::vector<int>& word, const AffineCharPoly& f,
                                   const RootSystem& rs, int guard);

// Graded character of the Demazure module D(l, mu); truncated strictly above
// D_max in q-degree.
GradedCharacter affine_demazure_character(int level, const Weight& mu, const RootSystem& rs,
                                          int d_max);
// Same, with the truncation bound chosen large enough to never drop a term.
GradedCharacter affine_demazure_character_full(int level, const Weight& mu, const RootSystem& rs);

// Factor of a generalized Demazure module: cumulative extended-affine element
// W_i (the product w_1...w_i) together with the dominant affine weight
// Lambda_i of the i-th tensor slot.
struct GeneralizedFactor {
  ExtAffineWeylElt w_cumulative;
  AffineWeight lambda;
};

// Nested Demazure-operator evaluation
//   D_{w_1}(e^{Lambda_1} D_{w_2}(e^{Lambda_2} ... D_{w_k}(e^{Lambda_k})...))
// where w_i = W_{i-1}^{-1} W_i.  Length additivity l(W_i) = l(W_{i-1}) + l(w_i)
// is required and checked.  Length-zero parts act by node relabeling.
GradedCharacter generalized_demazure_character(const std::vector<GeneralizedFactor>& factors,
                                               const RootSystem& rs, int guard);

// Convenience: the character of D(l, l*iota(lv)) computed through the
// single-factor generalized route tau_{w_0 lv}(l Lambda_0).
GradedCharacter kr_chain_character(int level, const Coweight& lv, const RootSystem& rs);

// Generalized Demazure character matching the fusion
//   D(l_1, l_1 iota(lv_1)) * ... * D(l_k, l_k iota(lv_k)) * D(l_last, l_last iota(nu)):
// factor i has cumulative element tau_{w_0(lv_1+...+lv_i)} and dominant weight
// (l_i - l_{i+1}) Lambda_0; the final factor appends the Demazure parameters of
// D(l_last, l_last iota(nu)) behind the translation by the full antidominant sum.
GradedCharacter demazure_chain_character(const std::vector<int>& ells,
                                         const std::vector<Coweight>& lvs, int ell_last,
                                         const Coweight& nu, const RootSystem& rs);

}  // namespace demfuse

#endif
