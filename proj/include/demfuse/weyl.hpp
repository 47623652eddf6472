#ifndef DEMFUSE_WEYL_HPP
#define DEMFUSE_WEYL_HPP

#include <vector>

#include "demfuse/root_system.hpp"

namespace demfuse {

// Finite Weyl group element, stored as its action matrices on the weight and
// coweight lattices (fundamental bases).
class WeylElt {
 public:
  WeylElt() = default;  // unusable placeholder; assign before use
  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple_reflection(const RootSystem& rs, int i);
  static WeylElt theta_reflection(const RootSystem& rs);
  static WeylElt from_word(const RootSystem& rs, const std::vector<int>& word);
  static WeylElt longest(const RootSystem& rs);

  Weight apply(const Weight& w) const;
  Coweight apply(const Coweight& mu) const;
  // Action on a root given in simple-root coordinates.
  std::vector<int> apply_root(const std::vector<int>& rc) const;

  WeylElt operator*(const WeylElt& o) const;  // composition: (this*o)(x) = this(o(x))
  WeylElt inverse() const;
  bool operator==(const WeylElt& o) const { return mw_ == o.mw_; }
  bool is_identity() const;

  int length() const;
  // Reduced word (i_1,...,i_p) with *this = s_{i_1}...s_{i_p}; smallest
  // available index peeled first.
  std::vector<int> reduced_word() const;

  const RootSystem& root_system() const { return *rs_; }

 private:
  WeylElt(const RootSystem& rs) : rs_(&rs) {}
  const RootSystem* rs_ = nullptr;
  std::vector<std::vector<int>> mw_;  // weight action
  std::vector<std::vector<int>> mc_;  // coweight action
};

// Element tau_mu * v of the extended affine Weyl group W semidirect P^vee.
struct ExtAffineWeylElt {
  Coweight tau;
  WeylElt v;

  static ExtAffineWeylElt identity(const RootSystem& rs);
  static ExtAffineWeylElt translation(const RootSystem& rs, const Coweight& mu);
  static ExtAffineWeylElt finite(const RootSystem& rs, const WeylElt& w);
  // Affine simple reflection; i = 0 is the affine node, i >= 1 is s_{alpha_i}.
  static ExtAffineWeylElt affine_simple(const RootSystem& rs, int i);

  ExtAffineWeylElt operator*(const ExtAffineWeylElt& o) const;
  ExtAffineWeylElt inverse() const;
  bool operator==(const ExtAffineWeylElt& o) const { return tau == o.tau && v == o.v; }
};

long long affine_length(const ExtAffineWeylElt& w, const RootSystem& rs);

// Length-zero element together with its permutation of the affine nodes:
// node_perm[i] = j means the element maps affine simple root i to j.
struct OmegaElt {
  ExtAffineWeylElt g;
  std::vector<int> node_perm;
};

OmegaElt omega_of(const ExtAffineWeylElt& w, const RootSystem& rs);

struct AffineReducedWord {
  std::vector<int> word;  // affine node indices, 0 = affine node
  OmegaElt omega;
};

// w = s_{word[0]} ... s_{word[p-1]} * omega with p = affine_length(w).
AffineReducedWord affine_reduced_word(const ExtAffineWeylElt& w, const RootSystem& rs);

// Level-l affine weight  l*Lambda_0 + finite_part - delta_degree * delta.
struct AffineWeight {
  int level = 0;
  Weight finite;
  int delta_degree = 0;

  bool dominant(const RootSystem& rs) const {
    return finite.dominant() && rs.pair_weight_theta_coroot(finite) <= level;
  }
  bool operator==(const AffineWeight& o) const {
    return level == o.level && finite == o.finite && delta_degree == o.delta_degree;
  }
};

// <Lambda, alpha_i^vee> for affine node i (i = 0 uses alpha_0^vee = K - theta^vee).
long long affine_pairing(const AffineWeight& xi, int i, const RootSystem& rs);
// Reflection s_i(Lambda) for affine node i.
AffineWeight affine_reflect(const AffineWeight& xi, int i, const RootSystem& rs);

struct DemazureParams {
  ExtAffineWeylElt w;
  AffineWeight lambda;          // dominant, w * lambda = l*Lambda_0 + w_0(mu)
  std::vector<int> word;        // reduced word for w over affine nodes
};

// Solves w * Lambda = l*Lambda_0 + w_0(mu) with Lambda dominant and w of
// minimal length.
DemazureParams demazure_params(int level, const Weight& mu, const RootSystem& rs);

}  // namespace demfuse

#endif
