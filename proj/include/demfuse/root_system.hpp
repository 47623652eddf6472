#ifndef DEMFUSE_ROOT_SYSTEM_HPP
#define DEMFUSE_ROOT_SYSTEM_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace demfuse {

using Rational = mpq_class;

// Weight in the fundamental-weight basis: fc[i] = <lambda, alpha_i^vee>.
struct Weight {
  std::vector<int> fc;

  Weight() = default;
  explicit Weight(std::vector<int> c) : fc(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  bool dominant() const {
    for (int c : fc)
      if (c < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (int c : fc)
      if (c != 0) return false;
    return true;
  }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(int k) const;
  bool operator==(const Weight& o) const { return fc == o.fc; }
  bool operator<(const Weight& o) const { return fc < o.fc; }
};

// Coweight in the fundamental-coweight basis: fc[i] = <alpha_i, mu>.
struct Coweight {
  std::vector<int> fc;

  Coweight() = default;
  explicit Coweight(std::vector<int> c) : fc(std::move(c)) {}
  static Coweight zero(int rank) { return Coweight(std::vector<int>(rank, 0)); }

  bool dominant() const {
    for (int c : fc)
      if (c < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (int c : fc)
      if (c != 0) return false;
    return true;
  }
  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  Coweight operator*(int k) const;
  bool operator==(const Coweight& o) const { return fc == o.fc; }
  bool operator<(const Coweight& o) const { return fc < o.fc; }
};

class RootSystem {
 public:
  RootSystem(char type, int rank);

  // Parses labels like "A1", "a2", "D4", "E6".
  static RootSystem parse(const std::string& label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  bool simply_laced() const { return simply_laced_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  // cartan()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Positive roots in simple-root coordinates, simple roots first.
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }
  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }

  Weight fundamental_weight(int i) const;
  Weight simple_root(int i) const;    // alpha_i in the fundamental basis
  Coweight simple_coroot(int i) const;  // alpha_i^vee in the fundamental-coweight basis
  Weight rho() const;
  Coweight rho_coweight() const;

  // Highest root theta and its coroot.
  const std::vector<int>& theta_root_coords() const { return theta_rc_; }
  const std::vector<int>& theta_coroot_coords() const { return theta_cc_; }
  Weight theta() const;

  // c_i = (alpha_i^vee, alpha_i^vee)/2, normalized so short coroots have c = 1.
  // Equals 1 exactly on the long roots; all 1 in simply-laced types.
  int coroot_norm_half(int i) const { return cnorm_[i]; }

  // <lambda, gamma^vee> where gamma^vee is given in simple-coroot coordinates.
  long long pair_weight_coroot(const Weight& w, const std::vector<int>& coroot_coords) const;
  // <gamma, mu> where gamma is given in simple-root coordinates.
  long long pair_root_coweight(const std::vector<int>& root_coords, const Coweight& mu) const;
  long long pair_weight_theta_coroot(const Weight& w) const;

  // The embedding iota: P^vee -> P determined by the invariant form.
  Weight coweight_embed(const Coweight& mu) const;

  bool dominance_leq(const Weight& lo, const Weight& hi) const;
  bool dominance_leq(const Coweight& lo, const Coweight& hi) const;

  // Coordinates of a weight in the simple-root basis (C^{-1} applied to fc).
  std::vector<Rational> to_root_coords(const Weight& w) const;
  std::vector<Rational> to_coroot_coords(const Coweight& mu) const;

  // Invariant form scaled by an overall positive constant (d_i = L / c_i).
  // Scale-free ratios only should be consumed.
  long long form_weight_root(const Weight& w, const std::vector<int>& root_coords) const;
  Rational form_weight_weight(const Weight& a, const Weight& b) const;

  long long weyl_dimension(const Weight& lambda) const;

  const std::vector<std::vector<Rational>>& cartan_inverse() const { return cartan_inv_; }

 private:
  void build_cartan();
  void build_positive_roots();
  void build_theta();

  char type_;
  int rank_;
  bool simply_laced_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<std::vector<int>> pos_roots_;
  std::vector<int> theta_rc_;  // simple-root coords of theta
  std::vector<int> theta_cc_;  // simple-coroot coords of theta^vee
  std::vector<int> cnorm_;     // coroot half-norms c_i
  std::vector<int> dnorm_;     // scaled root half-norms d_i = lcm(c)/c_i
};

}  // namespace demfuse

#endif
