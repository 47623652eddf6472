#ifndef DEMFUSE_CLUSTER_HPP
#define DEMFUSE_CLUSTER_HPP

#include <map>
#include <string>
#include <vector>

#include "demfuse/qsystem.hpp"

namespace demfuse {

// Integer Laurent polynomial in a fixed set of variables: exponent vector ->
// coefficient.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly one(int nvars);
  static LaurentPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }

  void add_term(const std::vector<int>& e, long long c);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<std::vector<int>, long long> terms_;
};

// Unreduced fraction of Laurent polynomials; equality by cross-multiplication.
struct FracValue {
  LaurentPoly num;
  LaurentPoly den;

  static FracValue variable(int nvars, int i) {
    return {LaurentPoly::variable(nvars, i), LaurentPoly::one(nvars)};
  }
  FracValue operator*(const FracValue& o) const { return {num * o.num, den * o.den}; }
  FracValue operator+(const FracValue& o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  bool same_value(const FracValue& o) const { return num * o.den == o.num * den; }
  std::string str(const std::vector<std::string>& names) const;
};

struct ClusterSeed {
  std::vector<std::string> nodes;
  std::vector<std::vector<int>> B;  // skew-symmetric exchange matrix
  std::vector<FracValue> vars;      // values in the initial cluster variables

  int size() const { return static_cast<int>(nodes.size()); }
  std::string to_json() const;
};

ClusterSeed initial_seed(std::vector<std::string> nodes, std::vector<std::vector<int>> B);

// Matrix mutation together with the exchange relation x_k' x_k = M+ + M-.
ClusterSeed mutate(const ClusterSeed& s, int k);

// Same labelled quiver and, variable by variable, the same value as a
// fraction (cross-multiplied).
bool seeds_equal(const ClusterSeed& a, const ClusterSeed& b);

// The two-slice Q-system seed: node (i,0) carries the class at level l-1 and
// node (i,1) the class at level l; arrows encode the Cartan matrix.
ClusterSeed qsystem_seed(const RootSystem& rs);

struct ExchangeMatch {
  bool character_pass = false;  // certified identity B = A + q^s C
  bool monomials_ok = false;    // exchange monomials are {x_{(i,1)}^2, prod_{j~i} x_{(j,1)}}
  bool sign_ok = false;         // a diagonal twist by 4th roots of unity exists
  std::vector<int> twist;       // exponents x_j with eps_j = i^{x_j}
  int qshift = 0;
  bool match = false;
};

// Matches the mutation of the Q-system seed at node (i,0) against the
// character identity certified by qsystem_check, up to a diagonal sign twist
// eps_j = i^{x_j} solving  sum_{j~i} x_j = 2 + 2 x_i  (mod 4) at every node.
// Only the squared signs eps_j^2 = +-1 enter the matched identity.
// With disable_sign_twist the trivial twist is forced (negative control).
ExchangeMatch qsystem_exchange_match(const RootSystem& rs, int node, int level,
                                     bool disable_sign_twist = false);

}  // namespace demfuse

#endif
