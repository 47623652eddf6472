#ifndef DEMFUSE_CURRENT_MODULE_HPP
#define DEMFUSE_CURRENT_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>

#include "demfuse/character.hpp"
#include "demfuse/root_system.hpp"
#include "demfuse/sparse.hpp"

namespace demfuse {

enum class GenKind : char { E = 'e', F = 'f', H = 'h' };

struct NonClosureError : std::runtime_error {
  int achieved_dim;
  explicit NonClosureError(int d)
      : std::runtime_error("cyclic closure did not stabilize within the degree schedule; "
                           "achieved dimension " +
                           std::to_string(d)),
        achieved_dim(d) {}
};

class CurrentModule;
using ModulePtr = std::shared_ptr<const CurrentModule>;

// Finite-dimensional g[t]-module with explicit exact-rational action matrices
// for the generators x tensor t^s, x in {e_i, f_i, h_i}.
class CurrentModule {
 public:
  // Natural (n+1)-dimensional module of sl_{n+1} as an evaluation module at 0.
  static ModulePtr natural(const RootSystem& rs);
  static ModulePtr trivial(const RootSystem& rs);
  // V(lambda) as evaluation module at 0, built inside a tensor power of the
  // natural module (type A only).
  static ModulePtr irreducible_evaluation(const Weight& lambda, const RootSystem& rs);
  static ModulePtr evaluation_shift(ModulePtr m, const Rational& c);
  static ModulePtr tensor(ModulePtr a, ModulePtr b);
  static ModulePtr tensor_chain(const std::vector<ModulePtr>& ms);
  // Explicit module from raw data; actions with s >= t_bound act as zero when
  // zero_beyond is set.
  static ModulePtr make_explicit(const RootSystem& rs, int dim, std::vector<Weight> weights,
                                 std::optional<std::vector<int>> qdeg,
                                 std::map<std::tuple<char, int, int>, SparseMat> actions,
                                 int t_bound, bool zero_beyond, std::optional<int> cyclic);

  const RootSystem& rs() const { return rs_; }
  int dim() const { return dim_; }
  const Weight& weight_of(int i) const { return weights_[i]; }
  bool graded() const { return qdeg_.has_value(); }
  int qdeg_of(int i) const { return (*qdeg_)[i]; }
  std::optional<int> cyclic_vector() const { return cyclic_; }
  int t_bound() const { return t_bound_; }
  // True when act() is defined for every power s (zero beyond t_bound or
  // derived from such modules).
  bool degree_complete() const;

  // Action matrix of the generator (kind, node, t-power s); cached.
  const SparseMat& act(GenKind k, int node, int s) const;
  SparseVec apply(GenKind k, int node, int s, const SparseVec& v) const;

  GradedCharacter graded_character() const;
  std::string dump_json() const;

 private:
  enum class Repr { Explicit, Shifted, Tensor };
  CurrentModule(const RootSystem& rs) : rs_(rs) {}

  RootSystem rs_;
  Repr repr_ = Repr::Explicit;
  int dim_ = 0;
  std::vector<Weight> weights_;
  std::optional<std::vector<int>> qdeg_;
  std::optional<int> cyclic_;
  int t_bound_ = 1;
  bool zero_beyond_ = false;

  // Explicit
  std::map<std::tuple<char, int, int>, SparseMat> actions_;
  // Shifted
  ModulePtr base_;
  Rational shift_c_;
  // Tensor
  ModulePtr left_, right_;

  mutable std::map<std::tuple<char, int, int>, SparseMat> cache_;
  SparseMat compute_act(GenKind k, int node, int s) const;
};

struct ClosureResult {
  ModulePtr sub;
  bool is_all;
};

// U(g[t]) * v computed as a fixpoint over the generators (kind, node, s) with
// s = 0..schedule_max, certified by one extra degree; throws NonClosureError
// if the certification fails.  schedule_max < 0 selects the default
// t_bound + 2 heuristic.
ClosureResult cyclic_closure(const ModulePtr& m, const SparseVec& v, int schedule_max = -1);

// 200 random commutator identities [x t^a, y t^b] = [x,y] t^{a+b} checked on
// random basis vectors; returns false on the first exact failure.
bool bracket_audit(const ModulePtr& m, unsigned seed, int checks = 200);

}  // namespace demfuse

#endif
