#ifndef DEMFUSE_FUSION_HPP
#define DEMFUSE_FUSION_HPP

#include <random>
#include <set>

#include "demfuse/current_module.hpp"
#include "demfuse/demazure.hpp"

namespace demfuse {

struct FusionFiltration {
  std::vector<int> stage_dims;               // cumulative dim F_{<=n}
  std::vector<GradedCharacter> layer_chars;  // finite characters of the layers
  int top_degree = 0;
};

struct FusionResult {
  GradedCharacter character;
  FusionFiltration filtration;
  ModulePtr gr;  // associated graded with its induced g[t]-structure; may be null
};

// Feigin-Loktev fusion: associated graded of M_1(c_1) x ... x M_k(c_k) with
// respect to the t-degree filtration generated from the tensor of cyclic
// vectors.  Throws NonClosureError (carrying the achieved dimension) if the
// tensor of cyclic vectors fails to generate.  Extracting the induced module
// structure on gr costs far more than the character; skip it when only the
// character is consumed.
FusionResult fusion_product(const std::vector<ModulePtr>& ms, const std::vector<Rational>& cs,
                            bool with_gr = true);

// Default pairwise-distinct evaluation points 0, 1, 2, ...
std::vector<Rational> default_points(int k);
// Seeded pseudo-random pairwise-distinct small rationals.
std::vector<Rational> random_points(int k, std::mt19937_64& rng);

struct IndependenceReport {
  std::vector<std::vector<Rational>> tuples;
  std::vector<GradedCharacter> distinct_characters;  // deduplicated
  bool singleton() const { return distinct_characters.size() == 1; }
};

IndependenceReport check_parameter_independence(const std::vector<ModulePtr>& ms, int trials,
                                                unsigned long long seed);

struct AssociativityReport {
  GradedCharacter flat;
  GradedCharacter grouped;
  bool equal = false;
};

// Fuses the contiguous block [start, start+len) first, then fuses its
// associated graded with the remaining factors, and compares with the flat
// fusion.  All runs use the default evaluation points.
AssociativityReport check_associativity(const std::vector<ModulePtr>& ms, int start, int len);

// D(l, l*iota(lv)) as an explicit graded cyclic module: the associated graded
// of a fusion of evaluation modules V(l w_i), one per fundamental unit of lv
// (type A).  The character is cross-checked against the Demazure-operator
// engine; a mismatch throws.
ModulePtr demazure_module_explicit(int level, const Coweight& lv, const RootSystem& rs);

// Character of the cyclic submodule generated by the tensor of cyclic vectors
// inside D(l_1-l_2, .) x D(l_2-l_3, .) x ... x D(l_last, l_last*iota(sum+nu)),
// the alternative description of the generalized Demazure module.
GradedCharacter generalized_demazure_oracle(const std::vector<int>& ells,
                                            const std::vector<Coweight>& lvs, int ell_last,
                                            const Coweight& nu, const RootSystem& rs);

}  // namespace demfuse

#endif
