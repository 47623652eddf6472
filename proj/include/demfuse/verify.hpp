#ifndef DEMFUSE_VERIFY_HPP
#define DEMFUSE_VERIFY_HPP

#include <string>
#include <vector>

#include "demfuse/cluster.hpp"
#include "demfuse/fusion.hpp"
#include "demfuse/qsystem.hpp"

namespace demfuse {

struct VerifyInstance {
  std::string input;
  int level = 0;  // level used when serializing the two characters
  GradedCharacter lhs;
  GradedCharacter rhs;
  bool equal = false;
  int qshift = 0;
  bool skipped = false;
  std::string note;
};

struct VerifyReport {
  std::string claim;
  std::vector<VerifyInstance> instances;
  bool pass = false;

  std::string to_json() const;
};

struct VerifyOptions {
  int lmax = 3;          // maximal level in chains / q-system instances
  int kmax = 3;          // maximal chain length
  int weight_cap = 6;    // cap on sum of <2 rho, lambda_i^vee> in the level-1 family
  int ambient_cap = 2000;  // instances with a larger ambient tensor dim are skipped
  int trials = 5;
  unsigned long long seed = 20240801ull;
};

// claim in {cor-fusion-demazure, qsystem, param-independence, associativity,
// remark-2.4}; throws std::invalid_argument on an unknown claim.
VerifyReport run_claim(const std::string& claim, const RootSystem& rs, const VerifyOptions& opt);

// The level-1 instance family: multisets of nonzero dominant coweights with
// total <2 rho, .> bounded by the cap.
std::vector<std::vector<Coweight>> level_one_family(const RootSystem& rs, int weight_cap);

}  // namespace demfuse

#endif
