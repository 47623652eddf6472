#ifndef DEMFUSE_CHARACTER_HPP
#define DEMFUSE_CHARACTER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "demfuse/root_system.hpp"
#include "demfuse/weyl.hpp"

namespace demfuse {

// Multiplicity map (finite weight, q-degree) -> Z.  The q-degree tracks the
// t-grading of the module; finite characters live entirely in q-degree 0.
class GradedCharacter {
 public:
  using Key = std::pair<std::vector<int>, int>;  // (weight coords, qdeg)

  GradedCharacter() = default;

  void add(const std::vector<int>& wt, int q, long long mult);
  void add(const Weight& wt, int q, long long mult) { add(wt.fc, q, mult); }
  long long mult(const std::vector<int>& wt, int q) const;

  const std::map<Key, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  long long dimension() const;
  int min_q() const;
  int max_q() const;
  long long dim_at_q(int q) const;

  GradedCharacter shifted_q(int s) const;
  GradedCharacter normalized() const;  // lowest q-degree moved to 0
  GradedCharacter operator+(const GradedCharacter& o) const;
  GradedCharacter operator-(const GradedCharacter& o) const;
  bool operator==(const GradedCharacter& o) const { return terms_ == o.terms_; }

  // Sums multiplicities over qdeg (the q = 1 specialization).
  GradedCharacter specialize_q() const;

  bool weyl_symmetric(const RootSystem& rs) const;
  bool nonnegative() const;

  // Shared serialization: {"level": l, "terms": [{"wt": [...], "q": n,
  // "mult": m}, ...]} sorted lexicographically by (q, wt).  Bit-exact.
  std::string to_json(int level) const;

 private:
  std::map<Key, long long> terms_;
};

GradedCharacter weyl_character(const Weight& lambda, const RootSystem& rs);

}  // namespace demfuse

#endif
