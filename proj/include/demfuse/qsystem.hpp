#ifndef DEMFUSE_QSYSTEM_HPP
#define DEMFUSE_QSYSTEM_HPP

#include "demfuse/character.hpp"
#include "demfuse/demazure.hpp"

namespace demfuse {

// K-class of the section module attached to (node, level): for level >= 0 the
// graded character of D(level, level*iota(omega_node^vee)); negative levels
// are tracked as formal symbols with no character.
struct KClass {
  int node = 0;
  int level = 0;
  bool formal() const { return level < 0; }
  GradedCharacter character(const RootSystem& rs) const;
};

struct QSystemReport {
  int node = 0;
  int level = 0;
  GradedCharacter A;  // ch( KR_{i,l+1} * KR_{i,l-1} )
  GradedCharacter B;  // ch( KR_{i,l} * KR_{i,l} )
  GradedCharacter C;  // ch( fusion of the neighbor classes KR_{j,l} )
  // orientation 1: B = A + q^s C; orientation 2: A = B + q^s C; 0: neither.
  int orientation = 0;
  int qshift = 0;
  bool pass = false;
  long long dimA = 0, dimB = 0, dimC = 0;
  bool fusion_engine_used = false;
  bool fusion_agrees = true;  // fusion-engine route matches the character route
};

// Character-level Q-system verification; when use_fusion_engine is set (type A
// only) the three characters are recomputed through the explicit fusion
// engine and compared.
QSystemReport qsystem_check(const RootSystem& rs, int node, int level,
                            bool use_fusion_engine = false);

// Checks sum_{j ~ i} (-C_ij) omega_j^vee = 2 omega_i^vee - alpha_i^vee.
bool neighbor_support_identity(const RootSystem& rs, int node);

}  // namespace demfuse

#endif
