#include "demfuse/qsystem.hpp"

#include "demfuse/fusion.hpp"

namespace demfuse {

GradedCharacter KClass::character(const RootSystem& rs) const {
  if (formal()) throw std::invalid_argument("KClass::character: formal class has no character");
  Coweight lv = Coweight::zero(rs.rank());
  lv.fc[node] = 1;
  return kr_chain_character(level, lv, rs);
}

namespace {

Coweight neighbor_coweight(const RootSystem& rs, int node) {
  Coweight nb = Coweight::zero(rs.rank());
  for (int j = 0; j < rs.rank(); ++j)
    if (j != node) nb.fc[j] = -rs.cartan()[node][j];
  return nb;
}

// ch( KR_{i,l+1} * KR_{i,l-1} ) through the generalized Demazure nesting
// D(l+1 - (l-1), omega_i^vee) followed by D(l-1, 2 omega_i^vee).
GradedCharacter product_side_character(const RootSystem& rs, int node, int level) {
  WeylElt w0 = WeylElt::longest(rs);
  Coweight unit = Coweight::zero(rs.rank());
  unit.fc[node] = 1;
  ExtAffineWeylElt t1 = ExtAffineWeylElt::translation(rs, w0.apply(unit));
  ExtAffineWeylElt t2 = ExtAffineWeylElt::translation(rs, w0.apply(unit * 2));
  std::vector<GeneralizedFactor> factors;
  factors.push_back({t1, AffineWeight{2, Weight::zero(rs.rank()), 0}});
  factors.push_back({t2, AffineWeight{level - 1, Weight::zero(rs.rank()), 0}});
  long long lw = affine_length(t1, rs) + affine_length(t1.inverse() * t2, rs);
  return generalized_demazure_character(factors, rs, static_cast<int>(2 * lw) + 8);
}

}  // namespace

bool neighbor_support_identity(const RootSystem& rs, int node) {
  Coweight unit = Coweight::zero(rs.rank());
  unit.fc[node] = 1;
  return neighbor_coweight(rs, node) == unit * 2 - rs.simple_coroot(node);
}

QSystemReport qsystem_check(const RootSystem& rs, int node, int level, bool use_fusion_engine) {
  if (level < 1) throw std::invalid_argument("qsystem_check: level must be >= 1");
  if (node < 0 || node >= rs.rank()) throw std::invalid_argument("qsystem_check: bad node");

  QSystemReport rep;
  rep.node = node;
  rep.level = level;

  Coweight unit = Coweight::zero(rs.rank());
  unit.fc[node] = 1;
  rep.A = product_side_character(rs, node, level);
  rep.B = affine_demazure_character_full(level, rs.coweight_embed(unit * 2) * level, rs);
  rep.C = affine_demazure_character_full(
      level, rs.coweight_embed(neighbor_coweight(rs, node)) * level, rs);
  rep.dimA = rep.A.dimension();
  rep.dimB = rep.B.dimension();
  rep.dimC = rep.C.dimension();

  auto match_residual = [&](const GradedCharacter& big, const GradedCharacter& small) {
    GradedCharacter r = big - small;
    if (r.empty() || !r.nonnegative()) return std::optional<int>();
    int s = r.min_q();
    if (r.normalized() == rep.C) return std::optional<int>(s);
    return std::optional<int>();
  };
  if (auto s = match_residual(rep.B, rep.A)) {
    rep.orientation = 1;
    rep.qshift = *s;
    rep.pass = true;
  } else if (auto s2 = match_residual(rep.A, rep.B)) {
    rep.orientation = 2;
    rep.qshift = *s2;
    rep.pass = true;
  }

  if (use_fusion_engine) {
    if (rs.type() != 'A')
      throw std::invalid_argument("qsystem_check: fusion engine route is type A only");
    rep.fusion_engine_used = true;
    GradedCharacter af =
        generalized_demazure_oracle({level + 1}, {unit}, level - 1, unit, rs);
    ModulePtr kr = demazure_module_explicit(level, unit, rs);
    GradedCharacter bf = fusion_product({kr, kr}, default_points(2), false).character.normalized();
    std::vector<ModulePtr> nbs;
    for (int j = 0; j < rs.rank(); ++j)
      if (j != node && rs.cartan()[node][j] != 0) {
        Coweight u = Coweight::zero(rs.rank());
        u.fc[j] = 1;
        nbs.push_back(demazure_module_explicit(level, u, rs));
      }
    GradedCharacter cf;
    if (nbs.empty())
      cf = CurrentModule::trivial(rs)->graded_character();
    else if (nbs.size() == 1)
      cf = nbs[0]->graded_character().normalized();
    else
      cf = fusion_product(nbs, default_points(static_cast<int>(nbs.size())), false).character.normalized();
    rep.fusion_agrees = af == rep.A && bf == rep.B && cf == rep.C;
  }
  return rep;
}

}  // namespace demfuse
