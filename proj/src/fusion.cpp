#include "demfuse/fusion.hpp"

#include <algorithm>

namespace demfuse {

namespace {

// Flag-adapted filtration state: echelon rows never change after insertion,
// so the span of the rows with stage <= n is exactly F_{<=n}.
struct FiltrationState {
  EchelonBasis eb;
  std::vector<int> stage_of_row;

  // Adds v at the given stage; returns the new row index or -1.
  int add(SparseVec v, int stage) {
    int idx = eb.add(std::move(v));
    if (idx >= 0) stage_of_row.push_back(stage);
    return idx;
  }
};

// Closes the rows from `from_row` on under the degree-0 generators, tagging
// new rows with `stage`.  h t^s = [e, f t^s], so a span closed under the e/f
// generators is closed under the h's as well; they are omitted throughout.
void close_degree_zero(FiltrationState& st, const ModulePtr& ambient, int from_row, int stage) {
  const RootSystem& rs = ambient->rs();
  std::vector<int> work;
  for (int r = from_row; r < st.eb.size(); ++r) work.push_back(r);
  while (!work.empty()) {
    int row = work.back();
    work.pop_back();
    SparseVec u = st.eb.row(row);
    for (GenKind k : {GenKind::E, GenKind::F})
      for (int node = 0; node < rs.rank(); ++node) {
        SparseVec w = ambient->apply(k, node, 0, u);
        if (w.is_zero()) continue;
        int idx = st.add(std::move(w), stage);
        if (idx >= 0) work.push_back(idx);
      }
  }
}

}  // namespace

std::vector<Rational> default_points(int k) {
  std::vector<Rational> cs;
  for (int i = 0; i < k; ++i) cs.push_back(Rational(i));
  return cs;
}

std::vector<Rational> random_points(int k, std::mt19937_64& rng) {
  std::vector<Rational> cs;
  while (static_cast<int>(cs.size()) < k) {
    long long num = static_cast<long long>(rng() % 19) - 9;
    long long den = static_cast<long long>(rng() % 4) + 1;
    Rational c(static_cast<long>(num), static_cast<long>(den));
    c.canonicalize();
    if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
  }
  return cs;
}

FusionResult fusion_product(const std::vector<ModulePtr>& ms, const std::vector<Rational>& cs,
                            bool with_gr) {
  if (ms.empty()) throw std::invalid_argument("fusion_product: no factors");
  if (ms.size() != cs.size())
    throw std::invalid_argument("fusion_product: point count mismatch");
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i] == cs[j]) throw std::invalid_argument("fusion_product: repeated evaluation points");
  for (const auto& m : ms) {
    if (!m->graded()) throw std::invalid_argument("fusion_product: factor not graded");
    if (!m->cyclic_vector()) throw std::invalid_argument("fusion_product: factor not cyclic");
  }
  const RootSystem& rs = ms[0]->rs();

  ModulePtr ambient;
  long long vidx = 0;
  for (size_t i = 0; i < ms.size(); ++i) {
    ModulePtr f = CurrentModule::evaluation_shift(ms[i], cs[i]);
    vidx = vidx * f->dim() + *f->cyclic_vector();
    ambient = ambient ? CurrentModule::tensor(ambient, f) : f;
  }

  FiltrationState st;
  st.add(SparseVec::unit(static_cast<int>(vidx)), 0);
  close_degree_zero(st, ambient, 0, 0);

  FusionFiltration filt;
  auto record_stage = [&](int upto_row) {
    filt.stage_dims.push_back(st.eb.size());
    GradedCharacter layer;
    for (int r = upto_row; r < st.eb.size(); ++r)
      layer.add(ambient->weight_of(st.eb.row(r).leading_index()), 0, 1);
    filt.layer_chars.push_back(layer);
  };
  record_stage(0);

  int stall = 0;
  const int stall_window = ambient->t_bound() + 2;
  for (int n = 1; st.eb.size() < ambient->dim(); ++n) {
    int before = st.eb.size();
    // New contributions at stage n: (g t^s) applied to rows of stage n - s.
    for (int s = 1; s <= n; ++s) {
      for (int r = 0; r < before; ++r) {
        if (st.stage_of_row[r] != n - s) continue;
        SparseVec u = st.eb.row(r);
        for (GenKind k : {GenKind::E, GenKind::F})
          for (int node = 0; node < rs.rank(); ++node) {
            SparseVec w = ambient->apply(k, node, s, u);
            if (!w.is_zero()) st.add(std::move(w), n);
          }
      }
    }
    close_degree_zero(st, ambient, before, n);
    if (st.eb.size() == before) {
      if (++stall >= stall_window) throw NonClosureError(st.eb.size());
    } else {
      stall = 0;
      // Backfill empty stages so stage indices match the filtration degree.
      while (static_cast<int>(filt.stage_dims.size()) < n) {
        filt.stage_dims.push_back(before);
        filt.layer_chars.push_back(GradedCharacter());
      }
      record_stage(before);
    }
  }
  filt.top_degree = static_cast<int>(filt.stage_dims.size()) - 1;

  GradedCharacter ch;
  for (size_t n = 0; n < filt.layer_chars.size(); ++n)
    for (const auto& [k, m] : filt.layer_chars[n].terms()) ch.add(k.first, static_cast<int>(n), m);

  if (!with_gr) return {ch, filt, nullptr};

  // Associated graded module: induced action in the flag-adapted basis,
  // keeping only the stage-raising component of each generator.
  int d = st.eb.size();
  std::vector<Weight> weights;
  std::vector<int> qdeg;
  for (int i = 0; i < d; ++i) {
    const SparseVec& row = st.eb.row(i);
    Weight w = ambient->weight_of(row.leading_index());
    for (const auto& [j, val] : row.entries())
      if (!(ambient->weight_of(j) == w))
        throw std::logic_error("fusion_product: non-weight-homogeneous filtration row");
    weights.push_back(w);
    qdeg.push_back(st.stage_of_row[i]);
  }
  int top = filt.top_degree;
  std::map<std::tuple<char, int, int>, SparseMat> actions;
  for (GenKind k : {GenKind::E, GenKind::F, GenKind::H})
    for (int node = 0; node < rs.rank(); ++node)
      for (int s = 0; s <= top; ++s) {
        SparseMat mat(d, d);
        bool nonzero = false;
        for (int i = 0; i < d; ++i) {
          SparseVec w = ambient->apply(k, node, s, st.eb.row(i));
          auto coords = st.eb.coordinates(std::move(w));
          if (!coords) throw std::logic_error("fusion_product: action leaves filtration span");
          for (const auto& [r, c] : *coords) {
            if (st.stage_of_row[r] > st.stage_of_row[i] + s)
              throw std::logic_error("fusion_product: filtration violated by generator action");
            if (st.stage_of_row[r] == st.stage_of_row[i] + s) {
              mat.set(r, i, c);
              nonzero = true;
            }
          }
        }
        if (nonzero) actions[std::make_tuple(static_cast<char>(k), node, s)] = std::move(mat);
      }
  ModulePtr gr = CurrentModule::make_explicit(rs, d, std::move(weights), std::move(qdeg),
                                              std::move(actions), top + 1, true, 0);
  return {ch, filt, gr};
}

IndependenceReport check_parameter_independence(const std::vector<ModulePtr>& ms, int trials,
                                                unsigned long long seed) {
  if (trials < 2) throw std::invalid_argument("check_parameter_independence: trials < 2");
  std::mt19937_64 rng(seed);
  IndependenceReport rep;
  for (int t = 0; t < trials; ++t) {
    auto cs = random_points(static_cast<int>(ms.size()), rng);
    rep.tuples.push_back(cs);
    GradedCharacter ch = fusion_product(ms, cs, false).character.normalized();
    if (std::find(rep.distinct_characters.begin(), rep.distinct_characters.end(), ch) ==
        rep.distinct_characters.end())
      rep.distinct_characters.push_back(ch);
  }
  return rep;
}

AssociativityReport check_associativity(const std::vector<ModulePtr>& ms, int start, int len) {
  int k = static_cast<int>(ms.size());
  if (start < 0 || len < 1 || start + len > k)
    throw std::invalid_argument("check_associativity: bad grouping");
  AssociativityReport rep;
  rep.flat = fusion_product(ms, default_points(k), false).character.normalized();
  if (len == 1) {
    rep.grouped = rep.flat;
    rep.equal = true;
    return rep;
  }
  std::vector<ModulePtr> inner(ms.begin() + start, ms.begin() + start + len);
  FusionResult fr = fusion_product(inner, default_points(len));
  std::vector<ModulePtr> outer;
  for (int i = 0; i < start; ++i) outer.push_back(ms[i]);
  outer.push_back(fr.gr);
  for (int i = start + len; i < k; ++i) outer.push_back(ms[i]);
  rep.grouped = outer.size() == 1
                    ? fr.gr->graded_character().normalized()
                    : fusion_product(outer, default_points(static_cast<int>(outer.size())), false)
                          .character.normalized();
  rep.equal = rep.flat == rep.grouped;
  return rep;
}

ModulePtr demazure_module_explicit(int level, const Coweight& lv, const RootSystem& rs) {
  if (rs.type() != 'A') throw std::invalid_argument("demazure_module_explicit: type A only");
  static std::map<std::tuple<std::string, int, std::vector<int>>, ModulePtr> cache;
  auto key = std::make_tuple(rs.label(), level, lv.fc);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (!lv.dominant()) throw std::invalid_argument("demazure_module_explicit: non-dominant coweight");
  if (level < 0) throw std::invalid_argument("demazure_module_explicit: negative level");
  if (level == 0 || lv.is_zero()) return CurrentModule::trivial(rs);

  std::vector<ModulePtr> factors;
  for (int i = 0; i < rs.rank(); ++i)
    for (int c = 0; c < lv.fc[i]; ++c)
      factors.push_back(
          CurrentModule::irreducible_evaluation(rs.fundamental_weight(i) * level, rs));

  ModulePtr built;
  if (factors.size() == 1) {
    built = factors[0];
  } else {
    built = fusion_product(factors, default_points(static_cast<int>(factors.size()))).gr;
  }
  GradedCharacter got = built->graded_character().normalized();
  GradedCharacter want =
      affine_demazure_character_full(level, rs.coweight_embed(lv) * level, rs).normalized();
  if (!(got == want))
    throw std::logic_error("demazure_module_explicit: cross-oracle character mismatch for " +
                           rs.label());
  cache.emplace(std::move(key), built);
  return built;
}

GradedCharacter generalized_demazure_oracle(const std::vector<int>& ells,
                                            const std::vector<Coweight>& lvs, int ell_last,
                                            const Coweight& nu, const RootSystem& rs) {
  if (ells.size() != lvs.size())
    throw std::invalid_argument("generalized_demazure_oracle: size mismatch");
  for (size_t i = 0; i + 1 < ells.size(); ++i)
    if (ells[i] < ells[i + 1])
      throw std::invalid_argument("generalized_demazure_oracle: levels must be non-increasing");
  if (!ells.empty() && ells.back() < ell_last)
    throw std::invalid_argument("generalized_demazure_oracle: levels must be non-increasing");

  std::vector<ModulePtr> factors;
  Coweight partial = Coweight::zero(rs.rank());
  for (size_t i = 0; i < ells.size(); ++i) {
    partial = partial + lvs[i];
    int diff = (i + 1 < ells.size() ? ells[i] - ells[i + 1] : ells[i] - ell_last);
    factors.push_back(demazure_module_explicit(diff, partial, rs));
  }
  factors.push_back(demazure_module_explicit(ell_last, partial + nu, rs));

  ModulePtr ambient;
  long long vidx = 0;
  for (const auto& f : factors) {
    vidx = vidx * f->dim() + *f->cyclic_vector();
    ambient = ambient ? CurrentModule::tensor(ambient, f) : f;
  }
  ClosureResult cr = cyclic_closure(ambient, SparseVec::unit(static_cast<int>(vidx)));
  return cr.sub->graded_character().normalized();
}

}  // namespace demfuse
