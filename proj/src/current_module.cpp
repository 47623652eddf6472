#include "demfuse/current_module.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace demfuse {

namespace {

Rational rational_pow(const Rational& c, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= c;
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 0; i < k; ++i) {
    Rational f(n - i, i + 1);
    f.canonicalize();  // mpq_class(num, den) is not canonicalized on construction
    r *= f;
  }
  return r;
}

std::tuple<char, int, int> gen_key(GenKind k, int node, int s) {
  return {static_cast<char>(k), node, s};
}

}  // namespace

ModulePtr CurrentModule::natural(const RootSystem& rs) {
  if (rs.type() != 'A') throw std::invalid_argument("natural module: type A only");
  int n = rs.rank();
  int d = n + 1;
  auto m = std::shared_ptr<CurrentModule>(new CurrentModule(rs));
  m->repr_ = Repr::Explicit;
  m->dim_ = d;
  m->t_bound_ = 1;
  m->zero_beyond_ = true;
  m->qdeg_ = std::vector<int>(d, 0);
  m->cyclic_ = 0;
  for (int j = 0; j < d; ++j) {
    std::vector<int> fc(n, 0);
    if (j < n) fc[j] += 1;
    if (j > 0) fc[j - 1] -= 1;
    m->weights_.push_back(Weight(std::move(fc)));
  }
  for (int i = 0; i < n; ++i) {
    SparseMat e(d, d), f(d, d), h(d, d);
    e.set(i, i + 1, Rational(1));
    f.set(i + 1, i, Rational(1));
    h.set(i, i, Rational(1));
    h.set(i + 1, i + 1, Rational(-1));
    m->actions_[gen_key(GenKind::E, i, 0)] = std::move(e);
    m->actions_[gen_key(GenKind::F, i, 0)] = std::move(f);
    m->actions_[gen_key(GenKind::H, i, 0)] = std::move(h);
  }
  return m;
}

ModulePtr CurrentModule::trivial(const RootSystem& rs) {
  auto m = std::shared_ptr<CurrentModule>(new CurrentModule(rs));
  m->repr_ = Repr::Explicit;
  m->dim_ = 1;
  m->t_bound_ = 1;
  m->zero_beyond_ = true;
  m->qdeg_ = std::vector<int>(1, 0);
  m->cyclic_ = 0;
  m->weights_.push_back(Weight::zero(rs.rank()));
  return m;
}

ModulePtr CurrentModule::irreducible_evaluation(const Weight& lambda, const RootSystem& rs) {
  if (rs.type() != 'A') throw std::invalid_argument("irreducible_evaluation: type A only");
  if (!lambda.dominant()) throw std::invalid_argument("irreducible_evaluation: non-dominant weight");
  if (lambda.is_zero()) return trivial(rs);
  int n = rs.rank();
  ModulePtr nat = natural(rs);

  // Ambient: one natural factor per box of the column-strip shape; the
  // highest vector is a product of antisymmetrized columns.
  std::vector<int> columns;  // column heights, one per fundamental-weight unit
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < lambda.fc[i]; ++c) columns.push_back(i + 1);

  ModulePtr ambient;
  for (size_t b = 0; b < columns.size(); ++b)
    for (int j = 0; j < columns[b]; ++j) ambient = ambient ? tensor(ambient, nat) : nat;

  // Sparse highest vector: tensor over columns of sum_{perm} sgn * v_perm.
  int total = 0;
  for (int h : columns) total += h;
  std::vector<std::pair<std::vector<int>, int>> terms = {{{}, 1}};  // (indices, sign)
  for (int h : columns) {
    std::vector<int> perm(h);
    for (int j = 0; j < h; ++j) perm[j] = j;
    std::vector<std::pair<std::vector<int>, int>> block;
    int sign_base = 1;
    do {
      // Permutation sign by inversion count.
      int inv = 0;
      for (int a = 0; a < h; ++a)
        for (int b = a + 1; b < h; ++b)
          if (perm[a] > perm[b]) ++inv;
      block.push_back({perm, inv % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)sign_base;
    std::vector<std::pair<std::vector<int>, int>> next;
    for (const auto& [idx, sg] : terms)
      for (const auto& [p, sg2] : block) {
        auto idx2 = idx;
        idx2.insert(idx2.end(), p.begin(), p.end());
        next.push_back({idx2, sg * sg2});
      }
    terms = std::move(next);
  }
  SparseVec v;
  int natdim = n + 1;
  for (const auto& [idx, sg] : terms) {
    long long flat = 0;
    for (int j : idx) flat = flat * natdim + j;
    v.set(static_cast<int>(flat), v.get(static_cast<int>(flat)) + Rational(sg));
  }
  (void)total;

  ClosureResult cr = cyclic_closure(ambient, v, 0);
  if (cr.sub->dim() != rs.weyl_dimension(lambda))
    throw std::logic_error("irreducible_evaluation: dimension mismatch with Weyl formula");
  return cr.sub;
}

ModulePtr CurrentModule::evaluation_shift(ModulePtr m, const Rational& c) {
  if (c == 0) return m;
  auto r = std::shared_ptr<CurrentModule>(new CurrentModule(m->rs_));
  r->repr_ = Repr::Shifted;
  r->dim_ = m->dim_;
  r->weights_ = m->weights_;
  r->qdeg_ = std::nullopt;  // the twist destroys the t-grading
  r->cyclic_ = m->cyclic_;
  r->t_bound_ = m->t_bound_;
  r->base_ = std::move(m);
  r->shift_c_ = c;
  return r;
}

ModulePtr CurrentModule::tensor(ModulePtr a, ModulePtr b) {
  if (a->rs_.label() != b->rs_.label())
    throw std::invalid_argument("tensor: mismatched root systems");
  auto r = std::shared_ptr<CurrentModule>(new CurrentModule(a->rs_));
  r->repr_ = Repr::Tensor;
  r->dim_ = a->dim_ * b->dim_;
  for (int i = 0; i < a->dim_; ++i)
    for (int j = 0; j < b->dim_; ++j) r->weights_.push_back(a->weights_[i] + b->weights_[j]);
  if (a->qdeg_ && b->qdeg_) {
    std::vector<int> q;
    for (int i = 0; i < a->dim_; ++i)
      for (int j = 0; j < b->dim_; ++j) q.push_back((*a->qdeg_)[i] + (*b->qdeg_)[j]);
    r->qdeg_ = std::move(q);
  }
  if (a->cyclic_ && b->cyclic_) r->cyclic_ = *a->cyclic_ * b->dim_ + *b->cyclic_;
  r->t_bound_ = a->t_bound_ + b->t_bound_;
  r->left_ = std::move(a);
  r->right_ = std::move(b);
  return r;
}

ModulePtr CurrentModule::tensor_chain(const std::vector<ModulePtr>& ms) {
  if (ms.empty()) throw std::invalid_argument("tensor_chain: empty");
  ModulePtr r = ms[0];
  for (size_t i = 1; i < ms.size(); ++i) r = tensor(r, ms[i]);
  return r;
}

ModulePtr CurrentModule::make_explicit(const RootSystem& rs, int dim, std::vector<Weight> weights,
                                       std::optional<std::vector<int>> qdeg,
                                       std::map<std::tuple<char, int, int>, SparseMat> actions,
                                       int t_bound, bool zero_beyond,
                                       std::optional<int> cyclic) {
  auto m = std::shared_ptr<CurrentModule>(new CurrentModule(rs));
  m->repr_ = Repr::Explicit;
  m->dim_ = dim;
  m->weights_ = std::move(weights);
  m->qdeg_ = std::move(qdeg);
  m->actions_ = std::move(actions);
  m->t_bound_ = t_bound;
  m->zero_beyond_ = zero_beyond;
  m->cyclic_ = cyclic;
  return m;
}

bool CurrentModule::degree_complete() const {
  switch (repr_) {
    case Repr::Explicit:
      return zero_beyond_;
    case Repr::Shifted:
      return base_->degree_complete();
    case Repr::Tensor:
      return left_->degree_complete() && right_->degree_complete();
  }
  return false;
}

const SparseMat& CurrentModule::act(GenKind k, int node, int s) const {
  auto key = gen_key(k, node, s);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (repr_ == Repr::Explicit) {
    auto jt = actions_.find(key);
    if (jt != actions_.end()) return jt->second;
    if (s >= t_bound_ && !zero_beyond_)
      throw std::out_of_range("action not stored for t-power " + std::to_string(s));
    return cache_.emplace(key, SparseMat(dim_, dim_)).first->second;
  }
  return cache_.emplace(key, compute_act(k, node, s)).first->second;
}

SparseMat CurrentModule::compute_act(GenKind k, int node, int s) const {
  if (repr_ == Repr::Shifted) {
    SparseMat out(dim_, dim_);
    for (int j = 0; j <= s; ++j) {
      Rational coef = binomial(s, j) * rational_pow(shift_c_, s - j);
      if (coef == 0) continue;
      out.axpy(coef, base_->act(k, node, j));
    }
    return out;
  }
  // Tensor: A(s) x I + I x B(s).
  const SparseMat& A = left_->act(k, node, s);
  const SparseMat& B = right_->act(k, node, s);
  int dl = left_->dim_, dr = right_->dim_;
  SparseMat out(dim_, dim_);
  for (int i = 0; i < dl; ++i) {
    const auto& colA = A.col(i);
    for (int j = 0; j < dr; ++j) {
      SparseVec& c = out.col(i * dr + j);
      for (const auto& [r, val] : colA.entries()) c.set(r * dr + j, val);
      for (const auto& [r, val] : B.col(j).entries()) {
        c.set(i * dr + r, c.get(i * dr + r) + val);
      }
    }
  }
  return out;
}

SparseVec CurrentModule::apply(GenKind k, int node, int s, const SparseVec& v) const {
  return act(k, node, s).apply(v);
}

GradedCharacter CurrentModule::graded_character() const {
  if (!qdeg_) throw std::domain_error("graded_character: ungraded module (use the fusion filtration)");
  GradedCharacter ch;
  for (int i = 0; i < dim_; ++i) ch.add(weights_[i], (*qdeg_)[i], 1);
  return ch;
}

std::string CurrentModule::dump_json() const {
  std::ostringstream os;
  os << "{\"dim\":" << dim_ << ",\"weights\":[";
  for (int i = 0; i < dim_; ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < weights_[i].fc.size(); ++j) {
      if (j) os << ",";
      os << weights_[i].fc[j];
    }
    os << "]";
  }
  os << "],\"qdeg\":";
  if (qdeg_) {
    os << "[";
    for (int i = 0; i < dim_; ++i) {
      if (i) os << ",";
      os << (*qdeg_)[i];
    }
    os << "]";
  } else {
    os << "null";
  }
  os << ",\"actions\":[";
  bool first = true;
  for (GenKind k : {GenKind::E, GenKind::F, GenKind::H})
    for (int node = 0; node < rs_.rank(); ++node)
      for (int s = 0; s < t_bound_; ++s) {
        const SparseMat& m = act(k, node, s);
        if (m.is_zero()) continue;
        if (!first) os << ",";
        first = false;
        os << "{\"gen\":\"" << static_cast<char>(k) << "\",\"node\":" << node
           << ",\"s\":" << s << ",\"entries\":[";
        bool fe = true;
        for (int c = 0; c < m.cols(); ++c)
          for (const auto& [r, v] : m.col(c).entries()) {
            if (!fe) os << ",";
            fe = false;
            os << "[" << r << "," << c << ",\"" << v.get_str() << "\"]";
          }
        os << "]}";
      }
  os << "]}";
  return os.str();
}

ClosureResult cyclic_closure(const ModulePtr& m, const SparseVec& v, int schedule_max) {
  if (v.is_zero()) throw std::invalid_argument("cyclic_closure: zero vector");
  const RootSystem& rs = m->rs();
  int S = schedule_max >= 0 ? schedule_max : m->t_bound() + 2;

  EchelonBasis eb;
  eb.add(v);
  std::vector<int> work = {0};
  while (!work.empty()) {
    int row = work.back();
    work.pop_back();
    SparseVec u = eb.row(row);
    for (GenKind k : {GenKind::E, GenKind::F, GenKind::H})
      for (int node = 0; node < rs.rank(); ++node)
        for (int s = 0; s <= S; ++s) {
          SparseVec w = m->apply(k, node, s, u);
          if (w.is_zero()) continue;
          int idx = eb.add(std::move(w));
          if (idx >= 0) work.push_back(idx);
        }
  }
  // Certification: one extra degree must stay inside the span.
  for (int row = 0; row < eb.size(); ++row)
    for (GenKind k : {GenKind::E, GenKind::F, GenKind::H})
      for (int node = 0; node < rs.rank(); ++node) {
        SparseVec w = m->apply(k, node, S + 1, eb.row(row));
        if (!eb.contains(w)) throw NonClosureError(eb.size());
      }

  int d = eb.size();
  std::vector<Weight> weights;
  std::optional<std::vector<int>> qdeg;
  if (m->graded()) qdeg = std::vector<int>();
  int minq = 0, maxq = 0;
  for (int i = 0; i < d; ++i) {
    const SparseVec& r = eb.row(i);
    Weight w = m->weight_of(r.leading_index());
    for (const auto& [j, val] : r.entries())
      if (!(m->weight_of(j) == w))
        throw std::logic_error("cyclic_closure: non-weight-homogeneous basis row");
    weights.push_back(w);
    if (qdeg) {
      int q = m->qdeg_of(r.leading_index());
      for (const auto& [j, val] : r.entries())
        if (m->qdeg_of(j) != q)
          throw std::logic_error("cyclic_closure: non-degree-homogeneous basis row");
      qdeg->push_back(q);
      if (i == 0) minq = maxq = q;
      minq = std::min(minq, q);
      maxq = std::max(maxq, q);
    }
  }

  int store_bound = qdeg ? (maxq - minq + 1) : (S + 2);
  bool zero_beyond = qdeg.has_value();
  std::map<std::tuple<char, int, int>, SparseMat> actions;
  for (GenKind k : {GenKind::E, GenKind::F, GenKind::H})
    for (int node = 0; node < rs.rank(); ++node)
      for (int s = 0; s < store_bound; ++s) {
        SparseMat mat(d, d);
        bool nonzero = false;
        for (int i = 0; i < d; ++i) {
          SparseVec w = m->apply(k, node, s, eb.row(i));
          auto coords = eb.coordinates(std::move(w));
          if (!coords) throw std::logic_error("cyclic_closure: induced action leaves span");
          for (const auto& [r, c] : *coords) {
            mat.set(r, i, c);
            nonzero = true;
          }
        }
        if (nonzero) actions[std::make_tuple(static_cast<char>(k), node, s)] = std::move(mat);
      }

  ModulePtr sub = CurrentModule::make_explicit(rs, d, std::move(weights), std::move(qdeg),
                                               std::move(actions), store_bound, zero_beyond, 0);
  return {sub, d == m->dim()};
}

bool bracket_audit(const ModulePtr& m, unsigned seed, int checks) {
  const RootSystem& rs = m->rs();
  std::mt19937_64 rng(seed);
  int n = rs.rank();
  const auto& C = rs.cartan();
  // Degree budget keeping every required action available.
  int smax = m->degree_complete() ? m->t_bound() + 1 : std::max(0, (m->t_bound() - 1) / 2);

  auto rand_int = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };

  for (int trial = 0; trial < checks; ++trial) {
    int i = rand_int(0, n - 1), j = rand_int(0, n - 1);
    int a = rand_int(0, smax), b = rand_int(0, smax);
    SparseVec v = SparseVec::unit(rand_int(0, m->dim() - 1));
    int which = rand_int(0, 4);
    GenKind x, y;
    SparseVec expect;
    switch (which) {
      case 0:  // [h_i t^a, e_j t^b] = C[i][j] e_j t^{a+b}
        x = GenKind::H; y = GenKind::E;
        expect = m->apply(GenKind::E, j, a + b, v);
        expect.scale(Rational(C[i][j]));
        break;
      case 1:  // [h_i t^a, f_j t^b] = -C[i][j] f_j t^{a+b}
        x = GenKind::H; y = GenKind::F;
        expect = m->apply(GenKind::F, j, a + b, v);
        expect.scale(Rational(-C[i][j]));
        break;
      case 2:  // [e_i t^a, f_j t^b] = delta_ij h_i t^{a+b}
        x = GenKind::E; y = GenKind::F;
        if (i == j) expect = m->apply(GenKind::H, i, a + b, v);
        break;
      case 3:  // [h_i t^a, h_j t^b] = 0
        x = GenKind::H; y = GenKind::H;
        break;
      default:  // [e_i t^a, e_j t^b] = 0 for non-adjacent i, j
        x = GenKind::E; y = GenKind::E;
        if (i != j && C[i][j] != 0) continue;
        if (i == j) continue;  // [e_i, e_i] = 0 trivially but keep the check
        break;
    }
    SparseVec lhs = m->apply(x, i, a, m->apply(y, j, b, v));
    lhs.axpy(Rational(-1), m->apply(y, j, b, m->apply(x, i, a, v)));
    lhs.axpy(Rational(-1), expect);
    if (!lhs.is_zero()) return false;
  }
  return true;
}

}  // namespace demfuse
