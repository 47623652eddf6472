#include "demfuse/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace demfuse {

namespace {

std::vector<std::vector<int>> identity_matrix(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

std::vector<int> mat_vec(const std::vector<std::vector<int>>& m, const std::vector<int>& v) {
  int n = static_cast<int>(m.size());
  std::vector<int> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
  return r;
}

int root_sign(const std::vector<int>& rc) {
  for (int c : rc) {
    if (c > 0) return 1;
    if (c < 0) return -1;
  }
  return 0;
}

}  // namespace

WeylElt WeylElt::identity(const RootSystem& rs) {
  WeylElt w(rs);
  w.mw_ = identity_matrix(rs.rank());
  w.mc_ = identity_matrix(rs.rank());
  return w;
}

WeylElt WeylElt::simple_reflection(const RootSystem& rs, int i) {
  int n = rs.rank();
  WeylElt w = identity(rs);
  // (s_i x)_j = x_j - x_i * (alpha_i)_j on weights, dually on coweights.
  const auto& C = rs.cartan();
  for (int j = 0; j < n; ++j) {
    w.mw_[j][i] -= C[j][i];  // alpha_i has fundamental coords C[j][i]
    w.mc_[j][i] -= C[i][j];  // alpha_i^vee has fundamental-coweight coords C[i][j]
  }
  return w;
}

WeylElt WeylElt::theta_reflection(const RootSystem& rs) {
  int n = rs.rank();
  WeylElt w = identity(rs);
  Weight th = rs.theta();
  const auto& tcc = rs.theta_coroot_coords();
  const auto& trc = rs.theta_root_coords();
  // theta^vee in fundamental-coweight coords.
  std::vector<int> tvfc(n, 0);
  const auto& C = rs.cartan();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) tvfc[j] += tcc[i] * C[i][j];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      w.mw_[r][c] -= th.fc[r] * tcc[c];
      w.mc_[r][c] -= tvfc[r] * trc[c];
    }
  return w;
}

WeylElt WeylElt::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = identity(rs);
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

WeylElt WeylElt::longest(const RootSystem& rs) {
  // Dominantize -rho greedily.
  Weight x = rs.rho() * -1;
  std::vector<int> word;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (x.fc[i] < 0) {
        x = simple_reflection(rs, i).apply(x);
        word.push_back(i);
        progress = true;
        break;
      }
    }
  }
  // w_0(-rho) = rho, and the collected word satisfies s_{i_p}...s_{i_1} = w_0^{-1} = w_0.
  std::reverse(word.begin(), word.end());
  return from_word(rs, word);
}

Weight WeylElt::apply(const Weight& w) const { return Weight(mat_vec(mw_, w.fc)); }
Coweight WeylElt::apply(const Coweight& mu) const { return Coweight(mat_vec(mc_, mu.fc)); }

std::vector<int> WeylElt::apply_root(const std::vector<int>& rc) const {
  const auto& rs = *rs_;
  int n = rs.rank();
  // Fundamental coords of the root, act, convert back via C^{-1}.
  std::vector<int> fcv(n, 0);
  const auto& C = rs.cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fcv[i] += C[i][j] * rc[j];
  std::vector<int> im = mat_vec(mw_, fcv);
  std::vector<int> out(n);
  const auto& Ci = rs.cartan_inverse();
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += Ci[i][j] * im[j];
    if (s.get_den() != 1) throw std::logic_error("root image not in root lattice");
    out[i] = static_cast<int>(s.get_num().get_si());
  }
  return out;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  WeylElt r(*rs_);
  r.mw_ = mat_mul(mw_, o.mw_);
  r.mc_ = mat_mul(mc_, o.mc_);
  return r;
}

WeylElt WeylElt::inverse() const {
  // Cheap and safe at these group sizes: rebuild from the reversed word.
  std::vector<int> word = reduced_word();
  std::reverse(word.begin(), word.end());
  return from_word(*rs_, word);
}

bool WeylElt::is_identity() const { return mw_ == identity_matrix(rs_->rank()); }

int WeylElt::length() const {
  int cnt = 0;
  for (const auto& a : rs_->positive_roots())
    if (root_sign(apply_root(a)) < 0) ++cnt;
  return cnt;
}

std::vector<int> WeylElt::reduced_word() const {
  std::vector<int> word;
  WeylElt w = *this;
  // Left-descent peel: l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0, equivalently
  // peel right descents of w^{-1}; work on the right of w directly.
  // Right descent i of w: w(alpha_i) < 0, and w = w' s_i with l(w') = l(w)-1.
  std::vector<int> tail;
  while (!w.is_identity()) {
    int found = -1;
    for (int i = 0; i < rs_->rank(); ++i) {
      std::vector<int> e(rs_->rank(), 0);
      e[i] = 1;
      if (root_sign(w.apply_root(e)) < 0) {
        found = i;
        break;
      }
    }
    if (found < 0) throw std::logic_error("non-identity Weyl element without descent");
    w = w * simple_reflection(*rs_, found);
    tail.push_back(found);
  }
  // w_orig = s_{tail[p-1]} ... s_{tail[0]} read right-to-left.
  word.assign(tail.rbegin(), tail.rend());
  return word;
}

ExtAffineWeylElt ExtAffineWeylElt::identity(const RootSystem& rs) {
  return {Coweight::zero(rs.rank()), WeylElt::identity(rs)};
}

ExtAffineWeylElt ExtAffineWeylElt::translation(const RootSystem& rs, const Coweight& mu) {
  return {mu, WeylElt::identity(rs)};
}

ExtAffineWeylElt ExtAffineWeylElt::finite(const RootSystem& rs, const WeylElt& w) {
  return {Coweight::zero(rs.rank()), w};
}

ExtAffineWeylElt ExtAffineWeylElt::affine_simple(const RootSystem& rs, int i) {
  if (i == 0) {
    // s_0 = tau_{theta^vee} s_theta.
    const auto& tcc = rs.theta_coroot_coords();
    const auto& C = rs.cartan();
    std::vector<int> fcv(rs.rank(), 0);
    for (int j = 0; j < rs.rank(); ++j)
      for (int k = 0; k < rs.rank(); ++k) fcv[j] += tcc[k] * C[k][j];
    return {Coweight(fcv), WeylElt::theta_reflection(rs)};
  }
  return finite(rs, WeylElt::simple_reflection(rs, i - 1));
}

ExtAffineWeylElt ExtAffineWeylElt::operator*(const ExtAffineWeylElt& o) const {
  return {tau + v.apply(o.tau), v * o.v};
}

ExtAffineWeylElt ExtAffineWeylElt::inverse() const {
  WeylElt vi = v.inverse();
  return {vi.apply(tau) * -1, vi};
}

long long affine_length(const ExtAffineWeylElt& w, const RootSystem& rs) {
  // Iwahori-Matsumoto count: l(tau_mu v) = sum over alpha > 0 of
  // |<mu, alpha> - [v^{-1} alpha < 0]|.
  WeylElt vi = w.v.inverse();
  long long len = 0;
  for (const auto& a : rs.positive_roots()) {
    long long p = rs.pair_root_coweight(a, w.tau);
    if (root_sign(vi.apply_root(a)) < 0) p -= 1;
    len += p < 0 ? -p : p;
  }
  return len;
}

OmegaElt omega_of(const ExtAffineWeylElt& w, const RootSystem& rs) {
  if (affine_length(w, rs) != 0)
    throw std::invalid_argument("omega_of: element has nonzero length");
  int n = rs.rank();
  OmegaElt om{w, std::vector<int>(n + 1, -1)};
  // Affine simple roots as (finite root in root coords, delta coefficient):
  // alpha_i = (alpha_i, 0), alpha_0 = (-theta, 1).  tau_mu v sends (beta, m)
  // to (v beta, m - <v beta, mu>).
  auto image = [&](const std::vector<int>& beta, int m) {
    std::vector<int> vb = w.v.apply_root(beta);
    long long m2 = m - rs.pair_root_coweight(vb, w.tau);
    return std::make_pair(vb, m2);
  };
  std::vector<std::pair<std::vector<int>, long long>> targets;
  {
    std::vector<int> mth(n);
    for (int j = 0; j < n; ++j) mth[j] = -rs.theta_root_coords()[j];
    targets.emplace_back(mth, 1);
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      targets.emplace_back(e, 0);
    }
  }
  for (int i = 0; i <= n; ++i) {
    std::pair<std::vector<int>, long long> im =
        (i == 0) ? image(targets[0].first, 1)
                 : image(targets[i].first, 0);
    for (int j = 0; j <= n; ++j) {
      if (im.first == targets[j].first && im.second == targets[j].second) {
        om.node_perm[i] = j;
        break;
      }
    }
    if (om.node_perm[i] < 0)
      throw std::logic_error("length-zero element does not permute affine simple roots");
  }
  return om;
}

AffineReducedWord affine_reduced_word(const ExtAffineWeylElt& w, const RootSystem& rs) {
  ExtAffineWeylElt cur = w;
  long long len = affine_length(cur, rs);
  std::vector<int> tail;  // peeled right descents, in peel order
  while (len > 0) {
    int found = -1;
    for (int i = 0; i <= rs.rank(); ++i) {
      ExtAffineWeylElt cand = cur * ExtAffineWeylElt::affine_simple(rs, i);
      long long l2 = affine_length(cand, rs);
      if (l2 == len - 1) {
        cur = cand;
        len = l2;
        found = i;
        break;
      }
    }
    if (found < 0) throw std::logic_error("no descent found for positive-length element");
    tail.push_back(found);
  }
  OmegaElt om = omega_of(cur, rs);
  // w = omega * s_{tail[p-1]} ... s_{tail[0]}; conjugate the reflections
  // through omega so the word sits on the left: s_{pi(j)} omega = omega s_j.
  AffineReducedWord out;
  out.omega = om;
  for (auto it = tail.rbegin(); it != tail.rend(); ++it)
    out.word.push_back(om.node_perm[*it]);
  return out;
}

long long affine_pairing(const AffineWeight& xi, int i, const RootSystem& rs) {
  if (i == 0) return xi.level - rs.pair_weight_theta_coroot(xi.finite);
  return xi.finite.fc[i - 1];
}

AffineWeight affine_reflect(const AffineWeight& xi, int i, const RootSystem& rs) {
  long long m = affine_pairing(xi, i, rs);
  AffineWeight r = xi;
  if (i == 0) {
    // Subtract m * alpha_0 with alpha_0 = delta - theta.
    r.finite = r.finite + rs.theta() * static_cast<int>(m);
    r.delta_degree += static_cast<int>(m);
  } else {
    r.finite = r.finite - rs.simple_root(i - 1) * static_cast<int>(m);
  }
  return r;
}

DemazureParams demazure_params(int level, const Weight& mu, const RootSystem& rs) {
  if (!mu.dominant()) throw std::invalid_argument("demazure_params: mu not dominant");
  if (level == 0 && !mu.is_zero())
    throw std::invalid_argument("demazure_params: level 0 requires mu = 0");
  if (level < 0) throw std::invalid_argument("demazure_params: negative level");

  AffineWeight xi{level, WeylElt::longest(rs).apply(mu), 0};
  AffineWeight cur = xi;
  std::vector<int> word;  // peel order: xi = s_{word[0]} s_{word[1]} ... Lambda
  while (true) {
    int found = -1;
    for (int i = 0; i <= rs.rank(); ++i) {
      if (affine_pairing(cur, i, rs) < 0) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    cur = affine_reflect(cur, found, rs);
    word.push_back(found);
  }
  DemazureParams out{ExtAffineWeylElt::identity(rs), cur, word};
  for (int i : word) out.w = out.w * ExtAffineWeylElt::affine_simple(rs, i);
  if (affine_length(out.w, rs) != static_cast<long long>(word.size()))
    throw std::logic_error("demazure_params: dominantization word not reduced");
  return out;
}

}  // namespace demfuse
