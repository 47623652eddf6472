#include "demfuse/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace demfuse {

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < fc.size(); ++i) r.fc[i] += o.fc[i];
  return r;
}
Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (size_t i = 0; i < fc.size(); ++i) r.fc[i] -= o.fc[i];
  return r;
}
Weight Weight::operator*(int k) const {
  Weight r = *this;
  for (auto& c : r.fc) c *= k;
  return r;
}

Coweight Coweight::operator+(const Coweight& o) const {
  Coweight r = *this;
  for (size_t i = 0; i < fc.size(); ++i) r.fc[i] += o.fc[i];
  return r;
}
Coweight Coweight::operator-(const Coweight& o) const {
  Coweight r = *this;
  for (size_t i = 0; i < fc.size(); ++i) r.fc[i] -= o.fc[i];
  return r;
}
Coweight Coweight::operator*(int k) const {
  Coweight r = *this;
  for (auto& c : r.fc) c *= k;
  return r;
}

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  type_ = static_cast<char>(std::toupper(static_cast<unsigned char>(type_)));
  auto bad = [&] {
    throw std::invalid_argument("invalid Dynkin datum: " + std::string(1, type) +
                                std::to_string(rank));
  };
  switch (type_) {
    case 'A':
      if (rank_ < 1) bad();
      break;
    case 'B':
    case 'C':
      if (rank_ < 2) bad();
      break;
    case 'D':
      if (rank_ < 3) bad();
      break;
    case 'E':
      if (rank_ < 6 || rank_ > 8) bad();
      break;
    case 'F':
      if (rank_ != 4) bad();
      break;
    case 'G':
      if (rank_ != 2) bad();
      break;
    default:
      bad();
  }
  build_cartan();
  build_positive_roots();
  build_theta();
}

RootSystem RootSystem::parse(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("invalid Dynkin label: " + label);
  char t = label[0];
  for (size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw std::invalid_argument("invalid Dynkin label: " + label);
  return RootSystem(t, std::stoi(label.substr(1)));
}

void RootSystem::build_cartan() {
  int n = rank_;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };

  cnorm_.assign(n, 1);
  simply_laced_ = true;
  switch (type_) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      // Chain 0..n-2 with node n-1 attached to n-3.
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E': {
      // Bourbaki: node 1 attached to node 3, node 2 attached to node 4,
      // chain 3-4-5-...-n. Zero-based here.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    }
    case 'B':
      // alpha_n short. cartan_[i][j] = <alpha_j, alpha_i^vee>.
      simply_laced_ = false;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) cnorm_[i] = 1;
      cnorm_[n - 1] = 2;
      break;
    case 'C':
      // alpha_n long, others short.
      simply_laced_ = false;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      for (int i = 0; i + 1 < n; ++i) cnorm_[i] = 2;
      cnorm_[n - 1] = 1;
      break;
    case 'F':
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      simply_laced_ = false;
      link(0, 1);
      link(1, 2);
      link(2, 3);
      cartan_[2][1] = -2;
      cnorm_ = {1, 1, 2, 2};
      break;
    case 'G':
      // alpha_1 short, alpha_2 long.
      simply_laced_ = false;
      cartan_[0][1] = -3;
      cartan_[1][0] = -1;
      cnorm_ = {3, 1};
      break;
  }

  // Symmetrizability check with d_i proportional to 1/c_i.
  int l = 1;
  for (int c : cnorm_) l = std::lcm(l, c);
  dnorm_.assign(n, 0);
  for (int i = 0; i < n; ++i) dnorm_[i] = l / cnorm_[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dnorm_[i] * cartan_[i][j] != dnorm_[j] * cartan_[j][i])
        throw std::logic_error("Cartan matrix not symmetrizable as built");

  // Exact inverse of the Cartan matrix by Gauss-Jordan elimination.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = cartan_[i][j];
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(aug[col], aug[piv]);
    Rational p = aug[col][col];
    for (auto& x : aug[col]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  cartan_inv_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_inv_[i][j] = aug[i][n + j];
}

void RootSystem::build_positive_roots() {
  int n = rank_;
  // Close the set of simple roots under simple reflections, keeping the
  // positive ones.  Reflection in root coordinates goes through the pairing
  // <gamma, alpha_i^vee> = sum_j C[i][j] r_j.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto r = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      long long p = 0;
      for (int j = 0; j < n; ++j) p += static_cast<long long>(cartan_[i][j]) * r[j];
      auto r2 = r;
      r2[i] -= static_cast<int>(p);
      bool pos = true, neg = true;
      for (int c : r2) {
        if (c > 0) neg = false;
        if (c < 0) pos = false;
      }
      if (pos && !neg && seen.insert(r2).second) queue.push_back(r2);
    }
  }
  pos_roots_.assign(seen.begin(), seen.end());
  // Sort by height then lexicographically, simple roots first.
  std::sort(pos_roots_.begin(), pos_roots_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a < b;
            });
}

void RootSystem::build_theta() {
  // Highest root = unique positive root of maximal height.
  theta_rc_ = pos_roots_.back();
  if (!theta().dominant()) throw std::logic_error("highest root is not dominant");
  // theta^vee = sum r_i (d_i / d_theta) alpha_i^vee with theta long (d = max).
  int dmax = *std::max_element(dnorm_.begin(), dnorm_.end());
  theta_cc_.assign(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    long long num = static_cast<long long>(theta_rc_[i]) * dnorm_[i];
    if (num % dmax != 0) throw std::logic_error("non-integral theta coroot");
    theta_cc_[i] = static_cast<int>(num / dmax);
  }
}

Weight RootSystem::fundamental_weight(int i) const {
  std::vector<int> c(rank_, 0);
  c[i] = 1;
  return Weight(std::move(c));
}

Weight RootSystem::simple_root(int i) const {
  // (alpha_i)_j = <alpha_i, alpha_j^vee> = cartan_[j][i].
  std::vector<int> c(rank_);
  for (int j = 0; j < rank_; ++j) c[j] = cartan_[j][i];
  return Weight(std::move(c));
}

Coweight RootSystem::simple_coroot(int i) const {
  // (alpha_i^vee)_j = <alpha_j, alpha_i^vee> = cartan_[i][j].
  std::vector<int> c(rank_);
  for (int j = 0; j < rank_; ++j) c[j] = cartan_[i][j];
  return Coweight(std::move(c));
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(rank_, 1)); }
Coweight RootSystem::rho_coweight() const { return Coweight(std::vector<int>(rank_, 1)); }

Weight RootSystem::theta() const {
  std::vector<int> c(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(cartan_[i][j]) * theta_rc_[j];
    c[i] = static_cast<int>(s);
  }
  return Weight(std::move(c));
}

long long RootSystem::pair_weight_coroot(const Weight& w,
                                         const std::vector<int>& coroot_coords) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<long long>(w.fc[i]) * coroot_coords[i];
  return s;
}

long long RootSystem::pair_root_coweight(const std::vector<int>& root_coords,
                                         const Coweight& mu) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<long long>(root_coords[i]) * mu.fc[i];
  return s;
}

long long RootSystem::pair_weight_theta_coroot(const Weight& w) const {
  return pair_weight_coroot(w, theta_cc_);
}

Weight RootSystem::coweight_embed(const Coweight& mu) const {
  // iota(omega_i^vee) = c_i omega_i: both sides pair identically with the
  // coroots once alpha_i^vee maps to c_i alpha_i.
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = cnorm_[i] * mu.fc[i];
  return Weight(std::move(c));
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& w) const {
  std::vector<Rational> r(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) r[i] += cartan_inv_[i][j] * w.fc[j];
  return r;
}

std::vector<Rational> RootSystem::to_coroot_coords(const Coweight& mu) const {
  // fc = C^T r, so r = C^{-T} fc.
  std::vector<Rational> r(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) r[i] += cartan_inv_[j][i] * mu.fc[j];
  return r;
}

bool RootSystem::dominance_leq(const Weight& lo, const Weight& hi) const {
  auto diff = hi - lo;
  for (const auto& c : to_root_coords(diff)) {
    if (c.get_den() != 1) return false;
    if (c < 0) return false;
  }
  return true;
}

bool RootSystem::dominance_leq(const Coweight& lo, const Coweight& hi) const {
  auto diff = hi - lo;
  for (const auto& c : to_coroot_coords(diff)) {
    if (c.get_den() != 1) return false;
    if (c < 0) return false;
  }
  return true;
}

long long RootSystem::form_weight_root(const Weight& w,
                                       const std::vector<int>& root_coords) const {
  // (w, sum r_j alpha_j) = sum_j d_j r_j w_j since (omega_i, alpha_j) = d_j delta_ij.
  long long s = 0;
  for (int j = 0; j < rank_; ++j)
    s += static_cast<long long>(dnorm_[j]) * root_coords[j] * w.fc[j];
  return s;
}

Rational RootSystem::form_weight_weight(const Weight& a, const Weight& b) const {
  auto rb = to_root_coords(b);
  Rational s = 0;
  for (int j = 0; j < rank_; ++j) s += Rational(dnorm_[j]) * rb[j] * a.fc[j];
  return s;
}

long long RootSystem::weyl_dimension(const Weight& lambda) const {
  if (!lambda.dominant()) throw std::invalid_argument("weyl_dimension: non-dominant weight");
  Rational dim = 1;
  Weight lr = lambda + rho();
  Weight r = rho();
  for (const auto& a : pos_roots_) {
    // mpq_class(num, den) is not canonicalized on construction.
    Rational factor(static_cast<long>(form_weight_root(lr, a)),
                    static_cast<long>(form_weight_root(r, a)));
    factor.canonicalize();
    dim *= factor;
  }
  if (dim.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return static_cast<long long>(dim.get_num().get_si());
}

}  // namespace demfuse
