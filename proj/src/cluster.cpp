#include "demfuse/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace demfuse {

LaurentPoly LaurentPoly::one(int nvars) {
  LaurentPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), 1);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  LaurentPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first == std::vector<int>(nvars_, 0);
}

void LaurentPoly::add_term(const std::vector<int>& e, long long c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long long a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << mono;
    }
  }
  return out.str();
}

std::string FracValue::str(const std::vector<std::string>& names) const {
  if (den.is_one()) return num.str(names);
  return "(" + num.str(names) + ")/(" + den.str(names) + ")";
}

namespace {

std::string json_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

FracValue frac_pow(const FracValue& v, int e) {
  FracValue r{LaurentPoly::one(v.num.nvars()), LaurentPoly::one(v.num.nvars())};
  for (int i = 0; i < e; ++i) r = r * v;
  return r;
}

}  // namespace

std::string ClusterSeed::to_json() const {
  std::ostringstream out;
  out << "{\"nodes\":[";
  for (int i = 0; i < size(); ++i) out << (i ? "," : "") << "\"" << json_escape(nodes[i]) << "\"";
  out << "],\"B\":[";
  for (int i = 0; i < size(); ++i) {
    out << (i ? "," : "") << "[";
    for (int j = 0; j < size(); ++j) out << (j ? "," : "") << B[i][j];
    out << "]";
  }
  out << "],\"vars\":{";
  for (int i = 0; i < size(); ++i)
    out << (i ? "," : "") << "\"" << json_escape(nodes[i]) << "\":\""
        << json_escape(vars[i].str(nodes)) << "\"";
  out << "}}";
  return out.str();
}

ClusterSeed initial_seed(std::vector<std::string> nodes, std::vector<std::vector<int>> B) {
  int n = static_cast<int>(nodes.size());
  if (static_cast<int>(B.size()) != n)
    throw std::invalid_argument("initial_seed: B size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(B[i].size()) != n)
      throw std::invalid_argument("initial_seed: B not square");
    for (int j = 0; j < n; ++j)
      if (B[i][j] != -B[j][i]) throw std::invalid_argument("initial_seed: B not skew-symmetric");
  }
  ClusterSeed s;
  s.nodes = std::move(nodes);
  s.B = std::move(B);
  for (int i = 0; i < n; ++i) s.vars.push_back(FracValue::variable(n, i));
  return s;
}

ClusterSeed mutate(const ClusterSeed& s, int k) {
  int n = s.size();
  if (k < 0 || k >= n) throw std::invalid_argument("mutate: bad node");
  ClusterSeed r = s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.B[i][j] = -s.B[i][j];
      } else {
        r.B[i][j] =
            s.B[i][j] + (std::abs(s.B[i][k]) * s.B[k][j] + s.B[i][k] * std::abs(s.B[k][j])) / 2;
      }
    }
  FracValue mp{LaurentPoly::one(n), LaurentPoly::one(n)};
  FracValue mm = mp;
  for (int u = 0; u < n; ++u) {
    if (s.B[u][k] > 0) mp = mp * frac_pow(s.vars[u], s.B[u][k]);
    if (s.B[u][k] < 0) mm = mm * frac_pow(s.vars[u], -s.B[u][k]);
  }
  FracValue sum = mp + mm;
  r.vars[k] = FracValue{sum.num * s.vars[k].den, sum.den * s.vars[k].num};
  return r;
}

bool seeds_equal(const ClusterSeed& a, const ClusterSeed& b) {
  if (a.nodes != b.nodes || a.B != b.B) return false;
  for (int i = 0; i < a.size(); ++i)
    if (!a.vars[i].same_value(b.vars[i])) return false;
  return true;
}

ClusterSeed qsystem_seed(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<std::string> nodes(2 * n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = "Q" + std::to_string(i + 1) + "[l-1]";
    nodes[n + i] = "Q" + std::to_string(i + 1) + "[l]";
  }
  std::vector<std::vector<int>> B(2 * n, std::vector<int>(2 * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      B[i][n + j] = -rs.cartan()[i][j];
      B[n + j][i] = rs.cartan()[i][j];
    }
  return initial_seed(std::move(nodes), std::move(B));
}

ExchangeMatch qsystem_exchange_match(const RootSystem& rs, int node, int level,
                                     bool disable_sign_twist) {
  int n = rs.rank();
  ExchangeMatch em;

  QSystemReport rep = qsystem_check(rs, node, level);
  em.character_pass = rep.pass && rep.orientation == 1;
  em.qshift = rep.qshift;

  ClusterSeed seed = qsystem_seed(rs);
  int k = node;  // node (i, 0), the level l-1 slot
  std::vector<int> eplus(2 * n, 0), eminus(2 * n, 0);
  for (int u = 0; u < 2 * n; ++u) {
    if (seed.B[u][k] > 0) eplus[u] = seed.B[u][k];
    if (seed.B[u][k] < 0) eminus[u] = -seed.B[u][k];
  }
  std::vector<int> want_plus(2 * n, 0), want_minus(2 * n, 0);
  want_plus[n + node] = 2;
  for (int j = 0; j < n; ++j)
    if (j != node && rs.cartan()[node][j] != 0) want_minus[n + j] = -rs.cartan()[node][j];
  em.monomials_ok = eplus == want_plus && eminus == want_minus;
  if (em.monomials_ok) {
    // The mutated variable must satisfy x' x_k = M+ + M- on the nose.
    ClusterSeed mut = mutate(seed, k);
    FracValue lhs = mut.vars[k] * seed.vars[k];
    FracValue rhs{LaurentPoly::one(2 * n), LaurentPoly::one(2 * n)};
    LaurentPoly pm(2 * n), mn(2 * n);
    pm.add_term(want_plus, 1);
    mn.add_term(want_minus, 1);
    rhs.num = pm + mn;
    em.monomials_ok = lhs.same_value(rhs);
  }

  // Diagonal twist eps_j = i^{x_j}: matching the exchange relation against
  // the certified identity needs prod_{j~i} eps_j = -eps_i^2 at every node,
  // i.e. sum_{j~i} x_j = 2 + 2 x_i (mod 4).
  auto satisfies = [&](const std::vector<int>& x) {
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i && rs.cartan()[i][j] != 0) s += x[j];
      if ((s - 2 - 2 * x[i]) % 4 != 0) return false;
    }
    return true;
  };
  if (disable_sign_twist) {
    std::vector<int> x(n, 0);
    em.sign_ok = satisfies(x);
    if (em.sign_ok) em.twist = x;
  } else {
    std::vector<int> x(n, 0);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < n; ++i) {
        x[i] = static_cast<int>(c % 4);
        c /= 4;
      }
      if (satisfies(x)) {
        em.sign_ok = true;
        em.twist = x;
        break;
      }
    }
  }
  em.match = em.character_pass && em.monomials_ok && em.sign_ok;
  return em;
}

}  // namespace demfuse
