#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "demfuse/cluster.hpp"

using namespace demfuse;

TEST_CASE("neighbor support identity holds across types") {
  for (std::string lab : {"A1", "A2", "A3", "D4"}) {
    RootSystem rs = RootSystem::parse(lab);
    for (int i = 0; i < rs.rank(); ++i) CHECK(neighbor_support_identity(rs, i));
  }
}

TEST_CASE("sl2 system identity at level 1: 4 = 3 + 1") {
  RootSystem a1('A', 1);
  QSystemReport rep = qsystem_check(a1, 0, 1);
  CHECK(rep.pass);
  CHECK(rep.dimA == 3);  // V(2 omega) at the top of KR_2 * KR_0
  CHECK(rep.dimB == 4);  // D(1, 2 omega)
  CHECK(rep.dimC == 1);  // trivial neighbor product
  CHECK(rep.orientation == 1);
  CHECK(rep.B.normalized() == (rep.A.normalized() + rep.C.normalized().shifted_q(rep.qshift)));
}

TEST_CASE("sl3 system identity at level 1: 9 = 6 + 3") {
  RootSystem a2('A', 2);
  QSystemReport rep = qsystem_check(a2, 0, 1);
  CHECK(rep.pass);
  CHECK(rep.dimA == 6);
  CHECK(rep.dimB == 9);
  CHECK(rep.dimC == 3);
}

TEST_CASE("system identity across nodes and levels") {
  for (std::string lab : {"A1", "A2", "A3"}) {
    RootSystem rs = RootSystem::parse(lab);
    for (int i = 0; i < rs.rank(); ++i)
      for (int level : {1, 2}) {
        QSystemReport rep = qsystem_check(rs, i, level);
        CHECK(rep.pass);
        CHECK(rep.dimB == rep.dimA + rep.dimC);
      }
  }
}

TEST_CASE("fusion-engine route agrees with the character route") {
  RootSystem a1('A', 1);
  for (int level : {1, 2}) {
    QSystemReport rep = qsystem_check(a1, 0, level, true);
    CHECK(rep.pass);
    CHECK(rep.fusion_engine_used);
    CHECK(rep.fusion_agrees);
  }
  RootSystem a2('A', 2);
  QSystemReport rep = qsystem_check(a2, 0, 1, true);
  CHECK(rep.pass);
  CHECK(rep.fusion_agrees);
  RootSystem d4('D', 4);
  CHECK_THROWS_AS(qsystem_check(d4, 1, 1, true), std::invalid_argument);
}

TEST_CASE("KClass characters and formal classes") {
  RootSystem a1('A', 1);
  KClass k{0, 2};
  CHECK_FALSE(k.formal());
  CHECK(k.character(a1).dimension() == 3);
  KClass f{0, -1};
  CHECK(f.formal());
  CHECK_THROWS_AS(f.character(a1), std::invalid_argument);
}

TEST_CASE("cluster seed construction and serialization") {
  RootSystem a2('A', 2);
  ClusterSeed s = qsystem_seed(a2);
  CHECK(s.size() == 4);
  // Skew-symmetry of the exchange matrix.
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) CHECK(s.B[i][j] == -s.B[j][i]);
  CHECK(s.to_json() == s.to_json());
  CHECK_THROWS_AS(initial_seed({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("mutation is an involution") {
  RootSystem a2('A', 2);
  ClusterSeed s = qsystem_seed(a2);
  for (int k = 0; k < s.size(); ++k) {
    ClusterSeed back = mutate(mutate(s, k), k);
    CHECK(seeds_equal(back, s));
  }
}

TEST_CASE("mutation is an involution on random skew-symmetric seeds") {
  std::mt19937_64 rng(424242ull);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);  // 2..5 nodes
    std::vector<std::vector<int>> B(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int v = static_cast<int>(rng() % 5) - 2;  // -2..2
        B[i][j] = v;
        B[j][i] = -v;
      }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    ClusterSeed s = initial_seed(names, B);
    int k = static_cast<int>(rng() % n);
    ClusterSeed once = mutate(s, k);
    ClusterSeed back = mutate(once, k);
    CHECK(seeds_equal(back, s));
    if (!seeds_equal(once, s)) {
      // A genuine mutation changes the cluster variable at k.
      CHECK_FALSE(once.vars[k].same_value(s.vars[k]));
    }
  }
}

TEST_CASE("Laurent fraction arithmetic") {
  LaurentPoly x = LaurentPoly::variable(2, 0);
  LaurentPoly y = LaurentPoly::variable(2, 1);
  CHECK((x + y) * (x + y) == x * x + x * y + x * y + y * y);
  FracValue a{x, y};
  FracValue b{x * x, x * y};
  CHECK(a.same_value(b));
  CHECK_FALSE(a.same_value(FracValue::variable(2, 0)));
}

TEST_CASE("exchange relation matches the certified character identity") {
  RootSystem a1('A', 1);
  for (int level : {1, 2, 3}) {
    ExchangeMatch m = qsystem_exchange_match(a1, 0, level);
    CHECK(m.character_pass);
    CHECK(m.monomials_ok);
    CHECK(m.sign_ok);
    CHECK(m.match);
  }
  RootSystem a2('A', 2);
  for (int node : {0, 1}) {
    ExchangeMatch m = qsystem_exchange_match(a2, node, 2);
    CHECK(m.match);
  }
}

TEST_CASE("negative control: without the sign twist the match fails") {
  RootSystem a1('A', 1);
  ExchangeMatch m = qsystem_exchange_match(a1, 0, 2, true);
  CHECK(m.character_pass);
  CHECK_FALSE(m.match);
}
