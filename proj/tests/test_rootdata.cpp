#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "demfuse/root_system.hpp"
#include "demfuse/weyl.hpp"

using namespace demfuse;

TEST_CASE("Cartan matrices") {
  RootSystem a1('A', 1);
  CHECK(a1.cartan() == std::vector<std::vector<int>>{{2}});

  RootSystem a2('A', 2);
  CHECK(a2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  RootSystem d4('D', 4);
  int minus = 0;
  for (int i = 0; i < 4; ++i) {
    CHECK(d4.cartan()[i][i] == 2);
    for (int j = 0; j < 4; ++j)
      if (i != j && d4.cartan()[i][j] != 0) {
        CHECK(d4.cartan()[i][j] == -1);
        ++minus;
      }
  }
  CHECK(minus == 6);  // three edges of the D4 diagram

  RootSystem c2('C', 2);
  CHECK(c2.cartan()[0][0] == 2);
  CHECK(c2.cartan()[0][1] * c2.cartan()[1][0] == 2);
  CHECK_FALSE(c2.simply_laced());
}

TEST_CASE("parse round-trips labels") {
  for (std::string lab : {"A1", "A3", "D4", "B2", "C3", "E6", "F4", "G2"}) {
    RootSystem rs = RootSystem::parse(lab);
    CHECK(rs.label() == lab);
  }
  CHECK(RootSystem::parse("a2").label() == "A2");
  CHECK_THROWS_AS(RootSystem::parse("H3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::parse("A0"), std::invalid_argument);
}

TEST_CASE("positive root counts and highest root") {
  struct Row {
    std::string lab;
    int count;
  };
  for (const Row& r : std::vector<Row>{{"A1", 1}, {"A2", 3}, {"A3", 6}, {"D4", 12},
                                       {"B2", 4}, {"G2", 6}}) {
    RootSystem rs = RootSystem::parse(r.lab);
    CHECK(rs.num_positive_roots() == r.count);
  }

  RootSystem a2('A', 2);
  CHECK(a2.theta_root_coords() == std::vector<int>{1, 1});
  CHECK(a2.theta_coroot_coords() == std::vector<int>{1, 1});
  CHECK(a2.theta() == a2.fundamental_weight(0) + a2.fundamental_weight(1));

  RootSystem d4('D', 4);
  // theta^vee pairs to 2 with rho's value on each simple reflection chain:
  // <theta, theta^vee> = 2 always.
  CHECK(d4.pair_weight_theta_coroot(d4.theta()) == 2);
}

TEST_CASE("coweight embedding is the identity matrix transpose in simply-laced types") {
  for (std::string lab : {"A1", "A3", "D4"}) {
    RootSystem rs = RootSystem::parse(lab);
    for (int i = 0; i < rs.rank(); ++i) {
      Coweight u = Coweight::zero(rs.rank());
      u.fc[i] = 1;
      CHECK(rs.coweight_embed(u) == rs.fundamental_weight(i));
    }
  }
  // In C2 the embedding rescales along the long direction but stays dominant.
  RootSystem c2('C', 2);
  for (int i = 0; i < 2; ++i) {
    Coweight u = Coweight::zero(2);
    u.fc[i] = 1;
    CHECK(c2.coweight_embed(u).dominant());
  }
}

TEST_CASE("weyl_dimension on known representations") {
  RootSystem a1('A', 1);
  CHECK(a1.weyl_dimension(a1.fundamental_weight(0)) == 2);
  CHECK(a1.weyl_dimension(a1.fundamental_weight(0) * 2) == 3);
  CHECK(a1.weyl_dimension(a1.fundamental_weight(0) * 5) == 6);

  RootSystem a2('A', 2);
  CHECK(a2.weyl_dimension(a2.fundamental_weight(0)) == 3);
  CHECK(a2.weyl_dimension(a2.fundamental_weight(0) * 2) == 6);
  CHECK(a2.weyl_dimension(a2.fundamental_weight(0) + a2.fundamental_weight(1)) == 8);
  CHECK(a2.weyl_dimension(a2.rho()) == 8);

  RootSystem a3('A', 3);
  CHECK(a3.weyl_dimension(a3.fundamental_weight(1)) == 6);

  RootSystem d4('D', 4);
  for (int i = 0; i < 4; ++i) {
    long long d = d4.weyl_dimension(d4.fundamental_weight(i));
    CHECK((d == 8 || d == 28));
  }

  RootSystem g2('G', 2);
  bool seen7 = false, seen14 = false;
  for (int i = 0; i < 2; ++i) {
    long long d = g2.weyl_dimension(g2.fundamental_weight(i));
    seen7 |= d == 7;
    seen14 |= d == 14;
  }
  CHECK(seen7);
  CHECK(seen14);
}

TEST_CASE("Weyl group basics") {
  RootSystem a2('A', 2);
  WeylElt s0 = WeylElt::simple_reflection(a2, 0);
  WeylElt s1 = WeylElt::simple_reflection(a2, 1);
  CHECK((s0 * s0).is_identity());
  CHECK((s0 * s1 * s0) == (s1 * s0 * s1));  // braid relation
  WeylElt w0 = WeylElt::longest(a2);
  CHECK(w0.length() == 3);
  CHECK((w0 * w0).is_identity());
  // w_0 sends dominant to antidominant.
  Weight rho = a2.rho();
  Weight neg = w0.apply(rho);
  for (int c : neg.fc) CHECK(c <= 0);
  CHECK(w0.apply(neg) == rho);

  std::vector<int> rw = w0.reduced_word();
  CHECK(static_cast<int>(rw.size()) == 3);
  CHECK(WeylElt::from_word(a2, rw) == w0);

  RootSystem a3('A', 3);
  CHECK(WeylElt::longest(a3).length() == 6);
  RootSystem d4('D', 4);
  CHECK(WeylElt::longest(d4).length() == 12);
}

TEST_CASE("extended affine Weyl group and lengths for sl2") {
  RootSystem a1('A', 1);
  Coweight om = Coweight::zero(1);
  om.fc[0] = 1;  // fundamental coweight omega^vee
  // tau_{omega^vee} has length 1 in the extended group of sl2-hat... its
  // translation by the coroot alpha^vee = 2 omega^vee has length 2.
  ExtAffineWeylElt t = ExtAffineWeylElt::translation(a1, om * 2);
  CHECK(affine_length(t, a1) == 2);
  CHECK(affine_length(ExtAffineWeylElt::translation(a1, om * 4), a1) == 4);
  // Antidominant translations have the same length.
  CHECK(affine_length(ExtAffineWeylElt::translation(a1, om * -2), a1) == 2);
  CHECK(affine_length(ExtAffineWeylElt::identity(a1), a1) == 0);

  // Length-1 element tau_{omega^vee} times the right finite part is length 0
  // only through the diagram automorphism; its reduced word is empty.
  ExtAffineWeylElt tom = ExtAffineWeylElt::translation(a1, om);
  long long l = affine_length(tom, a1);
  AffineReducedWord wrd = affine_reduced_word(tom, a1);
  CHECK(static_cast<long long>(wrd.word.size()) == l);
  ExtAffineWeylElt rebuilt = ExtAffineWeylElt::identity(a1);
  for (int i : wrd.word) rebuilt = rebuilt * ExtAffineWeylElt::affine_simple(a1, i);
  rebuilt = rebuilt * wrd.omega.g;
  CHECK(rebuilt == tom);
}

TEST_CASE("affine reduced words reassemble the element") {
  for (std::string lab : {"A2", "A3"}) {
    RootSystem rs = RootSystem::parse(lab);
    WeylElt w0 = WeylElt::longest(rs);
    for (int i = 0; i < rs.rank(); ++i) {
      Coweight u = Coweight::zero(rs.rank());
      u.fc[i] = 1;
      ExtAffineWeylElt t = ExtAffineWeylElt::translation(rs, w0.apply(u));
      AffineReducedWord wrd = affine_reduced_word(t, rs);
      CHECK(static_cast<long long>(wrd.word.size()) == affine_length(t, rs));
      ExtAffineWeylElt rebuilt = ExtAffineWeylElt::identity(rs);
      for (int j : wrd.word) rebuilt = rebuilt * ExtAffineWeylElt::affine_simple(rs, j);
      rebuilt = rebuilt * wrd.omega.g;
      CHECK(rebuilt == t);
    }
  }
}

TEST_CASE("demazure_params solves w Lambda = l Lambda_0 + w_0 mu") {
  for (std::string lab : {"A1", "A2", "A3"}) {
    RootSystem rs = RootSystem::parse(lab);
    WeylElt w0 = WeylElt::longest(rs);
    for (int level : {1, 2}) {
      for (int i = 0; i < rs.rank(); ++i) {
        Weight mu = rs.fundamental_weight(i) * level;
        DemazureParams dp = demazure_params(level, mu, rs);
        CHECK(dp.lambda.dominant(rs));
        CHECK(dp.lambda.level == level);
        CHECK(static_cast<long long>(dp.word.size()) == affine_length(dp.w, rs));
        // The word reassembles w up to a length-zero factor.
        ExtAffineWeylElt rebuilt = ExtAffineWeylElt::identity(rs);
        for (int j : dp.word) rebuilt = rebuilt * ExtAffineWeylElt::affine_simple(rs, j);
        CHECK(affine_length(rebuilt.inverse() * dp.w, rs) == 0);
        // s_{i1} ... s_{ip} Lambda, applied right-to-left, reaches the target
        // finite weight w_0(mu) at the same level.
        AffineWeight xi = dp.lambda;
        for (auto it = dp.word.rbegin(); it != dp.word.rend(); ++it)
          xi = affine_reflect(xi, *it, rs);
        CHECK(xi.level == level);
        CHECK(xi.finite == w0.apply(mu));
      }
    }
  }
}
