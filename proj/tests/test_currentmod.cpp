#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "demfuse/current_module.hpp"

using namespace demfuse;

TEST_CASE("natural and irreducible evaluation modules") {
  RootSystem a1('A', 1);
  ModulePtr nat = CurrentModule::natural(a1);
  CHECK(nat->dim() == 2);
  CHECK(nat->graded());
  CHECK(nat->cyclic_vector().has_value());

  ModulePtr triv = CurrentModule::trivial(a1);
  CHECK(triv->dim() == 1);
  CHECK(triv->graded_character().dimension() == 1);

  ModulePtr v2 = CurrentModule::irreducible_evaluation(a1.fundamental_weight(0) * 2, a1);
  CHECK(v2->dim() == 3);
  CHECK(v2->graded_character().normalized() ==
        weyl_character(a1.fundamental_weight(0) * 2, a1));

  RootSystem a2('A', 2);
  ModulePtr adj = CurrentModule::irreducible_evaluation(a2.rho(), a2);
  CHECK(adj->dim() == 8);
  RootSystem a3('A', 3);
  ModulePtr w2 = CurrentModule::irreducible_evaluation(a3.fundamental_weight(1), a3);
  CHECK(w2->dim() == 6);
}

TEST_CASE("evaluation modules satisfy the current-algebra brackets") {
  RootSystem a2('A', 2);
  ModulePtr adj = CurrentModule::irreducible_evaluation(a2.rho(), a2);
  CHECK(bracket_audit(adj, 7u));

  ModulePtr shifted = CurrentModule::evaluation_shift(adj, Rational(3));
  CHECK(bracket_audit(shifted, 11u));

  RootSystem a1('A', 1);
  ModulePtr m1 = CurrentModule::evaluation_shift(CurrentModule::natural(a1), Rational(-1));
  ModulePtr m2 = CurrentModule::evaluation_shift(
      CurrentModule::irreducible_evaluation(a1.fundamental_weight(0) * 2, a1), Rational(2));
  CHECK(bracket_audit(CurrentModule::tensor(m1, m2), 13u));
}

TEST_CASE("evaluation shift changes the t-action but not the weight structure") {
  RootSystem a1('A', 1);
  ModulePtr nat = CurrentModule::natural(a1);
  ModulePtr sh = CurrentModule::evaluation_shift(nat, Rational(5));
  CHECK(sh->dim() == nat->dim());
  CHECK_FALSE(sh->graded());  // shifting away from 0 breaks the t-grading
  for (int i = 0; i < nat->dim(); ++i) CHECK(sh->weight_of(i) == nat->weight_of(i));
  // x t^1 acts as 5 x on an evaluation module at 5.
  SparseVec v = SparseVec::unit(1);
  SparseVec a = sh->apply(GenKind::E, 0, 1, v);
  SparseVec b = sh->apply(GenKind::E, 0, 0, v);
  a.axpy(Rational(-5), b);
  CHECK(a.is_zero());
}

TEST_CASE("cyclic closure of a tensor product at distinct points is everything") {
  RootSystem a1('A', 1);
  ModulePtr m1 = CurrentModule::evaluation_shift(CurrentModule::natural(a1), Rational(0));
  ModulePtr m2 = CurrentModule::evaluation_shift(CurrentModule::natural(a1), Rational(1));
  ModulePtr t = CurrentModule::tensor(m1, m2);
  long long vidx = 0 * 2 + 0;  // highest weight vector in both slots
  ClosureResult cr = cyclic_closure(t, SparseVec::unit(static_cast<int>(vidx)));
  CHECK(cr.is_all);
  CHECK(cr.sub->dim() == 4);
}

TEST_CASE("cyclic closure at equal points is a proper submodule") {
  // V(omega)(0) tensor V(omega)(0): the top vector generates only the
  // symmetric part V(2 omega), dimension 3.
  RootSystem a1('A', 1);
  ModulePtr nat = CurrentModule::natural(a1);
  ModulePtr t = CurrentModule::tensor(nat, nat);
  ClosureResult cr = cyclic_closure(t, SparseVec::unit(0));
  CHECK_FALSE(cr.is_all);
  CHECK(cr.sub->dim() == 3);
  CHECK(cr.sub->graded_character().normalized() ==
        weyl_character(a1.fundamental_weight(0) * 2, a1));
}

TEST_CASE("tensor character is the product of characters") {
  RootSystem a2('A', 2);
  ModulePtr v = CurrentModule::natural(a2);
  ModulePtr t = CurrentModule::tensor(v, v);
  CHECK(t->dim() == 9);
  GradedCharacter ch = t->graded_character().normalized();
  // 3 x 3 = 6 + 3bar.
  long long dim = ch.dimension();
  CHECK(dim == 9);
  CHECK(ch.mult({2, 0}, 0) == 1);   // highest weight of Sym^2
  CHECK(ch.mult({0, 1}, 0) == 2);   // omega_2 weight appears twice
}

TEST_CASE("make_explicit validates its data and dump_json is deterministic") {
  RootSystem a1('A', 1);
  ModulePtr nat = CurrentModule::natural(a1);
  std::string d1 = nat->dump_json();
  std::string d2 = nat->dump_json();
  CHECK(d1 == d2);
  CHECK(d1.find("\"dim\":2") != std::string::npos);

  ModulePtr adj = CurrentModule::irreducible_evaluation(RootSystem('A', 2).rho(),
                                                        RootSystem('A', 2));
  CHECK(adj->dump_json() == adj->dump_json());
}

TEST_CASE("degree completeness of evaluation towers") {
  RootSystem a1('A', 1);
  ModulePtr nat = CurrentModule::natural(a1);
  CHECK(nat->degree_complete());
  ModulePtr sh = CurrentModule::evaluation_shift(nat, Rational(2));
  CHECK(sh->degree_complete());
  CHECK(CurrentModule::tensor(nat, sh)->degree_complete());
  // High t-powers still act consistently: (e t^3) on the shifted module is
  // 2^3 e.
  SparseVec v = SparseVec::unit(1);
  SparseVec a = sh->apply(GenKind::E, 0, 3, v);
  SparseVec b = sh->apply(GenKind::E, 0, 0, v);
  a.axpy(Rational(-8), b);
  CHECK(a.is_zero());
}
