#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homext/generate.hpp"
#include "homext/homalg.hpp"

using namespace homext;
using namespace homext::homalg;
using exactlin::HomModule;
using exactlin::is_zero;
using exactlin::Mat;
using exactlin::mat_apply;
using exactlin::Rational;
using exactlin::unit_vec;
using exactlin::Vec;

namespace {

HomAssociativeAlgebra dim1_idempotent(Rational alpha_entry) {
  Tensor3 c(1);
  c.at(0, 0, 0) = 1;
  Mat a(1, 1);
  a.at(0, 0) = alpha_entry;
  return HomAssociativeAlgebra(HomModule(1, a), c);
}

}  // namespace

TEST_CASE("classical associative tables with id twist pass everything") {
  for (const auto& a : {generate::mat2_assoc(), generate::poly_trunc(3), generate::upper2_assoc(),
                        generate::group_c2()}) {
    AxiomReport rep = check_hom_associative(a);
    CHECK(rep.pass);
    CHECK(rep.axiom_passed("hom-associativity"));
    CHECK(rep.axiom_passed("multiplicativity"));
    CHECK(rep.axiom_passed("involutivity"));
  }
}

TEST_CASE("dim-1 idempotent with negated twist fails only multiplicativity") {
  // alpha(e*e) = -e while alpha(e)*alpha(e) = e
  HomAssociativeAlgebra a = dim1_idempotent(-1);
  AxiomReport rep = check_hom_associative(a);
  CHECK(!rep.pass);
  CHECK(rep.axiom_passed("hom-associativity"));
  CHECK(rep.axiom_passed("involutivity"));
  CHECK(rep.axiom_failed("multiplicativity"));
  CHECK(rep.first_violation("multiplicativity")->residual == Vec{-2});
}

TEST_CASE("perturbed matrix-unit table fails hom-associativity with a real witness") {
  HomAssociativeAlgebra a = generate::mat2_assoc();
  a.table.at(0, 1, 2) += 1;  // e11*e12 gains a spurious e21
  AxiomReport rep = check_hom_associative(a);
  REQUIRE(rep.axiom_failed("hom-associativity"));
  const Violation* v = rep.first_violation("hom-associativity");
  REQUIRE(v->witness.size() == 3);
  // replay the witness triple directly against the table
  std::size_t i = v->witness[0], j = v->witness[1], k = v->witness[2];
  Vec lhs = a.mult(a.module.alpha.col(i), a.mult(unit_vec(4, j), unit_vec(4, k)));
  Vec rhs = a.mult(a.mult(unit_vec(4, i), unit_vec(4, j)), a.module.alpha.col(k));
  CHECK(exactlin::vec_sub(lhs, rhs) == v->residual);
  CHECK(!is_zero(v->residual));
}

TEST_CASE("check_hom_lie: sl2, abelian, and the twisted sl2") {
  CHECK(check_hom_lie(generate::sl2()).pass);

  Mat beta(3, 3);
  beta.at(1, 0) = 1;  // e1 <-> e2, e3 -> -e3
  beta.at(0, 1) = 1;
  beta.at(2, 2) = -1;
  CHECK(check_hom_lie(HomLieAlgebra(HomModule(3, beta), Tensor3(3))).pass);

  HomLieAlgebra twisted = generate::yau_twisted_sl2();
  // beta is an involutive automorphism of sl2; the Yau twist must pass
  AxiomReport rep = check_hom_lie(twisted);
  CHECK(rep.pass);
  // and its bracket really is the twisted one: [h,e]' = beta(2e) = 2f
  Vec he = twisted.brk(unit_vec(3, 0), unit_vec(3, 1));
  CHECK(he == Vec{0, 0, 2});
}

TEST_CASE("non-skew tensors are rejected by the constructor but reported by the raw check") {
  Tensor3 bad(2);
  bad.at(0, 1, 0) = 1;
  bad.at(1, 0, 0) = 1;  // should be -1
  CHECK_THROWS_AS(HomLieAlgebra(HomModule::identity_twist(2), bad), std::invalid_argument);
  AxiomReport rep = check_hom_lie_table(HomModule::identity_twist(2), bad);
  CHECK(rep.axiom_failed("skew-symmetry"));
}

TEST_CASE("commutator functor") {
  // commutative algebra: zero bracket
  HomLieAlgebra zero = commutator_hom_lie(generate::poly_trunc(3));
  CHECK(zero.bracket.is_skew());
  bool all_zero = true;
  for (const auto& c : zero.bracket.c) all_zero = all_zero && c == 0;
  CHECK(all_zero);

  // gl2: the classical commutator table
  HomLieAlgebra gl2 = commutator_hom_lie(generate::mat2_assoc());
  // [e11, e12] = e12, [e12, e21] = e11 - e22, [e11, e21] = -e21
  CHECK(gl2.brk(unit_vec(4, 0), unit_vec(4, 1)) == Vec{0, 1, 0, 0});
  CHECK(gl2.brk(unit_vec(4, 1), unit_vec(4, 2)) == Vec{1, 0, 0, -1});
  CHECK(gl2.brk(unit_vec(4, 0), unit_vec(4, 2)) == Vec{0, 0, -1, 0});
  CHECK(check_hom_lie(gl2).pass);

  // rejection carries the failing axiom
  CHECK_THROWS_WITH_AS(commutator_hom_lie(dim1_idempotent(-1)),
                       "commutator_hom_lie: input fails multiplicativity",
                       std::invalid_argument);
}

TEST_CASE("commutator of generated Hom-associative algebras passes check_hom_lie") {
  auto corpus = generate::generate_hom_assoc(20240901, 120, 4);
  REQUIRE(corpus.size() == 120);
  for (const auto& a : corpus) {
    HomLieAlgebra l = commutator_hom_lie(a);
    CHECK(check_hom_lie(l).pass);
  }
}

TEST_CASE("subalgebra and ideal checks") {
  HomAssociativeAlgebra a = generate::mat2_assoc();
  CHECK(check_subalgebra(a, SubspaceData::whole(4)).pass);
  CHECK(check_ideal(a, SubspaceData::whole(4)).pass);
  CHECK(check_subalgebra(a, SubspaceData::zero(4)).pass);
  CHECK(check_ideal(a, SubspaceData::zero(4)).pass);

  // strictly upper triangular inside 2x2 matrices: subalgebra, not ideal
  SubspaceData strict(4, {unit_vec(4, 1)});
  CHECK(check_subalgebra(a, strict).pass);
  AxiomReport rep = check_ideal(a, strict);
  REQUIRE(!rep.pass);
  // witness: e21*e12 = e22 (or e12*e21 = e11) escapes the span
  CHECK((rep.violations[0].axiom == "left-absorption" ||
         rep.violations[0].axiom == "right-absorption"));
}

TEST_CASE("quotient_algebra") {
  HomAssociativeAlgebra upper = generate::upper2_assoc();

  // zero ideal: isomorphic copy
  HomAssociativeAlgebra same = quotient_algebra(upper, SubspaceData::zero(3));
  CHECK(same.table.c == upper.table.c);

  // full ideal: zero algebra
  HomAssociativeAlgebra zero = quotient_algebra(upper, SubspaceData::whole(3));
  CHECK(zero.dim() == 0);

  // strictly-upper ideal: the diagonal algebra
  SubspaceData strict(3, {unit_vec(3, 1)});
  REQUIRE(check_ideal(upper, strict).pass);
  HomAssociativeAlgebra diag = quotient_algebra(upper, strict);
  REQUIRE(diag.dim() == 2);
  CHECK(diag.mult(unit_vec(2, 0), unit_vec(2, 0)) == Vec{1, 0});
  CHECK(diag.mult(unit_vec(2, 1), unit_vec(2, 1)) == Vec{0, 1});
  CHECK(diag.mult(unit_vec(2, 0), unit_vec(2, 1)) == Vec{0, 0});
  CHECK(check_hom_associative(diag).pass);

  // non-ideal input is rejected
  CHECK_THROWS_AS(
      quotient_algebra(generate::mat2_assoc(), SubspaceData(4, {unit_vec(4, 1)})),
      std::invalid_argument);
}

TEST_CASE("alpha^k-derivations") {
  HomAssociativeAlgebra gl2 = generate::mat2_assoc();
  CHECK(check_alpha_k_derivation(gl2, DerivationData(Mat::zero(4, 4), 2)).pass);

  // inner derivation x -> ax - xa with a = e12, alpha = id, k = 0
  Mat inner(4, 4);
  Vec a12 = unit_vec(4, 1);
  for (std::size_t j = 0; j < 4; ++j) {
    Vec w = exactlin::vec_sub(gl2.mult(a12, unit_vec(4, j)), gl2.mult(unit_vec(4, j), a12));
    for (std::size_t i = 0; i < 4; ++i) inner.at(i, j) = w[i];
  }
  CHECK(check_alpha_k_derivation(gl2, DerivationData(inner, 0)).pass);

  // dim-1 idempotent: D = id fails Leibniz (D(e*e) = e, rhs = 2e)
  HomAssociativeAlgebra e1 = dim1_idempotent(1);
  AxiomReport rep = check_alpha_k_derivation(e1, DerivationData(Mat::identity(1), 0));
  CHECK(rep.axiom_failed("twisted-leibniz"));
  CHECK(rep.first_violation("twisted-leibniz")->residual == Vec{-1});
}

TEST_CASE("beta^k-derivations and the adjoint example") {
  HomLieAlgebra sl2 = generate::sl2();
  CHECK(check_beta_k_derivation(sl2, DerivationData(Mat::zero(3, 3), 1)).pass);

  // adjoint at a twist-fixed vector is a beta-derivation with k = 1
  HomLieAlgebra twisted = generate::yau_twisted_sl2();
  Vec ef{0, 1, 1};  // e + f is fixed by the swap twist
  REQUIRE(mat_apply(twisted.module.alpha, ef) == ef);
  CHECK(check_beta_k_derivation(twisted, adjoint(twisted, ef)).pass);

  // abelian bracket: anything is a derivation for any power
  HomLieAlgebra ab = generate::abelian_lie(3);
  std::mt19937_64 rng(7);
  Mat rnd(3, 3);
  for (auto& x : rnd.a) x = static_cast<long>(rng() % 7) - 3;
  CHECK(check_beta_k_derivation(ab, DerivationData(rnd, 0)).pass);
  CHECK(check_beta_k_derivation(ab, DerivationData(rnd, 1)).pass);
}

TEST_CASE("adjoint matrices") {
  HomLieAlgebra sl2 = generate::sl2();
  CHECK(adjoint(sl2, exactlin::zero_vec(3)).map.is_zero());
  Mat adh = adjoint(sl2, unit_vec(3, 0)).map;
  Mat expect(3, 3);
  expect.at(1, 1) = 2;
  expect.at(2, 2) = -2;
  CHECK(adh == expect);
  CHECK(adjoint(generate::abelian_lie(2), unit_vec(2, 0)).map.is_zero());
}

TEST_CASE("adjoint at fixed basis vectors over the generated Hom-Lie corpus") {
  auto corpus = generate::generate_hom_lie(20240902, 60, 4);
  REQUIRE(corpus.size() == 60);
  std::size_t fixed_found = 0;
  for (const auto& l : corpus)
    for (std::size_t i = 0; i < l.dim(); ++i) {
      Vec x = unit_vec(l.dim(), i);
      if (mat_apply(l.module.alpha, x) == x) {
        ++fixed_found;
        CHECK(check_beta_k_derivation(l, adjoint(l, x)).pass);
      }
    }
  CHECK(fixed_found > 50);  // the corpus must actually exercise the example
}

TEST_CASE("theta-derivation variants collapse when theta = id") {
  HomAssociativeAlgebra a = generate::poly_trunc(3);
  SubspaceData whole = SubspaceData::whole(3);
  Mat theta = Mat::identity(3);
  Mat zero = Mat::zero(3, 3);
  CHECK(check_theta_derivation(a, whole, theta, zero, ThetaVariant::mixed).pass);
  CHECK(check_theta_derivation(a, whole, theta, zero, ThetaVariant::twisted_both).pass);

  // Euler-style derivation x -> x, x^2 -> 2x^2 passes both with theta = id
  Mat euler(3, 3);
  euler.at(1, 1) = 1;
  euler.at(2, 2) = 2;
  CHECK(check_theta_derivation(a, whole, theta, euler, ThetaVariant::mixed).pass);
  CHECK(check_theta_derivation(a, whole, theta, euler, ThetaVariant::twisted_both).pass);
}

TEST_CASE("theta-derivation variants genuinely differ for twisted theta") {
  // K[x]/(x^3) with theta(x) = -x: delta(x) = x, delta(x^2) = -2x^2
  // satisfies the fully twisted rule but not the mixed one
  HomAssociativeAlgebra a = generate::poly_trunc(3);
  SubspaceData whole = SubspaceData::whole(3);
  Mat theta = Mat::identity(3);
  theta.at(1, 1) = -1;
  Mat tb(3, 3);
  tb.at(1, 1) = 1;
  tb.at(2, 2) = -2;
  CHECK(check_theta_derivation(a, whole, theta, tb, ThetaVariant::twisted_both).pass);
  CHECK(!check_theta_derivation(a, whole, theta, tb, ThetaVariant::mixed).pass);

  // while delta(x) = x, delta(x^2) = 0 is mixed-only
  Mat mx(3, 3);
  mx.at(1, 1) = 1;
  CHECK(check_theta_derivation(a, whole, theta, mx, ThetaVariant::mixed).pass);
  CHECK(!check_theta_derivation(a, whole, theta, mx, ThetaVariant::twisted_both).pass);
}

TEST_CASE("axiom verdicts are stable under basis permutation") {
  std::mt19937_64 rng(20240903);
  HomLieAlgebra sl2 = generate::sl2();
  HomLieAlgebra bad = sl2;
  bad.bracket.at(0, 1, 0) += 1;  // breaks hom-jacobi, keeps skew
  bad.bracket.at(1, 0, 0) -= 1;
  REQUIRE(check_hom_lie(sl2).pass);
  REQUIRE(!check_hom_lie(bad).pass);
  for (int trial = 0; trial < 12; ++trial) {
    Mat p = generate::signed_permutation(rng, 3);
    CHECK(check_hom_lie(conjugate(sl2, p)).pass == check_hom_lie(sl2).pass);
    CHECK(check_hom_lie(conjugate(bad, p)).pass == check_hom_lie(bad).pass);
  }
  HomAssociativeAlgebra gl2 = generate::mat2_assoc();
  for (int trial = 0; trial < 8; ++trial) {
    Mat p = generate::signed_permutation(rng, 4);
    CHECK(check_hom_associative(conjugate(gl2, p)).pass);
  }
}

TEST_CASE("with id twist the checker agrees with a plain associativity scan") {
  std::mt19937_64 rng(20240904);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 3;
    Tensor3 t(n);
    for (auto& c : t.c) c = static_cast<long>(rng() % 3) - 1;
    HomAssociativeAlgebra a(HomModule::identity_twist(n), t);
    bool classical = true;
    for (std::size_t i = 0; i < n && classical; ++i)
      for (std::size_t j = 0; j < n && classical; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec lhs = t.mult(unit_vec(n, i), t.mult(unit_vec(n, j), unit_vec(n, k)));
          Vec rhs = t.mult(t.mult(unit_vec(n, i), unit_vec(n, j)), unit_vec(n, k));
          if (lhs != rhs) {
            classical = false;
            break;
          }
        }
    CHECK(check_hom_associative(a).axiom_passed("hom-associativity") == classical);
  }
}

TEST_CASE("derivation_space solves the defining identities") {
  HomLieAlgebra sl2 = generate::sl2();
  auto basis = generate::derivation_space(sl2, 1);
  CHECK(basis.size() == 3);  // classical: all derivations of sl2 are inner
  for (const auto& d : basis) CHECK(check_beta_k_derivation(sl2, DerivationData(d, 1)).pass);

  HomLieAlgebra twisted = generate::yau_twisted_sl2();
  for (const auto& d : generate::derivation_space(twisted, 1))
    CHECK(check_beta_k_derivation(twisted, DerivationData(d, 1)).pass);
}
