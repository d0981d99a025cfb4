// Acceptance suite: one line per criterion, exact arithmetic throughout,
// nonzero exit if anything fails. Run directly or through ctest.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli_util.hpp"
#include "homext/construct.hpp"
#include "homext/freepres.hpp"
#include "homext/generate.hpp"
#include "homext/hnn.hpp"
#include "homext/io.hpp"

using namespace homext;
using cli_util::run_cli;
using exactlin::is_zero;
using exactlin::Mat;
using exactlin::mat_apply;
using exactlin::mat_mul;
using exactlin::unit_vec;
using exactlin::Vec;
using homalg::SubspaceData;
using homalg::ThetaVariant;

namespace {

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<bool()> run;
};

bool require(bool cond, const std::string& what) {
  if (!cond) std::printf("    failed: %s\n", what.c_str());
  return cond;
}

// ---- 1: axiom suite on sl2 / gl2 plus 50 perturbations ----
bool criterion_axiom_suite() {
  bool ok = true;
  ok &= require(homalg::check_hom_lie(generate::sl2()).pass, "sl2 passes");
  ok &= require(homalg::check_hom_associative(generate::mat2_assoc()).pass, "gl2 passes");
  homalg::HomLieAlgebra sl2 = generate::sl2();
  std::mt19937_64 rng(101);
  std::size_t done = 0;
  std::vector<std::array<std::size_t, 4>> seen;
  while (done < 50) {
    std::size_t i = rng() % 3, j = rng() % 3, k = rng() % 3, s = rng() % 2;
    std::array<std::size_t, 4> key{i, j, k, s};
    bool dup = false;
    for (const auto& x : seen) dup |= x == key;
    if (dup) continue;
    seen.push_back(key);
    homalg::Tensor3 t = sl2.bracket;
    t.at(i, j, k) += s == 0 ? 1 : -1;
    AxiomReport rep = homalg::check_hom_lie_table(sl2.module, t);
    ok &= require(!rep.pass, "perturbation detected");
    bool named = rep.axiom_failed("hom-jacobi") || rep.axiom_failed("skew-symmetry");
    ok &= require(named, "failure names hom-jacobi or skew-symmetry");
    ok &= require(!rep.violations.empty() && !rep.violations.front().witness.empty(),
                  "witness recorded");
    ++done;
  }
  return ok;
}

// ---- 2: commutator functor over >= 100 generated algebras ----
bool criterion_commutator() {
  auto corpus = generate::generate_hom_assoc(424242, 110, 4);
  bool ok = require(corpus.size() >= 100, "generator yields >= 100 algebras");
  for (const auto& a : corpus) {
    if (!homalg::check_hom_lie(homalg::commutator_hom_lie(a)).pass) {
      ok = require(false, "commutator output passes check_hom_lie");
      break;
    }
  }
  return ok;
}

// ---- 3: adjoint at twist-fixed basis vectors ----
bool criterion_adjoint() {
  bool ok = true;
  std::size_t exercised = 0;
  for (const auto& l : generate::generate_hom_lie(434343, 60, 4)) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
      Vec x = unit_vec(l.dim(), i);
      if (mat_apply(l.module.alpha, x) != x) continue;
      ++exercised;
      if (!homalg::check_beta_k_derivation(l, homalg::adjoint(l, x)).pass) {
        ok = require(false, "adjoint at a fixed vector is a beta-derivation, k = 1");
        break;
      }
    }
  }
  return ok && require(exercised >= 50, "corpus contained fixed basis vectors");
}

// ---- 4: semidirect products over >= 20 validated actions ----
bool criterion_semidirect() {
  std::vector<construct::HomAction> actions;
  for (const auto& l : generate::generate_hom_lie(454545, 14, 4))
    actions.push_back(construct::HomAction::adjoint(l));
  actions.push_back(construct::HomAction::zero(generate::sl2(), generate::heisenberg()));
  actions.push_back(construct::HomAction::zero(generate::solvable2(), generate::abelian_lie(2)));
  homalg::HomLieAlgebra sl2 = generate::sl2();
  for (const auto& d : generate::derivation_space(sl2, 1))
    actions.push_back(construct::HomAction::one_dim_derivation(sl2, d));
  homalg::HomLieAlgebra tw = generate::yau_twisted_sl2();
  for (const auto& d : generate::derivation_space(tw, 1))
    actions.push_back(construct::HomAction::one_dim_derivation(tw, d));

  bool ok = require(actions.size() >= 20, ">= 20 candidate actions");
  std::size_t validated = 0;
  for (const auto& act : actions) {
    if (!construct::check_hom_action(act).pass) continue;
    ++validated;
    construct::SemidirectProduct sp = construct::semidirect_product(act);
    ok &= require(homalg::check_hom_lie(sp.result).pass, "semidirect passes check_hom_lie");
    ok &= require(homalg::check_lie_ideal(sp.result, sp.target_subspace()).pass,
                  "m embeds as an ideal");
    ok &= require(homalg::check_lie_subalgebra(sp.result, sp.actor_subspace()).pass,
                  "l embeds as a subalgebra");
    if (!ok) break;
  }
  return ok && require(validated >= 20, ">= 20 actions validated");
}

// ---- 5: free algebra twist involution and word-count dimensions ----
bool criterion_free_algebra() {
  bool ok = true;
  std::vector<exactlin::HomModule> modules;
  modules.push_back(exactlin::HomModule::identity_twist(1));
  modules.push_back(exactlin::HomModule::identity_twist(2));
  Mat neg(1, 1);
  neg.at(0, 0) = -1;
  modules.push_back(exactlin::HomModule(1, neg));
  Mat swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  modules.push_back(exactlin::HomModule(2, swap));
  Mat shear(2, 2);
  shear.at(0, 0) = 1;
  shear.at(0, 1) = 1;
  shear.at(1, 1) = -1;
  modules.push_back(exactlin::HomModule(2, shear));
  for (const auto& mod : modules) {
    freepres::FreeTermSpace sp(mod, 4, false);
    for (std::size_t k = 1; k <= 4; ++k)
      ok &= require(mat_mul(sp.twist_block(k), sp.twist_block(k)).is_identity(),
                    "alpha^2 = id on degree " + std::to_string(k));
  }
  for (std::size_t n : {1u, 2u}) {
    freepres::FreeAlgebraTrunc f(exactlin::HomModule::identity_twist(n), 4, false);
    std::size_t expect = 1;
    for (std::size_t k = 1; k <= 4; ++k) {
      expect *= n;  // free associative word count as the oracle
      ok &= require(f.graded_dim(k) == expect,
                    "dim matches n^k at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return ok;
}

// ---- 6: enveloping / PBW desk check ----
bool criterion_pbw() {
  bool ok = true;
  freepres::EnvelopingAlgebra usl2 = freepres::enveloping(generate::sl2(), 2);
  auto dims = usl2.pres.degree_dims();
  std::size_t total = dims[0] + dims[1] + dims[2];
  ok &= require(total == 10, "U(sl2) filtration <= 2 has total dimension 10");
  ok &= require(freepres::check_pbw_injectivity(usl2).pass, "pbw injectivity for sl2");
  for (std::size_t n : {1u, 2u, 3u})
    ok &= require(
        freepres::check_pbw_injectivity(freepres::enveloping(generate::abelian_lie(n), 3)).pass,
        "pbw injectivity for the abelian algebra of dim " + std::to_string(n));
  ok &= require(
      freepres::check_pbw_injectivity(freepres::enveloping(generate::yau_twisted_sl2(), 3)).pass,
      "pbw injectivity for the Yau-twisted sl2");
  return ok;
}

// ---- 7: associative HNN embedding ----
bool criterion_hnn_assoc() {
  bool ok = true;
  hnn::HNNAssocData worked;
  worked.A = generate::dual_numbers();
  Mat theta(2, 1);
  theta.at(0, 0) = 1;
  worked.letters.push_back(
      {"t", SubspaceData(2, {unit_vec(2, 0)}), theta, Mat::zero(2, 1), {Vec{1}}});
  ok &= require(hnn::validate_hnn_assoc_data(worked).pass, "worked example validates");
  hnn::TruncatedQ q = hnn::build_Q(worked, 2);
  ok &= require(hnn::check_hnn_relation(q, 0, Vec{1}).zero, "worked relation residual is zero");
  ok &= require(hnn::embedding_certificate_assoc(worked, 2).pass, "worked certificate passes");

  auto found = generate::hnn_search_classical(474747, 3, 150, ThetaVariant::mixed);
  ok &= require(found.size() >= 10, "random search finds validated instances");
  for (const auto& inst : found) {
    hnn::TruncatedQ qi = hnn::build_Q(inst.data, 2);
    for (std::size_t p = 0; p < inst.data.letters[0].B.dim(); ++p)
      if (!hnn::check_hnn_relation(qi, 0, unit_vec(inst.data.letters[0].B.dim(), p)).zero) {
        ok = require(false, "residual zero on " + inst.description);
        break;
      }
  }
  return ok;
}

// ---- 8: theta-variant discrimination, golden-pinned ----
bool criterion_variant_experiment() {
  generate::VariantExperiment exp = generate::theta_variant_experiment();
  bool ok = require(exp.discriminating || exp.report.find("relation-failures") != std::string::npos,
                    "experiment produced an outcome");
  ok &= require(exp.selected == ThetaVariant::mixed, "selected default is the mixed variant");
  std::ifstream in(std::string(HOMEXT_GOLDEN_DIR) + "/theta_variant.txt", std::ios::binary);
  ok &= require(in.good(), "golden file present");
  if (in.good()) {
    std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ok &= require(exp.report == golden, "experiment report matches the golden file");
  }
  return ok;
}

// ---- 9: Hom-Lie HNN embedding certificates ----
bool criterion_hnn_lie() {
  bool ok = true;
  hnn::HNNLieData weyl{generate::abelian_lie(1), SubspaceData::whole(1), Mat::identity(1)};
  hnn::TruncatedM mw = hnn::build_M(weyl, 3, 2);
  const auto& sp = mw.M.space();
  Vec x(sp.dim()), t(sp.dim());
  x[sp.degree_offset(1)] = 1;
  t[sp.degree_offset(1) + 1] = 1;
  ok &= require(mw.M.equal_mod_ideal(exactlin::vec_sub(sp.mult(t, x), sp.mult(x, t)), x),
                "[t, x] = x holds exactly in M");
  ok &= require(hnn::embedding_certificate_lie(weyl, 3, 2).pass, "abelian certificate passes");

  Mat d(2, 2);
  d.at(1, 1) = 1;
  hnn::HNNLieData solv{generate::solvable2(), SubspaceData(2, {unit_vec(2, 1)}), d};
  hnn::TruncatedM ms = hnn::build_M(solv, 3, 2);
  Vec y(ms.M.space().dim()), ts(ms.M.space().dim());
  y[ms.M.space().degree_offset(1) + 1] = 1;
  ts[ms.M.space().degree_offset(1) + 2] = 1;
  ok &= require(ms.M.equal_mod_ideal(
                    exactlin::vec_sub(ms.M.space().mult(ts, y), ms.M.space().mult(y, ts)), y),
                "[t, y] = y holds exactly in M");
  ok &= require(hnn::embedding_certificate_lie(solv, 3, 2).pass,
                "nonabelian certificate passes at degree 3");
  return ok;
}

// ---- 10: semidirect cross-check over the derivation corpus ----
bool criterion_crosscheck() {
  bool ok = true;
  std::vector<homalg::HomLieAlgebra> gs = {generate::sl2(), generate::yau_twisted_sl2(),
                                           generate::solvable2(), generate::heisenberg(),
                                           generate::abelian_lie(2)};
  for (const auto& l : generate::generate_hom_lie(505050, 8, 3)) gs.push_back(l);
  std::size_t checked = 0;
  for (const auto& g : gs)
    for (const auto& d : generate::derivation_space(g, 1)) {
      ++checked;
      if (!hnn::crosscheck_semidirect(g, d).pass) {
        ok = require(false, "crosscheck passes for a verified derivation");
        break;
      }
    }
  return ok && require(checked >= 20, "corpus exercised >= 20 derivations");
}

// ---- 11: CLI determinism and the exit-code contract ----
bool criterion_cli() {
  namespace fs = std::filesystem;
  fs::create_directories("acceptance_scratch");
  auto path = [](const std::string& n) { return "acceptance_scratch/" + n; };
  std::string sl2 =
      "kind hom-lie\ndim 3\nbasis h e f\ntwist\n1 0 0\n0 1 0\n0 0 1\n"
      "table\n1 2 -> 0 2 0\n1 3 -> 0 0 -2\n2 3 -> 1 0 0\nend\n";
  io::write_file(path("sl2.alg"), sl2);
  std::string broken = sl2;
  broken.replace(broken.find("2 3 -> 1 0 0"), 12, "2 3 -> 1 1 0");
  io::write_file(path("jacobi.alg"), broken);
  std::string nonskew = sl2;
  nonskew.insert(nonskew.find("end\n"), "2 1 -> 0 2 0\n");
  io::write_file(path("nonskew.alg"), nonskew);

  bool ok = true;
  struct Case {
    std::string args;
    int expect;
  };
  std::vector<Case> cases = {
      {"check " + path("sl2.alg"), 0},
      {"check " + path("jacobi.alg"), 1},
      {"check " + path("nonskew.alg"), 2},
      {"check " + path("absent.alg"), 2},
      {"envelope " + path("sl2.alg") + " --degree 2", 0},
      {"generate --mode random-search --kind hom-lie --dim 1 --count 1 --nonabelian --out " +
           path("no"),
       3},
      {"generate --mode yau-twist --kind hom-lie --dim 3 --count 1 --seed 11 --out " +
           path("g"),
       0},
  };
  for (const auto& c : cases) {
    auto r = run_cli(c.args);
    ok &= require(r.exit_code == c.expect,
                  "exit " + std::to_string(c.expect) + " for: " + c.args + " (got " +
                      std::to_string(r.exit_code) + ")");
    ok &= require(r.exit_code >= 0 && r.exit_code <= 3, "exit code within the contract");
  }
  // byte-identical reruns, including the JSON rendering
  for (const std::string& args :
       {std::string("check ") + path("sl2.alg"), std::string("--json check ") + path("sl2.alg"),
        std::string("envelope ") + path("sl2.alg") + " --degree 2",
        std::string("generate --mode yau-twist --kind hom-lie --dim 3 --count 2 --seed 3 --out ") +
            path("h")}) {
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    ok &= require(r1.output == r2.output, "byte-identical rerun: " + args);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "axiom suite with perturbation witnesses", 1.0, criterion_axiom_suite},
      {2, "commutator functor over generated corpus", 10.0, criterion_commutator},
      {3, "adjoint derivations at fixed vectors", 5.0, criterion_adjoint},
      {4, "semidirect products of validated actions", 5.0, criterion_semidirect},
      {5, "free algebra involution and dimensions", 20.0, criterion_free_algebra},
      {6, "enveloping algebra PBW desk check", 30.0, criterion_pbw},
      {7, "associative HNN embedding certificates", 20.0, criterion_hnn_assoc},
      {8, "theta-variant discrimination", 20.0, criterion_variant_experiment},
      {9, "Hom-Lie HNN embedding certificates", 30.0, criterion_hnn_lie},
      {10, "semidirect cross-check", 5.0, criterion_crosscheck},
      {11, "CLI determinism and exit codes", 10.0, criterion_cli},
  };
  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      std::printf("    over time budget: %.2fs > %.0fs\n", secs, c.limit_seconds);
      ok = false;
    }
    std::printf("criterion %2d [%s]: %s (%.2fs)\n", c.number, c.name.c_str(),
                ok ? "PASS" : "FAIL", secs);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
