#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "homext/construct.hpp"
#include "homext/freepres.hpp"
#include "homext/generate.hpp"
#include "homext/hnn.hpp"
#include "homext/io.hpp"

using namespace homext;

namespace {

constexpr int kPass = 0;
constexpr int kMathFail = 1;
constexpr int kInvalidInput = 2;
constexpr int kExhausted = 3;

struct Emit {
  bool json = false;
  int operator()(io::ReportFile& rep, int code) const {
    std::cout << (json ? rep.render_json() : rep.render_text());
    return code;
  }
};

std::string certificate_fields(io::ReportFile& rep, const freepres::EmbeddingCertificate& cert) {
  rep.add("truncation", cert.truncation);
  for (const auto& [name, zero] : cert.residuals)
    rep.add("residual " + name, zero ? "zero" : "nonzero");
  rep.add("kernel-dimension", std::to_string(cert.kernel_dim));
  rep.add("certificate", cert.pass ? "pass" : "fail");
  return cert.pass ? "pass" : "fail";
}

int cmd_check(const std::string& path, const Emit& emit) {
  io::ReportFile rep;
  rep.command = "check";
  std::string text = io::read_file(path);
  rep.inputs.push_back(io::fnv1a_hex(text));
  io::AlgebraFile f = io::parse_algebra_file(text);
  rep.add("kind", f.kind);
  rep.add("dim", std::to_string(f.dim));
  AxiomReport ax;
  if (f.kind == "hom-associative") {
    ax = homalg::check_hom_associative(io::to_hom_assoc(f));
  } else {
    auto [mod, tensor] = io::to_hom_lie_raw(f);
    ax = homalg::check_hom_lie_table(mod, tensor);
  }
  rep.add_axioms(ax, f.basis);
  if (ax.pass) {
    rep.result = "pass";
    return emit(rep, kPass);
  }
  // a non-skew stored tensor is a structural defect, not a failed identity
  if (ax.axiom_failed("skew-symmetry")) {
    rep.result = "invalid-input";
    return emit(rep, kInvalidInput);
  }
  rep.result = "fail";
  return emit(rep, kMathFail);
}

int cmd_commutator(const std::string& path, const std::string& out, const Emit& emit) {
  io::ReportFile rep;
  rep.command = "commutator";
  std::string text = io::read_file(path);
  rep.inputs.push_back(io::fnv1a_hex(text));
  io::AlgebraFile f = io::parse_algebra_file(text);
  homalg::HomAssociativeAlgebra a = io::to_hom_assoc(f);
  AxiomReport ax = homalg::check_hom_associative(a);
  rep.add_axioms(ax, f.basis);
  if (!ax.pass) {
    rep.result = "fail";
    return emit(rep, kMathFail);
  }
  homalg::HomLieAlgebra l = homalg::commutator_hom_lie(a);
  AxiomReport out_ax = homalg::check_hom_lie(l);
  rep.add("commutator-passes-hom-lie", out_ax.pass ? "yes" : "no");
  std::string rendered = io::render_algebra_file(io::from_hom_lie(l));
  io::write_file(out, rendered);
  rep.add("output", out);
  rep.add("output-digest", io::fnv1a_hex(rendered));
  rep.result = out_ax.pass ? "pass" : "fail";
  return emit(rep, out_ax.pass ? kPass : kMathFail);
}

int cmd_semidirect(const std::string& lpath, const std::string& mpath, const std::string& apath,
                   const std::string& out, const Emit& emit) {
  io::ReportFile rep;
  rep.command = "semidirect";
  std::string ltext = io::read_file(lpath), mtext = io::read_file(mpath),
              atext = io::read_file(apath);
  rep.inputs = {io::fnv1a_hex(ltext), io::fnv1a_hex(mtext), io::fnv1a_hex(atext)};
  homalg::HomLieAlgebra l = io::to_hom_lie(io::parse_algebra_file(ltext));
  homalg::HomLieAlgebra m = io::to_hom_lie(io::parse_algebra_file(mtext));
  io::ActionFile af = io::parse_action_file(atext);
  if (af.dim_actor != l.dim() || af.dim_target != m.dim())
    throw io::parse_error("action dimensions do not match the algebras");
  construct::HomAction act(l, m, af.tensor);
  AxiomReport ax = construct::check_hom_action(act);
  rep.add_axioms(ax, {});
  if (!ax.pass) {
    rep.result = "fail";
    return emit(rep, kMathFail);
  }
  construct::SemidirectProduct sp = construct::semidirect_product(act);
  AxiomReport out_ax = homalg::check_hom_lie(sp.result);
  rep.add("semidirect-passes-hom-lie", out_ax.pass ? "yes" : "no");
  std::string rendered = io::render_algebra_file(io::from_hom_lie(sp.result));
  io::write_file(out, rendered);
  rep.add("output", out);
  rep.add("output-digest", io::fnv1a_hex(rendered));
  rep.result = out_ax.pass ? "pass" : "fail";
  return emit(rep, out_ax.pass ? kPass : kMathFail);
}

int cmd_envelope(const std::string& path, std::size_t degree, const Emit& emit) {
  io::ReportFile rep;
  rep.command = "envelope";
  std::string text = io::read_file(path);
  rep.inputs.push_back(io::fnv1a_hex(text));
  rep.add("degree", std::to_string(degree));
  io::AlgebraFile f = io::parse_algebra_file(text);
  auto [mod, tensor] = io::to_hom_lie_raw(f);
  AxiomReport ax = homalg::check_hom_lie_table(mod, tensor);
  rep.add_axioms(ax, f.basis);
  if (!ax.pass) {
    rep.result = ax.axiom_failed("skew-symmetry") ? "invalid-input" : "fail";
    return emit(rep, ax.axiom_failed("skew-symmetry") ? kInvalidInput : kMathFail);
  }
  homalg::HomLieAlgebra g = io::to_hom_lie(f);
  freepres::EnvelopingAlgebra env = freepres::enveloping(g, degree);
  auto dims = env.pres.degree_dims();
  std::string ds;
  for (std::size_t k = 0; k < dims.size(); ++k) ds += (k ? " " : "") + std::to_string(dims[k]);
  rep.add("degree-dims", ds);
  std::istringstream basis_lines(env.pres.describe_basis(f.basis));
  std::string line;
  while (std::getline(basis_lines, line)) {
    auto colon = line.find(':');
    rep.add("basis " + line.substr(0, colon), line.substr(colon + 1).empty()
                                                  ? "-"
                                                  : line.substr(colon + 2));
  }
  freepres::EmbeddingCertificate cert = freepres::check_pbw_injectivity(env);
  rep.result = certificate_fields(rep, cert);
  return emit(rep, cert.pass ? kPass : kMathFail);
}

int cmd_hnn_assoc(const std::string& path, std::size_t maxlen, const std::string& variant,
                  const Emit& emit) {
  io::ReportFile rep;
  rep.command = "hnn-assoc";
  std::string text = io::read_file(path);
  rep.inputs.push_back(io::fnv1a_hex(text));
  rep.add("maxlen", std::to_string(maxlen));
  rep.add("variant", variant);
  homalg::ThetaVariant v = variant == "twisted-both" ? homalg::ThetaVariant::twisted_both
                                                     : homalg::ThetaVariant::mixed;
  io::AlgebraFile f = io::parse_algebra_file(text);
  hnn::HNNAssocData data = io::to_hnn_assoc_data(f, v);
  AxiomReport val = hnn::validate_hnn_assoc_data(data);
  rep.add_axioms(val, f.basis);
  if (!val.pass) {
    rep.add("failed-hypothesis", val.violations.front().axiom);
    rep.result = "fail";
    return emit(rep, kMathFail);
  }
  std::istringstream pres_lines(hnn::hnn_assoc_presentation(data).render());
  std::string line;
  std::size_t pi = 0;
  while (std::getline(pres_lines, line)) rep.add("presentation-" + std::to_string(++pi), line);
  // informational: whether the quotient twist keeps span(X), which is what
  // the componentwise twist on Q needs
  for (const auto& letter : data.letters) {
    construct::CosetHomModule coset = construct::coset_module(data.A, letter.B);
    construct::FreeBasisWitness w = construct::check_free_basis(coset, letter.X);
    rep.add("info " + letter.name + ":x-twist-span-stable", w.twist_span_stable ? "yes" : "no");
  }
  freepres::EmbeddingCertificate cert = hnn::embedding_certificate_assoc(data, maxlen);
  rep.result = certificate_fields(rep, cert);
  return emit(rep, cert.pass ? kPass : kMathFail);
}

int cmd_hnn_lie(const std::string& path, std::size_t degree, std::size_t maxlen,
                const Emit& emit) {
  io::ReportFile rep;
  rep.command = "hnn-lie";
  std::string text = io::read_file(path);
  rep.inputs.push_back(io::fnv1a_hex(text));
  rep.add("degree", std::to_string(degree));
  rep.add("maxlen", std::to_string(maxlen));
  io::AlgebraFile f = io::parse_algebra_file(text);
  homalg::HomLieAlgebra g = io::to_hom_lie(f);
  const auto* srows = io::find_subspace(f, "s");
  if (!srows) throw io::parse_error("hnn-lie input needs a 'subspace s' block");
  exactlin::Mat d;
  bool have_d = false;
  for (const auto& [name, power, map] : f.derivations)
    if (name == "d") {
      d = map;
      have_d = true;
    }
  if (!have_d) throw io::parse_error("hnn-lie input needs a 'derivation d' block");
  hnn::HNNLieData data{g, homalg::SubspaceData(f.dim, *srows), d};
  AxiomReport val = hnn::validate_hnn_lie_data(data);
  rep.add_axioms(val, f.basis);
  if (!val.pass) {
    std::string axiom = val.violations.front().axiom;
    rep.add("failed-hypothesis",
            axiom.rfind("s:", 0) == 0 ? "hom-lie-subalgebra (" + axiom + ")" : axiom);
    rep.result = "fail";
    return emit(rep, kMathFail);
  }
  hnn::HNNLiePresentation pr = hnn::hnn_lie_presentation(data);
  std::istringstream pres_lines(pr.render());
  std::string line;
  std::size_t pi = 0;
  while (std::getline(pres_lines, line))
    rep.add("presentation-" + std::to_string(++pi), line);
  hnn::TruncatedM m = hnn::build_M(data, degree, maxlen);
  auto dims = m.M.degree_dims();
  std::string ds;
  for (std::size_t k = 0; k < dims.size(); ++k) ds += (k ? " " : "") + std::to_string(dims[k]);
  rep.add("m-degree-dims", ds);
  freepres::EmbeddingCertificate cert = hnn::embedding_certificate_lie(data, degree, maxlen);
  rep.result = certificate_fields(rep, cert);
  return emit(rep, cert.pass ? kPass : kMathFail);
}

int cmd_generate(const std::string& mode, const std::string& kind, std::size_t dim,
                 std::size_t count, std::uint64_t seed, bool nonabelian,
                 const std::string& prefix, const Emit& emit) {
  io::ReportFile rep;
  rep.command = "generate";
  rep.add("mode", mode);
  rep.add("kind", kind);
  rep.add("dim", std::to_string(dim));
  rep.add("count", std::to_string(count));
  rep.add("seed", std::to_string(seed));
  if (nonabelian) rep.add("constraint", "nonabelian");

  std::vector<std::string> rendered;
  std::mt19937_64 rng(seed);
  std::size_t budget = 5000;
  auto nonzero_table = [](const homalg::Tensor3& t) {
    for (const auto& c : t.c)
      if (c != 0) return true;
    return false;
  };
  while (rendered.size() < count && budget-- > 0) {
    if (mode == "yau-twist") {
      try {
        if (kind == "hom-lie") {
          auto samples = generate::generate_hom_lie(rng(), 1, dim);
          if (samples[0].dim() != dim) continue;
          if (nonabelian && !nonzero_table(samples[0].bracket)) continue;
          if (!homalg::check_hom_lie(samples[0]).pass) continue;
          rendered.push_back(io::render_algebra_file(io::from_hom_lie(samples[0])));
        } else {
          auto samples = generate::generate_hom_assoc(rng(), 1, dim);
          if (samples[0].dim() != dim) continue;
          if (nonabelian && !nonzero_table(samples[0].table)) continue;
          if (!homalg::check_hom_associative(samples[0]).pass) continue;
          rendered.push_back(io::render_algebra_file(io::from_hom_assoc(samples[0])));
        }
      } catch (const std::runtime_error&) {
        break;  // catalog cannot serve this dimension at all
      }
    } else {  // random-search over raw structure constants
      exactlin::Mat beta = generate::signed_permutation(rng, dim);
      homalg::Tensor3 t(dim);
      if (kind == "hom-lie") {
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
              long c = static_cast<long>(rng() % 5) - 2;
              t.at(i, j, k) = c;
              t.at(j, i, k) = -c;
            }
        if (nonabelian && !nonzero_table(t)) continue;
        if (!homalg::check_hom_lie_table(exactlin::HomModule(dim, beta), t).pass) continue;
        rendered.push_back(io::render_algebra_file(
            io::from_hom_lie(homalg::HomLieAlgebra(exactlin::HomModule(dim, beta), t))));
      } else {
        for (auto& c : t.c) c = static_cast<long>(rng() % 3) - 1;
        if (nonabelian && !nonzero_table(t)) continue;
        homalg::HomAssociativeAlgebra a(exactlin::HomModule(dim, beta), t);
        if (!homalg::check_hom_associative(a).pass) continue;
        rendered.push_back(io::render_algebra_file(io::from_hom_assoc(a)));
      }
    }
  }
  if (rendered.size() < count) {
    rep.add("found", std::to_string(rendered.size()));
    rep.result = "exhausted";
    return emit(rep, kExhausted);
  }
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    std::string path = prefix + "-" + std::to_string(i + 1) + ".alg";
    io::write_file(path, rendered[i]);
    rep.add("output", path);
    rep.add("output-digest", io::fnv1a_hex(rendered[i]));
  }
  rep.result = "pass";
  return emit(rep, kPass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for involutive Hom-associative and Hom-Lie algebras"};
  app.require_subcommand(1);
  Emit emit;
  app.add_flag("--json", emit.json, "emit the report as JSON");

  std::string path, out = "out.alg", lpath, mpath, apath;
  std::size_t degree = 3, maxlen = 2, dim = 2, count = 1;
  std::uint64_t seed = 20240817;
  std::string mode = "yau-twist", kind = "hom-lie", variant = "mixed", prefix = "generated";
  bool nonabelian = false;

  auto* c_check = app.add_subcommand("check", "run the full axiom suite on an algebra file");
  c_check->add_option("file", path)->required();

  auto* c_comm = app.add_subcommand("commutator", "commutator Hom-Lie algebra of a Hom-associative algebra");
  c_comm->add_option("file", path)->required();
  c_comm->add_option("out", out);

  auto* c_semi = app.add_subcommand("semidirect", "semidirect product from an action file");
  c_semi->add_option("actor", lpath)->required();
  c_semi->add_option("target", mpath)->required();
  c_semi->add_option("action", apath)->required();
  c_semi->add_option("out", out);

  auto* c_env = app.add_subcommand("envelope", "truncated universal enveloping algebra");
  c_env->add_option("file", path)->required();
  c_env->add_option("--degree", degree);

  auto* c_ha = app.add_subcommand("hnn-assoc", "HNN-extension certificate, associative case");
  c_ha->add_option("file", path)->required();
  c_ha->add_option("--maxlen", maxlen);
  c_ha->add_option("--variant", variant)->check(CLI::IsMember({"mixed", "twisted-both"}));

  auto* c_hl = app.add_subcommand("hnn-lie", "HNN-extension certificate, Hom-Lie case");
  c_hl->add_option("file", path)->required();
  c_hl->add_option("--degree", degree);
  c_hl->add_option("--maxlen", maxlen);

  auto* c_gen = app.add_subcommand("generate", "emit checker-validated algebra files");
  c_gen->add_option("--mode", mode)->check(CLI::IsMember({"yau-twist", "random-search"}));
  c_gen->add_option("--kind", kind)->check(CLI::IsMember({"hom-lie", "hom-associative"}));
  c_gen->add_option("--dim", dim);
  c_gen->add_option("--count", count);
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--out", prefix);
  c_gen->add_flag("--nonabelian", nonabelian);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return kInvalidInput;
  }

  try {
    if (c_check->parsed()) return cmd_check(path, emit);
    if (c_comm->parsed()) return cmd_commutator(path, out, emit);
    if (c_semi->parsed()) return cmd_semidirect(lpath, mpath, apath, out, emit);
    if (c_env->parsed()) return cmd_envelope(path, degree, emit);
    if (c_ha->parsed()) return cmd_hnn_assoc(path, maxlen, variant, emit);
    if (c_hl->parsed()) return cmd_hnn_lie(path, degree, maxlen, emit);
    if (c_gen->parsed())
      return cmd_generate(mode, kind, dim, count, seed, nonabelian, prefix, emit);
  } catch (const io::parse_error& e) {
    io::ReportFile rep;
    rep.command = "error";
    rep.add("error", e.what());
    rep.result = "invalid-input";
    std::cout << (emit.json ? rep.render_json() : rep.render_text());
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    io::ReportFile rep;
    rep.command = "error";
    rep.add("error", e.what());
    rep.result = "invalid-input";
    std::cout << (emit.json ? rep.render_json() : rep.render_text());
    return kInvalidInput;
  } catch (const std::exception& e) {
    io::ReportFile rep;
    rep.command = "error";
    rep.add("error", e.what());
    rep.result = "fail";
    std::cout << (emit.json ? rep.render_json() : rep.render_text());
    return kMathFail;
  }
  return kInvalidInput;
}
