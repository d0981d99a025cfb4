#ifndef HOMEXT_HOMALG_HPP
#define HOMEXT_HOMALG_HPP

#include <string>
#include <vector>

#include "homext/exactlin.hpp"
#include "homext/hom_module.hpp"
#include "homext/report.hpp"

namespace homext::homalg {

using exactlin::HomModule;
using exactlin::Mat;
using exactlin::Rational;
using exactlin::Vec;

/// Rank-3 structure-constant tensor: e_i * e_j = sum_k c[i][j][k] e_k.
struct Tensor3 {
  std::size_t dim = 0;
  std::vector<Rational> c;

  Tensor3() = default;
  explicit Tensor3(std::size_t n) : dim(n), c(n * n * n) {}

  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return c[(i * dim + j) * dim + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * dim + j) * dim + k];
  }
  /// Bilinear product of coordinate vectors.
  Vec mult(const Vec& u, const Vec& v) const;
  bool is_skew() const;
};

std::vector<std::string> default_names(std::size_t n, const std::string& prefix = "e");

struct HomAssociativeAlgebra {
  HomModule module;
  Tensor3 table;
  std::vector<std::string> basis_names;

  HomAssociativeAlgebra() = default;
  HomAssociativeAlgebra(HomModule m, Tensor3 t, std::vector<std::string> names = {});

  std::size_t dim() const { return module.dim; }
  Vec mult(const Vec& u, const Vec& v) const { return table.mult(u, v); }
  Vec twist(const Vec& u) const { return exactlin::mat_apply(module.alpha, u); }
};

/// Skew-symmetry of the stored tensor is a constructor invariant; use
/// check_hom_lie_table to get a report on raw (possibly non-skew) data.
struct HomLieAlgebra {
  HomModule module;
  Tensor3 bracket;
  std::vector<std::string> basis_names;

  HomLieAlgebra() = default;
  HomLieAlgebra(HomModule m, Tensor3 b, std::vector<std::string> names = {});

  std::size_t dim() const { return module.dim; }
  Vec brk(const Vec& u, const Vec& v) const { return bracket.mult(u, v); }
  Vec twist(const Vec& u) const { return exactlin::mat_apply(module.alpha, u); }
};

struct SubspaceData {
  std::size_t parent_dim = 0;
  std::vector<Vec> basis;  // linearly independent, enforced on construction

  SubspaceData() = default;
  SubspaceData(std::size_t parent, std::vector<Vec> b);

  std::size_t dim() const { return basis.size(); }
  Mat basis_matrix() const;  // parent_dim x dim, columns are the basis
  static SubspaceData whole(std::size_t parent);
  static SubspaceData zero(std::size_t parent);
};

struct DerivationData {
  Mat map;          // square, parent dimension
  std::size_t k = 1;  // twist power

  DerivationData() = default;
  DerivationData(Mat m, std::size_t power);
};

enum class ThetaVariant { twisted_both, mixed };
std::string variant_name(ThetaVariant v);

/// Axiom names used across reports: "hom-associativity", "multiplicativity",
/// "involutivity", "skew-symmetry", "hom-jacobi", ...

AxiomReport check_hom_associative(const HomAssociativeAlgebra& a);
AxiomReport check_hom_lie(const HomLieAlgebra& l);
/// Full Hom-Lie suite on raw tensor data, reporting skew-symmetry
/// violations instead of rejecting them.
AxiomReport check_hom_lie_table(const HomModule& module, const Tensor3& bracket);

/// Commutator functor: [x,y] = x*y - y*x with beta = alpha. Requires all
/// three Hom-associative axioms; throws std::invalid_argument naming the
/// failing axiom otherwise.
HomLieAlgebra commutator_hom_lie(const HomAssociativeAlgebra& a);

AxiomReport check_subalgebra(const HomAssociativeAlgebra& a, const SubspaceData& s);
AxiomReport check_ideal(const HomAssociativeAlgebra& a, const SubspaceData& s);
AxiomReport check_lie_subalgebra(const HomLieAlgebra& l, const SubspaceData& s);
AxiomReport check_lie_ideal(const HomLieAlgebra& l, const SubspaceData& s);

/// Quotient by a Hom-ideal on a deterministically chosen complement basis
/// (first coordinate vectors independent of the ideal).
HomAssociativeAlgebra quotient_algebra(const HomAssociativeAlgebra& a, const SubspaceData& ideal);

AxiomReport check_alpha_k_derivation(const HomAssociativeAlgebra& a, const DerivationData& d);
AxiomReport check_beta_k_derivation(const HomLieAlgebra& l, const DerivationData& d);

/// theta-twisted Leibniz rule for delta : B -> A, with theta : B -> A an
/// injective algebra-and-Hom-module morphism. theta and delta are given as
/// dim(A) x dim(B) matrices on the B-basis coordinates.
AxiomReport check_theta_derivation(const HomAssociativeAlgebra& a, const SubspaceData& b,
                                   const Mat& theta, const Mat& delta, ThetaVariant variant);

/// ad_x(y) = [x, y].
DerivationData adjoint(const HomLieAlgebra& l, const Vec& x);

/// Conjugate an algebra by an invertible change of basis P (new basis
/// vectors are the columns of P). Used by the coordinate-freeness tests.
HomAssociativeAlgebra conjugate(const HomAssociativeAlgebra& a, const Mat& p);
HomLieAlgebra conjugate(const HomLieAlgebra& l, const Mat& p);

/// "2*h + e - f" style rendering of a coordinate vector.
std::string render_linear(const Vec& v, const std::vector<std::string>& names);

}  // namespace homext::homalg

#endif
