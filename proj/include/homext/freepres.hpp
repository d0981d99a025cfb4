#ifndef HOMEXT_FREEPRES_HPP
#define HOMEXT_FREEPRES_HPP

#include <string>
#include <vector>

#include "homext/homalg.hpp"
#include "homext/term.hpp"

namespace homext::freepres {

using exactlin::HomModule;
using exactlin::Mat;
using exactlin::Rational;
using exactlin::Vec;

/// Coordinate space of the degree-truncated free algebra on a Hom-module:
/// one coordinate per plain term (binary tree shape x generator word) of
/// each degree up to the truncation, plus an optional degree-0 unit slot.
/// Terms with twisted leaves span the same space; vectorize() expands them
/// through the generator twist, so plain terms are the working basis.
///
/// Term order is degree, then tree shape, then leaf word -- the canonical
/// order every quotient-basis selection below refers to.
class FreeTermSpace {
 public:
  FreeTermSpace(HomModule generators, std::size_t max_degree, bool unital);

  std::size_t ngen() const { return gens_.dim; }
  std::size_t max_degree() const { return maxdeg_; }
  bool unital() const { return unital_; }
  const HomModule& generators() const { return gens_; }

  std::size_t dim() const { return dim_; }
  std::size_t shape_count(std::size_t degree) const;
  std::size_t terms_at(std::size_t degree) const;
  std::size_t degree_offset(std::size_t degree) const;
  std::size_t unit_index() const;

  std::size_t term_degree(std::size_t index) const;
  std::size_t term_index(std::size_t degree, std::size_t shape, std::size_t word) const;
  /// children of a composite term, as global indices
  std::pair<std::size_t, std::size_t> children(std::size_t index) const;

  /// formal product of basis terms (tree grafting); throws on degree overflow
  std::size_t graft(std::size_t i, std::size_t j) const;
  /// bilinear product of coordinate vectors; throws on degree overflow
  Vec mult(const Vec& u, const Vec& v) const;
  /// the free twist: leafwise generator twist, unit fixed
  Vec apply_twist(const Vec& v) const;
  const Mat& twist_block(std::size_t degree) const;

  std::size_t top_degree(const Vec& v) const;  // 0 for the zero vector
  Vec embed_degree1(const Vec& gen_coords) const;

  Term term_tree(std::size_t index) const;
  std::string render(std::size_t index, const std::vector<std::string>& names) const;
  std::string render_vec(const Vec& v, const std::vector<std::string>& names) const;
  /// expand a normalized symbolic term into coordinates
  Vec vectorize(const Term& t) const;

 private:
  struct Shape {
    std::size_t left_deg;
    std::size_t left_idx;
    std::size_t right_idx;
  };

  HomModule gens_;
  std::size_t maxdeg_;
  bool unital_;
  std::size_t dim_;
  std::vector<std::vector<Shape>> shapes_;     // per degree, degree >= 2
  std::vector<std::size_t> shape_counts_;      // per degree
  std::vector<std::size_t> pow_n_;             // ngen^k
  std::vector<std::size_t> offsets_;           // per degree
  std::vector<Mat> twist_blocks_;              // per degree >= 1

  std::size_t shape_index(std::size_t degree, std::size_t left_deg, std::size_t left_idx,
                          std::size_t right_idx) const;
};

/// Degree-truncated presented algebra: the free space modulo the ideal
/// generated by all Hom-associativity instances plus the given relation
/// vectors. The ideal is closed under products with terms as long as the
/// product stays inside the truncation, so every statement it certifies is
/// "up to degree d" -- elements of the full ideal reachable only through
/// higher degrees are invisible at this truncation.
class TruncatedPresentation {
 public:
  TruncatedPresentation(FreeTermSpace space, std::vector<Vec> relations);

  const FreeTermSpace& space() const { return space_; }
  const std::vector<Vec>& relations() const { return relations_; }
  const std::vector<std::size_t>& basis_terms() const { return basis_terms_; }
  std::size_t quotient_dim() const { return basis_terms_.size(); }
  std::size_t ideal_rank() const;

  /// linear idempotent projection killing the ideal
  Vec reduce(Vec v) const;
  bool in_ideal(const Vec& v) const { return exactlin::is_zero(reduce(v)); }

  Vec to_quotient(const Vec& v) const;    // reduced coordinates on basis_terms
  Vec from_quotient(const Vec& q) const;  // back to free coordinates

  /// reduce(u * v); throws on truncation overflow (top degrees must fit)
  Vec multiply(const Vec& u, const Vec& v) const;
  bool equal_mod_ideal(const Vec& u, const Vec& v) const;

  std::vector<std::size_t> degree_dims() const;  // index 0 = unit slot count
  std::vector<std::size_t> basis_terms_of_degree(std::size_t degree) const;

  /// whether the ideal is stable under the free twist; the quotient twist
  /// below is only meaningful when it is
  bool twist_stable() const { return twist_stable_; }
  const Mat& quotient_twist() const;

  std::string describe_basis(const std::vector<std::string>& names) const;

 private:
  FreeTermSpace space_;
  std::vector<Vec> relations_;
  exactlin::EchelonBasis ideal_;
  std::vector<std::size_t> basis_terms_;
  bool twist_stable_ = false;
  Mat quotient_twist_;

  void close_ideal();
};

/// Free involutive Hom-associative algebra on a Hom-module, truncated.
struct FreeAlgebraTrunc {
  TruncatedPresentation pres;

  FreeAlgebraTrunc(HomModule generators, std::size_t max_degree, bool unital = false)
      : pres(FreeTermSpace(std::move(generators), max_degree, unital), {}) {}

  /// quotient basis of the degree-k component; throws if k exceeds the
  /// truncation
  std::vector<std::size_t> graded_basis(std::size_t k) const;
  std::size_t graded_dim(std::size_t k) const { return graded_basis(k).size(); }
};

/// Exact computational witness for an injectivity claim at a truncation:
/// all named residuals must vanish identically and the kernel of the
/// candidate embedding must be zero. No tolerances anywhere.
struct EmbeddingCertificate {
  bool pass = false;
  std::size_t kernel_dim = 0;
  std::vector<std::pair<std::string, bool>> residuals;  // name -> exactly zero
  std::string truncation;

  bool residuals_all_zero() const {
    for (const auto& r : residuals)
      if (!r.second) return false;
    return true;
  }
};

/// Universal enveloping algebra of an involutive multiplicative Hom-Lie
/// algebra, truncated: the unital free algebra on g modulo
/// x_i x_j - x_j x_i - [x_i, x_j].
struct EnvelopingAlgebra {
  homalg::HomLieAlgebra g;
  std::size_t degree = 0;
  TruncatedPresentation pres;

  /// phi(e_i): image of the i-th generator, reduced free coordinates
  Vec phi(std::size_t i) const;
  Vec phi_of(const Vec& gen_coords) const;
};

EnvelopingAlgebra enveloping(const homalg::HomLieAlgebra& g, std::size_t degree);

/// PBW-style injectivity at the truncation: the generator images must stay
/// linearly independent in the quotient.
EmbeddingCertificate check_pbw_injectivity(const EnvelopingAlgebra& e);
EmbeddingCertificate check_pbw_injectivity(const TruncatedPresentation& pres,
                                            std::size_t ngen, const std::string& truncation);

/// Operator on the truncated quotient obtained from a derivation of g by
/// the twisted Leibniz rule D(xy) = D(x) a^k(y) + a^k(x) D(y).
struct ExtendedDerivation {
  Mat on_quotient;  // square on the quotient basis
  Mat on_free;      // square on the free coordinate space
};

ExtendedDerivation extend_derivation(const EnvelopingAlgebra& e,
                                     const homalg::DerivationData& d);

}  // namespace homext::freepres

#endif
