#ifndef HOMEXT_CONSTRUCT_HPP
#define HOMEXT_CONSTRUCT_HPP

#include <vector>

#include "homext/homalg.hpp"

namespace homext::construct {

using exactlin::Mat;
using exactlin::Vec;
using homalg::HomAssociativeAlgebra;
using homalg::HomLieAlgebra;
using homalg::SubspaceData;

/// Hom-action of (l, alpha_l) on (m, alpha_m): one target-square matrix per
/// actor basis vector, (e_x acting on m)_coords = tensor[x] * m.
struct HomAction {
  HomLieAlgebra actor;
  HomLieAlgebra target;
  std::vector<Mat> tensor;

  HomAction(HomLieAlgebra l, HomLieAlgebra m, std::vector<Mat> t);
  Vec act(const Vec& x, const Vec& m) const;
  static HomAction zero(HomLieAlgebra l, HomLieAlgebra m);
  /// adjoint action of l on itself
  static HomAction adjoint(const HomLieAlgebra& l);
  /// 1-dim actor span{t} with identity twist acting through the map d
  static HomAction one_dim_derivation(const HomLieAlgebra& m, const Mat& d);
};

/// Axioms (a)-(c) of the Hom-action definition, on all basis tuples.
AxiomReport check_hom_action(const HomAction& act);

/// m + l with bracket [(m1,x1),(m2,x2)] = ([m1,m2] + x1>m2 - x2>m1, [x1,x2])
/// and block-diagonal twist. Basis order: target coordinates first.
struct SemidirectProduct {
  HomLieAlgebra result;
  std::size_t m_dim = 0;
  std::size_t l_dim = 0;

  Vec embed_target(const Vec& m) const;
  Vec embed_actor(const Vec& x) const;
  SubspaceData target_subspace() const;
  SubspaceData actor_subspace() const;
};

SemidirectProduct semidirect_product(const HomAction& act);

/// Quotient Hom-module A/B with the left B-action b * (a+B) = b*a + B and
/// twist alpha(a+B) = alpha(a) + B. The complement basis (coset
/// representatives) is the deterministic greedy one: first coordinate
/// vectors independent of B.
struct CosetHomModule {
  HomAssociativeAlgebra parent;
  SubspaceData sub;
  std::vector<Vec> complement;  // representatives, parent coordinates
  Mat projection;               // parent -> quotient coordinates
  std::vector<Mat> action;      // per B-basis vector, quotient_dim square
  Mat quotient_twist;

  std::size_t quotient_dim() const { return complement.size(); }
  Vec project(const Vec& a) const { return exactlin::mat_apply(projection, a); }
  Vec lift(const Vec& coset) const;  // representative in parent coordinates
  Vec act(const Vec& b_coords, const Vec& coset) const;
};

CosetHomModule coset_module(const HomAssociativeAlgebra& a, const SubspaceData& b);

/// Verdict on "X is a free basis of the left Hom-B-module A/B": the map
/// (+)_x B -> A/B, (b_x) |-> sum_x b_x * x, must be bijective. For the zero
/// subalgebra this degenerates to X being a plain vector-space basis of A/B.
struct FreeBasisWitness {
  std::vector<Vec> X;  // quotient coordinates
  Mat verification;    // matrix of the assembled map
  bool pass = false;
  /// informational: the quotient twist maps span(X) into itself, so the
  /// normal-sequence twist can be expanded over X with scalar coefficients
  bool twist_span_stable = false;
  Mat twist_on_span;   // |X| square, only meaningful when twist_span_stable
};

FreeBasisWitness check_free_basis(const CosetHomModule& q, const std::vector<Vec>& x);

}  // namespace homext::construct

#endif
