#ifndef HOMEXT_GENERATE_HPP
#define HOMEXT_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homext/hnn.hpp"
#include "homext/homalg.hpp"

namespace homext::generate {

using exactlin::Mat;
using exactlin::Vec;
using homalg::HomAssociativeAlgebra;
using homalg::HomLieAlgebra;

/// --- fixed classical structures (alpha = id) ---

HomAssociativeAlgebra diag_assoc(std::size_t n);      // K^n componentwise
HomAssociativeAlgebra poly_trunc(std::size_t n);      // K[x]/(x^n), basis 1..x^{n-1}
HomAssociativeAlgebra mat2_assoc();                   // full 2x2 matrix algebra
HomAssociativeAlgebra upper2_assoc();                 // upper-triangular 2x2
HomAssociativeAlgebra null_assoc(std::size_t n);      // all products zero
HomAssociativeAlgebra group_c2();                     // group algebra of C2
HomAssociativeAlgebra dual_numbers();                 // span{1, x}, x^2 = 0

HomLieAlgebra abelian_lie(std::size_t n);
HomLieAlgebra solvable2();                            // [x,y] = y
HomLieAlgebra heisenberg();                           // [x,y] = z
HomLieAlgebra sl2();                                  // [h,e]=2e, [h,f]=-2f, [e,f]=h
HomLieAlgebra sl2_plus_center();

/// sl2 with the bracket twisted by the swap involution
/// beta(h) = -h, beta(e) = f, beta(f) = e.
HomLieAlgebra yau_twisted_sl2();

/// --- Yau twist: x *' y = alpha(x * y) with alpha an involutive
/// automorphism of the classical structure ---

HomAssociativeAlgebra yau_twist(const HomAssociativeAlgebra& a, const Mat& alpha);
HomLieAlgebra yau_twist(const HomLieAlgebra& l, const Mat& beta);

/// catalog entries paired with their involutive automorphisms (id included)
struct AssocCatalogEntry {
  HomAssociativeAlgebra alg;
  std::vector<Mat> involutions;
  std::string name;
};
struct LieCatalogEntry {
  HomLieAlgebra alg;
  std::vector<Mat> involutions;
  std::string name;
};

std::vector<AssocCatalogEntry> assoc_catalog(std::size_t max_dim);
std::vector<LieCatalogEntry> lie_catalog(std::size_t max_dim);

/// Twist-construction generators. Every sample is a Yau twist of a catalog
/// entry, optionally conjugated by a signed permutation, and has passed the
/// full checker suite before being returned.
std::vector<HomAssociativeAlgebra> generate_hom_assoc(std::uint64_t seed, std::size_t count,
                                                      std::size_t max_dim);
std::vector<HomLieAlgebra> generate_hom_lie(std::uint64_t seed, std::size_t count,
                                            std::size_t max_dim);

/// Basis of the space of beta^k-derivations (solved exactly).
std::vector<Mat> derivation_space(const HomLieAlgebra& l, std::size_t k);

Mat signed_permutation(std::mt19937_64& rng, std::size_t n);

/// --- HNN instance search ---

/// Classical (alpha = id) HNN data sets found by structured search over the
/// catalog: subalgebras, morphism candidates, delta solved from the chosen
/// Leibniz variant, free bases by exhaustive small search. Everything
/// returned has passed validate_hnn_assoc_data.
struct SearchedInstance {
  hnn::HNNAssocData data;
  std::string description;
  bool theta_is_inclusion = true;
  bool delta_is_zero = true;
};

std::vector<SearchedInstance> hnn_search_classical(std::uint64_t seed, std::size_t max_dim,
                                                   std::size_t limit,
                                                   homalg::ThetaVariant variant);

/// Solve the linear system for delta : B -> A under the given variant
/// (Leibniz rule plus twist-commutation); returns a basis of solutions.
std::vector<Mat> solve_delta_space(const HomAssociativeAlgebra& a,
                                   const homalg::SubspaceData& b, const Mat& theta,
                                   homalg::ThetaVariant variant);

/// Exhaustive small search for a free basis of A/B: first candidate set (in
/// lex order over unit cosets and pairwise sums) accepted by
/// check_free_basis, if any. Intended for parent dimension <= 4.
std::optional<std::vector<Vec>> find_free_basis(const construct::CosetHomModule& coset);

/// Outcome of the Leibniz-variant discrimination experiment: run
/// check_hnn_relation on searched instances under both variants and see
/// which one closes the relation exactly.
struct VariantExperiment {
  homalg::ThetaVariant selected = homalg::ThetaVariant::mixed;
  bool discriminating = false;  // false: both variants closed everywhere
  std::string report;           // canonical text, pinned by a golden file
};

VariantExperiment theta_variant_experiment();

}  // namespace homext::generate

#endif
