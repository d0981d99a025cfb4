#ifndef HOMEXT_HNN_HPP
#define HOMEXT_HNN_HPP

#include <string>
#include <vector>

#include "homext/construct.hpp"
#include "homext/freepres.hpp"
#include "homext/homalg.hpp"

namespace homext::hnn {

using exactlin::Mat;
using exactlin::Vec;
using freepres::EmbeddingCertificate;
using homalg::HomAssociativeAlgebra;
using homalg::HomLieAlgebra;
using homalg::SubspaceData;
using homalg::ThetaVariant;

/// One stable letter: a subalgebra B with an injective morphism theta and a
/// theta-derivation delta (both B -> A, given as dim(A) x dim(B) matrices on
/// the B basis), plus the chosen free-basis representatives X of A/B in A/B
/// coordinates.
struct HNNLetter {
  std::string name;
  SubspaceData B;
  Mat theta;
  Mat delta;
  std::vector<Vec> X;
};

struct HNNAssocData {
  HomAssociativeAlgebra A;
  std::vector<HNNLetter> letters;
  ThetaVariant variant = ThetaVariant::mixed;
};

/// All hypotheses of the associative HNN-extension, each reported as a
/// named axiom with a witness on failure. Per-letter hypothesis names are
/// prefixed with the letter name.
AxiomReport validate_hnn_assoc_data(const HNNAssocData& data);

/// Symbolic presentation record H = <A, B_i, t_i, delta_i, theta_i>.
struct HNNAssocPresentation {
  HNNAssocData data;
  std::string render() const;
};
HNNAssocPresentation hnn_assoc_presentation(const HNNAssocData& data);

/// Normal sequence: ((i_1, x_1), ..., (i_r, x_r)) indexing the chain
/// (t_{i1} * a(x_1)) * ... * (t_{ir} * a(x_r)); the empty sequence tags the
/// base copy of A.
struct NormalSequence {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::size_t length() const { return entries.size(); }
};
bool operator==(const NormalSequence& a, const NormalSequence& b);

/// All sequences of length 0..r in length-then-lex order.
std::vector<NormalSequence> enumerate_normal_sequences(const HNNAssocData& data, std::size_t r);

/// The free left Hom-A-module on the truncated normal sequences. Basis
/// index = seq_index * dim(A) + a_index.
struct TruncatedQ {
  HNNAssocData data;
  std::size_t r = 0;
  std::vector<construct::CosetHomModule> cosets;  // per letter
  std::vector<construct::FreeBasisWitness> witnesses;
  std::vector<NormalSequence> seqs;
  Mat alpha_q;

  std::size_t dim_a() const { return data.A.dim(); }
  std::size_t dim() const { return seqs.size() * dim_a(); }
  std::size_t index(std::size_t seq, std::size_t a) const { return seq * dim_a() + a; }
  std::size_t seq_index(const NormalSequence& s) const;
};

/// Builds Q and its twist. Requires every letter's twist to map span(X)
/// into itself in A/B (scalar re-expansion); rejects otherwise, since the
/// componentwise twist formula leaves the basis tag set in that case.
TruncatedQ build_Q(const HNNAssocData& data, std::size_t r);

/// Linear operator on Q together with the subspace of basis columns on
/// which it is trusted (truncation can clip images of the rest).
struct EndoOperator {
  Mat m;
  std::vector<char> valid;  // per basis column

  bool valid_on(const Vec& v) const;
};

EndoOperator left_mult_op(const TruncatedQ& q, const Vec& a);
EndoOperator sigma_op(const TruncatedQ& q, std::size_t letter);

struct RelationResidual {
  std::size_t letter = 0;
  std::size_t b_index = 0;  // B-basis element
  bool zero = false;
  std::vector<std::size_t> witness;  // (row, col) of a nonzero entry if any
};

/// Residual of sigma_i o b-bar - theta_i(b)-bar o sigma_i - delta_i(b)-bar
/// on the validity domain (columns of sequence length < r).
RelationResidual check_hnn_relation(const TruncatedQ& q, std::size_t letter, const Vec& b_coords);

EmbeddingCertificate embedding_certificate_assoc(const HNNAssocData& data, std::size_t r);

/// --- Hom-Lie side ---

/// g with a subalgebra s and a derivation d : s -> g (d given as a square
/// matrix on g; only its restriction to s is used).
struct HNNLieData {
  HomLieAlgebra g;
  SubspaceData s;
  Mat d;
};

AxiomReport validate_hnn_lie_data(const HNNLieData& data);

/// Presentation record h = <g, t : d(s) = [t,s], s in s> with twist fixing t.
struct HNNLiePresentation {
  HNNLieData data;
  std::vector<std::string> generator_names;
  std::vector<std::string> relations;  // rendered [t,s_j] = d(s_j) lines
  std::string render() const;
};
HNNLiePresentation hnn_lie_presentation(const HNNLieData& data);

/// M = <U_g, U_s, t, delta>: the enveloping algebra of g with a letter t
/// adjoined and t*b - b*t = delta(b) imposed for b over the truncated basis
/// of the image of U_s.
struct TruncatedM {
  HNNLieData data;
  std::size_t degree = 0;
  std::size_t seq_bound = 0;  // recorded truncation parameter
  freepres::EnvelopingAlgebra env_g;
  freepres::TruncatedPresentation M;          // on g-generators plus t
  std::vector<Vec> us_basis;                  // image-of-U_s basis, U_g free coords
  std::vector<Vec> us_delta;                  // extended-derivation values
  std::vector<std::string> names;             // generator names incl. t

  std::size_t t_generator() const { return data.g.dim(); }
};

TruncatedM build_M(const HNNLieData& data, std::size_t degree, std::size_t seq_bound);

EmbeddingCertificate embedding_certificate_lie(const HNNLieData& data, std::size_t degree,
                                               std::size_t seq_bound);

/// Entry-by-entry comparison of the bracket table read off the s = g HNN
/// presentation against the semidirect product with the one-dimensional
/// algebra acting through d.
AxiomReport crosscheck_semidirect(const HomLieAlgebra& g, const Mat& d);

}  // namespace homext::hnn

#endif
