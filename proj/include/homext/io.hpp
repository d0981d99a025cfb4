#ifndef HOMEXT_IO_HPP
#define HOMEXT_IO_HPP

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "homext/hnn.hpp"
#include "homext/homalg.hpp"

namespace homext::io {

using exactlin::Mat;
using exactlin::Vec;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One stable-letter block of an hnn-associative input.
struct LetterBlock {
  std::string name;
  std::vector<Vec> b_rows;      // subalgebra basis vectors, A coordinates
  std::vector<Vec> theta_rows;  // row p = image of the p-th B basis vector
  std::vector<Vec> delta_rows;
  std::vector<Vec> x_rows;      // representatives, A coordinates
};

/// Line-oriented algebra description. Matrices are written row-per-image:
/// the i-th row of a "twist"/"derivation"/"theta" block is the image of the
/// i-th basis vector. Internally everything is column-action.
struct AlgebraFile {
  std::string kind;  // "hom-associative" | "hom-lie"
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Mat twist;  // column-action
  homalg::Tensor3 table;
  std::vector<std::pair<std::string, std::vector<Vec>>> subspaces;
  std::vector<std::tuple<std::string, std::size_t, Mat>> derivations;  // name, power, map
  std::vector<LetterBlock> letters;
};

AlgebraFile parse_algebra_file(const std::string& text);
std::string render_algebra_file(const AlgebraFile& f);

AlgebraFile from_hom_assoc(const homalg::HomAssociativeAlgebra& a);
AlgebraFile from_hom_lie(const homalg::HomLieAlgebra& l);

homalg::HomAssociativeAlgebra to_hom_assoc(const AlgebraFile& f);
/// raw pieces for the Hom-Lie checkers (skew violations stay reportable)
std::pair<exactlin::HomModule, homalg::Tensor3> to_hom_lie_raw(const AlgebraFile& f);
homalg::HomLieAlgebra to_hom_lie(const AlgebraFile& f);

const std::vector<Vec>* find_subspace(const AlgebraFile& f, const std::string& name);
hnn::HNNAssocData to_hnn_assoc_data(const AlgebraFile& f, homalg::ThetaVariant variant);

/// Hom-action description: "action" header, actor/target dims, table rows
/// "i j -> coefficients" for actor basis i acting on target basis j.
struct ActionFile {
  std::size_t dim_actor = 0;
  std::size_t dim_target = 0;
  std::vector<Mat> tensor;  // per actor basis vector
};
ActionFile parse_action_file(const std::string& text);
std::string render_action_file(const ActionFile& f);

/// Deterministic report: fixed key order, no timestamps, canonical rational
/// rendering. Identical inputs give identical bytes.
struct ReportFile {
  std::string command;
  std::vector<std::string> inputs;  // digests
  std::vector<std::pair<std::string, std::string>> fields;
  std::string result;  // pass | fail | invalid-input | exhausted

  void add(const std::string& key, const std::string& value) { fields.push_back({key, value}); }
  void add_axioms(const AxiomReport& rep, const std::vector<std::string>& witness_names);
  std::string render_text() const;
  std::string render_json() const;
};

std::string fnv1a_hex(const std::string& bytes);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace homext::io

#endif
