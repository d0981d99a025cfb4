#ifndef HOMEXT_REPORT_HPP
#define HOMEXT_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "homext/exactlin.hpp"

namespace homext {

/// One failed axiom instance: which axiom, at which basis tuple, and the
/// exact residual vector of the defining identity.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  exactlin::Vec residual;
};

/// Outcome of an axiom suite. Only the first failing tuple per axiom is
/// recorded; pass holds iff violations is empty.
struct AxiomReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<std::string> checked;  // axiom names that were evaluated

  void mark_checked(const std::string& axiom);
  void add_violation(const std::string& axiom, std::vector<std::size_t> witness,
                     exactlin::Vec residual);
  bool axiom_failed(const std::string& axiom) const;
  bool axiom_passed(const std::string& axiom) const;
  const Violation* first_violation(const std::string& axiom) const;
  void absorb(const AxiomReport& other);
  /// absorb with every axiom name prefixed, e.g. "t1:" for per-letter checks
  void absorb_prefixed(const AxiomReport& other, const std::string& prefix);
};

}  // namespace homext

#endif
