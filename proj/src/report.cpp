#include "homext/report.hpp"

#include <algorithm>

namespace homext {

void AxiomReport::mark_checked(const std::string& axiom) {
  if (std::find(checked.begin(), checked.end(), axiom) == checked.end()) checked.push_back(axiom);
}

void AxiomReport::add_violation(const std::string& axiom, std::vector<std::size_t> witness,
                                exactlin::Vec residual) {
  mark_checked(axiom);
  // keep only the first failing tuple per axiom
  if (axiom_failed(axiom)) return;
  pass = false;
  violations.push_back({axiom, std::move(witness), std::move(residual)});
}

bool AxiomReport::axiom_failed(const std::string& axiom) const {
  return first_violation(axiom) != nullptr;
}

bool AxiomReport::axiom_passed(const std::string& axiom) const {
  return std::find(checked.begin(), checked.end(), axiom) != checked.end() &&
         !axiom_failed(axiom);
}

const Violation* AxiomReport::first_violation(const std::string& axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

void AxiomReport::absorb(const AxiomReport& other) {
  for (const auto& name : other.checked) mark_checked(name);
  for (const auto& v : other.violations)
    if (!axiom_failed(v.axiom)) {
      pass = false;
      violations.push_back(v);
    }
}

void AxiomReport::absorb_prefixed(const AxiomReport& other, const std::string& prefix) {
  for (const auto& name : other.checked) mark_checked(prefix + name);
  for (const auto& v : other.violations)
    if (!axiom_failed(prefix + v.axiom)) {
      pass = false;
      violations.push_back({prefix + v.axiom, v.witness, v.residual});
    }
}

}  // namespace homext
