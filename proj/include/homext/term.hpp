#ifndef HOMEXT_TERM_HPP
#define HOMEXT_TERM_HPP

#include <memory>
#include <string>
#include <vector>

namespace homext::freepres {

/// Binary product tree over generators. Any subtree may carry a twist
/// marker; the normalized form pushes all markers to the leaves (by
/// multiplicativity) and reduces exponents mod 2 (by involutivity).
struct Term {
  int twist = 0;                        // twist exponent on this subtree
  int gen = -1;                         // generator index for leaves
  std::shared_ptr<const Term> left;     // null for leaves
  std::shared_ptr<const Term> right;

  bool is_leaf() const { return left == nullptr; }
};

Term term_leaf(int gen, int twist = 0);
Term term_prod(const Term& l, const Term& r, int twist = 0);

std::size_t term_degree(const Term& t);
bool term_equal(const Term& a, const Term& b);
bool is_normalized(const Term& t);

/// Push twist markers to the leaves and reduce exponents mod 2.
/// Idempotent; each rewrite strictly shrinks the internal-marker count.
Term normalize_term(const Term& t);

/// Canonical rendering, e.g. "a(g1).(g2.g1)" with a(.) the twist marker.
std::string render_term(const Term& t, const std::vector<std::string>& names);

}  // namespace homext::freepres

#endif
