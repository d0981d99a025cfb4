#include "homext/term.hpp"

#include <stdexcept>

namespace homext::freepres {

Term term_leaf(int gen, int twist) {
  if (gen < 0) throw std::invalid_argument("term_leaf: negative generator");
  Term t;
  t.gen = gen;
  t.twist = twist;
  return t;
}

Term term_prod(const Term& l, const Term& r, int twist) {
  Term t;
  t.twist = twist;
  t.left = std::make_shared<Term>(l);
  t.right = std::make_shared<Term>(r);
  return t;
}

std::size_t term_degree(const Term& t) {
  if (t.is_leaf()) return 1;
  return term_degree(*t.left) + term_degree(*t.right);
}

bool term_equal(const Term& a, const Term& b) {
  if (a.twist != b.twist || a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.gen == b.gen;
  return term_equal(*a.left, *b.left) && term_equal(*a.right, *b.right);
}

bool is_normalized(const Term& t) {
  if (t.is_leaf()) return t.twist == 0 || t.twist == 1;
  return t.twist == 0 && is_normalized(*t.left) && is_normalized(*t.right);
}

namespace {

Term push(const Term& t, int inherited) {
  int total = ((t.twist + inherited) % 2 + 2) % 2;
  if (t.is_leaf()) return term_leaf(t.gen, total);
  return term_prod(push(*t.left, total), push(*t.right, total), 0);
}

}  // namespace

Term normalize_term(const Term& t) { return push(t, 0); }

namespace {

std::string render(const Term& t, const std::vector<std::string>& names, bool outer) {
  std::string body;
  if (t.is_leaf()) {
    if (t.gen < 0 || static_cast<std::size_t>(t.gen) >= names.size())
      throw std::invalid_argument("render_term: generator index out of range");
    body = names[t.gen];
    for (int i = 0; i < t.twist; ++i) body = "a(" + body + ")";
    return body;
  }
  body = render(*t.left, names, false) + "." + render(*t.right, names, false);
  if (t.twist % 2 != 0) return "a(" + body + ")";
  if (!outer) return "(" + body + ")";
  return body;
}

}  // namespace

std::string render_term(const Term& t, const std::vector<std::string>& names) {
  return render(t, names, true);
}

}  // namespace homext::freepres
