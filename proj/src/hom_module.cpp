#include "homext/hom_module.hpp"

namespace homext::exactlin {

AxiomReport check_hom_module(const HomModule& v) {
  AxiomReport rep;
  rep.mark_checked("involutivity");
  Mat sq = mat_mul(v.alpha, v.alpha);
  for (std::size_t i = 0; i < v.dim; ++i) {
    Vec residual = vec_sub(sq.col(i), unit_vec(v.dim, i));
    if (!is_zero(residual)) {
      rep.add_violation("involutivity", {i}, residual);
      return rep;
    }
  }
  return rep;
}

AxiomReport check_hom_morphism(const LinearMapBetween& f) {
  AxiomReport rep;
  rep.mark_checked("hom-module-morphism");
  Mat lhs = mat_mul(f.matrix, f.domain.alpha);
  Mat rhs = mat_mul(f.codomain.alpha, f.matrix);
  for (std::size_t j = 0; j < f.domain.dim; ++j) {
    Vec residual = vec_sub(lhs.col(j), rhs.col(j));
    if (!is_zero(residual)) {
      rep.add_violation("hom-module-morphism", {j}, residual);
      return rep;
    }
  }
  return rep;
}

}  // namespace homext::exactlin
