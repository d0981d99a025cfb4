#include "homext/homalg.hpp"

#include <stdexcept>

namespace homext::homalg {

using exactlin::EchelonBasis;
using exactlin::is_zero;
using exactlin::mat_apply;
using exactlin::mat_mul;
using exactlin::mat_sub;
using exactlin::unit_vec;
using exactlin::vec_add;
using exactlin::vec_sub;
using exactlin::zero_vec;

Vec Tensor3::mult(const Vec& u, const Vec& v) const {
  if (u.size() != dim || v.size() != dim) throw std::invalid_argument("Tensor3::mult: size");
  Vec r(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      Rational f = u[i] * v[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational& cijk = at(i, j, k);
        if (cijk != 0) r[k] += f * cijk;
      }
    }
  }
  return r;
}

bool Tensor3::is_skew() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (at(i, j, k) != -at(j, i, k)) return false;
  return true;
}

std::vector<std::string> default_names(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

HomAssociativeAlgebra::HomAssociativeAlgebra(HomModule m, Tensor3 t,
                                             std::vector<std::string> names)
    : module(std::move(m)), table(std::move(t)), basis_names(std::move(names)) {
  if (table.dim != module.dim)
    throw std::invalid_argument("HomAssociativeAlgebra: tensor dimension mismatch");
  if (basis_names.empty()) basis_names = default_names(module.dim);
  if (basis_names.size() != module.dim)
    throw std::invalid_argument("HomAssociativeAlgebra: basis name count mismatch");
}

HomLieAlgebra::HomLieAlgebra(HomModule m, Tensor3 b, std::vector<std::string> names)
    : module(std::move(m)), bracket(std::move(b)), basis_names(std::move(names)) {
  if (bracket.dim != module.dim)
    throw std::invalid_argument("HomLieAlgebra: tensor dimension mismatch");
  if (!bracket.is_skew())
    throw std::invalid_argument("HomLieAlgebra: bracket tensor is not skew-symmetric");
  if (basis_names.empty()) basis_names = default_names(module.dim);
  if (basis_names.size() != module.dim)
    throw std::invalid_argument("HomLieAlgebra: basis name count mismatch");
}

SubspaceData::SubspaceData(std::size_t parent, std::vector<Vec> b)
    : parent_dim(parent), basis(std::move(b)) {
  EchelonBasis ech(parent_dim);
  for (const auto& v : basis) {
    if (v.size() != parent_dim) throw std::invalid_argument("SubspaceData: vector size mismatch");
    if (!ech.insert(v)) throw std::invalid_argument("SubspaceData: basis vectors are dependent");
  }
}

Mat SubspaceData::basis_matrix() const {
  Mat m(parent_dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < parent_dim; ++i) m.at(i, j) = basis[j][i];
  return m;
}

SubspaceData SubspaceData::whole(std::size_t parent) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < parent; ++i) b.push_back(unit_vec(parent, i));
  return SubspaceData(parent, std::move(b));
}

SubspaceData SubspaceData::zero(std::size_t parent) { return SubspaceData(parent, {}); }

DerivationData::DerivationData(Mat m, std::size_t power) : map(std::move(m)), k(power) {
  if (map.rows != map.cols) throw std::invalid_argument("DerivationData: map must be square");
}

std::string variant_name(ThetaVariant v) {
  return v == ThetaVariant::twisted_both ? "twisted-both" : "mixed";
}

namespace {

Mat twist_power(const Mat& alpha, std::size_t k) {
  Mat p = Mat::identity(alpha.rows);
  for (std::size_t i = 0; i < k; ++i) p = mat_mul(p, alpha);
  return p;
}

}  // namespace

AxiomReport check_hom_associative(const HomAssociativeAlgebra& a) {
  AxiomReport rep;
  const std::size_t n = a.dim();
  rep.mark_checked("hom-associativity");
  for (std::size_t i = 0; i < n && !rep.axiom_failed("hom-associativity"); ++i) {
    Vec ai = a.module.alpha.col(i);
    for (std::size_t j = 0; j < n && !rep.axiom_failed("hom-associativity"); ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.mult(ai, a.mult(unit_vec(n, j), unit_vec(n, k)));
        Vec rhs = a.mult(a.mult(unit_vec(n, i), unit_vec(n, j)), a.module.alpha.col(k));
        Vec residual = vec_sub(lhs, rhs);
        if (!is_zero(residual)) {
          rep.add_violation("hom-associativity", {i, j, k}, residual);
          break;
        }
      }
    }
  }
  rep.mark_checked("multiplicativity");
  for (std::size_t i = 0; i < n && !rep.axiom_failed("multiplicativity"); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = a.twist(a.mult(unit_vec(n, i), unit_vec(n, j)));
      Vec rhs = a.mult(a.module.alpha.col(i), a.module.alpha.col(j));
      Vec residual = vec_sub(lhs, rhs);
      if (!is_zero(residual)) {
        rep.add_violation("multiplicativity", {i, j}, residual);
        break;
      }
    }
  }
  rep.absorb(exactlin::check_hom_module(a.module));
  return rep;
}

AxiomReport check_hom_lie_table(const HomModule& module, const Tensor3& bracket) {
  AxiomReport rep;
  const std::size_t n = module.dim;
  if (bracket.dim != n) throw std::invalid_argument("check_hom_lie_table: dimension mismatch");
  rep.mark_checked("skew-symmetry");
  for (std::size_t i = 0; i < n && !rep.axiom_failed("skew-symmetry"); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Vec residual(n);
      bool bad = false;
      for (std::size_t k = 0; k < n; ++k) {
        residual[k] = bracket.at(i, j, k) + bracket.at(j, i, k);
        if (residual[k] != 0) bad = true;
      }
      if (bad) {
        rep.add_violation("skew-symmetry", {i, j}, residual);
        break;
      }
    }
  rep.mark_checked("hom-jacobi");
  for (std::size_t i = 0; i < n && !rep.axiom_failed("hom-jacobi"); ++i) {
    Vec bi = module.alpha.col(i);
    for (std::size_t j = 0; j < n && !rep.axiom_failed("hom-jacobi"); ++j) {
      Vec bj = module.alpha.col(j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec bk = module.alpha.col(k);
        Vec sum = bracket.mult(bi, bracket.mult(unit_vec(n, j), unit_vec(n, k)));
        sum = vec_add(sum, bracket.mult(bj, bracket.mult(unit_vec(n, k), unit_vec(n, i))));
        sum = vec_add(sum, bracket.mult(bk, bracket.mult(unit_vec(n, i), unit_vec(n, j))));
        if (!is_zero(sum)) {
          rep.add_violation("hom-jacobi", {i, j, k}, sum);
          break;
        }
      }
    }
  }
  rep.mark_checked("multiplicativity");
  for (std::size_t i = 0; i < n && !rep.axiom_failed("multiplicativity"); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = mat_apply(module.alpha, bracket.mult(unit_vec(n, i), unit_vec(n, j)));
      Vec rhs = bracket.mult(module.alpha.col(i), module.alpha.col(j));
      Vec residual = vec_sub(lhs, rhs);
      if (!is_zero(residual)) {
        rep.add_violation("multiplicativity", {i, j}, residual);
        break;
      }
    }
  }
  rep.absorb(exactlin::check_hom_module(module));
  return rep;
}

AxiomReport check_hom_lie(const HomLieAlgebra& l) {
  return check_hom_lie_table(l.module, l.bracket);
}

HomLieAlgebra commutator_hom_lie(const HomAssociativeAlgebra& a) {
  AxiomReport rep = check_hom_associative(a);
  if (!rep.pass)
    throw std::invalid_argument("commutator_hom_lie: input fails " + rep.violations.front().axiom);
  Tensor3 b(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        b.at(i, j, k) = a.table.at(i, j, k) - a.table.at(j, i, k);
  return HomLieAlgebra(a.module, std::move(b), a.basis_names);
}

namespace {

// closure checks shared by the subalgebra/ideal variants
void check_closure(AxiomReport& rep, const std::string& axiom, const Tensor3& prod,
                   const SubspaceData& s, bool left_all, bool right_all) {
  const std::size_t n = s.parent_dim;
  EchelonBasis span(n);
  for (const auto& v : s.basis) span.insert(v);
  rep.mark_checked(axiom);
  const std::size_t lcount = left_all ? n : s.dim();
  const std::size_t rcount = right_all ? n : s.dim();
  for (std::size_t p = 0; p < lcount; ++p) {
    Vec u = left_all ? unit_vec(n, p) : s.basis[p];
    for (std::size_t q = 0; q < rcount; ++q) {
      Vec v = right_all ? unit_vec(n, q) : s.basis[q];
      Vec w = prod.mult(u, v);
      Vec residual = span.reduce(w);
      if (!is_zero(residual)) {
        rep.add_violation(axiom, {p, q}, residual);
        return;
      }
    }
  }
}

void check_twist_stable(AxiomReport& rep, const Mat& alpha, const SubspaceData& s) {
  EchelonBasis span(s.parent_dim);
  for (const auto& v : s.basis) span.insert(v);
  rep.mark_checked("twist-stability");
  for (std::size_t p = 0; p < s.dim(); ++p) {
    Vec residual = span.reduce(mat_apply(alpha, s.basis[p]));
    if (!is_zero(residual)) {
      rep.add_violation("twist-stability", {p}, residual);
      return;
    }
  }
}

}  // namespace

AxiomReport check_subalgebra(const HomAssociativeAlgebra& a, const SubspaceData& s) {
  if (s.parent_dim != a.dim()) throw std::invalid_argument("check_subalgebra: dimension");
  AxiomReport rep;
  check_closure(rep, "product-closure", a.table, s, false, false);
  check_twist_stable(rep, a.module.alpha, s);
  return rep;
}

AxiomReport check_ideal(const HomAssociativeAlgebra& a, const SubspaceData& s) {
  if (s.parent_dim != a.dim()) throw std::invalid_argument("check_ideal: dimension");
  AxiomReport rep;
  check_closure(rep, "left-absorption", a.table, s, true, false);
  check_closure(rep, "right-absorption", a.table, s, false, true);
  check_twist_stable(rep, a.module.alpha, s);
  return rep;
}

AxiomReport check_lie_subalgebra(const HomLieAlgebra& l, const SubspaceData& s) {
  if (s.parent_dim != l.dim()) throw std::invalid_argument("check_lie_subalgebra: dimension");
  AxiomReport rep;
  check_closure(rep, "bracket-closure", l.bracket, s, false, false);
  check_twist_stable(rep, l.module.alpha, s);
  return rep;
}

AxiomReport check_lie_ideal(const HomLieAlgebra& l, const SubspaceData& s) {
  if (s.parent_dim != l.dim()) throw std::invalid_argument("check_lie_ideal: dimension");
  AxiomReport rep;
  check_closure(rep, "bracket-absorption", l.bracket, s, false, true);
  check_twist_stable(rep, l.module.alpha, s);
  return rep;
}

HomAssociativeAlgebra quotient_algebra(const HomAssociativeAlgebra& a, const SubspaceData& ideal) {
  AxiomReport ok = check_ideal(a, ideal);
  if (!ok.pass)
    throw std::invalid_argument("quotient_algebra: not a Hom-ideal (" +
                                ok.violations.front().axiom + ")");
  const std::size_t n = a.dim();
  // complement: first coordinate vectors independent of the ideal
  EchelonBasis ech(n);
  for (const auto& v : ideal.basis) ech.insert(v);
  std::vector<Vec> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (ech.insert(unit_vec(n, i))) comp.push_back(unit_vec(n, i));
  const std::size_t q = comp.size();
  // coordinates: solve [ideal | comp] x = v, take the last q entries
  std::vector<Vec> cols = ideal.basis;
  cols.insert(cols.end(), comp.begin(), comp.end());
  Mat basis_change = Mat::from_cols(cols);
  Mat inv = *exactlin::inverse(basis_change);
  Mat proj(q, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) proj.at(i, j) = inv.at(ideal.dim() + i, j);

  Tensor3 table(q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec w = mat_apply(proj, a.mult(comp[i], comp[j]));
      for (std::size_t k = 0; k < q; ++k) table.at(i, j, k) = w[k];
    }
  Mat alpha_q(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    Vec w = mat_apply(proj, a.twist(comp[j]));
    for (std::size_t i = 0; i < q; ++i) alpha_q.at(i, j) = w[i];
  }
  return HomAssociativeAlgebra(HomModule(q, alpha_q), table, default_names(q, "q"));
}

AxiomReport check_alpha_k_derivation(const HomAssociativeAlgebra& a, const DerivationData& d) {
  if (d.map.rows != a.dim()) throw std::invalid_argument("check_alpha_k_derivation: shape");
  AxiomReport rep;
  const std::size_t n = a.dim();
  Mat tk = twist_power(a.module.alpha, d.k);
  rep.mark_checked("twist-commutation");
  Mat comm = mat_sub(mat_mul(d.map, tk), mat_mul(tk, d.map));
  for (std::size_t j = 0; j < n; ++j)
    if (!is_zero(comm.col(j))) {
      rep.add_violation("twist-commutation", {j}, comm.col(j));
      break;
    }
  rep.mark_checked("twisted-leibniz");
  for (std::size_t i = 0; i < n && !rep.axiom_failed("twisted-leibniz"); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = mat_apply(d.map, a.mult(unit_vec(n, i), unit_vec(n, j)));
      Vec rhs = vec_add(a.mult(d.map.col(i), tk.col(j)), a.mult(tk.col(i), d.map.col(j)));
      Vec residual = vec_sub(lhs, rhs);
      if (!is_zero(residual)) {
        rep.add_violation("twisted-leibniz", {i, j}, residual);
        break;
      }
    }
  return rep;
}

AxiomReport check_beta_k_derivation(const HomLieAlgebra& l, const DerivationData& d) {
  if (d.map.rows != l.dim()) throw std::invalid_argument("check_beta_k_derivation: shape");
  AxiomReport rep;
  const std::size_t n = l.dim();
  Mat tk = twist_power(l.module.alpha, d.k);
  rep.mark_checked("twist-commutation");
  Mat comm = mat_sub(mat_mul(d.map, tk), mat_mul(tk, d.map));
  for (std::size_t j = 0; j < n; ++j)
    if (!is_zero(comm.col(j))) {
      rep.add_violation("twist-commutation", {j}, comm.col(j));
      break;
    }
  rep.mark_checked("twisted-leibniz");
  for (std::size_t i = 0; i < n && !rep.axiom_failed("twisted-leibniz"); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = mat_apply(d.map, l.brk(unit_vec(n, i), unit_vec(n, j)));
      Vec rhs = vec_add(l.brk(d.map.col(i), tk.col(j)), l.brk(tk.col(i), d.map.col(j)));
      Vec residual = vec_sub(lhs, rhs);
      if (!is_zero(residual)) {
        rep.add_violation("twisted-leibniz", {i, j}, residual);
        break;
      }
    }
  return rep;
}

AxiomReport check_theta_derivation(const HomAssociativeAlgebra& a, const SubspaceData& b,
                                   const Mat& theta, const Mat& delta, ThetaVariant variant) {
  const std::size_t n = a.dim();
  const std::size_t s = b.dim();
  if (b.parent_dim != n || theta.rows != n || theta.cols != s || delta.rows != n ||
      delta.cols != s)
    throw std::invalid_argument("check_theta_derivation: shape mismatch");
  AxiomReport rep;
  AxiomReport sub = check_subalgebra(a, b);
  if (!sub.pass) {
    rep.absorb(sub);
    return rep;
  }
  // theta must be an algebra morphism on B; B-coordinates of products are
  // recovered by exact solve against the B basis.
  Mat bmat = b.basis_matrix();
  rep.mark_checked("theta-algebra-morphism");
  for (std::size_t p = 0; p < s && !rep.axiom_failed("theta-algebra-morphism"); ++p)
    for (std::size_t q = 0; q < s; ++q) {
      Vec prod = a.mult(b.basis[p], b.basis[q]);
      Vec prod_b = *exactlin::solve(bmat, prod);  // solvable: B is closed
      Vec lhs = mat_apply(theta, prod_b);
      Vec rhs = a.mult(theta.col(p), theta.col(q));
      Vec residual = vec_sub(lhs, rhs);
      if (!is_zero(residual)) {
        rep.add_violation("theta-algebra-morphism", {p, q}, residual);
        break;
      }
    }
  if (!rep.pass) return rep;

  const std::string axiom =
      variant == ThetaVariant::twisted_both ? "leibniz-twisted-both" : "leibniz-mixed";
  rep.mark_checked(axiom);
  for (std::size_t p = 0; p < s && !rep.axiom_failed(axiom); ++p)
    for (std::size_t q = 0; q < s; ++q) {
      Vec prod = a.mult(b.basis[p], b.basis[q]);
      Vec prod_b = *exactlin::solve(bmat, prod);
      Vec lhs = mat_apply(delta, prod_b);
      Vec rhs;
      if (variant == ThetaVariant::twisted_both)
        rhs = vec_add(a.mult(delta.col(p), theta.col(q)), a.mult(theta.col(p), delta.col(q)));
      else
        rhs = vec_add(a.mult(delta.col(p), b.basis[q]), a.mult(theta.col(p), delta.col(q)));
      Vec residual = vec_sub(lhs, rhs);
      if (!is_zero(residual)) {
        rep.add_violation(axiom, {p, q}, residual);
        break;
      }
    }
  return rep;
}

DerivationData adjoint(const HomLieAlgebra& l, const Vec& x) {
  const std::size_t n = l.dim();
  if (x.size() != n) throw std::invalid_argument("adjoint: vector size");
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec w = l.brk(x, unit_vec(n, j));
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = w[i];
  }
  return DerivationData(std::move(m), 1);
}

namespace {

Tensor3 conjugate_tensor(const Tensor3& t, const Mat& p, const Mat& pinv) {
  const std::size_t n = t.dim;
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = mat_apply(pinv, t.mult(p.col(i), p.col(j)));
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = w[k];
    }
  return out;
}

}  // namespace

HomAssociativeAlgebra conjugate(const HomAssociativeAlgebra& a, const Mat& p) {
  auto pinv = exactlin::inverse(p);
  if (!pinv) throw std::invalid_argument("conjugate: singular change of basis");
  Mat alpha = mat_mul(*pinv, mat_mul(a.module.alpha, p));
  return HomAssociativeAlgebra(HomModule(a.dim(), alpha),
                               conjugate_tensor(a.table, p, *pinv), a.basis_names);
}

HomLieAlgebra conjugate(const HomLieAlgebra& l, const Mat& p) {
  auto pinv = exactlin::inverse(p);
  if (!pinv) throw std::invalid_argument("conjugate: singular change of basis");
  Mat alpha = mat_mul(*pinv, mat_mul(l.module.alpha, p));
  return HomLieAlgebra(HomModule(l.dim(), alpha), conjugate_tensor(l.bracket, p, *pinv),
                       l.basis_names);
}

std::string render_linear(const Vec& v, const std::vector<std::string>& names) {
  if (v.size() != names.size()) throw std::invalid_argument("render_linear: size mismatch");
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (out.empty()) {
      if (v[i] == -1)
        out += "-";
      else if (v[i] != 1)
        out += exactlin::to_string(v[i]) + "*";
    } else {
      if (v[i] < 0)
        out += v[i] == -1 ? " - " : " - " + exactlin::to_string(-v[i]) + "*";
      else
        out += v[i] == 1 ? " + " : " + " + exactlin::to_string(v[i]) + "*";
    }
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace homext::homalg
