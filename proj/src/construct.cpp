#include "homext/construct.hpp"

#include <stdexcept>

namespace homext::construct {

using exactlin::EchelonBasis;
using exactlin::HomModule;
using exactlin::is_zero;
using exactlin::mat_apply;
using exactlin::mat_mul;
using exactlin::unit_vec;
using exactlin::vec_add;
using exactlin::vec_sub;
using homalg::Tensor3;

HomAction::HomAction(HomLieAlgebra l, HomLieAlgebra m, std::vector<Mat> t)
    : actor(std::move(l)), target(std::move(m)), tensor(std::move(t)) {
  if (tensor.size() != actor.dim())
    throw std::invalid_argument("HomAction: one matrix per actor basis vector required");
  for (const auto& mt : tensor)
    if (mt.rows != target.dim() || mt.cols != target.dim())
      throw std::invalid_argument("HomAction: tensor block shape mismatch");
}

Vec HomAction::act(const Vec& x, const Vec& m) const {
  if (x.size() != actor.dim() || m.size() != target.dim())
    throw std::invalid_argument("HomAction::act: size mismatch");
  Vec r(target.dim());
  for (std::size_t i = 0; i < actor.dim(); ++i) {
    if (x[i] == 0) continue;
    r = vec_add(r, exactlin::vec_scale(x[i], mat_apply(tensor[i], m)));
  }
  return r;
}

HomAction HomAction::zero(HomLieAlgebra l, HomLieAlgebra m) {
  std::vector<Mat> t(l.dim(), Mat::zero(m.dim(), m.dim()));
  return HomAction(std::move(l), std::move(m), std::move(t));
}

HomAction HomAction::adjoint(const HomLieAlgebra& l) {
  std::vector<Mat> t;
  for (std::size_t i = 0; i < l.dim(); ++i)
    t.push_back(homalg::adjoint(l, unit_vec(l.dim(), i)).map);
  return HomAction(l, l, std::move(t));
}

HomAction HomAction::one_dim_derivation(const HomLieAlgebra& m, const Mat& d) {
  HomLieAlgebra line(HomModule::identity_twist(1), Tensor3(1), {"t"});
  return HomAction(std::move(line), m, {d});
}

AxiomReport check_hom_action(const HomAction& act) {
  AxiomReport rep;
  const std::size_t nl = act.actor.dim();
  const std::size_t nm = act.target.dim();
  const Mat& al = act.actor.module.alpha;
  const Mat& am = act.target.module.alpha;

  rep.mark_checked("action-bracket-compatibility");
  for (std::size_t x = 0; x < nl && !rep.axiom_failed("action-bracket-compatibility"); ++x)
    for (std::size_t y = 0; y < nl && !rep.axiom_failed("action-bracket-compatibility"); ++y)
      for (std::size_t m = 0; m < nm; ++m) {
        Vec lhs = act.act(act.actor.brk(unit_vec(nl, x), unit_vec(nl, y)), am.col(m));
        Vec rhs = vec_sub(act.act(al.col(x), act.act(unit_vec(nl, y), unit_vec(nm, m))),
                          act.act(al.col(y), act.act(unit_vec(nl, x), unit_vec(nm, m))));
        Vec residual = vec_sub(lhs, rhs);
        if (!is_zero(residual)) {
          rep.add_violation("action-bracket-compatibility", {x, y, m}, residual);
          break;
        }
      }

  rep.mark_checked("action-derivation");
  for (std::size_t x = 0; x < nl && !rep.axiom_failed("action-derivation"); ++x)
    for (std::size_t m = 0; m < nm && !rep.axiom_failed("action-derivation"); ++m)
      for (std::size_t mp = 0; mp < nm; ++mp) {
        Vec lhs = act.act(al.col(x), act.target.brk(unit_vec(nm, m), unit_vec(nm, mp)));
        Vec rhs =
            vec_add(act.target.brk(act.act(unit_vec(nl, x), unit_vec(nm, m)), am.col(mp)),
                    act.target.brk(am.col(m), act.act(unit_vec(nl, x), unit_vec(nm, mp))));
        Vec residual = vec_sub(lhs, rhs);
        if (!is_zero(residual)) {
          rep.add_violation("action-derivation", {x, m, mp}, residual);
          break;
        }
      }

  rep.mark_checked("action-twist-equivariance");
  for (std::size_t x = 0; x < nl && !rep.axiom_failed("action-twist-equivariance"); ++x)
    for (std::size_t m = 0; m < nm; ++m) {
      Vec lhs = mat_apply(am, act.act(unit_vec(nl, x), unit_vec(nm, m)));
      Vec rhs = act.act(al.col(x), am.col(m));
      Vec residual = vec_sub(lhs, rhs);
      if (!is_zero(residual)) {
        rep.add_violation("action-twist-equivariance", {x, m}, residual);
        break;
      }
    }
  return rep;
}

SemidirectProduct semidirect_product(const HomAction& act) {
  AxiomReport ok = check_hom_action(act);
  if (!ok.pass)
    throw std::invalid_argument("semidirect_product: action fails " +
                                ok.violations.front().axiom);
  const std::size_t nm = act.target.dim();
  const std::size_t nl = act.actor.dim();
  const std::size_t n = nm + nl;
  Tensor3 b(n);
  // target-target block
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      Vec w = act.target.brk(unit_vec(nm, i), unit_vec(nm, j));
      for (std::size_t k = 0; k < nm; ++k) b.at(i, j, k) = w[k];
    }
  // actor-actor block
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j) {
      Vec w = act.actor.brk(unit_vec(nl, i), unit_vec(nl, j));
      for (std::size_t k = 0; k < nl; ++k) b.at(nm + i, nm + j, nm + k) = w[k];
    }
  // mixed blocks: [x, m] = x > m, [m, x] = -(x > m)
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t m = 0; m < nm; ++m) {
      Vec w = mat_apply(act.tensor[x], unit_vec(nm, m));
      for (std::size_t k = 0; k < nm; ++k) {
        b.at(nm + x, m, k) = w[k];
        b.at(m, nm + x, k) = -w[k];
      }
    }
  Mat alpha(n, n);
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) alpha.at(i, j) = act.target.module.alpha.at(i, j);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j)
      alpha.at(nm + i, nm + j) = act.actor.module.alpha.at(i, j);

  std::vector<std::string> names = act.target.basis_names;
  for (const auto& nmx : act.actor.basis_names) names.push_back(nmx + "'");

  SemidirectProduct sp;
  sp.result = HomLieAlgebra(HomModule(n, alpha), std::move(b), std::move(names));
  sp.m_dim = nm;
  sp.l_dim = nl;
  return sp;
}

Vec SemidirectProduct::embed_target(const Vec& m) const {
  Vec v(m_dim + l_dim);
  for (std::size_t i = 0; i < m_dim; ++i) v[i] = m[i];
  return v;
}

Vec SemidirectProduct::embed_actor(const Vec& x) const {
  Vec v(m_dim + l_dim);
  for (std::size_t i = 0; i < l_dim; ++i) v[m_dim + i] = x[i];
  return v;
}

SubspaceData SemidirectProduct::target_subspace() const {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < m_dim; ++i) basis.push_back(unit_vec(m_dim + l_dim, i));
  return SubspaceData(m_dim + l_dim, std::move(basis));
}

SubspaceData SemidirectProduct::actor_subspace() const {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < l_dim; ++i) basis.push_back(unit_vec(m_dim + l_dim, m_dim + i));
  return SubspaceData(m_dim + l_dim, std::move(basis));
}

CosetHomModule coset_module(const HomAssociativeAlgebra& a, const SubspaceData& b) {
  AxiomReport ok = homalg::check_subalgebra(a, b);
  if (!ok.pass)
    throw std::invalid_argument("coset_module: B fails " + ok.violations.front().axiom);
  const std::size_t n = a.dim();
  EchelonBasis ech(n);
  for (const auto& v : b.basis) ech.insert(v);
  std::vector<Vec> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (ech.insert(unit_vec(n, i))) comp.push_back(unit_vec(n, i));
  const std::size_t q = comp.size();

  std::vector<Vec> cols = b.basis;
  cols.insert(cols.end(), comp.begin(), comp.end());
  Mat inv = *exactlin::inverse(Mat::from_cols(cols));
  Mat proj(q, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) proj.at(i, j) = inv.at(b.dim() + i, j);

  CosetHomModule cm;
  cm.parent = a;
  cm.sub = b;
  cm.complement = comp;
  cm.projection = proj;

  // well-definedness: the defining formulas must kill B
  for (std::size_t p = 0; p < b.dim(); ++p)
    for (std::size_t r = 0; r < b.dim(); ++r)
      if (!is_zero(mat_apply(proj, a.mult(b.basis[p], b.basis[r]))))
        throw std::logic_error("coset_module: action not well-defined on cosets");
  for (std::size_t p = 0; p < b.dim(); ++p)
    if (!is_zero(mat_apply(proj, a.twist(b.basis[p]))))
      throw std::logic_error("coset_module: twist not well-defined on cosets");

  for (std::size_t p = 0; p < b.dim(); ++p) {
    Mat m(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      Vec w = mat_apply(proj, a.mult(b.basis[p], comp[j]));
      for (std::size_t i = 0; i < q; ++i) m.at(i, j) = w[i];
    }
    cm.action.push_back(std::move(m));
  }
  Mat tw(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    Vec w = mat_apply(proj, a.twist(comp[j]));
    for (std::size_t i = 0; i < q; ++i) tw.at(i, j) = w[i];
  }
  cm.quotient_twist = std::move(tw);
  if (!mat_mul(cm.quotient_twist, cm.quotient_twist).is_identity())
    throw std::logic_error("coset_module: quotient twist is not involutive");
  return cm;
}

Vec CosetHomModule::lift(const Vec& coset) const {
  Vec v(parent.dim());
  for (std::size_t j = 0; j < complement.size(); ++j)
    if (coset[j] != 0) v = vec_add(v, exactlin::vec_scale(coset[j], complement[j]));
  return v;
}

Vec CosetHomModule::act(const Vec& b_coords, const Vec& coset) const {
  Vec r(quotient_dim());
  for (std::size_t p = 0; p < sub.dim(); ++p)
    if (b_coords[p] != 0)
      r = vec_add(r, exactlin::vec_scale(b_coords[p], mat_apply(action[p], coset)));
  return r;
}

FreeBasisWitness check_free_basis(const CosetHomModule& q, const std::vector<Vec>& x) {
  const std::size_t qd = q.quotient_dim();
  const std::size_t s = q.sub.dim();
  FreeBasisWitness w;
  w.X = x;
  for (const auto& v : x)
    if (v.size() != qd) throw std::invalid_argument("check_free_basis: X must use A/B coordinates");

  if (s == 0) {
    // zero subalgebra: freeness degenerates to a plain basis of A/B
    w.verification = Mat::from_cols(x);
    w.pass = (x.size() == qd) && (qd == 0 || exactlin::rank(w.verification) == qd);
  } else {
    Mat m(qd, x.size() * s);
    for (std::size_t xi = 0; xi < x.size(); ++xi)
      for (std::size_t p = 0; p < s; ++p) {
        Vec col = mat_apply(q.action[p], x[xi]);
        for (std::size_t i = 0; i < qd; ++i) m.at(i, xi * s + p) = col[i];
      }
    w.verification = m;
    w.pass = (x.size() * s == qd) && (qd == 0 || exactlin::rank(m) == qd);
  }

  // informational twist flag: does the quotient twist stay in span(X)?
  if (!x.empty()) {
    Mat xmat = Mat::from_cols(x);
    Mat imgs(qd, x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      Vec img = mat_apply(q.quotient_twist, x[j]);
      for (std::size_t i = 0; i < qd; ++i) imgs.at(i, j) = img[i];
    }
    auto t = exactlin::solve_matrix(xmat, imgs);
    if (t) {
      w.twist_span_stable = true;
      w.twist_on_span = *t;
    }
  } else {
    w.twist_span_stable = true;
    w.twist_on_span = Mat(0, 0);
  }
  return w;
}

}  // namespace homext::construct
