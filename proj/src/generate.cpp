#include "homext/generate.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace homext::generate {

using exactlin::HomModule;
using exactlin::is_zero;
using exactlin::mat_apply;
using exactlin::mat_mul;
using exactlin::Rational;
using exactlin::unit_vec;
using homalg::SubspaceData;
using homalg::Tensor3;
using homalg::ThetaVariant;

namespace {

Mat diag(std::vector<int> entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

Mat permutation(std::vector<std::size_t> images) {
  Mat m(images.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j) m.at(images[j], j) = 1;
  return m;
}

}  // namespace

HomAssociativeAlgebra diag_assoc(std::size_t n) {
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i) c.at(i, i, i) = 1;
  return HomAssociativeAlgebra(HomModule::identity_twist(n), c, homalg::default_names(n, "u"));
}

HomAssociativeAlgebra poly_trunc(std::size_t n) {
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) c.at(i, j, i + j) = 1;
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i)
    names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  return HomAssociativeAlgebra(HomModule::identity_twist(n), c, names);
}

HomAssociativeAlgebra mat2_assoc() {
  // basis e11, e12, e21, e22
  auto row = [](std::size_t idx) { return idx / 2; };
  auto col = [](std::size_t idx) { return idx % 2; };
  Tensor3 c(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (col(i) == row(j)) c.at(i, j, row(i) * 2 + col(j)) = 1;
  return HomAssociativeAlgebra(HomModule::identity_twist(4), c, {"e11", "e12", "e21", "e22"});
}

HomAssociativeAlgebra upper2_assoc() {
  // basis e11, e12, e22
  Tensor3 c(3);
  c.at(0, 0, 0) = 1;  // e11 e11
  c.at(0, 1, 1) = 1;  // e11 e12
  c.at(1, 2, 1) = 1;  // e12 e22
  c.at(2, 2, 2) = 1;  // e22 e22
  return HomAssociativeAlgebra(HomModule::identity_twist(3), c, {"e11", "e12", "e22"});
}

HomAssociativeAlgebra null_assoc(std::size_t n) {
  return HomAssociativeAlgebra(HomModule::identity_twist(n), Tensor3(n),
                               homalg::default_names(n, "z"));
}

HomAssociativeAlgebra group_c2() {
  Tensor3 c(2);
  c.at(0, 0, 0) = 1;
  c.at(0, 1, 1) = 1;
  c.at(1, 0, 1) = 1;
  c.at(1, 1, 0) = 1;
  return HomAssociativeAlgebra(HomModule::identity_twist(2), c, {"1", "g"});
}

HomAssociativeAlgebra dual_numbers() { return poly_trunc(2); }

HomLieAlgebra abelian_lie(std::size_t n) {
  return HomLieAlgebra(HomModule::identity_twist(n), Tensor3(n), homalg::default_names(n, "x"));
}

HomLieAlgebra solvable2() {
  Tensor3 b(2);
  b.at(0, 1, 1) = 1;
  b.at(1, 0, 1) = -1;
  return HomLieAlgebra(HomModule::identity_twist(2), b, {"x", "y"});
}

HomLieAlgebra heisenberg() {
  Tensor3 b(3);
  b.at(0, 1, 2) = 1;
  b.at(1, 0, 2) = -1;
  return HomLieAlgebra(HomModule::identity_twist(3), b, {"x", "y", "z"});
}

HomLieAlgebra sl2() {
  Tensor3 b(3);
  b.at(0, 1, 1) = 2;   // [h,e] = 2e
  b.at(1, 0, 1) = -2;
  b.at(0, 2, 2) = -2;  // [h,f] = -2f
  b.at(2, 0, 2) = 2;
  b.at(1, 2, 0) = 1;   // [e,f] = h
  b.at(2, 1, 0) = -1;
  return HomLieAlgebra(HomModule::identity_twist(3), b, {"h", "e", "f"});
}

HomLieAlgebra sl2_plus_center() {
  HomLieAlgebra s = sl2();
  Tensor3 b(4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) b.at(i, j, k) = s.bracket.at(i, j, k);
  return HomLieAlgebra(HomModule::identity_twist(4), b, {"h", "e", "f", "z"});
}

HomAssociativeAlgebra yau_twist(const HomAssociativeAlgebra& a, const Mat& alpha) {
  const std::size_t n = a.dim();
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = mat_apply(alpha, a.mult(unit_vec(n, i), unit_vec(n, j)));
      for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = w[k];
    }
  return HomAssociativeAlgebra(HomModule(n, alpha), c, a.basis_names);
}

HomLieAlgebra yau_twist(const HomLieAlgebra& l, const Mat& beta) {
  const std::size_t n = l.dim();
  Tensor3 b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = mat_apply(beta, l.brk(unit_vec(n, i), unit_vec(n, j)));
      for (std::size_t k = 0; k < n; ++k) b.at(i, j, k) = w[k];
    }
  return HomLieAlgebra(HomModule(n, beta), b, l.basis_names);
}

HomLieAlgebra yau_twisted_sl2() {
  Mat swap(3, 3);
  swap.at(0, 0) = -1;  // h -> -h
  swap.at(2, 1) = 1;   // e -> f
  swap.at(1, 2) = 1;   // f -> e
  return yau_twist(sl2(), swap);
}

std::vector<AssocCatalogEntry> assoc_catalog(std::size_t max_dim) {
  std::vector<AssocCatalogEntry> out;
  auto add = [&](HomAssociativeAlgebra a, std::vector<Mat> invs, std::string name) {
    if (a.dim() > max_dim) return;
    invs.insert(invs.begin(), Mat::identity(a.dim()));
    out.push_back({std::move(a), std::move(invs), std::move(name)});
  };
  add(diag_assoc(1), {}, "diagonal-1");
  add(null_assoc(1), {diag({-1})}, "null-1");
  add(dual_numbers(), {diag({1, -1})}, "dual-numbers");
  add(group_c2(), {diag({1, -1})}, "group-algebra-C2");
  add(diag_assoc(2), {permutation({1, 0})}, "diagonal-2");
  add(diag_assoc(3), {permutation({1, 0, 2}), permutation({2, 1, 0})}, "diagonal-3");
  add(poly_trunc(3), {diag({1, -1, 1})}, "poly-x3");
  add(upper2_assoc(), {diag({1, -1, 1})}, "upper-triangular-2");
  add(null_assoc(2), {diag({1, -1}), permutation({1, 0})}, "null-2");
  add(null_assoc(3), {diag({1, -1, -1}), permutation({1, 0, 2})}, "null-3");
  add(mat2_assoc(), {diag({1, -1, -1, 1}), permutation({3, 2, 1, 0})}, "matrix-2x2");
  add(diag_assoc(4), {permutation({1, 0, 3, 2})}, "diagonal-4");
  add(poly_trunc(4), {diag({1, -1, 1, -1})}, "poly-x4");
  return out;
}

std::vector<LieCatalogEntry> lie_catalog(std::size_t max_dim) {
  std::vector<LieCatalogEntry> out;
  auto add = [&](HomLieAlgebra l, std::vector<Mat> invs, std::string name) {
    if (l.dim() > max_dim) return;
    invs.insert(invs.begin(), Mat::identity(l.dim()));
    out.push_back({std::move(l), std::move(invs), std::move(name)});
  };
  Mat solv_refl(2, 2);  // x -> x + y, y -> -y
  solv_refl.at(0, 0) = 1;
  solv_refl.at(1, 0) = 1;
  solv_refl.at(1, 1) = -1;
  Mat sl2_swap(3, 3);
  sl2_swap.at(0, 0) = -1;
  sl2_swap.at(2, 1) = 1;
  sl2_swap.at(1, 2) = 1;
  add(abelian_lie(1), {diag({-1})}, "abelian-1");
  add(abelian_lie(2), {diag({1, -1}), permutation({1, 0})}, "abelian-2");
  add(solvable2(), {diag({1, -1}), solv_refl}, "solvable-2");
  add(heisenberg(), {diag({-1, 1, -1}), permutation({1, 0, 2})}, "heisenberg");
  add(sl2(), {sl2_swap, diag({1, -1, -1})}, "sl2");
  add(abelian_lie(4), {diag({1, -1, 1, -1}), permutation({1, 0, 3, 2})}, "abelian-4");
  add(sl2_plus_center(), {diag({1, -1, -1, 1})}, "sl2-plus-center");
  return out;
}

Mat signed_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng() % (i + 1)]);
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.at(perm[j], j) = (rng() % 2) ? 1 : -1;
  return m;
}

namespace {

// Heisenberg swap breaks under sign conjugation unless signs cooperate, so
// every sample is re-validated; rejected draws are simply retried.
const std::size_t kGeneratorRetryCap = 4096;

}  // namespace

std::vector<HomAssociativeAlgebra> generate_hom_assoc(std::uint64_t seed, std::size_t count,
                                                      std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  auto catalog = assoc_catalog(max_dim);
  if (catalog.empty()) throw std::runtime_error("generate_hom_assoc: no entries at this dimension");
  std::vector<HomAssociativeAlgebra> out;
  std::size_t guard = 0;
  while (out.size() < count && guard++ < kGeneratorRetryCap) {
    const auto& entry = catalog[rng() % catalog.size()];
    const Mat& alpha = entry.involutions[rng() % entry.involutions.size()];
    HomAssociativeAlgebra a = yau_twist(entry.alg, alpha);
    if (rng() % 2) a = homalg::conjugate(a, signed_permutation(rng, a.dim()));
    if (homalg::check_hom_associative(a).pass) out.push_back(std::move(a));
  }
  if (out.size() < count) throw std::runtime_error("generate_hom_assoc: retry cap exhausted");
  return out;
}

std::vector<HomLieAlgebra> generate_hom_lie(std::uint64_t seed, std::size_t count,
                                            std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  auto catalog = lie_catalog(max_dim);
  if (catalog.empty()) throw std::runtime_error("generate_hom_lie: no entries at this dimension");
  std::vector<HomLieAlgebra> out;
  std::size_t guard = 0;
  while (out.size() < count && guard++ < kGeneratorRetryCap) {
    const auto& entry = catalog[rng() % catalog.size()];
    const Mat& beta = entry.involutions[rng() % entry.involutions.size()];
    HomLieAlgebra l = yau_twist(entry.alg, beta);
    if (rng() % 2) l = homalg::conjugate(l, signed_permutation(rng, l.dim()));
    if (homalg::check_hom_lie(l).pass) out.push_back(std::move(l));
  }
  if (out.size() < count) throw std::runtime_error("generate_hom_lie: retry cap exhausted");
  return out;
}

std::vector<Mat> derivation_space(const HomLieAlgebra& l, std::size_t k) {
  const std::size_t n = l.dim();
  Mat tk = Mat::identity(n);
  for (std::size_t i = 0; i < k; ++i) tk = mat_mul(tk, l.module.alpha);
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };

  std::vector<Vec> rows;
  // D T = T D
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec row(n * n);
      for (std::size_t m = 0; m < n; ++m) {
        row[var(i, m)] += tk.at(m, j);
        row[var(m, j)] -= tk.at(i, m);
      }
      rows.push_back(std::move(row));
    }
  // D[ei,ej] = [D ei, T ej] + [T ei, D ej]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec w = l.brk(unit_vec(n, i), unit_vec(n, j));
      for (std::size_t kk = 0; kk < n; ++kk) {
        Vec row(n * n);
        for (std::size_t m = 0; m < n; ++m) row[var(kk, m)] += w[m];
        for (std::size_t p = 0; p < n; ++p) {
          Rational c1 = 0, c2 = 0;
          for (std::size_t q = 0; q < n; ++q) {
            c1 += tk.at(q, j) * l.bracket.at(p, q, kk);
            c2 += tk.at(q, i) * l.bracket.at(q, p, kk);
          }
          row[var(p, i)] -= c1;
          row[var(p, j)] -= c2;
        }
        rows.push_back(std::move(row));
      }
    }
  std::vector<Mat> basis;
  for (const Vec& v : exactlin::mat_kernel(Mat::from_rows(rows))) {
    Mat d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d.at(i, j) = v[var(i, j)];
    basis.push_back(std::move(d));
  }
  return basis;
}

std::vector<Mat> solve_delta_space(const HomAssociativeAlgebra& a, const SubspaceData& b,
                                   const Mat& theta, ThetaVariant variant) {
  const std::size_t n = a.dim();
  const std::size_t s = b.dim();
  if (s == 0) return {};
  Mat bmat = b.basis_matrix();
  Mat alpha_imgs(n, s);
  for (std::size_t p = 0; p < s; ++p) {
    Vec w = a.twist(b.basis[p]);
    for (std::size_t i = 0; i < n; ++i) alpha_imgs.at(i, p) = w[i];
  }
  auto alpha_b = exactlin::solve_matrix(bmat, alpha_imgs);
  if (!alpha_b) throw std::invalid_argument("solve_delta_space: B not twist-stable");
  auto var = [n, s](std::size_t i, std::size_t p) { return i * s + p; };

  std::vector<Vec> rows;
  // Leibniz on basis pairs
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) {
      Vec prod = a.mult(b.basis[p], b.basis[q]);
      Vec prod_b = *exactlin::solve(bmat, prod);
      Vec right = variant == ThetaVariant::twisted_both ? theta.col(q) : b.basis[q];
      Vec thp = theta.col(p);
      for (std::size_t kk = 0; kk < n; ++kk) {
        Vec row(n * s);
        for (std::size_t m = 0; m < s; ++m) row[var(kk, m)] += prod_b[m];
        for (std::size_t u = 0; u < n; ++u) {
          Rational c1 = 0, c2 = 0;
          for (std::size_t v = 0; v < n; ++v) {
            c1 += right[v] * a.table.at(u, v, kk);
            c2 += thp[v] * a.table.at(v, u, kk);
          }
          row[var(u, p)] -= c1;
          row[var(u, q)] -= c2;
        }
        rows.push_back(std::move(row));
      }
    }
  // twist commutation: alpha_A delta = delta alpha_B
  for (std::size_t kk = 0; kk < n; ++kk)
    for (std::size_t p = 0; p < s; ++p) {
      Vec row(n * s);
      for (std::size_t m = 0; m < n; ++m) row[var(m, p)] += a.module.alpha.at(kk, m);
      for (std::size_t m = 0; m < s; ++m) row[var(kk, m)] -= alpha_b->at(m, p);
      rows.push_back(std::move(row));
    }
  std::vector<Mat> basis;
  for (const Vec& v : exactlin::mat_kernel(Mat::from_rows(rows))) {
    Mat d(n, s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < s; ++p) d.at(i, p) = v[var(i, p)];
    basis.push_back(std::move(d));
  }
  return basis;
}

namespace {

bool theta_is_valid(const HomAssociativeAlgebra& a, const SubspaceData& b, const Mat& theta) {
  const std::size_t s = b.dim();
  if (s == 0) return true;
  if (exactlin::rank(theta) != s) return false;
  Mat bmat = b.basis_matrix();
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) {
      Vec prod = a.mult(b.basis[p], b.basis[q]);
      auto prod_b = exactlin::solve(bmat, prod);
      if (!prod_b) return false;
      Vec lhs = mat_apply(theta, *prod_b);
      Vec rhs = a.mult(theta.col(p), theta.col(q));
      if (!(exactlin::vec_sub(lhs, rhs) == Vec(a.dim()))) return false;
    }
  // twist commutation (trivial for the classical catalog, kept for safety)
  Mat alpha_imgs(a.dim(), s);
  for (std::size_t p = 0; p < s; ++p) {
    Vec w = a.twist(b.basis[p]);
    for (std::size_t i = 0; i < a.dim(); ++i) alpha_imgs.at(i, p) = w[i];
  }
  auto alpha_b = exactlin::solve_matrix(bmat, alpha_imgs);
  if (!alpha_b) return false;
  Mat lhs = mat_mul(a.module.alpha, theta);
  Mat rhs = mat_mul(theta, *alpha_b);
  return lhs == rhs;
}

std::vector<SubspaceData> candidate_subalgebras(const HomAssociativeAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<SubspaceData> out;
  std::vector<std::vector<Vec>> candidates;
  candidates.push_back({});  // zero subalgebra
  for (std::size_t i = 0; i < n; ++i) candidates.push_back({unit_vec(n, i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      candidates.push_back({unit_vec(n, i), unit_vec(n, j)});
  Vec all(n, 1);
  candidates.push_back({all});  // the unit of the diagonal algebras
  std::vector<Vec> whole;
  for (std::size_t i = 0; i < n; ++i) whole.push_back(unit_vec(n, i));
  candidates.push_back(whole);
  for (auto& cand : candidates) {
    SubspaceData s(n, cand);
    if (homalg::check_subalgebra(a, s).pass) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Mat> candidate_thetas(const HomAssociativeAlgebra& a, const SubspaceData& b) {
  const std::size_t n = a.dim();
  const std::size_t s = b.dim();
  std::vector<Mat> raw;
  raw.push_back(b.basis_matrix());  // the inclusion
  for (std::size_t p = 0; p < s; ++p) {
    Mat m = b.basis_matrix();
    for (std::size_t i = 0; i < n; ++i) m.at(i, p) = -m.at(i, p);
    raw.push_back(std::move(m));
  }
  if (s == 1) {
    // re-target a one-dimensional B at each basis direction
    for (std::size_t i = 0; i < n; ++i) {
      Mat m(n, 1);
      m.at(i, 0) = 1;
      raw.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Mat m(n, 1);
      m.at(i, 0) = 2;
      raw.push_back(std::move(m));
    }
  }
  std::vector<Mat> out;
  for (auto& m : raw) {
    if (!theta_is_valid(a, b, m)) continue;
    bool dup = false;
    for (const auto& seen : out)
      if (seen == m) dup = true;
    if (!dup) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vec>> find_free_basis(const construct::CosetHomModule& coset) {
  const std::size_t q = coset.quotient_dim();
  const std::size_t s = coset.sub.dim();
  if (s == 0) {
    std::vector<Vec> x;
    for (std::size_t i = 0; i < q; ++i) x.push_back(unit_vec(q, i));
    return x;
  }
  if (q == 0) return std::vector<Vec>{};
  if (q % s != 0) return std::nullopt;
  const std::size_t m = q / s;
  std::vector<Vec> pool;
  for (std::size_t i = 0; i < q; ++i) pool.push_back(unit_vec(q, i));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      pool.push_back(exactlin::vec_add(unit_vec(q, i), unit_vec(q, j)));
  // first m-subset of the pool that passes, in lex order
  std::vector<std::size_t> idx(m);
  std::function<std::optional<std::vector<Vec>>(std::size_t, std::size_t)> rec =
      [&](std::size_t pos, std::size_t start) -> std::optional<std::vector<Vec>> {
    if (pos == m) {
      std::vector<Vec> x;
      for (std::size_t p = 0; p < m; ++p) x.push_back(pool[idx[p]]);
      if (construct::check_free_basis(coset, x).pass) return x;
      return std::nullopt;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      idx[pos] = i;
      if (auto r = rec(pos + 1, i + 1)) return r;
    }
    return std::nullopt;
  };
  return rec(0, 0);
}

std::vector<SearchedInstance> hnn_search_classical(std::uint64_t seed, std::size_t max_dim,
                                                   std::size_t limit, ThetaVariant variant) {
  std::mt19937_64 rng(seed);
  std::vector<SearchedInstance> out;
  for (const auto& entry : assoc_catalog(max_dim)) {
    if (entry.alg.dim() > max_dim) continue;
    for (const auto& b : candidate_subalgebras(entry.alg)) {
      construct::CosetHomModule coset = construct::coset_module(entry.alg, b);
      auto x = find_free_basis(coset);
      if (!x) continue;
      for (const auto& theta : candidate_thetas(entry.alg, b)) {
        std::vector<Mat> deltas;
        deltas.push_back(Mat::zero(entry.alg.dim(), b.dim()));
        auto space = solve_delta_space(entry.alg, b, theta, variant);
        for (const auto& d : space) deltas.push_back(d);
        if (space.size() >= 2) {
          // one random combination of the solved space
          Mat combo = Mat::zero(entry.alg.dim(), b.dim());
          for (const auto& d : space)
            combo = exactlin::mat_add(
                combo, exactlin::mat_scale(Rational(1 + static_cast<long>(rng() % 3)), d));
          deltas.push_back(combo);
        }
        for (const auto& delta : deltas) {
          hnn::HNNAssocData data{entry.alg, {{"t", b, theta, delta, *x}}, variant};
          if (!hnn::validate_hnn_assoc_data(data).pass) continue;
          SearchedInstance inst;
          inst.data = std::move(data);
          inst.theta_is_inclusion = theta == b.basis_matrix();
          inst.delta_is_zero = delta.is_zero();
          inst.description = entry.name + " dimB=" + std::to_string(b.dim()) +
                             (inst.theta_is_inclusion ? "" : " twisted-theta") +
                             (inst.delta_is_zero ? "" : " nonzero-delta");
          out.push_back(std::move(inst));
          if (out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

VariantExperiment theta_variant_experiment() {
  VariantExperiment exp;
  std::string report = "theta-variant-experiment v1\n";
  report += "search: classical catalog, dim <= 3, relation residuals at maxlen 2\n";

  struct Outcome {
    std::size_t instances = 0;
    std::size_t twisted_theta = 0;
    std::size_t nonzero_delta = 0;
    std::size_t failures = 0;
    std::string first_failure;
  };
  Outcome outcomes[2];
  const ThetaVariant variants[2] = {ThetaVariant::mixed, ThetaVariant::twisted_both};
  for (int vi = 0; vi < 2; ++vi) {
    auto found = hnn_search_classical(2024, 3, 200, variants[vi]);
    Outcome& o = outcomes[vi];
    for (const auto& inst : found) {
      ++o.instances;
      if (!inst.theta_is_inclusion) ++o.twisted_theta;
      if (!inst.delta_is_zero) ++o.nonzero_delta;
      hnn::TruncatedQ q = hnn::build_Q(inst.data, 2);
      bool zero = true;
      for (std::size_t p = 0; p < inst.data.letters[0].B.dim() && zero; ++p)
        zero = hnn::check_hnn_relation(q, 0, unit_vec(inst.data.letters[0].B.dim(), p)).zero;
      if (!zero) {
        ++o.failures;
        if (o.first_failure.empty()) o.first_failure = inst.description;
      }
    }
    report += "variant " + homalg::variant_name(variants[vi]) + ": instances " +
              std::to_string(o.instances) + ", twisted-theta " + std::to_string(o.twisted_theta) +
              ", nonzero-delta " + std::to_string(o.nonzero_delta) + ", relation-failures " +
              std::to_string(o.failures) + "\n";
    if (!o.first_failure.empty())
      report += "first failure under " + homalg::variant_name(variants[vi]) + ": " +
                o.first_failure + "\n";
  }

  if (outcomes[0].failures == 0 && outcomes[1].failures > 0) {
    exp.selected = ThetaVariant::mixed;
    exp.discriminating = true;
  } else if (outcomes[1].failures == 0 && outcomes[0].failures > 0) {
    exp.selected = ThetaVariant::twisted_both;
    exp.discriminating = true;
  } else {
    exp.selected = ThetaVariant::mixed;
    exp.discriminating = false;
  }
  report += std::string("discriminating: ") + (exp.discriminating ? "yes" : "no") + "\n";
  report += "selected default: " + homalg::variant_name(exp.selected) + "\n";
  exp.report = report;
  return exp;
}

}  // namespace homext::generate
