#include "homext/exactlin.hpp"

#include <cctype>
#include <stdexcept>

namespace homext::exactlin {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::zero(std::size_t r, std::size_t c) { return Mat(r, c); }

Mat Mat::from_rows(const std::vector<Vec>& rows_in) {
  if (rows_in.empty()) return Mat(0, 0);
  Mat m(rows_in.size(), rows_in.front().size());
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    if (rows_in[i].size() != m.cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols_in) {
  if (cols_in.empty()) return Mat(0, 0);
  Mat m(cols_in.front().size(), cols_in.size());
  for (std::size_t j = 0; j < cols_in.size(); ++j) {
    if (cols_in[j].size() != m.rows) throw std::invalid_argument("from_cols: ragged cols");
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols_in[j][i];
  }
  return m;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols);
  for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool operator==(const Mat& x, const Mat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
  Vec r(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < m.rows; ++i) r[i] += m.at(i, j) * v[j];
  }
  return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape");
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_sub: shape");
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat mat_scale(const Rational& c, const Mat& x) {
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

namespace {

// Row echelon with leading pivots; returns pivot column per reduced row.
// work is modified in place to reduced row-echelon form.
std::vector<std::size_t> rref_leading(Mat& work) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < work.cols && row < work.rows; ++col) {
    std::size_t sel = row;
    while (sel < work.rows && work.at(sel, col) == 0) ++sel;
    if (sel == work.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < work.cols; ++j) std::swap(work.at(sel, j), work.at(row, j));
    Rational inv = 1 / work.at(row, col);
    for (std::size_t j = col; j < work.cols; ++j) work.at(row, j) *= inv;
    for (std::size_t i = 0; i < work.rows; ++i) {
      if (i == row || work.at(i, col) == 0) continue;
      Rational f = work.at(i, col);
      for (std::size_t j = col; j < work.cols; ++j) work.at(i, j) -= f * work.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Mat& m) {
  Mat work = m;
  return rref_leading(work).size();
}

std::vector<Vec> mat_kernel(const Mat& m) {
  Mat work = m;
  std::vector<std::size_t> pivots = rref_leading(work);
  std::vector<bool> is_piv(m.cols, false);
  for (std::size_t p : pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    Vec v(m.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<std::size_t> pivots = rref_leading(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // 0 = 1 row
  Vec x(m.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return x;
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& rhs) {
  if (rhs.rows != m.rows) throw std::invalid_argument("solve_matrix: shape mismatch");
  Mat out(m.cols, rhs.cols);
  for (std::size_t j = 0; j < rhs.cols; ++j) {
    auto x = solve(m, rhs.col(j));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < m.cols; ++i) out.at(i, j) = (*x)[i];
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  if (rank(m) != m.rows) return std::nullopt;
  return solve_matrix(m, Mat::identity(m.rows));
}

Vec EchelonBasis::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("EchelonBasis: size mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c == 0) continue;
    Rational f = c;  // stored rows have pivot coefficient 1
    for (std::size_t j = 0; j < ambient_; ++j)
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t piv = ambient_;
  for (std::size_t j = ambient_; j-- > 0;) {
    if (v[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv == ambient_) return false;
  Rational inv = 1 / v[piv];
  for (auto& x : v) x *= inv;
  // keep the basis fully reduced
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = rows_[r][piv];
    if (c == 0) continue;
    Rational f = c;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (v[j] != 0) rows_[r][j] -= f * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool EchelonBasis::is_pivot(std::size_t j) const {
  for (std::size_t p : pivots_)
    if (p == j) return true;
  return false;
}

HomModule::HomModule(std::size_t d, Mat a) : dim(d), alpha(std::move(a)) {
  if (alpha.rows != dim || alpha.cols != dim)
    throw std::invalid_argument("HomModule: twist must be square of the module dimension");
}

HomModule HomModule::identity_twist(std::size_t d) { return HomModule(d, Mat::identity(d)); }

LinearMapBetween::LinearMapBetween(HomModule dom, HomModule cod, Mat m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
  if (matrix.rows != codomain.dim || matrix.cols != domain.dim)
    throw std::invalid_argument("LinearMapBetween: matrix shape must be codomain x domain");
}

}  // namespace homext::exactlin
