#ifndef HOMEXT_EXACTLIN_HPP
#define HOMEXT_EXACTLIN_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace homext::exactlin {

/// Exact rational scalar. GMP keeps values canonical (gcd-reduced,
/// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
/// mpq_class(p, q) does not reduce; this does (and checks q != 0)
Rational make_rational(long num, long den);

bool is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense matrix over the rationals, row-major. Entry (i,j) multiplies
/// coordinate j of the input: (M*v)_i = sum_j M(i,j) v_j.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t r, std::size_t c);
  static Mat from_rows(const std::vector<Vec>& rows_in);
  static Mat from_cols(const std::vector<Vec>& cols_in);

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  bool is_zero() const;
  bool is_identity() const;
};

bool operator==(const Mat& x, const Mat& y);
Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Rational& c, const Mat& x);
Mat transpose(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the right null space {v : M v = 0}. Gaussian elimination with
/// leading pivots; one kernel vector per free column, free coordinate set
/// to 1. rank(M) + result.size() == cols holds exactly.
std::vector<Vec> mat_kernel(const Mat& m);

/// Solve M x = b exactly. Returns nullopt when inconsistent; otherwise the
/// particular solution with all free coordinates zero.
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<Mat> solve_matrix(const Mat& m, const Mat& rhs);
std::optional<Mat> inverse(const Mat& m);

/// Incrementally maintained reduced row-echelon subspace basis. The pivot
/// of each stored row is its largest-index nonzero coordinate, so reducing
/// a vector eliminates trailing coordinates first and the "first
/// independent" greedy selections used by quotient-basis construction fall
/// out of the pivot set.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  /// Reduce v against the stored rows; returns the residue.
  Vec reduce(Vec v) const;
  /// Insert v; returns true when v was independent (rank grew).
  bool insert(Vec v);
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t j) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;            // kept reduced, sorted by pivot
  std::vector<std::size_t> pivots_;  // parallel to rows_
};

/// Hom-module: a space of dimension dim with a designated twist.
/// Involutivity (alpha^2 = id) is what check_hom_module verifies; the
/// constructor only enforces shape.
struct HomModule {
  std::size_t dim = 0;
  Mat alpha;

  HomModule() = default;
  HomModule(std::size_t d, Mat a);
  static HomModule identity_twist(std::size_t d);
};

/// Linear map between Hom-modules; matrix shape codomain.dim x domain.dim.
struct LinearMapBetween {
  HomModule domain;
  HomModule codomain;
  Mat matrix;

  LinearMapBetween(HomModule dom, HomModule cod, Mat m);
};

}  // namespace homext::exactlin

#endif
