#ifndef L2B_EXACT_HPP
#define L2B_EXACT_HPP

#include <gmpxx.h>

#include <array>
#include <optional>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace l2b {

// mpq_class keeps every value canonical after arithmetic: lowest terms,
// positive denominator, zero as 0/1. The two-argument constructor does not
// reduce; callers building p/q directly must canonicalize().
using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Canonical text of q, reduced even when q itself is not.
std::string to_string(const Rational& q);
// Accepts "p", "p/q", "-p/q"; rejects a zero denominator and junk.
Rational parse_rational(std::string_view s);

Vec zeros(std::size_t n);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
Vec unit(std::size_t n, std::size_t i);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  const std::vector<Rational>& data() const { return a_; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Mat transpose() const;
  bool is_zero() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rational& c);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Rational& c, Mat a) { return a *= c; }
  friend Mat operator-(Mat a) { return a *= Rational(-1); }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
// Block placement helper: copy src into dst with its (0,0) at (r, c).
void put_block(Mat& dst, std::size_t r, std::size_t c, const Mat& src);
Mat block(const Mat& src, std::size_t r, std::size_t c, std::size_t rows, std::size_t cols);
Mat commutator(const Mat& a, const Mat& b);
// Kronecker product; index (i*b.rows()+k, j*b.cols()+l).
Mat kron(const Mat& a, const Mat& b);

struct Entry {
  std::size_t i, j, k;
  Rational v;
};

// Order-3 array indexed (left, right, output). Stored dense because every
// structure here is desk scale; entries() gives the sparse nonzero view.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3);
  static Tensor3 from_entries(std::size_t d1, std::size_t d2, std::size_t d3,
                              const std::vector<Entry>& es);

  std::array<std::size_t, 3> dims() const { return {d1_, d2_, d3_}; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t d3() const { return d3_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return a_[(i * d2_ + j) * d3_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * d2_ + j) * d3_ + k];
  }

  // Output vector for the basis pair (i, j).
  Vec fiber(std::size_t i, std::size_t j) const;
  // Bilinear evaluation sum_{i,j} u_i w_j T(i,j,:).
  Vec apply(const Vec& u, const Vec& w) const;
  // Matrix of w -> T(u, w) (d3 x d2) and of u -> T(u, w) (d3 x d1).
  Mat left_mult(const Vec& u) const;
  Mat right_mult(const Vec& w) const;

  std::vector<Entry> entries() const;
  bool is_zero() const;
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims() == b.dims() && a.a_ == b.a_;
  }

 private:
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Rational> a_;
};

// Fraction-free (Bareiss) elimination. The determinant-style pivots keep
// intermediate growth polynomial.
std::size_t rank(const Mat& a);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status;
  // A particular solution (free variables set to zero) unless inconsistent.
  Vec x;
};

SolveResult solve_linear(const Mat& a, const Vec& b);

// Reduced row echelon form; pivots receives the pivot column of each
// nonzero row.
Mat rref(const Mat& a, std::vector<std::size_t>* pivots = nullptr);
// Basis of {x : A x = 0}, one vector per free column.
std::vector<Vec> kernel(const Mat& a);
// Nullopt when a is not square or singular.
std::optional<Mat> inverse(const Mat& a);

}  // namespace l2b

#endif
