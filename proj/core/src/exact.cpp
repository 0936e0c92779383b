#include "l2b/exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "l2b/errors.hpp"

namespace l2b {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("malformed rational: '" + std::string(s) + "'");
  }
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InvalidInput("zero denominator: '" + std::string(s) + "'");
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  return r += b;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  return r -= b;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v.at(i) = 1;
  return v;
}

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw ShapeError("matrix entry count != rows*cols");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged row");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("ragged column");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const { return l2b::is_zero(a_); }

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix shape mismatch in *");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw ShapeError("matrix/vector shape mismatch");
  Vec r = zeros(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0) r[i] += a(i, j) * v[j];
  return r;
}

void put_block(Mat& dst, std::size_t r, std::size_t c, const Mat& src) {
  if (r + src.rows() > dst.rows() || c + src.cols() > dst.cols())
    throw ShapeError("block does not fit");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r + i, c + j) = src(i, j);
}

Mat block(const Mat& src, std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) {
  if (r + rows > src.rows() || c + cols > src.cols()) throw ShapeError("block out of range");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = src(r + i, c + j);
  return m;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Tensor3::Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
    : d1_(d1), d2_(d2), d3_(d3), a_(d1 * d2 * d3, Rational(0)) {}

Tensor3 Tensor3::from_entries(std::size_t d1, std::size_t d2, std::size_t d3,
                              const std::vector<Entry>& es) {
  Tensor3 t(d1, d2, d3);
  std::vector<bool> seen(d1 * d2 * d3, false);
  for (const auto& e : es) {
    if (e.i >= d1 || e.j >= d2 || e.k >= d3) throw ShapeError("tensor index out of range");
    std::size_t flat = (e.i * d2 + e.j) * d3 + e.k;
    if (seen[flat]) throw InvalidInput("duplicate tensor entry");
    seen[flat] = true;
    t(e.i, e.j, e.k) = e.v;
  }
  return t;
}

Vec Tensor3::fiber(std::size_t i, std::size_t j) const {
  auto b = a_.begin() + static_cast<std::ptrdiff_t>((i * d2_ + j) * d3_);
  return Vec(b, b + static_cast<std::ptrdiff_t>(d3_));
}

Vec Tensor3::apply(const Vec& u, const Vec& w) const {
  if (u.size() != d1_ || w.size() != d2_) throw ShapeError("tensor apply shape mismatch");
  Vec r = zeros(d3_);
  for (std::size_t i = 0; i < d1_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < d2_; ++j) {
      if (w[j] == 0) continue;
      Rational c = u[i] * w[j];
      for (std::size_t k = 0; k < d3_; ++k) r[k] += c * (*this)(i, j, k);
    }
  }
  return r;
}

Mat Tensor3::left_mult(const Vec& u) const {
  if (u.size() != d1_) throw ShapeError("tensor left_mult shape mismatch");
  Mat m(d3_, d2_);
  for (std::size_t i = 0; i < d1_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < d2_; ++j)
      for (std::size_t k = 0; k < d3_; ++k) m(k, j) += u[i] * (*this)(i, j, k);
  }
  return m;
}

Mat Tensor3::right_mult(const Vec& w) const {
  if (w.size() != d2_) throw ShapeError("tensor right_mult shape mismatch");
  Mat m(d3_, d1_);
  for (std::size_t i = 0; i < d1_; ++i)
    for (std::size_t j = 0; j < d2_; ++j) {
      if (w[j] == 0) continue;
      for (std::size_t k = 0; k < d3_; ++k) m(k, i) += w[j] * (*this)(i, j, k);
    }
  return m;
}

std::vector<Entry> Tensor3::entries() const {
  std::vector<Entry> es;
  for (std::size_t i = 0; i < d1_; ++i)
    for (std::size_t j = 0; j < d2_; ++j)
      for (std::size_t k = 0; k < d3_; ++k)
        if ((*this)(i, j, k) != 0) es.push_back({i, j, k, (*this)(i, j, k)});
  return es;
}

bool Tensor3::is_zero() const { return l2b::is_zero(a_); }

std::size_t rank(const Mat& a) {
  Mat m = a;
  std::size_t r = 0;
  Rational prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

Mat rref(const Mat& a, std::vector<std::size_t>* pivots) {
  Mat m = a;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

SolveResult solve_linear(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw ShapeError("solve_linear: A.rows != len(b)");
  Mat aug(a.rows(), a.cols() + 1);
  put_block(aug, 0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  std::vector<std::size_t> piv;
  Mat red = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return {SolveStatus::inconsistent, {}};
  Vec x = zeros(a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = red(r, a.cols());
  auto st = piv.size() == a.cols() ? SolveStatus::unique : SolveStatus::underdetermined;
  return {st, std::move(x)};
}

std::vector<Vec> kernel(const Mat& a) {
  std::vector<std::size_t> piv;
  Mat red = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zeros(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}


std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  put_block(aug, 0, 0, a);
  put_block(aug, 0, n, Mat::identity(n));
  std::vector<std::size_t> piv;
  Mat red = rref(aug, &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] >= n)) return std::nullopt;
  return block(red, 0, n, n, n);
}

}  // namespace l2b
