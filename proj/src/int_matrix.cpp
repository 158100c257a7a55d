#include "lpalab/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpa {

using Big = boost::multiprecision::cpp_int;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (rows == 0 || cols == 0) raise(Errc::ShapeMismatch, "matrix dimensions must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows)
    : IntMatrix(from_rows(std::vector<std::vector<int64_t>>(rows.begin(), rows.end()))) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows) {
  if (rows.empty() || rows[0].empty()) raise(Errc::ShapeMismatch, "matrix dimensions must be >= 1");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) raise(Errc::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<int64_t> SmithDecomposition::diagonal() const {
  std::vector<int64_t> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d.at(i, i));
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic mode

namespace {
std::optional<bool> g_forced_bigint;
}

bool bigint_mode() {
  if (g_forced_bigint) return *g_forced_bigint;
  const char* env = std::getenv("LPA_LAB_BIGINT");
  return env != nullptr && env[0] == '1';
}

void set_bigint_mode(std::optional<bool> forced) { g_forced_bigint = forced; }

// ---------------------------------------------------------------------------
// Checked scalar ops

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(Errc::Overflow, "integer addition");
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) raise(Errc::Overflow, "integer subtraction");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(Errc::Overflow, "integer multiplication");
  return r;
}

int64_t gcd64(int64_t a, int64_t b) {
  // |INT64_MIN| is not representable; reduce mod the other operand first.
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  if (a == std::numeric_limits<int64_t>::min()) raise(Errc::Overflow, "gcd of INT64_MIN");
  return a < 0 ? -a : a;
}

int64_t lcm64_checked(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  int64_t g = gcd64(a, b);
  int64_t r = checked_mul(a / g, b);
  return r < 0 ? checked_sub(0, r) : r;
}

// ---------------------------------------------------------------------------
// Scalar abstraction: the same elimination code runs on checked 64-bit ints
// (default) or on cpp_int (LPA_LAB_BIGINT / after a checked path overflowed
// the 64-bit range in a result).

struct Safe64 {
  int64_t v = 0;
  Safe64() = default;
  Safe64(int64_t x) : v(x) {}
  friend Safe64 operator+(Safe64 a, Safe64 b) { return checked_add(a.v, b.v); }
  friend Safe64 operator-(Safe64 a, Safe64 b) { return checked_sub(a.v, b.v); }
  friend Safe64 operator*(Safe64 a, Safe64 b) { return checked_mul(a.v, b.v); }
  friend Safe64 operator/(Safe64 a, Safe64 b) {
    if (b.v == 0) raise(Errc::Overflow, "division by zero");
    if (a.v == std::numeric_limits<int64_t>::min() && b.v == -1) raise(Errc::Overflow, "integer division");
    return a.v / b.v;
  }
  friend Safe64 operator%(Safe64 a, Safe64 b) {
    if (b.v == 0) raise(Errc::Overflow, "modulo by zero");
    if (a.v == std::numeric_limits<int64_t>::min() && b.v == -1) return int64_t{0};
    return a.v % b.v;
  }
  Safe64 operator-() const { return checked_sub(0, v); }
  friend bool operator==(Safe64 a, Safe64 b) { return a.v == b.v; }
  friend bool operator!=(Safe64 a, Safe64 b) { return a.v != b.v; }
  friend bool operator<(Safe64 a, Safe64 b) { return a.v < b.v; }
};

template <typename T>
T abs_of(const T& x) {
  return x < T(0) ? -x : x;
}

int64_t narrow(const Safe64& x) { return x.v; }
int64_t narrow(const Big& x) {
  if (x < std::numeric_limits<int64_t>::min() || x > std::numeric_limits<int64_t>::max())
    raise(Errc::Overflow, "result exceeds 64-bit range");
  return static_cast<int64_t>(x);
}

template <typename T>
struct Mat {
  std::size_t rows, cols;
  std::vector<T> a;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  explicit Mat(const IntMatrix& m) : rows(m.rows()), cols(m.cols()), a(rows * cols, T(0)) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) at(i, j) = T(m.at(i, j));
  }
  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  IntMatrix to_int_matrix() const {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = narrow(at(i, j));
    return m;
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows; ++k) std::swap(at(k, i), at(k, j));
  }
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t k = 0; k < cols; ++k) at(dst, k) = at(dst, k) + factor * at(src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t k = 0; k < rows; ++k) at(k, dst) = at(k, dst) + factor * at(k, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) at(i, k) = -at(i, k);
  }
};

// Quotient minimizing the remainder magnitude (|r| <= |b|/2, ties keep the
// truncated quotient). Keeps the transform entries from blowing up.
template <typename T>
T round_div(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  T r2 = r + r;
  if (abs_of(b) < abs_of(r2)) q = q + ((r < T(0)) == (b < T(0)) ? T(1) : T(-1));
  return q;
}

// Pivot rule: smallest nonzero absolute value in the trailing submatrix,
// ties broken by (row, col). Fixed rule keeps the decomposition deterministic.
template <typename T>
bool find_pivot(const Mat<T>& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  T best(0);
  for (std::size_t i = k; i < d.rows; ++i)
    for (std::size_t j = k; j < d.cols; ++j) {
      const T& x = d.at(i, j);
      if (x == T(0)) continue;
      T ax = abs_of(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

template <typename T>
void snf_core(Mat<T>& d, Mat<T>& p, Mat<T>& q) {
  const std::size_t r = std::min(d.rows, d.cols);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t pi = k, pj = k;
    if (!find_pivot(d, k, pi, pj)) break;  // trailing submatrix is zero
    if (pi != k) {
      d.swap_rows(k, pi);
      p.swap_rows(k, pi);
    }
    if (pj != k) {
      d.swap_cols(k, pj);
      q.swap_cols(k, pj);
    }
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < d.rows; ++i) {
        if (d.at(i, k) == T(0)) continue;
        T f = -round_div(d.at(i, k), d.at(k, k));
        d.add_row(i, k, f);
        p.add_row(i, k, f);
        if (d.at(i, k) != T(0)) clean = false;
      }
      for (std::size_t j = k + 1; j < d.cols; ++j) {
        if (d.at(k, j) == T(0)) continue;
        T f = -round_div(d.at(k, j), d.at(k, k));
        d.add_col(j, k, f);
        q.add_col(j, k, f);
        if (d.at(k, j) != T(0)) clean = false;
      }
      if (!clean) {
        // A remainder survived; a smaller pivot now exists in the submatrix.
        if (find_pivot(d, k, pi, pj)) {
          if (pi != k) {
            d.swap_rows(k, pi);
            p.swap_rows(k, pi);
          }
          if (pj != k) {
            d.swap_cols(k, pj);
            q.swap_cols(k, pj);
          }
        }
        continue;
      }
      // Row and column k are clear; enforce divisibility of the rest.
      bool divides_all = true;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = k + 1; i < d.rows && divides_all; ++i)
        for (std::size_t j = k + 1; j < d.cols && divides_all; ++j)
          if (d.at(i, j) % d.at(k, k) != T(0)) {
            divides_all = false;
            bi = i;
            bj = j;
          }
      if (divides_all) break;
      d.add_row(k, bi, T(1));
      p.add_row(k, bi, T(1));
      (void)bj;
    }
    if (d.at(k, k) < T(0)) {
      d.negate_row(k);
      p.negate_row(k);
    }
  }
}

template <typename T>
SmithDecomposition snf_with(const IntMatrix& m) {
  Mat<T> d(m);
  Mat<T> p = Mat<T>::identity(m.rows());
  Mat<T> q = Mat<T>::identity(m.cols());
  snf_core(d, p, q);
  return SmithDecomposition{p.to_int_matrix(), d.to_int_matrix(), q.to_int_matrix()};
}

template <typename T>
int64_t det_with(const IntMatrix& m) {
  // Bareiss fraction-free elimination; all divisions are exact.
  const std::size_t n = m.rows();
  Mat<T> b(m);
  T sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (b.at(k, k) == T(0)) {
      std::size_t s = k + 1;
      while (s < n && b.at(s, k) == T(0)) ++s;
      if (s == n) return 0;
      b.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
    prev = b.at(k, k);
  }
  return narrow(sign * b.at(n - 1, n - 1));
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  if (bigint_mode()) return snf_with<Big>(m);
  return snf_with<Safe64>(m);
}

int64_t determinant(const IntMatrix& m) {
  if (!m.is_square()) raise(Errc::NotSquare, "determinant of non-square matrix");
  if (bigint_mode()) return det_with<Big>(m);
  return det_with<Safe64>(m);
}

int64_t content_gcd(const IntMatrix& m) {
  int64_t g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = gcd64(g, m.at(i, j));
  return g;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) raise(Errc::ShapeMismatch, "matrix product shapes");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = s;
    }
  return c;
}

std::vector<int64_t> mat_apply(const IntMatrix& a, const std::vector<int64_t>& x) {
  if (a.cols() != x.size()) raise(Errc::ShapeMismatch, "matrix-vector shapes");
  std::vector<int64_t> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] = checked_add(y[i], checked_mul(a.at(i, k), x[k]));
  return y;
}

}  // namespace lpa
