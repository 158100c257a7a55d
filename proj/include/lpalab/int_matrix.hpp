#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lpalab/errors.hpp"

namespace lpa {

/// Dense integer matrix with exact 64-bit entries. Every arithmetic path in
/// this module is overflow-checked; a computation that would wrap raises
/// Errc::Overflow instead. Setting LPA_LAB_BIGINT=1 (or set_bigint_mode)
/// switches the internal computations to arbitrary precision.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  int64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<int64_t> a_;
};

/// P * M * Q = D with |det P| = |det Q| = 1, D diagonal with non-negative
/// entries, divisibility chain d1 | d2 | ..., zeros trailing.
struct SmithDecomposition {
  IntMatrix p, d, q;
  std::vector<int64_t> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Exact signed determinant (fraction-free elimination). NotSquare on
/// non-square input.
int64_t determinant(const IntMatrix& m);

/// gcd of all entries; 0 for the zero matrix.
int64_t content_gcd(const IntMatrix& m);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<int64_t> mat_apply(const IntMatrix& a, const std::vector<int64_t>& x);

// Arithmetic mode. Default reads LPA_LAB_BIGINT from the environment; an
// explicit override (used by the CLI and tests) wins over the environment.
bool bigint_mode();
void set_bigint_mode(std::optional<bool> forced);

// Overflow-checked scalar helpers shared across modules.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t gcd64(int64_t a, int64_t b);       // non-negative result
int64_t lcm64_checked(int64_t a, int64_t b);

}  // namespace lpa
