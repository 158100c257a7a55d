#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpalab/errors.hpp"

namespace lpa {

/// Symbolic name for the algebras appearing as ideals and quotients:
/// 0, K, K[x,x^-1], L(1,n), M_k(-), M_inf(-), finite products, or the whole
/// algebra. Comparison is structural with commutative products; matrix sizes
/// and Leavitt parameters compare exactly.
class AlgebraDescriptor {
 public:
  enum class Kind { Zero, Field, Laurent, Leavitt, Mat, MatInf, Product, Full };

  static AlgebraDescriptor zero();
  static AlgebraDescriptor field();
  static AlgebraDescriptor laurent();
  static AlgebraDescriptor leavitt(int64_t n);  // n >= 2
  static AlgebraDescriptor mat(int64_t size, AlgebraDescriptor arg);  // size >= 1
  static AlgebraDescriptor mat_inf(AlgebraDescriptor arg);
  static AlgebraDescriptor product(AlgebraDescriptor a, AlgebraDescriptor b);
  static AlgebraDescriptor full();

  Kind kind() const { return kind_; }
  int64_t param() const { return n_; }  // Leavitt n or Mat size
  const std::vector<AlgebraDescriptor>& children() const { return children_; }

  bool operator==(const AlgebraDescriptor&) const;
  bool operator<(const AlgebraDescriptor&) const;  // total order used for canonical products
  std::string str() const;

 private:
  AlgebraDescriptor(Kind k, int64_t n, std::vector<AlgebraDescriptor> children);
  Kind kind_;
  int64_t n_;
  std::vector<AlgebraDescriptor> children_;
};

}  // namespace lpa
