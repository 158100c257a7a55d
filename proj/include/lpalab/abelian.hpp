#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpalab/int_matrix.hpp"

namespace lpa {

/// Finitely generated abelian group in invariant-factor form: torsion factors
/// d_i >= 2 with d_i | d_{i+1}, plus a free rank.
struct FgAbelianGroup {
  std::vector<int64_t> torsion;
  int64_t free_rank = 0;

  bool operator==(const FgAbelianGroup&) const = default;
  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  std::string str() const;  // "Z_2 x Z", "0", ...
};

struct GroupElement {
  std::vector<int64_t> torsion_coords;  // coordinate i reduced into [0, d_i)
  std::vector<int64_t> free_coords;

  bool operator==(const GroupElement&) const = default;
  bool is_zero() const;
};

/// Z^n modulo the column lattice of a square matrix, together with the
/// projection data (the row transform of the Smith decomposition).
class Cokernel {
 public:
  Cokernel(FgAbelianGroup group, IntMatrix row_transform, std::vector<int64_t> diagonal);

  const FgAbelianGroup& group() const { return group_; }
  GroupElement project(const std::vector<int64_t>& x) const;  // ShapeMismatch

 private:
  FgAbelianGroup group_;
  IntMatrix p_;
  std::vector<int64_t> diag_;
};

Cokernel cokernel(const IntMatrix& m);  // NotSquare

/// Least k >= 1 with k*e = 0, or nullopt for infinite order.
std::optional<int64_t> element_order(const FgAbelianGroup& g, const GroupElement& e);

enum class PointedIso { Yes, No, Exhausted };

/// Decides whether some isomorphism of groups carries a onto b. Exact for
/// free rank <= 1 and at most two torsion factors whose exponent is within
/// the budget; everything larger reports Exhausted.
PointedIso pointed_isomorphic(const FgAbelianGroup& ga, const GroupElement& a,
                              const FgAbelianGroup& gb, const GroupElement& b, int64_t budget);

}  // namespace lpa
