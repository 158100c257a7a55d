#include "lpalab/abelian.hpp"

#include <algorithm>

namespace lpa {

std::string FgAbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::string s;
  for (int64_t d : torsion) {
    if (!s.empty()) s += " x ";
    s += "Z_" + std::to_string(d);
  }
  for (int64_t i = 0; i < free_rank; ++i) {
    if (!s.empty()) s += " x ";
    s += "Z";
  }
  return s;
}

bool GroupElement::is_zero() const {
  return std::all_of(torsion_coords.begin(), torsion_coords.end(), [](int64_t c) { return c == 0; }) &&
         std::all_of(free_coords.begin(), free_coords.end(), [](int64_t c) { return c == 0; });
}

namespace {

int64_t mod_reduce(int64_t x, int64_t d) {
  int64_t r = x % d;
  return r < 0 ? r + d : r;
}

void check_shapes(const FgAbelianGroup& g, const GroupElement& e) {
  if (static_cast<int64_t>(e.torsion_coords.size()) != static_cast<int64_t>(g.torsion.size()) ||
      static_cast<int64_t>(e.free_coords.size()) != g.free_rank)
    raise(Errc::ShapeMismatch, "element shape does not match group");
}

}  // namespace

Cokernel::Cokernel(FgAbelianGroup group, IntMatrix row_transform, std::vector<int64_t> diagonal)
    : group_(std::move(group)), p_(std::move(row_transform)), diag_(std::move(diagonal)) {}

GroupElement Cokernel::project(const std::vector<int64_t>& x) const {
  if (x.size() != p_.cols()) raise(Errc::ShapeMismatch, "vector length does not match cokernel");
  std::vector<int64_t> y = mat_apply(p_, x);
  GroupElement e;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] >= 2)
      e.torsion_coords.push_back(mod_reduce(y[i], diag_[i]));
    else if (diag_[i] == 0)
      e.free_coords.push_back(y[i]);
    // d_i = 1 positions carry no information.
  }
  return e;
}

Cokernel cokernel(const IntMatrix& m) {
  if (!m.is_square()) raise(Errc::NotSquare, "cokernel presentation matrix must be square");
  SmithDecomposition snf = smith_normal_form(m);
  std::vector<int64_t> diag = snf.diagonal();
  FgAbelianGroup g;
  for (int64_t d : diag) {
    if (d >= 2) g.torsion.push_back(d);
    if (d == 0) ++g.free_rank;
  }
  return Cokernel(std::move(g), std::move(snf.p), std::move(diag));
}

std::optional<int64_t> element_order(const FgAbelianGroup& g, const GroupElement& e) {
  check_shapes(g, e);
  for (int64_t c : e.free_coords)
    if (c != 0) return std::nullopt;
  int64_t k = 1;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    int64_t d = g.torsion[i];
    int64_t c = e.torsion_coords[i];
    k = lcm64_checked(k, d / gcd64(d, c));
  }
  return k;
}

namespace {

using Coords = std::vector<int64_t>;

// cols[j] is the image of the j-th torsion generator; y = A*x over Z_{d_i}.
Coords apply_torsion_matrix(const std::vector<int64_t>& d, const std::vector<Coords>& cols, const Coords& x) {
  Coords y(d.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] = mod_reduce(y[i] + checked_mul(cols[j][i], mod_reduce(x[j], d[j])), d[i]);
  return y;
}

bool is_torsion_automorphism(const std::vector<int64_t>& d, const std::vector<Coords>& cols) {
  int64_t size = 1;
  for (int64_t x : d) size *= x;
  std::vector<bool> hit(size, false);
  const std::size_t k = d.size();
  Coords x(k, 0);
  for (;;) {
    Coords y = apply_torsion_matrix(d, cols, x);
    int64_t flat = 0;
    for (std::size_t i = 0; i < k; ++i) flat = flat * d[i] + y[i];
    if (hit[flat]) return false;
    hit[flat] = true;
    std::size_t i = 0;
    while (i < k && ++x[i] == d[i]) x[i++] = 0;
    if (i == k) break;
  }
  return true;
}

// All well-defined columns for generator j: entry (i, j) must be a multiple of
// d_i / gcd(d_i, d_j), otherwise the map is not defined on Z_{d_j}.
std::vector<Coords> column_candidates(const std::vector<int64_t>& d, std::size_t j) {
  const std::size_t k = d.size();
  std::vector<Coords> out;
  Coords c(k, 0);
  for (;;) {
    out.push_back(c);
    std::size_t i = 0;
    for (; i < k; ++i) {
      int64_t step = d[i] / gcd64(d[i], d[j]);
      c[i] += step;
      if (c[i] < d[i]) break;
      c[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

}  // namespace

PointedIso pointed_isomorphic(const FgAbelianGroup& ga, const GroupElement& a,
                              const FgAbelianGroup& gb, const GroupElement& b, int64_t budget) {
  check_shapes(ga, a);
  check_shapes(gb, b);
  if (!(ga == gb)) return PointedIso::No;
  if (a == b) return PointedIso::Yes;

  // Element order is preserved by every isomorphism.
  if (element_order(ga, a) != element_order(gb, b)) return PointedIso::No;

  if (ga.free_rank > 1 || ga.torsion.size() > 2) return PointedIso::Exhausted;
  if (!ga.torsion.empty() && ga.torsion.back() > budget) return PointedIso::Exhausted;

  const std::vector<int64_t>& d = ga.torsion;
  const std::size_t k = d.size();
  const bool has_free = ga.free_rank == 1;
  const int64_t af = has_free ? a.free_coords[0] : 0;
  const int64_t bf = has_free ? b.free_coords[0] : 0;

  if (has_free && af != bf && af != -bf) return PointedIso::No;  // induced map on Z is +-1

  // Every automorphism of T x Z is (x, y) -> (A x + y v, eps y) with A an
  // automorphism of the torsion part T, v in T arbitrary, eps = +-1.
  std::vector<std::vector<Coords>> choices(k);
  for (std::size_t j = 0; j < k; ++j) choices[j] = column_candidates(d, j);

  std::vector<std::size_t> pick(k, 0);
  std::vector<Coords> cols(k);
  for (;;) {
    for (std::size_t j = 0; j < k; ++j) cols[j] = choices[j][pick[j]];
    if (is_torsion_automorphism(d, cols)) {
      Coords base = apply_torsion_matrix(d, cols, a.torsion_coords);
      for (int eps : has_free ? std::vector<int>{1, -1} : std::vector<int>{0}) {
        if (has_free && static_cast<int64_t>(eps) * af != bf) continue;
        // Need a torsion vector v with A*aT + af*v = bT, coordinate-wise.
        bool solvable = true;
        for (std::size_t i = 0; i < k && solvable; ++i) {
          int64_t need = mod_reduce(b.torsion_coords[i] - base[i], d[i]);
          if (af == 0) {
            if (need != 0) solvable = false;
          } else if (need % gcd64(af, d[i]) != 0) {
            solvable = false;
          }
        }
        if (solvable) return PointedIso::Yes;
      }
    }
    std::size_t j = 0;
    while (j < k && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == k) break;
  }
  return PointedIso::No;
}

}  // namespace lpa
