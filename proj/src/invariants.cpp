#include "lpalab/invariants.hpp"

#include <algorithm>

namespace lpa {

std::string TypeResult::str() const {
  if (ibn) return "IBN";
  return "(1," + std::to_string(*type_n) + ")";
}

IntMatrix n_prime(const MultiGraph& g) {
  const int n = g.vertex_count();
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int64_t x = g.adjacency(i, j);
      if (i == j && !g.is_sink(j)) x = checked_sub(x, 1);
      m.at(i, j) = x;
    }
  return m;
}

K0Data k0_with_unit(const MultiGraph& g) {
  IntMatrix np = n_prime(g);
  Cokernel cok = cokernel(np.transpose());
  std::vector<int64_t> ones(g.vertex_count(), 1);
  GroupElement unit = cok.project(ones);
  K0Data out;
  out.group = cok.group();
  out.unit_order = element_order(out.group, unit);
  out.order_unit = std::move(unit);
  out.d_e = content_gcd(np);
  out.delta_e = determinant(np);
  return out;
}

TypeResult ibn_and_type(const MultiGraph& g) {
  IntMatrix m = n_prime(g).transpose();
  SmithDecomposition snf = smith_normal_form(m);
  std::vector<int64_t> d = snf.diagonal();
  std::vector<int64_t> p = mat_apply(snf.p, std::vector<int64_t>(g.vertex_count(), 1));
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] == 0 && p[i] != 0) return TypeResult{true, std::nullopt};
  int64_t k = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) k = lcm64_checked(k, d[i] / gcd64(d[i], p[i]));
  return TypeResult{false, checked_add(k, 1)};
}

namespace {

TypeResult ibn() { return TypeResult{true, std::nullopt}; }
TypeResult type_of(int64_t n) { return TypeResult{false, n}; }

TypeResult one_vertex_closed_form(int64_t loops) {
  if (loops <= 1) return ibn();  // K or the Laurent algebra
  return type_of(loops);
}

// One vertex is a sink, the other carries (l, t) != (0, 0).
TypeResult one_sink_closed_form(int64_t l, int64_t t) {
  if (t >= 1 && t == l - 1) return type_of(l);
  return ibn();
}

}  // namespace

TypeResult type_closed_form_two_vertex(const MultiGraph& g) {
  if (g.vertex_count() > 2) raise(Errc::TooManyVertices, "closed forms cover at most two vertices");
  if (g.vertex_count() == 1) return one_vertex_closed_form(g.adjacency(0, 0));

  auto sig = TwoVertexSignature::of(g);
  auto [l1, t1] = sig.first;
  auto [l2, t2] = sig.second;

  const bool sink1 = l1 == 0 && t1 == 0;
  const bool sink2 = l2 == 0 && t2 == 0;
  if (sink1 && sink2) return ibn();
  if (sink1) return one_sink_closed_form(l2, t2);
  if (sink2) return one_sink_closed_form(l1, t1);

  const bool laurent1 = l1 == 1 && t1 == 0;
  const bool laurent2 = l2 == 1 && t2 == 0;
  if (laurent1 && laurent2) return ibn();
  if (laurent1) return t2 == l2 - 1 ? type_of(l2) : ibn();
  if (laurent2) return t1 == l1 - 1 ? type_of(l1) : ibn();

  const bool diag1 = l1 - 1 == t1;  // t1 >= 1 here, since (1,0) is excluded
  const bool diag2 = l2 - 1 == t2;
  if (diag1 && diag2) return type_of(1 + gcd64(t1, t2));
  if (diag1) return type_of(1 + t1);
  if (diag2) return type_of(1 + t2);

  int64_t delta = checked_sub(checked_mul(l1 - 1, l2 - 1), checked_mul(t1, t2));
  if (delta == 0) return ibn();
  int64_t den = gcd64(l1 - 1 - t1, l2 - 1 - t2);
  int64_t abs_delta = delta < 0 ? -delta : delta;
  return type_of(1 + abs_delta / den);
}

Flags graph_flags(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 20) raise(Errc::TooLarge, "flags limited to 20 vertices");
  Flags f;
  f.soc_nonzero = !line_points(g).empty();
  f.condition_l = no_exit_cycle_vertices(g).empty();
  f.simple = hereditary_saturated_subsets(g).size() == 2 && f.condition_l;

  // Decomposable = the underlying undirected graph is disconnected.
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if ((g.adjacency(u, w) > 0 || g.adjacency(w, u) > 0) && comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  f.decomposable = next > 1;
  f.pis = f.simple && !f.soc_nonzero;
  return f;
}

FranksTriple franks_triple(const MultiGraph& g) {
  K0Data k0 = k0_with_unit(g);
  return FranksTriple{std::move(k0.group), std::move(k0.order_unit), k0.delta_e};
}

// invariant_bundle is defined in classify.cpp: the descriptor columns come
// from the case taxonomy.

}  // namespace lpa
