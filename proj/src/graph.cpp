#include "lpalab/graph.hpp"

#include <algorithm>
#include <numeric>

#include "lpalab/int_matrix.hpp"

namespace lpa {

MultiGraph::MultiGraph(std::vector<std::vector<int64_t>> adjacency, std::vector<std::string> labels)
    : n_(static_cast<int>(adjacency.size())) {
  if (adjacency.empty()) raise(Errc::ZeroVertices, "graph needs at least one vertex");
  adj_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : adjacency) {
    if (static_cast<int>(row.size()) != n_) raise(Errc::ShapeMismatch, "adjacency matrix must be square");
    for (int64_t x : row) {
      if (x < 0) raise(Errc::NegativeMultiplicity, "adjacency entries must be >= 0");
      adj_.push_back(x);
    }
  }
  if (labels.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back("v" + std::to_string(i));
  } else {
    if (static_cast<int>(labels.size()) != n_) raise(Errc::ShapeMismatch, "label count mismatch");
    labels_ = std::move(labels);
  }
}

MultiGraph MultiGraph::build(int vertex_count, const std::vector<EdgeSpec>& edges,
                             std::vector<std::string> labels) {
  if (vertex_count <= 0) raise(Errc::ZeroVertices, "vertex_count must be positive");
  std::vector<std::vector<int64_t>> adj(vertex_count, std::vector<int64_t>(vertex_count, 0));
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= vertex_count || e.to < 0 || e.to >= vertex_count)
      raise(Errc::IndexOutOfRange, "edge endpoint out of range");
    if (e.count < 1) raise(Errc::NegativeMultiplicity, "edge multiplicity must be >= 1");
    adj[e.from][e.to] = checked_add(adj[e.from][e.to], e.count);
  }
  return MultiGraph(std::move(adj), std::move(labels));
}

int64_t MultiGraph::out_degree(int v) const {
  int64_t s = 0;
  for (int j = 0; j < n_; ++j) s = checked_add(s, adjacency(v, j));
  return s;
}

int64_t MultiGraph::total_multiplicity() const {
  int64_t s = 0;
  for (int64_t x : adj_) s = checked_add(s, x);
  return s;
}

bool MultiGraph::has_default_labels() const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] != "v" + std::to_string(i)) return false;
  return true;
}

int MultiGraph::index_of_label(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == name) return i;
  return -1;
}

std::vector<std::vector<int64_t>> MultiGraph::adjacency_rows() const {
  std::vector<std::vector<int64_t>> rows(n_, std::vector<int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = adjacency(i, j);
  return rows;
}

TwoVertexSignature::TwoVertexSignature(std::pair<int64_t, int64_t> a, std::pair<int64_t, int64_t> b)
    : first(a), second(b) {
  if (second < first) std::swap(first, second);
  if (first.first < 0 || first.second < 0 || second.first < 0 || second.second < 0)
    raise(Errc::NegativeMultiplicity, "signature entries must be >= 0");
}

TwoVertexSignature TwoVertexSignature::of(const MultiGraph& g) {
  if (g.vertex_count() != 2) raise(Errc::ShapeMismatch, "signature needs exactly two vertices");
  return TwoVertexSignature({g.adjacency(0, 0), g.adjacency(0, 1)}, {g.adjacency(1, 1), g.adjacency(1, 0)});
}

MultiGraph TwoVertexSignature::to_graph() const {
  return MultiGraph({{first.first, first.second}, {second.second, second.first}});
}

std::string TwoVertexSignature::str() const {
  return std::to_string(first.first) + "," + std::to_string(first.second) + ";" +
         std::to_string(second.first) + "," + std::to_string(second.second);
}

VertexSet sinks(const MultiGraph& g) {
  VertexSet s;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) s.insert(v);
  return s;
}

VertexSet reachable_from(const MultiGraph& g, int v) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (g.adjacency(u, w) > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  VertexSet out;
  for (int i = 0; i < n; ++i)
    if (seen[i]) out.insert(i);
  return out;
}

namespace {

// reach[i][j] = there is a path of length >= 1 from i to j.
std::vector<std::vector<bool>> positive_reachability(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = g.adjacency(i, j) > 0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

}  // namespace

std::vector<VertexSet> strongly_connected_components(const MultiGraph& g) {
  const int n = g.vertex_count();
  auto reach = positive_reachability(g);
  std::vector<bool> assigned(n, false);
  std::vector<VertexSet> comps;
  for (int v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    VertexSet c{v};
    for (int w = v + 1; w < n; ++w)
      if (reach[v][w] && reach[w][v]) c.insert(w);
    for (int w : c) assigned[w] = true;
    comps.push_back(std::move(c));
  }
  return comps;
}

VertexSet line_points(const MultiGraph& g) {
  auto reach = positive_reachability(g);
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool ok = true;
    VertexSet tree = reachable_from(g, v);
    for (int w : tree) {
      if (g.out_degree(w) > 1 || reach[w][w]) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(v);
  }
  return out;
}

VertexSet no_exit_cycle_vertices(const MultiGraph& g) {
  VertexSet out;
  for (const auto& comp : strongly_connected_components(g)) {
    bool nontrivial = comp.size() >= 2 || g.adjacency(*comp.begin(), *comp.begin()) > 0;
    if (!nontrivial) continue;
    bool all_single = true;
    for (int v : comp)
      if (g.out_degree(v) != 1) {
        all_single = false;
        break;
      }
    if (all_single) out.insert(comp.begin(), comp.end());
  }
  return out;
}

VertexSet extreme_cycle_vertices(const MultiGraph& g) {
  VertexSet out;
  for (const auto& comp : strongly_connected_components(g)) {
    bool nontrivial = comp.size() >= 2 || g.adjacency(*comp.begin(), *comp.begin()) > 0;
    if (!nontrivial) continue;
    bool terminal = true;
    for (int v : comp) {
      for (int w = 0; w < g.vertex_count(); ++w)
        if (g.adjacency(v, w) > 0 && !comp.count(w)) {
          terminal = false;
          break;
        }
      if (!terminal) break;
    }
    if (!terminal) continue;
    bool has_branch = false;
    for (int v : comp)
      if (g.out_degree(v) >= 2) {
        has_branch = true;
        break;
      }
    if (has_branch) out.insert(comp.begin(), comp.end());
  }
  return out;
}

std::vector<VertexSet> hereditary_saturated_subsets(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 20) raise(Errc::TooLarge, "hereditary-saturated enumeration limited to 20 vertices");
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool hereditary = true;
    for (int v = 0; v < n && hereditary; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int w = 0; w < n; ++w)
        if (g.adjacency(v, w) > 0 && !(mask >> w & 1)) {
          hereditary = false;
          break;
        }
    }
    if (!hereditary) continue;
    bool saturated = true;
    for (int v = 0; v < n && saturated; ++v) {
      if ((mask >> v & 1) || g.is_sink(v)) continue;
      bool all_inside = true;
      for (int w = 0; w < n; ++w)
        if (g.adjacency(v, w) > 0 && !(mask >> w & 1)) {
          all_inside = false;
          break;
        }
      if (all_inside) saturated = false;  // v should have been in the set
    }
    if (!saturated) continue;
    VertexSet h;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) h.insert(v);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

bool connects_to_plec(const MultiGraph& g) {
  VertexSet targets = line_points(g);
  for (int v : no_exit_cycle_vertices(g)) targets.insert(v);
  for (int v : extreme_cycle_vertices(g)) targets.insert(v);
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet r = reachable_from(g, v);
    bool hits = false;
    for (int w : r)
      if (targets.count(w)) {
        hits = true;
        break;
      }
    if (!hits) return false;
  }
  return true;
}

MultiGraph canonical_form(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 8) raise(Errc::TooLarge, "canonical form limited to 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int64_t> best;
  std::vector<int64_t> cur(static_cast<std::size_t>(n) * n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cur[static_cast<std::size_t>(i) * n + j] = g.adjacency(perm[i], perm[j]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = best[static_cast<std::size_t>(i) * n + j];
  return MultiGraph(std::move(rows));
}

}  // namespace lpa
