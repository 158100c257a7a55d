#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lpalab/errors.hpp"

namespace lpa {

using VertexSet = std::set<int>;

struct EdgeSpec {
  int from, to;
  int64_t count;
};

/// Finite directed multigraph stored as a multiplicity matrix:
/// adjacency(i, j) = number of edges i -> j. Immutable after construction.
class MultiGraph {
 public:
  explicit MultiGraph(std::vector<std::vector<int64_t>> adjacency, std::vector<std::string> labels = {});
  static MultiGraph build(int vertex_count, const std::vector<EdgeSpec>& edges,
                          std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int64_t adjacency(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j]; }
  int64_t out_degree(int v) const;
  int64_t total_multiplicity() const;
  bool is_sink(int v) const { return out_degree(v) == 0; }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_default_labels() const;
  int index_of_label(const std::string& name) const;  // -1 when absent

  std::vector<std::vector<int64_t>> adjacency_rows() const;

  /// Structural equality; labels are presentation only.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_;
  std::vector<int64_t> adj_;
  std::vector<std::string> labels_;
};

/// Unordered pair {(l1,t1),(l2,t2)} for a 2-vertex graph: l = loops at the
/// vertex, t = edges to the other vertex. Stored canonically (lexicographically
/// smaller pair first), so equality coincides with graph isomorphism.
struct TwoVertexSignature {
  std::pair<int64_t, int64_t> first, second;

  TwoVertexSignature(std::pair<int64_t, int64_t> a, std::pair<int64_t, int64_t> b);
  static TwoVertexSignature of(const MultiGraph& g);  // ShapeMismatch unless 2 vertices
  MultiGraph to_graph() const;
  std::string str() const;  // "l1,t1;l2,t2"
  bool operator==(const TwoVertexSignature&) const = default;
  auto key() const { return std::tie(first, second); }
};

VertexSet sinks(const MultiGraph& g);
VertexSet line_points(const MultiGraph& g);
VertexSet no_exit_cycle_vertices(const MultiGraph& g);
VertexSet extreme_cycle_vertices(const MultiGraph& g);
std::vector<VertexSet> hereditary_saturated_subsets(const MultiGraph& g);  // TooLarge > 20
bool connects_to_plec(const MultiGraph& g);
MultiGraph canonical_form(const MultiGraph& g);  // TooLarge > 8

/// Vertices reachable from v, including v itself.
VertexSet reachable_from(const MultiGraph& g, int v);

/// Strongly connected components as vertex sets (every vertex appears once).
std::vector<VertexSet> strongly_connected_components(const MultiGraph& g);

}  // namespace lpa
