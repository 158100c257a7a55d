#include "lpalab/moves.hpp"

#include <algorithm>
#include <map>

#include "lpalab/int_matrix.hpp"

namespace lpa {

MultiGraph shift(const MultiGraph& g, ShiftSpec spec) {
  const int n = g.vertex_count();
  if (spec.source < 0 || spec.source >= n || spec.range < 0 || spec.range >= n)
    raise(Errc::IndexOutOfRange, "shift endpoints out of range");
  if (spec.source == spec.range)
    raise(Errc::LoopShiftUnsupported, "shifting along a loop is not supported");
  if (g.adjacency(spec.source, spec.range) < 1) raise(Errc::NoSuchEdge, "no edge to shift");
  if (g.is_sink(spec.range)) raise(Errc::RangeIsSink, "shift range must not be a sink");

  auto rows = g.adjacency_rows();
  rows[spec.source][spec.range] -= 1;
  for (int j = 0; j < n; ++j)
    rows[spec.source][j] = checked_add(rows[spec.source][j], rows[spec.range][j]);
  return MultiGraph(std::move(rows));
}

namespace {

using Key = std::vector<int64_t>;

Key key_of(const MultiGraph& g) {
  Key k;
  k.reserve(1 + static_cast<std::size_t>(g.vertex_count()) * g.vertex_count());
  k.push_back(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < g.vertex_count(); ++j) k.push_back(g.adjacency(i, j));
  return k;
}

MultiGraph graph_of(const Key& k) {
  int n = static_cast<int>(k[0]);
  std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = k[1 + static_cast<std::size_t>(i) * n + j];
  return MultiGraph(std::move(rows));
}

struct NodeInfo {
  int depth = 0;
  Key parent;      // empty for roots
  ShiftSpec move;  // move applied to parent's canonical form
};

using Layered = std::map<Key, NodeInfo>;

std::vector<ShiftSpec> valid_moves(const MultiGraph& g) {
  std::vector<ShiftSpec> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (u == v || g.adjacency(u, v) < 1 || g.is_sink(v)) continue;
      out.push_back(ShiftSpec{u, v});
    }
  return out;
}

// Expands every node at `depth` once; children exceeding the bounds are dropped.
void expand_layer(Layered& side, int depth, const OrbitConfig& cfg) {
  std::vector<std::pair<Key, NodeInfo>> fresh;
  for (const auto& [key, info] : side) {
    if (info.depth != depth) continue;
    MultiGraph g = graph_of(key);
    for (ShiftSpec mv : valid_moves(g)) {
      MultiGraph child = shift(g, mv);
      if (child.total_multiplicity() > cfg.max_total_multiplicity) continue;
      Key ck = key_of(canonical_form(child));
      if (side.count(ck)) continue;
      fresh.emplace_back(std::move(ck), NodeInfo{depth + 1, key, mv});
    }
  }
  for (auto& [k, info] : fresh) {
    if (static_cast<int>(side.size()) >= cfg.max_states) break;
    side.emplace(std::move(k), std::move(info));
  }
}

std::vector<WitnessStep> unwind(const Layered& side, Key at, bool from_left) {
  std::vector<WitnessStep> steps;
  for (;;) {
    const NodeInfo& info = side.at(at);
    if (info.parent.empty()) break;
    steps.push_back(WitnessStep{from_left, info.move});
    at = info.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::optional<Key> first_intersection(const Layered& a, const Layered& b) {
  // Both maps are ordered; the smallest common key is deterministic and
  // independent of which side is expanded first.
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first == ib->first) return ia->first;
    if (ia->first < ib->first)
      ++ia;
    else
      ++ib;
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessPath> orbit_search(const MultiGraph& e, const MultiGraph& f, const OrbitConfig& cfg) {
  if (e.vertex_count() > 8 || f.vertex_count() > 8)
    raise(Errc::TooLarge, "orbit search uses canonical forms, limited to 8 vertices");

  Layered left, right;
  left.emplace(key_of(canonical_form(e)), NodeInfo{});
  right.emplace(key_of(canonical_form(f)), NodeInfo{});

  for (int depth = 0;; ++depth) {
    if (auto meet = first_intersection(left, right)) {
      WitnessPath w{e, f, graph_of(*meet), {}};
      auto ls = unwind(left, *meet, true);
      auto rs = unwind(right, *meet, false);
      w.steps = std::move(ls);
      w.steps.insert(w.steps.end(), rs.begin(), rs.end());
      return w;
    }
    if (depth >= cfg.max_depth) return std::nullopt;
    std::size_t before = left.size() + right.size();
    expand_layer(left, depth, cfg);
    expand_layer(right, depth, cfg);
    if (left.size() + right.size() == before) return std::nullopt;  // both frontiers dead
  }
}

bool replay_witness(const WitnessPath& w) {
  MultiGraph l = canonical_form(w.start);
  MultiGraph r = canonical_form(w.end);
  for (const auto& step : w.steps) {
    MultiGraph& g = step.from_left ? l : r;
    g = canonical_form(shift(g, step.spec));
  }
  return l == r && l == w.meet;
}

}  // namespace lpa
