#include "quintic/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "quintic/error.hpp"

namespace quintic {

std::string format_label(const Label &label) {
  std::string out = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(label[i]);
  }
  return out + ")";
}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges,
                        std::vector<Label> labels) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::InvalidInput, "label count does not match vertices");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (u == v)
      throw Error(ErrorKind::InvalidInput,
                  "self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto &nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto &nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<int> Graph::regular_degree() const {
  if (adjacency_.empty()) return 0;
  const int k = degree(0);
  for (int v = 1; v < vertex_count(); ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Label Graph::label(int v) const {
  if (labels_.empty()) return Label{v};
  return labels_[v];
}

std::optional<int> Graph::find_label(const Label &label) const {
  if (labels_.empty()) {
    if (label.size() == 1 && label[0] >= 0 && label[0] < vertex_count())
      return static_cast<int>(label[0]);
    return std::nullopt;
  }
  // Labels are produced in lexicographic order by every constructor here,
  // but user-built graphs need not be, so search linearly as a fallback.
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it != labels_.end() && *it == label)
    return static_cast<int>(it - labels_.begin());
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

Graph cayley(const GroupSpec &g, std::span<const Element> s) {
  const auto report = validate_connection_set(g, s);
  if (!report.inverse_closed || !report.excludes_identity ||
      report.distinct_count != static_cast<int>(s.size()))
    throw Error(ErrorKind::InvalidConnectionSet,
                "connection set must be inverse-closed, identity-free and "
                "duplicate-free");
  const auto n = static_cast<int>(g.order());
  std::vector<std::pair<int, int>> edges;
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto x = g.element_at(static_cast<std::size_t>(i));
    for (const auto &t : s) {
      const int j = static_cast<int>(g.index_of(add(g, x, t)));
      if (i < j) edges.emplace_back(i, j);
    }
    labels.push_back(x.residues);
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph cartesian_k2(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(2 * u, 2 * v);
    edges.emplace_back(2 * u + 1, 2 * v + 1);
  }
  for (int v = 0; v < n; ++v) edges.emplace_back(2 * v, 2 * v + 1);
  std::vector<Label> labels;
  labels.reserve(2 * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (std::int64_t k = 0; k < 2; ++k) {
      auto l = g.label(v);
      l.push_back(k);
      labels.push_back(std::move(l));
    }
  }
  return Graph::from_edges(2 * n, edges, std::move(labels));
}

bool is_connected(const Graph &g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

namespace {

void check_members(const Graph &g, const VertexSet &c) {
  for (int v : c)
    if (v < 0 || v >= g.vertex_count())
      throw Error(ErrorKind::InvalidInput,
                  "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

bool is_independent(const Graph &g, const VertexSet &c) {
  check_members(g, c);
  for (int u : c)
    for (int v : g.neighbors(u))
      if (c.contains(v)) return false;
  return true;
}

bool is_perfect_code(const Graph &g, const VertexSet &c) {
  check_members(g, c);
  std::vector<int> hits(g.vertex_count(), 0);
  for (int u : c) {
    ++hits[u];
    for (int v : g.neighbors(u)) ++hits[v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::string export_graph(const Graph &g, ExportFormat format) {
  std::ostringstream os;
  if (format == ExportFormat::EdgeList) {
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
  }
  os << "graph G {\n";
  if (g.has_labels()) {
    for (int v = 0; v < g.vertex_count(); ++v)
      os << "  " << v << " [label=\"" << format_label(g.label(v)) << "\"];\n";
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

bool is_isomorphism(const Graph &a, const Graph &b, std::span<const int> map) {
  const int n = a.vertex_count();
  if (b.vertex_count() != n || static_cast<int>(map.size()) != n ||
      a.edge_count() != b.edge_count())
    return false;
  std::vector<char> hit(n, 0);
  for (int v : map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  // Equal edge counts plus edge preservation under a bijection gives
  // non-edge preservation as well.
  for (auto [u, v] : a.edges())
    if (!b.adjacent(map[u], map[v])) return false;
  return true;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph &a, const Graph &b) : a_(a), b_(b) {
    const int n = a.vertex_count();
    forward_.assign(n, -1);
    backward_.assign(n, -1);
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      seen[start] = 1;
      order_.push_back(start);
      parent_.push_back(-1);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        for (int w : a.neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
            parent_.push_back(order_[head]);
          }
        }
      }
    }
  }

  std::optional<std::vector<int>> run(std::optional<int> first_image) {
    if (order_.empty()) return std::vector<int>{};
    if (first_image) {
      if (try_assign(0, *first_image)) return forward_;
      return std::nullopt;
    }
    for (int t = 0; t < b_.vertex_count(); ++t)
      if (try_assign(0, t)) return forward_;
    return std::nullopt;
  }

 private:
  bool consistent(int v, int t) const {
    if (backward_[t] != -1 || a_.degree(v) != b_.degree(t)) return false;
    int mapped_a = 0;
    for (int w : a_.neighbors(v)) {
      if (forward_[w] == -1) continue;
      ++mapped_a;
      if (!b_.adjacent(t, forward_[w])) return false;
    }
    int mapped_b = 0;
    for (int w : b_.neighbors(t))
      if (backward_[w] != -1) ++mapped_b;
    return mapped_a == mapped_b;
  }

  bool try_assign(std::size_t pos, int t) {
    const int v = order_[pos];
    if (!consistent(v, t)) return false;
    forward_[v] = t;
    backward_[t] = v;
    if (extend(pos + 1)) return true;
    forward_[v] = -1;
    backward_[t] = -1;
    return false;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int p = parent_[pos];
    if (p == -1) {
      for (int t = 0; t < b_.vertex_count(); ++t)
        if (try_assign(pos, t)) return true;
      return false;
    }
    for (int t : b_.neighbors(forward_[p]))
      if (try_assign(pos, t)) return true;
    return false;
  }

  const Graph &a_;
  const Graph &b_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> forward_;
  std::vector<int> backward_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(
    const Graph &a, const Graph &b, std::optional<std::pair<int, int>> root) {
  const int n = a.vertex_count();
  if (b.vertex_count() != n || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  if (!root) return IsoSearch(a, b).run(std::nullopt);

  // Relabel a so the pinned vertex comes first in the search order.
  const auto [ra, rb] = *root;
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::swap(perm[0], perm[ra]);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : a.edges()) edges.emplace_back(perm[u], perm[v]);
  const auto relabelled = Graph::from_edges(n, edges);
  auto found = IsoSearch(relabelled, b).run(rb);
  if (!found) return std::nullopt;
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = (*found)[perm[v]];
  return out;
}

}  // namespace quintic
