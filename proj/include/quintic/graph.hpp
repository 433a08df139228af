#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quintic/abelian.hpp"

namespace quintic {

/// Printable vertex label: group residues or grid coordinates.
using Label = std::vector<std::int64_t>;

std::string format_label(const Label &label);

/// Strictly increasing list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and removes duplicates.
  explicit VertexSet(std::vector<int> members);

  const std::vector<int> &members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  auto operator<=>(const VertexSet &) const = default;
  bool operator==(const VertexSet &) const = default;

 private:
  std::vector<int> members_;
};

/// Finite simple undirected graph with sorted neighbour lists. Immutable
/// once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints are rejected. Labels are optional; when given
  /// there must be one per vertex.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
                          std::vector<Label> labels = {});

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;
  /// Common degree if every vertex has the same degree.
  std::optional<int> regular_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Label> &labels() const { return labels_; }
  /// Label of v, or {v} when the graph is unlabelled.
  Label label(int v) const;
  std::optional<int> find_label(const Label &label) const;

  bool operator==(const Graph &) const = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Label> labels_;
  std::size_t edge_count_ = 0;
};

/// Cay(G, S): vertex i is the i-th element of G in lexicographic order and
/// x ~ y iff y - x is in S. S must be inverse-closed, identity-free and
/// duplicate-free (InvalidConnectionSet otherwise). Connectivity is not
/// required.
Graph cayley(const GroupSpec &g, std::span<const Element> s);

/// g x K2: vertex (v, k) gets index 2v + k and label label(v) + {k}.
Graph cartesian_k2(const Graph &g);

bool is_connected(const Graph &g);
bool is_independent(const Graph &g, const VertexSet &c);
/// Every closed neighbourhood meets c exactly once.
bool is_perfect_code(const Graph &g, const VertexSet &c);

enum class ExportFormat { Dot, EdgeList };

std::string export_graph(const Graph &g, ExportFormat format);

/// True iff map is a bijection from a's vertices onto b's that preserves
/// adjacency and non-adjacency.
bool is_isomorphism(const Graph &a, const Graph &b, std::span<const int> map);

/// Backtracking isomorphism search that extends a map along a BFS order of
/// a. When root is given, vertex root.first of a is pinned to root.second of
/// b (enough for vertex-transitive targets); otherwise every image of the
/// first vertex is tried.
std::optional<std::vector<int>> find_isomorphism(
    const Graph &a, const Graph &b,
    std::optional<std::pair<int, int>> root = std::nullopt);

}  // namespace quintic
